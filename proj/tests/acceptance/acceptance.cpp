#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "support/generators.hpp"
#include "ter/branch_ops.hpp"
#include "ter/chart.hpp"
#include "ter/cli.hpp"
#include "ter/groebner.hpp"
#include "ter/json_io.hpp"
#include "ter/limits.hpp"
#include "ter/monoid.hpp"
#include "ter/smoothability.hpp"

using namespace ter;
using testsupport::random_point;

namespace {

// Collects the first failure so a criterion can report why it failed.
struct Check {
  std::string failure;
  void operator()(bool ok, const std::string& what) {
    if (!ok && failure.empty()) failure = what;
  }
  bool ok() const { return failure.empty(); }
};

struct CliResult {
  int code;
  std::string out;
};

CliResult cli_call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str()};
}

AlgebraElement el(const ConductanceVector& c, std::vector<std::pair<std::string, Rational>> terms) {
  AlgebraElement x(c);
  for (auto& [name, v] : terms) x.at(parse_monomial(name)) += v;
  return x;
}

std::vector<Monomial> monos(std::initializer_list<const char*> names) {
  std::vector<Monomial> out;
  for (auto n : names) out.push_back(parse_monomial(n));
  return out;
}

MultiPoly translate(const MultiPoly& p, const std::map<std::string, std::string>& dict, const VarContext& target) {
  std::vector<MultiPoly> images;
  for (const auto& name : *p.context()) images.push_back(MultiPoly::variable(target, dict.at(name)));
  return p.substitute(images, target);
}

std::vector<BranchSplit> all_splits(const ConductanceVector& c) {
  std::vector<BranchSplit> out;
  const unsigned m = static_cast<unsigned>(c.branches());
  for (unsigned mask = 1; mask + 1 < (1u << m); ++mask) {
    std::vector<int> I;
    for (unsigned i = 0; i < m; ++i)
      if ((mask >> i) & 1u) I.push_back(static_cast<int>(i + 1));
    out.push_back(make_split(c, I));
  }
  return out;
}

// Conductance vectors with all c_i >= 2, nonincreasing, and sum(c_i - 1) <= n.
std::vector<ConductanceVector> ambients_up_to(int n) {
  std::vector<ConductanceVector> out;
  std::function<void(std::vector<int>&, int, int)> rec = [&](std::vector<int>& cur, int left, int cap) {
    if (!cur.empty()) out.emplace_back(cur);
    for (int part = std::min(left, cap); part >= 1; --part) {
      cur.push_back(part + 1);
      rec(cur, left - part, part);
      cur.pop_back();
    }
  };
  std::vector<int> cur;
  rec(cur, n, n);
  return out;
}

// 1. Worked ideal of the based territory (4), g = 2.
bool worked_ideal(Check& check) {
  auto r = cli_call({"territory", "based", "--c", "4", "--g", "2"});
  check(r.code == 0, "territory based exited nonzero");
  if (!check.ok()) return false;
  VarContext ctx = make_context({"a1", "a2", "a3"});
  std::vector<MultiPoly> expected{parse_poly("a1^3", ctx), parse_poly("2*a1^2*a2", ctx), parse_poly("a1^2*a3 - 2*a1*a2^2", ctx)};
  std::vector<MultiPoly> got;
  Json j = Json::parse(r.out);
  for (const auto& text : j["generators"]) got.push_back(parse_poly(text.get<std::string>(), ctx));
  check(got.size() == expected.size(), "expected exactly three generators");
  for (const auto& e : expected) {
    bool found = false;
    for (const auto& g : got) found = found || g == e || g == -e;
    check(found, "missing " + e.to_string());
  }
  return check.ok();
}

// 2. Radical equivalence of the (2,3,3) chart with the six quadrics.
bool radical_equivalence(Check& check) {
  ConductanceVector c({2, 3, 3});
  auto ideal = chart_equations(c, 2, make_chart_index(c, 2, monos({"t1", "t2^2", "t3^2"})));
  VarContext ctx = make_context({"a2", "a3", "b2", "b3", "c2", "c3"});
  std::map<std::string, std::string> dict{{"x_t1_1_t2_1", "a2"}, {"x_t1_1_t3_1", "a3"}, {"x_t2_2_t2_1", "b2"},
                                          {"x_t2_2_t3_1", "b3"}, {"x_t3_2_t2_1", "c2"}, {"x_t3_2_t3_1", "c3"}};
  std::vector<MultiPoly> gens;
  for (const auto& g : ideal.generators) gens.push_back(translate(g, dict, ctx));
  std::vector<MultiPoly> quadrics;
  for (auto text : {"b3*c2 - b2*c3", "b2*c2 + c3^2", "a3*c2 - a2*c3", "b2^2 + b3*c3", "a3*b2 - a2*b3", "a2*b2 + a3*c3"})
    quadrics.push_back(parse_poly(text, ctx));
  GroebnerLimits caps;
  caps.max_input_degree = 8;
  for (const auto& q : quadrics) check(radical_membership(q, gens, caps), q.to_string() + " not in the radical of the chart ideal");
  for (const auto& g : gens) check(radical_membership(g, quadrics, caps), g.to_string() + " not in the radical of the quadrics");
  return check.ok();
}

// 3. Sampled points of both components of Ter^3 (6) satisfy the chart equations.
bool component_membership(Check& check) {
  ConductanceVector c({6});
  auto ideal = chart_equations(c, 3, make_chart_index(c, 3, monos({"t1^3", "t1^4"})));
  std::map<std::string, std::string> name{{"a1", "x_t1_3_t1_1"}, {"a2", "x_t1_3_t1_2"}, {"a5", "x_t1_3_t1_5"},
                                          {"b1", "x_t1_4_t1_1"}, {"b2", "x_t1_4_t1_2"}, {"b5", "x_t1_4_t1_5"}};
  std::mt19937_64 rng(3);
  auto evaluate_all = [&](const std::map<std::string, Rational>& assignment, const std::string& label) {
    std::map<std::string, Rational> ours;
    for (auto& [k, v] : assignment) ours[name.at(k)] = v;
    std::vector<Rational> point;
    for (const auto& var : *ideal.variables) point.push_back(ours.at(var));
    for (const auto& g : ideal.generators) check(is_zero(g.evaluate(point)), label + " violates " + g.to_string());
  };
  for (int trial = 0; trial < 20; ++trial) {
    Rational a5 = testsupport::random_rational(rng, 9, 5), b5 = testsupport::random_rational(rng, 9, 5);
    evaluate_all({{"a1", 0}, {"a2", 0}, {"b1", 0}, {"b2", 0}, {"a5", a5}, {"b5", b5}}, "Z1 sample");
    Rational a2 = testsupport::random_nonzero(rng, 9, 5);
    Rational a5b = testsupport::random_rational(rng, 9, 5);
    evaluate_all({{"a1", 0}, {"b1", 0}, {"b2", 0}, {"a2", a2}, {"a5", a5b}, {"b5", Rational(2) / a2}}, "Z2 sample");
  }
  return check.ok();
}

// 4. Ter^1 (2,2) is a projective line.
bool projective_line(Check& check) {
  ConductanceVector c({2, 2});
  for (auto piv : {"t1", "t2"})
    check(chart_equations(c, 1, make_chart_index(c, 1, monos({piv}))).generators.empty(), "nonempty chart equations");
  check(based_equations(c, 1).generators.empty(), "nonempty based equations");
  auto split = make_split(c, {1});
  std::mt19937_64 rng(4);
  int samples = 0, g10 = 0, g01 = 0;
  while (samples < 50) {
    Rational a = testsupport::random_rational(rng, 9, 4), b = testsupport::random_rational(rng, 9, 4);
    if (is_zero(a) && is_zero(b)) continue;
    ++samples;
    SubalgebraPoint p = make_point(c, {el(c, {{"t1", a}, {"t2", b}})});
    check(p.genus() == 1, "sample of the wrong genus");
    StratumLabel label = stratum_label(p, split);
    if (label == StratumLabel{1, 0}) {
      ++g10;
      check(!is_zero(b), "Gamma^{1,0} label on the pole <t1>");
    } else if (label == StratumLabel{0, 1}) {
      ++g01;
      check(is_zero(b), "Gamma^{0,1} label away from <t1>");
    } else {
      check(false, "label outside Gamma^{1,0} and Gamma^{0,1}");
    }
  }
  check(g10 + g01 == 50, "labels do not partition the samples");
  auto fp = fixed_points(c, 1);
  std::set<std::string> poles;
  for (const auto& t : fp) poles.insert(to_json(t.point).dump());
  std::set<std::string> expected{to_json(make_point(c, {el(c, {{"t1", 1}})})).dump(),
                                 to_json(make_point(c, {el(c, {{"t2", 1}})})).dump()};
  check(fp.size() == 2 && poles == expected, "fixed points are not the two poles");
  return check.ok();
}

// 5. Spine dimensions of the Ter^6 tower and its intersection.
bool spine_arithmetic(Check& check) {
  struct Row { int c, k, n; };
  for (auto row : std::vector<Row>{{12, 5, 6}, {11, 4, 5}, {10, 3, 5}, {9, 2, 4}, {8, 1, 4}, {7, 0, 3}}) {
    auto s = spine(ConductanceVector({row.c}), 6).grassmannian;
    check(!s.empty && s.k == row.k && s.n == row.n && s.dimension == row.k * (row.n - row.k),
          "Spine(6," + std::to_string(row.c) + ") is not Gr(" + std::to_string(row.k) + "," + std::to_string(row.n) + ")");
  }
  auto meet = spine_intersection({ConductanceVector({11}), ConductanceVector({10})}, ConductanceVector({12}), 6);
  check(meet.k == 3 && meet.n == 4 && meet.dimension == 3, "intersection is not Gr(3,4)");
  check(spine(ConductanceVector({3, 3, 3, 3}), 3).grassmannian.empty, "Spine(3,(3,3,3,3)) is not empty");
  return check.ok();
}

// 6. Closed-form maximum against brute force, and spot verdicts.
bool smoothability_formulas(Check& check) {
  for (int g = 0; g <= 60; ++g)
    for (int m = 1; m <= 60; ++m) {
      const long long s = g + m;
      long long brute = 0;
      for (long long k = m; k <= s; ++k) brute = std::max(brute, (2 * k - s) * (s - k));
      Rational closed;
      if (3 * g > m) {
        static const Rational alpha[4] = {make_rational(0), make_rational(1, 8), make_rational(1, 2), make_rational(1, 8)};
        closed = make_rational(static_cast<long>(s * s), 8) - alpha[s % 4];
      } else {
        closed = make_rational(static_cast<long>((m - g) * g));
      }
      check(closed == make_rational(static_cast<long>(brute)),
            "closed form differs from brute force at g=" + std::to_string(g) + ", m=" + std::to_string(m));
      check(best_conductances(g, m).spine_dim == brute, "best_conductances differs from brute force");
    }
  check(nonsmoothable_exists(22, 1).verdict == Verdict::NonsmoothableExists, "(22,1) not exists");
  check(nonsmoothable_exists(5, 15).verdict == Verdict::NonsmoothableExists, "(5,15) not exists");
  check(nonsmoothable_exists(1, 1).verdict == Verdict::Unknown, "(1,1) not unknown");
  return check.ok();
}

// 7. gamma_limit against the explicit torus family.
bool limit_oracle(Check& check) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> weight(-2, 3);
  const std::vector<std::vector<int>> ambients{{4}, {6}, {2, 2}, {4, 2}, {3, 3}};
  for (int trial = 0; trial < 200; ++trial) {
    ConductanceVector c(ambients[static_cast<std::size_t>(trial) % ambients.size()]);
    SubalgebraPoint b = random_point(c, rng);
    Grading gamma;
    for (std::size_t i = 0; i < c.branches(); ++i) gamma.weights.push_back(weight(rng));
    SubalgebraPoint lim = gamma_limit(b, gamma);
    check(limit_at_zero(torus_family(b, gamma)) == lim, "normal-basis limit differs from the family limit");
    check(vanishing_data(lim, gamma) == vanishing_data(b, gamma), "vanishing sequence changed");
    check(gamma_limit(lim, gamma) == lim, "limit is not idempotent");
    check(lim.genus() == b.genus(), "genus changed");
  }
  return check.ok();
}

void check_chain(Check& check, const SubalgebraPoint& b) {
  auto chain = degenerate_to_partition(b);
  for (const auto& s : chain) check(s.point.genus() == b.genus(), "genus changed along a chain");
  check(is_partition(chain.back().point).has_value(), "chain does not end at a partition point");
}

// 8. Degeneration chains, exhaustively on monomial points and on random points.
bool degeneration_chains(Check& check) {
  int monomial_inputs = 0;
  for (const auto& c : ambients_up_to(8))
    for (const auto& sets : testsupport::all_monomial_closed_sets(c)) {
      SubalgebraPoint b = monomial_point(c, sets);
      ++monomial_inputs;
      check_chain(check, b);
      check((phi_a_limit(b) == b) == is_partition(b).has_value(), "phi_a fixes a non-partition point or moves a partition point");
    }
  check(monomial_inputs > 0, "no monomial inputs");
  std::mt19937_64 rng(8);
  const std::vector<std::vector<int>> ambients{{6}, {7}, {4, 3}, {3, 3, 2}, {5, 4}};
  int done = 0;
  for (int trial = 0; done < 100 && trial < 10000; ++trial) {
    SubalgebraPoint b = random_point(ConductanceVector(ambients[static_cast<std::size_t>(trial) % ambients.size()]), rng);
    if (is_monomial(b)) continue;
    check_chain(check, b);
    ++done;
  }
  check(done == 100, "could not draw 100 non-monomial points");
  return check.ok();
}

// 9. Join, restriction, contraction, gluing and Isom-Hilb identities.
bool branch_algebra(Check& check) {
  std::mt19937_64 rng(9);
  const std::vector<std::vector<int>> ambients{{2, 2}, {4, 2}, {3, 3}, {3, 2, 2}, {4, 3, 2}};
  int instances = 0;
  for (int round = 0; instances < 150; ++round) {
    ConductanceVector c(ambients[static_cast<std::size_t>(round) % ambients.size()]);
    for (const auto& split : all_splits(c)) {
      ++instances;
      ConductanceVector cI = c.restrict_to(split.I), cIp = c.restrict_to(split.Iprime);
      SubalgebraPoint bI = random_point(cI, rng), bIp = random_point(cIp, rng);
      SubalgebraPoint j = join(bI, bIp, split);
      check(contract(j, split.I) == bI && restrict(j, split.Iprime) == bIp, "section identity fails");

      SubalgebraPoint b = random_point(c, rng);
      StratumLabel label = stratum_label(b, split);
      check(label.g_I + label.g_Iprime == b.genus(), "genus is not additive");

      GluingData gd = extract_gluing(b, split);
      check(assemble_from_gluing(gd.contracted, gd.restricted, gd.phi) == b, "gluing round trip fails");

      IsomHilbData ih = isom_hilb_data(b, split);
      SubalgebraPoint z1 = contract(b, split.I), z2 = contract(b, split.Iprime);
      const std::size_t quotient_rank = 1 + b.dimension() - z1.dimension() - z2.dimension();
      check(quotient_rank == static_cast<std::size_t>(ih.gamma) + 1, "rank(B/(I1+I2)) is not gamma + 1");
      check(ih.q1.rank() == quotient_rank && ih.q2.rank() == quotient_rank, "quotient ranks disagree");
      check(b.genus() == ih.g1 + ih.g2 + ih.gamma, "genus is not g1 + g2 + gamma");
      check(isom_hilb_assemble(split, ih.q1, ih.q2, ih.phi) == b, "Isom-Hilb round trip fails");

      auto lambda = testsupport::random_torus(c.branches(), rng);
      std::vector<Rational> lI, lIp;
      for (auto i : split.I) lI.push_back(lambda[i]);
      for (auto i : split.Iprime) lIp.push_back(lambda[i]);
      check(join(apply_torus(lI, bI), apply_torus(lIp, bIp), split) == apply_torus(lambda, j), "join is not equivariant");
      check(contract(apply_torus(lambda, b), split.I) == apply_torus(lI, z1), "contraction is not equivariant");
      check(restrict(apply_torus(lambda, b), split.Iprime) == apply_torus(lIp, restrict(b, split.Iprime)),
            "restriction is not equivariant");
    }
  }
  return check.ok();
}

// Gap sets in [1, c - 1] whose complement is closed under addition.
std::size_t brute_force_monoids(int genus, int conductor_max) {
  std::size_t count = 0;
  const int n = std::max(conductor_max - 1, 0);
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != genus) continue;
    auto in = [&](int d) { return !(mask & (1u << (d - 1))); };
    bool closed = true;
    for (int x = 1; x <= n && closed; ++x)
      for (int y = x; x + y <= n; ++y)
        if (in(x) && in(y) && !in(x + y)) closed = false;
    if (closed) ++count;
  }
  return count;
}

// 10. Monoid enumeration and fixed points.
bool monoid_layer(Check& check) {
  const std::vector<std::size_t> counts{1, 1, 2, 4, 7, 12, 23};
  for (int g = 0; g <= 6; ++g) {
    std::size_t tree = enumerate_monoids(g, 2 * g).size();
    check(tree == counts[static_cast<std::size_t>(g)], "genus-tree count wrong at g=" + std::to_string(g));
    check(tree == brute_force_monoids(g, 2 * g), "genus tree differs from brute force at g=" + std::to_string(g));
  }
  for (const auto& c : ambients_up_to(10)) {
    std::map<int, std::set<std::vector<std::vector<int>>>> by_genus;
    for (const auto& sets : testsupport::all_monomial_closed_sets(c)) by_genus[monomial_point(c, sets).genus()].insert(sets);
    for (int g = 0; g <= static_cast<int>(c.ideal_rank()); ++g) {
      std::set<std::vector<std::vector<int>>> got;
      for (const auto& t : fixed_points(c, g)) got.insert(*is_monomial(t.point));
      check(got == by_genus[g], "fixed points differ from monomial enumeration for " + c.to_string());
    }
  }
  return check.ok();
}

// 11. Property form of the classification map.
bool classification_map(Check& check) {
  auto first = cli_call({"smoothability", "map", "--gmax", "60", "--mmax", "40"});
  auto second = cli_call({"smoothability", "map", "--gmax", "60", "--mmax", "40"});
  check(first.code == 0 && first.out == second.out, "map output is not deterministic");
  std::istringstream in(first.out);
  std::string line;
  std::getline(in, line);
  check(line == "g,m,verdict,c_star,spine_dim,threshold,case,beta", "wrong CSV header");
  std::map<std::pair<int, int>, bool> exists;
  while (std::getline(in, line)) {
    std::istringstream row(line);
    std::string g, m, verdict;
    std::getline(row, g, ',');
    std::getline(row, m, ',');
    std::getline(row, verdict, ',');
    exists[{std::stoi(g), std::stoi(m)}] = verdict == "nonsmoothable-exists";
  }
  check(exists.size() == 61u * 40u, "wrong number of cells");
  for (int m = 1; m <= 40; ++m) {
    bool seen = false;
    for (int g = 0; g <= 60; ++g) {
      if (3 * g <= m) continue;
      if (seen) check(exists[{g, m}], "exists region not upward closed in column m=" + std::to_string(m));
      seen = seen || exists[{g, m}];
    }
    check(!exists[{0, m}], "genus-0 cell reported exists");
  }
  check(exists[{22, 1}] && exists[{5, 15}] && !exists[{1, 1}] && !exists[{21, 1}], "spot-checked cells wrong");
  return check.ok();
}

}  // namespace

int main() {
  struct Criterion {
    std::string name;
    double limit_seconds;
    std::function<bool(Check&)> run;
  };
  const std::vector<Criterion> criteria{
      {"worked ideal of the based territory (4), g=2", 1, worked_ideal},
      {"radical equivalence of the (2,3,3) chart", 60, radical_equivalence},
      {"component membership for Ter^3 (6)", 5, component_membership},
      {"projective line structure of Ter^1 (2,2)", 5, projective_line},
      {"spine arithmetic", 1, spine_arithmetic},
      {"smoothability formulas", 10, smoothability_formulas},
      {"limit engine oracle equivalence", 60, limit_oracle},
      {"degeneration chains", 60, degeneration_chains},
      {"branch-operation algebra", 30, branch_algebra},
      {"monoid layer", 30, monoid_layer},
      {"classification map regeneration", 10, classification_map},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check check;
    bool ok = false;
    auto start = std::chrono::steady_clock::now();
    try {
      ok = criteria[i].run(check);
    } catch (const std::exception& e) {
      check(false, std::string("exception: ") + e.what());
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && seconds > criteria[i].limit_seconds) check(false, "time limit exceeded");
    ok = ok && check.ok();
    if (!ok) ++failures;
    std::cout << (ok ? "PASS" : "FAIL") << " " << std::setw(2) << (i + 1) << " " << criteria[i].name << " ("
              << std::fixed << std::setprecision(2) << seconds << "s, limit " << criteria[i].limit_seconds << "s)";
    if (!ok) std::cout << ": " << check.failure;
    std::cout << "\n";
  }
  return failures == 0 ? 0 : 1;
}
