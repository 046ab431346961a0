#include "ter/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

#include "ter/branch_ops.hpp"
#include "ter/chart.hpp"
#include "ter/json_io.hpp"
#include "ter/limits.hpp"
#include "ter/monoid.hpp"
#include "ter/smoothability.hpp"

namespace ter::cli {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream is(text);
  while (std::getline(is, item, sep)) out.push_back(item);
  return out;
}

std::vector<int> parse_ints(const std::string& text, const std::string& what) {
  std::vector<int> out;
  for (const auto& item : split(text, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::logic_error&) {
      throw ParseError("malformed " + what + " '" + text + "'");
    }
  }
  if (out.empty()) throw ParseError("empty " + what);
  return out;
}

Grading parse_grading(const std::string& text, const ConductanceVector& c) {
  if (text.empty()) return Grading::standard(c.branches());
  Grading gamma{parse_ints(text, "grading")};
  if (gamma.weights.size() != c.branches())
    throw DomainError("ambient-mismatch", "grading has " + std::to_string(gamma.weights.size()) + " weights for " +
                                              std::to_string(c.branches()) + " branches");
  return gamma;
}

std::vector<std::size_t> parse_branches(const std::string& text, const ConductanceVector& c) {
  std::vector<std::size_t> out;
  for (int b : parse_ints(text, "branch list")) {
    if (b < 1 || b > static_cast<int>(c.branches()))
      throw DomainError("invalid-split", "branch " + std::to_string(b) + " out of range");
    out.push_back(static_cast<std::size_t>(b - 1));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

SubalgebraPoint read_point(const std::string& path) {
  try {
    return point_from_json(read_json_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string point_text(const SubalgebraPoint& b) {
  std::ostringstream os;
  os << "c = " << b.ambient().to_string() << ", genus " << b.genus() << "\n";
  auto rows = b.rows();
  if (rows.empty()) os << "  (trivial: k only)\n";
  for (const auto& r : rows) os << "  " << to_string(r) << "\n";
  return os.str();
}

Json polys_to_json(const std::vector<MultiPoly>& ps) {
  Json a = Json::array();
  for (const auto& p : ps) a.push_back(p.to_string());
  return a;
}

Json monoid_json(const NumericalMonoid& m) {
  Json j;
  j["generators"] = m.to_string();
  j["gaps"] = m.gaps();
  j["genus"] = m.genus();
  j["conductor"] = m.conductor();
  return j;
}

Json tuple_json(const MonoidTuple& t) {
  Json j;
  Json ms = Json::array();
  for (const auto& m : t.monoids) ms.push_back(monoid_json(m));
  j["monoids"] = ms;
  j["point"] = to_json(t.point);
  return j;
}

Json matrix_json(const RationalMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

Json grassmannian_json(const GrassmannianParams& p) {
  Json j;
  j["k"] = p.k;
  j["n"] = p.n;
  j["dimension"] = p.dimension;
  j["empty"] = p.empty;
  return j;
}

Json verdict_json(const SmoothabilityVerdict& v) {
  Json j;
  j["g"] = v.g;
  j["m"] = v.m;
  j["verdict"] = to_string(v.verdict);
  j["c_star"] = v.c_star;
  j["spine_dim"] = v.spine_dim;
  j["threshold"] = v.threshold;
  j["case"] = v.regime;
  j["beta"] = v.beta ? Json(*v.beta) : Json(nullptr);
  return j;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw ParseError("cannot write " + path);
  f << text;
}

struct Options {
  std::string format;  // empty: the command default
  std::uint64_t seed = 1;
  std::string out_path;
  std::string c;
  int g = 0;
  std::string chart;
  std::string file;
  std::vector<std::string> files;
  std::string weights;
  std::string branches;
  std::string split;
  std::string parts;
  std::string target_c;
  int genus = 0;
  int conductor_max = 0;
  std::string ks;
  bool inclusive = false;
  std::string members;
  int m = 1;
  int g_max = 0;
  int m_max = 1;
  std::string csv_path;
  std::string svg_path;
};

// Renders a JSON result unless the text form was requested and supplied.
std::string render(const Options& o, const Json& j, const std::string& text = {}) {
  if (o.format == "text" && !text.empty()) return text;
  return j.dump(2) + "\n";
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Territories of subalgebras of truncated algebras", "ter"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "json, text, csv, svg or dot")
      ->check(CLI::IsMember({"json", "text", "csv", "svg", "dot"}));
  app.add_option("--seed", o.seed, "Seed for sampling");
  app.add_option("--out", o.out_path, "Write the result to a file");

  auto* territory = app.add_subcommand("territory", "Defining equations");
  territory->require_subcommand(1);
  auto* t_eq = territory->add_subcommand("equations", "Chart equations");
  t_eq->add_option("--c", o.c)->required();
  t_eq->add_option("--g", o.g)->required();
  t_eq->add_option("--chart", o.chart, "Pivot monomials, e.g. t1,t2^2")->required();
  auto* t_based = territory->add_subcommand("based", "Based territory minors");
  t_based->add_option("--c", o.c)->required();
  t_based->add_option("--g", o.g)->required();

  auto* point = app.add_subcommand("point", "Operations on a point file");
  point->require_subcommand(1);
  auto file_sub = [&](const std::string& name, const std::string& desc) {
    auto* s = point->add_subcommand(name, desc);
    s->add_option("--file", o.file)->required();
    return s;
  };
  auto* p_check = file_sub("check", "Invariants of a point");
  p_check->add_option("--weights", o.weights);
  auto* p_limit = file_sub("limit", "Torus limit under a grading");
  p_limit->add_option("--weights", o.weights);
  auto* p_tfix = file_sub("tfix", "Iterated torus limit");
  auto* p_phi = file_sub("phi-limit", "Limit under phi_a");
  auto* p_deg = file_sub("degenerate", "Degeneration chain to a partition point");
  auto* p_restrict = file_sub("restrict", "Restriction to branches");
  p_restrict->add_option("--branches", o.branches)->required();
  auto* p_contract = file_sub("contract", "Contraction to branches");
  p_contract->add_option("--branches", o.branches)->required();
  auto* p_join = point->add_subcommand("join", "Join of points");
  p_join->add_option("--files", o.files)->required()->expected(1, -1);
  p_join->add_option("--parts", o.parts, "Target branches per file, e.g. 1,3/2");
  auto* p_gluing = file_sub("gluing", "Gluing data for a split");
  p_gluing->add_option("--split", o.split)->required();
  auto* p_truncate = file_sub("truncate", "Truncate to smaller conductances");
  p_truncate->add_option("--c", o.target_c)->required();
  auto* p_lift = file_sub("lift", "Lift to larger conductances");
  p_lift->add_option("--c", o.target_c)->required();

  auto* monoids = app.add_subcommand("monoids", "Numerical monoids by genus");
  monoids->add_option("--genus", o.genus)->required();
  monoids->add_option("--conductor-max", o.conductor_max)->required();

  auto* fixed = app.add_subcommand("fixed-points", "Torus-fixed points");
  fixed->add_option("--c", o.c)->required();
  fixed->add_option("--g", o.g)->required();

  auto* stratum = app.add_subcommand("stratum", "Vanishing-sequence stratum realizability");
  stratum->add_option("--c", o.c)->required();
  stratum->add_option("--ks", o.ks, "k_1,k_2,...")->required();
  stratum->add_flag("--inclusive", o.inclusive, "Also count d = c_i");

  auto* spine_cmd = app.add_subcommand("spine", "Spine subschemes");
  spine_cmd->require_subcommand(1);
  auto* s_dim = spine_cmd->add_subcommand("dim", "Spine Grassmannian");
  s_dim->add_option("--c", o.c)->required();
  s_dim->add_option("--g", o.g)->required();
  auto* s_int = spine_cmd->add_subcommand("intersect", "Intersection of spines");
  s_int->add_option("--c", o.c)->required();
  s_int->add_option("--g", o.g)->required();
  s_int->add_option("--members", o.members, "Conductance vectors separated by ';'")->required();
  auto* s_sample = spine_cmd->add_subcommand("sample", "Random spine point");
  s_sample->add_option("--c", o.c)->required();
  s_sample->add_option("--g", o.g)->required();

  auto* smooth = app.add_subcommand("smoothability", "Non-smoothability predicates");
  smooth->require_subcommand(1);
  auto* sm_check = smooth->add_subcommand("check", "Verdict for one (g, m)");
  sm_check->add_option("--g", o.g)->required();
  sm_check->add_option("--m", o.m)->required();
  auto* sm_map = smooth->add_subcommand("map", "Verdict grid");
  sm_map->add_option("--gmax", o.g_max)->required();
  sm_map->add_option("--mmax", o.m_max)->required();
  sm_map->add_option("--csv", o.csv_path);
  sm_map->add_option("--svg", o.svg_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream os, es;
    int code = app.exit(e, os, es);
    out << os.str();
    err << es.str();
    return code == 0 ? 0 : 2;
  }

  try {
    std::string result;
    if (t_eq->parsed() || t_based->parsed()) {
      ConductanceVector c = parse_conductances(o.c);
      ChartIdeal ideal = [&] {
        if (t_based->parsed()) return based_equations(c, o.g);
        std::vector<Monomial> pivots;
        for (const auto& item : split(o.chart, ',')) pivots.push_back(parse_monomial(item));
        return chart_equations(c, o.g, make_chart_index(c, o.g, pivots));
      }();
      Json j;
      j["kind"] = ideal.kind == IdealKind::Chart ? "chart" : "based";
      j["c"] = to_json(c);
      j["g"] = o.g;
      j["variables"] = ideal.variables ? Json(*ideal.variables) : Json::array();
      j["generators"] = polys_to_json(ideal.generators);
      if (ideal.kind == IdealKind::Based) {
        j["cover_minors"] = polys_to_json(ideal.cover_minors);
        j["homogeneous_degree"] = ideal.homogeneous_degree;
      }
      std::string text;
      for (const auto& p : ideal.generators) text += p.to_string() + "\n";
      result = render(o, j, text.empty() ? "(no equations)\n" : text);
    } else if (p_check->parsed()) {
      SubalgebraPoint b = read_point(o.file);
      Grading gamma = parse_grading(o.weights, b.ambient());
      Json j;
      j["c"] = to_json(b.ambient());
      j["genus"] = b.genus();
      j["delta"] = delta(b);
      ExactnessReport ex = exact_conductances(b);
      j["exact"] = ex.per_branch;
      if (ex.exact) {
        GorensteinProfile gp = is_gorenstein_profile(b);
        j["gorenstein"] = {{"gorenstein", gp.gorenstein},
                           {"in_window", gp.in_window},
                           {"total", gp.total},
                           {"window", {gp.window_lower, gp.window_upper}}};
      } else {
        j["gorenstein"] = nullptr;
      }
      VanishingData v = vanishing_data(b, gamma);
      Json k = Json::object();
      for (const auto& [d, n] : v.k) k[std::to_string(d)] = n;
      j["vanishing"] = {{"weights", gamma.weights}, {"k", k}, {"degree", v.degree}};
      j["monomial"] = is_monomial(b).has_value();
      j["partition"] = is_partition(b).has_value();
      j["in_spine"] = in_spine(b);
      result = render(o, j);
    } else if (p_limit->parsed()) {
      SubalgebraPoint b = read_point(o.file);
      SubalgebraPoint lim = gamma_limit(b, parse_grading(o.weights, b.ambient()));
      result = render(o, to_json(lim), point_text(lim));
    } else if (p_tfix->parsed()) {
      SubalgebraPoint lim = t_fix(read_point(o.file));
      result = render(o, to_json(lim), point_text(lim));
    } else if (p_phi->parsed()) {
      SubalgebraPoint lim = phi_a_limit(read_point(o.file));
      result = render(o, to_json(lim), point_text(lim));
    } else if (p_deg->parsed()) {
      auto chain = degenerate_to_partition(read_point(o.file));
      if (o.format == "dot") {
        result = chain_to_dot(chain);
      } else {
        Json a = Json::array();
        std::string text;
        for (const auto& s : chain) {
          a.push_back({{"step", s.step}, {"point", to_json(s.point)}});
          text += s.step + ": " + point_text(s.point);
        }
        result = render(o, a, text);
      }
    } else if (p_restrict->parsed() || p_contract->parsed()) {
      SubalgebraPoint b = read_point(o.file);
      auto br = parse_branches(o.branches, b.ambient());
      SubalgebraPoint r = p_restrict->parsed() ? restrict(b, br) : contract(b, br);
      result = render(o, to_json(r), point_text(r));
    } else if (p_join->parsed()) {
      std::vector<SubalgebraPoint> pts;
      for (const auto& f : o.files) pts.push_back(read_point(f));
      std::vector<std::vector<std::size_t>> parts;
      if (o.parts.empty()) {
        std::size_t next = 0;
        for (const auto& p : pts) {
          std::vector<std::size_t> part;
          for (std::size_t i = 0; i < p.ambient().branches(); ++i) part.push_back(next++);
          parts.push_back(part);
        }
      } else {
        for (const auto& side : split(o.parts, '/')) {
          std::vector<std::size_t> part;
          for (int b : parse_ints(side, "branch list")) {
            if (b < 1) throw DomainError("partition-mismatch", "branch numbers are 1-based");
            part.push_back(static_cast<std::size_t>(b - 1));
          }
          parts.push_back(part);
        }
      }
      SubalgebraPoint b = join(pts, parts);
      result = render(o, to_json(b), point_text(b));
    } else if (p_gluing->parsed()) {
      SubalgebraPoint b = read_point(o.file);
      BranchSplit sp = parse_split(b.ambient(), o.split);
      GluingData gd = extract_gluing(b, sp);
      StratumLabel label = stratum_label(b, sp);
      IsomHilbData ih = isom_hilb_data(b, sp);
      Json phi = Json::array();
      for (std::size_t k = 0; k < gd.phi.domain.size(); ++k)
        phi.push_back({{"domain", coeffs_to_json(gd.phi.domain[k])}, {"image", coeffs_to_json(gd.phi.images[k])}});
      Json j;
      j["split"] = o.split;
      j["label"] = {{"g_I", label.g_I}, {"g_Iprime", label.g_Iprime}};
      j["contracted"] = to_json(gd.contracted);
      j["restricted"] = to_json(gd.restricted);
      j["phi"] = phi;
      j["strictly_annihilating"] = gd.strictly_annihilating;
      j["strictly_multiplicative"] = gd.strictly_multiplicative;
      j["isom_hilb"] = {{"g1", ih.g1}, {"g2", ih.g2}, {"gamma", ih.gamma}, {"phi", matrix_json(ih.phi)}};
      result = render(o, j);
    } else if (p_truncate->parsed()) {
      auto t = truncate(read_point(o.file), parse_conductances(o.target_c));
      if (!t) throw DomainError("not-closed", "truncation is not a subalgebra");
      result = render(o, to_json(*t), point_text(*t));
    } else if (p_lift->parsed()) {
      SubalgebraPoint l = lift(read_point(o.file), parse_conductances(o.target_c));
      result = render(o, to_json(l), point_text(l));
    } else if (monoids->parsed()) {
      Json a = Json::array();
      std::string text;
      for (const auto& m : enumerate_monoids(o.genus, o.conductor_max)) {
        a.push_back(monoid_json(m));
        text += m.to_string() + "\n";
      }
      result = render(o, a, text.empty() ? "(none)\n" : text);
    } else if (fixed->parsed()) {
      Json a = Json::array();
      std::string text;
      for (const auto& t : fixed_points(parse_conductances(o.c), o.g)) {
        a.push_back(tuple_json(t));
        text += point_text(t.point);
      }
      result = render(o, a, text.empty() ? "(none)\n" : text);
    } else if (stratum->parsed()) {
      ConductanceVector c = parse_conductances(o.c);
      auto w = stratum_realizable(c, parse_ints(o.ks, "vanishing sequence"), o.inclusive);
      Json j;
      j["realizable"] = w.has_value();
      j["witness"] = w ? tuple_json(*w) : Json(nullptr);
      result = render(o, j, w ? point_text(w->point) : "not realizable\n");
    } else if (s_dim->parsed()) {
      SpineDescriptor sp = spine(parse_conductances(o.c), o.g);
      Json j;
      j["c"] = to_json(sp.c);
      j["g"] = sp.g;
      j["grassmannian"] = grassmannian_json(sp.grassmannian);
      j["odd_count"] = sp.odd_count;
      j["lower_bound"] = spine_lower_bound(sp.c, sp.g);
      result = render(o, j);
    } else if (s_int->parsed()) {
      std::vector<ConductanceVector> members;
      for (const auto& item : split(o.members, ';')) members.push_back(parse_conductances(item));
      if (members.empty()) throw ParseError("no member conductance vectors");
      result = render(o, grassmannian_json(spine_intersection(members, parse_conductances(o.c), o.g)));
    } else if (s_sample->parsed()) {
      SubalgebraPoint b = random_spine_point(parse_conductances(o.c), o.g, o.seed);
      result = render(o, to_json(b), point_text(b));
    } else if (sm_check->parsed()) {
      SmoothabilityVerdict v = nonsmoothable_exists(o.g, o.m);
      result = render(o, verdict_json(v), to_string(v.verdict) + "\n");
    } else if (sm_map->parsed()) {
      auto cells = smoothability_map(o.g_max, o.m_max);
      std::string csv = map_to_csv(cells);
      if (!o.csv_path.empty()) write_file(o.csv_path, csv);
      if (!o.svg_path.empty()) write_file(o.svg_path, map_to_svg(cells));
      if (o.format == "svg") {
        result = map_to_svg(cells);
      } else if (o.format == "json") {
        Json a = Json::array();
        for (const auto& v : cells) a.push_back(verdict_json(v));
        result = a.dump(2) + "\n";
      } else {
        result = csv;
      }
    }
    if (o.out_path.empty()) out << result;
    else write_file(o.out_path, result);
    return 0;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"ter"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace ter::cli
