#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "support/generators.hpp"
#include "ter/monoid.hpp"

using namespace ter;

namespace {

// Gap sets inside [1, c - 1] whose complement in N is closed under addition.
std::set<std::vector<int>> brute_force_gap_sets(int genus, int conductor_max) {
  std::set<std::vector<int>> out;
  const int n = std::max(conductor_max - 1, 0);
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> gaps;
    for (int d = 1; d <= n; ++d)
      if (mask & (1u << (d - 1))) gaps.push_back(d);
    if (static_cast<int>(gaps.size()) != genus) continue;
    auto in = [&](int d) { return std::find(gaps.begin(), gaps.end(), d) == gaps.end(); };
    bool closed = true;
    for (int x = 1; x <= n; ++x)
      for (int y = x; x + y <= n; ++y)
        if (in(x) && in(y) && !in(x + y)) closed = false;
    if (closed) out.insert(gaps);
  }
  return out;
}

SubalgebraPoint mono(const ConductanceVector& c, std::vector<std::vector<int>> e) { return monomial_point(c, e); }

}  // namespace

TEST_CASE("numerical monoids") {
  NumericalMonoid m({1, 3});
  CHECK(m.genus() == 2);
  CHECK(m.conductor() == 4);
  CHECK(m.frobenius() == 3);
  CHECK(m.multiplicity() == 2);
  CHECK(m.minimal_generators() == std::vector<int>{2, 5});
  CHECK(m.to_string() == "<2,5>");
  CHECK(NumericalMonoid().to_string() == "<1>");
  CHECK(NumericalMonoid().conductor() == 0);
  CHECK(NumericalMonoid({1, 2}).minimal_generators() == std::vector<int>{3, 4, 5});
  CHECK_THROWS_AS(NumericalMonoid({1, 3, 4}), DomainError);
  CHECK_THROWS_AS(NumericalMonoid({0}), DomainError);
}

TEST_CASE("monoid enumeration") {
  auto g1 = enumerate_monoids(1, 2);
  REQUIRE(g1.size() == 1);
  CHECK(g1[0].gaps() == std::vector<int>{1});
  auto g2 = enumerate_monoids(2, 4);
  REQUIRE(g2.size() == 2);
  CHECK(g2[0].gaps() == std::vector<int>{1, 2});
  CHECK(g2[1].gaps() == std::vector<int>{1, 3});
  CHECK(enumerate_monoids(3, 8).size() == 4);
  CHECK(enumerate_monoids(4, 8).size() == 7);
  std::vector<std::size_t> counts{1, 1, 2, 4, 7, 12, 23, 39, 67};
  for (int g = 0; g < static_cast<int>(counts.size()); ++g) CHECK(enumerate_monoids(g, 2 * g).size() == counts[static_cast<std::size_t>(g)]);
  for (int g = 0; g <= 6; ++g)
    for (int c = 0; c <= 12; ++c) {
      std::set<std::vector<int>> got;
      for (const auto& m : enumerate_monoids(g, c)) got.insert(m.gaps());
      CHECK(got == brute_force_gap_sets(g, c));
    }
}

TEST_CASE("fixed points") {
  ConductanceVector c22({2, 2});
  auto fp = fixed_points(c22, 1);
  REQUIRE(fp.size() == 2);
  CHECK(((fp[0].point == mono(c22, {{}, {1}}) && fp[1].point == mono(c22, {{1}, {}})) ||
         (fp[0].point == mono(c22, {{1}, {}}) && fp[1].point == mono(c22, {{}, {1}}))));
  ConductanceVector c4({4});
  auto f4 = fixed_points(c4, 2);
  REQUIRE(f4.size() == 2);
  CHECK(f4[0].point == mono(c4, {{3}}));
  CHECK(f4[1].point == mono(c4, {{2}}));
  CHECK(fixed_points(ConductanceVector({2}), 2).empty());

  for (auto cv : std::vector<std::vector<int>>{{6}, {8}, {4, 3}, {3, 3, 2}, {5, 4, 2}, {2, 2, 2, 2}}) {
    ConductanceVector c(cv);
    std::map<int, std::set<std::vector<std::vector<int>>>> by_genus;
    for (const auto& sets : testsupport::all_monomial_closed_sets(c)) by_genus[mono(c, sets).genus()].insert(sets);
    for (int g = 0; g <= static_cast<int>(c.ideal_rank()) + 1; ++g) {
      std::set<std::vector<std::vector<int>>> got;
      for (const auto& t : fixed_points(c, g)) {
        CHECK(t.point.genus() == g);
        int total = 0;
        for (std::size_t i = 0; i < c.branches(); ++i) {
          CHECK(t.monoids[i].conductor() <= c[i]);
          total += t.monoids[i].genus();
        }
        CHECK(total == g);
        got.insert(*is_monomial(t.point));
      }
      CHECK(got == by_genus[g]);
    }
  }
}

TEST_CASE("vanishing strata realizability") {
  ConductanceVector c22({2, 2});
  auto w = stratum_realizable(c22, {2});
  REQUIRE(w.has_value());
  CHECK(w->point == mono(c22, {{1}, {1}}));
  CHECK(w->point.genus() == 0);
  auto w1 = stratum_realizable(c22, {1});
  REQUIRE(w1.has_value());
  CHECK(w1->point.genus() == 1);
  CHECK((w1->point == mono(c22, {{}, {1}}) || w1->point == mono(c22, {{1}, {}})));
  auto w4 = stratum_realizable(ConductanceVector({4}), {0, 1, 0});
  REQUIRE(w4.has_value());
  CHECK(w4->point == mono(ConductanceVector({4}), {{2}}));
  CHECK_FALSE(stratum_realizable(ConductanceVector({4}), {1, 0, 0}).has_value());
  CHECK_FALSE(stratum_realizable(c22, {3}).has_value());
  CHECK_FALSE(stratum_realizable(c22, {1, 1}).has_value());

  // Inclusive convention also counts d = c_i.
  CHECK(stratum_realizable(c22, {1, 2}, true).has_value());
  CHECK_FALSE(stratum_realizable(c22, {1}, true).has_value());

  for (auto cv : std::vector<std::vector<int>>{{6}, {4, 3}, {3, 3, 2}}) {
    ConductanceVector c(cv);
    for (const auto& sets : testsupport::all_monomial_closed_sets(c)) {
      SubalgebraPoint b = mono(c, sets);
      auto v = vanishing_data(b, Grading::standard(c.branches()));
      std::vector<int> k;
      int dmax = *std::max_element(cv.begin(), cv.end());
      for (int d = 1; d < dmax; ++d) k.push_back(v.k.count(d) ? v.k.at(d) : 0);
      auto wit = stratum_realizable(c, k);
      REQUIRE(wit.has_value());
      CHECK(vanishing_data(wit->point, Grading::standard(c.branches())).k == v.k);
    }
  }
}
