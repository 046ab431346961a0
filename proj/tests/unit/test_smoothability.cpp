#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ter/chart.hpp"
#include "ter/smoothability.hpp"

using namespace ter;

TEST_CASE("spine lower bound") {
  CHECK(spine_lower_bound(ConductanceVector({12}), 6) == 5);
  CHECK(spine_lower_bound(ConductanceVector({2, 2}), 1) == 1);
  CHECK(spine_lower_bound(ConductanceVector({11}), 6) == 4);

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t m = 1 + rng() % 4;
    std::vector<int> cv;
    for (std::size_t i = 0; i < m; ++i) cv.push_back(1 + static_cast<int>(rng() % 9));
    ConductanceVector c(cv);
    int g = static_cast<int>(rng() % 10);
    long long bound = spine_lower_bound(c, g);
    SpineDescriptor sp = spine(c, g);
    if (!sp.grassmannian.empty) CHECK(bound == sp.grassmannian.dimension);
    for (std::size_t i = 0; i < m; ++i) {
      if (cv[i] % 2 == 0) continue;
      std::vector<int> bumped = cv;
      ++bumped[i];
      long long total = 0, odd = 0;
      for (int x : cv) {
        total += x;
        odd += x % 2;
      }
      long long second = static_cast<long long>(g) + static_cast<long long>(m) - (total + odd) / 2;
      long long after = spine_lower_bound(ConductanceVector(bumped), g);
      CHECK(after == bound + second);
      if (!sp.grassmannian.empty) CHECK(after >= bound);
    }
  }
}

TEST_CASE("best conductances") {
  auto b = best_conductances(6, 1);
  CHECK(b.spine_dim == 6);
  CHECK(b.c_star == 10);
  CHECK(b.closed_form == make_rational(6));
  CHECK(best_conductances(1, 3).spine_dim == 2);
  CHECK(best_conductances(1, 3).c_star == 6);
  for (int m = 1; m <= 10; ++m) CHECK(best_conductances(0, m).spine_dim == 0);
  for (int g = 0; g <= 60; ++g)
    for (int m = 1; m <= 60; ++m) {
      auto r = best_conductances(g, m);
      CHECK(r.closed_form == make_rational(static_cast<long>(r.spine_dim)));
      std::vector<int> cs(static_cast<std::size_t>(m), 2);
      cs[0] += r.c_star - 2 * m;
      CHECK(spine_lower_bound(ConductanceVector(cs), g) == r.spine_dim);
    }
  CHECK_THROWS_AS(best_conductances(1, 0), DomainError);
}

TEST_CASE("verdicts") {
  auto v = nonsmoothable_exists(22, 1);
  CHECK(v.verdict == Verdict::NonsmoothableExists);
  CHECK(v.regime == "3g>m");
  CHECK(v.beta == 1);
  CHECK(v.threshold == 65);
  auto w = nonsmoothable_exists(5, 15);
  CHECK(w.verdict == Verdict::NonsmoothableExists);
  CHECK(w.regime == "3g<=m");
  CHECK_FALSE(w.beta.has_value());
  CHECK(w.spine_dim == 50);
  auto u = nonsmoothable_exists(1, 1);
  CHECK(u.verdict == Verdict::Unknown);
  CHECK(u.beta == 4);
  CHECK(nonsmoothable_exists(21, 1).verdict == Verdict::Unknown);
  for (int m = 1; m <= 40; ++m) CHECK(nonsmoothable_exists(0, m).verdict == Verdict::Unknown);
  for (int g = 1; g <= 60; ++g)
    for (int m = 1; m <= 60; ++m) {
      auto x = nonsmoothable_exists(g, m);
      CHECK((x.verdict == Verdict::NonsmoothableExists) == (x.spine_dim >= x.threshold));
    }
}

TEST_CASE("smoothability map") {
  auto cells = smoothability_map(60, 40);
  CHECK(cells.size() == 61u * 40u);
  std::string csv = map_to_csv(cells);
  CHECK(csv.rfind("g,m,verdict,c_star,spine_dim,threshold,case,beta\n", 0) == 0);
  CHECK(csv.find("\n22,1,nonsmoothable-exists,") != std::string::npos);
  CHECK(csv == map_to_csv(smoothability_map(60, 40)));
  for (int m = 1; m <= 40; ++m) {
    bool seen = false;
    for (const auto& c : cells) {
      if (c.m != m || 3 * c.g <= m) continue;
      if (seen) CHECK(c.verdict == Verdict::NonsmoothableExists);
      seen = seen || c.verdict == Verdict::NonsmoothableExists;
    }
  }
  std::string svg = map_to_svg(cells);
  CHECK(svg.find("class=\"exists\"") != std::string::npos);
  CHECK(svg.find("class=\"unknown\"") != std::string::npos);
}
