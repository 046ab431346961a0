#include "ter/monoid.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace ter {

NumericalMonoid::NumericalMonoid(std::vector<int> gaps) : gaps_(std::move(gaps)) {
  std::sort(gaps_.begin(), gaps_.end());
  gaps_.erase(std::unique(gaps_.begin(), gaps_.end()), gaps_.end());
  if (!gaps_.empty() && gaps_.front() < 1) throw DomainError("invalid-monoid", "gaps must be positive");
  for (int x = 1; x <= conductor(); ++x)
    for (int y = x; x + y <= conductor(); ++y)
      if (contains(x) && contains(y) && !contains(x + y))
        throw DomainError("invalid-monoid", std::to_string(x) + " + " + std::to_string(y) + " is a gap");
}

bool NumericalMonoid::contains(int d) const {
  if (d < 0) return false;
  return !std::binary_search(gaps_.begin(), gaps_.end(), d);
}

int NumericalMonoid::multiplicity() const {
  int d = 1;
  while (!contains(d)) ++d;
  return d;
}

std::vector<int> NumericalMonoid::minimal_generators() const {
  std::vector<int> gens;
  const int bound = conductor() + multiplicity();
  for (int x = 1; x <= bound; ++x) {
    if (!contains(x)) continue;
    bool decomposable = false;
    for (int y = 1; y <= x / 2 && !decomposable; ++y) decomposable = contains(y) && contains(x - y);
    if (!decomposable) gens.push_back(x);
  }
  return gens;
}

std::string NumericalMonoid::to_string() const {
  std::ostringstream os;
  os << "<";
  auto gens = minimal_generators();
  for (std::size_t i = 0; i < gens.size(); ++i) os << (i ? "," : "") << gens[i];
  os << ">";
  return os.str();
}

std::vector<NumericalMonoid> enumerate_monoids(int genus, int conductor_max) {
  std::vector<NumericalMonoid> out;
  if (genus < 0) return out;
  // Genus tree: children remove a minimal generator above the Frobenius number.
  std::function<void(const NumericalMonoid&)> walk = [&](const NumericalMonoid& m) {
    if (m.conductor() > conductor_max) return;
    if (m.genus() == genus) {
      out.push_back(m);
      return;
    }
    for (int x : m.minimal_generators()) {
      if (x <= m.frobenius()) continue;
      std::vector<int> gaps = m.gaps();
      gaps.push_back(x);
      walk(NumericalMonoid(gaps));
    }
  };
  walk(NumericalMonoid());
  std::sort(out.begin(), out.end());
  return out;
}

SubalgebraPoint monoid_point(const ConductanceVector& c, const std::vector<NumericalMonoid>& monoids) {
  if (monoids.size() != c.branches()) throw DomainError("ambient-mismatch", "one monoid per branch required");
  std::vector<std::vector<int>> exps(c.branches());
  for (std::size_t i = 0; i < c.branches(); ++i) {
    if (monoids[i].conductor() > c[i])
      throw DomainError("precondition-violated", "monoid " + monoids[i].to_string() + " has conductor above " + std::to_string(c[i]));
    for (int d = 1; d < c[i]; ++d)
      if (monoids[i].contains(d)) exps[i].push_back(d);
  }
  return monomial_point(c, exps);
}

namespace {

// All monoids with conductor <= c, grouped by genus.
std::vector<std::vector<NumericalMonoid>> monoids_by_genus(int c) {
  std::vector<std::vector<NumericalMonoid>> out;
  for (int g = 0; g <= std::max(c - 1, 0); ++g) out.push_back(enumerate_monoids(g, c));
  return out;
}

}  // namespace

std::vector<MonoidTuple> fixed_points(const ConductanceVector& c, int g) {
  std::vector<MonoidTuple> out;
  if (g < 0) return out;
  std::vector<std::vector<std::vector<NumericalMonoid>>> per_branch;
  for (std::size_t i = 0; i < c.branches(); ++i) per_branch.push_back(monoids_by_genus(c[i]));
  std::vector<NumericalMonoid> current;
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int remaining) {
    if (i == c.branches()) {
      if (remaining == 0) out.push_back({current, monoid_point(c, current)});
      return;
    }
    for (int gi = 0; gi <= remaining && gi < static_cast<int>(per_branch[i].size()); ++gi)
      for (const auto& m : per_branch[i][static_cast<std::size_t>(gi)]) {
        current.push_back(m);
        rec(i + 1, remaining - gi);
        current.pop_back();
      }
  };
  rec(0, g);
  return out;
}

std::optional<MonoidTuple> stratum_realizable(const ConductanceVector& c, const std::vector<int>& k, bool inclusive) {
  for (int v : k)
    if (v < 0) return std::nullopt;
  int dmax = 0;
  for (std::size_t i = 0; i < c.branches(); ++i) dmax = std::max(dmax, c[i]);
  const int span = std::max(dmax, static_cast<int>(k.size()));
  auto target = [&](int d) { return d <= static_cast<int>(k.size()) ? k[static_cast<std::size_t>(d - 1)] : 0; };

  std::vector<std::vector<NumericalMonoid>> candidates;
  for (std::size_t i = 0; i < c.branches(); ++i) {
    std::vector<NumericalMonoid> all;
    for (const auto& level : monoids_by_genus(c[i])) all.insert(all.end(), level.begin(), level.end());
    candidates.push_back(all);
  }
  std::vector<int> counts(static_cast<std::size_t>(span) + 1, 0);
  std::vector<NumericalMonoid> current;
  std::optional<MonoidTuple> found;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (found) return;
    if (i == c.branches()) {
      for (int d = 1; d <= span; ++d)
        if (counts[static_cast<std::size_t>(d)] != target(d)) return;
      found = MonoidTuple{current, monoid_point(c, current)};
      return;
    }
    const int limit = inclusive ? c[i] : c[i] - 1;
    for (const auto& m : candidates[i]) {
      for (int d = 1; d <= limit; ++d)
        if (m.contains(d)) ++counts[static_cast<std::size_t>(d)];
      bool feasible = true;
      for (int d = 1; d <= span; ++d)
        if (counts[static_cast<std::size_t>(d)] > target(d)) feasible = false;
      if (feasible) {
        current.push_back(m);
        rec(i + 1);
        current.pop_back();
      }
      for (int d = 1; d <= limit; ++d)
        if (m.contains(d)) --counts[static_cast<std::size_t>(d)];
      if (found) return;
    }
  };
  rec(0);
  return found;
}

}  // namespace ter
