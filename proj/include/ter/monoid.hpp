#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ter/subalgebra.hpp"

namespace ter {

class NumericalMonoid {
 public:
  NumericalMonoid() = default;
  // Throws DomainError "invalid-monoid" unless the complement of gaps is closed under addition.
  explicit NumericalMonoid(std::vector<int> gaps);

  const std::vector<int>& gaps() const { return gaps_; }
  int genus() const { return static_cast<int>(gaps_.size()); }
  int conductor() const { return gaps_.empty() ? 0 : gaps_.back() + 1; }
  int frobenius() const { return gaps_.empty() ? -1 : gaps_.back(); }
  int multiplicity() const;
  bool contains(int d) const;
  std::vector<int> minimal_generators() const;
  std::string to_string() const;  // "<2,3>"

  friend bool operator==(const NumericalMonoid&, const NumericalMonoid&) = default;
  friend auto operator<=>(const NumericalMonoid& a, const NumericalMonoid& b) { return a.gaps_ <=> b.gaps_; }

 private:
  std::vector<int> gaps_;
};

// All monoids of the given genus with conductor <= conductor_max, ordered by gap set.
std::vector<NumericalMonoid> enumerate_monoids(int genus, int conductor_max);

struct MonoidTuple {
  std::vector<NumericalMonoid> monoids;
  SubalgebraPoint point;
};

// Monomial point spanned by t_i^d, d in M_i, 1 <= d < c_i.
SubalgebraPoint monoid_point(const ConductanceVector& c, const std::vector<NumericalMonoid>& monoids);

std::vector<MonoidTuple> fixed_points(const ConductanceVector& c, int g);

// k[d - 1] = k_d. Counts d in M_i with d < c_i, or d <= c_i when inclusive is set.
std::optional<MonoidTuple> stratum_realizable(const ConductanceVector& c, const std::vector<int>& k, bool inclusive = false);

}  // namespace ter
