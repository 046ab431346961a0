#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ter/algebra.hpp"
#include "ter/rational.hpp"

namespace ter {

// (c - m - g)(g + m - c/2 - p/2) with p the number of odd conductances.
// c + p is even, so the value is an integer; it may be negative.
long long spine_lower_bound(const ConductanceVector& c, int g);

struct BestConductances {
  int c_star = 0;             // 2k at the smallest maximizing k
  long long spine_dim = 0;    // brute-force maximum over k in [m, g + m]
  Rational closed_form;       // (g+m)^2/8 - alpha, or (m - g)g when 3g <= m
};

// Maximizes (2k - m - g)(g + m - k) over m <= k <= g + m (all conductances even).
// Throws DomainError "precondition-violated" unless g >= 0 and m >= 1.
BestConductances best_conductances(int g, int m);

enum class Verdict { NonsmoothableExists, Unknown };

std::string to_string(Verdict v);

struct SmoothabilityVerdict {
  int g = 0;
  int m = 0;
  Verdict verdict = Verdict::Unknown;
  int c_star = 0;
  long long spine_dim = 0;
  long long threshold = 0;   // 3g - 3 + 2m
  std::string regime;        // "3g>m" or "3g<=m"
  std::optional<int> beta;   // set in the 3g > m regime
};

// Genus 0 is always reported unknown: the ordinary m-fold point is smoothable.
SmoothabilityVerdict nonsmoothable_exists(int g, int m);

// Cells (g, m) for g in [0, g_max], m in [1, m_max], sorted by (g, m).
std::vector<SmoothabilityVerdict> smoothability_map(int g_max, int m_max);

std::string map_to_csv(const std::vector<SmoothabilityVerdict>& cells);
std::string map_to_svg(const std::vector<SmoothabilityVerdict>& cells);

}  // namespace ter
