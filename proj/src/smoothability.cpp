#include "ter/smoothability.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "ter/error.hpp"

namespace ter {

long long spine_lower_bound(const ConductanceVector& c, int g) {
  const long long m = static_cast<long long>(c.branches());
  long long total = 0;
  long long p = 0;
  for (int ci : c.values()) {
    total += ci;
    if (ci % 2 != 0) ++p;
  }
  return (total - m - g) * (g + m - (total + p) / 2);
}

BestConductances best_conductances(int g, int m) {
  if (g < 0 || m < 1) throw DomainError("precondition-violated", "need g >= 0 and m >= 1");
  const long long s = static_cast<long long>(g) + m;
  BestConductances best;
  bool first = true;
  for (long long k = m; k <= s; ++k) {
    long long f = (2 * k - s) * (s - k);
    if (first || f > best.spine_dim) {
      best.spine_dim = f;
      best.c_star = static_cast<int>(2 * k);
      first = false;
    }
  }
  if (3 * g > m) {
    static const long alpha_num[4] = {0, 1, 4, 1};
    best.closed_form = make_rational(static_cast<long>(s * s) - alpha_num[s % 4], 8);
  } else {
    best.closed_form = make_rational(static_cast<long>((m - g) * static_cast<long long>(g)));
  }
  if (best.closed_form != make_rational(static_cast<long>(best.spine_dim))) throw std::logic_error("closed form disagrees with brute force");
  if (best.spine_dim > 0 && !(s - 1 < best.c_star && best.c_star <= 2 * (s - 1)))
    throw std::logic_error("maximizer outside the conductance window");
  return best;
}

std::string to_string(Verdict v) { return v == Verdict::NonsmoothableExists ? "nonsmoothable-exists" : "unknown"; }

SmoothabilityVerdict nonsmoothable_exists(int g, int m) {
  BestConductances best = best_conductances(g, m);
  SmoothabilityVerdict v;
  v.g = g;
  v.m = m;
  v.c_star = best.c_star;
  v.spine_dim = best.spine_dim;
  v.threshold = 3LL * g - 3 + 2LL * m;
  const long long s = static_cast<long long>(g) + m;
  bool holds = false;
  if (3 * g > m) {
    static const int beta[4] = {0, 1, 4, 1};
    v.regime = "3g>m";
    v.beta = beta[s % 4];
    holds = s * s - *v.beta >= 24LL * g - 24 + 16LL * m;
  } else {
    v.regime = "3g<=m";
    holds = static_cast<long long>(m - g) * g >= v.threshold;
  }
  if (holds != (best.spine_dim >= v.threshold)) throw std::logic_error("case inequality disagrees with the spine maximum");
  v.verdict = (holds && g > 0) ? Verdict::NonsmoothableExists : Verdict::Unknown;
  return v;
}

std::vector<SmoothabilityVerdict> smoothability_map(int g_max, int m_max) {
  if (g_max < 0 || m_max < 1) throw DomainError("precondition-violated", "need g_max >= 0 and m_max >= 1");
  std::vector<SmoothabilityVerdict> out;
  for (int g = 0; g <= g_max; ++g)
    for (int m = 1; m <= m_max; ++m) out.push_back(nonsmoothable_exists(g, m));
  return out;
}

std::string map_to_csv(const std::vector<SmoothabilityVerdict>& cells) {
  std::ostringstream os;
  os << "g,m,verdict,c_star,spine_dim,threshold,case,beta\n";
  for (const auto& v : cells) {
    os << v.g << ',' << v.m << ',' << to_string(v.verdict) << ',' << v.c_star << ',' << v.spine_dim << ','
       << v.threshold << ',' << v.regime << ',';
    if (v.beta) os << *v.beta;
    os << '\n';
  }
  return os.str();
}

std::string map_to_svg(const std::vector<SmoothabilityVerdict>& cells) {
  int g_max = 0, m_max = 1;
  for (const auto& v : cells) {
    g_max = std::max(g_max, v.g);
    m_max = std::max(m_max, v.m);
  }
  const int step = 10, margin = 40;
  const int width = 2 * margin + step * g_max, height = 2 * margin + step * (m_max - 1);
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height << "\">\n";
  os << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "  <text x=\"" << width / 2 << "\" y=\"" << height - 8 << "\" font-size=\"12\" text-anchor=\"middle\">g</text>\n";
  os << "  <text x=\"12\" y=\"" << height / 2 << "\" font-size=\"12\">m</text>\n";
  for (const auto& v : cells) {
    const int x = margin + step * v.g;
    const int y = height - margin - step * (v.m - 1);
    if (v.verdict == Verdict::NonsmoothableExists)
      os << "  <circle class=\"exists\" cx=\"" << x << "\" cy=\"" << y << "\" r=\"3\" fill=\"darkorange\"/>\n";
    else
      os << "  <circle class=\"unknown\" cx=\"" << x << "\" cy=\"" << y << "\" r=\"1.5\" fill=\"lightgray\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace ter
