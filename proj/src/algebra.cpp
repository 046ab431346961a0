#include "ter/algebra.hpp"

#include <cctype>
#include <sstream>

namespace ter {

std::string Monomial::name() const {
  if (is_constant()) return "1";
  return "t" + std::to_string(branch) + "^" + std::to_string(exponent);
}

Monomial parse_monomial(const std::string& text) {
  if (text == "1") return Monomial::constant();
  if (text.empty() || text[0] != 't') throw ParseError("malformed monomial '" + text + "'");
  std::size_t pos = 1;
  auto read_int = [&](int& out) {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos || pos - start > 6) return false;
    out = std::stoi(text.substr(start, pos - start));
    return true;
  };
  Monomial m{1, 1};
  if (pos < text.size() && text[pos] != '^' && !read_int(m.branch))
    throw ParseError("malformed monomial '" + text + "'");
  if (pos < text.size()) {
    if (text[pos] != '^') throw ParseError("malformed monomial '" + text + "'");
    ++pos;
    if (!read_int(m.exponent) || pos != text.size()) throw ParseError("malformed monomial '" + text + "'");
  }
  if (m.branch < 1 || m.exponent < 1) throw ParseError("malformed monomial '" + text + "'");
  return m;
}

ConductanceVector::ConductanceVector(std::vector<int> c) : c_(std::move(c)) {
  if (c_.empty()) throw DomainError("invalid-conductance", "at least one branch required");
  offsets_.push_back(0);
  for (int ci : c_) {
    if (ci < 1) throw DomainError("invalid-conductance", "conductances must be positive");
    offsets_.push_back(offsets_.back() + static_cast<std::size_t>(ci - 1));
  }
}

int ConductanceVector::total() const {
  int s = 0;
  for (int ci : c_) s += ci;
  return s;
}

bool ConductanceVector::valid(const Monomial& mono) const {
  if (mono.is_constant()) return true;
  return mono.branch >= 1 && static_cast<std::size_t>(mono.branch) <= c_.size() && mono.exponent >= 1 &&
         mono.exponent < c_[static_cast<std::size_t>(mono.branch - 1)];
}

std::size_t ConductanceVector::index(const Monomial& mono) const {
  if (mono.is_constant() || !valid(mono))
    throw DomainError("invalid-monomial", mono.name() + " is not an ideal basis monomial of " + to_string());
  return offsets_[static_cast<std::size_t>(mono.branch - 1)] + static_cast<std::size_t>(mono.exponent - 1);
}

Monomial ConductanceVector::monomial(std::size_t index) const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (index < offsets_[i + 1]) return {static_cast<int>(i + 1), static_cast<int>(index - offsets_[i] + 1)};
  throw std::out_of_range("monomial index out of range");
}

std::vector<Monomial> ConductanceVector::ideal_basis() const {
  std::vector<Monomial> out;
  for (std::size_t k = 0; k < ideal_rank(); ++k) out.push_back(monomial(k));
  return out;
}

ConductanceVector ConductanceVector::restrict_to(const std::vector<std::size_t>& branches) const {
  std::vector<int> sub;
  for (auto b : branches) sub.push_back(c_.at(b));
  return ConductanceVector(sub);
}

bool ConductanceVector::componentwise_leq(const ConductanceVector& other) const {
  if (c_.size() != other.c_.size()) return false;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] > other.c_[i]) return false;
  return true;
}

std::string ConductanceVector::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < c_.size(); ++i) s += (i ? "," : "") + std::to_string(c_[i]);
  return s + ")";
}

ConductanceVector parse_conductances(const std::string& text) {
  std::vector<int> c;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size()) throw ParseError("");
      c.push_back(v);
    } catch (const std::exception&) {
      throw ParseError("malformed conductance vector '" + text + "'");
    }
  }
  return ConductanceVector(c);
}

Grading Grading::standard(std::size_t m) { return {std::vector<int>(m, 1)}; }

Grading Grading::coordinate(std::size_t m, std::size_t branch) {
  Grading g{std::vector<int>(m, 0)};
  g.weights.at(branch) = 1;
  return g;
}

Grading Grading::subset(std::size_t m, const std::vector<std::size_t>& branches) {
  Grading g{std::vector<int>(m, 0)};
  for (auto b : branches) g.weights.at(b) = 1;
  return g;
}

int Grading::degree(const Monomial& mono) const {
  if (mono.is_constant()) return 0;
  return mono.exponent * weights.at(static_cast<std::size_t>(mono.branch - 1));
}

std::vector<Monomial> filtration_basis(const ConductanceVector& c, const Grading& gamma, int d) {
  if (gamma.weights.size() != c.branches()) throw std::invalid_argument("grading length mismatch");
  std::vector<Monomial> out;
  if (d <= 0) out.push_back(Monomial::constant());
  for (const auto& mono : c.ideal_basis())
    if (gamma.degree(mono) >= d) out.push_back(mono);
  return out;
}

AlgebraElement apply_torus(const std::vector<Rational>& lambda, const AlgebraElement& x) {
  const ConductanceVector& c = x.ambient();
  if (lambda.size() != c.branches()) throw std::invalid_argument("one scale factor per branch required");
  for (const auto& l : lambda)
    if (is_zero(l)) throw DomainError("zero-scale-factor", "torus parameters must be nonzero");
  AlgebraElement y = x;
  for (std::size_t k = 1; k < y.size(); ++k) {
    Monomial mono = c.monomial(k - 1);
    y.slot(k) *= ter::pow(lambda[static_cast<std::size_t>(mono.branch - 1)], mono.exponent);
  }
  return y;
}

LaurentElement to_laurent(const AlgebraElement& x) {
  LaurentElement y(x.ambient());
  for (std::size_t k = 0; k < x.size(); ++k) y.slot(k) = LaurentPoly(x.slot(k));
  return y;
}

AlgebraElement specialize(const LaurentElement& x, const Rational& a) {
  AlgebraElement y(x.ambient());
  for (std::size_t k = 0; k < x.size(); ++k) y.slot(k) = x.slot(k).evaluate(a);
  return y;
}

LaurentElement apply_phi_a_symbolic(const AlgebraElement& x) {
  const ConductanceVector& c = x.ambient();
  std::vector<LaurentElement> images;
  for (std::size_t i = 0; i < c.branches(); ++i) {
    LaurentElement img(c);
    int b = static_cast<int>(i + 1);
    if (c[i] > 1) img.at({b, 1}) = LaurentPoly(1);
    if (c[i] > 2) img.at({b, 2}) = LaurentPoly::monomial(-1, 1);
    images.push_back(img);
  }
  return substitute(to_laurent(x), images);
}

AlgebraElement embed(const AlgebraElement& x, const ConductanceVector& full, const std::vector<std::size_t>& branches) {
  if (!(full.restrict_to(branches) == x.ambient())) throw DomainError("ambient-mismatch", "embedding");
  AlgebraElement y(full);
  y.slot(0) = x.slot(0);
  for (std::size_t k = 1; k < x.size(); ++k) {
    Monomial mono = x.ambient().monomial(k - 1);
    y.at({static_cast<int>(branches[static_cast<std::size_t>(mono.branch - 1)] + 1), mono.exponent}) = x.slot(k);
  }
  return y;
}

AlgebraElement project(const AlgebraElement& x, const std::vector<std::size_t>& branches) {
  ConductanceVector sub = x.ambient().restrict_to(branches);
  AlgebraElement y(sub);
  y.slot(0) = x.slot(0);
  for (std::size_t k = 1; k < y.size(); ++k) {
    Monomial mono = sub.monomial(k - 1);
    y.slot(k) = x.at({static_cast<int>(branches[static_cast<std::size_t>(mono.branch - 1)] + 1), mono.exponent});
  }
  return y;
}

std::string to_string(const AlgebraElement& x) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < x.size(); ++k) {
    const Rational& a = x.slot(k);
    if (is_zero(a)) continue;
    Monomial mono = x.monomial_at_slot(k);
    Rational mag = abs(a);
    if (first) os << (sgn(a) < 0 ? "-" : "");
    else os << (sgn(a) < 0 ? " - " : " + ");
    if (mono.is_constant()) os << ter::to_string(mag);
    else if (mag == 1) os << mono.name();
    else os << ter::to_string(mag) << "*" << mono.name();
    first = false;
  }
  return first ? "0" : os.str();
}

}  // namespace ter
