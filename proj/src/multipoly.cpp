#include "ter/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "ter/error.hpp"

namespace ter {

VarContext make_context(std::vector<std::string> names) {
  return std::make_shared<const std::vector<std::string>>(std::move(names));
}

bool same_context(const VarContext& a, const VarContext& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

int total_degree(const Exponent& e) {
  int d = 0;
  for (int x : e) d += x;
  return d;
}

int grevlex_compare(const Exponent& a, const Exponent& b) {
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

bool divides(const Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Exponent lcm(const Exponent& a, const Exponent& b) {
  Exponent l(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) l[i] = std::max(a[i], b[i]);
  return l;
}

namespace {

VarContext joint_context(const MultiPoly& a, const MultiPoly& b) {
  if (!a.context()) return b.context();
  if (!b.context()) return a.context();
  if (same_context(a.context(), b.context())) return a.context();
  throw std::invalid_argument("variable context mismatch");
}

bool term_greater(const Term& x, const Term& y) { return grevlex_compare(x.exp, y.exp) > 0; }

std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int cmp;
    if (i == a.size()) cmp = -1;
    else if (j == b.size()) cmp = 1;
    else cmp = grevlex_compare(a[i].exp, b[j].exp);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back(subtract ? Term{b[j].exp, -b[j].coeff} : b[j]);
      ++j;
    } else {
      Rational c = a[i].coeff;
      if (subtract) c -= b[j].coeff;
      else c += b[j].coeff;
      if (!is_zero(c)) out.push_back({a[i].exp, c});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

MultiPoly::MultiPoly(long value) : MultiPoly(Rational(value)) {}

MultiPoly::MultiPoly(const Rational& value) {
  if (!ter::is_zero(value)) terms_.push_back({Exponent{}, value});
}

MultiPoly MultiPoly::constant(const Rational& value, VarContext ctx) {
  MultiPoly p(value);
  return ctx ? p.with_context(ctx) : p;
}

MultiPoly MultiPoly::variable(const VarContext& ctx, std::size_t index) {
  Exponent e(ctx->size(), 0);
  e.at(index) = 1;
  return monomial(ctx, e, 1);
}

MultiPoly MultiPoly::variable(const VarContext& ctx, const std::string& name) {
  auto it = std::find(ctx->begin(), ctx->end(), name);
  if (it == ctx->end()) throw std::invalid_argument("unknown variable " + name);
  return variable(ctx, static_cast<std::size_t>(it - ctx->begin()));
}

MultiPoly MultiPoly::monomial(const VarContext& ctx, Exponent exp, const Rational& coeff) {
  MultiPoly p;
  p.ctx_ = ctx;
  if (exp.size() != p.nvars()) throw std::invalid_argument("exponent length mismatch");
  if (!ter::is_zero(coeff)) p.terms_.push_back({std::move(exp), coeff});
  return p;
}

MultiPoly MultiPoly::from_terms(const VarContext& ctx, std::vector<Term> terms) {
  MultiPoly p;
  p.ctx_ = ctx;
  for (const auto& t : terms)
    if (t.exp.size() != p.nvars()) throw std::invalid_argument("exponent length mismatch");
  p.terms_ = std::move(terms);
  p.normalize();
  return p;
}

void MultiPoly::normalize() {
  std::sort(terms_.begin(), terms_.end(), term_greater);
  std::vector<Term> out;
  for (auto& t : terms_) {
    if (!out.empty() && out.back().exp == t.exp) out.back().coeff += t.coeff;
    else out.push_back(std::move(t));
  }
  out.erase(std::remove_if(out.begin(), out.end(), [](const Term& t) { return ter::is_zero(t.coeff); }),
            out.end());
  terms_ = std::move(out);
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && total_degree(terms_[0].exp) == 0);
}

int MultiPoly::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, total_degree(t.exp));
  return d;
}

bool MultiPoly::is_homogeneous() const {
  for (const auto& t : terms_)
    if (total_degree(t.exp) != total_degree(terms_.front().exp)) return false;
  return true;
}

Rational MultiPoly::constant_term() const {
  if (!terms_.empty() && total_degree(terms_.back().exp) == 0) return terms_.back().coeff;
  return 0;
}

MultiPoly MultiPoly::with_context(const VarContext& ctx) const {
  if (same_context(ctx_, ctx)) return *this;
  if (ctx_) throw std::invalid_argument("variable context mismatch");
  MultiPoly p;
  p.ctx_ = ctx;
  for (const auto& t : terms_) p.terms_.push_back({Exponent(p.nvars(), 0), t.coeff});
  return p;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  VarContext c = joint_context(*this, o);
  MultiPoly a = with_context(c), b = o.with_context(c);
  terms_ = merge(a.terms_, b.terms_, false);
  ctx_ = c;
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  VarContext c = joint_context(*this, o);
  MultiPoly a = with_context(c), b = o.with_context(c);
  terms_ = merge(a.terms_, b.terms_, true);
  ctx_ = c;
  return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  *this = *this * o;
  return *this;
}

MultiPoly MultiPoly::operator-() const { return scaled(-1); }

MultiPoly MultiPoly::scaled(const Rational& c) const {
  MultiPoly p;
  p.ctx_ = ctx_;
  if (ter::is_zero(c)) return p;
  p.terms_ = terms_;
  for (auto& t : p.terms_) t.coeff *= c;
  return p;
}

MultiPoly MultiPoly::times_term(const Exponent& e, const Rational& c) const {
  MultiPoly p;
  p.ctx_ = ctx_;
  if (ter::is_zero(c)) return p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    Exponent x = t.exp;
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += e[i];
    p.terms_.push_back({std::move(x), t.coeff * c});
  }
  return p;
}

MultiPoly MultiPoly::minus_term_times(const Exponent& e, const Rational& c, const MultiPoly& g) const {
  MultiPoly shifted = g.with_context(joint_context(*this, g)).times_term(e, c);
  MultiPoly p = with_context(shifted.ctx_);
  p.terms_ = merge(p.terms_, shifted.terms_, true);
  return p;
}

MultiPoly MultiPoly::monic() const {
  if (terms_.empty()) return *this;
  return scaled(1 / terms_.front().coeff);
}

MultiPoly MultiPoly::sign_normalized() const {
  if (!terms_.empty() && sgn(terms_.front().coeff) < 0) return scaled(-1);
  return *this;
}

MultiPoly MultiPoly::pow(unsigned n) const {
  MultiPoly r = constant(1, ctx_);
  MultiPoly b = *this;
  while (n > 0) {
    if (n & 1u) r *= b;
    b = b * b;
    n >>= 1u;
  }
  return r;
}

Rational MultiPoly::evaluate(const std::vector<Rational>& point) const {
  if (point.size() < nvars()) throw std::invalid_argument("evaluation point too short");
  Rational sum = 0;
  for (const auto& t : terms_) {
    Rational v = t.coeff;
    for (std::size_t i = 0; i < t.exp.size(); ++i)
      if (t.exp[i] != 0) v *= ter::pow(point[i], t.exp[i]);
    sum += v;
  }
  return sum;
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& images, const VarContext& target) const {
  if (images.size() < nvars()) throw std::invalid_argument("too few substitution images");
  MultiPoly sum = constant(0, target);
  for (const auto& t : terms_) {
    MultiPoly v = constant(t.coeff, target);
    for (std::size_t i = 0; i < t.exp.size(); ++i)
      if (t.exp[i] != 0) v *= images[i].pow(static_cast<unsigned>(t.exp[i]));
    sum += v;
  }
  return sum;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    c = abs(c);
    std::string mono;
    for (std::size_t i = 0; i < t.exp.size(); ++i) {
      if (t.exp[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += (*ctx_)[i];
      if (t.exp[i] > 1) mono += "^" + std::to_string(t.exp[i]);
    }
    if (mono.empty()) os << ter::to_string(c);
    else if (c == 1) os << mono;
    else os << ter::to_string(c) << "*" << mono;
    first = false;
  }
  return os.str();
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  if (a.context() && b.context() && !same_context(a.context(), b.context())) return false;
  VarContext c = a.context() ? a.context() : b.context();
  return a.with_context(c).terms() == b.with_context(c).terms();
}

MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  VarContext c = joint_context(a, b);
  MultiPoly x = a.with_context(c), y = b.with_context(c);
  std::vector<Term> prod;
  prod.reserve(x.terms().size() * y.terms().size());
  for (const auto& s : x.terms())
    for (const auto& t : y.terms()) {
      Exponent e = s.exp;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += t.exp[i];
      prod.push_back({std::move(e), s.coeff * t.coeff});
    }
  if (!c) {
    Rational v = 0;
    for (const auto& t : prod) v += t.coeff;
    return MultiPoly(v);
  }
  return MultiPoly::from_terms(c, std::move(prod));
}

namespace {

class PolyParser {
 public:
  PolyParser(const std::string& s, const VarContext& ctx) : s_(s), ctx_(ctx) {}

  MultiPoly parse() {
    MultiPoly p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return ctx_ ? p.with_context(ctx_) : p;
  }

 private:
  const std::string& s_;
  VarContext ctx_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& why) {
    throw ParseError("polynomial parse error at " + std::to_string(pos_) + ": " + why);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char ch) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }
  std::string digits() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return s_.substr(start, pos_ - start);
  }

  MultiPoly expr() {
    MultiPoly acc;
    bool negate = false;
    if (eat('-')) negate = true;
    else eat('+');
    MultiPoly t = term();
    acc = negate ? -t : t;
    for (;;) {
      if (eat('+')) acc += term();
      else if (eat('-')) acc -= term();
      else break;
    }
    return acc;
  }

  MultiPoly term() {
    MultiPoly acc = factor();
    for (;;) {
      if (eat('*')) {
        acc *= factor();
      } else if (eat('/')) {
        MultiPoly d = factor();
        if (!d.is_constant() || d.is_zero()) fail("division by a non-constant or zero");
        acc = acc.scaled(1 / d.constant_term());
      } else {
        break;
      }
    }
    return acc;
  }

  MultiPoly factor() {
    MultiPoly base = primary();
    if (eat('^')) {
      skip();
      int e = std::stoi(digits());
      base = base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  MultiPoly primary() {
    skip();
    if (pos_ == s_.size()) fail("unexpected end");
    char ch = s_[pos_];
    if (ch == '(') {
      ++pos_;
      MultiPoly inner = expr();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::string num = digits();
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        num += "/" + digits();
      }
      return MultiPoly(parse_rational(num));
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name = s_.substr(start, pos_ - start);
      if (!ctx_) fail("no variables available for '" + name + "'");
      auto it = std::find(ctx_->begin(), ctx_->end(), name);
      if (it == ctx_->end()) fail("unknown variable '" + name + "'");
      return MultiPoly::variable(ctx_, static_cast<std::size_t>(it - ctx_->begin()));
    }
    fail("unexpected '" + std::string(1, ch) + "'");
  }
};

}  // namespace

MultiPoly parse_poly(const std::string& text, const VarContext& ctx) { return PolyParser(text, ctx).parse(); }

MultiPoly det(const std::vector<std::vector<MultiPoly>>& m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw DomainError("dimension-mismatch", "determinant of non-square matrix");
  if (n == 0) return MultiPoly(1);
  if (n > 20) throw ResourceCapExceeded("determinant larger than 20x20");
  const std::size_t full = std::size_t{1} << n;
  std::vector<MultiPoly> memo(full);
  memo[0] = MultiPoly(1);
  // memo[S] = det of the last |S| rows restricted to the columns in S.
  for (std::size_t size = 1; size <= n; ++size) {
    const std::size_t row = n - size;
    for (std::size_t mask = 1; mask < full; ++mask) {
      if (static_cast<std::size_t>(__builtin_popcountll(mask)) != size) continue;
      MultiPoly acc;
      int position = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (!(mask & (std::size_t{1} << j))) continue;
        const MultiPoly& entry = m[row][j];
        const MultiPoly& minor = memo[mask & ~(std::size_t{1} << j)];
        if (!entry.is_zero() && !minor.is_zero()) {
          MultiPoly prod = entry * minor;
          if (position % 2 == 0) acc += prod;
          else acc -= prod;
        }
        ++position;
      }
      memo[mask] = std::move(acc);
    }
  }
  return memo[full - 1];
}

}  // namespace ter
