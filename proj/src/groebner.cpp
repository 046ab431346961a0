#include "ter/groebner.hpp"

#include <algorithm>
#include <stdexcept>

#include "ter/error.hpp"

namespace ter {

namespace {

struct Pair {
  std::size_t i;
  std::size_t j;
  Exponent lcm;
};

bool disjoint(const Exponent& a, const Exponent& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] > 0 && b[k] > 0) return false;
  return true;
}

VarContext common_context(const MultiPoly& f, const std::vector<MultiPoly>& gens) {
  VarContext ctx = f.context();
  for (const auto& g : gens) {
    if (!g.context()) continue;
    if (!ctx) ctx = g.context();
    else if (!same_context(ctx, g.context())) throw std::invalid_argument("generators do not share a variable context");
  }
  return ctx;
}

void check_input_caps(const std::vector<MultiPoly>& polys, std::size_t nvars, const GroebnerLimits& limits) {
  if (nvars > limits.max_variables)
    throw ResourceCapExceeded(std::to_string(nvars) + " variables exceeds cap " + std::to_string(limits.max_variables));
  for (const auto& p : polys)
    if (p.degree() > limits.max_input_degree)
      throw ResourceCapExceeded("input degree " + std::to_string(p.degree()) + " exceeds cap " +
                                std::to_string(limits.max_input_degree));
}

class Buchberger {
 public:
  Buchberger(VarContext ctx, const GroebnerLimits& limits) : ctx_(std::move(ctx)), limits_(limits) {}

  std::vector<MultiPoly> run(const std::vector<MultiPoly>& gens) {
    for (const auto& g : gens) {
      MultiPoly h = normal_form(g.with_context(ctx_), active_polys());
      if (h.is_zero()) continue;
      if (h.is_constant()) return {MultiPoly::constant(1, ctx_)};
      update(h.monic());
    }
    std::size_t reductions = 0;
    while (!pairs_.empty()) {
      if (++reductions > limits_.max_pair_reductions) throw ResourceCapExceeded("too many S-polynomial reductions");
      auto best = std::min_element(pairs_.begin(), pairs_.end(), [](const Pair& a, const Pair& b) {
        return grevlex_compare(a.lcm, b.lcm) < 0;
      });
      Pair p = *best;
      pairs_.erase(best);
      MultiPoly h = normal_form(s_polynomial(polys_[p.i], polys_[p.j]), active_polys());
      if (h.is_zero()) continue;
      if (h.is_constant()) return {MultiPoly::constant(1, ctx_)};
      if (h.degree() > limits_.max_intermediate_degree)
        throw ResourceCapExceeded("intermediate degree " + std::to_string(h.degree()) + " exceeds cap");
      update(h.monic());
      if (polys_.size() > limits_.max_basis_size) throw ResourceCapExceeded("basis size exceeds cap");
    }
    return reduce_basis();
  }

 private:
  VarContext ctx_;
  GroebnerLimits limits_;
  std::vector<MultiPoly> polys_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;

  const Exponent& lm(std::size_t k) const { return polys_[k].leading().exp; }

  std::vector<MultiPoly> active_polys() const {
    std::vector<MultiPoly> out;
    for (std::size_t k = 0; k < polys_.size(); ++k)
      if (active_[k]) out.push_back(polys_[k]);
    return out;
  }

  // Gebauer-Moeller installation of a new polynomial.
  void update(MultiPoly h) {
    const std::size_t hi = polys_.size();
    polys_.push_back(std::move(h));
    active_.push_back(true);
    const Exponent& lh = lm(hi);

    std::vector<Pair> candidates;
    for (std::size_t k = 0; k < hi; ++k)
      if (active_[k]) candidates.push_back({k, hi, lcm(lm(k), lh)});

    std::vector<Pair> kept;
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      const Pair& c = candidates[a];
      if (disjoint(lm(c.i), lh)) {
        kept.push_back(c);
        continue;
      }
      bool dominated = false;
      for (std::size_t b = 0; b < candidates.size() && !dominated; ++b) {
        if (b == a) continue;
        const Pair& o = candidates[b];
        if (divides(o.lcm, c.lcm) && (o.lcm != c.lcm || b < a)) dominated = true;
      }
      if (!dominated) kept.push_back(c);
    }
    std::vector<Pair> fresh;
    for (auto& c : kept)
      if (!disjoint(lm(c.i), lh)) fresh.push_back(std::move(c));

    std::vector<Pair> survivors;
    for (auto& p : pairs_) {
      bool drop = divides(lh, p.lcm) && lcm(lm(p.i), lh) != p.lcm && lcm(lm(p.j), lh) != p.lcm;
      if (!drop) survivors.push_back(std::move(p));
    }
    pairs_ = std::move(survivors);
    for (auto& p : fresh) pairs_.push_back(std::move(p));

    for (std::size_t k = 0; k < hi; ++k)
      if (active_[k] && divides(lh, lm(k))) active_[k] = false;
  }

  std::vector<MultiPoly> reduce_basis() {
    std::vector<MultiPoly> g = active_polys();
    std::vector<MultiPoly> minimal;
    for (std::size_t a = 0; a < g.size(); ++a) {
      bool redundant = false;
      for (std::size_t b = 0; b < g.size() && !redundant; ++b) {
        if (a == b) continue;
        const Exponent& la = g[a].leading().exp;
        const Exponent& lb = g[b].leading().exp;
        if (divides(lb, la) && (lb != la || b < a)) redundant = true;
      }
      if (!redundant) minimal.push_back(g[a]);
    }
    std::vector<MultiPoly> reduced;
    for (std::size_t a = 0; a < minimal.size(); ++a) {
      std::vector<MultiPoly> others;
      for (std::size_t b = 0; b < minimal.size(); ++b)
        if (b != a) others.push_back(minimal[b]);
      reduced.push_back(normal_form(minimal[a], others).monic());
    }
    std::sort(reduced.begin(), reduced.end(), [](const MultiPoly& x, const MultiPoly& y) {
      return grevlex_compare(x.leading().exp, y.leading().exp) > 0;
    });
    return reduced;
  }
};

}  // namespace

MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g) {
  const Exponent& lf = f.leading().exp;
  const Exponent& lg = g.leading().exp;
  Exponent l = lcm(lf, lg);
  Exponent uf(l.size()), ug(l.size());
  for (std::size_t k = 0; k < l.size(); ++k) {
    uf[k] = l[k] - lf[k];
    ug[k] = l[k] - lg[k];
  }
  MultiPoly a = f.times_term(uf, 1 / f.leading().coeff);
  return a.minus_term_times(ug, 1 / g.leading().coeff, g);
}

MultiPoly normal_form(const MultiPoly& f, const std::vector<MultiPoly>& basis) {
  MultiPoly p = f;
  std::vector<Term> remainder;
  while (!p.is_zero()) {
    const Term lt = p.leading();
    bool reduced = false;
    for (const auto& g : basis) {
      if (g.is_zero()) continue;
      const Term& lg = g.leading();
      if (!divides(lg.exp, lt.exp)) continue;
      Exponent shift(lt.exp.size());
      for (std::size_t k = 0; k < shift.size(); ++k) shift[k] = lt.exp[k] - lg.exp[k];
      p = p.minus_term_times(shift, lt.coeff / lg.coeff, g);
      reduced = true;
      break;
    }
    if (!reduced) {
      remainder.push_back(lt);
      p -= MultiPoly::monomial(p.context(), lt.exp, lt.coeff);
    }
  }
  return MultiPoly::from_terms(f.context(), std::move(remainder));
}

std::vector<MultiPoly> groebner_basis(const std::vector<MultiPoly>& generators, const GroebnerLimits& limits) {
  VarContext ctx = common_context(MultiPoly(), generators);
  if (!ctx) ctx = make_context({});
  check_input_caps(generators, ctx->size(), limits);
  return Buchberger(ctx, limits).run(generators);
}

bool ideal_membership(const MultiPoly& f, const std::vector<MultiPoly>& generators, const GroebnerLimits& limits) {
  VarContext ctx = common_context(f, generators);
  if (!ctx) ctx = make_context({});
  check_input_caps(generators, ctx->size(), limits);
  check_input_caps({f}, ctx->size(), limits);
  if (f.is_zero()) return true;
  std::vector<MultiPoly> gb = Buchberger(ctx, limits).run(generators);
  return normal_form(f.with_context(ctx), gb).is_zero();
}

bool radical_membership(const MultiPoly& f, const std::vector<MultiPoly>& generators, const GroebnerLimits& limits) {
  VarContext ctx = common_context(f, generators);
  if (!ctx) ctx = make_context({});
  check_input_caps(generators, ctx->size(), limits);
  check_input_caps({f}, ctx->size(), limits);
  if (f.is_zero()) return true;
  std::vector<std::string> names = *ctx;
  std::string fresh = "y";
  while (std::find(names.begin(), names.end(), fresh) != names.end()) fresh += "_";
  names.push_back(fresh);
  VarContext wide = make_context(names);
  check_input_caps({}, wide->size(), limits);
  std::vector<MultiPoly> images;
  for (std::size_t k = 0; k < ctx->size(); ++k) images.push_back(MultiPoly::variable(wide, k));
  std::vector<MultiPoly> gens;
  for (const auto& g : generators) gens.push_back(g.with_context(ctx).substitute(images, wide));
  MultiPoly y = MultiPoly::variable(wide, ctx->size());
  gens.push_back(MultiPoly::constant(1, wide) - y * f.with_context(ctx).substitute(images, wide));
  std::vector<MultiPoly> gb = Buchberger(wide, limits).run(gens);
  return gb.size() == 1 && gb.front().is_constant() && !gb.front().is_zero();
}

}  // namespace ter
