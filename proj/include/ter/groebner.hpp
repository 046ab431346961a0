#pragma once

#include <cstddef>
#include <vector>

#include "ter/multipoly.hpp"

namespace ter {

struct GroebnerLimits {
  int max_input_degree = 8;
  std::size_t max_variables = 8;
  int max_intermediate_degree = 24;
  std::size_t max_basis_size = 4000;
  std::size_t max_pair_reductions = 200000;
};

// Reduced Groebner basis under grevlex. Throws ResourceCapExceeded past the limits.
std::vector<MultiPoly> groebner_basis(const std::vector<MultiPoly>& generators,
                                      const GroebnerLimits& limits = {});

// Full normal form of f modulo a list of polynomials (leading terms under grevlex).
MultiPoly normal_form(const MultiPoly& f, const std::vector<MultiPoly>& basis);

MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g);

bool ideal_membership(const MultiPoly& f, const std::vector<MultiPoly>& generators,
                      const GroebnerLimits& limits = {});

// f in the radical of (generators), via 1 in (generators, 1 - y f) for a fresh y.
bool radical_membership(const MultiPoly& f, const std::vector<MultiPoly>& generators,
                        const GroebnerLimits& limits = {});

}  // namespace ter
