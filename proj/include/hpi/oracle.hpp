#pragma once

#include "hpi/series.hpp"

#include <map>
#include <vector>

namespace hpi {
namespace oracle {

/// Polynomial in n commuting variables, exponent vector -> coefficient.
/// Deliberately naive; everything here exists to cross-check the fast paths.
using MonomialPoly = std::map<std::vector<int>, Int>;

/// Sum over semistandard tableaux of x^wgt(T), extended linearly.
MonomialPoly expand_in_variables(const SchurExpansion& f, int n);

/// Unique Schur expansion reproducing a symmetric polynomial; leading-monomial
/// elimination. Throws not_symmetric when the input fails the orbit check.
SchurExpansion schur_decompose(const MonomialPoly& p, int n);

/// Composition definition of plethysm: list the monomials of s_lambda, feed
/// them to s_mu, decompose. Requires n >= |lambda|*|mu| for faithfulness.
SchurExpansion plethysm_oracle(const Partition& lambda, const Partition& mu, int n);

/// Expansion of a named series' defining product in n variables through total
/// degree <= degree (geometric series for inverse factors).
MonomialPoly series_product_oracle(const SeriesId& id, int n, int degree);

/// Two-alphabet decomposition F(x,y) = sum c_{xi,eta} s_xi(x) s_eta(y) with
/// m x-variables and n y-variables, by iterated schur_decompose.
TensorExpansion coproduct_oracle(const SchurExpansion& f, int m, int n);

/// Same decomposition applied to an already expanded polynomial in m + n
/// variables (x first, then y).
TensorExpansion decompose_two_alphabet(const MonomialPoly& p, int m, int n);

MonomialPoly poly_mul(const MonomialPoly& a, const MonomialPoly& b, int n,
                      int max_degree = -1);

} // namespace oracle
} // namespace hpi
