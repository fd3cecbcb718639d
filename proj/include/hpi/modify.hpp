#pragma once

#include "hpi/branching.hpp"

#include <optional>

namespace hpi {

/// GL(n) column reduction {l1..ln} = eps^{ln} {l1-ln, ..., l_{n-1}-ln}.
/// nullopt when length(lambda) > n (the character vanishes).
std::optional<std::pair<int, Partition>> gl_column_reduce(const Partition& lambda,
                                                          int n);

/// Modification rules for H_{1^3}(3) = SL(3). Input terms must have length
/// <= 4; output labels have length <= 2 and eps is dropped (det = 1).
FormalCharacter sl3_modify(const FormalCharacter& f);

/// Modification rules for H_{1^3}(4): the six derived length-4 identities.
/// Length-4 labels outside the derived list raise no_known_rule.
FormalCharacter h13_4_modify(const FormalCharacter& f);

/// Value of the formal character ((mu))_pi at the identity of GL(n):
/// sum of coeff * dim_gl over the lift to GL(n). May be zero or negative.
Int dim_formal(const Partition& mu, const Partition& pi, int n);

/// SL(3) product with modification applied; agrees with multiplying in GL(3)
/// and discarding columns of length greater than 3.
FormalCharacter modified_product_sl3(const Partition& mu, const Partition& nu);

/// The GL(3) column-discard route to the same product.
FormalCharacter modified_product_sl3_gl_route(const Partition& mu, const Partition& nu);

} // namespace hpi
