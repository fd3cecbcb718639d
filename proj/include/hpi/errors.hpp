#pragma once

#include <stdexcept>
#include <string>

namespace hpi {

// Base class for all library errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed partition/series/expansion text.
struct parse_error : error {
    using error::error;
};

// Series name does not resolve to a known generating rule.
struct unknown_series : error {
    using error::error;
};

// Series inversion requires constant term 1*{0}.
struct not_invertible : error {
    using error::error;
};

// Modification rules are only defined for labels up to the documented length.
struct unsupported_length : error {
    using error::error;
};

// Label of full length with no derived rewrite identity.
struct no_known_rule : error {
    using error::error;
};

// pi-deformed scalar product requested for a pi outside the defined cases.
struct unsupported_pi : error {
    using error::error;
};

// Polynomial handed to the Schur decomposer is not symmetric.
struct not_symmetric : error {
    using error::error;
};

// Elimination produced a non-integer coefficient.
struct non_integral : error {
    using error::error;
};

// Invariant breach; always a bug.
struct internal_error : error {
    using error::error;
};

} // namespace hpi
