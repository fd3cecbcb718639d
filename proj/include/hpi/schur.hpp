#pragma once

#include "hpi/partition.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <string>
#include <utility>

namespace hpi {

using Rational = boost::multiprecision::cpp_rational;

/// Integer linear combination of Schur functions {lambda}. Zero coefficients
/// are never stored; iteration order is canonical.
class SchurExpansion {
public:
    using Terms = std::map<Partition, Int, CanonicalLess>;

    SchurExpansion() = default;
    static SchurExpansion unit() { return basis(Partition{}); }
    static SchurExpansion basis(const Partition& lambda, Int coeff = 1);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Int coeff(const Partition& lambda) const;
    void add(const Partition& lambda, Int c);
    int max_weight() const;

    SchurExpansion& operator+=(const SchurExpansion& o);
    SchurExpansion& operator-=(const SchurExpansion& o);
    SchurExpansion operator+(const SchurExpansion& o) const;
    SchurExpansion operator-(const SchurExpansion& o) const;
    SchurExpansion operator-() const;
    SchurExpansion operator*(Int c) const;
    /// Keep only terms with weight <= degree.
    SchurExpansion truncated(int degree) const;
    SchurExpansion filtered_max_length(int max_len) const;
    /// Restriction to the weight-k graded component.
    SchurExpansion component(int k) const;

    bool operator==(const SchurExpansion&) const = default;

    /// "{0} + 2*{2,1} - {1^3}" in canonical order; "0" when empty.
    std::string str() const;

private:
    Terms terms_;
};

/// Element of Lambda (x) Lambda in the Schur (x) Schur basis.
class TensorExpansion {
public:
    struct KeyLess {
        bool operator()(const std::pair<Partition, Partition>& a,
                        const std::pair<Partition, Partition>& b) const;
    };
    using Terms = std::map<std::pair<Partition, Partition>, Int, KeyLess>;

    TensorExpansion() = default;
    static TensorExpansion unit();

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Int coeff(const Partition& l, const Partition& r) const;
    void add(const Partition& l, const Partition& r, Int c);

    TensorExpansion& operator+=(const TensorExpansion& o);
    TensorExpansion operator+(const TensorExpansion& o) const;
    TensorExpansion operator-(const TensorExpansion& o) const;
    TensorExpansion operator*(Int c) const;
    /// Componentwise outer product, keeping total weight <= degree (no bound
    /// when degree < 0).
    TensorExpansion product(const TensorExpansion& o, int degree = -1) const;
    TensorExpansion truncated(int degree) const;

    /// <this | F (x) G> under the orthonormal Schur pairing.
    Int pair(const SchurExpansion& f, const SchurExpansion& g) const;

    bool operator==(const TensorExpansion&) const = default;
    std::string str() const;

private:
    Terms terms_;
};

/// Rational combination of power sums p_rho, used for plethysm and Kronecker
/// arithmetic. Internal basis only; results always land back in Schur form.
using PowerExpansion = std::map<Partition, Rational>;

// --- structure constants ------------------------------------------------

/// Littlewood-Richardson product {mu}.{nu} (memoized).
const SchurExpansion& lr_product(const Partition& mu, const Partition& nu);

/// Skew {nu/mu} = sum_lambda c^nu_{lambda,mu} {lambda} (memoized).
const SchurExpansion& skew(const Partition& nu, const Partition& mu);

/// Symmetric-group character chi^lambda at cycle type rho (memoized
/// Murnaghan-Nakayama).
Int sn_character(const Partition& lambda, const Partition& rho);

// --- ring and Hopf operations -------------------------------------------

SchurExpansion outer_product(const SchurExpansion& f, const SchurExpansion& g,
                             int degree = -1);
SchurExpansion skew_by(const SchurExpansion& f, const SchurExpansion& g);
Int scalar(const SchurExpansion& f, const SchurExpansion& g);
TensorExpansion outer_coproduct(const SchurExpansion& f);
/// Kronecker product, degreewise; cross-degree pieces vanish.
SchurExpansion inner_product(const SchurExpansion& f, const SchurExpansion& g);
TensorExpansion inner_coproduct(const SchurExpansion& f);
SchurExpansion antipode(const SchurExpansion& f);
Int counit(const SchurExpansion& f);

PowerExpansion schur_to_power(const SchurExpansion& f);
SchurExpansion power_to_schur(const PowerExpansion& p);

/// Plethysm {base} underline-otimes {exponent} = s_exponent[s_base], extended
/// to arbitrary signed expansions in both slots (lambda-ring rules; linear in
/// the exponent).
SchurExpansion plethysm(const SchurExpansion& base, const SchurExpansion& exponent);
/// Memoized single-basis plethysm s_mu[s_lambda].
const SchurExpansion& plethysm_basis(const Partition& lambda, const Partition& mu);

/// Outer coproduct of a plethysm, computed as Delta(plethysm(base, exponent)).
TensorExpansion plethysm_coproduct(const SchurExpansion& base,
                                   const SchurExpansion& exponent);
/// Same value through the Sweedler-sum route: iterated outer coproduct of the
/// exponent, one inner coproduct per coproduct summand of the base.
TensorExpansion plethysm_coproduct_sweedler(const Partition& base,
                                            const Partition& exponent);

} // namespace hpi
