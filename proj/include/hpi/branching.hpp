#pragma once

#include "hpi/series.hpp"

#include <map>
#include <optional>
#include <string>

namespace hpi {

/// Integer combination of terms eps^r ((mu))_pi: the formal characters of the
/// subgroup H_pi of GL(n) fixing a tensor of symmetry type pi. eps is the
/// GL(n) determinant character; nonzero eps powers require n to be set.
class FormalCharacter {
public:
    struct Key {
        int eps = 0;
        Partition mu;
        bool operator==(const Key&) const = default;
    };
    struct KeyLess {
        bool operator()(const Key& a, const Key& b) const {
            if (a.eps != b.eps) return a.eps < b.eps;
            if (a.mu.weight() != b.mu.weight()) return a.mu.weight() > b.mu.weight();
            return a.mu.parts() > b.mu.parts();
        }
    };
    using Terms = std::map<Key, Int, KeyLess>;

    FormalCharacter() = default;
    FormalCharacter(Partition pi, std::optional<int> n) : pi_(std::move(pi)), n_(n) {}

    const Partition& pi() const { return pi_; }
    std::optional<int> n() const { return n_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Int coeff(const Partition& mu, int eps = 0) const;
    void add(const Partition& mu, Int c, int eps = 0);
    FormalCharacter& operator+=(const FormalCharacter& o);

    bool same_terms(const FormalCharacter& o) const { return terms_ == o.terms_; }

    /// "((311))_26 + e((1))_4" — dimension subscripts appear when n is set,
    /// eps powers render as e, e^2, ...
    std::string str(bool with_dims = false) const;
    /// Compact bracket form: [.] for pi=[2], <.> for pi=[1,1], ((.)) else.
    std::string paper_str(bool with_dims = false) const;

private:
    Partition pi_;
    std::optional<int> n_;
    Terms terms_;
};

/// GL(n) > H_pi restriction: skew {lambda} by M_pi and read the result as
/// formal characters. Exact; no modification applied.
FormalCharacter branch_gl_to_hpi(const Partition& lambda, const Partition& pi,
                                 std::optional<int> n = std::nullopt);

/// Inverse branching: ((mu))_pi -> {mu / L_pi} in the Schur basis.
SchurExpansion lift_hpi_to_gl(const Partition& mu, const Partition& pi);

/// ({mu}{nu})/Z via product-then-skew.
SchurExpansion skew_product_by_series(const Partition& mu, const Partition& nu,
                                      const TruncatedSeries& z);
/// Same value through the two-alphabet coproduct of Z.
SchurExpansion skew_product_by_series_via_coproduct(const Partition& mu,
                                                    const Partition& nu,
                                                    const TruncatedSeries& z);

/// pi-Newell-Littlewood product of formal characters, unmodified.
/// Computed by lift -> multiply -> branch.
FormalCharacter product_hpi(const Partition& mu, const Partition& nu,
                            const Partition& pi, std::optional<int> n = std::nullopt);
/// Same product through the cut-coproduct kernel of M_pi.
FormalCharacter product_hpi_kernel(const Partition& mu, const Partition& nu,
                                   const Partition& pi,
                                   std::optional<int> n = std::nullopt);

/// GL(n) > GL(n-1): branch with pi = [1]; multiplicity-free interlacing.
SchurExpansion branch_gl_to_gl_minus_one(const Partition& lambda);

/// pi-deformed scalar products of basis Schur functions. Defined for
/// pi in {[1],[2],[1,1],[1,1,1]}.
Int pi_scalar_product(const Partition& x, const Partition& y, const Partition& pi);

} // namespace hpi
