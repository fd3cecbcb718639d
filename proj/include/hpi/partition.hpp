#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hpi {

using Int = long long;

/// Integer partition: weakly decreasing positive parts. The empty sequence is
/// the zero partition and acts as the unit label {0}.
class Partition {
public:
    Partition() = default;
    /// Trailing (and interior) zeros are stripped; parts must be weakly
    /// decreasing and nonnegative.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }
    int length() const { return static_cast<int>(parts_.size()); }
    int weight() const;
    /// parts()[i] for i < length(), else 0.
    int part(int i) const;

    Partition conjugate() const;
    bool contains(const Partition& mu) const;

    /// Frobenius arm/leg lengths down the main diagonal.
    std::pair<std::vector<int>, std::vector<int>> frobenius() const;
    static Partition from_frobenius(const std::vector<int>& arms,
                                    const std::vector<int>& legs);

    /// Number of semistandard tableaux with entries in 1..n
    /// (hook-content product); 0 when length() > n.
    Int dim_gl(int n) const;

    /// Bracket syntax: "[3,2,1]", "[2^3]", "[]"; bare "0" also accepted.
    static Partition parse(const std::string& text);
    std::string to_bracket() const;
    /// Run-length display used inside {...}: "0", "3,1", "2^2", "2,1^4".
    std::string run_string() const;
    /// Concatenated digits with runs of 4+ collapsed: "2211", "1^4", "21^4".
    std::string paper_label() const;

    bool operator==(const Partition&) const = default;
    /// Lexicographic on parts; use canonical_less for display order.
    auto operator<=>(const Partition& o) const { return parts_ <=> o.parts_; }

private:
    std::vector<int> parts_;
};

/// Display/storage order: weight ascending, then parts lexicographically
/// descending, so within one weight [4] precedes [3,1] precedes [1,1,1,1].
bool canonical_less(const Partition& a, const Partition& b);

struct CanonicalLess {
    bool operator()(const Partition& a, const Partition& b) const {
        return canonical_less(a, b);
    }
};

struct PartitionsOfOptions {
    std::optional<int> max_length;
    std::optional<int> max_part;
};

/// All partitions of k within the bounds, in reverse-lexicographic order
/// ([k] first, [1^k] last).
std::vector<Partition> partitions_of(int k, PartitionsOfOptions opts = {});

/// z_rho = prod i^{m_i} m_i!  (order of the centralizer of cycle type rho).
Int z_of(const Partition& rho);

} // namespace hpi
