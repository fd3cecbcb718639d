#pragma once

#include "hpi/schur.hpp"

#include <optional>
#include <string>

namespace hpi {

/// One of the sixteen named Schur function series, or a plethystic
/// M_pi / L_pi series.
struct SeriesId {
    enum class Kind { Named, Mpi, Lpi };
    Kind kind = Kind::Named;
    char name = 'M'; // one of L M P Q A B C D E F G H R S V W
    Partition pi;    // for Mpi / Lpi

    /// Accepts "L".."W", "Mpi:[1,1,1]", "Lpi:[2]". Case-sensitive.
    static SeriesId parse(const std::string& text);
    std::string str() const;
};

/// A Schur function series cut off at a fixed weight. Two truncations of the
/// same series agree on their common range.
struct TruncatedSeries {
    SchurExpansion body;
    int degree = 0;
    std::string label;

    bool same_content(const TruncatedSeries& o) const { return body == o.body; }
};

/// Schur content of the named series through weight <= degree. The eight
/// primitive rows (L,M,P,Q,A,B,C,D) and V,W come from their content
/// descriptions; E,F,G,H,R,S are assembled from products of those.
TruncatedSeries series_coeffs(const SeriesId& id, int degree);

/// M_pi = {pi} (x)_ M, truncated.
TruncatedSeries m_pi(const Partition& pi, int degree);

/// Inverse of M_pi, computed degreewise.
TruncatedSeries l_pi(const Partition& pi, int degree);

/// {pi} (x)_ L: signed plethysm route to the same series as l_pi.
TruncatedSeries l_pi_plethysm(const Partition& pi, int degree);

/// Degreewise inverse; requires constant term 1*{0}.
TruncatedSeries series_inverse(const TruncatedSeries& s);

TruncatedSeries series_product(const TruncatedSeries& s, const TruncatedSeries& t);

/// True when the two-alphabet coproduct of the truncated series equals its
/// own tensor square through the truncation degree.
bool is_group_like(const TruncatedSeries& s);

/// Cut-coproduct kernel K_pi: product over proper coproduct cuts (xi, eta) of
/// {pi} of sum_sigma ({xi} (x)_ sigma) (x) ({eta} (x)_ sigma), truncated by
/// total tensor weight.
TensorExpansion cut_coproduct_kernel(const Partition& pi, int degree);

/// Delta M_pi = (M_pi (x) M_pi) . K_pi; returns the group-like part M_pi and
/// the kernel K_pi, both truncated at `degree`.
std::pair<TruncatedSeries, TensorExpansion> series_outer_coproduct(const Partition& pi,
                                                                   int degree);

} // namespace hpi
