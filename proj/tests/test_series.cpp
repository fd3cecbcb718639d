#include "hpi/series.hpp"

#include "hpi/errors.hpp"
#include "test_util.hpp"

using namespace hpi;

namespace {

SchurExpansion S(std::initializer_list<int> parts) {
    return SchurExpansion::basis(Partition(parts));
}

TruncatedSeries named(char c, int degree) {
    return series_coeffs(SeriesId{SeriesId::Kind::Named, c, {}}, degree);
}

SchurExpansion conjugate_terms(const SchurExpansion& f) {
    SchurExpansion r;
    for (const auto& [p, c] : f.terms()) r.add(p.conjugate(), c);
    return r;
}

SchurExpansion flip_odd_weights(const SchurExpansion& f) {
    SchurExpansion r;
    for (const auto& [p, c] : f.terms()) r.add(p, p.weight() % 2 ? -c : c);
    return r;
}

} // namespace

int main() {
    // table contents
    CHECK_EQ(named('M', 3).body, SchurExpansion::unit() + S({1}) + S({2}) + S({3}));
    CHECK_EQ(named('L', 3).body,
             SchurExpansion::unit() - S({1}) + S({1, 1}) - S({1, 1, 1}));
    CHECK_EQ(named('D', 4).body,
             SchurExpansion::unit() + S({2}) + S({4}) + S({2, 2}));
    CHECK_EQ(named('V', 2).body, SchurExpansion::unit() - S({2}) + S({1, 1}));
    CHECK_EQ(named('W', 2).body, SchurExpansion::unit() + S({2}) - S({1, 1}));
    CHECK_EQ(named('Q', 3).body,
             SchurExpansion::unit() + S({1}) + S({1, 1}) + S({1, 1, 1}));
    CHECK_EQ(named('P', 3).body, SchurExpansion::unit() - S({1}) + S({2}) - S({3}));
    CHECK_EQ(named('A', 4).body, SchurExpansion::unit() - S({1, 1}) + S({2, 1, 1}));
    CHECK_EQ(named('C', 4).body, SchurExpansion::unit() - S({2}) + S({3, 1}));
    CHECK_EQ(named('B', 4).body,
             SchurExpansion::unit() + S({1, 1}) + S({2, 2}) + S({1, 1, 1, 1}));
    bool threw = false;
    try {
        SeriesId::parse("X");
    } catch (const unknown_series&) {
        threw = true;
    }
    CHECK(threw);

    // M_pi plethysm series
    CHECK_EQ(m_pi(Partition{1}, 2).body, named('M', 2).body);
    CHECK_EQ(m_pi(Partition{2}, 4).body, named('D', 4).body);
    CHECK_EQ(m_pi(Partition{1, 1}, 4).body, named('B', 4).body);
    // the weight-6 component of M_{1^3} carries a length-5 term alongside the
    // {2^3} kept by the length-restricted display
    {
        SchurExpansion m13 = m_pi(Partition{1, 1, 1}, 6).body;
        CHECK_EQ(m13, SchurExpansion::unit() + S({1, 1, 1}) + S({2, 2, 2}) +
                          S({2, 1, 1, 1, 1}));
        CHECK_EQ(m13.filtered_max_length(3),
                 SchurExpansion::unit() + S({1, 1, 1}) + S({2, 2, 2}));
    }

    // inversion
    CHECK_EQ(series_inverse(named('M', 6)).body, named('L', 6).body);
    {
        TruncatedSeries one{SchurExpansion::unit(), 4, ""};
        CHECK_EQ(series_inverse(one).body, SchurExpansion::unit());
        TruncatedSeries m13 = m_pi(Partition{1, 1, 1}, 6);
        TruncatedSeries inv = series_inverse(m13);
        CHECK_EQ(series_product(m13, inv).body, SchurExpansion::unit());
        threw = false;
        try {
            series_inverse(TruncatedSeries{S({1}), 3, ""});
        } catch (const not_invertible&) {
            threw = true;
        }
        CHECK(threw);
    }

    // L_pi
    CHECK_EQ(l_pi(Partition{1}, 3).body, named('L', 3).body);
    CHECK_EQ(l_pi(Partition{1, 1, 1}, 4).body, SchurExpansion::unit() - S({1, 1, 1}));
    CHECK_EQ(l_pi(Partition{2}, 4).body, named('C', 4).body);
    // inversion route equals the signed plethysm route, d = 8
    for (const Partition& pi : {Partition{1}, Partition{2}, Partition{1, 1},
                                Partition{3}, Partition{2, 1}, Partition{1, 1, 1}})
        CHECK_EQ(l_pi(pi, 8).body, l_pi_plethysm(pi, 8).body);

    // products
    CHECK_EQ(series_product(named('L', 6), named('M', 6)).body, SchurExpansion::unit());
    {
        TruncatedSeries a = named('A', 3);
        TruncatedSeries one{SchurExpansion::unit(), 3, ""};
        CHECK_EQ(series_product(a, one).body, a.body);
        CHECK_EQ(series_product(a, named('L', 3)).body, named('E', 3).body);
    }
    // mutually inverse named pairs, mod weight > 8
    for (auto [x, y] : {std::pair{'A', 'B'}, {'C', 'D'}, {'E', 'F'}, {'G', 'H'},
                        {'L', 'M'}, {'P', 'Q'}, {'R', 'S'}, {'V', 'W'}})
        CHECK_EQ(series_product(named(x, 8), named(y, 8)).body, SchurExpansion::unit());

    // adjoint/conjugate relations: P = conj(L), Q = L at -t = adjoint of L
    CHECK_EQ(named('P', 6).body, conjugate_terms(named('L', 6).body));
    CHECK_EQ(named('Q', 6).body, flip_odd_weights(named('L', 6).body));
    CHECK_EQ(named('P', 6).body, flip_odd_weights(named('M', 6).body));
    CHECK_EQ(named('Q', 6).body,
             series_inverse(TruncatedSeries{conjugate_terms(named('L', 6).body), 6, ""})
                 .body);

    // E lives on self-conjugate partitions; F gives every partition once
    for (const auto& [p, c] : named('E', 7).body.terms())
        CHECK(p == p.conjugate() && (c == 1 || c == -1));
    {
        const SchurExpansion f = named('F', 6).body;
        for (int k = 0; k <= 6; ++k)
            for (const Partition& p : partitions_of(k)) CHECK_EQ(f.coeff(p), 1);
    }

    // group-likeness
    CHECK(is_group_like(named('M', 6)));
    CHECK(is_group_like(named('L', 6)));
    CHECK(is_group_like(named('V', 6)));
    CHECK(!is_group_like(named('B', 6)));
    CHECK(!is_group_like(named('D', 6)));
    CHECK(!is_group_like(m_pi(Partition{1, 1, 1}, 6)));

    // kernels
    {
        TensorExpansion k1 = cut_coproduct_kernel(Partition{1}, 6);
        CHECK_EQ(k1, TensorExpansion::unit());
        CHECK_EQ(cut_coproduct_kernel(Partition{2}, 5),
                 cut_coproduct_kernel(Partition{1, 1}, 5));
        // pi = [2]: truncated Cauchy kernel sum_sigma sigma (x) sigma
        TensorExpansion cauchy;
        for (int k = 0; 2 * k <= 5; ++k)
            for (const Partition& s : partitions_of(k)) cauchy.add(s, s, 1);
        CHECK_EQ(cut_coproduct_kernel(Partition{2}, 5), cauchy);
    }
    // Delta M_pi = (M_pi (x) M_pi) . K_pi, against the directly computed
    // coproduct of the truncated series
    for (const Partition& pi : {Partition{2}, Partition{1, 1}, Partition{3},
                                Partition{2, 1}, Partition{1, 1, 1}}) {
        int d = 6;
        auto [mpi, kernel] = series_outer_coproduct(pi, d);
        TensorExpansion square;
        for (const auto& [a, ca] : mpi.body.terms())
            for (const auto& [b, cb] : mpi.body.terms())
                if (a.weight() + b.weight() <= d) square.add(a, b, ca * cb);
        TensorExpansion lhs = outer_coproduct(mpi.body).truncated(d);
        CHECK_EQ(lhs, square.product(kernel, d));
    }

    // parsing and labels
    CHECK_EQ(SeriesId::parse("Mpi:[1,1,1]").str(), "Mpi:[1,1,1]");
    CHECK_EQ(SeriesId::parse("Lpi:[2]").str(), "Lpi:[2]");
    CHECK_EQ(SeriesId::parse("V").str(), "V");

    return testutil::finish("test_series");
}
