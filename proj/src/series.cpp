#include "hpi/series.hpp"

#include "hpi/errors.hpp"

#include <array>

namespace hpi {

SeriesId SeriesId::parse(const std::string& text) {
    static const std::string named = "LMPQABCDEFGHRSVW";
    if (text.size() == 1 && named.find(text[0]) != std::string::npos)
        return SeriesId{Kind::Named, text[0], {}};
    if (text.rfind("Mpi:", 0) == 0)
        return SeriesId{Kind::Mpi, 'M', Partition::parse(text.substr(4))};
    if (text.rfind("Lpi:", 0) == 0)
        return SeriesId{Kind::Lpi, 'L', Partition::parse(text.substr(4))};
    throw unknown_series("unknown series '" + text + "'");
}

std::string SeriesId::str() const {
    switch (kind) {
        case Kind::Named: return std::string(1, name);
        case Kind::Mpi: return "Mpi:" + pi.to_bracket();
        case Kind::Lpi: return "Lpi:" + pi.to_bracket();
    }
    return {};
}

namespace {

SchurExpansion content_L(int degree, bool signs) {
    SchurExpansion f;
    for (int m = 0; m <= degree; ++m)
        f.add(Partition(std::vector<int>(m, 1)), signs && m % 2 ? -1 : 1);
    return f;
}

SchurExpansion content_M(int degree, bool signs) {
    SchurExpansion f;
    f.add({}, 1);
    for (int m = 1; m <= degree; ++m) f.add({m}, signs && m % 2 ? -1 : 1);
    return f;
}

// Partitions with Frobenius legs = arms + 1 (the A series support); the
// conjugates form the C series support. Sign is (-1)^(weight/2).
void frobenius_family(int degree, bool conj, SchurExpansion& out) {
    std::vector<int> arms;
    std::function<void(int, int)> rec = [&](int next_max, int weight) {
        if (!arms.empty()) {
            std::vector<int> legs(arms.size());
            for (std::size_t i = 0; i < arms.size(); ++i) legs[i] = arms[i] + 1;
            Partition p = Partition::from_frobenius(arms, legs);
            if (conj) p = p.conjugate();
            out.add(p, (weight / 2) % 2 ? -1 : 1);
        } else {
            out.add({}, 1);
        }
        for (int a = next_max; a >= 0; --a) {
            int extra = 2 * a + 2;
            if (weight + extra > degree) continue;
            arms.push_back(a);
            rec(a - 1, weight + extra);
            arms.pop_back();
        }
    };
    rec((degree - 2) / 2, 0);
}

SchurExpansion content_A(int degree) {
    SchurExpansion f;
    frobenius_family(degree, false, f);
    return f;
}

SchurExpansion content_C(int degree) {
    SchurExpansion f;
    frobenius_family(degree, true, f);
    return f;
}

// All parts even (the D series); conjugates (doubled multiplicities) give B.
SchurExpansion content_D(int degree, bool conj) {
    SchurExpansion f;
    for (int w = 0; 2 * w <= degree; ++w)
        for (const Partition& kappa : partitions_of(w)) {
            std::vector<int> parts = kappa.parts();
            for (int& p : parts) p *= 2;
            Partition dbl(std::move(parts));
            f.add(conj ? dbl.conjugate() : dbl, 1);
        }
    return f;
}

SchurExpansion content_V(int degree, bool inverse) {
    SchurExpansion f;
    for (int p = 0; 2 * p <= degree; ++p)
        for (int q = 0; 2 * (p + q) <= degree; ++q) {
            std::vector<int> parts;
            if (p + 2 * q > 0) parts.push_back(p + 2 * q);
            if (p > 0) parts.push_back(p);
            Partition row(std::move(parts));
            f.add(inverse ? row : row.conjugate(), p % 2 ? -1 : 1);
        }
    return f;
}

} // namespace

TruncatedSeries series_coeffs(const SeriesId& id, int degree) {
    if (degree < 0) throw error("series degree must be nonnegative");
    if (id.kind == SeriesId::Kind::Mpi) return m_pi(id.pi, degree);
    if (id.kind == SeriesId::Kind::Lpi) return l_pi(id.pi, degree);

    auto named = [&](char n) { return series_coeffs(SeriesId{SeriesId::Kind::Named, n, {}}, degree); };
    TruncatedSeries s;
    s.degree = degree;
    s.label = std::string(1, id.name);
    switch (id.name) {
        case 'L': s.body = content_L(degree, true); return s;
        case 'Q': s.body = content_L(degree, false); return s;
        case 'M': s.body = content_M(degree, false); return s;
        case 'P': s.body = content_M(degree, true); return s;
        case 'A': s.body = content_A(degree); return s;
        case 'C': s.body = content_C(degree); return s;
        case 'D': s.body = content_D(degree, false); return s;
        case 'B': s.body = content_D(degree, true); return s;
        case 'V': s.body = content_V(degree, false); return s;
        case 'W': s.body = content_V(degree, true); return s;
        case 'E': s = series_product(named('L'), named('A')); break;
        case 'F': s = series_product(named('M'), named('B')); break;
        case 'G': s = series_product(named('Q'), named('A')); break;
        case 'H': s = series_product(named('P'), named('B')); break;
        case 'R': s = series_product(named('L'), named('P')); break;
        case 'S': s = series_product(named('M'), named('Q')); break;
        default: throw unknown_series(std::string("unknown series '") + id.name + "'");
    }
    s.label = std::string(1, id.name);
    return s;
}

TruncatedSeries m_pi(const Partition& pi, int degree) {
    if (pi.empty()) throw error("m_pi requires a nonempty pi");
    TruncatedSeries s;
    s.degree = degree;
    s.label = "Mpi:" + pi.to_bracket();
    int w = pi.weight();
    for (int m = 0; m * w <= degree; ++m)
        s.body += plethysm_basis(pi, Partition{std::vector<int>(m ? 1 : 0, m)});
    return s;
}

TruncatedSeries series_inverse(const TruncatedSeries& s) {
    SchurExpansion unit = SchurExpansion::unit();
    if (s.body.component(0) != unit)
        throw not_invertible("series constant term must be 1*{0}");
    std::vector<SchurExpansion> t(s.degree + 1);
    t[0] = unit;
    SchurExpansion acc = unit;
    for (int k = 1; k <= s.degree; ++k) {
        SchurExpansion sum;
        for (int j = 1; j <= k; ++j)
            sum += outer_product(s.body.component(j), t[k - j], s.degree);
        t[k] = -sum.component(k);
    }
    TruncatedSeries r;
    r.degree = s.degree;
    r.label = s.label.empty() ? "" : s.label + "^-1";
    for (int k = 0; k <= s.degree; ++k) r.body += t[k];
    return r;
}

TruncatedSeries l_pi(const Partition& pi, int degree) {
    TruncatedSeries r = series_inverse(m_pi(pi, degree));
    r.label = "Lpi:" + pi.to_bracket();
    return r;
}

TruncatedSeries l_pi_plethysm(const Partition& pi, int degree) {
    if (pi.empty()) throw error("l_pi requires a nonempty pi");
    TruncatedSeries s;
    s.degree = degree;
    s.label = "Lpi:" + pi.to_bracket();
    int w = pi.weight();
    for (int m = 0; m * w <= degree; ++m) {
        Partition col(std::vector<int>(m, 1));
        s.body += plethysm_basis(pi, col) * (m % 2 ? -1 : 1);
    }
    return s;
}

TruncatedSeries series_product(const TruncatedSeries& s, const TruncatedSeries& t) {
    TruncatedSeries r;
    r.degree = std::min(s.degree, t.degree);
    r.body = outer_product(s.body.truncated(r.degree), t.body.truncated(r.degree),
                           r.degree);
    return r;
}

bool is_group_like(const TruncatedSeries& s) {
    TensorExpansion lhs = outer_coproduct(s.body).truncated(s.degree);
    TensorExpansion rhs;
    for (const auto& [a, ca] : s.body.terms())
        for (const auto& [b, cb] : s.body.terms())
            if (a.weight() + b.weight() <= s.degree) rhs.add(a, b, ca * cb);
    return lhs == rhs;
}

TensorExpansion cut_coproduct_kernel(const Partition& pi, int degree) {
    TensorExpansion kernel = TensorExpansion::unit();
    if (pi.empty()) return kernel;
    TensorExpansion cuts = outer_coproduct(SchurExpansion::basis(pi));
    int w = pi.weight();
    for (const auto& [xieta, mult] : cuts.terms()) {
        const auto& [xi, eta] = xieta;
        if (xi.empty() || eta.empty()) continue; // proper cuts only
        TensorExpansion factor;
        for (int m = 0; m * w <= degree; ++m)
            for (const Partition& sigma : partitions_of(m)) {
                const SchurExpansion& left = plethysm_basis(xi, sigma);
                const SchurExpansion& right = plethysm_basis(eta, sigma);
                for (const auto& [pl, cl] : left.terms())
                    for (const auto& [pr, cr] : right.terms())
                        factor.add(pl, pr, cl * cr);
            }
        for (Int k = 0; k < mult; ++k) kernel = kernel.product(factor, degree);
    }
    return kernel;
}

std::pair<TruncatedSeries, TensorExpansion> series_outer_coproduct(const Partition& pi,
                                                                   int degree) {
    return {m_pi(pi, degree), cut_coproduct_kernel(pi, degree)};
}

} // namespace hpi
