#include "hpi/branching.hpp"

#include "hpi/errors.hpp"
#include "hpi/modify.hpp"

namespace hpi {

Int FormalCharacter::coeff(const Partition& mu, int eps) const {
    auto it = terms_.find(Key{eps, mu});
    return it == terms_.end() ? 0 : it->second;
}

void FormalCharacter::add(const Partition& mu, Int c, int eps) {
    if (c == 0) return;
    if (eps != 0 && !n_)
        throw internal_error("eps powers require the dimension n to be set");
    auto [it, inserted] = terms_.emplace(Key{eps, mu}, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

FormalCharacter& FormalCharacter::operator+=(const FormalCharacter& o) {
    for (const auto& [k, c] : o.terms_) add(k.mu, c, k.eps);
    return *this;
}

namespace {

std::string render_terms(const FormalCharacter& f, const char* open,
                         const char* close, bool with_dims, bool spaces) {
    if (f.is_zero()) return "0";
    std::string out;
    for (const auto& [key, c] : f.terms()) {
        Int a = c < 0 ? -c : c;
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += spaces ? (c < 0 ? " - " : " + ") : (c < 0 ? "-" : "+");
        }
        if (a != 1) out += std::to_string(a);
        if (key.eps == 1) out += "e";
        else if (key.eps > 1) out += "e^" + std::to_string(key.eps);
        out += open + key.mu.paper_label() + close;
        if (with_dims && f.n())
            out += "_" + std::to_string(dim_formal(key.mu, f.pi(), *f.n()));
    }
    return out;
}

} // namespace

std::string FormalCharacter::str(bool with_dims) const {
    return render_terms(*this, "((", "))", with_dims, true);
}

std::string FormalCharacter::paper_str(bool with_dims) const {
    if (pi_ == Partition{2}) return render_terms(*this, "[", "]", with_dims, false);
    if (pi_ == Partition{1, 1}) return render_terms(*this, "<", ">", with_dims, false);
    return render_terms(*this, "((", "))", with_dims, false);
}

FormalCharacter branch_gl_to_hpi(const Partition& lambda, const Partition& pi,
                                 std::optional<int> n) {
    if (pi.empty()) throw error("branching requires a nonempty pi");
    FormalCharacter out(pi, n);
    SchurExpansion skewed =
        skew_by(SchurExpansion::basis(lambda), m_pi(pi, lambda.weight()).body);
    for (const auto& [mu, c] : skewed.terms()) out.add(mu, c);
    return out;
}

SchurExpansion lift_hpi_to_gl(const Partition& mu, const Partition& pi) {
    if (pi.empty()) throw error("branching requires a nonempty pi");
    return skew_by(SchurExpansion::basis(mu), l_pi(pi, mu.weight()).body);
}

SchurExpansion skew_product_by_series(const Partition& mu, const Partition& nu,
                                      const TruncatedSeries& z) {
    if (z.degree < mu.weight() + nu.weight())
        throw error("series truncated below |mu|+|nu|");
    return skew_by(lr_product(mu, nu), z.body);
}

SchurExpansion skew_product_by_series_via_coproduct(const Partition& mu,
                                                    const Partition& nu,
                                                    const TruncatedSeries& z) {
    if (z.degree < mu.weight() + nu.weight())
        throw error("series truncated below |mu|+|nu|");
    SchurExpansion out;
    TensorExpansion cz = outer_coproduct(z.body);
    SchurExpansion smu = SchurExpansion::basis(mu);
    SchurExpansion snu = SchurExpansion::basis(nu);
    for (const auto& [st, c] : cz.terms()) {
        if (st.first.weight() > mu.weight() || st.second.weight() > nu.weight())
            continue;
        SchurExpansion left = skew_by(smu, SchurExpansion::basis(st.first));
        if (left.is_zero()) continue;
        SchurExpansion right = skew_by(snu, SchurExpansion::basis(st.second));
        out += outer_product(left, right) * c;
    }
    return out;
}

FormalCharacter product_hpi(const Partition& mu, const Partition& nu,
                            const Partition& pi, std::optional<int> n) {
    if (pi.empty()) throw error("branching requires a nonempty pi");
    SchurExpansion up = outer_product(lift_hpi_to_gl(mu, pi), lift_hpi_to_gl(nu, pi));
    FormalCharacter out(pi, n);
    int degree = mu.weight() + nu.weight();
    SchurExpansion mpi = m_pi(pi, degree).body;
    for (const auto& [lambda, c] : up.terms()) {
        SchurExpansion skewed = skew_by(SchurExpansion::basis(lambda), mpi);
        for (const auto& [rho, d] : skewed.terms()) out.add(rho, c * d);
    }
    return out;
}

FormalCharacter product_hpi_kernel(const Partition& mu, const Partition& nu,
                                   const Partition& pi, std::optional<int> n) {
    if (pi.empty()) throw error("branching requires a nonempty pi");
    FormalCharacter out(pi, n);
    TensorExpansion kernel = cut_coproduct_kernel(pi, mu.weight() + nu.weight());
    SchurExpansion smu = SchurExpansion::basis(mu);
    SchurExpansion snu = SchurExpansion::basis(nu);
    for (const auto& [uv, c] : kernel.terms()) {
        if (uv.first.weight() > mu.weight() || uv.second.weight() > nu.weight())
            continue;
        SchurExpansion left = skew_by(smu, SchurExpansion::basis(uv.first));
        if (left.is_zero()) continue;
        SchurExpansion right = skew_by(snu, SchurExpansion::basis(uv.second));
        SchurExpansion prod = outer_product(left, right);
        for (const auto& [rho, d] : prod.terms()) out.add(rho, c * d);
    }
    return out;
}

SchurExpansion branch_gl_to_gl_minus_one(const Partition& lambda) {
    SchurExpansion out;
    FormalCharacter f = branch_gl_to_hpi(lambda, Partition{1});
    for (const auto& [key, c] : f.terms()) out.add(key.mu, c);
    return out;
}

Int pi_scalar_product(const Partition& x, const Partition& y, const Partition& pi) {
    if (pi == Partition{1})
        return (x.empty() && y.empty()) ? 1 : 0;
    if (pi == Partition{2} || pi == Partition{1, 1})
        return x == y ? 1 : 0;
    if (pi == Partition{1, 1, 1}) {
        Partition e2{1, 1};
        TensorExpansion dx = outer_coproduct(SchurExpansion::basis(x));
        TensorExpansion dy = outer_coproduct(SchurExpansion::basis(y));
        Int total = 0;
        for (const auto& [xab, cx] : dx.terms()) {
            for (const auto& [yab, cy] : dy.terms()) {
                // <x1 | e2 (x)_ y1> <e2 (x)_ x2 | y2>
                if (xab.first.weight() != 2 * yab.first.weight()) continue;
                if (yab.second.weight() != 2 * xab.second.weight()) continue;
                Int a = plethysm_basis(e2, yab.first).coeff(xab.first);
                if (a == 0) continue;
                Int b = plethysm_basis(e2, xab.second).coeff(yab.second);
                total += cx * cy * a * b;
            }
        }
        return total;
    }
    throw unsupported_pi("pi-scalar product defined only for [1],[2],[1,1],[1,1,1]");
}

} // namespace hpi
