#include "hpi/oracle.hpp"

#include "hpi/errors.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

namespace hpi {
namespace oracle {

namespace {

// Semistandard fillings of `shape` with entries in 1..n; `visit` receives the
// full entry matrix once per tableau.
void for_each_ssyt(const Partition& shape, int n,
                   const std::function<void(const std::vector<std::vector<int>>&)>& visit) {
    if (shape.length() == 0) {
        visit({});
        return;
    }
    std::vector<std::vector<int>> t(shape.length());
    for (int r = 0; r < shape.length(); ++r) t[r].assign(shape.parts()[r], 0);
    std::function<void(int, int)> rec = [&](int r, int c) {
        if (r == shape.length()) {
            visit(t);
            return;
        }
        int nr = r, nc = c + 1;
        if (nc >= shape.parts()[r]) {
            nr = r + 1;
            nc = 0;
        }
        int lo = 1;
        if (c > 0) lo = std::max(lo, t[r][c - 1]);
        if (r > 0 && c < shape.parts()[r - 1]) lo = std::max(lo, t[r - 1][c] + 1);
        for (int v = lo; v <= n; ++v) {
            t[r][c] = v;
            rec(nr, nc);
        }
        t[r][c] = 0;
    };
    rec(0, 0);
}

void add_term(MonomialPoly& p, const std::vector<int>& e, Int c) {
    if (c == 0) return;
    auto [it, inserted] = p.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) p.erase(it);
    }
}

int degree_of(const std::vector<int>& e) {
    int d = 0;
    for (int x : e) d += x;
    return d;
}

} // namespace

MonomialPoly expand_in_variables(const SchurExpansion& f, int n) {
    MonomialPoly out;
    for (const auto& [lambda, c] : f.terms()) {
        if (lambda.length() > n) continue;
        for_each_ssyt(lambda, n, [&](const std::vector<std::vector<int>>& t) {
            std::vector<int> e(n, 0);
            for (const auto& row : t)
                for (int v : row) ++e[v - 1];
            add_term(out, e, c);
        });
    }
    return out;
}

SchurExpansion schur_decompose(const MonomialPoly& p, int n) {
    // Orbit check: coefficients must be constant on permutation orbits, and
    // every rearrangement of an exponent vector must be present.
    std::map<std::vector<int>, std::pair<Int, Int>> orbits; // sorted -> (coeff, count)
    for (const auto& [e, c] : p) {
        std::vector<int> key = e;
        std::sort(key.rbegin(), key.rend());
        auto [it, inserted] = orbits.emplace(key, std::make_pair(c, 1));
        if (!inserted) {
            if (it->second.first != c) throw not_symmetric("coefficients differ on an orbit");
            ++it->second.second;
        }
    }
    for (const auto& [key, info] : orbits) {
        Int perms = 1;
        for (int i = 1; i <= n; ++i) perms *= i;
        std::map<int, int> mult;
        for (int v : key) ++mult[v];
        for (const auto& [v, m] : mult)
            for (int i = 1; i <= m; ++i) perms /= i;
        if (perms != info.second) throw not_symmetric("incomplete permutation orbit");
    }

    MonomialPoly rest = p;
    SchurExpansion out;
    while (!rest.empty()) {
        auto lead = std::max_element(rest.begin(), rest.end(),
                                     [](const auto& a, const auto& b) { return a.first < b.first; });
        std::vector<int> e = lead->first;
        Int c = lead->second;
        for (std::size_t i = 1; i < e.size(); ++i)
            if (e[i - 1] < e[i]) throw internal_error("leading exponent not a partition");
        Partition lambda(std::vector<int>(e.begin(), e.end()));
        out.add(lambda, c);
        MonomialPoly sub = expand_in_variables(SchurExpansion::basis(lambda, c), n);
        for (const auto& [k, v] : sub) add_term(rest, k, -v);
    }
    return out;
}

namespace {

// Exponent vectors packed four bits per variable; valid while every exponent
// stays below 16 and n <= 16.
uint64_t pack_exponents(const std::vector<int>& e) {
    uint64_t key = 0;
    for (std::size_t i = 0; i < e.size(); ++i) key |= static_cast<uint64_t>(e[i]) << (4 * i);
    return key;
}

std::vector<int> unpack_exponents(uint64_t key, int n) {
    std::vector<int> e(n);
    for (int i = 0; i < n; ++i) e[i] = static_cast<int>((key >> (4 * i)) & 0xF);
    return e;
}

} // namespace

SchurExpansion plethysm_oracle(const Partition& lambda, const Partition& mu, int n) {
    int need = lambda.weight() * mu.weight();
    if (n < need) throw error("plethysm oracle needs n >= |lambda|*|mu|");
    if (n > 16 || need > 15) throw error("plethysm oracle packing limit exceeded");

    // Monomials of s_lambda, with multiplicity, packed.
    std::vector<uint64_t> ys;
    for_each_ssyt(lambda, n, [&](const std::vector<std::vector<int>>& t) {
        std::vector<int> e(n, 0);
        for (const auto& row : t)
            for (int v : row) ++e[v - 1];
        ys.push_back(pack_exponents(e));
    });
    int m = static_cast<int>(ys.size());

    std::unordered_map<uint64_t, Int> acc;
    if (mu.length() == 0) {
        acc[0] += 1;
    } else {
        // Inline SSYT walk over the alphabet of monomials, keeping the packed
        // exponent sum incrementally.
        std::vector<std::vector<int>> t(mu.length());
        for (int r = 0; r < mu.length(); ++r) t[r].assign(mu.parts()[r], 0);
        uint64_t sum = 0;
        std::function<void(int, int)> rec = [&](int r, int c) {
            if (r == mu.length()) {
                acc[sum] += 1;
                return;
            }
            int nr = r, nc = c + 1;
            if (nc >= mu.parts()[r]) {
                nr = r + 1;
                nc = 0;
            }
            int lo = 1;
            if (c > 0) lo = std::max(lo, t[r][c - 1]);
            if (r > 0 && c < mu.parts()[r - 1]) lo = std::max(lo, t[r - 1][c] + 1);
            for (int v = lo; v <= m; ++v) {
                t[r][c] = v;
                sum += ys[v - 1];
                rec(nr, nc);
                sum -= ys[v - 1];
            }
            t[r][c] = 0;
        };
        rec(0, 0);
    }

    MonomialPoly poly;
    for (const auto& [key, c] : acc) add_term(poly, unpack_exponents(key, n), c);
    return schur_decompose(poly, n);
}

MonomialPoly poly_mul(const MonomialPoly& a, const MonomialPoly& b, int n,
                      int max_degree) {
    MonomialPoly out;
    for (const auto& [ea, ca] : a) {
        int da = degree_of(ea);
        for (const auto& [eb, cb] : b) {
            if (max_degree >= 0 && da + degree_of(eb) > max_degree) continue;
            std::vector<int> e(n);
            for (int i = 0; i < n; ++i) e[i] = ea[i] + eb[i];
            add_term(out, e, ca * cb);
        }
    }
    return out;
}

namespace {

// Multiply by (1 + s*x^mono) or its inverse, truncated.
void apply_factor(MonomialPoly& p, const std::vector<int>& mono, int s, bool inverted,
                  int n, int degree) {
    int d = degree_of(mono);
    if (d == 0 || d > degree) {
        if (!inverted && d > degree) return;
        if (inverted && d > degree) return;
    }
    MonomialPoly out;
    if (!inverted) {
        out = p;
        for (const auto& [e, c] : p) {
            if (degree_of(e) + d > degree) continue;
            std::vector<int> ne(n);
            for (int i = 0; i < n; ++i) ne[i] = e[i] + mono[i];
            add_term(out, ne, s * c);
        }
    } else {
        // geometric series: (1 + s y)^{-1} = sum (-s)^k y^k
        for (const auto& [e, c] : p) {
            std::vector<int> ne = e;
            Int coeff = c;
            int deg = degree_of(e);
            for (int k = 0; deg + k * d <= degree; ++k) {
                add_term(out, ne, coeff);
                if (d == 0) break;
                for (int i = 0; i < n; ++i) ne[i] += mono[i];
                coeff *= -s;
            }
        }
    }
    p = std::move(out);
}

struct Factor {
    std::vector<int> mono;
    int sign;
    bool inverted;
};

void primitive_factors(char name, int n, std::vector<Factor>& out) {
    auto var = [&](int i) {
        std::vector<int> e(n, 0);
        e[i] = 1;
        return e;
    };
    auto pair_mono = [&](int i, int j) {
        std::vector<int> e(n, 0);
        ++e[i];
        ++e[j];
        return e;
    };
    switch (name) {
        case 'L':
            for (int i = 0; i < n; ++i) out.push_back({var(i), -1, false});
            break;
        case 'M':
            for (int i = 0; i < n; ++i) out.push_back({var(i), -1, true});
            break;
        case 'Q':
            for (int i = 0; i < n; ++i) out.push_back({var(i), 1, false});
            break;
        case 'P':
            for (int i = 0; i < n; ++i) out.push_back({var(i), 1, true});
            break;
        case 'A':
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) out.push_back({pair_mono(i, j), -1, false});
            break;
        case 'B':
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) out.push_back({pair_mono(i, j), -1, true});
            break;
        case 'C':
            for (int i = 0; i < n; ++i)
                for (int j = i; j < n; ++j) out.push_back({pair_mono(i, j), -1, false});
            break;
        case 'D':
            for (int i = 0; i < n; ++i)
                for (int j = i; j < n; ++j) out.push_back({pair_mono(i, j), -1, true});
            break;
        case 'V':
            for (int i = 0; i < n; ++i) out.push_back({pair_mono(i, i), -1, false});
            break;
        case 'W':
            for (int i = 0; i < n; ++i) out.push_back({pair_mono(i, i), -1, true});
            break;
        case 'E': primitive_factors('L', n, out); primitive_factors('A', n, out); break;
        case 'F': primitive_factors('M', n, out); primitive_factors('B', n, out); break;
        case 'G': primitive_factors('Q', n, out); primitive_factors('A', n, out); break;
        case 'H': primitive_factors('P', n, out); primitive_factors('B', n, out); break;
        case 'R': primitive_factors('L', n, out); primitive_factors('P', n, out); break;
        case 'S': primitive_factors('M', n, out); primitive_factors('Q', n, out); break;
        default: throw unknown_series(std::string("unknown series '") + name + "'");
    }
}

} // namespace

MonomialPoly series_product_oracle(const SeriesId& id, int n, int degree) {
    std::vector<Factor> factors;
    if (id.kind == SeriesId::Kind::Named) {
        primitive_factors(id.name, n, factors);
    } else {
        // M_pi / L_pi: one factor per monomial of s_pi.
        bool inverted = id.kind == SeriesId::Kind::Mpi;
        for_each_ssyt(id.pi, n, [&](const std::vector<std::vector<int>>& t) {
            std::vector<int> e(n, 0);
            for (const auto& row : t)
                for (int v : row) ++e[v - 1];
            factors.push_back({e, -1, inverted});
        });
    }
    MonomialPoly p;
    p.emplace(std::vector<int>(n, 0), 1);
    for (const auto& f : factors) apply_factor(p, f.mono, f.sign, f.inverted, n, degree);
    return p;
}

TensorExpansion coproduct_oracle(const SchurExpansion& f, int m, int n) {
    return decompose_two_alphabet(expand_in_variables(f, m + n), m, n);
}

TensorExpansion decompose_two_alphabet(const MonomialPoly& poly, int m, int n) {
    MonomialPoly p = poly;
    TensorExpansion out;
    while (!p.empty()) {
        // Leading y-part across the remaining terms.
        std::vector<int> ey;
        for (const auto& [e, c] : p) {
            std::vector<int> y(e.begin() + m, e.end());
            if (ey.empty() || y > ey) ey = y;
        }
        for (std::size_t i = 1; i < ey.size(); ++i)
            if (ey[i - 1] < ey[i]) throw internal_error("leading y-exponent not a partition");
        Partition eta{std::vector<int>(ey.begin(), ey.end())};

        MonomialPoly qx;
        for (const auto& [e, c] : p) {
            if (!std::equal(e.begin() + m, e.end(), ey.begin())) continue;
            add_term(qx, std::vector<int>(e.begin(), e.begin() + m), c);
        }
        SchurExpansion xs = schur_decompose(qx, m);
        MonomialPoly ye = expand_in_variables(SchurExpansion::basis(eta), n);
        for (const auto& [xi, c] : xs.terms()) {
            out.add(xi, eta, c);
            MonomialPoly xe = expand_in_variables(SchurExpansion::basis(xi, c), m);
            for (const auto& [ex, cx] : xe)
                for (const auto& [eyv, cy] : ye) {
                    std::vector<int> e(m + n);
                    std::copy(ex.begin(), ex.end(), e.begin());
                    std::copy(eyv.begin(), eyv.end(), e.begin() + m);
                    add_term(p, e, -cx * cy);
                }
        }
    }
    return out;
}

} // namespace oracle
} // namespace hpi
