#include "hpi/schur.hpp"

#include "hpi/errors.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <sstream>

namespace hpi {

// --- SchurExpansion -------------------------------------------------------

SchurExpansion SchurExpansion::basis(const Partition& lambda, Int coeff) {
    SchurExpansion f;
    f.add(lambda, coeff);
    return f;
}

Int SchurExpansion::coeff(const Partition& lambda) const {
    auto it = terms_.find(lambda);
    return it == terms_.end() ? 0 : it->second;
}

void SchurExpansion::add(const Partition& lambda, Int c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(lambda, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

int SchurExpansion::max_weight() const {
    int w = 0;
    for (const auto& [p, c] : terms_) w = std::max(w, p.weight());
    return w;
}

SchurExpansion& SchurExpansion::operator+=(const SchurExpansion& o) {
    for (const auto& [p, c] : o.terms_) add(p, c);
    return *this;
}

SchurExpansion& SchurExpansion::operator-=(const SchurExpansion& o) {
    for (const auto& [p, c] : o.terms_) add(p, -c);
    return *this;
}

SchurExpansion SchurExpansion::operator+(const SchurExpansion& o) const {
    SchurExpansion r = *this;
    r += o;
    return r;
}

SchurExpansion SchurExpansion::operator-(const SchurExpansion& o) const {
    SchurExpansion r = *this;
    r -= o;
    return r;
}

SchurExpansion SchurExpansion::operator-() const {
    SchurExpansion r;
    for (const auto& [p, c] : terms_) r.terms_.emplace(p, -c);
    return r;
}

SchurExpansion SchurExpansion::operator*(Int c) const {
    SchurExpansion r;
    if (c == 0) return r;
    for (const auto& [p, d] : terms_) r.terms_.emplace(p, c * d);
    return r;
}

SchurExpansion SchurExpansion::truncated(int degree) const {
    SchurExpansion r;
    for (const auto& [p, c] : terms_)
        if (p.weight() <= degree) r.terms_.emplace(p, c);
    return r;
}

SchurExpansion SchurExpansion::filtered_max_length(int max_len) const {
    SchurExpansion r;
    for (const auto& [p, c] : terms_)
        if (p.length() <= max_len) r.terms_.emplace(p, c);
    return r;
}

SchurExpansion SchurExpansion::component(int k) const {
    SchurExpansion r;
    for (const auto& [p, c] : terms_)
        if (p.weight() == k) r.terms_.emplace(p, c);
    return r;
}

std::string SchurExpansion::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [p, c] : terms_) {
        Int a = c < 0 ? -c : c;
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (a != 1) out += std::to_string(a) + "*";
        out += "{" + p.run_string() + "}";
    }
    return out;
}

// --- TensorExpansion ------------------------------------------------------

bool TensorExpansion::KeyLess::operator()(
    const std::pair<Partition, Partition>& a,
    const std::pair<Partition, Partition>& b) const {
    int wa = a.first.weight() + a.second.weight();
    int wb = b.first.weight() + b.second.weight();
    if (wa != wb) return wa < wb;
    if (a.first.weight() != b.first.weight())
        return a.first.weight() > b.first.weight();
    if (a.first != b.first) return a.first.parts() > b.first.parts();
    return a.second.parts() > b.second.parts();
}

TensorExpansion TensorExpansion::unit() {
    TensorExpansion t;
    t.add({}, {}, 1);
    return t;
}

Int TensorExpansion::coeff(const Partition& l, const Partition& r) const {
    auto it = terms_.find({l, r});
    return it == terms_.end() ? 0 : it->second;
}

void TensorExpansion::add(const Partition& l, const Partition& r, Int c) {
    if (c == 0) return;
    auto key = std::make_pair(l, r);
    auto [it, inserted] = terms_.emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

TensorExpansion& TensorExpansion::operator+=(const TensorExpansion& o) {
    for (const auto& [k, c] : o.terms_) add(k.first, k.second, c);
    return *this;
}

TensorExpansion TensorExpansion::operator+(const TensorExpansion& o) const {
    TensorExpansion r = *this;
    r += o;
    return r;
}

TensorExpansion TensorExpansion::operator-(const TensorExpansion& o) const {
    TensorExpansion r = *this;
    for (const auto& [k, c] : o.terms_) r.add(k.first, k.second, -c);
    return r;
}

TensorExpansion TensorExpansion::operator*(Int c) const {
    TensorExpansion r;
    if (c == 0) return r;
    for (const auto& [k, d] : terms_) r.terms_.emplace(k, c * d);
    return r;
}

TensorExpansion TensorExpansion::product(const TensorExpansion& o, int degree) const {
    TensorExpansion r;
    for (const auto& [ka, ca] : terms_) {
        int wa = ka.first.weight() + ka.second.weight();
        for (const auto& [kb, cb] : o.terms_) {
            int wb = kb.first.weight() + kb.second.weight();
            if (degree >= 0 && wa + wb > degree) continue;
            const SchurExpansion& left = lr_product(ka.first, kb.first);
            const SchurExpansion& right = lr_product(ka.second, kb.second);
            for (const auto& [pl, cl] : left.terms())
                for (const auto& [pr, cr] : right.terms())
                    r.add(pl, pr, ca * cb * cl * cr);
        }
    }
    return r;
}

TensorExpansion TensorExpansion::truncated(int degree) const {
    TensorExpansion r;
    for (const auto& [k, c] : terms_)
        if (k.first.weight() + k.second.weight() <= degree)
            r.terms_.emplace(k, c);
    return r;
}

Int TensorExpansion::pair(const SchurExpansion& f, const SchurExpansion& g) const {
    Int s = 0;
    for (const auto& [k, c] : terms_) s += c * f.coeff(k.first) * g.coeff(k.second);
    return s;
}

std::string TensorExpansion::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : terms_) {
        Int a = c < 0 ? -c : c;
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (a != 1) out += std::to_string(a) + "*";
        out += "{" + k.first.run_string() + "}(x){" + k.second.run_string() + "}";
    }
    return out;
}

// --- Littlewood-Richardson machinery --------------------------------------

namespace {

// Adds one letter of the content as a horizontal strip. `prev_inc` carries the
// per-row box counts of the previous letter; the lattice condition is
// sum_{q<=r} inc_q <= sum_{q<=r-1} prev_inc_q.
void grow_strips(std::vector<int>& shape, const std::vector<int>& content,
                 std::size_t letter, const std::vector<int>& prev_inc,
                 std::map<Partition, Int, CanonicalLess>& out) {
    if (letter == content.size()) {
        std::vector<int> parts = shape;
        out[Partition(std::move(parts))] += 1;
        return;
    }
    int need = content[letter];
    int rows = static_cast<int>(shape.size()) + 1;
    std::vector<int> inc(rows, 0);
    // Choose increments row by row.
    std::function<void(int, int, int, int)> place =
        [&](int row, int placed, int inc_prefix, int prev_prefix) {
            if (placed == need) {
                std::vector<int> next = shape;
                if (next.size() < static_cast<std::size_t>(rows)) next.resize(rows, 0);
                for (int r = 0; r < rows; ++r) next[r] += inc[r];
                while (!next.empty() && next.back() == 0) next.pop_back();
                std::vector<int> saved;
                saved.swap(shape);
                shape = next;
                grow_strips(shape, content, letter + 1, inc, out);
                shape.swap(saved);
                return;
            }
            if (row >= rows) return;
            int cur = row < static_cast<int>(shape.size()) ? shape[row] : 0;
            int above_old = row == 0 ? need + cur : (row - 1 < static_cast<int>(shape.size()) ? shape[row - 1] : 0);
            int cap = std::min(need - placed, above_old - cur); // horizontal strip
            if (row == 0) cap = need - placed;
            int prev_here = row < static_cast<int>(prev_inc.size()) ? prev_inc[row] : 0;
            for (int d = 0; d <= cap; ++d) {
                // lattice: boxes of this letter within rows <= row+1 may not
                // outnumber boxes of the previous letter within rows <= row
                if (letter > 0 && inc_prefix + d > prev_prefix) break;
                inc[row] = d;
                place(row + 1, placed + d, inc_prefix + d, prev_prefix + prev_here);
                inc[row] = 0;
            }
        };
    place(0, 0, 0, 0);
}

std::mutex lr_mutex;
std::map<std::pair<Partition, Partition>, SchurExpansion> lr_cache;

std::mutex skew_mutex;
std::map<std::pair<Partition, Partition>, SchurExpansion> skew_cache;

std::mutex chi_mutex;
std::map<std::pair<Partition, Partition>, Int> chi_cache;

std::mutex pleth_mutex;
std::map<std::pair<Partition, Partition>, SchurExpansion> pleth_cache;

} // namespace

const SchurExpansion& lr_product(const Partition& mu, const Partition& nu) {
    std::pair<Partition, Partition> key =
        nu < mu ? std::make_pair(nu, mu) : std::make_pair(mu, nu);
    {
        std::lock_guard<std::mutex> lock(lr_mutex);
        auto it = lr_cache.find(key);
        if (it != lr_cache.end()) return it->second;
    }
    std::map<Partition, Int, CanonicalLess> counts;
    std::vector<int> shape = key.first.parts();
    grow_strips(shape, key.second.parts(), 0, {}, counts);
    SchurExpansion result;
    for (const auto& [p, c] : counts) result.add(p, c);
    std::lock_guard<std::mutex> lock(lr_mutex);
    return lr_cache.emplace(key, std::move(result)).first->second;
}

namespace {

// Enumerate LR fillings of nu/mu; every lattice content contributes one unit.
void enumerate_skew(const Partition& nu, const Partition& mu, SchurExpansion& out) {
    if (!nu.contains(mu)) return;
    struct Cell {
        int row, col;
    };
    std::vector<Cell> cells;
    for (int r = 0; r < nu.length(); ++r)
        for (int c = nu.part(r) - 1; c >= mu.part(r); --c) cells.push_back({r, c});
    int total = static_cast<int>(cells.size());
    if (total == 0) {
        out.add({}, 1);
        return;
    }
    std::vector<std::vector<int>> fill(nu.length());
    for (int r = 0; r < nu.length(); ++r) fill[r].assign(nu.part(r), 0);
    std::vector<int> count(nu.length() + 2, 0); // values never exceed the row index

    int max_value = std::min(total, nu.length());

    std::function<void(int)> rec = [&](int idx) {
        if (idx == total) {
            std::vector<int> content;
            for (int v = 1; v <= total && count[v] > 0; ++v) content.push_back(count[v]);
            out.add(Partition(std::move(content)), 1);
            return;
        }
        auto [r, c] = cells[idx];
        int hi = std::min(r + 1, max_value);
        if (c + 1 < nu.part(r)) hi = std::min(hi, fill[r][c + 1]);
        for (int v = 1; v <= hi; ++v) {
            if (r > 0 && c < nu.part(r - 1) && c >= mu.part(r - 1) && fill[r - 1][c] >= v)
                continue; // column strict against a filled cell above
            if (v > 1 && count[v] + 1 > count[v - 1]) continue; // lattice word
            fill[r][c] = v;
            ++count[v];
            rec(idx + 1);
            --count[v];
            fill[r][c] = 0;
        }
    };
    rec(0);
}

} // namespace

const SchurExpansion& skew(const Partition& nu, const Partition& mu) {
    std::pair<Partition, Partition> key{nu, mu};
    {
        std::lock_guard<std::mutex> lock(skew_mutex);
        auto it = skew_cache.find(key);
        if (it != skew_cache.end()) return it->second;
    }
    SchurExpansion result;
    enumerate_skew(nu, mu, result);
    std::lock_guard<std::mutex> lock(skew_mutex);
    return skew_cache.emplace(key, std::move(result)).first->second;
}

// --- Murnaghan-Nakayama via beta-numbers -----------------------------------

namespace {

Int chi_impl(const Partition& lambda, const Partition& rho) {
    if (lambda.weight() != rho.weight()) return 0;
    if (rho.empty()) return 1;
    std::pair<Partition, Partition> key{lambda, rho};
    {
        std::lock_guard<std::mutex> lock(chi_mutex);
        auto it = chi_cache.find(key);
        if (it != chi_cache.end()) return it->second;
    }
    int r = rho.parts()[0];
    std::vector<int> rest(rho.parts().begin() + 1, rho.parts().end());
    Partition rho_rest(std::move(rest));

    int k = lambda.length();
    std::vector<int> beta(k);
    for (int i = 0; i < k; ++i) beta[i] = lambda.parts()[i] + (k - 1 - i);

    Int total = 0;
    for (int i = 0; i < k; ++i) {
        int target = beta[i] - r;
        if (target < 0) continue;
        bool clash = false;
        int height = 0;
        for (int j = 0; j < k; ++j) {
            if (j == i) continue;
            if (beta[j] == target) clash = true;
            if (beta[j] > target && beta[j] < beta[i]) ++height;
        }
        if (clash) continue;
        std::vector<int> nb = beta;
        nb[i] = target;
        std::sort(nb.rbegin(), nb.rend());
        std::vector<int> parts(k);
        for (int j = 0; j < k; ++j) parts[j] = nb[j] - (k - 1 - j);
        Int sub = chi_impl(Partition(std::move(parts)), rho_rest);
        total += (height % 2 ? -sub : sub);
    }
    std::lock_guard<std::mutex> lock(chi_mutex);
    return chi_cache.emplace(key, total).first->second;
}

} // namespace

Int sn_character(const Partition& lambda, const Partition& rho) {
    return chi_impl(lambda, rho);
}

// --- ring / Hopf operations ------------------------------------------------

SchurExpansion outer_product(const SchurExpansion& f, const SchurExpansion& g,
                             int degree) {
    SchurExpansion r;
    for (const auto& [pf, cf] : f.terms()) {
        for (const auto& [pg, cg] : g.terms()) {
            if (degree >= 0 && pf.weight() + pg.weight() > degree) continue;
            const SchurExpansion& prod = lr_product(pf, pg);
            for (const auto& [p, c] : prod.terms()) r.add(p, cf * cg * c);
        }
    }
    return r;
}

SchurExpansion skew_by(const SchurExpansion& f, const SchurExpansion& g) {
    SchurExpansion r;
    for (const auto& [pf, cf] : f.terms()) {
        for (const auto& [pg, cg] : g.terms()) {
            if (pg.weight() > pf.weight()) continue;
            const SchurExpansion& sk = skew(pf, pg);
            for (const auto& [p, c] : sk.terms()) r.add(p, cf * cg * c);
        }
    }
    return r;
}

Int scalar(const SchurExpansion& f, const SchurExpansion& g) {
    Int s = 0;
    const SchurExpansion& small = f.terms().size() <= g.terms().size() ? f : g;
    const SchurExpansion& big = &small == &f ? g : f;
    for (const auto& [p, c] : small.terms()) s += c * big.coeff(p);
    return s;
}

namespace {

void each_subpartition(const Partition& lambda,
                       const std::function<void(const Partition&)>& fn) {
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int row, int upper) {
        if (row == lambda.length()) {
            std::vector<int> parts = cur;
            fn(Partition(std::move(parts)));
            return;
        }
        int hi = std::min(upper, lambda.parts()[row]);
        for (int v = hi; v >= 0; --v) {
            cur.push_back(v);
            rec(row + 1, v);
            cur.pop_back();
        }
    };
    rec(0, lambda.empty() ? 0 : lambda.parts()[0]);
}

} // namespace

TensorExpansion outer_coproduct(const SchurExpansion& f) {
    TensorExpansion t;
    for (const auto& [lambda, c] : f.terms()) {
        each_subpartition(lambda, [&](const Partition& mu) {
            const SchurExpansion& sk = skew(lambda, mu);
            for (const auto& [nu, d] : sk.terms()) t.add(mu, nu, c * d);
        });
    }
    return t;
}

PowerExpansion schur_to_power(const SchurExpansion& f) {
    PowerExpansion out;
    for (const auto& [lambda, c] : f.terms()) {
        for (const Partition& rho : partitions_of(lambda.weight())) {
            Int chi = sn_character(lambda, rho);
            if (chi == 0) continue;
            Rational coeff = Rational(c) * chi / z_of(rho);
            auto [it, inserted] = out.emplace(rho, coeff);
            if (!inserted) {
                it->second += coeff;
                if (it->second == 0) out.erase(it);
            }
        }
    }
    return out;
}

SchurExpansion power_to_schur(const PowerExpansion& p) {
    std::map<int, std::vector<std::pair<Partition, Rational>>> by_weight;
    for (const auto& [rho, c] : p)
        if (c != 0) by_weight[rho.weight()].push_back({rho, c});
    SchurExpansion out;
    for (const auto& [w, terms] : by_weight) {
        for (const Partition& lambda : partitions_of(w)) {
            Rational coeff = 0;
            for (const auto& [rho, c] : terms)
                coeff += c * sn_character(lambda, rho);
            if (coeff == 0) continue;
            if (boost::multiprecision::denominator(coeff) != 1)
                throw internal_error("non-integer Schur coefficient from power sums");
            out.add(lambda, static_cast<Int>(boost::multiprecision::numerator(coeff)));
        }
    }
    return out;
}

SchurExpansion inner_product(const SchurExpansion& f, const SchurExpansion& g) {
    std::map<int, bool> weights;
    for (const auto& [p, c] : f.terms()) weights[p.weight()] = true;
    SchurExpansion out;
    for (const auto& [w, _] : weights) {
        SchurExpansion gw = g.component(w);
        if (gw.is_zero()) continue;
        PowerExpansion fp = schur_to_power(f.component(w));
        PowerExpansion gp = schur_to_power(gw);
        PowerExpansion hp;
        for (const auto& [rho, a] : fp) {
            auto it = gp.find(rho);
            if (it == gp.end()) continue;
            Rational v = a * it->second * z_of(rho);
            if (v != 0) hp.emplace(rho, v);
        }
        out += power_to_schur(hp);
    }
    return out;
}

TensorExpansion inner_coproduct(const SchurExpansion& f) {
    TensorExpansion t;
    for (const auto& [lambda, c] : f.terms()) {
        for (const Partition& mu : partitions_of(lambda.weight())) {
            SchurExpansion kron =
                inner_product(SchurExpansion::basis(lambda), SchurExpansion::basis(mu));
            for (const auto& [nu, d] : kron.terms()) t.add(mu, nu, c * d);
        }
    }
    return t;
}

SchurExpansion antipode(const SchurExpansion& f) {
    SchurExpansion r;
    for (const auto& [p, c] : f.terms())
        r.add(p.conjugate(), p.weight() % 2 ? -c : c);
    return r;
}

Int counit(const SchurExpansion& f) { return f.coeff({}); }

// --- plethysm ---------------------------------------------------------------

namespace {

PowerExpansion power_multiply(const PowerExpansion& a, const PowerExpansion& b) {
    PowerExpansion out;
    for (const auto& [ra, ca] : a) {
        for (const auto& [rb, cb] : b) {
            std::vector<int> parts = ra.parts();
            parts.insert(parts.end(), rb.parts().begin(), rb.parts().end());
            std::sort(parts.rbegin(), parts.rend());
            Partition key(std::move(parts));
            Rational v = ca * cb;
            auto [it, inserted] = out.emplace(std::move(key), v);
            if (!inserted) {
                it->second += v;
                if (it->second == 0) out.erase(it);
            }
        }
    }
    return out;
}

PowerExpansion power_stretch(int n, const PowerExpansion& a) {
    PowerExpansion out;
    for (const auto& [rho, c] : a) {
        std::vector<int> parts = rho.parts();
        for (int& p : parts) p *= n;
        out.emplace(Partition(std::move(parts)), c);
    }
    return out;
}

// s_mu[F] for F given in the power-sum basis.
PowerExpansion pleth_power(const PowerExpansion& fp, const Partition& mu) {
    PowerExpansion out;
    for (const Partition& rho : partitions_of(mu.weight())) {
        Int chi = sn_character(mu, rho);
        if (chi == 0) continue;
        PowerExpansion term;
        term.emplace(Partition{}, Rational(chi) / z_of(rho));
        for (int part : rho.parts()) term = power_multiply(term, power_stretch(part, fp));
        for (const auto& [key, v] : term) {
            auto [it, inserted] = out.emplace(key, v);
            if (!inserted) {
                it->second += v;
                if (it->second == 0) out.erase(it);
            }
        }
    }
    return out;
}

} // namespace

const SchurExpansion& plethysm_basis(const Partition& lambda, const Partition& mu) {
    std::pair<Partition, Partition> key{lambda, mu};
    {
        std::lock_guard<std::mutex> lock(pleth_mutex);
        auto it = pleth_cache.find(key);
        if (it != pleth_cache.end()) return it->second;
    }
    PowerExpansion fp = schur_to_power(SchurExpansion::basis(lambda));
    SchurExpansion result = power_to_schur(pleth_power(fp, mu));
    std::lock_guard<std::mutex> lock(pleth_mutex);
    return pleth_cache.emplace(key, std::move(result)).first->second;
}

SchurExpansion plethysm(const SchurExpansion& base, const SchurExpansion& exponent) {
    bool base_is_basis =
        base.terms().size() == 1 && base.terms().begin()->second == 1;
    SchurExpansion out;
    if (base_is_basis) {
        const Partition& lambda = base.terms().begin()->first;
        for (const auto& [mu, c] : exponent.terms())
            out += plethysm_basis(lambda, mu) * c;
        return out;
    }
    PowerExpansion fp = schur_to_power(base);
    for (const auto& [mu, c] : exponent.terms())
        out += power_to_schur(pleth_power(fp, mu)) * c;
    return out;
}

TensorExpansion plethysm_coproduct(const SchurExpansion& base,
                                   const SchurExpansion& exponent) {
    return outer_coproduct(plethysm(base, exponent));
}

TensorExpansion plethysm_coproduct_sweedler(const Partition& base,
                                            const Partition& exponent) {
    // Coproduct summands of the base, with multiplicity.
    std::vector<std::pair<Partition, Partition>> pairs;
    TensorExpansion dl = outer_coproduct(SchurExpansion::basis(base));
    for (const auto& [k, c] : dl.terms())
        for (Int i = 0; i < c; ++i) pairs.push_back(k);
    std::size_t n = pairs.size();

    // Iterated outer coproduct of the exponent into n slots.
    using Tuple = std::pair<std::vector<Partition>, Int>;
    std::vector<Tuple> tuples{{std::vector<Partition>{exponent}, 1}};
    for (std::size_t step = 1; step < n; ++step) {
        std::vector<Tuple> next;
        for (const auto& [slots, c] : tuples) {
            TensorExpansion d = outer_coproduct(SchurExpansion::basis(slots.back()));
            for (const auto& [k, d2] : d.terms()) {
                std::vector<Partition> ns(slots.begin(), slots.end() - 1);
                ns.push_back(k.first);
                ns.push_back(k.second);
                next.push_back({std::move(ns), c * d2});
            }
        }
        tuples = std::move(next);
    }

    TensorExpansion total;
    for (const auto& [slots, c] : tuples) {
        TensorExpansion acc = TensorExpansion::unit() * c;
        for (std::size_t k = 0; k < n && !acc.is_zero(); ++k) {
            TensorExpansion factor;
            TensorExpansion inner = inner_coproduct(SchurExpansion::basis(slots[k]));
            for (const auto& [ab, g] : inner.terms()) {
                const SchurExpansion& left = plethysm_basis(pairs[k].first, ab.first);
                const SchurExpansion& right = plethysm_basis(pairs[k].second, ab.second);
                for (const auto& [pl, cl] : left.terms())
                    for (const auto& [pr, cr] : right.terms())
                        factor.add(pl, pr, g * cl * cr);
            }
            acc = acc.product(factor);
        }
        total += acc;
    }
    return total;
}

} // namespace hpi
