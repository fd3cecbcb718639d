#include "hpi/modify.hpp"

#include "hpi/errors.hpp"

#include <mutex>

namespace hpi {

std::optional<std::pair<int, Partition>> gl_column_reduce(const Partition& lambda,
                                                          int n) {
    if (lambda.length() > n) return std::nullopt;
    int last = lambda.part(n - 1);
    if (last == 0) return std::make_pair(0, lambda);
    std::vector<int> parts;
    for (int i = 0; i < n; ++i)
        if (lambda.part(i) - last > 0) parts.push_back(lambda.part(i) - last);
    return std::make_pair(last, Partition(std::move(parts)));
}

namespace {

// The complete SL(3) rule set for labels (l1,l2,l3,l4).
void sl3_rewrite(const Partition& mu, Int c, FormalCharacter& out) {
    if (mu.length() <= 2) {
        out.add(mu, c);
        return;
    }
    if (mu.length() > 4)
        throw unsupported_length("SL(3) modification undefined for length > 4: " +
                                 mu.to_bracket());
    int l1 = mu.part(0), l2 = mu.part(1), l3 = mu.part(2), l4 = mu.part(3);
    if (l4 == 0) return;             // ((l1,l2,l3,0)) = 0 for l3 >= 1
    if (l3 >= 3) return;             // ((l1,l2,l3,l4)) = 0 for l3 >= 3
    if (l3 == 2 && l4 == 1) return;  // ((l1,l2,2,1)) = 0
    if (l3 == 2 && l4 == 2) {        // ((l1,l2,2,2)) = ((l1-1,l2-1))
        std::vector<int> parts;
        if (l1 - 1 > 0) parts.push_back(l1 - 1);
        if (l2 - 1 > 0) parts.push_back(l2 - 1);
        out.add(Partition(std::move(parts)), c);
        return;
    }
    // l3 = l4 = 1
    if (l1 == l2) {
        out.add(Partition{std::vector<int>{l1, l1 - 1}}, -c);
    } else {
        std::vector<int> a{l1, l2 - 1}, b{l1 - 1, l2};
        while (!a.empty() && a.back() == 0) a.pop_back();
        out.add(Partition(std::move(a)), -c);
        out.add(Partition(std::move(b)), -c);
    }
}

} // namespace

FormalCharacter sl3_modify(const FormalCharacter& f) {
    FormalCharacter out(f.pi(), f.n());
    for (const auto& [key, c] : f.terms()) {
        if (key.eps != 0)
            throw internal_error("SL(3) input carries eps powers");
        sl3_rewrite(key.mu, c, out);
    }
    return out;
}

FormalCharacter h13_4_modify(const FormalCharacter& f) {
    FormalCharacter out(f.pi(), f.n() ? f.n() : std::optional<int>(4));
    for (const auto& [key, c] : f.terms()) {
        const Partition& mu = key.mu;
        if (mu.length() <= 3) {
            out.add(mu, c, key.eps);
            continue;
        }
        if (mu.length() > 4)
            throw unsupported_length("H_{1^3}(4) modification undefined for length > 4: " +
                                     mu.to_bracket());
        auto emit = [&](std::initializer_list<int> parts, Int sign, int eps) {
            out.add(Partition(parts), sign * c, key.eps + eps);
        };
        if (mu == Partition{1, 1, 1, 1}) {
            emit({}, 1, 1);
            emit({1}, -1, 0);
        } else if (mu == Partition{2, 1, 1, 1}) {
            emit({1}, 1, 1);
            emit({2}, -1, 0);
            emit({1, 1}, -1, 0);
        } else if (mu == Partition{2, 2, 1, 1}) {
            emit({1, 1}, 1, 1);
            emit({2, 1}, -1, 0);
            emit({1, 1, 1}, -1, 0);
        } else if (mu == Partition{2, 2, 2, 1}) {
            emit({1, 1, 1}, 1, 1);
            emit({2, 1, 1}, -1, 0);
        } else if (mu == Partition{2, 2, 2, 2}) {
            emit({}, 1, 2);
            emit({1}, -1, 1);
            emit({1, 1}, 1, 0);
        } else if (mu == Partition{3, 1, 1, 1}) {
            emit({2}, 1, 1);
            emit({3}, -1, 0);
            emit({2, 1}, -1, 0);
        } else {
            throw no_known_rule("no derived H_{1^3}(4) rule for " + mu.to_bracket());
        }
    }
    return out;
}

namespace {

std::mutex dim_mutex;
std::map<std::tuple<Partition, Partition, int>, Int> dim_cache;

} // namespace

Int dim_formal(const Partition& mu, const Partition& pi, int n) {
    std::tuple<Partition, Partition, int> key{mu, pi, n};
    {
        std::lock_guard<std::mutex> lock(dim_mutex);
        auto it = dim_cache.find(key);
        if (it != dim_cache.end()) return it->second;
    }
    Int total = 0;
    for (const auto& [rho, c] : lift_hpi_to_gl(mu, pi).terms())
        total += c * rho.dim_gl(n);
    std::lock_guard<std::mutex> lock(dim_mutex);
    return dim_cache.emplace(key, total).first->second;
}

FormalCharacter modified_product_sl3(const Partition& mu, const Partition& nu) {
    if (mu.length() > 2 || nu.length() > 2)
        throw unsupported_length("SL(3) product inputs must be standard (length <= 2)");
    Partition pi{1, 1, 1};
    FormalCharacter raw = product_hpi(mu, nu, pi, 3);
    return sl3_modify(raw);
}

FormalCharacter modified_product_sl3_gl_route(const Partition& mu, const Partition& nu) {
    FormalCharacter out(Partition{1, 1, 1}, 3);
    for (const auto& [lambda, c] : lr_product(mu, nu).terms()) {
        auto reduced = gl_column_reduce(lambda, 3);
        if (!reduced) continue;
        out.add(reduced->second, c); // eps = 1 in SL(3)
    }
    return out;
}

} // namespace hpi
