#include "hpi/partition.hpp"

#include "hpi/errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hpi {

using boost::multiprecision::cpp_int;

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0 || (i > 0 && parts_[i - 1] < parts_[i]))
            throw parse_error("partition parts must be weakly decreasing and positive");
    }
}

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts)) {}

int Partition::weight() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::part(int i) const {
    return (i >= 0 && i < length()) ? parts_[i] : 0;
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return {};
    std::vector<int> conj(parts_[0], 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) ++conj[j];
    return Partition(std::move(conj));
}

bool Partition::contains(const Partition& mu) const {
    if (mu.length() > length()) return false;
    for (int i = 0; i < mu.length(); ++i)
        if (mu.parts_[i] > parts_[i]) return false;
    return true;
}

std::pair<std::vector<int>, std::vector<int>> Partition::frobenius() const {
    Partition conj = conjugate();
    std::vector<int> arms, legs;
    for (int i = 0; i < length() && parts_[i] > i; ++i) {
        arms.push_back(parts_[i] - i - 1);
        legs.push_back(conj.parts_[i] - i - 1);
    }
    return {arms, legs};
}

Partition Partition::from_frobenius(const std::vector<int>& arms,
                                    const std::vector<int>& legs) {
    if (arms.size() != legs.size())
        throw internal_error("Frobenius data needs equal arm/leg counts");
    int d = static_cast<int>(arms.size());
    int rows = d;
    for (int i = 0; i < d; ++i) rows = std::max(rows, legs[i] + i + 1);
    std::vector<int> parts(rows, 0);
    for (int i = 0; i < d; ++i) {
        parts[i] = arms[i] + i + 1;
        for (int r = i + 1; r <= legs[i] + i; ++r) parts[r] = std::max(parts[r], i + 1);
    }
    for (int i = 0; i < d; ++i) parts[i] = arms[i] + i + 1;
    return Partition(std::move(parts));
}

Int Partition::dim_gl(int n) const {
    if (length() > n) return 0;
    Partition conj = conjugate();
    cpp_int num = 1, den = 1;
    for (int i = 0; i < length(); ++i) {
        for (int j = 0; j < parts_[i]; ++j) {
            num *= n + j - i;
            den *= (parts_[i] - j) + (conj.parts_[j] - i) - 1; // hook length
        }
    }
    cpp_int q = num / den;
    if (q * den != num) throw internal_error("hook-content product not integral");
    return static_cast<Int>(q);
}

Partition Partition::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s == "0" || s == "[]" || s == "[0]") return {};
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        throw parse_error("expected [p1,p2,...]: " + text);
    std::vector<int> parts;
    std::stringstream in(s.substr(1, s.size() - 2));
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) throw parse_error("empty partition part in " + text);
        int value = 0, count = 1;
        auto caret = item.find('^');
        try {
            if (caret == std::string::npos) {
                value = std::stoi(item);
            } else {
                value = std::stoi(item.substr(0, caret));
                count = std::stoi(item.substr(caret + 1));
            }
        } catch (const std::exception&) {
            throw parse_error("bad partition part '" + item + "' in " + text);
        }
        if (value < 0 || count < 0) throw parse_error("negative entry in " + text);
        for (int k = 0; k < count; ++k) parts.push_back(value);
    }
    return Partition(std::move(parts));
}

std::string Partition::to_bracket() const {
    std::string out = "[";
    for (int i = 0; i < length(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out + "]";
}

std::string Partition::run_string() const {
    if (parts_.empty()) return "0";
    std::string out;
    for (int i = 0; i < length();) {
        int j = i;
        while (j < length() && parts_[j] == parts_[i]) ++j;
        if (!out.empty()) out += ',';
        out += std::to_string(parts_[i]);
        if (j - i > 1) out += "^" + std::to_string(j - i);
        i = j;
    }
    return out;
}

std::string Partition::paper_label() const {
    if (parts_.empty()) return "0";
    std::string out;
    for (int i = 0; i < length();) {
        int j = i;
        while (j < length() && parts_[j] == parts_[i]) ++j;
        int run = j - i;
        if (run >= 4) {
            out += std::to_string(parts_[i]) + "^" + std::to_string(run);
        } else {
            for (int k = 0; k < run; ++k) out += std::to_string(parts_[i]);
        }
        i = j;
    }
    return out;
}

bool canonical_less(const Partition& a, const Partition& b) {
    int wa = a.weight(), wb = b.weight();
    if (wa != wb) return wa < wb;
    return a.parts() > b.parts();
}

namespace {

void emit_partitions(int remaining, int max_part, std::vector<int>& cur,
                     const PartitionsOfOptions& opts,
                     std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    if (opts.max_length && static_cast<int>(cur.size()) >= *opts.max_length) return;
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        emit_partitions(remaining - p, p, cur, opts, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of(int k, PartitionsOfOptions opts) {
    std::vector<Partition> out;
    if (k < 0) return out;
    int cap = opts.max_part ? std::min(*opts.max_part, k) : k;
    std::vector<int> cur;
    emit_partitions(k, cap, cur, opts, out);
    return out;
}

Int z_of(const Partition& rho) {
    Int z = 1;
    int i = 0;
    const auto& p = rho.parts();
    while (i < rho.length()) {
        int j = i;
        while (j < rho.length() && p[j] == p[i]) ++j;
        for (int k = i; k < j; ++k) z *= p[i];
        for (int m = 2; m <= j - i; ++m) z *= m;
        i = j;
    }
    return z;
}

} // namespace hpi
