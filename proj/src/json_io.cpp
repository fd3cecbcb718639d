#include "hpi/json_io.hpp"

#include "hpi/errors.hpp"

#include <json.hpp>

namespace hpi {

namespace {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

ordered partition_json(const Partition& p) {
    return ordered(p.parts());
}

Partition partition_from(const json& j) {
    std::vector<int> parts = j.get<std::vector<int>>();
    return Partition(std::move(parts));
}

json parse(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw parse_error("invalid JSON");
    return j;
}

} // namespace

std::string to_json(const SchurExpansion& f) {
    ordered j;
    j["basis"] = "schur";
    j["terms"] = ordered::array();
    for (const auto& [p, c] : f.terms()) {
        ordered t;
        t["partition"] = partition_json(p);
        t["coeff"] = c;
        j["terms"].push_back(t);
    }
    return j.dump();
}

SchurExpansion schur_from_json(const std::string& text) {
    json j = parse(text);
    if (j.value("basis", "") != "schur") throw parse_error("expected schur basis");
    SchurExpansion f;
    for (const auto& t : j.at("terms"))
        f.add(partition_from(t.at("partition")), t.at("coeff").get<Int>());
    return f;
}

std::string to_json(const TruncatedSeries& s) {
    ordered j;
    j["basis"] = "schur";
    j["degree"] = s.degree;
    if (!s.label.empty()) j["label"] = s.label;
    j["terms"] = ordered::array();
    for (const auto& [p, c] : s.body.terms()) {
        ordered t;
        t["partition"] = partition_json(p);
        t["coeff"] = c;
        j["terms"].push_back(t);
    }
    return j.dump();
}

TruncatedSeries series_from_json(const std::string& text) {
    json j = parse(text);
    TruncatedSeries s;
    s.degree = j.at("degree").get<int>();
    s.label = j.value("label", "");
    for (const auto& t : j.at("terms"))
        s.body.add(partition_from(t.at("partition")), t.at("coeff").get<Int>());
    return s;
}

std::string to_json(const FormalCharacter& f) {
    ordered j;
    j["group"]["pi"] = partition_json(f.pi());
    if (f.n()) j["group"]["n"] = *f.n();
    j["terms"] = ordered::array();
    for (const auto& [key, c] : f.terms()) {
        ordered t;
        t["eps"] = key.eps;
        t["partition"] = partition_json(key.mu);
        t["coeff"] = c;
        j["terms"].push_back(t);
    }
    return j.dump();
}

FormalCharacter character_from_json(const std::string& text) {
    json j = parse(text);
    Partition pi = partition_from(j.at("group").at("pi"));
    std::optional<int> n;
    if (j.at("group").contains("n")) n = j.at("group").at("n").get<int>();
    FormalCharacter f(pi, n);
    for (const auto& t : j.at("terms"))
        f.add(partition_from(t.at("partition")), t.at("coeff").get<Int>(),
              t.value("eps", 0));
    return f;
}

} // namespace hpi
