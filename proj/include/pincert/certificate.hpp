#pragma once

/*
 * Proof-obligation bookkeeping shared by the lemma certifiers and the CLI.
 *
 * A Certificate is a named, ordered list of obligations. Each obligation is
 * one mechanically checked claim (a polynomial identity, a resultant or
 * discriminant match, a positivity or root-count certificate, or a numeric
 * margin) together with the witness data a reader needs to reproduce the
 * check by hand. The certificate as a whole passes exactly when every
 * obligation passes.
 *
 * The JSON form is part of the tool's public output:
 *
 *   { "name": ...,
 *     "obligations": [ { "desc", "kind", "status", "paper_anchor", "data" } ],
 *     "overall": "pass" | "fail" }
 *
 * "paper_anchor" is a short stable tag naming the claim an obligation
 * discharges (for example "ineqks:disc"), so that output can be diffed
 * across runs and cross-referenced from prose. Witness data is a flat
 * string-to-string object whose key order is preserved.
 */

#include <pincert/rational.hpp>

#include <json.hpp>

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pincert {

enum class ObKind {
    identity,
    resultant_match,
    discriminant_match,
    positivity,
    root_count,
    numeric_margin,
};

inline std::string_view kind_label(ObKind k) {
    switch (k) {
        case ObKind::identity: return "identity";
        case ObKind::resultant_match: return "resultant-match";
        case ObKind::discriminant_match: return "discriminant-match";
        case ObKind::positivity: return "positivity";
        case ObKind::root_count: return "root-count";
        case ObKind::numeric_margin: return "numeric-margin";
    }
    throw arithmetic_error("unknown obligation kind");
}

inline ObKind kind_from_label(std::string_view s) {
    if (s == "identity") return ObKind::identity;
    if (s == "resultant-match") return ObKind::resultant_match;
    if (s == "discriminant-match") return ObKind::discriminant_match;
    if (s == "positivity") return ObKind::positivity;
    if (s == "root-count") return ObKind::root_count;
    if (s == "numeric-margin") return ObKind::numeric_margin;
    throw arithmetic_error("unknown obligation kind '" + std::string(s) + "'");
}

struct Obligation {
    std::string desc;
    ObKind kind = ObKind::identity;
    bool pass = false;
    std::string anchor;
    std::vector<std::pair<std::string, std::string>> data;

    // Witness keys must stay unique (the JSON form is an object); clashes
    // get a numeric suffix instead of silently overwriting.
    void add_data(std::string key, std::string value) {
        auto taken = [&](const std::string& k) {
            for (const auto& [a, b] : data)
                if (a == k) return true;
            return false;
        };
        std::string k = key;
        for (int suffix = 2; taken(k); ++suffix) k = key + "_" + std::to_string(suffix);
        data.emplace_back(std::move(k), std::move(value));
    }

    bool operator==(const Obligation&) const = default;
};

struct Certificate {
    std::string name;
    std::vector<Obligation> obligations;

    bool overall() const {
        for (const auto& o : obligations)
            if (!o.pass) return false;
        return true;
    }

    bool operator==(const Certificate&) const = default;
};

using ojson = nlohmann::ordered_json;

inline ojson to_json(const Obligation& o) {
    ojson d = ojson::object();
    for (const auto& [k, v] : o.data) d[k] = v;
    return ojson{{"desc", o.desc},
                 {"kind", kind_label(o.kind)},
                 {"status", o.pass ? "pass" : "fail"},
                 {"paper_anchor", o.anchor},
                 {"data", std::move(d)}};
}

inline ojson to_json(const Certificate& c) {
    ojson obs = ojson::array();
    for (const auto& o : c.obligations) obs.push_back(to_json(o));
    return ojson{{"name", c.name},
                 {"obligations", std::move(obs)},
                 {"overall", c.overall() ? "pass" : "fail"}};
}

inline Obligation obligation_from_json(const ojson& j) {
    Obligation o;
    o.desc = j.at("desc").get<std::string>();
    o.kind = kind_from_label(j.at("kind").get<std::string>());
    std::string status = j.at("status").get<std::string>();
    if (status != "pass" && status != "fail")
        throw arithmetic_error("obligation status must be 'pass' or 'fail'");
    o.pass = status == "pass";
    o.anchor = j.at("paper_anchor").get<std::string>();
    for (auto it = j.at("data").begin(); it != j.at("data").end(); ++it)
        o.data.emplace_back(it.key(), it.value().get<std::string>());
    return o;
}

inline Certificate certificate_from_json(const ojson& j) {
    Certificate c;
    c.name = j.at("name").get<std::string>();
    for (const auto& jo : j.at("obligations")) c.obligations.push_back(obligation_from_json(jo));
    std::string overall = j.at("overall").get<std::string>();
    if ((overall == "pass") != c.overall())
        throw arithmetic_error("certificate overall flag disagrees with its obligations");
    return c;
}

}  // namespace pincert
