#pragma once

#include "berele/chain.hpp"
#include "berele/kernels.hpp"
#include "berele/partition.hpp"
#include "berele/pattern.hpp"
#include "berele/qinsert.hpp"
#include "berele/rational.hpp"
#include "berele/symfunc.hpp"
#include "berele/tableau.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace berele {

using nlohmann::json;

inline json to_json(const Rational& r) { return to_string(r); }

inline json to_json(const Partition& p) { return json(p.parts()); }

inline Partition partition_from_json(const json& j) {
    return Partition(j.get<std::vector<int>>());
}

inline json to_json(const Letter& l) { return json{{"v", l.value}, {"bar", l.barred}}; }

inline json to_json(const SymplecticTableau& t) {
    json rows = json::array();
    for (const auto& row : t.rows) {
        json r = json::array();
        for (const Letter& l : row) r.push_back(to_json(l));
        rows.push_back(std::move(r));
    }
    return json{{"n", t.n}, {"rows", std::move(rows)}};
}

inline json to_json(const GtPattern& z) { return json{{"n", z.n}, {"levels", z.levels}}; }

inline GtPattern pattern_from_json(const json& j) {
    GtPattern z{j.at("n").get<int>(), j.at("levels").get<std::vector<std::vector<int>>>()};
    if (!valid(z)) throw std::domain_error("pattern_from_json: invalid pattern");
    return z;
}

inline json to_json(const PatternDistribution& dist) {
    json out = json::array();
    for (const auto& [z, p] : dist)
        out.push_back(json{{"pattern", to_json(z)}, {"prob", to_string(p)}});
    return out;
}

inline json to_json(const OscillatingTableau& f) {
    json out = json::array();
    for (const Partition& p : f) out.push_back(to_json(p));
    return out;
}

inline json to_json(const IdentityReport& r) {
    json failures = json::array();
    for (const auto& f : r.failures)
        failures.push_back(json{{"inputs", f.inputs},
                                {"lhs", to_string(f.lhs)},
                                {"rhs", to_string(f.rhs)}});
    return json{{"name", r.name},
                {"instances_checked", r.instances_checked},
                {"failures", std::move(failures)},
                {"pass", r.pass()}};
}

inline json to_json(const IntertwineReport& r) {
    json failures = json::array();
    for (const auto& f : r.failures)
        failures.push_back(json{{"lambda", f.lambda},
                                {"ztilde", f.target},
                                {"lhs", to_string(f.lhs)},
                                {"rhs", to_string(f.rhs)}});
    return json{{"checked", r.checked}, {"failures", std::move(failures)}, {"pass", r.pass()}};
}

inline json to_json(const EmpiricalReport& r) {
    return json{{"m", r.m},
                {"runs", r.runs},
                {"tv_shape", r.tv_shape},
                {"tol_shape", r.tol_shape},
                {"tv_pattern", r.tv_pattern},
                {"tol_pattern", r.tol_pattern},
                {"pass", r.pass()}};
}

// Letter tokens: a positive integer optionally followed by an ASCII prime
// ("3'") or a UTF-8 combining macron.
inline Letter parse_letter(const std::string& token) {
    std::size_t i = 0;
    while (i < token.size() && token[i] >= '0' && token[i] <= '9') ++i;
    if (i == 0) throw std::domain_error("parse_letter: expected a digit in '" + token + "'");
    int value = std::stoi(token.substr(0, i));
    std::string suffix = token.substr(i);
    bool barred;
    if (suffix.empty())
        barred = false;
    else if (suffix == "'" || suffix == "\xCC\x84")
        barred = true;
    else
        throw std::domain_error("parse_letter: bad suffix in '" + token + "'");
    if (value < 1) throw std::domain_error("parse_letter: letter values start at 1");
    return Letter{value, barred};
}

/// Whitespace-separated letter tokens.
inline std::vector<Letter> parse_word(const std::string& text) {
    std::vector<Letter> w;
    std::istringstream in(text);
    std::string token;
    while (in >> token) w.push_back(parse_letter(token));
    return w;
}

inline std::string render_tableau(const SymplecticTableau& t, bool ascii) {
    std::string out;
    for (const auto& row : t.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out += " ";
            out += row[c].str(ascii);
        }
        out += "\n";
    }
    return out;
}

}  // namespace berele
