#pragma once

#include <json.hpp>

#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "../algebra.hpp"

namespace weylkit::cli {

using Json = nlohmann::ordered_json;

enum class Format { Table, Json, Csv };

inline std::string q_label(const Coefficient& q) {
    if (q.is_one()) return "1";
    if (q.is_constant()) return q.constant_value().get_str();
    return q.to_string();
}

inline Json to_json(const NormalForm& nf) {
    Json j;
    j["modes"] = nf.modes();
    j["q"] = q_label(nf.deformation());
    Json terms = Json::array();
    for (const auto& [m, c] : nf.terms()) {
        Json t;
        t["x"] = m.raise;
        t["d"] = m.lower;
        t["coeff"] = c.to_string();
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

inline std::string csv_header(std::size_t modes, bool with_n) {
    std::string h = with_n ? "n," : "";
    for (std::size_t i = 0; i < modes; ++i) h += "x" + std::to_string(i) + ",";
    for (std::size_t i = 0; i < modes; ++i) h += "d" + std::to_string(i) + ",";
    return h + "coeff";
}

inline std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\" ") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

inline void write_csv_rows(std::ostream& out, const NormalForm& nf, const std::string& prefix) {
    for (const auto& [m, c] : nf.terms()) {
        out << prefix;
        for (auto a : m.raise) out << a << ",";
        for (auto b : m.lower) out << b << ",";
        out << csv_quote(c.to_string()) << "\n";
    }
}

// one row per term: exponents then coefficient, columns padded
inline void write_table(std::ostream& out, const NormalForm& nf) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> head;
    bool multi = nf.modes() > 1;
    for (std::size_t i = 0; i < nf.modes(); ++i) head.push_back(multi ? "x" + std::to_string(i) : "x");
    for (std::size_t i = 0; i < nf.modes(); ++i) head.push_back(multi ? "d" + std::to_string(i) : "d");
    head.push_back("coeff");
    rows.push_back(head);
    for (const auto& [m, c] : nf.terms()) {
        std::vector<std::string> r;
        for (auto a : m.raise) r.push_back(std::to_string(a));
        for (auto b : m.lower) r.push_back(std::to_string(b));
        r.push_back(c.to_string());
        rows.push_back(std::move(r));
    }
    std::vector<std::size_t> width(head.size(), 0);
    for (const auto& r : rows)
        for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
    for (const auto& r : rows) {
        std::string line;
        for (std::size_t i = 0; i < r.size(); ++i) {
            line += r[i];
            if (i + 1 < r.size()) line += std::string(width[i] - r[i].size() + 2, ' ');
        }
        out << line << "\n";
    }
}

inline void write_normal_form(std::ostream& out, const NormalForm& nf, Format f) {
    switch (f) {
        case Format::Json: out << to_json(nf).dump(2) << "\n"; break;
        case Format::Csv:
            out << csv_header(nf.modes(), false) << "\n";
            write_csv_rows(out, nf, "");
            break;
        case Format::Table: write_table(out, nf); break;
    }
}

}  // namespace weylkit::cli
