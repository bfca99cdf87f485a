#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "refined_hn.hpp"

namespace p2omega::io {

using nlohmann::json;

namespace detail {

inline int line_of_offset(const std::string& text, std::size_t offset) {
    int line = 1;
    for (std::size_t i = 0; i < text.size() && i < offset; ++i)
        if (text[i] == '\n') ++line;
    return line;
}

inline json parse_text(const std::string& text, const std::string& what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(what + ": parse error at line " + std::to_string(line_of_offset(text, e.byte)) + ": " + e.what());
    }
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline mpz_class big(const json& v, const std::string& ctx) {
    if (v.is_number_integer()) return mpz_class(std::to_string(v.get<long long>()));
    if (!v.is_string()) throw InputError(ctx + ": expected a decimal string");
    mpz_class z;
    if (z.set_str(v.get<std::string>(), 10) != 0) throw InputError(ctx + ": bad integer '" + v.get<std::string>() + "'");
    return z;
}

inline int small(const json& obj, const char* key, const std::string& ctx) {
    if (!obj.contains(key) || !obj[key].is_number_integer())
        throw InputError(ctx + ": missing integer field '" + key + "'");
    return obj[key].get<int>();
}

}  // namespace detail

/// {"surface": "P2", "entries": [{"d": 1, "g": 0, "n": "3"}, ...]}
inline GVTable parse_gv(const std::string& text) {
    json j = detail::parse_text(text, "GV file");
    if (!j.is_object() || !j.contains("entries") || !j["entries"].is_array())
        throw InputError("GV file: expected an object with an 'entries' array");
    if (j.contains("surface") && j["surface"] != "P2") throw InputError("GV file: only surface P2 is supported");
    GVTable gv;
    std::size_t idx = 0;
    for (const auto& e : j["entries"]) {
        const std::string ctx = "GV entry " + std::to_string(idx++);
        if (!e.is_object()) throw InputError(ctx + ": expected an object");
        try {
            gv.set(detail::small(e, "g", ctx), detail::small(e, "d", ctx), detail::big(e.value("n", json()), ctx));
        } catch (const std::invalid_argument& ex) {
            throw InputError(ctx + ": " + ex.what());
        }
    }
    return gv;
}

inline json gv_to_json(const GVTable& gv) {
    json entries = json::array();
    for (int d = 1; d <= gv.max_degree(); ++d) {
        if (!gv.has_row(d)) continue;
        for (int g = 0; g <= GVTable::genus_bound(d); ++g)
            entries.push_back({{"d", d}, {"g", g}, {"n", gv.get(g, d).get_str()}});
    }
    return {{"surface", "P2"}, {"entries", entries}};
}

/// [{"d": 1, "coeffs": ["1"]}, ...], ascending powers of y; rows must be d = 1, 2, ... without gaps.
inline std::vector<HalfLaurent> parse_golden(const std::string& text) {
    json j = detail::parse_text(text, "golden file");
    if (!j.is_array()) throw InputError("golden file: expected an array of rows");
    std::map<int, HalfLaurent> rows;
    std::size_t idx = 0;
    for (const auto& r : j) {
        const std::string ctx = "golden row " + std::to_string(idx++);
        if (!r.is_object() || !r.contains("coeffs") || !r["coeffs"].is_array())
            throw InputError(ctx + ": expected {\"d\", \"coeffs\"}");
        const int d = detail::small(r, "d", ctx);
        std::vector<mpz_class> c;
        for (const auto& v : r["coeffs"]) c.push_back(detail::big(v, ctx));
        if (!rows.emplace(d, HalfLaurent::from_y_coeffs(c)).second) throw InputError(ctx + ": duplicate d");
    }
    std::vector<HalfLaurent> out;
    for (const auto& [d, h] : rows) {
        if (d != static_cast<int>(out.size()) + 1) throw InputError("golden file: rows must be d = 1, 2, ... without gaps");
        out.push_back(h);
    }
    if (out.empty()) throw InputError("golden file: no rows");
    return out;
}

inline json hat_to_json(int d, const HalfLaurent& hat) {
    json c = json::array();
    for (int e = 0; e <= std::max(0, hat.hi() / 2); ++e) c.push_back(hat.y_coeff(e).re.get_str());
    return {{"d", d}, {"coeffs", c}};
}

/// [{"d": 1, "terms": [{"q": 0, "t": 2, "c": "1"}, ...]}, ...]
inline PoincareTable parse_refined(const std::string& text) {
    json j = detail::parse_text(text, "refined file");
    if (!j.is_array()) throw InputError("refined file: expected an array of rows");
    PoincareTable t(2);
    std::size_t idx = 0;
    for (const auto& r : j) {
        const std::string ctx = "refined row " + std::to_string(idx++);
        if (!r.is_object() || !r.contains("terms") || !r["terms"].is_array())
            throw InputError(ctx + ": expected {\"d\", \"terms\"}");
        std::map<std::pair<int, int>, mpq_class> c;
        for (const auto& term : r["terms"]) {
            const std::pair<int, int> e{detail::small(term, "q", ctx), detail::small(term, "t", ctx)};
            if (e.first < 0 || e.second < 0) throw InputError(ctx + ": negative exponent");
            c[e] += mpq_class(detail::big(term.value("c", json()), ctx));
        }
        t.set(detail::small(r, "d", ctx), std::move(c));
    }
    return t;
}

inline GVTable load_gv(const std::string& path) { return parse_gv(detail::read_file(path)); }
inline std::vector<HalfLaurent> load_golden(const std::string& path) { return parse_golden(detail::read_file(path)); }
inline PoincareTable load_refined(const std::string& path) { return parse_refined(detail::read_file(path)); }

enum class Format { Json, Csv, Text };

inline Format parse_format(const std::string& s) {
    if (s == "json") return Format::Json;
    if (s == "csv") return Format::Csv;
    if (s == "text") return Format::Text;
    throw InputError("unknown format '" + s + "'");
}

/// Omega as (twice the exponent, coefficient) pairs.
inline json omega_terms(const HalfLaurent& omega) {
    json t = json::array();
    for (const auto& [e, c] : omega.terms()) t.push_back({{"e2", e}, {"c", c.re.get_str()}});
    return t;
}

inline std::string render_records(const std::vector<OmegaRecord>& recs, Format f) {
    std::ostringstream os;
    switch (f) {
        case Format::Json: {
            json arr = json::array();
            for (const auto& r : recs) {
                json row = hat_to_json(r.d, r.omega_hat);
                row["omega"] = omega_terms(r.omega);
                arr.push_back(row);
            }
            os << arr.dump(1) << "\n";
            break;
        }
        case Format::Csv:
            os << "d,kind,exponent,coeff\n";
            for (const auto& r : recs) {
                for (const auto& [e, c] : r.omega_hat.terms()) os << r.d << ",omega_hat," << e / 2 << "," << c.re << "\n";
                for (const auto& [e, c] : r.omega.terms()) os << r.d << ",omega_half," << e << "," << c.re << "\n";
            }
            break;
        case Format::Text:
            for (const auto& r : recs) os << "d=" << r.d << "  omega_hat = " << r.omega_hat.str() << "\n";
            break;
    }
    return os.str();
}

inline std::string render_reports(const std::vector<TruncatedCheckReport>& reps, Format f) {
    std::ostringstream os;
    switch (f) {
        case Format::Json: {
            json arr = json::array();
            for (const auto& r : reps) {
                json row{{"check", r.name}, {"d", r.d}, {"order", r.order}, {"pass", r.pass}};
                if (r.mismatch) {
                    row["mismatch"] = *r.mismatch;
                    row["lhs"] = r.lhs_value.get_str();
                    row["rhs"] = r.rhs_value.get_str();
                }
                if (r.extended_pass) row["extended_pass"] = *r.extended_pass;
                arr.push_back(row);
            }
            os << arr.dump(1) << "\n";
            break;
        }
        case Format::Csv:
            os << "check,d,order,pass,mismatch,lhs,rhs,extended_pass\n";
            for (const auto& r : reps) {
                os << '"' << r.name << "\"," << r.d << "," << r.order << "," << (r.pass ? "true" : "false") << ",";
                if (r.mismatch) os << *r.mismatch << "," << r.lhs_value << "," << r.rhs_value;
                else os << ",,";
                os << ",";
                if (r.extended_pass) os << (*r.extended_pass ? "true" : "false");
                os << "\n";
            }
            break;
        case Format::Text:
            for (const auto& r : reps) os << r.summary() << "\n";
            break;
    }
    return os.str();
}

}  // namespace p2omega::io
