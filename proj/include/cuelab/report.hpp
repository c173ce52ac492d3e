#pragma once

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cuelab/rational.hpp"

namespace cuelab {

/// One computed quantity, ready for serialization. Exact rational results carry both the
/// decimal value and the num/den pair; floating results carry value + abs_error.
struct Report {
    std::string functional;
    std::vector<std::pair<std::string, std::string>> parameters;
    Cplx value{0.0, 0.0};
    bool exact = false;
    Rat exact_value = 0;
    double abs_error = 0.0;
    std::string method;
    bool has_seed = false;
    std::uint64_t seed = 0;
    bool has_stderr = false;
    double stderr_abs = 0.0;
    double runtime_ms = 0.0;
    std::string paper_anchor;
};

namespace detail {

inline std::string num_str(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

} // namespace detail

inline std::string report_value_re(const Report& r) {
    return r.exact ? detail::num_str(to_double(r.exact_value)) : detail::num_str(r.value.real());
}

inline std::string report_value_im(const Report& r) {
    return r.exact ? std::string("0") : detail::num_str(r.value.imag());
}

inline nlohmann::json report_to_json(const Report& r) {
    nlohmann::json j;
    j["functional"] = r.functional;
    nlohmann::json params = nlohmann::json::object();
    for (const auto& [k, v] : r.parameters) params[k] = v;
    j["parameters"] = params;
    j["value"] = {{"re", report_value_re(r)}, {"im", report_value_im(r)}};
    if (r.exact)
        j["value"]["rational"] = {{"num", numerator(r.exact_value).str()}, {"den", denominator(r.exact_value).str()}};
    j["abs_error"] = r.exact ? std::string("0") : detail::num_str(r.abs_error);
    j["method"] = r.method;
    if (r.has_seed) j["seed"] = r.seed;
    if (r.has_stderr) j["stderr"] = detail::num_str(r.stderr_abs);
    j["runtime_ms"] = r.runtime_ms;
    j["paper_anchor"] = r.paper_anchor;
    return j;
}

/// CSV layout: fixed columns first, then one column per parameter (in insertion order).
/// Values never contain commas (numbers, anchor tags, short method names).
inline std::string report_to_csv(const Report& r) {
    std::ostringstream head, row;
    head << "functional,paper_anchor,method,value_re,value_im,abs_error,num,den,seed,stderr,runtime_ms";
    row << r.functional << ',' << r.paper_anchor << ',' << r.method << ',' << report_value_re(r) << ','
        << report_value_im(r) << ',' << (r.exact ? std::string("0") : detail::num_str(r.abs_error)) << ','
        << (r.exact ? numerator(r.exact_value).str() : std::string()) << ','
        << (r.exact ? denominator(r.exact_value).str() : std::string()) << ','
        << (r.has_seed ? std::to_string(r.seed) : std::string()) << ','
        << (r.has_stderr ? detail::num_str(r.stderr_abs) : std::string()) << ',' << detail::num_str(r.runtime_ms);
    for (const auto& [k, v] : r.parameters) {
        head << ',' << k;
        std::string cell = v; // point lists use commas on the CLI; keep the row parseable
        for (char& ch : cell)
            if (ch == ',') ch = ';';
        row << ',' << cell;
    }
    return head.str() + "\n" + row.str() + "\n";
}

/// Write the report in the requested format; empty path means stdout.
inline void emit_report(const Report& r, const std::string& format, const std::string& path) {
    std::string body;
    if (format == "json")
        body = report_to_json(r).dump(2) + "\n";
    else if (format == "csv")
        body = report_to_csv(r);
    else
        throw std::invalid_argument("emit_report: unknown format '" + format + "'");
    if (path.empty()) {
        std::cout << body;
        return;
    }
    std::ofstream f(path);
    if (!f) throw std::runtime_error("emit_report: cannot open '" + path + "' for writing");
    f << body;
    if (!f) throw std::runtime_error("emit_report: write failed for '" + path + "'");
}

} // namespace cuelab
