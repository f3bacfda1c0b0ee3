#pragma once

#include <cstdio>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace slex {

/// Deterministic output formatting shared by the CLI and its tests.
namespace report {

using ordered_json = nlohmann::ordered_json;

/// 15-significant-digit representation; round-trips bit-exactly through a
/// JSON parse (15 decimal digits are always recoverable from binary64).
inline std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.15g", v);
    return buf;
}

/// fixed-point with the given number of decimals (text-table format)
inline std::string format_fixed(double v, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
    return buf;
}

/// Canonical JSON serialization: preserves object order, escapes strings the
/// standard way, and prints every floating-point number via format_number so
/// that parse + re-emit is byte-identical.
inline void canonical_dump(const ordered_json& j, std::string& out) {
    switch (j.type()) {
        case ordered_json::value_t::object: {
            out += '{';
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) out += ',';
                first = false;
                out += ordered_json(it.key()).dump();
                out += ':';
                canonical_dump(it.value(), out);
            }
            out += '}';
            break;
        }
        case ordered_json::value_t::array: {
            out += '[';
            bool first = true;
            for (const auto& el : j) {
                if (!first) out += ',';
                first = false;
                canonical_dump(el, out);
            }
            out += ']';
            break;
        }
        case ordered_json::value_t::number_float:
            out += format_number(j.get<double>());
            break;
        default:
            out += j.dump();
            break;
    }
}

inline std::string canonical_dump(const ordered_json& j) {
    std::string out;
    canonical_dump(j, out);
    out += '\n';
    return out;
}

/// One RFC-4180 CSV record: comma-separated, CRLF-terminated, quoting any
/// field that contains a comma, quote, or line break.
inline std::string csv_line(const std::vector<std::string>& fields) {
    std::string out;
    bool first = true;
    for (const auto& f : fields) {
        if (!first) out += ',';
        first = false;
        if (f.find_first_of(",\"\r\n") != std::string::npos) {
            out += '"';
            for (const char ch : f) {
                if (ch == '"') out += '"';
                out += ch;
            }
            out += '"';
        } else {
            out += f;
        }
    }
    out += "\r\n";
    return out;
}

}  // namespace report
}  // namespace slex
