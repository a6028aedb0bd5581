#pragma once

// Text, typeset and structured (JSON) renderings of A_p.
//
// The structured document is canonical: fixed key order, one matrix row per
// line, verification keys sorted. Entries that fit in a signed 64-bit
// integer are written as JSON numbers, larger ones as decimal strings.

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "modeq/equation.hpp"

namespace modeq {

inline constexpr int schema_version = 1;

class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline void write_text(std::ostream& out, const ModularMatrix& a)
{
    const int dim = a.m() + 1;
    std::size_t width = 1;
    for (int i = 0; i < dim; ++i)
        for (int h = 0; h < dim; ++h) width = std::max(width, a(i, h).get_str().size());

    out << "A_" << a.params.p << "  (p = " << a.params.p << ", m = " << a.params.m << ", n = " << a.params.n
        << ")\n";
    for (int i = 0; i < dim; ++i) {
        for (int h = 0; h < dim; ++h) {
            const std::string s = a(i, h).get_str();
            out << (h == 0 ? "" : " ") << std::string(width - s.size(), ' ') << s;
        }
        out << "\n";
    }
}

inline void write_typeset(std::ostream& out, const ModularMatrix& a)
{
    const int dim = a.m() + 1;
    out << "\\begin{equation*}\n";
    out << "A_{" << a.params.p << "} =\n";
    out << "\\left(\\begin{array}{" << std::string(dim, 'c') << "}\n";
    for (int i = 0; i < dim; ++i) {
        for (int h = 0; h < dim; ++h) out << (h == 0 ? "" : " & ") << a(i, h).get_str();
        out << " \\\\\n";
    }
    out << "\\end{array}\\right) \\qquad n = " << a.params.n << " \\ m = " << a.params.m << "\n";
    out << "\\end{equation*}\n";
}

namespace detail {

inline std::string json_integer(const Integer& z)
{
    if (z.fits_slong_p() && sizeof(long) >= sizeof(std::int64_t)) return z.get_str();
    return "\"" + z.get_str() + "\"";
}

inline Integer integer_from_json(const nlohmann::json& j)
{
    if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()));
    if (j.is_number_integer()) return Integer(std::to_string(j.get<std::int64_t>()));
    if (j.is_string()) {
        Integer z;
        if (z.set_str(j.get<std::string>(), 10) != 0) throw FormatError("bad integer string in matrix");
        return z;
    }
    throw FormatError("matrix entries must be integers");
}

} // namespace detail

inline void write_structured(std::ostream& out, const ModularMatrix& a)
{
    const int dim = a.m() + 1;
    out << "{\n";
    out << "  \"schema_version\": " << schema_version << ",\n";
    out << "  \"p\": " << a.params.p << ",\n";
    out << "  \"m\": " << a.params.m << ",\n";
    out << "  \"n\": " << a.params.n << ",\n";
    out << "  \"matrix\": [\n";
    for (int i = 0; i < dim; ++i) {
        out << "    [";
        for (int h = 0; h < dim; ++h) out << (h == 0 ? "" : ", ") << detail::json_integer(a(i, h));
        out << "]" << (i + 1 < dim ? "," : "") << "\n";
    }
    out << "  ],\n";
    out << "  \"verification\": {";
    bool first = true;
    for (const auto& [key, ok] : a.verification) {
        out << (first ? "\n" : ",\n") << "    " << nlohmann::json(key).dump() << ": " << (ok ? "true" : "false");
        first = false;
    }
    out << (first ? "}" : "\n  }") << "\n";
    out << "}\n";
}

inline std::string to_structured(const ModularMatrix& a)
{
    std::ostringstream s;
    write_structured(s, a);
    return s.str();
}

namespace detail {

inline ModularMatrix parse_structured_document(const std::string& text)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw FormatError(std::string("not a structured matrix document: ") + e.what());
    }
    if (!doc.is_object()) throw FormatError("document must be an object");
    for (const char* key : {"schema_version", "p", "m", "n", "matrix"})
        if (!doc.contains(key)) throw FormatError(std::string("missing field '") + key + "'");
    if (doc["schema_version"] != schema_version) throw FormatError("unsupported schema_version");

    const auto p = doc["p"].get<std::int64_t>();
    PrimeParams params;
    try {
        params = params_for(p);
    } catch (const InvalidInputError& e) {
        throw FormatError(e.what());
    }
    if (doc["m"].get<int>() != params.m || doc["n"].get<int>() != params.n)
        throw FormatError("m and n do not match p");

    const auto& rows = doc["matrix"];
    const int dim = params.m + 1;
    if (!rows.is_array() || static_cast<int>(rows.size()) != dim) throw FormatError("matrix has the wrong size");
    ModularMatrix a{params, IntegerMatrix(dim, dim), {}};
    for (int i = 0; i < dim; ++i) {
        if (!rows[i].is_array() || static_cast<int>(rows[i].size()) != dim)
            throw FormatError("matrix row " + std::to_string(i) + " has the wrong length");
        for (int h = 0; h < dim; ++h) a.entries(i, h) = detail::integer_from_json(rows[i][h]);
    }
    if (doc.contains("verification")) {
        if (!doc["verification"].is_object()) throw FormatError("verification must be an object");
        for (const auto& [key, value] : doc["verification"].items()) {
            if (!value.is_boolean()) throw FormatError("verification values must be booleans");
            a.verification[key] = value.get<bool>();
        }
    }
    return a;
}

} // namespace detail

/// Parses a structured document. p, m and n must agree with each other
/// and the matrix must be (m+1)x(m+1).
inline ModularMatrix parse_structured(const std::string& text)
{
    try {
        return detail::parse_structured_document(text);
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("malformed structured matrix document: ") + e.what());
    }
}

} // namespace modeq
