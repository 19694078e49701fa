#pragma once

#include "gusym/discrimination.hpp"
#include "gusym/ensemble.hpp"
#include "gusym/types.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <string>

// JSON formats:
//   complex  -> [re, im]
//   matrix   -> row-major list of rows of complex
//   state    -> {"n": N, "basis": "z"|"y", "amplitudes": [complex, ...]}
//   POVM     -> {"dimension": D, "elements": [matrix, ...]}

namespace gusym::io {

using json = nlohmann::json;

class ParseError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

inline json to_json(Complex c) {
    return json::array({c.real(), c.imag()});
}

inline Complex complex_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw ParseError("complex number must be a two-element numeric array [re, im]");
    return {j[0].get<double>(), j[1].get<double>()};
}

inline json to_json(const Matrix& m) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c)
            row.push_back(to_json(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Matrix matrix_from_json(const json& j, Eigen::Index dim) {
    if (!j.is_array() || static_cast<Eigen::Index>(j.size()) != dim)
        throw ParseError("matrix must have " + std::to_string(dim) + " rows");
    Matrix m(dim, dim);
    for (Eigen::Index r = 0; r < dim; ++r) {
        const json& row = j[static_cast<std::size_t>(r)];
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != dim)
            throw ParseError("matrix row " + std::to_string(r) + " must have " + std::to_string(dim) + " entries");
        for (Eigen::Index c = 0; c < dim; ++c)
            m(r, c) = complex_from_json(row[static_cast<std::size_t>(c)]);
    }
    return m;
}

inline json to_json(const SymmetricState& s) {
    json amps = json::array();
    for (Eigen::Index i = 0; i < s.amplitudes.size(); ++i)
        amps.push_back(to_json(s.amplitudes(i)));
    return {{"n", s.n}, {"basis", to_string(s.basis)}, {"amplitudes", std::move(amps)}};
}

/// Parses a state verbatim; no renormalisation is applied.
inline SymmetricState state_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("amplitudes"))
        throw ParseError("state must be an object with \"n\" and \"amplitudes\"");
    if (!j["n"].is_number_integer() || j["n"].get<int>() < 1)
        throw ParseError("state \"n\" must be a positive integer");
    SymmetricState s;
    s.n = j["n"].get<int>();
    const std::string basis = j.value("basis", std::string("z"));
    if (basis == "z")
        s.basis = Basis::z;
    else if (basis == "y")
        s.basis = Basis::y;
    else
        throw ParseError("state \"basis\" must be \"z\" or \"y\"");
    const json& amps = j["amplitudes"];
    if (!amps.is_array() || static_cast<int>(amps.size()) != s.n + 1)
        throw ParseError("state needs n + 1 = " + std::to_string(s.n + 1) + " amplitudes");
    s.amplitudes.resize(s.n + 1);
    for (int i = 0; i <= s.n; ++i)
        s.amplitudes(i) = complex_from_json(amps[static_cast<std::size_t>(i)]);
    return s;
}

inline json to_json(const Povm& p) {
    json elems = json::array();
    for (const auto& e : p.elements)
        elems.push_back(to_json(e));
    return {{"dimension", p.dimension}, {"elements", std::move(elems)}};
}

inline Povm povm_from_json(const json& j) {
    if (!j.is_object() || !j.contains("dimension") || !j.contains("elements"))
        throw ParseError("POVM must be an object with \"dimension\" and \"elements\"");
    if (!j["dimension"].is_number_integer() || j["dimension"].get<int>() < 1)
        throw ParseError("POVM \"dimension\" must be a positive integer");
    Povm p;
    p.dimension = j["dimension"].get<int>();
    if (!j["elements"].is_array() || j["elements"].empty())
        throw ParseError("POVM \"elements\" must be a non-empty array");
    for (const auto& e : j["elements"])
        p.elements.push_back(matrix_from_json(e, p.dimension));
    return p;
}

inline json parse_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

inline json read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_text(buf.str());
}

inline void write_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out)
        throw ParseError("cannot write " + path);
    out << j.dump(2) << '\n';
}

} // namespace gusym::io
