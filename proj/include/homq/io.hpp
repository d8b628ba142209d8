#pragma once

// JSON interchange: structure files, matrix/operator files, and
// verification reports.  Scalars serialize as [re, im] (ApproxComplex) or
// [[re, im], ...] listing coefficients of h^0..h^order (HSeries).

#include <fstream>
#include <functional>
#include <optional>

#include <json.hpp>

#include "quasitri.hpp"

namespace homq {

using json = nlohmann::json;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Structure {
    HomBialgebra bialgebra;
    std::optional<std::vector<Scalar>> r;

    QTHomBialgebra quasi_triangular() const {
        if (!r) throw std::invalid_argument("Structure: no R present");
        return QTHomBialgebra(bialgebra, *r);
    }
};

inline json ring_to_json(const Ring& ring) {
    json j;
    j["kind"] = ring.kind == Ring::Kind::ApproxComplex ? "approx_complex" : "hseries";
    j["tolerance"] = ring.tolerance;
    if (ring.kind == Ring::Kind::HSeries) j["order"] = ring.order;
    return j;
}

inline Ring ring_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind")) throw ParseError("ring: object with 'kind' expected");
    const std::string kind = j.at("kind").get<std::string>();
    const double tol = j.value("tolerance", 1e-9);
    if (tol <= 0.0) throw ParseError("ring: tolerance must be positive");
    if (kind == "approx_complex") return Ring::approx_complex(tol);
    if (kind == "hseries") {
        const int order = j.value("order", 8);
        if (order < 1) throw ParseError("ring: order must be >= 1");
        return Ring::hseries(order, tol);
    }
    throw ParseError("ring: unknown kind '" + kind + "'");
}

inline json scalar_to_json(const Scalar& s) {
    if (s.ring().kind == Ring::Kind::ApproxComplex)
        return json::array({s.coeff(0).real(), s.coeff(0).imag()});
    json j = json::array();
    for (const cplx& c : s.coeffs()) j.push_back(json::array({c.real(), c.imag()}));
    return j;
}

inline Scalar scalar_from_json(const json& j, const Ring& ring) {
    if (!j.is_array()) throw ParseError("scalar: array expected");
    if (ring.kind == Ring::Kind::ApproxComplex) {
        if (j.size() != 2 || !j[0].is_number() || !j[1].is_number())
            throw ParseError("scalar: [re, im] expected");
        return Scalar(ring, cplx{j[0].get<double>(), j[1].get<double>()});
    }
    if (j.size() != ring.coeff_count())
        throw ParseError("scalar: expected " + std::to_string(ring.coeff_count()) + " coefficients");
    std::vector<cplx> coeffs;
    coeffs.reserve(j.size());
    for (const json& c : j) {
        if (!c.is_array() || c.size() != 2 || !c[0].is_number() || !c[1].is_number())
            throw ParseError("scalar: coefficient [re, im] expected");
        coeffs.emplace_back(c[0].get<double>(), c[1].get<double>());
    }
    return Scalar(ring, std::move(coeffs));
}

namespace detail {

inline std::vector<Scalar> flat_from_json(const json& j, const Ring& ring,
                                          const std::vector<std::size_t>& shape, const char* what) {
    // shape-nested arrays of scalars, flattened lexicographically
    std::vector<Scalar> out;
    std::size_t total = 1;
    for (std::size_t s : shape) total *= s;
    out.reserve(total);
    const std::function<void(const json&, std::size_t)> walk = [&](const json& node, std::size_t depth) {
        if (depth == shape.size()) {
            out.push_back(scalar_from_json(node, ring));
            return;
        }
        if (!node.is_array() || node.size() != shape[depth])
            throw ParseError(std::string(what) + ": expected array of length " +
                             std::to_string(shape[depth]) + " at depth " + std::to_string(depth));
        for (const json& child : node) walk(child, depth + 1);
    };
    walk(j, 0);
    return out;
}

inline json flat_to_json(const std::vector<Scalar>& flat, const std::vector<std::size_t>& shape) {
    std::size_t pos = 0;
    const std::function<json(std::size_t)> build = [&](std::size_t depth) -> json {
        if (depth == shape.size()) return scalar_to_json(flat[pos++]);
        json arr = json::array();
        for (std::size_t i = 0; i < shape[depth]; ++i) arr.push_back(build(depth + 1));
        return arr;
    };
    return build(0);
}

}  // namespace detail

inline json structure_to_json(const Structure& s) {
    const HomBialgebra& b = s.bialgebra;
    const std::size_t d = b.dim;
    json j;
    j["ring"] = ring_to_json(b.ring);
    j["dim"] = d;
    j["mu"] = detail::flat_to_json(b.mu, {d, d, d});
    j["delta"] = detail::flat_to_json(b.delta, {d, d, d});
    j["alpha"] = detail::flat_to_json(b.alpha, {d, d});
    if (b.weak_unit) j["c"] = detail::flat_to_json(*b.weak_unit, {d});
    if (s.r) j["R"] = detail::flat_to_json(*s.r, {d, d});
    return j;
}

inline Structure structure_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("structure: object expected");
    for (const char* field : {"ring", "dim", "mu", "delta", "alpha"})
        if (!j.contains(field)) throw ParseError(std::string("structure: missing field '") + field + "'");
    const Ring ring = ring_from_json(j.at("ring"));
    if (!j.at("dim").is_number_unsigned() || j.at("dim").get<std::size_t>() == 0)
        throw ParseError("structure: dim must be a positive integer");
    const std::size_t d = j.at("dim").get<std::size_t>();
    HomBialgebra b(ring, d);
    b.mu = detail::flat_from_json(j.at("mu"), ring, {d, d, d}, "mu");
    b.delta = detail::flat_from_json(j.at("delta"), ring, {d, d, d}, "delta");
    b.alpha = detail::flat_from_json(j.at("alpha"), ring, {d, d}, "alpha");
    if (j.contains("c")) b.weak_unit = detail::flat_from_json(j.at("c"), ring, {d}, "c");
    Structure s{std::move(b), std::nullopt};
    if (j.contains("R")) s.r = detail::flat_from_json(j.at("R"), ring, {d, d}, "R");
    return s;
}

// Standalone square-matrix file (alpha matrices, R tables).
inline json matrix_to_json(const Ring& ring, const std::vector<Scalar>& m, std::size_t d) {
    json j;
    j["ring"] = ring_to_json(ring);
    j["matrix"] = detail::flat_to_json(m, {d, d});
    return j;
}

inline std::pair<Ring, std::vector<Scalar>> matrix_from_json(const json& j, std::size_t d) {
    if (!j.is_object() || !j.contains("ring") || !j.contains("matrix"))
        throw ParseError("matrix file: object with 'ring' and 'matrix' expected");
    const Ring ring = ring_from_json(j.at("ring"));
    return {ring, detail::flat_from_json(j.at("matrix"), ring, {d, d}, "matrix")};
}

inline json operator_to_json(const LinearOperator& op) {
    json j;
    j["ring"] = ring_to_json(op.ring());
    j["out_dims"] = op.out_dims();
    j["in_dims"] = op.in_dims();
    j["matrix"] = detail::flat_to_json(op.entries(), {op.rows(), op.cols()});
    return j;
}

inline json report_to_json(const VerificationReport& rep) {
    json axioms = json::object();
    for (const auto& [name, residual] : rep.entries) axioms[name] = residual;
    json j;
    j["axioms"] = axioms;
    j["tolerance"] = rep.tolerance;
    j["pass"] = rep.pass();
    return j;
}

inline json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
    return j;
}

inline void save_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << j.dump(2) << "\n";
}

}  // namespace homq
