#ifndef JSOB_IO_HPP
#define JSOB_IO_HPP

// JSON reading and writing. Rationals are serialized as canonical "p/q"
// strings; integers in input may also be given as JSON numbers.

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "jsob/diffop.hpp"
#include "jsob/rank.hpp"
#include "jsob/sobolev.hpp"

namespace jsob {

using Json = nlohmann::json;

inline BigRational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return BigRational(j.get<long>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw InputError("expected an integer or a rational string, got " + j.dump());
}

inline Json rational_to_json(const BigRational& r) { return to_string(r); }

inline Json poly_to_json(const Poly& p) {
    Json arr = Json::array();
    for (const auto& c : p.coeffs()) arr.push_back(rational_to_json(c));
    return arr;
}

inline Poly poly_from_json(const Json& j) {
    if (!j.is_array()) throw InputError("polynomial must be an array of coefficients");
    std::vector<BigRational> co;
    for (const auto& c : j) co.push_back(rational_from_json(c));
    return Poly(std::move(co));
}

inline RationalMatrix matrix_from_json(const Json& j, std::size_t size, const std::string& name) {
    RationalMatrix m(size, size);
    if (size == 0) {
        if (!j.is_null() && !(j.is_array() && j.empty()))
            throw InputError(name + " must be empty when its size is 0");
        return m;
    }
    if (!j.is_array() || j.size() != size) throw InputError(name + " must have " + std::to_string(size) + " rows");
    for (std::size_t r = 0; r < size; ++r) {
        if (!j[r].is_array() || j[r].size() != size)
            throw InputError(name + " row " + std::to_string(r) + " must have " + std::to_string(size) + " entries");
        for (std::size_t c = 0; c < size; ++c) m(r, c) = rational_from_json(j[r][c]);
    }
    return m;
}

inline Json matrix_to_json(const RationalMatrix& m) {
    Json arr = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(rational_to_json(m(r, c)));
        arr.push_back(row);
    }
    return arr;
}

namespace detail {

inline long integer_field(const Json& j, const char* key) {
    if (!j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
    const Json& v = j.at(key);
    if (!v.is_number_integer()) throw InputError(std::string("field '") + key + "' must be an integer");
    return v.get<long>();
}

}  // namespace detail

/// {num: [coeffs], den: "auto-omega" | [coeffs]}.
inline CustomS custom_s_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("num")) throw InputError("custom S needs a 'num' coefficient list");
    CustomS s{poly_from_json(j.at("num")), std::nullopt};
    if (!j.contains("den")) throw InputError("custom S needs 'den' (\"auto-omega\" or coefficients)");
    const Json& den = j.at("den");
    if (den.is_string()) {
        if (den.get<std::string>() != "auto-omega") throw InputError("custom S 'den' string must be \"auto-omega\"");
    } else {
        s.den = poly_from_json(den);
    }
    return s;
}

inline Json custom_s_to_json(const CustomS& s) {
    Json j;
    j["num"] = poly_to_json(s.num);
    if (s.den)
        j["den"] = poly_to_json(*s.den);
    else
        j["den"] = "auto-omega";
    return j;
}

/// {alpha, beta, m1, m2, M, N, xi?}; validated on return.
inline SobolevConfig config_from_json(const Json& j) {
    if (!j.is_object()) throw InputError("configuration must be a JSON object");
    SobolevConfig cfg;
    cfg.alpha = detail::integer_field(j, "alpha");
    cfg.beta = detail::integer_field(j, "beta");
    long m1 = detail::integer_field(j, "m1");
    long m2 = detail::integer_field(j, "m2");
    if (m1 < 0 || m2 < 0 || m1 > 64 || m2 > 64) throw InputError("m1 and m2 must lie in [0, 64]");
    cfg.m1 = static_cast<int>(m1);
    cfg.m2 = static_cast<int>(m2);
    cfg.M = matrix_from_json(j.value("M", Json()), static_cast<std::size_t>(m1), "M");
    cfg.N = matrix_from_json(j.value("N", Json()), static_cast<std::size_t>(m2), "N");
    if (j.contains("xi")) cfg.xi = poly_from_json(j.at("xi"));
    cfg.validate();
    return cfg;
}

inline Json config_to_json(const SobolevConfig& cfg) {
    Json j;
    j["alpha"] = cfg.alpha;
    j["beta"] = cfg.beta;
    j["m1"] = cfg.m1;
    j["m2"] = cfg.m2;
    j["M"] = matrix_to_json(cfg.M);
    j["N"] = matrix_to_json(cfg.N);
    j["xi"] = poly_to_json(cfg.xi);
    return j;
}

inline Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw InputError(path + ": " + e.what());
    }
}

inline Json diffop_to_json(const DiffOp& d) {
    Json j;
    j["order"] = d.order();
    Json co = Json::array();
    for (const auto& c : d.coeffs()) co.push_back(poly_to_json(c));
    j["coeffs"] = co;
    return j;
}

inline Json rank_trace_to_json(const WeightedRankTrace& tr) {
    Json j;
    Json eta = Json::array();
    for (const auto& e : tr.eta) eta.push_back(rational_to_json(e));
    j["eta"] = eta;
    j["tau"] = tr.tau;
    Json cols = Json::array();
    for (auto c : tr.reduced_columns) cols.push_back(c + 1);
    j["reduced_columns"] = cols;
    j["value"] = rational_to_json(tr.value);
    return j;
}

}  // namespace jsob

#endif  // JSOB_IO_HPP
