#include "zpgabor/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace zpgabor::json_io {

namespace {

constexpr std::int64_t kJsonIntLimit = std::int64_t(1) << 53;

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument("json: " + what); }

}  // namespace

json to_json(const mpz_class& z) {
    if (z.fits_slong_p()) {
        const long v = z.get_si();
        if (v < kJsonIntLimit && v > -kJsonIntLimit) return json(static_cast<std::int64_t>(v));
    }
    return json(z.get_str());
}

mpz_class mpz_from_json(const json& j) {
    if (j.is_number_integer()) {
        mpz_class z;
        z = static_cast<long>(j.get<std::int64_t>());
        return z;
    }
    if (j.is_string()) return mpz_class(j.get<std::string>());
    bad("expected integer or decimal string");
}

json to_json(const Rational& q) { return json::array({to_json(q.num()), to_json(q.den())}); }

Rational rational_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2) bad("rational must be [num, den]");
    return Rational(mpz_from_json(j[0]), mpz_from_json(j[1]));
}

json to_json(const CycNum& v) {
    json coeffs = json::array();
    for (const Rational& c : v.coeffs()) coeffs.push_back(to_json(c));
    return json{{"p", v.p()}, {"coeffs", coeffs}};
}

CycNum cycnum_from_json(const json& j) {
    if (!j.is_object() || !j.contains("p") || !j.contains("coeffs")) bad("cycnum must be {p, coeffs}");
    const std::uint32_t p = j.at("p").get<std::uint32_t>();
    const json& coeffs = j.at("coeffs");
    if (!coeffs.is_array() || coeffs.size() != p - 1) bad("cycnum needs p-1 coefficients");
    std::vector<Rational> weights(p);
    for (std::uint32_t i = 0; i < p - 1; ++i) weights[i + 1] = rational_from_json(coeffs[i]);
    return CycNum::from_exponent_rationals(p, weights);
}

json to_json(const Point& x) {
    json out = json::array();
    for (std::int32_t c : x.coords) out.push_back(c);
    return out;
}

Point point_from_json(const GroupParams& g, const json& j) {
    if (!j.is_array() || j.size() != g.d) bad("point must have d coordinates");
    std::vector<std::int64_t> coords;
    for (const json& c : j) coords.push_back(c.get<std::int64_t>());
    return make_point(g, coords);
}

json to_json(const PointSet& s) {
    json pts = json::array();
    for (const Point& x : s.points()) pts.push_back(to_json(x));
    return json{{"p", s.params().p}, {"d", s.params().d}, {"points", pts}};
}

PointSet point_set_from_json(const json& j) {
    if (!j.is_object() || !j.contains("p") || !j.contains("d") || !j.contains("points")) {
        bad("point set must be {p, d, points}");
    }
    const GroupParams g(j.at("p").get<std::uint32_t>(), j.at("d").get<std::uint32_t>());
    PointSet s(g);
    for (const json& pj : j.at("points")) s.insert(point_to_index(g, point_from_json(g, pj)));
    return s;
}

json to_json(const Window& w) {
    json values = json::array();
    for (const CycNum& v : w.values()) values.push_back(to_json(v));
    return json{{"p", w.params().p}, {"d", w.params().d}, {"backend", "exact"}, {"values", values}};
}

json to_json(const FloatWindow& w) {
    json values = json::array();
    for (const std::complex<double>& v : w.values()) values.push_back(json::array({v.real(), v.imag()}));
    return json{{"p", w.params().p}, {"d", w.params().d}, {"backend", "float"}, {"values", values}};
}

namespace {

GroupParams window_params(const json& j) {
    if (!j.is_object() || !j.contains("p") || !j.contains("d") || !j.contains("values")) {
        bad("window must be {p, d, backend, values}");
    }
    return GroupParams(j.at("p").get<std::uint32_t>(), j.at("d").get<std::uint32_t>());
}

}  // namespace

bool window_json_is_float(const json& j) {
    return j.is_object() && j.value("backend", "exact") == std::string("float");
}

Window window_from_json(const json& j) {
    const GroupParams g = window_params(j);
    if (window_json_is_float(j)) bad("expected an exact-backend window");
    const json& values = j.at("values");
    if (!values.is_array() || static_cast<std::int64_t>(values.size()) != g.size) {
        bad("window needs p^d values");
    }
    std::vector<CycNum> out;
    out.reserve(values.size());
    for (const json& vj : values) {
        CycNum v = cycnum_from_json(vj);
        if (v.p() != g.p) bad("window value in the wrong cyclotomic field");
        out.push_back(std::move(v));
    }
    return Window(g, std::move(out));
}

FloatWindow float_window_from_json(const json& j) {
    const GroupParams g = window_params(j);
    if (!window_json_is_float(j)) return to_float(window_from_json(j));
    const json& values = j.at("values");
    if (!values.is_array() || static_cast<std::int64_t>(values.size()) != g.size) {
        bad("window needs p^d values");
    }
    std::vector<std::complex<double>> out;
    out.reserve(values.size());
    for (const json& vj : values) {
        if (!vj.is_array() || vj.size() != 2) bad("float value must be [re, im]");
        out.emplace_back(vj[0].get<double>(), vj[1].get<double>());
    }
    return FloatWindow(g, std::move(out));
}

json to_json(const Verdict& v) {
    json out{{"passed", v.passed()}, {"status", to_string(v.status)}, {"detail", v.detail}};
    if (!v.witness.is_null()) out["witness"] = v.witness;
    if (!v.certificate.is_null()) out["certificate"] = v.certificate;
    return out;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    json j;
    in >> j;
    return j;
}

void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << j.dump(2) << "\n";
}

void write_json_file_atomic(const std::string& path, const json& j) {
    const std::string tmp = path + ".tmp";
    write_json_file(tmp, j);
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        throw std::runtime_error("atomic rename failed for: " + path);
    }
}

}  // namespace zpgabor::json_io
