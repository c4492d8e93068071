#pragma once

#include <complex>
#include <string>

#include <json.hpp>

#include "zpgabor/cyclotomic.hpp"
#include "zpgabor/group.hpp"
#include "zpgabor/rational.hpp"
#include "zpgabor/verdict.hpp"
#include "zpgabor/window.hpp"

namespace zpgabor::json_io {

using nlohmann::json;

// Numbers are emitted as JSON integers when they fit in 53 bits, otherwise as
// decimal strings; both forms are accepted on input.
json to_json(const mpz_class& z);
mpz_class mpz_from_json(const json& j);

json to_json(const Rational& q);                     // [num, den]
Rational rational_from_json(const json& j);

json to_json(const CycNum& v);                       // {p, coeffs}
CycNum cycnum_from_json(const json& j);

json to_json(const Point& x);                        // [c1, ..., cd]
Point point_from_json(const GroupParams& g, const json& j);

json to_json(const PointSet& s);                     // {p, d, points} sorted
PointSet point_set_from_json(const json& j);

json to_json(const Window& w);                       // {p, d, backend:"exact", values}
json to_json(const FloatWindow& w);                  // {p, d, backend:"float", values:[[re,im]..]}
Window window_from_json(const json& j);
FloatWindow float_window_from_json(const json& j);
bool window_json_is_float(const json& j);

json to_json(const Verdict& v);                      // {passed, status, detail, witness?, certificate?}

json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);
/// Write-to-temp-then-rename, for checkpoint files.
void write_json_file_atomic(const std::string& path, const json& j);

}  // namespace zpgabor::json_io
