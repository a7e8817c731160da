#pragma once

#include <string>

#include "gendiv/curve.hpp"

namespace gendiv {

/// Curve description files are JSON documents over the rationals:
///
///   {"field": "Q", "chart1": {"semigroup": [3, 4, 5]}}
///   {"field": "Q", "chart1": {"clusters": [
///       {"preset": "node", "points": ["1", "-1"]},
///       {"branches": ["0"], "conductor_orders": [3],
///        "conditions": [["0", "1", "0"], ["0", "0", "1"]]}]}}
///
/// Rational numbers are strings "p/q" (plain integers are also accepted).
Curve parse_curve_json(const std::string& json_text);
Curve load_curve_file(const std::string& path);
std::string curve_to_json(const Curve& c);

}  // namespace gendiv
