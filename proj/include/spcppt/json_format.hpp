#pragma once

// Deterministic JSON text: sorted keys, two-space indent, floats printed with
// 17 significant digits, arrays of scalars kept on one line.

#include <string>

#include <json.hpp>

namespace spcppt {

/// %.17g formatting; NaN and infinities become null.
std::string format_double(double x);

std::string to_canonical_json(const nlohmann::json& value);

}  // namespace spcppt
