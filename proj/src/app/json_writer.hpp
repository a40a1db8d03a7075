#pragma once

#include <string>

#include <json.hpp>

namespace lieb::app {

using Json = nlohmann::ordered_json;

/// Pretty-printed JSON with every float written to 17 significant digits;
/// NaN and infinities become null.
std::string write_json(const Json& doc);

/// Finite doubles as numbers, everything else as null.
Json number_or_null(double v);

}  // namespace lieb::app
