#pragma once

#include <json.hpp>

#include "schwarz/error.hpp"
#include "schwarz/jet.hpp"

namespace schwarz {

using Json = nlohmann::json;

/// Complex numbers travel as [re, im]; a bare number is read as real.
inline Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

inline Complex complex_from_json(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return {j[0].get<double>(), j[1].get<double>()};
  }
  throw InvalidArgument("expected a number or [re, im] pair, got " + j.dump());
}

}  // namespace schwarz
