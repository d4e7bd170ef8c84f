#pragma once

#include <stdexcept>

#include "json.hpp"
#include "trvoros/curve/spectral_curve.hpp"

namespace trv {

struct InvalidCurveDocument : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// {x_num, x_den, y_num, y_den, params}: each polynomial is a map from exponent
// to coefficient, e.g. {"0": "1/2", "3": -3}; x_den and y_den default to 1 and
// params to lambda = t = 1, nu = 1/2. The result is a custom curve.
SpectralCurve curve_from_json(const nlohmann::json& doc);

}  // namespace trv
