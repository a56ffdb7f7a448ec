#pragma once

#include <json.hpp>

#include "btfp/inverse.hpp"

namespace btfp {

nlohmann::json band_to_json(const BandSpec& spec);
BandSpec band_from_json(const nlohmann::json& j);

/// Schema: {p, lower, band[], n, period, det, blocks:{diag[][], upper[][], lower[][]}}.
nlohmann::json to_json(const PeriodicInverse& inv);
PeriodicInverse periodic_inverse_from_json(const nlohmann::json& j);

}  // namespace btfp
