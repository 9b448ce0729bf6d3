#pragma once

#include <json.hpp>

#include "secres/weyman.hpp"

namespace secres::detail {

nlohmann::json to_json(const EquivariantResolution& r);
EquivariantResolution resolution_from(const nlohmann::json& j);
SubspaceConfig config_from(const nlohmann::json& j);
nlohmann::json bigint_to_json(const BigInt& v);
BigInt bigint_from(const nlohmann::json& j);

}  // namespace secres::detail
