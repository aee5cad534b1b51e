#pragma once

#include <string>

#include <json.hpp>

#include "pft/envs/floor.hpp"
#include "pft/envs/lightdark.hpp"

namespace pft::envs {

/// Map file schema:
/// {
///   "name": "floor",
///   "bounds": [x0, y0, x1, y1],
///   "walls": [[x0, y0, x1, y1], ...],
///   "regions": [{"name": "...", "kind": "goal|trap|light|start",
///                "rect": [x0, y0, x1, y1]}, ...],
///   "params": { env-specific numeric overrides }
/// }
nlohmann::json map_to_json(const EnvMap& map, const std::string& name);
EnvMap map_from_json(const nlohmann::json& j);

nlohmann::json floor_config_to_json(const FloorConfig& cfg);
void floor_config_from_json(const nlohmann::json& j, FloorConfig& cfg);

nlohmann::json lightdark_config_to_json(const LightDarkConfig& cfg);
void lightdark_config_from_json(const nlohmann::json& j, LightDarkConfig& cfg);

/// Loads a map file and builds the matching environment; `env_kind` must be
/// "floor" or "lightdark". Throws std::invalid_argument on schema errors.
Environment load_environment(const std::string& path,
                             const std::string& env_kind,
                             FloorConfig floor_cfg = {},
                             LightDarkConfig lightdark_cfg = {},
                             LightDarkAblation ablation =
                                 LightDarkAblation::kNone);

/// Default map + params for the named environment, as JSON.
nlohmann::json default_map_json(const std::string& env_kind);

}  // namespace pft::envs
