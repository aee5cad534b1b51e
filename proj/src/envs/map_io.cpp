#include "pft/envs/map_io.hpp"

#include <fstream>
#include <stdexcept>

namespace pft::envs {

using nlohmann::json;

namespace {

json rect_to_json(const Rect& r) { return json::array({r.x0, r.y0, r.x1, r.y1}); }

Rect rect_from_json(const json& j) {
  if (!j.is_array() || j.size() != 4) {
    throw std::invalid_argument("rect must be [x0, y0, x1, y1]");
  }
  return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>(),
          j[3].get<double>()};
}

template <typename T>
void maybe(const json& j, const char* key, T& out) {
  if (j.contains(key)) out = j.at(key).get<T>();
}

}  // namespace

json map_to_json(const EnvMap& map, const std::string& name) {
  json j;
  j["name"] = name;
  j["bounds"] = rect_to_json(map.bounds);
  j["walls"] = json::array();
  for (const Segment& w : map.walls) {
    j["walls"].push_back(json::array({w.x0, w.y0, w.x1, w.y1}));
  }
  j["regions"] = json::array();
  for (const Region& r : map.regions) {
    j["regions"].push_back({{"name", r.name},
                            {"kind", to_string(r.kind)},
                            {"rect", rect_to_json(r.rect)}});
  }
  return j;
}

EnvMap map_from_json(const json& j) {
  EnvMap map;
  map.bounds = rect_from_json(j.at("bounds"));
  if (j.contains("walls")) {
    for (const json& w : j.at("walls")) {
      if (!w.is_array() || w.size() != 4) {
        throw std::invalid_argument("wall must be [x0, y0, x1, y1]");
      }
      map.walls.push_back({w[0].get<double>(), w[1].get<double>(),
                           w[2].get<double>(), w[3].get<double>()});
    }
  }
  for (const json& r : j.at("regions")) {
    map.regions.push_back({r.at("name").get<std::string>(),
                           region_kind_from_string(r.at("kind").get<std::string>()),
                           rect_from_json(r.at("rect"))});
  }
  map.validate();
  return map;
}

json floor_config_to_json(const FloorConfig& cfg) {
  return {{"speed", cfg.speed},
          {"obs_noise_std", cfg.obs_noise_std},
          {"goal_reward", cfg.goal_reward},
          {"trap_penalty", cfg.trap_penalty},
          {"discount", cfg.discount},
          {"max_steps", cfg.max_steps},
          {"proposer_grid", cfg.proposer_grid},
          {"proposer_jitter", cfg.proposer_jitter}};
}

void floor_config_from_json(const json& j, FloorConfig& cfg) {
  maybe(j, "speed", cfg.speed);
  maybe(j, "obs_noise_std", cfg.obs_noise_std);
  maybe(j, "goal_reward", cfg.goal_reward);
  maybe(j, "trap_penalty", cfg.trap_penalty);
  maybe(j, "discount", cfg.discount);
  maybe(j, "max_steps", cfg.max_steps);
  maybe(j, "proposer_grid", cfg.proposer_grid);
  maybe(j, "proposer_jitter", cfg.proposer_jitter);
}

json lightdark_config_to_json(const LightDarkConfig& cfg) {
  return {{"speed", cfg.speed},
          {"sigma_light", cfg.sigma_light},
          {"sigma_dark", cfg.sigma_dark},
          {"sigma_test", cfg.sigma_test},
          {"proposer_std_light", cfg.proposer_std_light},
          {"proposer_std_dark", cfg.proposer_std_dark},
          {"goal_reward", cfg.goal_reward},
          {"trap_penalty", cfg.trap_penalty},
          {"discount", cfg.discount},
          {"max_steps", cfg.max_steps},
          {"trap_size", cfg.trap_size},
          {"trap_strip", rect_to_json(cfg.trap_strip)}};
}

void lightdark_config_from_json(const json& j, LightDarkConfig& cfg) {
  maybe(j, "speed", cfg.speed);
  maybe(j, "sigma_light", cfg.sigma_light);
  maybe(j, "sigma_dark", cfg.sigma_dark);
  maybe(j, "sigma_test", cfg.sigma_test);
  maybe(j, "proposer_std_light", cfg.proposer_std_light);
  maybe(j, "proposer_std_dark", cfg.proposer_std_dark);
  maybe(j, "goal_reward", cfg.goal_reward);
  maybe(j, "trap_penalty", cfg.trap_penalty);
  maybe(j, "discount", cfg.discount);
  maybe(j, "max_steps", cfg.max_steps);
  maybe(j, "trap_size", cfg.trap_size);
  if (j.contains("trap_strip")) cfg.trap_strip = rect_from_json(j.at("trap_strip"));
}

Environment load_environment(const std::string& path,
                             const std::string& env_kind,
                             FloorConfig floor_cfg,
                             LightDarkConfig lightdark_cfg,
                             LightDarkAblation ablation) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open map file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("map file " + path + ": " + e.what());
  }
  const EnvMap map = map_from_json(j);
  const json params = j.value("params", json::object());
  if (env_kind == "floor") {
    floor_config_from_json(params, floor_cfg);
    return make_floor_env(map, floor_cfg);
  }
  if (env_kind == "lightdark") {
    lightdark_config_from_json(params, lightdark_cfg);
    return make_lightdark_env(map, lightdark_cfg, ablation);
  }
  throw std::invalid_argument("no map support for env: " + env_kind);
}

json default_map_json(const std::string& env_kind) {
  if (env_kind == "floor") {
    FloorConfig cfg;
    json j = map_to_json(make_floor_map(cfg), "floor");
    j["params"] = floor_config_to_json(cfg);
    return j;
  }
  if (env_kind == "lightdark") {
    LightDarkConfig cfg;
    json j = map_to_json(make_lightdark_map(cfg), "lightdark");
    j["params"] = lightdark_config_to_json(cfg);
    return j;
  }
  throw std::invalid_argument("no default map for env: " + env_kind);
}

}  // namespace pft::envs
