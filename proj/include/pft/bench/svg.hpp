#pragma once

#include <string>

#include "pft/bench/episode.hpp"
#include "pft/core/env_map.hpp"

namespace pft::bench {

/// Renders walls, regions, the true and belief-mean trajectories, and any
/// belief snapshots in the record as an SVG document. Pure function of its
/// inputs; an empty record yields a map-only drawing.
std::string render_trajectory(const EpisodeRecord& record, const EnvMap& map);

}  // namespace pft::bench
