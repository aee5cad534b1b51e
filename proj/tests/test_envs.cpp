#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <fstream>

#include "pft/bench/stats.hpp"
#include "pft/envs/floor.hpp"
#include "pft/envs/lightdark.hpp"
#include "pft/envs/map_io.hpp"
#include "pft/envs/tiger.hpp"

using namespace pft;

TEST_CASE("radar ranges") {
  SUBCASE("center of an empty box") {
    EnvMap box;
    box.bounds = {0, 0, 1, 1};
    const ObsVec o = envs::radar_ranges(box, {0.5, 0.5});
    REQUIRE(o.size() == 4);
    for (double r : o) CHECK(r == doctest::Approx(0.5));
  }

  SUBCASE("origin on a wall is a configuration error") {
    EnvMap box;
    box.bounds = {0, 0, 1, 1};
    box.walls.push_back({0.5, 0.0, 0.5, 1.0});
    CHECK_THROWS_AS(envs::radar_ranges(box, {0.5, 0.3}),
                    std::invalid_argument);
  }

  SUBCASE("corridor states are identical across floors") {
    const EnvMap map = envs::make_floor_map();
    for (double x : {0.10, 0.33, 0.50, 0.68, 0.91}) {
      for (double y : {0.22, 0.25, 0.29}) {
        const ObsVec bottom = envs::radar_ranges(map, {x, y});
        const ObsVec top = envs::radar_ranges(map, {x, y + 0.5});
        for (int i = 0; i < 4; ++i) {
          CHECK(bottom[i] == doctest::Approx(top[i]).epsilon(1e-12));
        }
      }
    }
  }

  SUBCASE("wall states separate the floors by more than 10 sigma") {
    const EnvMap map = envs::make_floor_map();
    const double sigma = envs::FloorConfig{}.obs_noise_std;
    int strong = 0;
    for (double x : {0.10, 0.30, 0.45, 0.70, 0.90}) {
      const ObsVec bottom = envs::radar_ranges(map, {x, 0.10});
      const ObsVec top = envs::radar_ranges(map, {x, 0.60});
      double max_diff = 0.0;
      for (int i = 0; i < 4; ++i) {
        max_diff = std::max(max_diff, std::fabs(bottom[i] - top[i]));
      }
      if (max_diff > 10.0 * sigma) ++strong;
    }
    // Room widths collide at some x (e.g. 0.90), but most wall states pin
    // the floor decisively.
    CHECK(strong >= 4);
  }
}

TEST_CASE("radar density") {
  const EnvMap map = envs::make_floor_map();
  const double sigma = 0.01;

  SUBCASE("noise-free observation hits the Gaussian peak") {
    const StateVec s{0.60, 0.40};
    const ObsVec o = envs::radar_ranges(map, s);
    const double expected = std::pow(2.0 * M_PI * sigma * sigma, -2.0);
    CHECK(envs::radar_density(map, o, s, sigma) ==
          doctest::Approx(expected).epsilon(1e-9));
  }

  SUBCASE("ten-sigma mismatch suppresses density by > 1e20") {
    const StateVec s{0.60, 0.40};
    ObsVec o = envs::radar_ranges(map, s);
    const double peak = envs::radar_density(map, o, s, sigma);
    o[0] += 10.0 * sigma;
    const double off = envs::radar_density(map, o, s, sigma);
    REQUIRE(off > 0.0);
    CHECK(peak / off > 1e20);
  }

  SUBCASE("nonnegative for arbitrary finite observations") {
    Rng rng(2);
    for (int i = 0; i < 200; ++i) {
      const ObsVec o{rng.uniform(-1, 2), rng.uniform(-1, 2),
                     rng.uniform(-1, 2), rng.uniform(-1, 2)};
      const StateVec s{rng.uniform(0.01, 0.99), rng.uniform(0.01, 0.99)};
      CHECK(envs::radar_density(map, o, s, sigma) >= 0.0);
    }
  }
}

TEST_CASE("radar proposer") {
  const EnvMap map = envs::make_floor_map();

  SUBCASE("near-exact observation from a unique wall state") {
    // Bottom-floor room [0.84, 1.0] has a room width no other room shares.
    const StateVec truth{0.90, 0.10};
    const envs::RadarProposer proposer(map, 0.001, 64, 0.01);
    const ObsVec o = envs::radar_ranges(map, truth);
    Rng rng(3);
    int close = 0;
    for (int i = 0; i < 1000; ++i) {
      const StateVec p = proposer.propose(o, rng);
      close += distance(p, truth) < 0.05;
    }
    CHECK(close >= 900);
  }

  SUBCASE("corridor observation splits across floors") {
    const envs::RadarProposer proposer(map, 0.01, 64, 0.01);
    const ObsVec o = envs::radar_ranges(map, {0.50, 0.25});
    Rng rng(4);
    int top = 0;
    for (int i = 0; i < 1000; ++i) {
      top += proposer.propose(o, rng).y > 0.5;
    }
    CHECK(top > 300);
    CHECK(top < 700);
  }

  SUBCASE("proposals stay inside bounds") {
    const envs::RadarProposer proposer(map, 0.01, 64, 0.01);
    Rng rng(5);
    for (int i = 0; i < 500; ++i) {
      const StateVec s{rng.uniform(0.02, 0.98), rng.uniform(0.02, 0.98)};
      ObsVec o;
      try {
        o = envs::radar_observe(map, s, 0.01, rng);
      } catch (const std::invalid_argument&) {
        continue;  // landed on a wall; not a proposer concern
      }
      const StateVec p = proposer.propose(o, rng);
      CHECK(map.bounds.contains(p));
    }
  }
}

TEST_CASE("floor region layout is point-symmetric") {
  const EnvMap map = envs::make_floor_map();
  // (x, y) -> (1-x, 1-y) swaps the floors and the corridor ends; regions
  // must map onto regions of the same kind.
  for (const Region& r : map.regions) {
    const Rect reflected{1.0 - r.rect.x1, 1.0 - r.rect.y1, 1.0 - r.rect.x0,
                         1.0 - r.rect.y0};
    bool matched = false;
    for (const Region& other : map.regions) {
      if (other.kind != r.kind) continue;
      if (std::fabs(other.rect.x0 - reflected.x0) < 1e-12 &&
          std::fabs(other.rect.y0 - reflected.y0) < 1e-12 &&
          std::fabs(other.rect.x1 - reflected.x1) < 1e-12 &&
          std::fabs(other.rect.y1 - reflected.y1) < 1e-12) {
        matched = true;
        break;
      }
    }
    CHECK(matched);
  }
}

TEST_CASE("lightdark models") {
  const envs::LightDarkConfig cfg;
  const EnvMap map = envs::make_lightdark_map(cfg);

  SUBCASE("every in-bounds point is in exactly one of light or dark") {
    Rng rng(6);
    for (int i = 0; i < 2000; ++i) {
      const StateVec s{rng.uniform(0, 2), rng.uniform(0, 2)};
      const bool light = map.in_light(s);
      const double sigma = envs::lightdark_sigma(map, cfg, s);
      CHECK(sigma == (light ? cfg.sigma_light : cfg.sigma_dark));
    }
  }

  SUBCASE("light observations are pinned to the state") {
    Rng rng(7);
    const StateVec s{1.7, 1.0};
    for (int i = 0; i < 2000; ++i) {
      const ObsVec o = envs::lightdark_observe(cfg, map, s, rng);
      CHECK(std::fabs(o[0] - s.x) < 0.05);
      CHECK(std::fabs(o[1] - s.y) < 0.05);
    }
  }

  SUBCASE("density is maximized at the state") {
    const StateVec s{0.8, 1.1};
    const ObsVec at{0.8, 1.1};
    const double peak = envs::lightdark_density(cfg, map, at, s);
    Rng rng(8);
    for (int i = 0; i < 200; ++i) {
      const ObsVec o{s.x + rng.uniform(-0.5, 0.5), s.y + rng.uniform(-0.5, 0.5)};
      CHECK(envs::lightdark_density(cfg, map, o, s) <= peak);
    }
  }

  SUBCASE("dark proposer spread matches its std within 5 percent") {
    Rng rng(9);
    const ObsVec o{1.0, 1.0};
    double sx = 0.0, sx2 = 0.0;
    const int n = 10000;
    for (int i = 0; i < n; ++i) {
      const StateVec p = envs::lightdark_propose(cfg, map, o, rng);
      sx += p.x - 1.0;
      sx2 += (p.x - 1.0) * (p.x - 1.0);
    }
    const double mean = sx / n;
    const double sd = std::sqrt(sx2 / n - mean * mean);
    CHECK(sd == doctest::Approx(0.1).epsilon(0.05));
  }

  SUBCASE("light proposer is tight") {
    Rng rng(10);
    const ObsVec o{1.7, 1.0};
    for (int i = 0; i < 1000; ++i) {
      const StateVec p = envs::lightdark_propose(cfg, map, o, rng);
      CHECK(std::fabs(p.x - 1.7) < 0.06);
    }
  }

  SUBCASE("mismatch ablation widens only the generated noise") {
    const auto vanilla = envs::make_lightdark_env(cfg);
    const auto shifted =
        envs::make_lightdark_env(cfg, envs::LightDarkAblation::kMismatch);
    const StateVec s{0.5, 1.0};
    // Densities agree (the model is unchanged)...
    const ObsVec o{0.6, 1.1};
    CHECK(vanilla.model.obs_density(o, s) ==
          doctest::Approx(shifted.model.obs_density(o, s)));
    // ...but generated spread doubles.
    auto spread = [&](const ModelSuite& suite) {
      Rng rng(11);
      double s2 = 0.0;
      const int n = 4000;
      for (int i = 0; i < n; ++i) {
        const ObsVec obs = suite.obs_generator(s, rng);
        s2 += (obs[0] - s.x) * (obs[0] - s.x);
      }
      return std::sqrt(s2 / n);
    };
    CHECK(spread(vanilla.truth) == doctest::Approx(0.3).epsilon(0.05));
    CHECK(spread(shifted.truth) == doctest::Approx(0.6).epsilon(0.05));
  }
}

TEST_CASE("test-time trap spawning") {
  const envs::LightDarkConfig cfg;
  const EnvMap map = envs::make_lightdark_map(cfg);

  SUBCASE("deterministic per seed") {
    Rng a(12), b(12);
    const auto t1 = envs::spawn_test_traps(cfg, map, a);
    const auto t2 = envs::spawn_test_traps(cfg, map, b);
    REQUIRE(t1.size() == 2);
    for (int i = 0; i < 2; ++i) {
      CHECK(t1[i].rect.x0 == t2[i].rect.x0);
      CHECK(t1[i].rect.y1 == t2[i].rect.y1);
    }
  }

  SUBCASE("always in bounds, disjoint from goal, right size") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      Rng rng(seed);
      for (const Region& t : envs::spawn_test_traps(cfg, map, rng)) {
        CHECK(t.rect.x0 >= map.bounds.x0);
        CHECK(t.rect.x1 <= map.bounds.x1);
        CHECK(t.rect.width() == doctest::Approx(cfg.trap_size));
        CHECK(t.rect.height() == doctest::Approx(cfg.trap_size));
        CHECK_FALSE(t.rect.intersects(
            map.regions_of(RegionKind::kGoal).front()->rect));
      }
    }
  }

  SUBCASE("centers are uniform over the strip") {
    // 4-bin histogram over the strip's long axis; chi-square must stay
    // below the df=3, p=0.01 critical value 11.345.
    std::vector<int> bins(4, 0);
    const double lo = cfg.trap_strip.x0, hi = cfg.trap_strip.x1;
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
      Rng rng(1000 + seed);
      for (const Region& t : envs::spawn_test_traps(cfg, map, rng)) {
        const double cx = 0.5 * (t.rect.x0 + t.rect.x1);
        int bin = static_cast<int>((cx - lo) / (hi - lo) * 4.0);
        bin = std::min(std::max(bin, 0), 3);
        ++bins[bin];
      }
    }
    CHECK(bench::chi_square_uniform(bins) < 11.345);
  }

  SUBCASE("injected traps affect rewards of both suites") {
    const auto env = envs::make_lightdark_env(cfg);
    Rng rng(13);
    const auto traps = envs::spawn_test_traps(cfg, map, rng);
    const auto with = envs::with_extra_traps(env, traps);
    const StateVec inside = traps.front().rect.center();
    const StateVec before{inside.x - 0.2, inside.y};
    CHECK(with.model.reward(before, 0, inside) == doctest::Approx(-100.0));
    CHECK(with.truth.reward(before, 0, inside) == doctest::Approx(-100.0));
    CHECK(env.model.reward(before, 0, inside) == doctest::Approx(0.0));
    CHECK(with.map.in_trap(inside));
  }
}

TEST_CASE("tiger fixture basics") {
  const auto fx = envs::tiger_fixture();
  Rng rng(14);

  SUBCASE("listening keeps the state, opening resets it") {
    const StateVec left{0.0, 0.0};
    CHECK(fx.models.transition(left, envs::kTigerListen, rng) == left);
    int rights = 0;
    for (int i = 0; i < 2000; ++i) {
      rights += fx.models.transition(left, envs::kTigerOpenLeft, rng).x > 0.5;
    }
    CHECK(rights > 800);
    CHECK(rights < 1200);
  }

  SUBCASE("rewards") {
    const StateVec left{0.0, 0.0}, right{1.0, 0.0};
    CHECK(fx.models.reward(left, envs::kTigerListen, left) == -1.0);
    CHECK(fx.models.reward(left, envs::kTigerOpenLeft, left) == -100.0);
    CHECK(fx.models.reward(left, envs::kTigerOpenRight, left) == 10.0);
    CHECK(fx.models.reward(right, envs::kTigerOpenRight, right) == -100.0);
  }

  SUBCASE("belief construction is exact") {
    const auto b = fx.belief(0.5, 100);
    int rights = 0;
    for (const StateVec& p : b.particles) rights += p.x > 0.5;
    CHECK(rights == 50);
  }
}

TEST_CASE("map json round trip") {
  const EnvMap map = envs::make_floor_map();
  const auto j = envs::map_to_json(map, "floor");
  const EnvMap back = envs::map_from_json(j);
  CHECK(back.walls.size() == map.walls.size());
  CHECK(back.regions.size() == map.regions.size());
  CHECK(back.bounds.x1 == map.bounds.x1);
  for (std::size_t i = 0; i < map.regions.size(); ++i) {
    CHECK(back.regions[i].name == map.regions[i].name);
    CHECK(back.regions[i].kind == map.regions[i].kind);
    CHECK(back.regions[i].rect.x0 == map.regions[i].rect.x0);
  }
}

TEST_CASE("load_environment applies map overrides") {
  auto j = envs::default_map_json("lightdark");
  j["params"]["sigma_dark"] = 0.5;
  const std::string path = "test_map_override.json";
  std::ofstream(path) << j.dump();

  const auto env = envs::load_environment(path, "lightdark");
  // Density in the dark region must reflect the overridden sigma.
  const StateVec s{0.5, 1.0};
  const ObsVec o{0.5, 1.0};
  const double peak = env.model.obs_density(o, s);
  CHECK(peak == doctest::Approx(1.0 / (2.0 * M_PI * 0.25)).epsilon(1e-9));
  std::remove(path.c_str());

  CHECK_THROWS_AS(envs::load_environment("missing.json", "lightdark"),
                  std::invalid_argument);
}
