#include <doctest.h>

#include <cmath>

#include "perc/colorswitch.hpp"

using namespace perc;

TEST_CASE("output sequence replaces the last entry by star(bar(.))") {
  Annulus a{{0, 0}, 4, 32};
  Configuration cfg = Configuration::sample_critical({{0, 0}, 33}, {11, 0});
  const Color all[4] = {Color::O, Color::C, Color::Os, Color::Cs};
  for (Color last : all) {
    ColorSequence sigma{Color::O, Color::Cs, last};
    if (!polychromatic(sigma)) continue;
    SwitchReport rep = switch_last_color(cfg, a, sigma, 5);
    REQUIRE(rep.sigma_out.size() == 3);
    CHECK(rep.sigma_out[0] == Color::O);
    CHECK(rep.sigma_out[1] == Color::Cs);
    CHECK(rep.sigma_out[2] == star(bar(last)));
  }
  // (O,C*,C*) -> (O,C*,O).
  SwitchReport rep = switch_last_color(cfg, a, {Color::O, Color::Cs, Color::Cs}, 5);
  CHECK(rep.sigma_out == ColorSequence{Color::O, Color::Cs, Color::O});
}

TEST_CASE("preconditions are rejected") {
  Annulus a{{0, 0}, 4, 32};
  Configuration cfg = Configuration::sample_critical({{0, 0}, 33}, {11, 1});
  // k < 3.
  CHECK_THROWS_AS(switch_last_color(cfg, a, {Color::O, Color::Cs}, 5),
                  std::invalid_argument);
  // Monochromatic.
  CHECK_THROWS_AS(switch_last_color(cfg, a, {Color::O, Color::O, Color::Os}, 5),
                  std::invalid_argument);
  // sigma_1, sigma_2 of the same bar-class.
  CHECK_THROWS_AS(switch_last_color(cfg, a, {Color::O, Color::Os, Color::Cs}, 5),
                  std::invalid_argument);
  // Sub-annulus B(2n, N/2) empty.
  CHECK_THROWS_AS(
      switch_last_color(cfg, {{0, 0}, 4, 8}, {Color::O, Color::Cs, Color::Cs}, 5),
      std::invalid_argument);
}

TEST_CASE("pipeline is deterministic and stage reporting is consistent") {
  Annulus a{{0, 0}, 2, 16};
  ColorSequence sigma{Color::O, Color::Cs, Color::Cs};
  int ran = 0;
  for (std::uint64_t t = 0; t < 400; ++t) {
    Configuration cfg = Configuration::sample_critical({{0, 0}, 17}, {13, t});
    SwitchReport r1 = switch_last_color(cfg, a, sigma, 5);
    SwitchReport r2 = switch_last_color(cfg, a, sigma, 5);
    CHECK(r1.to_json() == r2.to_json());
    CHECK(r1.success() == (r1.failed_stage() == 0));
    // Stages fail in order: after the first failure nothing later may claim ok
    // about work that never ran.
    bool failed = false;
    for (const auto& s : r1.stages) {
      if (failed) CHECK(!s.ok);
      if (!s.ok) failed = true;
    }
    ran += r1.success();
  }
  CHECK(ran > 0);
}

TEST_CASE("pipeline success implies the switched arm event") {
  Annulus a{{0, 0}, 2, 16};
  ColorSequence sigma{Color::O, Color::Cs, Color::Cs};
  ColorSequence switched{Color::O, Color::Cs, Color::O};
  int successes = 0;
  for (std::uint64_t t = 0; t < 1500; ++t) {
    Configuration cfg = Configuration::sample_critical({{0, 0}, 17}, {19, t});
    SwitchReport rep = switch_last_color(cfg, a, sigma, 5);
    if (!rep.success()) continue;
    ++successes;
    // Stage 5 asserted detection of sigma'' in B(2n, N/2); cross-check on the
    // reconstructed final configuration is already part of the stage, so here
    // we only confirm the reported output sequence.
    CHECK(rep.sigma_out == switched);
    CHECK(rep.region_size > 0);
  }
  CHECK(successes > 0);
}

TEST_CASE("flip stage symmetry: switching twice returns to a bar-star pair") {
  // P(A_sigma) = P(A_bar(sigma)) exactly at p = 1/2; compare frequencies of
  // the pipeline's qualifying precondition for sigma and bar(sigma).
  Annulus a{{0, 0}, 2, 16};
  ColorSequence sigma{Color::O, Color::Cs, Color::Cs};
  ColorSequence flipped = bar(sigma);  // (C, O*, O*) -- rotate to keep s1/s2 classes
  std::uint64_t hits_a = 0, hits_b = 0, trials = 4000;
  for (std::uint64_t t = 0; t < trials; ++t) {
    Configuration cfg = Configuration::sample_critical({{0, 0}, 17}, {23, t});
    hits_a += detect_arms(cfg, a, sigma);
    hits_b += detect_arms(cfg, a, flipped);
  }
  double pa = (double)hits_a / (double)trials, pb = (double)hits_b / (double)trials;
  double sd = std::sqrt((pa * (1 - pa) + pb * (1 - pb)) / (double)trials);
  CHECK(std::abs(pa - pb) <= 3 * std::max(sd, 1e-9));
}

TEST_CASE("interpolation chains") {
  ColorSequence s{Color::O, Color::Cs, Color::Cs};
  auto self_chain = interpolation_chain(s, s);
  REQUIRE(self_chain.size() == 1);
  CHECK(self_chain[0] == s);

  ColorSequence to{Color::O, Color::O, Color::Cs};
  auto chain = interpolation_chain(s, to);
  REQUIRE(!chain.empty());
  CHECK(chain.size() <= 3 + 1);  // at most k steps
  CHECK(chain.front() == s);
  CHECK(chain.back() == to);
  for (std::size_t i = 0; i < chain.size(); ++i) {
    CHECK(polychromatic(chain[i]));
    if (i) {
      int diff = 0;
      for (std::size_t j = 0; j < chain[i].size(); ++j)
        diff += chain[i][j] != chain[i - 1][j];
      CHECK(diff == 1);
    }
  }

  CHECK_THROWS_AS(interpolation_chain(s, {Color::O, Color::Cs}), std::invalid_argument);
}
