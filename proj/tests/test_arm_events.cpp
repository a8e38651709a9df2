#include <doctest.h>

#include <set>

#include "perc/arm_events.hpp"

using namespace perc;

namespace {

// Every polychromatic sequence with k <= max_k, one representative per cyclic
// equivalence class.
std::vector<ColorSequence> poly_sigmas(int max_k) {
  std::set<ColorSequence> classes;
  const Color cols[4] = {Color::O, Color::C, Color::Os, Color::Cs};
  for (int k = 2; k <= max_k; ++k) {
    int total = 1;
    for (int i = 0; i < k; ++i) total *= 4;
    for (int code = 0; code < total; ++code) {
      ColorSequence s;
      int c = code;
      for (int i = 0; i < k; ++i) {
        s.push_back(cols[c & 3]);
        c >>= 2;
      }
      if (polychromatic(s)) classes.insert(cyclic_canonical(s));
    }
  }
  return {classes.begin(), classes.end()};
}

Configuration upper_half_open(Box box) {
  // Edges with midpoint strictly above the x-axis open, everything else closed.
  Configuration cfg(box, false);
  for (const Edge& e : cfg.canonical_edges()) {
    bool above = e.o == Orientation::horizontal ? e.base.y > 0 : e.base.y >= 0;
    if (above) cfg.set_open(e, true);
  }
  return cfg;
}

}  // namespace

TEST_CASE("all-open annulus") {
  Configuration cfg({{0, 0}, 5}, true);
  Annulus a{{0, 0}, 1, 4};
  CHECK(detect_arms(cfg, a, {Color::O}));
  CHECK(!detect_arms(cfg, a, {Color::Cs}));
  CHECK(!detect_arms(cfg, a, {Color::O, Color::Cs}));
  CHECK(!detect_six_arm(cfg, primal_h(0, 0), 1, 4));
}

TEST_CASE("all-closed annulus has two disjoint closed dual arms") {
  Configuration cfg({{0, 0}, 5}, false);
  Annulus a{{0, 0}, 1, 4};
  CHECK(detect_arms(cfg, a, {Color::Cs, Color::Cs}));
  auto w = detect_arms_oracle(cfg, a, {Color::Cs, Color::Cs});
  REQUIRE(w.has_value());
  CHECK(validate_witness(cfg, a, {Color::Cs, Color::Cs}, *w));
}

TEST_CASE("upper-half-open configuration has an (O,C*) pair") {
  Configuration cfg = upper_half_open({{0, 0}, 5});
  Annulus a{{0, 0}, 1, 4};
  ColorSequence sigma{Color::O, Color::Cs};
  CHECK(detect_arms(cfg, a, sigma));
  auto w = detect_arms_oracle(cfg, a, sigma);
  REQUIRE(w.has_value());
  CHECK(validate_witness(cfg, a, sigma, *w));
}

TEST_CASE("precondition errors") {
  Configuration cfg({{0, 0}, 8}, true);
  CHECK_THROWS_AS(detect_arms(cfg, {{0, 0}, 1, 4}, {}), std::invalid_argument);
  CHECK_THROWS_AS(detect_arms(cfg, {{0, 0}, 4, 4}, {Color::O}), std::invalid_argument);
  // k = 9 needs n >= 2.
  ColorSequence nine(9, Color::O);
  nine[0] = Color::Cs;
  CHECK_THROWS_AS(detect_arms(cfg, {{0, 0}, 1, 4}, nine), std::invalid_argument);
  CHECK_THROWS_AS(detect_separated(cfg, {{0, 0}, 2, 8}, {Color::O, Color::Cs}, 4),
                  std::invalid_argument);
  CHECK_THROWS_AS(detect_six_arm(cfg, primal_h(0, 0), 4, 4), std::invalid_argument);
}

TEST_CASE("fast detector agrees with the oracle at B(1,4)") {
  Box box{{0, 0}, 5};
  Annulus a{{0, 0}, 1, 4};
  auto sigmas = poly_sigmas(4);
  CounterRng pick({17, 0});
  int checked = 0;
  for (int t = 0; t < 300; ++t) {
    Configuration cfg = Configuration::sample_critical(box, {17, (std::uint64_t)t});
    for (int j = 0; j < 12; ++j) {
      const ColorSequence& sigma = sigmas[pick.below(sigmas.size())];
      bool fast = detect_arms(cfg, a, sigma);
      auto w = detect_arms_oracle(cfg, a, sigma);
      CHECK(fast == w.has_value());
      if (w) CHECK(validate_witness(cfg, a, sigma, *w));
      ++checked;
    }
  }
  CHECK(checked == 3600);
}

TEST_CASE("cyclic invariance of detection") {
  Box box{{0, 0}, 7};
  Annulus a{{0, 0}, 2, 6};
  ColorSequence sigma{Color::O, Color::Cs, Color::Cs};
  for (int t = 0; t < 1000; ++t) {
    Configuration cfg = Configuration::sample_critical(box, {23, (std::uint64_t)t});
    bool base = detect_arms(cfg, a, sigma);
    for (std::size_t j = 1; j < sigma.size(); ++j)
      CHECK(detect_arms(cfg, a, rotate(sigma, j)) == base);
  }
}

TEST_CASE("flip covariance: complement configuration, barred colors") {
  Box box{{0, 0}, 7};
  Annulus a{{0, 0}, 2, 6};
  std::vector<ColorSequence> sigmas{{Color::O},
                                    {Color::O, Color::Cs},
                                    {Color::O, Color::Cs, Color::Cs},
                                    {Color::C, Color::Os, Color::O, Color::Cs}};
  for (int t = 0; t < 500; ++t) {
    Configuration cfg = Configuration::sample_critical(box, {29, (std::uint64_t)t});
    Configuration flipped = cfg.flip_region(cfg.canonical_edges());
    for (const ColorSequence& sigma : sigmas)
      CHECK(detect_arms(cfg, a, sigma) == detect_arms(flipped, a, bar(sigma)));
  }
}

TEST_CASE("landing restrictions") {
  Box box{{0, 0}, 7};
  Annulus a{{0, 0}, 2, 6};
  ColorSequence sigma{Color::O, Color::Cs};
  LandingSequence inner_full{full_interval(2), full_interval(2)};
  LandingSequence outer_full{full_interval(6), full_interval(6)};

  // Vacuous restriction equals plain detection.
  for (int t = 0; t < 500; ++t) {
    Configuration cfg = Configuration::sample_critical(box, {31, (std::uint64_t)t});
    CHECK(detect_arms_landing(cfg, a, sigma, inner_full, outer_full) ==
          detect_arms(cfg, a, sigma));
  }

  // All-open, single O arm landing on the east side.
  Configuration open_cfg(box, true);
  LandingSequence east_in{{2, 0, 3}};
  LandingSequence east_out{{6, 0, 8}};
  CHECK(detect_arms_landing(open_cfg, a, {Color::O}, east_in, east_out));

  // Restricted event is a sub-event of the unrestricted one.
  LandingSequence inner_iv{{2, 0, 4}, {2, 8, 4}};
  LandingSequence outer_iv{{6, 0, 12}, {6, 24, 12}};
  int restricted = 0, plain = 0;
  for (int t = 0; t < 2000; ++t) {
    Configuration cfg = Configuration::sample_critical(box, {37, (std::uint64_t)t});
    bool r = detect_arms_landing(cfg, a, sigma, inner_iv, outer_iv);
    bool p = detect_arms(cfg, a, sigma);
    if (r) CHECK(p);
    restricted += r;
    plain += p;
  }
  CHECK(restricted <= plain);
  CHECK(restricted > 0);  // the restricted event is not degenerate here
}

TEST_CASE("interval_vertices walks the ring counterclockwise") {
  // Three edges from the east axis at radius 2 touch four ring vertices:
  // (2,0) -> (2,1) -> (2,2) -> (1,2).
  auto vs = interval_vertices({0, 0}, {2, 0, 3});
  REQUIRE(vs.size() == 4);
  CHECK(vs.front() == Vertex{2, 0});
  CHECK(vs[2] == Vertex{2, 2});
  CHECK(vs.back() == Vertex{1, 2});

  auto full = interval_vertices({0, 0}, full_interval(2));
  CHECK(full.size() == 16);
}

TEST_CASE("canonical extraction is deterministic and oracle-valid") {
  Box box{{0, 0}, 7};
  Annulus a{{0, 0}, 1, 4};
  Configuration open_cfg(box, true);
  auto w1 = extract_canonical_arms(open_cfg, a, {Color::O});
  auto w2 = extract_canonical_arms(open_cfg, a, {Color::O});
  REQUIRE(w1.has_value());
  REQUIRE(w2.has_value());
  CHECK(w1->arms.size() == 1);
  CHECK(w1->arms[0].verts == w2->arms[0].verts);
  CHECK(validate_witness(open_cfg, a, {Color::O}, *w1));

  ColorSequence sigma{Color::O, Color::Cs};
  int detected = 0, extracted = 0;
  for (int t = 0; t < 1000; ++t) {
    Configuration cfg = Configuration::sample_critical(box, {41, (std::uint64_t)t});
    if (!detect_arms(cfg, a, sigma)) continue;
    ++detected;
    auto w = extract_canonical_arms(cfg, a, sigma);
    if (!w) continue;
    ++extracted;
    CHECK(validate_witness(cfg, a, sigma, *w));
  }
  CHECK(detected > 100);
  CHECK(extracted >= detected * 99 / 100);
}

TEST_CASE("detect_separated implies detect_arms; k=1 is vacuously separated") {
  Box box{{0, 0}, 17};
  Annulus a{{0, 0}, 2, 16};
  ColorSequence sigma{Color::O, Color::Cs};
  for (int t = 0; t < 300; ++t) {
    Configuration cfg = Configuration::sample_critical(box, {43, (std::uint64_t)t});
    if (detect_separated(cfg, a, sigma, 5)) CHECK(detect_arms(cfg, a, sigma));
    CHECK(detect_separated(cfg, a, {Color::O}, 5) == detect_arms(cfg, a, {Color::O}));
  }
}

TEST_CASE("bottleneck witness contract") {
  Box box{{0, 0}, 17};
  Annulus a{{0, 0}, 2, 16};
  ColorSequence sigma{Color::O, Color::Cs};
  int failures = 0, witnessed = 0, verified = 0;
  for (int t = 0; t < 600; ++t) {
    Configuration cfg = Configuration::sample_critical(box, {47, (std::uint64_t)t});
    if (!detect_arms(cfg, a, sigma)) continue;
    if (detect_separated(cfg, a, sigma, 5)) {
      CHECK(!detect_bottleneck(cfg, a, sigma, 5).has_value());
      continue;
    }
    ++failures;
    auto b = detect_bottleneck(cfg, a, sigma, 5);
    if (!b) continue;
    ++witnessed;
    CHECK(linf(b->at.base, a.center) <= a.outer / 2);
    CHECK(b->d ==
          doctest::Approx(set_distance({b->at}, boundary_edges(a.center, a.inner))));
    CHECK(b->ell == 5);
    verified += b->four_arms_verified;
  }
  CHECK(witnessed > 0);
  CHECK(verified == witnessed);  // at this scale most witnesses are vacuous
  INFO("separation failures: ", failures, ", witnessed: ", witnessed);
}

TEST_CASE("six-arm event implies the five-arm event") {
  Box box{{0, 0}, 12};
  ColorSequence five{Color::O, Color::Cs, Color::O, Color::Cs, Color::O};
  for (int t = 0; t < 2000; ++t) {
    Configuration cfg = Configuration::sample_critical(box, {53, (std::uint64_t)t});
    if (detect_six_arm(cfg, primal_h(0, 0), 1, 6))
      CHECK(detect_arms(cfg, {{0, 0}, 1, 6}, five));
  }
}

TEST_CASE("monotone nesting of annuli") {
  Box box{{0, 0}, 9};
  ColorSequence sigma{Color::O, Color::Cs};
  for (int t = 0; t < 1000; ++t) {
    Configuration cfg = Configuration::sample_critical(box, {59, (std::uint64_t)t});
    if (detect_arms(cfg, {{0, 0}, 1, 8}, sigma)) {
      CHECK(detect_arms(cfg, {{0, 0}, 2, 8}, sigma));
      CHECK(detect_arms(cfg, {{0, 0}, 1, 6}, sigma));
      CHECK(detect_arms(cfg, {{0, 0}, 2, 6}, sigma));
    }
  }
}
