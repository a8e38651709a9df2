#pragma once

// Self-contained verification suites behind the CLI `verify` command:
// shift-transformation algebra, region geometry cross-checks, and
// detector/oracle agreement.  Each suite counts checks and violations and
// stops cleanly when its time budget runs out.

#include "perc/colorswitch.hpp"
#include "perc/estimator.hpp"

namespace perc {

struct SuiteResult {
  std::string name;
  std::uint64_t checks = 0;
  std::uint64_t violations = 0;
  bool budget_exceeded = false;
  std::vector<std::string> notes;  // counterexample dumps, agreement counts

  bool passed() const { return violations == 0 && !budget_exceeded; }
};

// Sample a critical configuration exhibiting the two-arm event and build the
// region swept ccw from the first to the second canonical arm.
struct RegionSample {
  Configuration cfg;
  ArmWitness arms;
  Region region;
};
std::optional<RegionSample> sample_arm_region(const Annulus& a,
                                              const ColorSequence& pair, RngSeed seed);

// Random connected primal edge set grown from the box center.
std::vector<Edge> random_connected_edges(Box box, int count, RngSeed seed);

// The region bounded by straight east and west primal arms: the northern half
// of the annulus.  Fixed deterministic instance for shift-lemma sampling.
Region half_annulus_region(const Annulus& a);

// Bijectivity, partition and counting identities, round trips, exhaustive
// permutation checks on small regions.  With `inject_pairing_fault` the
// E0/E2 pairing is deliberately reversed; the suite must then fail and dump a
// counterexample region.
SuiteResult verify_shift_suite(std::uint64_t seed, double budget_seconds,
                               bool inject_pairing_fault = false);

// Even-odd versus winding-number interior tests, partition of the annulus by
// complementary regions, exclude-set discipline.
SuiteResult verify_regions_suite(std::uint64_t seed, double budget_seconds);

// Fast detector versus exhaustive oracle on small boxes, plus the exact
// 128-case crossing enumeration.
SuiteResult verify_arms_suite(std::uint64_t seed, double budget_seconds);

std::vector<SuiteResult> verify_all(std::uint64_t seed, double budget_seconds);

}  // namespace perc
