#pragma once

// Executable walkthrough of the color-switching argument: condition on the
// first k-1 arms, flip the complement region U, shift it, and detect the
// switched sequence sigma'' = (sigma_1,...,sigma_{k-1}, star(bar(sigma_k)))
// in the sub-annulus B(2n, N/2).

#include "perc/shift.hpp"

namespace perc {

struct StageOutcome {
  bool ok = false;
  std::string note;
};

struct SwitchReport {
  ColorSequence sigma;
  ColorSequence sigma_out;      // (sigma_1..sigma_{k-1}, star(bar(sigma_k)))
  std::size_t region_size = 0;  // |U|
  std::array<StageOutcome, 5> stages{};  // extract, region, flip, shift, detect

  bool success() const {
    for (const auto& s : stages)
      if (!s.ok) return false;
    return true;
  }
  int failed_stage() const {  // 1-based id of the first failure, 0 if none
    for (std::size_t i = 0; i < stages.size(); ++i)
      if (!stages[i].ok) return (int)i + 1;
    return 0;
  }

  std::string to_json() const;  // one JSON object, single line
};

// Landing zones for the k-1 conditioned arms (inner and outer); nullptr means
// full boundaries.
using SwitchLandings = std::pair<LandingSequence, LandingSequence>;

SwitchReport switch_last_color(const Configuration& cfg, const Annulus& a,
                               const ColorSequence& sigma, int ell,
                               const SwitchLandings* landings = nullptr);

// Shortest chain sigma = c_0, ..., c_m = sigma_to with m <= k, consecutive
// entries differing in exactly one position, every element polychromatic.
std::vector<ColorSequence> interpolation_chain(const ColorSequence& sigma,
                                               const ColorSequence& sigma_to);

}  // namespace perc
