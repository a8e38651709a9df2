#pragma once

// Monte Carlo estimation of arm probabilities: ratio tables across color
// sequences, separation ratios, exponent fits, and exact-inequality checks.
// Comparative statistics share samples (common random numbers) and every
// estimate carries a Wilson 95% interval.  Totals are invariant under the
// worker count: trial t always uses RNG stream t and the reduction is a sum.

#include <functional>
#include <iosfwd>

#include "perc/arm_events.hpp"

namespace perc {

enum class Detector { fast, oracle, separated };

struct Estimate {
  std::uint64_t successes = 0;
  std::uint64_t trials = 0;
  double phat = 0;
  double wilson_lo = 0;
  double wilson_hi = 0;
  RngSeed seed{};
  double wall_seconds = 0;
};

struct ExperimentSpec {
  ColorSequence sigma;
  int n = 0;
  int N = 0;
  int ell = 5;
  std::uint64_t trials = 0;
  RngSeed seed{};
  Detector detector = Detector::fast;
  int workers = 1;
};

// Wilson 95% score interval.
std::pair<double, double> wilson95(std::uint64_t successes, std::uint64_t trials);

// Per-trial sampler; the default draws sample_critical on B(N+1) (one ring of
// slack so every dual edge of the annulus has its crossing edge in the box)
// with stream = trial index.
using Sampler = std::function<Configuration(std::uint64_t trial)>;

Sampler critical_sampler(Box box, std::uint64_t seed);

Estimate estimate_arm_prob(const ExperimentSpec& spec);
Estimate estimate_arm_prob(const ExperimentSpec& spec, const Sampler& sampler);

// Sum of per-trial counter vectors, reduced order-independently across
// workers; counters[j] accumulates how many trials set slot j.
std::vector<std::uint64_t> run_counters(
    std::uint64_t trials, int workers, std::size_t slots,
    const std::function<void(std::uint64_t trial, std::vector<char>& hit)>& fn);

struct CellEstimate {
  ColorSequence sigma;
  int n = 0, N = 0, ell = 0;
  Estimate est;
};

struct RatioRow {
  ColorSequence sigma_a, sigma_b;
  int N = 0;
  double ratio = 0, lo = 0, hi = 0;
};

struct CompareResult {
  std::vector<CellEstimate> cells;
  std::vector<RatioRow> ratios;
};

// Prop.-1.1-style table: p-hat for every sigma at every N on shared samples,
// plus all pairwise ratios with conservatively propagated intervals.
CompareResult compare_sequences(const std::vector<ColorSequence>& sigmas, int n,
                                const std::vector<int>& Ns, std::uint64_t trials,
                                std::uint64_t seed, int workers = 1);

struct SeparationRatio {
  Estimate separated;  // A~ (witness-based, lower bound)
  Estimate plain;      // A
  double ratio = 0;
};

SeparationRatio separation_ratio(const ColorSequence& sigma, int ell, int n, int N,
                                 std::uint64_t trials, std::uint64_t seed,
                                 int workers = 1);

struct QuasiMultReport {
  Estimate p_nN, p_nm, p_mN;
  bool exact_direction_ok = false;  // p(n,N) <= p(n,m) p(m,N) within 3 sigma
  double zscore = 0;                // (p_nN - product) / combined sigma
  double empirical_constant = 0;    // p(n,m) p(m,N) / p(n,N)
};

QuasiMultReport quasi_mult_check(const ColorSequence& sigma, int n, int m, int N,
                                 std::uint64_t trials, std::uint64_t seed,
                                 int workers = 1);

struct ExponentFit {
  double slope = 0;
  double stderr_ = 0;
  // (log(N/n), log phat) pairs, gnuplot-ready.
  std::vector<std::pair<double, double>> points;
};

// Least squares on log p-hat versus log(N/n); throws if any cell has zero
// successes (insufficient trials are reported, never dropped).
ExponentFit fit_exponent(const ColorSequence& sigma, int n, const std::vector<int>& Ns,
                         std::uint64_t trials, std::uint64_t seed, int workers = 1);
ExponentFit fit_exponent(const ColorSequence& sigma, int n, const std::vector<int>& Ns,
                         std::uint64_t trials, std::uint64_t seed, int workers,
                         const Sampler& sampler);

// Pure fit on given (log x, log p) points; exposed for the synthetic stub.
ExponentFit fit_loglog(const std::vector<std::pair<double, double>>& pts);

// Horizontal open crossing of the (n+1) x n rectangle; truth is exactly 1/2
// by self-duality.  Calibrates the whole sampling/detection stack.
Estimate crossing_selfduality_check(int n, std::uint64_t trials, std::uint64_t seed,
                                    int workers = 1);

// CSV: sigma,n,N,ell,trials,successes,phat,wilson_lo,wilson_hi,seed
void write_csv(std::ostream& out, const std::vector<CellEstimate>& cells);
// CSV: sigma_a,sigma_b,N,ratio,ratio_lo,ratio_hi
void write_ratio_csv(std::ostream& out, const std::vector<RatioRow>& rows);

}  // namespace perc
