#include "perc/estimator.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <thread>

namespace perc {

namespace {

double now_seconds() {
  return std::chrono::duration<double>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

Estimate make_estimate(std::uint64_t successes, std::uint64_t trials, RngSeed seed,
                       double wall) {
  Estimate e;
  e.successes = successes;
  e.trials = trials;
  e.phat = trials ? (double)successes / (double)trials : 0.0;
  std::tie(e.wilson_lo, e.wilson_hi) = wilson95(successes, trials);
  e.seed = seed;
  e.wall_seconds = wall;
  return e;
}

void check_spec(const ExperimentSpec& spec) {
  if (spec.trials == 0) throw std::invalid_argument("estimator: zero trials");
  if (spec.sigma.empty() || spec.n < n0((int)spec.sigma.size()) || spec.n >= spec.N)
    throw std::invalid_argument("estimator: radii violate n0(k) <= n < N");
}

double binom_var(const Estimate& e) {
  double p = e.phat;
  return p * (1 - p) / (double)std::max<std::uint64_t>(1, e.trials);
}

}  // namespace

std::pair<double, double> wilson95(std::uint64_t successes, std::uint64_t trials) {
  if (trials == 0) return {0.0, 1.0};
  const double z = 1.959963984540054;
  double n = (double)trials, p = (double)successes / n, z2 = z * z;
  double denom = 1 + z2 / n;
  double center = (p + z2 / (2 * n)) / denom;
  double half = z * std::sqrt(p * (1 - p) / n + z2 / (4 * n * n)) / denom;
  // At the boundary counts the interval endpoint is exactly 0 or 1; the
  // formula only gets there up to rounding, so pin it.
  double lo = successes == 0 ? 0.0 : std::max(0.0, center - half);
  double hi = successes == trials ? 1.0 : std::min(1.0, center + half);
  return {lo, hi};
}

Sampler critical_sampler(Box box, std::uint64_t seed) {
  return [box, seed](std::uint64_t trial) {
    return Configuration::sample_critical(box, RngSeed{seed, trial});
  };
}

std::vector<std::uint64_t> run_counters(
    std::uint64_t trials, int workers, std::size_t slots,
    const std::function<void(std::uint64_t, std::vector<char>&)>& fn) {
  workers = std::max(1, workers);
  std::atomic<std::uint64_t> next{0};
  std::vector<std::vector<std::uint64_t>> partial(workers,
                                                  std::vector<std::uint64_t>(slots, 0));
  auto work = [&](int wid) {
    std::vector<char> hit(slots, 0);
    for (;;) {
      std::uint64_t t = next.fetch_add(1);
      if (t >= trials) return;
      std::fill(hit.begin(), hit.end(), 0);
      fn(t, hit);
      for (std::size_t j = 0; j < slots; ++j)
        if (hit[j]) ++partial[wid][j];
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& th : pool) th.join();
  }
  std::vector<std::uint64_t> total(slots, 0);
  for (const auto& part : partial)
    for (std::size_t j = 0; j < slots; ++j) total[j] += part[j];
  return total;
}

Estimate estimate_arm_prob(const ExperimentSpec& spec) {
  check_spec(spec);
  return estimate_arm_prob(
      spec, critical_sampler({{0, 0}, spec.N + 1}, spec.seed.seed));
}

Estimate estimate_arm_prob(const ExperimentSpec& spec, const Sampler& sampler) {
  check_spec(spec);
  Annulus a{{0, 0}, spec.n, spec.N};
  double t0 = now_seconds();
  auto counts = run_counters(
      spec.trials, spec.workers, 1, [&](std::uint64_t t, std::vector<char>& hit) {
        Configuration cfg = sampler(t);
        bool ok = false;
        switch (spec.detector) {
          case Detector::fast: ok = detect_arms(cfg, a, spec.sigma); break;
          case Detector::oracle:
            ok = detect_arms_oracle(cfg, a, spec.sigma).has_value();
            break;
          case Detector::separated:
            ok = detect_separated(cfg, a, spec.sigma, spec.ell);
            break;
        }
        hit[0] = ok;
      });
  return make_estimate(counts[0], spec.trials, spec.seed, now_seconds() - t0);
}

CompareResult compare_sequences(const std::vector<ColorSequence>& sigmas, int n,
                                const std::vector<int>& Ns, std::uint64_t trials,
                                std::uint64_t seed, int workers) {
  if (sigmas.empty() || Ns.empty() || trials == 0)
    throw std::invalid_argument("compare_sequences: empty input");
  const std::size_t k = sigmas[0].size();
  for (const ColorSequence& s : sigmas) {
    if (s.size() != k)
      throw std::invalid_argument("compare_sequences: sequences differ in length");
    if (!polychromatic(s))
      throw std::invalid_argument("compare_sequences: monochromatic sequence rejected");
  }
  int maxN = *std::max_element(Ns.begin(), Ns.end());
  for (int N : Ns)
    if (n < n0((int)k) || n >= N)
      throw std::invalid_argument("compare_sequences: radii violate n0(k) <= n < N");

  // One shared sample per trial (common random numbers across sigma and N).
  Sampler sampler = critical_sampler({{0, 0}, maxN + 1}, seed);
  const std::size_t slots = sigmas.size() * Ns.size();
  double t0 = now_seconds();
  auto counts = run_counters(
      trials, workers, slots, [&](std::uint64_t t, std::vector<char>& hit) {
        Configuration cfg = sampler(t);
        std::size_t j = 0;
        for (int N : Ns)
          for (const ColorSequence& s : sigmas)
            hit[j++] = detect_arms(cfg, {{0, 0}, n, N}, s);
      });
  double wall = now_seconds() - t0;

  CompareResult out;
  std::size_t j = 0;
  for (int N : Ns)
    for (const ColorSequence& s : sigmas) {
      CellEstimate cell;
      cell.sigma = s;
      cell.n = n;
      cell.N = N;
      cell.ell = 0;
      cell.est = make_estimate(counts[j++], trials, RngSeed{seed, 0}, wall);
      out.cells.push_back(cell);
    }
  for (std::size_t ni = 0; ni < Ns.size(); ++ni)
    for (std::size_t ai = 0; ai < sigmas.size(); ++ai)
      for (std::size_t bi = 0; bi < sigmas.size(); ++bi) {
        if (ai == bi && sigmas.size() > 1) continue;
        const Estimate& ea = out.cells[ni * sigmas.size() + ai].est;
        const Estimate& eb = out.cells[ni * sigmas.size() + bi].est;
        RatioRow row;
        row.sigma_a = sigmas[ai];
        row.sigma_b = sigmas[bi];
        row.N = Ns[ni];
        row.ratio = eb.phat > 0 ? ea.phat / eb.phat
                                : std::numeric_limits<double>::infinity();
        row.lo = eb.wilson_hi > 0 ? ea.wilson_lo / eb.wilson_hi : 0.0;
        row.hi = eb.wilson_lo > 0 ? ea.wilson_hi / eb.wilson_lo
                                  : std::numeric_limits<double>::infinity();
        out.ratios.push_back(row);
      }
  return out;
}

SeparationRatio separation_ratio(const ColorSequence& sigma, int ell, int n, int N,
                                 std::uint64_t trials, std::uint64_t seed,
                                 int workers) {
  const int k = (int)sigma.size();
  if (!(8 * ell * n0(k) <= 8 * n && 8 * n <= N))
    throw std::invalid_argument("separation_ratio: regime violation");
  Sampler sampler = critical_sampler({{0, 0}, N + 1}, seed);
  Annulus a{{0, 0}, n, N};
  double t0 = now_seconds();
  auto counts = run_counters(
      trials, workers, 2, [&](std::uint64_t t, std::vector<char>& hit) {
        Configuration cfg = sampler(t);
        bool plain = detect_arms(cfg, a, sigma);
        hit[0] = plain;
        // Paired design: a separated success is always a plain success.
        hit[1] = plain && detect_separated(cfg, a, sigma, ell);
      });
  double wall = now_seconds() - t0;
  SeparationRatio out;
  out.plain = make_estimate(counts[0], trials, RngSeed{seed, 0}, wall);
  out.separated = make_estimate(counts[1], trials, RngSeed{seed, 0}, wall);
  out.ratio = out.plain.phat > 0 ? out.separated.phat / out.plain.phat : 1.0;
  return out;
}

QuasiMultReport quasi_mult_check(const ColorSequence& sigma, int n, int m, int N,
                                 std::uint64_t trials, std::uint64_t seed,
                                 int workers) {
  if (!(n < m && m < N) || n < n0((int)sigma.size()))
    throw std::invalid_argument("quasi_mult_check: radii invalid");
  Sampler sampler = critical_sampler({{0, 0}, N + 1}, seed);
  double t0 = now_seconds();
  auto counts = run_counters(
      trials, workers, 3, [&](std::uint64_t t, std::vector<char>& hit) {
        Configuration cfg = sampler(t);
        hit[0] = detect_arms(cfg, {{0, 0}, n, N}, sigma);
        hit[1] = detect_arms(cfg, {{0, 0}, n, m}, sigma);
        hit[2] = detect_arms(cfg, {{0, 0}, m, N}, sigma);
      });
  double wall = now_seconds() - t0;
  QuasiMultReport rep;
  rep.p_nN = make_estimate(counts[0], trials, RngSeed{seed, 0}, wall);
  rep.p_nm = make_estimate(counts[1], trials, RngSeed{seed, 0}, wall);
  rep.p_mN = make_estimate(counts[2], trials, RngSeed{seed, 0}, wall);
  double prod = rep.p_nm.phat * rep.p_mN.phat;
  double var_prod = prod * prod *
                    (binom_var(rep.p_nm) / std::max(1e-300, rep.p_nm.phat * rep.p_nm.phat) +
                     binom_var(rep.p_mN) / std::max(1e-300, rep.p_mN.phat * rep.p_mN.phat));
  double sd = std::sqrt(binom_var(rep.p_nN) + var_prod);
  rep.zscore = sd > 0 ? (rep.p_nN.phat - prod) / sd : 0.0;
  rep.exact_direction_ok = rep.p_nN.phat <= prod + 3 * sd;
  rep.empirical_constant = rep.p_nN.phat > 0 ? prod / rep.p_nN.phat
                                             : std::numeric_limits<double>::infinity();
  return rep;
}

ExponentFit fit_loglog(const std::vector<std::pair<double, double>>& pts) {
  if (pts.size() < 3)
    throw std::invalid_argument("fit_exponent: need >= 3 points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = (double)pts.size();
  for (auto [x, y] : pts) {
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  double denom = n * sxx - sx * sx;
  ExponentFit fit;
  fit.points = pts;
  fit.slope = (n * sxy - sx * sy) / denom;
  double intercept = (sy - fit.slope * sx) / n;
  double sse = 0;
  for (auto [x, y] : pts) {
    double r = y - (intercept + fit.slope * x);
    sse += r * r;
  }
  if (pts.size() > 2)
    fit.stderr_ = std::sqrt(sse / (n - 2) / (sxx - sx * sx / n));
  return fit;
}

ExponentFit fit_exponent(const ColorSequence& sigma, int n, const std::vector<int>& Ns,
                         std::uint64_t trials, std::uint64_t seed, int workers) {
  int maxN = *std::max_element(Ns.begin(), Ns.end());
  return fit_exponent(sigma, n, Ns, trials, seed, workers,
                      critical_sampler({{0, 0}, maxN + 1}, seed));
}

ExponentFit fit_exponent(const ColorSequence& sigma, int n, const std::vector<int>& Ns,
                         std::uint64_t trials, std::uint64_t seed, int workers,
                         const Sampler& sampler) {
  if (Ns.size() < 3)
    throw std::invalid_argument("fit_exponent: need >= 3 values of N");
  std::vector<std::pair<double, double>> pts;
  for (int N : Ns) {
    ExperimentSpec spec;
    spec.sigma = sigma;
    spec.n = n;
    spec.N = N;
    spec.trials = trials;
    spec.seed = {seed, 0};
    spec.workers = workers;
    Estimate e = estimate_arm_prob(spec, sampler);
    if (e.successes == 0)
      throw std::runtime_error("fit_exponent: zero successes at N=" + std::to_string(N) +
                               " (insufficient trials)");
    pts.emplace_back(std::log((double)N / n), std::log(e.phat));
  }
  return fit_loglog(pts);
}

Estimate crossing_selfduality_check(int n, std::uint64_t trials, std::uint64_t seed,
                                    int workers) {
  if (n < 1) throw std::invalid_argument("crossing_selfduality_check: n >= 1");
  if (trials == 0) throw std::invalid_argument("crossing_selfduality_check: zero trials");
  Sampler sampler = critical_sampler({{0, 0}, n + 2}, seed);
  Rect rect{0, 0, n + 1, n};
  double t0 = now_seconds();
  auto counts = run_counters(
      trials, workers, 1, [&](std::uint64_t t, std::vector<char>& hit) {
        hit[0] = crossing(sampler(t), rect, Direction::horizontal, Color::O);
      });
  return make_estimate(counts[0], trials, RngSeed{seed, 0}, now_seconds() - t0);
}

void write_csv(std::ostream& out, const std::vector<CellEstimate>& cells) {
  out << "sigma,n,N,ell,trials,successes,phat,wilson_lo,wilson_hi,seed\n";
  for (const CellEstimate& c : cells) {
    char buf[64];
    out << format_sigma(c.sigma) << ',' << c.n << ',' << c.N << ',' << c.ell << ','
        << c.est.trials << ',' << c.est.successes << ',';
    std::snprintf(buf, sizeof buf, "%.10g,%.10g,%.10g", c.est.phat, c.est.wilson_lo,
                  c.est.wilson_hi);
    out << buf << ',' << c.est.seed.seed << '\n';
  }
}

void write_ratio_csv(std::ostream& out, const std::vector<RatioRow>& rows) {
  out << "sigma_a,sigma_b,N,ratio,ratio_lo,ratio_hi\n";
  for (const RatioRow& r : rows) {
    char buf[64];
    out << format_sigma(r.sigma_a) << ',' << format_sigma(r.sigma_b) << ',' << r.N << ',';
    std::snprintf(buf, sizeof buf, "%.10g,%.10g,%.10g", r.ratio, r.lo, r.hi);
    out << buf << '\n';
  }
}

}  // namespace perc
