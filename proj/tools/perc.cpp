// Command-line front end: estimation runs, ratio tables, verification
// suites, the color-switch walkthrough, and exponent fits.
//
// Exit codes: 0 success, 2 usage error, 3 runtime failure, 4 budget exceeded.

#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "perc/verify.hpp"

namespace {

constexpr const char* kVersion = "percolab 1.0.0";

std::uint64_t default_seed() {
  if (const char* env = std::getenv("PERCO_SEED")) return std::strtoull(env, nullptr, 10);
  return 0;
}

perc::ColorSequence parse_sigma_or_throw(const std::string& text) {
  auto s = perc::parse_sigma(text);
  if (!s) throw CLI::ValidationError("--sigma", "malformed color sequence: " + text);
  return *s;
}

void write_manifest(const std::string& out_path, const std::string& command,
                    const nlohmann::json& params,
                    const std::vector<std::string>& outputs) {
  nlohmann::json j;
  j["command"] = command;
  j["params"] = params;
  j["version"] = kVersion;
  j["timestamp"] = (std::int64_t)std::time(nullptr);
  j["outputs"] = outputs;
  std::ofstream f(out_path + ".manifest.json");
  f << j.dump(2) << '\n';
}

struct CommonArgs {
  std::string sigma_text;
  int n = 2;
  std::vector<int> Ns;
  int ell = 5;
  std::uint64_t trials = 1000;
  std::uint64_t seed = default_seed();
  int workers = 1;
  std::string out = "out.csv";
};

int cmd_estimate(const CommonArgs& args, const std::string& detector_name) {
  perc::ColorSequence sigma = parse_sigma_or_throw(args.sigma_text);
  perc::Detector det = perc::Detector::fast;
  if (detector_name == "oracle") det = perc::Detector::oracle;
  else if (detector_name == "separated") det = perc::Detector::separated;
  else if (detector_name != "fast")
    throw CLI::ValidationError("--detector", "must be fast|oracle|separated");

  std::vector<perc::CellEstimate> cells;
  for (int N : args.Ns) {
    perc::ExperimentSpec spec;
    spec.sigma = sigma;
    spec.n = args.n;
    spec.N = N;
    spec.ell = args.ell;
    spec.trials = args.trials;
    spec.seed = {args.seed, 0};
    spec.detector = det;
    spec.workers = args.workers;
    perc::CellEstimate cell;
    cell.sigma = sigma;
    cell.n = args.n;
    cell.N = N;
    cell.ell = det == perc::Detector::separated ? args.ell : 0;
    cell.est = perc::estimate_arm_prob(spec);
    cells.push_back(cell);
  }
  std::ofstream f(args.out);
  perc::write_csv(f, cells);
  write_manifest(args.out, "estimate",
                 {{"sigma", args.sigma_text},
                  {"n", args.n},
                  {"N", args.Ns},
                  {"ell", args.ell},
                  {"trials", args.trials},
                  {"seed", args.seed},
                  {"detector", detector_name}},
                 {args.out});
  std::cout << "wrote " << args.out << " (" << cells.size() << " cells)\n";
  return 0;
}

int cmd_compare(const std::vector<std::string>& sigma_texts, const CommonArgs& args,
                const std::string& ratio_out) {
  std::vector<perc::ColorSequence> sigmas;
  for (const std::string& t : sigma_texts) sigmas.push_back(parse_sigma_or_throw(t));
  perc::CompareResult result = perc::compare_sequences(sigmas, args.n, args.Ns,
                                                       args.trials, args.seed, args.workers);
  std::ofstream f(args.out);
  perc::write_csv(f, result.cells);
  std::ofstream fr(ratio_out);
  perc::write_ratio_csv(fr, result.ratios);
  write_manifest(args.out, "compare",
                 {{"sigma", sigma_texts},
                  {"n", args.n},
                  {"N", args.Ns},
                  {"trials", args.trials},
                  {"seed", args.seed}},
                 {args.out, ratio_out});
  std::cout << "wrote " << args.out << " and " << ratio_out << '\n';
  return 0;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, double budget) {
  std::vector<perc::SuiteResult> results;
  if (suite == "shift") results.push_back(perc::verify_shift_suite(seed, budget));
  else if (suite == "regions") results.push_back(perc::verify_regions_suite(seed, budget));
  else if (suite == "arms") results.push_back(perc::verify_arms_suite(seed, budget));
  else if (suite == "all") results = perc::verify_all(seed, budget);
  else throw CLI::ValidationError("--suite", "must be shift|regions|arms|all");

  bool violations = false, budget_exceeded = false;
  for (const perc::SuiteResult& r : results) {
    std::cout << "suite " << r.name << ": checks=" << r.checks
              << " violations=" << r.violations
              << (r.budget_exceeded ? " (budget exceeded, partial)" : "") << '\n';
    for (const std::string& note : r.notes) std::cout << "  " << note << '\n';
    violations |= r.violations > 0;
    budget_exceeded |= r.budget_exceeded;
  }
  if (violations) return 3;
  if (budget_exceeded) return 4;
  return 0;
}

int cmd_switch_demo(const CommonArgs& args) {
  perc::ColorSequence sigma = parse_sigma_or_throw(args.sigma_text);
  if (args.Ns.size() != 1)
    throw CLI::ValidationError("--N", "switch-demo takes exactly one N");
  perc::Annulus a{{0, 0}, args.n, args.Ns[0]};
  std::ofstream f(args.out);
  std::uint64_t qualifying = 0, success = 0;
  std::array<std::uint64_t, 5> stage_fail{};
  for (std::uint64_t t = 0; t < args.trials; ++t) {
    perc::Configuration cfg = perc::Configuration::sample_critical(
        {{0, 0}, args.Ns[0] + 1}, {args.seed, t});
    if (!perc::detect_separated(cfg, a, sigma, args.ell)) continue;
    ++qualifying;
    perc::SwitchReport rep = perc::switch_last_color(cfg, a, sigma, args.ell);
    f << rep.to_json() << '\n';
    if (rep.success()) ++success;
    else ++stage_fail[rep.failed_stage() - 1];
  }
  write_manifest(args.out, "switch-demo",
                 {{"sigma", args.sigma_text},
                  {"n", args.n},
                  {"N", args.Ns[0]},
                  {"ell", args.ell},
                  {"trials", args.trials},
                  {"seed", args.seed}},
                 {args.out});
  std::cout << "qualifying=" << qualifying << " success=" << success;
  if (qualifying)
    std::cout << " rate=" << (double)success / (double)qualifying;
  std::cout << '\n';
  for (int s = 0; s < 5; ++s)
    std::cout << "stage " << s + 1 << " failures: " << stage_fail[s] << '\n';
  return 0;
}

int cmd_exponent(const CommonArgs& args) {
  perc::ColorSequence sigma = parse_sigma_or_throw(args.sigma_text);
  perc::ExponentFit fit = perc::fit_exponent(sigma, args.n, args.Ns, args.trials,
                                             args.seed, args.workers);
  std::string dat = args.out + ".dat";
  {
    std::ofstream f(dat);
    f << "# logN logp\n";
    for (auto [x, y] : fit.points) f << x << ' ' << y << '\n';
  }
  {
    std::ofstream f(args.out);
    f << "sigma,n,slope,stderr\n"
      << perc::format_sigma(sigma) << ',' << args.n << ',' << fit.slope << ','
      << fit.stderr_ << '\n';
  }
  write_manifest(args.out, "exponent",
                 {{"sigma", args.sigma_text},
                  {"n", args.n},
                  {"N", args.Ns},
                  {"trials", args.trials},
                  {"seed", args.seed}},
                 {args.out, dat});
  std::cout << "slope=" << fit.slope << " stderr=" << fit.stderr_ << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{std::string(kVersion) +
               " - arm events and color switching for critical bond percolation"};
  app.require_subcommand(1);

  CommonArgs args;
  std::string detector = "fast";
  std::vector<std::string> sigma_list;
  std::string ratio_out;
  std::string suite = "all";
  double budget = 300.0;

  auto add_common = [&](CLI::App* cmd, bool multi_N) {
    cmd->add_option("--n", args.n, "inner radius");
    auto* nopt = cmd->add_option("--N", args.Ns, "outer radius (repeatable)")->required();
    if (!multi_N) nopt->expected(1);
    cmd->add_option("--ell", args.ell, "separation parameter");
    cmd->add_option("--trials", args.trials, "Monte Carlo trials");
    cmd->add_option("--seed", args.seed, "RNG seed (default: PERCO_SEED or 0)");
    cmd->add_option("--workers", args.workers, "worker threads (results unchanged)");
    cmd->add_option("--out", args.out, "output file");
  };

  CLI::App* est = app.add_subcommand("estimate", "estimate arm probabilities");
  est->add_option("--sigma", args.sigma_text, "color sequence, e.g. OC*C*")->required();
  est->add_option("--detector", detector, "fast|oracle|separated");
  add_common(est, true);

  CLI::App* cmp = app.add_subcommand("compare", "polychromatic ratio table");
  cmp->add_option("--sigma", sigma_list, "color sequences (>= 2)")
      ->required()
      ->expected(2, 16);
  cmp->add_option("--ratios", ratio_out, "ratio CSV path (default <out>.ratios.csv)");
  add_common(cmp, true);

  CLI::App* ver = app.add_subcommand("verify", "run verification suites");
  ver->add_option("--suite", suite, "shift|regions|arms|all");
  ver->add_option("--budget", budget, "time budget in seconds");
  ver->add_option("--seed", args.seed, "RNG seed");

  CLI::App* swd = app.add_subcommand("switch-demo", "color-switch pipeline walkthrough");
  swd->add_option("--sigma", args.sigma_text, "color sequence (k >= 3)")->required();
  add_common(swd, false);

  CLI::App* exp = app.add_subcommand("exponent", "log-log exponent fit");
  exp->add_option("--sigma", args.sigma_text, "color sequence")->required();
  add_common(exp, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (est->parsed()) return cmd_estimate(args, detector);
    if (cmp->parsed()) {
      if (ratio_out.empty()) ratio_out = args.out + ".ratios.csv";
      return cmd_compare(sigma_list, args, ratio_out);
    }
    if (ver->parsed()) return cmd_verify(suite, args.seed, budget);
    if (swd->parsed()) return cmd_switch_demo(args);
    if (exp->parsed()) return cmd_exponent(args);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  return 2;
}
