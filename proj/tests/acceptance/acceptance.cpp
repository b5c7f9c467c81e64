// Acceptance checks. Prints one PASS/FAIL/SKIPPED line per criterion and
// exits non-zero if any criterion fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "lcs/io.hpp"
#include "lcs/lcs.hpp"
#include "oracles.hpp"

namespace fs = std::filesystem;
using lcs::Signal;
using lcs::SubsamplingPattern;
using lcs::TransformOperator;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
  bool skipped = false;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

Outcome error_identity() {
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<TransformOperator> ops{TransformOperator::dft1d(8), TransformOperator::hadamard(8),
                                           TransformOperator::dft1d(64), TransformOperator::hadamard(64),
                                           TransformOperator::dft1d(256), TransformOperator::hadamard(256),
                                           TransformOperator::dft2d(32, 32)};
  oracle::Gen gen(1);
  double worst = 0.0;
  for (int t = 0; t < 1000; ++t) {
    const auto& op = ops[t % ops.size()];
    const std::size_t p = op.size();
    const SubsamplingPattern pat(p, gen.subset(p, gen.index(0, p)));
    const Signal x = gen.signal(p);
    const auto rec = lcs::simulate(op, pat, x);
    const double err = lcs::normalized_error(rec.estimate, x);
    worst = std::max(worst, std::abs(err - (1.0 - lcs::captured_fraction(op, pat, x))));
  }
  const double secs = seconds_since(t0);
  return {worst < 1e-10 && secs < 10.0, "max deviation " + fmt("%.3g", worst) + ", " + fmt("%.2f", secs) + " s"};
}

Outcome exact_erm() {
  const auto t0 = std::chrono::steady_clock::now();
  oracle::Gen gen(2);
  int mismatches = 0;
  for (int t = 0; t < 200; ++t) {
    const std::size_t p = gen.index(1, 12);
    const std::size_t n = gen.index(0, std::min<std::size_t>(4, p));
    const auto op = TransformOperator::dft1d(p);
    std::vector<Signal> train;
    const std::size_t m = gen.index(1, 6);
    for (std::size_t i = 0; i < m; ++i) train.push_back(gen.signal(p));
    const auto scores = lcs::compute_scores(op, train);
    const double greedy = lcs::empirical_objective(lcs::learn_pattern(scores, n), scores);
    const double brute = lcs::empirical_objective(lcs::brute_force_pattern(scores, n), scores);
    if (greedy != brute) ++mismatches;
  }
  const double secs = seconds_since(t0);
  return {mismatches == 0 && secs < 5.0,
          std::to_string(mismatches) + " mismatches in 200 instances, " + fmt("%.2f", secs) + " s"};
}

Outcome generalization() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto op = TransformOperator::dft1d(16);
  const auto ens = lcs::generate_lowpass_ensemble({16}, 0.5, 8, 2024);
  const auto opt = lcs::population_optimum(ens, op, 4);
  const double beta = 0.1;
  bool ok = true;
  double previous_median = std::numeric_limits<double>::infinity();
  std::string detail;
  for (std::size_t m : {4, 16, 64}) {
    const double bound = lcs::generalization_bound({m, 16, 4, beta});
    std::vector<double> gaps;
    for (std::size_t t = 0; t < 200; ++t) {
      gaps.push_back(lcs::empirical_gap_trial(ens, op, opt, m, lcs::derive_seed(m, t)));
    }
    const double covered =
        static_cast<double>(std::count_if(gaps.begin(), gaps.end(), [&](double g) { return g <= bound; })) / 200.0;
    std::nth_element(gaps.begin(), gaps.begin() + 100, gaps.end());
    const double hi = gaps[100];
    const double lo = *std::max_element(gaps.begin(), gaps.begin() + 100);
    const double median = 0.5 * (lo + hi);
    ok = ok && covered >= 1.0 - beta && median <= previous_median;
    previous_median = median;
    detail += "m=" + std::to_string(m) + " coverage " + fmt("%.3f", covered) + " median " + fmt("%.2e", median) + "; ";
  }
  const double secs = seconds_since(t0);
  return {ok && secs < 60.0, detail + fmt("%.2f", secs) + " s"};
}

Outcome bound_arithmetic() {
  const double independent = std::sqrt(2.0 / 1000.0 * (std::log(6.0) + std::log(2.0 / 0.05)));
  const double value = lcs::generalization_bound({1000, 4, 2, 0.05});
  double worst = 0.0;
  for (std::size_t p = 0; p <= 30; ++p) {
    for (std::size_t n = 0; n <= p; ++n) {
      const double exact = std::log(static_cast<double>(oracle::binomial(p, n)));
      const double got = lcs::log_binomial(p, n);
      const double rel = exact == 0.0 ? std::abs(got) : std::abs(got - exact) / exact;
      worst = std::max(worst, rel);
    }
  }
  const bool ok = std::abs(value - 0.10470) < 1e-4 && std::abs(value - independent) < 1e-12 && worst < 1e-9;
  return {ok, "bound " + fmt("%.6f", value) + ", worst log-binomial relative error " + fmt("%.2e", worst)};
}

Outcome oracle_dominance() {
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<std::size_t> dims{32, 32};
  const auto op = lcs::fourier_for(dims);
  const auto train = lcs::generate_lowpass_ensemble(dims, 1.5, 200, 11).atoms;
  const auto test = lcs::generate_lowpass_ensemble(dims, 1.5, 50, 12).atoms;
  const auto scores = lcs::compute_scores(op, train);
  bool ok = true;
  std::string detail;
  for (std::size_t denom : {16, 8, 4}) {
    const std::size_t n = op.size() / denom;
    const auto learned = lcs::learn_pattern(scores, n, dims);
    const auto learned_report = lcs::evaluate(op, learned, test);
    std::size_t order_violations = 0;
    for (std::size_t i = 0; i < test.size(); ++i) {
      const auto oracle_pat = lcs::best_n_pattern(op, test[i], n);
      const double best = lcs::psnr(test[i], lcs::simulate(op, oracle_pat, test[i]).estimate);
      if (best < learned_report.signals[i].psnr) ++order_violations;
    }
    std::size_t losing_seeds = 0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const auto random = lcs::sample_uniform(op.size(), n, lcs::derive_seed(denom, seed), dims);
      if (lcs::evaluate(op, random, test).mean_psnr > learned_report.mean_psnr) ++losing_seeds;
    }
    ok = ok && order_violations == 0 && losing_seeds == 0;
    detail += "1/" + std::to_string(denom) + ": learned " + fmt("%.2f", learned_report.mean_psnr) + " dB, " +
              std::to_string(order_violations) + " best-n violations, " + std::to_string(losing_seeds) +
              " random seeds ahead; ";
  }
  const double secs = seconds_since(t0);
  return {ok && secs < 60.0, detail + fmt("%.2f", secs) + " s"};
}

double best_time(const TransformOperator& op, const std::vector<Signal>& train, int reps) {
  double best = std::numeric_limits<double>::infinity();
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto scores = lcs::compute_scores(op, train);
    best = std::min(best, seconds_since(t0));
    if (scores.scores.empty()) return 0.0;
  }
  return best;
}

Outcome complexity_scaling() {
  const auto t0 = std::chrono::steady_clock::now();
  const std::size_t m = 64;
  oracle::Gen gen(6);
  std::vector<Signal> small, large;
  for (std::size_t i = 0; i < m; ++i) {
    small.push_back(gen.signal(1u << 14));
    large.push_back(gen.signal(1u << 15));
  }
  const auto op_small = TransformOperator::dft1d(1u << 14);
  const auto op_large = TransformOperator::dft1d(1u << 15);
  // Alternate the two sizes and keep the fastest of each, so transient
  // machine load does not land on one side only.
  double a = std::numeric_limits<double>::infinity(), b = a;
  for (int r = 0; r < 12; ++r) {
    a = std::min(a, best_time(op_small, small, 1));
    b = std::min(b, best_time(op_large, large, 1));
  }
  const double ratio = b / a;
  const double secs = seconds_since(t0);
  return {ratio < 3.0 && secs < 120.0, "time ratio " + fmt("%.2f", ratio) + " (" + fmt("%.4f", a) + " s -> " +
                                           fmt("%.4f", b) + " s), " + fmt("%.2f", secs) + " s"};
}

// Optional: a directory of raw k-space volumes ([x, y, z] .csig files),
// first ten patients (by file name) train, the rest test.
Outcome knee_reproduction() {
  const char* root = std::getenv("LCS_KNEE_DATA");
  if (root == nullptr || *root == '\0') return {true, "LCS_KNEE_DATA not set", true};
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(root))
    if (e.path().extension() == ".csig") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  std::vector<lcs::SliceSet> patients;
  for (const auto& f : files) patients.push_back(lcs::ingest_volume(lcs::io::read_volume_file(f), lcs::kDefaultSliceThreshold));
  const auto [train_set, test_set] = lcs::split_patients(patients, 10);
  const std::vector<std::size_t> dims{train_set.rows, train_set.cols};
  const auto op = lcs::fourier_for(dims);
  const auto train = train_set.images();
  const auto test = test_set.images();
  const auto scores = lcs::compute_scores(op, train);
  const std::vector<double> radii{0.0, 0.02, 0.05, 0.1, 0.2}, degrees{0.0, 1.0, 2.0, 4.0, 8.0};
  const auto grid = lcs::make_grid(radii, degrees);
  const double targets[] = {24.66, 25.18, 26.12};
  const std::size_t denoms[] = {16, 8, 4};
  bool ok = true;
  std::string detail;
  for (int k = 0; k < 3; ++k) {
    const std::size_t n = op.size() / denoms[k];
    const double learned = lcs::evaluate(op, lcs::learn_pattern(scores, n, dims), test).mean_psnr;
    const auto tuned = lcs::tune_variable_density(op, train, n, grid, 0);
    const double vd = lcs::evaluate(op, tuned.pattern, test).mean_psnr;
    ok = ok && std::abs(learned - targets[k]) <= 1.0 && learned >= vd;
    detail += "1/" + std::to_string(denoms[k]) + ": learned " + fmt("%.2f", learned) + " vd " + fmt("%.2f", vd) + "; ";
  }
  return {ok, detail};
}

int quiet_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  return lcs::cli::run(args, out, err);
}

Outcome determinism() {
  const fs::path root = fs::temp_directory_path() / "lcs_acceptance_determinism";
  fs::remove_all(root);
  fs::create_directories(root);
  const std::string sig = (root / "signals.csig").string();
  if (quiet_cli({"synth", "signals", "--output", sig, "--dims", "16", "16", "--count", "20", "--seed", "3"}) != 0)
    return {false, "could not write fixture signals"};
  auto snapshot = [&](const fs::path& dir) {
    std::vector<std::pair<std::string, std::string>> files;
    for (const auto& e : fs::directory_iterator(dir)) files.emplace_back(e.path().filename().string(), lcs::io::sha256_file(e.path()));
    std::sort(files.begin(), files.end());
    return files;
  };
  std::vector<std::vector<std::pair<std::string, std::string>>> runs;
  for (int r = 0; r < 2; ++r) {
    const fs::path dir = root / "run";
    fs::remove_all(dir);
    const int a = quiet_cli({"learn", "--signals", sig, "--rate", "0.0625", "0.125", "0.25", "-o", dir.string()});
    const int b = quiet_cli({"baseline", "--signals", sig, "--rate", "0.0625", "0.125", "0.25", "--seed", "7",
                             "-o", dir.string()});
    if (a != 0 || b != 0) return {false, "command failed"};
    runs.push_back(snapshot(dir));
  }
  fs::remove_all(root);
  return {runs[0] == runs[1] && !runs[0].empty(), std::to_string(runs[0].size()) + " files compared"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"AC1 error identity", error_identity},
      {"AC2 exact ERM", exact_erm},
      {"AC3 generalization bound coverage", generalization},
      {"AC4 bound arithmetic", bound_arithmetic},
      {"AC5 oracle dominance", oracle_dominance},
      {"AC6 score complexity scaling", complexity_scaling},
      {"AC7 knee dataset reproduction (optional)", knee_reproduction},
      {"AC8 determinism", determinism},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const char* status = o.skipped ? "SKIPPED" : (o.pass ? "PASS" : "FAIL");
    if (!o.pass) ++failures;
    std::printf("%-8s %s: %s\n", status, name.c_str(), o.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
