#include "commands.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lcs/io.hpp"
#include "lcs/lcs.hpp"
#include "lcs/manifest.hpp"
#include "lcs/render.hpp"
#include "lcs/report.hpp"

namespace lcs::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

std::string format_double(double v, const char* spec = "%.10g") {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

// ---------------------------------------------------------------------------
// Shared option groups

struct SignalSource {
  std::string manifest;
  std::string signals;
  std::string transform = "fourier";
};

struct LoadedSignals {
  std::vector<Signal> signals;
  std::vector<std::size_t> dims;
  std::vector<std::string> labels;
  std::string origin;
};

void add_source_options(CLI::App* cmd, SignalSource& src, const std::string& role) {
  auto* manifest = cmd->add_option("--manifest", src.manifest,
                                   "Manifest written by 'ingest'; its " + role + " slices are used");
  auto* signals = cmd->add_option("--signals", src.signals,
                                  "Signal file of shape [count, dims...] used instead of a manifest");
  manifest->excludes(signals);
  cmd->add_option("--transform", src.transform, "Measurement basis")
      ->check(CLI::IsMember({"fourier", "hadamard"}))
      ->capture_default_str();
}

LoadedSignals load_signals(const SignalSource& src, SliceRole role) {
  if (src.manifest.empty() == src.signals.empty()) {
    throw Error(ErrorCode::InvalidParams, "exactly one of --manifest or --signals is required");
  }
  LoadedSignals out;
  if (!src.manifest.empty()) {
    SliceSet set = load_slices(src.manifest, role);
    out.dims = {set.rows, set.cols};
    out.origin = src.manifest;
    for (auto& s : set.slices) {
      out.labels.push_back(s.patient + ":" + std::to_string(s.z));
      out.signals.push_back(std::move(s.image));
    }
    return out;
  }
  io::SignalFile file = io::read_signal_file(src.signals);
  if (file.shape.size() < 2 || file.shape.size() > 3) {
    throw Error(ErrorCode::Parse, src.signals + ": expected shape [count, n] or [count, rows, cols]");
  }
  const std::size_t count = file.shape[0];
  if (count == 0) throw Error(ErrorCode::EmptyInput, src.signals + " holds no signals");
  out.dims.assign(file.shape.begin() + 1, file.shape.end());
  out.origin = src.signals;
  const std::size_t p = file.data.size() / count;
  for (std::size_t i = 0; i < count; ++i) {
    out.signals.emplace_back(file.data.begin() + static_cast<std::ptrdiff_t>(i * p),
                             file.data.begin() + static_cast<std::ptrdiff_t>((i + 1) * p));
    out.labels.push_back(std::to_string(i));
  }
  return out;
}

TransformOperator make_operator(const std::string& kind, const std::vector<std::size_t>& dims) {
  if (kind == "hadamard") return TransformOperator(TransformKind::hadamard, dims);
  return fourier_for(dims);
}

struct Budgets {
  std::vector<double> rates;
  std::vector<std::size_t> counts;
};

struct Budget {
  std::size_t n = 0;
  std::optional<double> requested_rate;
};

void add_budget_options(CLI::App* cmd, Budgets& b) {
  cmd->add_option("--rate", b.rates, "Sampling rates in (0, 1]; n = round(rate * p)");
  cmd->add_option("--n", b.counts, "Explicit sample budgets");
}

std::vector<Budget> resolve_budgets(const Budgets& b, std::size_t p) {
  std::vector<Budget> out;
  for (double r : b.rates) out.push_back({budget_from_rate(r, p), r});
  for (auto n : b.counts) out.push_back({n, std::nullopt});
  if (out.empty()) throw Error(ErrorCode::InvalidParams, "give at least one --rate or --n");
  for (const auto& budget : out) {
    if (budget.n > p) {
      throw Error(ErrorCode::InvalidBudget,
                  "budget " + std::to_string(budget.n) + " exceeds p = " + std::to_string(p));
    }
  }
  return out;
}

json budget_json(const Budget& b, std::size_t p) {
  json j = {{"n", b.n}, {"p", p}};
  if (b.requested_rate) j["requested_rate"] = *b.requested_rate;
  return j;
}

// ---------------------------------------------------------------------------
// Run records

class RunRecord {
 public:
  RunRecord(std::string command, std::string config)
      : doc_({{"command", std::move(command)}, {"config", std::move(config)}}) {
    doc_["inputs"] = json::object();
    doc_["outputs"] = json::object();
  }

  void input(const fs::path& path) { doc_["inputs"][path.string()] = io::sha256_file(path); }
  void output(const fs::path& dir, const std::string& name) {
    doc_["outputs"][name] = io::sha256_file(dir / name);
  }
  json& operator[](const char* key) { return doc_[key]; }

  void write(const fs::path& dir, const std::string& command) const {
    io::write_text(dir / ("run_" + command + ".json"), doc_.dump(2) + "\n");
  }

 private:
  json doc_;
};

bool flag_on_command_line(const std::vector<std::string>& args, const std::string& flag) {
  return std::any_of(args.begin(), args.end(), [&](const std::string& a) {
    return a == flag || a.rfind(flag + "=", 0) == 0;
  });
}

// Command line wins, then the environment, then the config file.
fs::path resolve_output_dir(const std::vector<std::string>& args, const std::string& configured,
                            bool required = true) {
  if (!flag_on_command_line(args, "--output-dir") && !flag_on_command_line(args, "-o")) {
    if (const char* env = std::getenv(kOutputDirEnv); env != nullptr && *env != '\0') return env;
  }
  if (configured.empty() && required) {
    throw Error(ErrorCode::InvalidParams, "--output-dir is required");
  }
  return configured;
}

std::string mask_name(const std::string& prefix, std::size_t n) {
  return prefix + "_n" + std::to_string(n);
}

// ---------------------------------------------------------------------------
// Commands

struct IngestOptions {
  std::string input;
  std::string output_dir;
  double tau = kDefaultSliceThreshold;
  std::size_t train_patients = 10;
  std::string dtype = "c64";
};

void cmd_ingest(const IngestOptions& o, const std::vector<std::string>& args, const std::string& config,
                std::ostream& out) {
  const fs::path in_dir(o.input);
  if (!fs::is_directory(in_dir)) throw Error(ErrorCode::Io, "input directory '" + o.input + "' not found");
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(in_dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".csig") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) throw Error(ErrorCode::EmptyInput, "no .csig volumes in '" + o.input + "'");

  const fs::path out_dir = resolve_output_dir(args, o.output_dir);
  RunRecord record("ingest", config);
  std::vector<SliceSet> patients;
  Manifest manifest;
  manifest.tau = o.tau;
  manifest.train_patients = o.train_patients;
  for (const auto& f : files) {
    record.input(f);
    const KSpaceVolume vol = io::read_volume_file(f);
    patients.push_back(ingest_volume(vol, o.tau));
    manifest.patients.push_back(vol.source);
    out << vol.source << ": kept " << patients.back().slices.size() << " of " << vol.dims[2]
        << " slices\n";
  }
  auto [train, test] = split_patients(patients, o.train_patients);
  manifest.rows = train.rows;
  manifest.cols = train.cols;

  const io::Dtype dtype = o.dtype == "c128" ? io::Dtype::c128 : io::Dtype::c64;
  for (const SliceSet* set : {&train, &test}) {
    for (const auto& s : set->slices) {
      char name[64];
      std::snprintf(name, sizeof name, "_z%04zu.csig", s.z);
      const std::string rel = "slices/" + s.patient + name;
      const auto bytes = io::encode_signal(s.image, {set->rows, set->cols}, dtype);
      io::write_bytes(out_dir / rel, bytes);
      manifest.entries.push_back({rel, s.patient, s.z, set->role, io::sha256_hex(bytes)});
    }
  }
  write_manifest(out_dir / "manifest.json", manifest);
  record.output(out_dir, "manifest.json");
  record["slices"] = {{"train", train.slices.size()}, {"test", test.slices.size()}};
  record.write(out_dir, "ingest");
  out << "train: " << train.slices.size() << " slices from " << o.train_patients << " patients\n";
  out << "test: " << test.slices.size() << " slices from " << patients.size() - o.train_patients
      << " patients\n";
}

struct LearnOptions {
  SignalSource source;
  Budgets budgets;
  std::string normalization = "per_signal";
  std::string output_dir;
  std::string prefix = "learned";
};

void cmd_learn(const LearnOptions& o, const std::vector<std::string>& args, const std::string& config,
               std::ostream& out) {
  const LoadedSignals data = load_signals(o.source, SliceRole::train);
  const TransformOperator op = make_operator(o.source.transform, data.dims);
  const auto budgets = resolve_budgets(o.budgets, op.size());
  const fs::path out_dir = resolve_output_dir(args, o.output_dir);

  RunRecord record("learn", config);
  record.input(data.origin);
  const ScoreNormalization norm =
      o.normalization == "none" ? ScoreNormalization::none : ScoreNormalization::per_signal;
  const ScoreVector scores = compute_scores(op, data.signals, norm);
  json runs = json::array();
  for (const auto& b : budgets) {
    const SubsamplingPattern pattern = learn_pattern(scores, b.n, data.dims);
    const std::string name = mask_name(o.prefix, b.n);
    io::write_mask_file(out_dir / (name + ".json"), pattern);
    write_png(out_dir / (name + ".png"), render_mask(pattern));
    record.output(out_dir, name + ".json");
    record.output(out_dir, name + ".png");
    const double objective = empirical_objective(pattern, scores);
    json j = budget_json(b, op.size());
    j["mask"] = name + ".json";
    j["rate"] = std::to_string(pattern.rate().numerator) + "/" + std::to_string(pattern.rate().denominator);
    j["empirical_objective"] = objective;
    runs.push_back(j);
    out << name << ": n=" << b.n << " p=" << op.size() << " rate=" << j["rate"].get<std::string>()
        << " empirical_objective=" << format_double(objective) << "\n";
  }
  record["training_signals"] = data.signals.size();
  record["budgets"] = runs;
  record.write(out_dir, "learn");
}

struct EvaluateOptions {
  SignalSource source;
  std::vector<std::string> masks;
  std::string output_dir;
  std::size_t save_images = 0;
};

void cmd_evaluate(const EvaluateOptions& o, const std::vector<std::string>& args,
                  const std::string& config, std::ostream& out) {
  const LoadedSignals data = load_signals(o.source, SliceRole::test);
  const TransformOperator op = make_operator(o.source.transform, data.dims);
  const fs::path out_dir = resolve_output_dir(args, o.output_dir);
  RunRecord record("evaluate", config);
  record.input(data.origin);
  const std::size_t rows = data.dims.size() == 2 ? data.dims[0] : 1;
  const std::size_t cols = data.dims.back();

  json summary = json::array();
  for (const auto& mask_path : o.masks) {
    record.input(mask_path);
    const SubsamplingPattern pattern = io::read_mask_file(mask_path);
    if (pattern.universe() != op.size()) {
      throw Error(ErrorCode::InvalidShape, mask_path + " has p = " + std::to_string(pattern.universe()) +
                                               ", signals have p = " + std::to_string(op.size()));
    }
    const std::string stem = fs::path(mask_path).stem().string();
    const EvalReport report = evaluate(op, pattern, data.signals, stem);
    io::write_text(out_dir / ("report_" + stem + ".txt"), format_report_text(report, data.labels));
    io::write_text(out_dir / ("report_" + stem + ".json"), format_report_json(report, data.labels));
    record.output(out_dir, "report_" + stem + ".txt");
    record.output(out_dir, "report_" + stem + ".json");

    const std::size_t shown = std::min(o.save_images, data.signals.size());
    for (std::size_t i = 0; i < shown; ++i) {
      const Signal& truth = data.signals[i];
      double peak = 0.0;
      for (const auto& z : truth) peak = std::max(peak, std::abs(z));
      const Reconstruction rec = simulate(op, pattern, truth);
      const std::string ref_name = "reference_" + std::to_string(i) + ".png";
      const std::string rec_name = "recon_" + stem + "_" + std::to_string(i) + ".png";
      write_png(out_dir / ref_name, render_magnitude(truth, rows, cols, peak));
      write_png(out_dir / rec_name, render_magnitude(rec.estimate, rows, cols, peak));
      record.output(out_dir, ref_name);
      record.output(out_dir, rec_name);
    }
    summary.push_back({{"mask", mask_path},
                       {"n", report.n},
                       {"mean_psnr_db", std::isfinite(report.mean_psnr) ? json(report.mean_psnr) : json(nullptr)},
                       {"mean_normalized_error", report.mean_normalized_error}});
    out << stem << ": n=" << report.n << " mean_psnr_db=" << format_double(report.mean_psnr, "%.4f")
        << " infinite=" << report.infinite_psnr_count
        << " mean_normalized_error=" << format_double(report.mean_normalized_error) << "\n";
  }
  record["test_signals"] = data.signals.size();
  record["reports"] = summary;
  record.write(out_dir, "evaluate");
}

struct BaselineOptions {
  SignalSource source;
  Budgets budgets;
  std::vector<double> radii{0.0, 0.02, 0.05, 0.1, 0.2};
  std::vector<double> degrees{0.0, 1.0, 2.0, 4.0, 8.0};
  std::uint64_t seed = 0;
  std::string output_dir;
  std::string prefix = "vd";
};

void cmd_baseline(const BaselineOptions& o, const std::vector<std::string>& args,
                  const std::string& config, std::ostream& out) {
  const LoadedSignals data = load_signals(o.source, SliceRole::train);
  if (o.source.transform != "fourier") {
    throw Error(ErrorCode::InvalidParams, "variable-density sampling is defined for the Fourier basis only");
  }
  const TransformOperator op = fourier_for(data.dims);
  const auto budgets = resolve_budgets(o.budgets, op.size());
  const std::vector<GridPoint> grid = make_grid(o.radii, o.degrees);
  const fs::path out_dir = resolve_output_dir(args, o.output_dir);
  RunRecord record("baseline", config);
  record.input(data.origin);

  json runs = json::array();
  for (const auto& b : budgets) {
    const TuningResult result = tune_variable_density(op, data.signals, b.n, grid, o.seed);
    const std::string name = mask_name(o.prefix, b.n);
    io::write_mask_file(out_dir / (name + ".json"), result.pattern);
    write_png(out_dir / (name + ".png"), render_mask(result.pattern));
    io::write_text(out_dir / (name + "_tuning.csv"), format_tuning_log(result));
    for (const auto& suffix : {".json", ".png", "_tuning.csv"}) record.output(out_dir, name + suffix);
    json j = budget_json(b, op.size());
    j["mask"] = name + ".json";
    j["r"] = result.best.r;
    j["d"] = result.best.d;
    j["seed"] = result.best.seed;
    runs.push_back(j);
    out << name << ": n=" << b.n << " r=" << format_double(result.best.r) << " d="
        << format_double(result.best.d) << " seed=" << result.best.seed << "\n";
  }
  record["grid_size"] = grid.size();
  record["budgets"] = runs;
  record.write(out_dir, "baseline");
}

struct BoundOptions {
  std::size_t m = 0;
  std::size_t p = 0;
  std::optional<std::size_t> n;
  std::optional<double> rate;
  double beta = 0.05;
  std::string output_dir;
};

void cmd_bound(const BoundOptions& o, const std::vector<std::string>& args, const std::string& config,
               std::ostream& out) {
  if (o.n.has_value() == o.rate.has_value()) {
    throw Error(ErrorCode::InvalidParams, "give exactly one of --n or --rate");
  }
  const std::size_t n = o.n ? *o.n : budget_from_rate(*o.rate, o.p);
  const double value = generalization_bound({o.m, o.p, n, o.beta});
  out << "epsilon_m <= " << format_double(value, "%.10f") << "  (m=" << o.m << " p=" << o.p
      << " n=" << n << " beta=" << format_double(o.beta) << ")\n";
  const fs::path out_dir = resolve_output_dir(args, o.output_dir, false);
  if (!out_dir.empty()) {
    RunRecord record("bound", config);
    record["result"] = {{"m", o.m}, {"p", o.p}, {"n", n}, {"beta", o.beta}, {"bound", value}};
    record.write(out_dir, "bound");
  }
}

struct SynthVolumeOptions {
  std::string output_dir;
  std::size_t patients = 4;
  std::vector<std::size_t> dims{32, 32, 16};
  double decay = 1.5;
  std::uint64_t seed = 0;
};

void cmd_synth_volumes(const SynthVolumeOptions& o, const std::vector<std::string>& args,
                       const std::string& config, std::ostream& out) {
  if (o.dims.size() != 3) throw Error(ErrorCode::InvalidParams, "--dims needs three sizes");
  const fs::path out_dir = resolve_output_dir(args, o.output_dir);
  RunRecord record("synth_volumes", config);
  for (std::size_t i = 0; i < o.patients; ++i) {
    char name[32];
    std::snprintf(name, sizeof name, "patient_%02zu", i);
    const KSpaceVolume vol =
        generate_phantom_volume({o.dims[0], o.dims[1], o.dims[2]}, o.decay, derive_seed(o.seed, i), name);
    io::write_volume_file(out_dir / (std::string(name) + ".csig"), vol);
    record.output(out_dir, std::string(name) + ".csig");
  }
  record.write(out_dir, "synth_volumes");
  out << "wrote " << o.patients << " volumes to " << out_dir.string() << "\n";
}

struct SynthSignalOptions {
  std::string output;
  std::vector<std::size_t> dims{16, 16};
  std::size_t count = 64;
  std::size_t atoms = 0;
  double decay = 1.5;
  std::uint64_t seed = 0;
  std::string ensemble;
};

void cmd_synth_signals(const SynthSignalOptions& o, std::ostream& out) {
  if (o.count == 0) throw Error(ErrorCode::InvalidParams, "--count must be positive");
  std::vector<Signal> signals;
  if (o.atoms == 0) {
    signals = generate_lowpass_ensemble(o.dims, o.decay, o.count, o.seed).atoms;
  } else {
    const DiscreteEnsemble ens = generate_lowpass_ensemble(o.dims, o.decay, o.atoms, o.seed);
    if (!o.ensemble.empty()) io::write_ensemble(o.ensemble, ens);
    signals = draw_signals(ens, o.count, derive_seed(o.seed, 1));
  }
  std::vector<Complex> flat;
  for (const auto& s : signals) flat.insert(flat.end(), s.begin(), s.end());
  std::vector<std::size_t> shape{o.count};
  shape.insert(shape.end(), o.dims.begin(), o.dims.end());
  io::write_signal_file(o.output, flat, shape);
  out << "wrote " << o.count << " signals to " << o.output << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Learned compressive sampling: pattern learning, baselines, evaluation", "lcs"};
  app.set_config("--config", "", "TOML config file; options go under [<command>] sections");
  app.require_subcommand(1);
  app.fallthrough();
  app.footer("Exit codes: 0 success, 1 validation error, 2 IO error.\n"
             "LCS_OUTPUT_DIR overrides the output directory unless --output-dir is given.");

  IngestOptions ingest;
  auto* ingest_cmd = app.add_subcommand("ingest", "Convert raw 3D k-space volumes into slice images");
  ingest_cmd->add_option("--input", ingest.input, "Directory of .csig volumes [x, y, z]")->required();
  ingest_cmd->add_option("--output-dir,-o", ingest.output_dir, "Output directory");
  ingest_cmd->add_option("--tau", ingest.tau, "Keep slices with energy >= tau * max slice energy")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  ingest_cmd->add_option("--train-patients", ingest.train_patients,
                         "Number of leading patients (file-name order) used for training")
      ->capture_default_str();
  ingest_cmd->add_option("--dtype", ingest.dtype, "Slice file precision")
      ->check(CLI::IsMember({"c64", "c128"}))
      ->capture_default_str();

  LearnOptions learn;
  auto* learn_cmd = app.add_subcommand("learn", "Learn sub-sampling patterns from training signals");
  add_source_options(learn_cmd, learn.source, "train");
  add_budget_options(learn_cmd, learn.budgets);
  learn_cmd->add_option("--normalization", learn.normalization,
                        "per_signal (exact ERM) or none (raw energies)")
      ->check(CLI::IsMember({"per_signal", "none"}))
      ->capture_default_str();
  learn_cmd->add_option("--output-dir,-o", learn.output_dir, "Output directory");
  learn_cmd->add_option("--prefix", learn.prefix, "Mask file prefix")->capture_default_str();

  EvaluateOptions evaluate_opts;
  auto* eval_cmd = app.add_subcommand("evaluate", "Reconstruct test signals and report PSNR / error");
  add_source_options(eval_cmd, evaluate_opts.source, "test");
  eval_cmd->add_option("--mask", evaluate_opts.masks, "Mask JSON files to evaluate")->required();
  eval_cmd->add_option("--output-dir,-o", evaluate_opts.output_dir, "Output directory");
  eval_cmd->add_option("--save-images", evaluate_opts.save_images,
                       "Write reference and reconstruction PNGs for the first N signals")
      ->capture_default_str();

  BaselineOptions baseline;
  auto* baseline_cmd = app.add_subcommand("baseline", "Tune the variable-density random baseline");
  add_source_options(baseline_cmd, baseline.source, "train");
  add_budget_options(baseline_cmd, baseline.budgets);
  baseline_cmd->add_option("--r-grid", baseline.radii, "Fully sampled radii to try")->capture_default_str();
  baseline_cmd->add_option("--d-grid", baseline.degrees, "Polynomial degrees to try")->capture_default_str();
  baseline_cmd->add_option("--seed", baseline.seed, "Master seed")->capture_default_str();
  baseline_cmd->add_option("--output-dir,-o", baseline.output_dir, "Output directory");
  baseline_cmd->add_option("--prefix", baseline.prefix, "Mask file prefix")->capture_default_str();

  BoundOptions bound;
  auto* bound_cmd = app.add_subcommand("bound", "Generalization bound on the excess error");
  bound_cmd->add_option("--m", bound.m, "Number of training signals")->required();
  bound_cmd->add_option("--p", bound.p, "Signal dimension")->required();
  bound_cmd->add_option("--n", bound.n, "Sample budget");
  bound_cmd->add_option("--rate", bound.rate, "Sampling rate, alternative to --n");
  bound_cmd->add_option("--beta", bound.beta, "Failure probability in (0, 1)")->capture_default_str();
  bound_cmd->add_option("--output-dir,-o", bound.output_dir, "Optional directory for the run record");

  auto* synth_cmd = app.add_subcommand("synth", "Generate synthetic fixtures");
  synth_cmd->require_subcommand(1);
  SynthVolumeOptions synth_vol;
  auto* synth_vol_cmd = synth_cmd->add_subcommand("volumes", "Raw k-space phantom volumes for 'ingest'");
  synth_vol_cmd->add_option("--output-dir,-o", synth_vol.output_dir, "Output directory");
  synth_vol_cmd->add_option("--patients", synth_vol.patients, "Number of volumes")->capture_default_str();
  synth_vol_cmd->add_option("--dims", synth_vol.dims, "x y z sizes")->expected(3)->capture_default_str();
  synth_vol_cmd->add_option("--decay", synth_vol.decay, "Spectral decay exponent")->capture_default_str();
  synth_vol_cmd->add_option("--seed", synth_vol.seed, "Master seed")->capture_default_str();
  SynthSignalOptions synth_sig;
  auto* synth_sig_cmd = synth_cmd->add_subcommand("signals", "Low-pass signal batch [count, dims...]");
  synth_sig_cmd->add_option("--output", synth_sig.output, "Signal file to write")->required();
  synth_sig_cmd->add_option("--dims", synth_sig.dims, "One or two sizes")->expected(1, 2)->capture_default_str();
  synth_sig_cmd->add_option("--count", synth_sig.count, "Number of signals")->capture_default_str();
  synth_sig_cmd->add_option("--atoms", synth_sig.atoms,
                            "Draw from a K-atom ensemble (0: every signal is a fresh atom)")
      ->capture_default_str();
  synth_sig_cmd->add_option("--decay", synth_sig.decay, "Spectral decay exponent")->capture_default_str();
  synth_sig_cmd->add_option("--seed", synth_sig.seed, "Seed")->capture_default_str();
  synth_sig_cmd->add_option("--ensemble", synth_sig.ensemble, "Also write the ensemble to this path");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (*ingest_cmd) cmd_ingest(ingest, args, ingest_cmd->config_to_str(true, false), out);
    else if (*learn_cmd) cmd_learn(learn, args, learn_cmd->config_to_str(true, false), out);
    else if (*eval_cmd) cmd_evaluate(evaluate_opts, args, eval_cmd->config_to_str(true, false), out);
    else if (*baseline_cmd) cmd_baseline(baseline, args, baseline_cmd->config_to_str(true, false), out);
    else if (*bound_cmd) cmd_bound(bound, args, bound_cmd->config_to_str(true, false), out);
    else if (*synth_vol_cmd)
      cmd_synth_volumes(synth_vol, args, synth_vol_cmd->config_to_str(true, false), out);
    else if (*synth_sig_cmd) cmd_synth_signals(synth_sig, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.is_io() ? kExitIo : kExitValidation;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitOk;
}

}  // namespace lcs::cli
