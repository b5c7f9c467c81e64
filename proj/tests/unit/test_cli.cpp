#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "commands.hpp"
#include "doctest.h"
#include "json.hpp"
#include "lcs/io.hpp"
#include "lcs/manifest.hpp"
#include "lcs/synthetic.hpp"

namespace fs = std::filesystem;
using lcs::cli::kExitIo;
using lcs::cli::kExitOk;
using lcs::cli::kExitValidation;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = lcs::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "lcs_test_cli" / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  const auto bytes = lcs::io::read_bytes(p);
  return {bytes.begin(), bytes.end()};
}

// Signal batch of `count` 8x8 low-pass images.
fs::path signal_batch(const fs::path& dir, std::size_t count, std::uint64_t seed) {
  const auto path = dir / "signals.csig";
  REQUIRE(cli({"synth", "signals", "--output", path.string(), "--dims", "8", "8", "--count",
               std::to_string(count), "--seed", std::to_string(seed)})
              .code == kExitOk);
  return path;
}

struct EnvGuard {
  explicit EnvGuard(const char* value) {
    if (value) setenv(lcs::cli::kOutputDirEnv, value, 1);
    else unsetenv(lcs::cli::kOutputDirEnv);
  }
  ~EnvGuard() { unsetenv(lcs::cli::kOutputDirEnv); }
};

}  // namespace

TEST_CASE("bound command") {
  const auto r = cli({"bound", "--m", "1000", "--p", "4", "--n", "2", "--beta", "0.05"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.rfind("epsilon_m <= 0.10469", 0) == 0);
  CHECK(cli({"bound", "--m", "1000", "--p", "4", "--rate", "0.5"}).out == r.out);
  CHECK(cli({"bound", "--m", "1000", "--p", "256", "--n", "16", "--beta", "1.5"}).code == kExitValidation);
  CHECK(cli({"bound", "--m", "0", "--p", "256", "--n", "16"}).code == kExitValidation);
  CHECK(cli({"bound", "--p", "256"}).code == kExitValidation);
}

TEST_CASE("help and usage errors") {
  const auto help = cli({"--help"});
  CHECK(help.code == kExitOk);
  CHECK(help.out.find("ingest") != std::string::npos);
  CHECK(cli({}).code == kExitValidation);
  CHECK(cli({"frobnicate"}).code == kExitValidation);
}

TEST_CASE("ingest") {
  EnvGuard env(nullptr);
  const auto root = scratch("ingest");
  SUBCASE("missing directory is an IO error") {
    CHECK(cli({"ingest", "--input", (root / "nope").string(), "-o", (root / "out").string()}).code == kExitIo);
  }
  SUBCASE("empty directory is a validation error") {
    fs::create_directories(root / "empty");
    CHECK(cli({"ingest", "--input", (root / "empty").string(), "-o", (root / "out").string()}).code ==
          kExitValidation);
  }
  SUBCASE("fixture volumes") {
    const auto in = root / "raw";
    for (int i = 0; i < 3; ++i) {
      const std::string id = "patient_0" + std::to_string(i);
      lcs::io::write_volume_file(in / (id + ".csig"), lcs::generate_phantom_volume({8, 8, 10}, 1.0, i, id));
    }
    std::size_t expect_train = 0, expect_test = 0;
    for (int i = 0; i < 3; ++i) {
      const auto vol = lcs::io::read_volume_file(in / ("patient_0" + std::to_string(i) + ".csig"));
      const auto kept = lcs::ingest_volume(vol, 0.3).slices.size();
      (i < 2 ? expect_train : expect_test) += kept;
    }
    const auto args = std::vector<std::string>{"ingest", "--input", in.string(), "-o", (root / "out").string(),
                                               "--tau", "0.3", "--train-patients", "2"};
    const auto r = cli(args);
    REQUIRE(r.code == kExitOk);
    const auto m = lcs::read_manifest(root / "out" / "manifest.json");
    std::size_t train = 0, test = 0;
    for (const auto& e : m.entries) (e.role == lcs::SliceRole::train ? train : test) += 1;
    CHECK(train == expect_train);
    CHECK(test == expect_test);
    CHECK(m.rows == 8);
    CHECK(m.patients == std::vector<std::string>{"patient_00", "patient_01", "patient_02"});
    for (const auto& e : m.entries)
      CHECK(lcs::io::sha256_file(root / "out" / e.file) == e.sha256);
    CHECK(fs::exists(root / "out" / "run_ingest.json"));

    const auto first = lcs::io::sha256_file(root / "out" / "manifest.json");
    REQUIRE(cli(args).code == kExitOk);
    CHECK(lcs::io::sha256_file(root / "out" / "manifest.json") == first);

    CHECK(cli({"ingest", "--input", in.string(), "-o", (root / "bad").string(), "--train-patients", "3"}).code ==
          kExitValidation);
  }
}

TEST_CASE("learn") {
  EnvGuard env(nullptr);
  const auto root = scratch("learn");
  const auto sig = signal_batch(root, 12, 3);
  SUBCASE("full rate samples everything") {
    REQUIRE(cli({"learn", "--signals", sig.string(), "--rate", "1", "-o", root.string()}).code == kExitOk);
    const auto pat = lcs::io::read_mask_file(root / "learned_n64.json");
    CHECK(pat == lcs::SubsamplingPattern::full(64, {8, 8}));
  }
  SUBCASE("reruns are byte-identical") {
    const std::vector<std::string> args{"learn", "--signals", sig.string(), "--rate", "0.25", "--n", "5",
                                        "-o", root.string()};
    REQUIRE(cli(args).code == kExitOk);
    const auto mask = slurp(root / "learned_n16.json");
    const auto png = slurp(root / "learned_n16.png");
    const auto record = slurp(root / "run_learn.json");
    REQUIRE(cli(args).code == kExitOk);
    CHECK(slurp(root / "learned_n16.json") == mask);
    CHECK(slurp(root / "learned_n16.png") == png);
    CHECK(slurp(root / "run_learn.json") == record);
    CHECK(fs::exists(root / "learned_n5.json"));
  }
  SUBCASE("hadamard basis") {
    REQUIRE(cli({"learn", "--signals", sig.string(), "--transform", "hadamard", "--n", "8", "-o", root.string()})
                .code == kExitOk);
    CHECK(lcs::io::read_mask_file(root / "learned_n8.json").count() == 8);
  }
  CHECK(cli({"learn", "--signals", sig.string(), "--n", "65", "-o", root.string()}).code == kExitValidation);
  CHECK(cli({"learn", "--signals", sig.string(), "--rate", "0", "-o", root.string()}).code == kExitValidation);
  CHECK(cli({"learn", "--signals", (root / "missing.csig").string(), "--n", "4", "-o", root.string()}).code ==
        kExitIo);
  CHECK(cli({"learn", "--signals", sig.string(), "--n", "4"}).code == kExitValidation);
}

TEST_CASE("evaluate") {
  EnvGuard env(nullptr);
  const auto root = scratch("evaluate");
  const auto sig = signal_batch(root, 6, 5);
  lcs::io::write_mask_file(root / "full.json", lcs::SubsamplingPattern::full(64, {8, 8}));
  lcs::io::write_mask_file(root / "half.json", lcs::SubsamplingPattern(64, {0, 1, 8, 9, 56, 63}, {8, 8}));
  const auto r = cli({"evaluate", "--signals", sig.string(), "--mask", (root / "full.json").string(),
                      (root / "half.json").string(), "-o", root.string(), "--save-images", "2"});
  REQUIRE(r.code == kExitOk);
  const auto full = nlohmann::json::parse(slurp(root / "report_full.json"));
  CHECK(full["mean_normalized_error"].get<double>() == 0.0);
  CHECK(full["infinite_psnr_count"] == 6);
  const auto half = nlohmann::json::parse(slurp(root / "report_half.json"));
  double sum = 0.0;
  for (const auto& row : half["signals"]) sum += row["psnr_db"].get<double>();
  CHECK(sum / 6.0 == doctest::Approx(half["mean_psnr_db"].get<double>()).epsilon(1e-12));
  CHECK(fs::exists(root / "report_half.txt"));
  CHECK(fs::exists(root / "reference_1.png"));
  CHECK(fs::exists(root / "recon_half_1.png"));
  CHECK_FALSE(fs::exists(root / "recon_half_2.png"));

  lcs::io::write_mask_file(root / "small.json", lcs::SubsamplingPattern(16, {0}, {4, 4}));
  CHECK(cli({"evaluate", "--signals", sig.string(), "--mask", (root / "small.json").string(), "-o", root.string()})
            .code == kExitValidation);
  lcs::io::write_text(root / "broken.json", "{");
  CHECK(cli({"evaluate", "--signals", sig.string(), "--mask", (root / "broken.json").string(), "-o",
             root.string()})
            .code == kExitIo);
}

TEST_CASE("baseline") {
  EnvGuard env(nullptr);
  const auto root = scratch("baseline");
  const auto sig = signal_batch(root, 8, 9);
  SUBCASE("single grid point wins") {
    REQUIRE(cli({"baseline", "--signals", sig.string(), "--n", "16", "--r-grid", "0.1", "--d-grid", "2", "-o",
                 root.string()})
                .code == kExitOk);
    const auto log = slurp(root / "vd_n16_tuning.csv");
    CHECK(std::count(log.begin(), log.end(), '\n') == 2);
    CHECK(lcs::io::read_mask_file(root / "vd_n16.json").count() == 16);
  }
  SUBCASE("default grid, reproducible") {
    const std::vector<std::string> args{"baseline", "--signals", sig.string(), "--rate", "0.25", "--seed", "4",
                                        "-o", root.string()};
    REQUIRE(cli(args).code == kExitOk);
    const auto mask = slurp(root / "vd_n16.json");
    const auto log = slurp(root / "vd_n16_tuning.csv");
    CHECK(std::count(log.begin(), log.end(), '\n') == 1 + 25);
    REQUIRE(cli(args).code == kExitOk);
    CHECK(slurp(root / "vd_n16.json") == mask);
    CHECK(slurp(root / "vd_n16_tuning.csv") == log);
  }
  CHECK(cli({"baseline", "--signals", sig.string(), "--n", "2", "--r-grid", "0.9", "--d-grid", "1", "-o",
             root.string()})
            .code == kExitValidation);
}

TEST_CASE("output directory precedence and config files") {
  const auto root = scratch("precedence");
  const auto sig = signal_batch(root, 4, 1);
  SUBCASE("environment overrides the config file") {
    EnvGuard env((root / "from_env").string().c_str());
    lcs::io::write_text(root / "cfg.toml",
                        "[learn]\nsignals = \"" + sig.string() + "\"\nn = [4]\noutput-dir = \"" +
                            (root / "from_cfg").string() + "\"\n");
    const auto r = cli({"learn", "--config", (root / "cfg.toml").string()});
    REQUIRE(r.code == kExitOk);
    CHECK(fs::exists(root / "from_env" / "learned_n4.json"));
    CHECK_FALSE(fs::exists(root / "from_cfg"));
  }
  SUBCASE("command line overrides the environment") {
    EnvGuard env((root / "from_env").string().c_str());
    REQUIRE(cli({"learn", "--signals", sig.string(), "--n", "4", "--output-dir", (root / "cli").string()}).code ==
            kExitOk);
    CHECK(fs::exists(root / "cli" / "learned_n4.json"));
    CHECK_FALSE(fs::exists(root / "from_env"));
  }
  SUBCASE("config alone") {
    EnvGuard env(nullptr);
    lcs::io::write_text(root / "cfg.toml",
                        "[learn]\nsignals = \"" + sig.string() + "\"\nn = [4]\noutput-dir = \"" +
                            (root / "from_cfg").string() + "\"\n");
    REQUIRE(cli({"learn", "--config", (root / "cfg.toml").string()}).code == kExitOk);
    CHECK(fs::exists(root / "from_cfg" / "learned_n4.json"));
  }
}
