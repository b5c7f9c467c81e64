#include "lcs/report.hpp"

#include <cmath>
#include <cstdio>

#include "json.hpp"

namespace lcs {

namespace {

std::string fixed(double v, int digits = 6) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

nlohmann::json finite_or_null(double v) {
  return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr);
}

}  // namespace

std::string format_report_text(const EvalReport& report, const std::vector<std::string>& labels) {
  std::string out;
  out += "# psnr: magnitude images, peak = max |reference| per image, exact reconstructions excluded from mean\n";
  out += "# pattern: " + (report.pattern_id.empty() ? std::string("-") : report.pattern_id) + "\n";
  out += "# n: " + std::to_string(report.n) + "  p: " + std::to_string(report.p) + "  rate: " +
         std::to_string(report.rate.numerator) + "/" + std::to_string(report.rate.denominator) + "\n";
  out += "# signals: " + std::to_string(report.signals.size()) +
         "  infinite_psnr: " + std::to_string(report.infinite_psnr_count) + "\n";
  out += "# mean_psnr_db: " + fixed(report.mean_psnr) + "\n";
  out += "# mean_normalized_error: " + fixed(report.mean_normalized_error, 9) + "\n";
  out += "# mean_captured_fraction: " + fixed(report.mean_captured_fraction, 9) + "\n";
  out += "index\tlabel\tpsnr_db\tnormalized_error\tcaptured_fraction\n";
  for (std::size_t i = 0; i < report.signals.size(); ++i) {
    const auto& s = report.signals[i];
    out += std::to_string(i) + "\t" + (i < labels.size() ? labels[i] : std::string("-")) + "\t" +
           fixed(s.psnr) + "\t" + fixed(s.normalized_error, 9) + "\t" + fixed(s.captured_fraction, 9) + "\n";
  }
  return out;
}

std::string format_report_json(const EvalReport& report, const std::vector<std::string>& labels) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < report.signals.size(); ++i) {
    const auto& s = report.signals[i];
    rows.push_back({{"index", i},
                    {"label", i < labels.size() ? labels[i] : std::string()},
                    {"psnr_db", finite_or_null(s.psnr)},
                    {"normalized_error", s.normalized_error},
                    {"captured_fraction", s.captured_fraction}});
  }
  const nlohmann::json doc = {
      {"pattern", report.pattern_id},
      {"n", report.n},
      {"p", report.p},
      {"rate", {{"numerator", report.rate.numerator}, {"denominator", report.rate.denominator}}},
      {"psnr_convention", "magnitude images, per-image peak max|reference|"},
      {"mean_psnr_db", finite_or_null(report.mean_psnr)},
      {"infinite_psnr_count", report.infinite_psnr_count},
      {"mean_normalized_error", report.mean_normalized_error},
      {"mean_captured_fraction", report.mean_captured_fraction},
      {"signals", rows}};
  return doc.dump(2) + "\n";
}

std::string format_tuning_log(const TuningResult& result) {
  std::string out = "index,r,d,seed,feasible,mean_psnr,mean_normalized_error\n";
  for (std::size_t k = 0; k < result.log.size(); ++k) {
    const auto& e = result.log[k];
    out += std::to_string(k) + "," + fixed(e.point.r) + "," + fixed(e.point.d) + "," +
           std::to_string(e.seed) + "," + (e.feasible ? "1" : "0") + "," +
           (e.feasible ? fixed(e.mean_psnr) : std::string()) + "," +
           (e.feasible ? fixed(e.mean_normalized_error, 9) : std::string()) + "\n";
  }
  return out;
}

}  // namespace lcs
