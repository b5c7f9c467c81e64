#pragma once

#include <string>
#include <vector>

#include "lcs/baseline.hpp"
#include "lcs/metrics.hpp"

namespace lcs {

// Plain-text table: a commented header stating the PSNR convention and the
// aggregates, then one row per signal. `labels` may be empty.
std::string format_report_text(const EvalReport& report, const std::vector<std::string>& labels = {});

// JSON document with the same content; infinite PSNR values become null.
std::string format_report_json(const EvalReport& report, const std::vector<std::string>& labels = {});

// CSV with one row per grid point: index,r,d,seed,feasible,mean_psnr,mean_normalized_error.
std::string format_tuning_log(const TuningResult& result);

}  // namespace lcs
