#pragma once

#include <json.hpp>
#include <optional>
#include <string>

#include "tsbreak/changepoint/detector.hpp"
#include "tsbreak/preprocess/pipeline.hpp"
#include "tsbreak/synth/piecewise.hpp"

namespace tsbreak::report {

using json = nlohmann::ordered_json;

/// Fitted-model document: order, coefficient arrays, sigma2, likelihood,
/// criteria, root moduli and the whiteness p-value when available.
json model_to_json(const arima::ArimaModel& model,
                   const std::optional<WhitenessReport>& whiteness = std::nullopt);

/// The analyze/detect report: station, breakpoints[], segments[],
/// screening_log[], plus the detector configuration echo.
json segmented_to_json(const std::string& station, const changepoint::SegmentedModel& model,
                       const changepoint::DetectorConfig& config);

json preprocess_to_json(const preprocess::PreprocessReport& report);

json whiteness_to_json(const WhitenessReport& report);

/// Piecewise generator spec from a JSON document:
/// {"seed": 7, "start_date": "2019-01-01",
///  "segments": [{"length": 300, "model": {"phi": [0.3], "theta": [],
///                "mean": 0.0, "sigma2": 1.0}}, ...]}
synth::PiecewiseSpec piecewise_spec_from_json(const json& doc);

void write_json_file(const std::string& path, const json& doc);
json read_json_file(const std::string& path);

}  // namespace tsbreak::report
