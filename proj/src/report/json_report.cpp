#include "tsbreak/report/json_report.hpp"

#include <fstream>

namespace tsbreak::report {

json whiteness_to_json(const WhitenessReport& report) {
  return json{{"statistic", report.statistic},
              {"lags", report.lags_used},
              {"fitted_params", report.fitted_params},
              {"df", report.degrees_of_freedom},
              {"p_value", report.p_value},
              {"white_noise", report.consistent_with_white_noise()}};
}

json model_to_json(const arima::ArimaModel& model,
                   const std::optional<WhitenessReport>& whiteness) {
  const arima::ArimaOrder& o = model.order;
  arima::RootReport roots = model.root_report();
  json doc;
  doc["name"] = o.name();
  doc["order"] = json{{"p", o.p}, {"d", o.d},       {"q", o.q},          {"P", o.P},
                      {"D", o.D}, {"Q", o.Q},       {"period", o.period},
                      {"include_mean", o.include_mean}};
  doc["coefficients"] = json{{"phi", model.phi},
                             {"theta", model.theta},
                             {"seasonal_phi", model.seasonal_phi},
                             {"seasonal_theta", model.seasonal_theta},
                             {"mean", model.mean}};
  doc["sigma2"] = model.sigma2;
  doc["loglik"] = model.loglik;
  doc["aic"] = model.criteria.aic;
  doc["aicc"] = model.criteria.aicc;
  doc["bic"] = model.criteria.bic;
  doc["root_moduli"] =
      json{{"ar", roots.ar_root_moduli}, {"ma", roots.ma_root_moduli}};
  doc["causal"] = roots.causal;
  doc["invertible"] = roots.invertible;
  if (whiteness) {
    doc["whiteness_p"] = whiteness->p_value;
    doc["whiteness"] = whiteness_to_json(*whiteness);
  } else {
    doc["whiteness_p"] = nullptr;
  }
  return doc;
}

json segmented_to_json(const std::string& station, const changepoint::SegmentedModel& model,
                       const changepoint::DetectorConfig& config) {
  json doc;
  doc["station"] = station;
  doc["breakpoints"] = json::array();
  for (const Date& b : model.breakpoints) doc["breakpoints"].push_back(b.to_iso());
  doc["segments"] = json::array();
  for (const changepoint::SegmentFit& seg : model.segments) {
    doc["segments"].push_back(model_to_json(seg.model, seg.whiteness));
  }
  doc["screening_log"] = json::array();
  for (const changepoint::ScreeningRecord& rec : model.screening_log) {
    json r{{"date", rec.date.to_iso()},
           {"mse_with", rec.mse_with},
           {"mse_without", rec.mse_without},
           {"kept", rec.kept}};
    if (!rec.reason.empty()) r["reason"] = rec.reason;
    doc["screening_log"].push_back(std::move(r));
  }
  doc["candidates"] = json::array();
  for (const changepoint::Candidate& c : model.candidates.candidates) {
    doc["candidates"].push_back(json{{"date", c.date.to_iso()}, {"magnitude", c.magnitude}});
  }
  doc["lambda_selected"] = model.lambda_selected;
  doc["config"] = json{{"p_lag", config.p_lag},
                       {"lambda2", config.lambda2},
                       {"cv_window_fraction", config.cv_window_fraction},
                       {"candidate_threshold", config.candidate_threshold},
                       {"min_gap", config.min_gap},
                       {"screening_tau", config.screening_tau},
                       {"max_changepoints", config.max_changepoints}};
  return doc;
}

json preprocess_to_json(const preprocess::PreprocessReport& report) {
  json doc;
  doc["station"] = report.daily.station;
  doc["days"] = report.daily.series.size();
  doc["start"] = report.daily.series.start_date().to_iso();
  doc["end"] = report.daily.series.end_date().to_iso();
  doc["weekday_intercept"] = report.weekday_intercept;
  doc["weekend_coefficient"] = report.weekend_coefficient;
  doc["seasonal_model"] = model_to_json(report.seasonal_model);
  doc["anomalies"] = json::array();
  for (const preprocess::AnomalyRecord& a : report.daily.anomaly_log) {
    doc["anomalies"].push_back(json{{"device", a.device},
                                    {"date", a.date.to_iso()},
                                    {"raw_diff", a.raw_diff},
                                    {"imputed_value", a.imputed_value},
                                    {"reason", a.reason}});
  }
  return doc;
}

synth::PiecewiseSpec piecewise_spec_from_json(const json& doc) {
  synth::PiecewiseSpec spec;
  spec.seed = doc.value("seed", 0ULL);
  if (doc.contains("start_date")) {
    spec.start_date = Date::from_iso(doc.at("start_date").get<std::string>());
  }
  if (!doc.contains("segments") || !doc.at("segments").is_array()) {
    throw FormatError("piecewise spec needs a 'segments' array");
  }
  for (const json& seg : doc.at("segments")) {
    synth::PiecewiseSegment s;
    s.length = seg.at("length").get<std::size_t>();
    const json& m = seg.at("model");
    arima::ArimaModel model;
    model.phi = m.value("phi", std::vector<double>{});
    model.theta = m.value("theta", std::vector<double>{});
    double mean = m.value("mean", 0.0);
    model.sigma2 = m.value("sigma2", 1.0);
    int d = m.value("d", 0);
    model.order =
        arima::ArimaOrder(static_cast<int>(model.phi.size()), d, static_cast<int>(model.theta.size()));
    model.order.include_mean = mean != 0.0 && d == 0;
    model.mean = mean;
    spec.segments.push_back(std::move(s));
    spec.segments.back().model = std::move(model);
  }
  return spec;
}

void write_json_file(const std::string& path, const json& doc) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write JSON file '" + path + "'");
  out << doc.dump(2) << '\n';
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open JSON file '" + path + "'");
  try {
    return json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw FormatError("bad JSON in '" + path + "': " + e.what());
  }
}

}  // namespace tsbreak::report
