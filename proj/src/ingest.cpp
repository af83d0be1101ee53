#include "arp/ingest.hpp"

#include <array>
#include <cmath>
#include <set>
#include <unordered_set>
#include <utility>

#include "arp/csv.hpp"
#include "arp/errors.hpp"
#include "json.hpp"

namespace arp::ingest {

namespace {

std::string row_context(const char* file, std::size_t row, const std::string& column) {
  return std::string(file) + " row " + std::to_string(row) + ", column " + column;
}

std::unordered_set<std::string> id_set(auto span, const char* what) {
  std::unordered_set<std::string> ids;
  for (const auto& record : span) {
    if (!ids.insert(record.id).second) {
      throw data_error(std::string("duplicate ") + what + " id: " + record.id);
    }
  }
  return ids;
}

}  // namespace

double combine_triangular_effort(double optimistic, double most_likely, double pessimistic) {
  if (!(optimistic >= 0) || !(optimistic <= most_likely) || !(most_likely <= pessimistic)) {
    throw data_error("effort estimates must satisfy 0 <= optimistic <= most likely <= pessimistic, got " +
                     csv::format_double(optimistic) + " / " + csv::format_double(most_likely) +
                     " / " + csv::format_double(pessimistic));
  }
  return (optimistic + 4.0 * most_likely + pessimistic) / 6.0;
}

std::vector<FeatureRecord> parse_features(std::string_view csv_text) {
  csv::Table table = csv::parse(csv_text);
  std::size_t id_col = csv::column(table, "id");
  std::size_t name_col = csv::column(table, "name");
  std::size_t opt_col = csv::column(table, "effort_opt");
  std::size_t ml_col = csv::column(table, "effort_ml");
  std::size_t pess_col = csv::column(table, "effort_pess");

  std::vector<FeatureRecord> features;
  std::unordered_set<std::string> seen;
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& row = table.rows[r];
    std::size_t row_no = r + 1;
    FeatureRecord rec;
    rec.id = row[id_col];
    rec.name = row[name_col];
    if (rec.id.empty()) {
      throw data_error("features row " + std::to_string(row_no) + ": empty id");
    }
    if (!seen.insert(rec.id).second) {
      throw data_error("features row " + std::to_string(row_no) + ": duplicate id " + rec.id);
    }
    rec.effort_optimistic = csv::parse_double(row[opt_col], row_context("features", row_no, "effort_opt"));
    rec.effort_most_likely = csv::parse_double(row[ml_col], row_context("features", row_no, "effort_ml"));
    rec.effort_pessimistic = csv::parse_double(row[pess_col], row_context("features", row_no, "effort_pess"));
    try {
      rec.effort = combine_triangular_effort(rec.effort_optimistic, rec.effort_most_likely,
                                             rec.effort_pessimistic);
    } catch (const Error& e) {
      throw data_error("features row " + std::to_string(row_no) + ": " + e.what());
    }
    features.push_back(std::move(rec));
  }
  return features;
}

std::vector<StakeholderRecord> parse_stakeholders(std::string_view csv_text) {
  csv::Table table = csv::parse(csv_text);
  std::size_t id_col = csv::column(table, "id");
  std::size_t weight_col = csv::column(table, "weight");

  std::vector<StakeholderRecord> stakeholders;
  std::unordered_set<std::string> seen;
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& row = table.rows[r];
    std::size_t row_no = r + 1;
    StakeholderRecord rec;
    rec.id = row[id_col];
    if (rec.id.empty()) {
      throw data_error("stakeholders row " + std::to_string(row_no) + ": empty id");
    }
    if (!seen.insert(rec.id).second) {
      throw data_error("stakeholders row " + std::to_string(row_no) + ": duplicate id " + rec.id);
    }
    rec.weight = csv::parse_int(row[weight_col], row_context("stakeholders", row_no, "weight"));
    if (rec.weight < 1 || rec.weight > 9) {
      throw data_error("stakeholders row " + std::to_string(row_no) + ": weight " +
                       std::to_string(rec.weight) + " outside 1..9");
    }
    stakeholders.push_back(std::move(rec));
  }
  return stakeholders;
}

std::vector<KanoResponseRecord> parse_kano_responses(std::string_view csv_text, KanoInputMode mode,
                                                     std::span<const FeatureRecord> features,
                                                     std::span<const StakeholderRecord> stakeholders) {
  csv::Table table = csv::parse(csv_text);
  std::size_t sid_col = csv::column(table, "stakeholder_id");
  std::size_t fid_col = csv::column(table, "feature_id");

  auto feature_ids = id_set(features, "feature");
  auto stakeholder_ids = id_set(stakeholders, "stakeholder");

  std::vector<std::size_t> value_cols;
  if (mode == KanoInputMode::Fractions) {
    for (const char* name : {"a", "o", "m", "i", "r", "q"}) {
      value_cols.push_back(csv::column(table, name));
    }
  } else {
    for (const char* name : {"f1", "f2", "f3", "f4", "f5", "d1", "d2", "d3", "d4", "d5"}) {
      value_cols.push_back(csv::column(table, name));
    }
  }

  std::vector<KanoResponseRecord> responses;
  std::set<std::pair<std::string, std::string>> seen_pairs;
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& row = table.rows[r];
    std::size_t row_no = r + 1;
    KanoResponseRecord rec;
    rec.stakeholder_id = row[sid_col];
    rec.feature_id = row[fid_col];
    if (!stakeholder_ids.contains(rec.stakeholder_id)) {
      throw data_error("kano responses row " + std::to_string(row_no) + ": unknown stakeholder id " +
                       rec.stakeholder_id);
    }
    if (!feature_ids.contains(rec.feature_id)) {
      throw data_error("kano responses row " + std::to_string(row_no) + ": unknown feature id " +
                       rec.feature_id);
    }
    if (!seen_pairs.insert({rec.stakeholder_id, rec.feature_id}).second) {
      throw data_error("kano responses row " + std::to_string(row_no) + ": duplicate response for " +
                       rec.stakeholder_id + "/" + rec.feature_id);
    }

    std::vector<double> values;
    values.reserve(value_cols.size());
    for (std::size_t c = 0; c < value_cols.size(); ++c) {
      values.push_back(csv::parse_double(row[value_cols[c]],
                                         "kano responses row " + std::to_string(row_no) +
                                             ", column " + table.header[value_cols[c]]));
    }

    try {
      if (mode == KanoInputMode::Fractions) {
        rec.fractions = kano::KanoFractions{values[0], values[1], values[2],
                                            values[3], values[4], values[5]};
        kano::validate_fractions(rec.fractions);
      } else {
        std::array<double, 5> functional{values[0], values[1], values[2], values[3], values[4]};
        std::array<double, 5> dysfunctional{values[5], values[6], values[7], values[8], values[9]};
        rec.fractions = kano::classify_raw_response(functional, dysfunctional);
      }
    } catch (const Error& e) {
      throw data_error("kano responses row " + std::to_string(row_no) + ": " + e.what());
    }
    responses.push_back(std::move(rec));
  }
  return responses;
}

namespace {

std::vector<double> json_number_list(const nlohmann::json& value, const std::string& key) {
  if (!value.is_array()) throw data_error("scenario key \"" + key + "\" must be an array of numbers");
  std::vector<double> out;
  for (const auto& item : value) {
    if (!item.is_number()) {
      throw data_error("scenario key \"" + key + "\" must contain only numbers");
    }
    double v = item.get<double>();
    if (!std::isfinite(v)) throw data_error("scenario key \"" + key + "\" contains a non-finite value");
    out.push_back(v);
  }
  return out;
}

void check_discount_shape(const std::vector<double>& values, int k, const std::string& key,
                          double first, double last, bool increasing) {
  if (values.size() != static_cast<std::size_t>(k) + 1) {
    throw data_error("scenario key \"" + key + "\" must have length k+1 = " + std::to_string(k + 1) +
                     ", got " + std::to_string(values.size()));
  }
  if (values.front() != first || values.back() != last) {
    throw data_error("scenario key \"" + key + "\" must start at " + csv::format_double(first) +
                     " and end at " + csv::format_double(last));
  }
  for (std::size_t i = 1; i < values.size(); ++i) {
    bool ok = increasing ? values[i] > values[i - 1] : values[i] < values[i - 1];
    if (!ok) {
      throw data_error("scenario key \"" + key + "\" must be strictly " +
                       (increasing ? "increasing" : "decreasing"));
    }
  }
}

}  // namespace

ScenarioConfig parse_scenario(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw data_error(std::string("scenario JSON: ") + e.what());
  }
  if (!doc.is_object()) throw data_error("scenario JSON must be an object");

  static const std::set<std::string> allowed = {"k", "scenarios", "w", "z", "lambda_steps", "seed"};
  for (const auto& [key, value] : doc.items()) {
    if (!allowed.contains(key)) {
      throw data_error("scenario JSON: unknown key \"" + key +
                       "\" (allowed: k, scenarios, w, z, lambda_steps, seed)");
    }
  }

  ScenarioConfig config;
  if (!doc.contains("k") || !doc["k"].is_number_integer()) {
    throw data_error("scenario JSON: required integer key \"k\" missing");
  }
  config.release_count = doc["k"].get<int>();
  if (config.release_count < 1) {
    throw data_error("scenario JSON: k must be >= 1, got " + std::to_string(config.release_count));
  }

  if (!doc.contains("scenarios") || !doc["scenarios"].is_array() || doc["scenarios"].empty()) {
    throw data_error("scenario JSON: required key \"scenarios\" must be a nonempty array of capacity lists");
  }
  for (std::size_t s = 0; s < doc["scenarios"].size(); ++s) {
    auto caps = json_number_list(doc["scenarios"][s], "scenarios[" + std::to_string(s) + "]");
    if (caps.size() != static_cast<std::size_t>(config.release_count)) {
      throw data_error("scenario " + std::to_string(s) + " has " + std::to_string(caps.size()) +
                       " capacities, expected k = " + std::to_string(config.release_count));
    }
    for (double c : caps) {
      if (c < 0) throw data_error("scenario " + std::to_string(s) + " has a negative capacity");
    }
    config.capacity_scenarios.push_back(std::move(caps));
  }

  if (doc.contains("w")) {
    auto w = json_number_list(doc["w"], "w");
    check_discount_shape(w, config.release_count, "w", 1.0, 0.0, false);
    config.satisfaction_discounts = std::move(w);
  }
  if (doc.contains("z")) {
    auto z = json_number_list(doc["z"], "z");
    check_discount_shape(z, config.release_count, "z", 0.0, 1.0, true);
    config.dissatisfaction_discounts = std::move(z);
  }

  if (doc.contains("lambda_steps")) {
    if (!doc["lambda_steps"].is_number_integer()) {
      throw data_error("scenario JSON: lambda_steps must be an integer");
    }
    config.lambda_steps = doc["lambda_steps"].get<int>();
    if (config.lambda_steps < 2) {
      throw data_error("scenario JSON: lambda_steps must be >= 2, got " +
                       std::to_string(config.lambda_steps));
    }
  }
  if (doc.contains("seed")) {
    const auto& seed = doc["seed"];
    if (!seed.is_number_integer() || (!seed.is_number_unsigned() && seed.get<long long>() < 0)) {
      throw data_error("scenario JSON: seed must be a non-negative integer");
    }
    config.seed = seed.get<std::uint64_t>();
  }
  return config;
}

}  // namespace arp::ingest
