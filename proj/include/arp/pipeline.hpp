#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "arp/ingest.hpp"
#include "arp/kano.hpp"
#include "arp/model.hpp"
#include "arp/solvers.hpp"
#include "json.hpp"

namespace arp::pipeline {

struct DatasetPaths {
  std::string features_path;
  std::string stakeholders_path;
  std::string kano_path;
  ingest::KanoInputMode kano_mode = ingest::KanoInputMode::Fractions;
};

struct Dataset {
  std::vector<ingest::FeatureRecord> features;
  std::vector<ingest::StakeholderRecord> stakeholders;
  std::vector<ingest::KanoResponseRecord> responses;
};

std::string read_file(const std::string& path);

Dataset load_dataset(const DatasetPaths& paths);

// Stakeholder-weighted S/DS per feature, in dataset feature order. Every
// feature needs at least one response with classifiable mass.
std::vector<kano::FeatureValue> aggregate_values(const Dataset& dataset);

// S/DS per feature through one stakeholder's eyes. Features this stakeholder
// did not rate, or rated with no classifiable mass, count as zero on both.
std::vector<kano::FeatureValue> stakeholder_values(const Dataset& dataset,
                                                   const std::string& stakeholder_id);

model::ArpInstance build_instance(const Dataset& dataset,
                                  const std::vector<kano::FeatureValue>& values, int release_count,
                                  const std::vector<double>& capacities,
                                  const std::optional<std::vector<double>>& w,
                                  const std::optional<std::vector<double>>& z);

struct SolveOptions {
  int lambda_steps = 101;
  std::uint64_t seed = 0;
  int random_samples = 1000;
  long long node_limit = solvers::kDefaultNodeLimit;
  int threads = 1;
};

// Full run over every capacity scenario: exact sweep, greedy portfolio,
// random baseline, domination statistics, per-stakeholder preferences,
// agreement, and plan diversity. The report depends only on the inputs,
// never on timing or thread count.
nlohmann::json run_solve(const Dataset& dataset, const ingest::ScenarioConfig& scenario,
                         const SolveOptions& options);

// Per-feature value table as CSV: feature_id,S,DS.
std::string run_kano_csv(const Dataset& dataset);

// Accepts {"d": number, "r": [numbers]} for a single series, or
// {"optimized": {...}, "baseline": {...}} with that shape in each slot.
nlohmann::json run_roi(const std::string& json_text);

// Re-evaluates plans from a solve report through each stakeholder's own
// values. Empty plan_ids selects every front plan in the report.
nlohmann::json run_compare(const Dataset& dataset, const nlohmann::json& report,
                           const std::vector<std::string>& plan_ids);

std::string render_solve_text(const nlohmann::json& report);
std::string render_roi_text(const nlohmann::json& result);
std::string render_compare_text(const nlohmann::json& result);

}  // namespace arp::pipeline
