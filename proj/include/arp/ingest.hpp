#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "arp/kano.hpp"

namespace arp::ingest {

struct FeatureRecord {
  std::string id;
  std::string name;
  double effort_optimistic = 0;
  double effort_most_likely = 0;
  double effort_pessimistic = 0;
  double effort = 0;
};

struct StakeholderRecord {
  std::string id;
  int weight = 0;  // Likert score, 1..9
};

struct KanoResponseRecord {
  std::string stakeholder_id;
  std::string feature_id;
  kano::KanoFractions fractions;
};

struct ScenarioConfig {
  int release_count = 0;
  std::vector<std::vector<double>> capacity_scenarios;
  std::optional<std::vector<double>> satisfaction_discounts;
  std::optional<std::vector<double>> dissatisfaction_discounts;
  int lambda_steps = 101;
  std::uint64_t seed = 0;
};

enum class KanoInputMode { Fractions, Raw };

double combine_triangular_effort(double optimistic, double most_likely, double pessimistic);

std::vector<FeatureRecord> parse_features(std::string_view csv_text);
std::vector<StakeholderRecord> parse_stakeholders(std::string_view csv_text);

std::vector<KanoResponseRecord> parse_kano_responses(std::string_view csv_text, KanoInputMode mode,
                                                     std::span<const FeatureRecord> features,
                                                     std::span<const StakeholderRecord> stakeholders);

ScenarioConfig parse_scenario(std::string_view json_text);

}  // namespace arp::ingest
