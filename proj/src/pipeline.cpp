#include "arp/pipeline.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <map>
#include <set>

#include "arp/analysis.hpp"
#include "arp/csv.hpp"
#include "arp/errors.hpp"
#include "arp/roi.hpp"

namespace arp::pipeline {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw data_error("cannot read " + path);
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

Dataset load_dataset(const DatasetPaths& paths) {
  Dataset dataset;
  dataset.features = ingest::parse_features(read_file(paths.features_path));
  dataset.stakeholders = ingest::parse_stakeholders(read_file(paths.stakeholders_path));
  dataset.responses = ingest::parse_kano_responses(read_file(paths.kano_path), paths.kano_mode,
                                                   dataset.features, dataset.stakeholders);
  return dataset;
}

std::vector<kano::FeatureValue> aggregate_values(const Dataset& dataset) {
  std::map<std::string, double> weight_of;
  for (const auto& stakeholder : dataset.stakeholders) {
    weight_of[stakeholder.id] = static_cast<double>(stakeholder.weight);
  }

  std::vector<kano::FeatureValue> values;
  values.reserve(dataset.features.size());
  for (const auto& feature : dataset.features) {
    std::vector<kano::KanoFractions> fractions;
    std::vector<double> weights;
    for (const auto& response : dataset.responses) {
      if (response.feature_id != feature.id) continue;
      fractions.push_back(response.fractions);
      weights.push_back(weight_of.at(response.stakeholder_id));
    }
    try {
      kano::KanoFractions combined = kano::aggregate_fractions(fractions, weights);
      values.push_back(kano::compute_value(combined));
    } catch (const Error& e) {
      throw data_error("feature " + feature.id + ": " + e.what());
    }
  }
  return values;
}

std::vector<kano::FeatureValue> stakeholder_values(const Dataset& dataset,
                                                   const std::string& stakeholder_id) {
  std::vector<kano::FeatureValue> values(dataset.features.size());
  for (std::size_t i = 0; i < dataset.features.size(); ++i) {
    for (const auto& response : dataset.responses) {
      if (response.stakeholder_id != stakeholder_id ||
          response.feature_id != dataset.features[i].id) {
        continue;
      }
      if (response.fractions.classifiable() > 0) {
        values[i] = kano::compute_value(response.fractions);
      }
      break;
    }
  }
  return values;
}

model::ArpInstance build_instance(const Dataset& dataset,
                                  const std::vector<kano::FeatureValue>& values, int release_count,
                                  const std::vector<double>& capacities,
                                  const std::optional<std::vector<double>>& w,
                                  const std::optional<std::vector<double>>& z) {
  if (values.size() != dataset.features.size()) {
    throw data_error("value table has " + std::to_string(values.size()) + " entries for " +
                     std::to_string(dataset.features.size()) + " features");
  }
  model::ArpInstance instance;
  instance.release_count = release_count;
  instance.capacities = capacities;
  instance.discounts = model::default_discounts(release_count);
  if (w) instance.discounts.w = *w;
  if (z) instance.discounts.z = *z;
  instance.features.reserve(dataset.features.size());
  for (std::size_t i = 0; i < dataset.features.size(); ++i) {
    instance.features.push_back(model::ArpFeature{dataset.features[i].id,
                                                  values[i].satisfaction,
                                                  values[i].dissatisfaction,
                                                  dataset.features[i].effort});
  }
  model::validate_instance(instance);
  return instance;
}

namespace {

nlohmann::json plan_json(const model::ReleasePlan& plan) {
  return nlohmann::json(plan);
}

std::optional<double> kappa_or_null(const std::vector<std::string>& ratings) {
  if (ratings.size() < 2) return std::nullopt;
  analysis::RatingsMatrix matrix;
  matrix.cells.push_back(ratings);
  return analysis::fleiss_kappa(matrix);
}

void set_optional(nlohmann::json& node, const char* key, const std::optional<double>& value) {
  if (value) {
    node[key] = *value;
  } else {
    node[key] = nullptr;
  }
}

}  // namespace

nlohmann::json run_solve(const Dataset& dataset, const ingest::ScenarioConfig& scenario,
                         const SolveOptions& options) {
  std::vector<kano::FeatureValue> values = aggregate_values(dataset);

  model::DiscountVectors discounts = model::default_discounts(scenario.release_count);
  if (scenario.satisfaction_discounts) discounts.w = *scenario.satisfaction_discounts;
  if (scenario.dissatisfaction_discounts) discounts.z = *scenario.dissatisfaction_discounts;

  nlohmann::json report;
  report["schema_version"] = 1;

  nlohmann::json features_json = nlohmann::json::array();
  for (std::size_t i = 0; i < dataset.features.size(); ++i) {
    features_json.push_back({{"id", dataset.features[i].id},
                             {"name", dataset.features[i].name},
                             {"effort", dataset.features[i].effort},
                             {"satisfaction", values[i].satisfaction},
                             {"dissatisfaction", values[i].dissatisfaction}});
  }
  report["instance"] = {{"feature_count", dataset.features.size()},
                        {"stakeholder_count", dataset.stakeholders.size()},
                        {"release_count", scenario.release_count},
                        {"features", features_json},
                        {"w", discounts.w},
                        {"z", discounts.z}};
  report["parameters"] = {{"lambda_steps", options.lambda_steps},
                          {"seed", options.seed},
                          {"random_samples", options.random_samples},
                          {"node_limit", options.node_limit}};

  std::set<std::string> responding;
  for (const auto& response : dataset.responses) responding.insert(response.stakeholder_id);

  nlohmann::json scenarios_json = nlohmann::json::array();
  for (std::size_t s = 0; s < scenario.capacity_scenarios.size(); ++s) {
    const auto& capacities = scenario.capacity_scenarios[s];
    model::ArpInstance instance =
        build_instance(dataset, values, scenario.release_count, capacities,
                       scenario.satisfaction_discounts, scenario.dissatisfaction_discounts);

    solvers::SweepConfig sweep_config;
    sweep_config.lambda_grid = solvers::uniform_lambda_grid(options.lambda_steps);
    sweep_config.node_limit = options.node_limit;
    sweep_config.threads = options.threads;
    solvers::SweepResult sweep = solvers::sweep_pareto(instance, sweep_config);

    std::vector<solvers::HeuristicPlan> heuristics = solvers::greedy_portfolio(instance);
    std::vector<model::ReleasePlan> randoms =
        solvers::random_search(instance, options.random_samples, options.seed);

    std::vector<model::ReleasePlan> front_plans;
    std::vector<model::ObjectiveVector> front_objectives;
    std::vector<std::string> front_ids;
    nlohmann::json front_json = nlohmann::json::array();
    for (std::size_t p = 0; p < sweep.members.size(); ++p) {
      const auto& member = sweep.members[p];
      std::string id = "s" + std::to_string(s) + "p" + std::to_string(p);
      front_plans.push_back(member.plan);
      front_objectives.push_back(member.objectives);
      front_ids.push_back(id);
      front_json.push_back({{"id", id},
                            {"plan", plan_json(member.plan)},
                            {"ts", member.objectives.ts},
                            {"tds", member.objectives.tds},
                            {"lambdas", member.lambdas},
                            {"proven", member.proven}});
    }

    nlohmann::json heuristics_json = nlohmann::json::array();
    std::vector<model::ObjectiveVector> heuristic_objectives;
    for (std::size_t h = 0; h < heuristics.size(); ++h) {
      model::ObjectiveVector objectives = model::evaluate(instance, heuristics[h].plan);
      heuristic_objectives.push_back(objectives);
      bool dominated = false;
      for (const auto& reference : front_objectives) {
        if (analysis::dominates(reference, objectives)) {
          dominated = true;
          break;
        }
      }
      heuristics_json.push_back({{"id", "s" + std::to_string(s) + "h" + std::to_string(h)},
                                 {"heuristic", heuristics[h].heuristic},
                                 {"plan", plan_json(heuristics[h].plan)},
                                 {"ts", objectives.ts},
                                 {"tds", objectives.tds},
                                 {"dominated_by_front", dominated}});
    }

    std::vector<model::ObjectiveVector> random_objectives;
    random_objectives.reserve(randoms.size());
    for (const auto& plan : randoms) random_objectives.push_back(model::evaluate(instance, plan));

    nlohmann::json stakeholders_json = nlohmann::json::array();
    std::vector<std::string> tops_by_ts;
    std::vector<std::string> tops_by_tds;
    for (const auto& stakeholder : dataset.stakeholders) {
      if (!responding.contains(stakeholder.id)) continue;
      model::ArpInstance view =
          build_instance(dataset, stakeholder_values(dataset, stakeholder.id),
                         scenario.release_count, capacities, scenario.satisfaction_discounts,
                         scenario.dissatisfaction_discounts);
      analysis::PlanRanking ranking = analysis::rank_plans(view, front_plans);
      const std::string& top_ts = front_ids[ranking.by_satisfaction.front()];
      const std::string& top_tds = front_ids[ranking.by_dissatisfaction.front()];
      tops_by_ts.push_back(top_ts);
      tops_by_tds.push_back(top_tds);
      stakeholders_json.push_back({{"id", stakeholder.id},
                                   {"top_by_satisfaction", top_ts},
                                   {"top_by_dissatisfaction", top_tds}});
    }

    nlohmann::json agreement;
    set_optional(agreement, "kappa_satisfaction", kappa_or_null(tops_by_ts));
    set_optional(agreement, "kappa_dissatisfaction", kappa_or_null(tops_by_tds));

    nlohmann::json diversity = nlohmann::json::array();
    for (const auto& a : front_plans) {
      nlohmann::json row = nlohmann::json::array();
      for (const auto& b : front_plans) row.push_back(analysis::plan_distance(a, b));
      diversity.push_back(row);
    }

    nlohmann::json scenario_json;
    scenario_json["index"] = s;
    scenario_json["capacities"] = capacities;
    scenario_json["front"] = front_json;
    scenario_json["heuristics"] = heuristics_json;
    scenario_json["heuristic_dominated_fraction"] =
        analysis::dominated_fraction(heuristic_objectives, front_objectives);
    scenario_json["random_baseline"] = {
        {"samples", randoms.size()},
        {"dominated_fraction", analysis::dominated_fraction(random_objectives, front_objectives)},
        {"weakly_dominated_fraction",
         analysis::weakly_dominated_fraction(random_objectives, front_objectives)}};
    scenario_json["stakeholders"] = stakeholders_json;
    scenario_json["agreement"] = agreement;
    scenario_json["diversity"] = diversity;
    scenario_json["timings"] = {{"lambda_solves", sweep.solve_count},
                                {"search_nodes", sweep.total_nodes},
                                {"all_proven", sweep.all_proven}};
    scenarios_json.push_back(scenario_json);
  }
  report["scenarios"] = scenarios_json;
  return report;
}

std::string run_kano_csv(const Dataset& dataset) {
  std::vector<kano::FeatureValue> values = aggregate_values(dataset);
  std::string out = "feature_id,S,DS\n";
  for (std::size_t i = 0; i < dataset.features.size(); ++i) {
    out += csv::quote(dataset.features[i].id) + "," +
           csv::format_double(values[i].satisfaction) + "," +
           csv::format_double(values[i].dissatisfaction) + "\n";
  }
  return out;
}

namespace {

roi::CashflowSeries parse_series(const nlohmann::json& node, const std::string& label) {
  if (!node.is_object() || !node.contains("d") || !node.contains("r")) {
    throw data_error(label + " must be an object with keys d and r");
  }
  for (const auto& [key, value] : node.items()) {
    if (key != "d" && key != "r") {
      throw data_error(label + ": unknown key \"" + key + "\"");
    }
  }
  if (!node["d"].is_number()) throw data_error(label + ": d must be a number");
  if (!node["r"].is_array()) throw data_error(label + ": r must be an array of numbers");
  roi::CashflowSeries series;
  series.discount_rate = node["d"].get<double>();
  for (const auto& item : node["r"]) {
    if (!item.is_number()) throw data_error(label + ": r must contain only numbers");
    series.cashflows.push_back(item.get<double>());
  }
  return series;
}

}  // namespace

nlohmann::json run_roi(const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw data_error(std::string("cashflow JSON: ") + e.what());
  }
  nlohmann::json out;
  out["schema_version"] = 1;
  if (doc.is_object() && (doc.contains("optimized") || doc.contains("baseline"))) {
    if (!doc.contains("optimized") || !doc.contains("baseline")) {
      throw data_error("two-series form needs both \"optimized\" and \"baseline\"");
    }
    roi::CashflowSeries optimized = parse_series(doc["optimized"], "optimized");
    roi::CashflowSeries baseline = parse_series(doc["baseline"], "baseline");
    out["npv"] = roi::npv(optimized);
    out["baseline_npv"] = roi::npv(baseline);
    out["npv_added"] = roi::npv_added(optimized, baseline);
  } else {
    roi::CashflowSeries series = parse_series(doc, "cashflow document");
    out["npv"] = roi::npv(series);
  }
  return out;
}

nlohmann::json run_compare(const Dataset& dataset, const nlohmann::json& report,
                           const std::vector<std::string>& plan_ids) {
  if (!report.is_object() || !report.contains("schema_version") ||
      report["schema_version"] != 1) {
    throw data_error("unsupported or missing report schema_version");
  }
  const nlohmann::json& instance_block = report.at("instance");
  int release_count = instance_block.at("release_count").get<int>();
  model::DiscountVectors discounts;
  discounts.w = instance_block.at("w").get<std::vector<double>>();
  discounts.z = instance_block.at("z").get<std::vector<double>>();

  std::vector<std::pair<std::string, model::ReleasePlan>> available;
  std::vector<std::string> default_ids;
  for (const auto& scenario_json : report.at("scenarios")) {
    for (const auto& member : scenario_json.at("front")) {
      available.emplace_back(member.at("id").get<std::string>(),
                             member.at("plan").get<model::ReleasePlan>());
      default_ids.push_back(available.back().first);
    }
    for (const auto& member : scenario_json.at("heuristics")) {
      available.emplace_back(member.at("id").get<std::string>(),
                             member.at("plan").get<model::ReleasePlan>());
    }
  }

  const std::vector<std::string>& selected = plan_ids.empty() ? default_ids : plan_ids;
  if (selected.empty()) throw data_error("the report contains no plans to compare");

  std::vector<model::ReleasePlan> plans;
  for (const std::string& id : selected) {
    auto it = std::find_if(available.begin(), available.end(),
                           [&](const auto& entry) { return entry.first == id; });
    if (it == available.end()) throw data_error("unknown plan id: " + id);
    if (it->second.size() != dataset.features.size()) {
      throw data_error("plan " + id + " does not match the dataset feature count");
    }
    plans.push_back(it->second);
  }

  std::set<std::string> responding;
  for (const auto& response : dataset.responses) responding.insert(response.stakeholder_id);
  if (responding.empty()) throw data_error("no stakeholder responses to compare with");

  nlohmann::json out;
  out["schema_version"] = 1;
  out["plan_ids"] = selected;

  std::vector<double> zero_caps(static_cast<std::size_t>(release_count), 0.0);
  nlohmann::json stakeholders_json = nlohmann::json::array();
  std::vector<std::string> tops_by_ts;
  std::vector<std::string> tops_by_tds;
  for (const auto& stakeholder : dataset.stakeholders) {
    if (!responding.contains(stakeholder.id)) continue;
    model::ArpInstance view;
    view.release_count = release_count;
    view.capacities = zero_caps;
    view.discounts = discounts;
    std::vector<kano::FeatureValue> values = stakeholder_values(dataset, stakeholder.id);
    for (std::size_t i = 0; i < dataset.features.size(); ++i) {
      view.features.push_back(model::ArpFeature{dataset.features[i].id, values[i].satisfaction,
                                                values[i].dissatisfaction,
                                                dataset.features[i].effort});
    }
    model::validate_instance(view);

    nlohmann::json evaluations = nlohmann::json::array();
    for (std::size_t p = 0; p < plans.size(); ++p) {
      model::ObjectiveVector objectives = model::evaluate(view, plans[p]);
      evaluations.push_back(
          {{"plan_id", selected[p]}, {"ts", objectives.ts}, {"tds", objectives.tds}});
    }
    analysis::PlanRanking ranking = analysis::rank_plans(view, plans);
    const std::string& top_ts = selected[ranking.by_satisfaction.front()];
    const std::string& top_tds = selected[ranking.by_dissatisfaction.front()];
    tops_by_ts.push_back(top_ts);
    tops_by_tds.push_back(top_tds);
    stakeholders_json.push_back({{"id", stakeholder.id},
                                 {"evaluations", evaluations},
                                 {"top_by_satisfaction", top_ts},
                                 {"top_by_dissatisfaction", top_tds}});
  }
  out["stakeholders"] = stakeholders_json;

  nlohmann::json agreement;
  set_optional(agreement, "kappa_satisfaction", kappa_or_null(tops_by_ts));
  set_optional(agreement, "kappa_dissatisfaction", kappa_or_null(tops_by_tds));
  out["agreement"] = agreement;
  return out;
}

namespace {

std::string format_number(const nlohmann::json& value) {
  if (value.is_null()) return "n/a";
  return csv::format_double(value.get<double>());
}

}  // namespace

std::string render_solve_text(const nlohmann::json& report) {
  const nlohmann::json& instance = report.at("instance");
  std::string out;
  out += "features: " + std::to_string(instance.at("feature_count").get<std::size_t>()) +
         ", stakeholders: " + std::to_string(instance.at("stakeholder_count").get<std::size_t>()) +
         ", releases: " + std::to_string(instance.at("release_count").get<int>()) + "\n";
  for (const auto& scenario : report.at("scenarios")) {
    out += "scenario " + std::to_string(scenario.at("index").get<std::size_t>()) + ": capacities";
    for (const auto& cap : scenario.at("capacities")) {
      out += " " + csv::format_double(cap.get<double>());
    }
    out += "\n";
    out += "  trade-off plans:\n";
    for (const auto& member : scenario.at("front")) {
      const auto& lambdas = member.at("lambdas");
      out += "    " + member.at("id").get<std::string>() +
             "  TS " + csv::format_double(member.at("ts").get<double>()) +
             "  TDS " + csv::format_double(member.at("tds").get<double>()) +
             "  lambda " + csv::format_double(lambdas.front().get<double>()) + ".." +
             csv::format_double(lambdas.back().get<double>()) +
             (member.at("proven").get<bool>() ? "" : "  (node limit hit)") + "\n";
    }
    out += "  heuristics (dominated fraction " +
           format_number(scenario.at("heuristic_dominated_fraction")) + "):\n";
    for (const auto& member : scenario.at("heuristics")) {
      out += "    " + member.at("id").get<std::string>() + "  " +
             member.at("heuristic").get<std::string>() +
             "  TS " + csv::format_double(member.at("ts").get<double>()) +
             "  TDS " + csv::format_double(member.at("tds").get<double>()) +
             (member.at("dominated_by_front").get<bool>() ? "  dominated" : "") + "\n";
    }
    const auto& baseline = scenario.at("random_baseline");
    out += "  random baseline: " + std::to_string(baseline.at("samples").get<std::size_t>()) +
           " samples, dominated " + format_number(baseline.at("dominated_fraction")) +
           ", weakly dominated " + format_number(baseline.at("weakly_dominated_fraction")) + "\n";
    const auto& agreement = scenario.at("agreement");
    out += "  agreement: kappa(top by TS) " + format_number(agreement.at("kappa_satisfaction")) +
           ", kappa(top by TDS) " + format_number(agreement.at("kappa_dissatisfaction")) + "\n";
    const auto& timings = scenario.at("timings");
    out += "  search: " + std::to_string(timings.at("lambda_solves").get<long long>()) +
           " solves, " + std::to_string(timings.at("search_nodes").get<long long>()) + " nodes" +
           (timings.at("all_proven").get<bool>() ? "" : ", node limit hit") + "\n";
  }
  return out;
}

std::string render_roi_text(const nlohmann::json& result) {
  std::string out = "NPV: " + format_number(result.at("npv")) + "\n";
  if (result.contains("baseline_npv")) {
    out += "baseline NPV: " + format_number(result.at("baseline_npv")) + "\n";
    out += "NPV added: " + format_number(result.at("npv_added")) + "\n";
  }
  return out;
}

std::string render_compare_text(const nlohmann::json& result) {
  std::string out;
  out += "plans:";
  for (const auto& id : result.at("plan_ids")) out += " " + id.get<std::string>();
  out += "\n";
  for (const auto& stakeholder : result.at("stakeholders")) {
    out += stakeholder.at("id").get<std::string>() + ":\n";
    for (const auto& evaluation : stakeholder.at("evaluations")) {
      out += "  " + evaluation.at("plan_id").get<std::string>() +
             "  TS " + csv::format_double(evaluation.at("ts").get<double>()) +
             "  TDS " + csv::format_double(evaluation.at("tds").get<double>()) + "\n";
    }
    out += "  top by TS: " + stakeholder.at("top_by_satisfaction").get<std::string>() +
           ", top by TDS: " + stakeholder.at("top_by_dissatisfaction").get<std::string>() + "\n";
  }
  const auto& agreement = result.at("agreement");
  out += "agreement: kappa(top by TS) " + format_number(agreement.at("kappa_satisfaction")) +
         ", kappa(top by TDS) " + format_number(agreement.at("kappa_dissatisfaction")) + "\n";
  return out;
}

}  // namespace arp::pipeline
