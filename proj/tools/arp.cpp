#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "arp/csv.hpp"
#include "arp/errors.hpp"
#include "arp/ingest.hpp"
#include "arp/pipeline.hpp"
#include "arp/solvers.hpp"
#include "json.hpp"

namespace {

struct dataset_flags {
  std::string features_path;
  std::string stakeholders_path;
  std::string kano_path;
  std::string kano_mode = "fractions";
};

void add_dataset_flags(CLI::App* cmd, dataset_flags& flags) {
  cmd->add_option("--features", flags.features_path, "features CSV path")->required();
  cmd->add_option("--stakeholders", flags.stakeholders_path, "stakeholders CSV path")->required();
  cmd->add_option("--kano", flags.kano_path, "kano responses CSV path")->required();
  cmd->add_option("--kano-mode", flags.kano_mode, "kano input layout (default fractions)")
      ->check(CLI::IsMember({"fractions", "raw"}));
}

arp::pipeline::Dataset load(const dataset_flags& flags) {
  arp::pipeline::DatasetPaths paths;
  paths.features_path = flags.features_path;
  paths.stakeholders_path = flags.stakeholders_path;
  paths.kano_path = flags.kano_path;
  paths.kano_mode = flags.kano_mode == "raw" ? arp::ingest::KanoInputMode::Raw
                                             : arp::ingest::KanoInputMode::Fractions;
  return arp::pipeline::load_dataset(paths);
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw arp::data_error("cannot write " + out_path);
  out << text;
  out.flush();
  if (!out) throw arp::data_error("cannot write " + out_path);
}

std::vector<double> parse_capacity_list(const std::string& text, int releases) {
  std::vector<double> capacities;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string piece = text.substr(start, comma == std::string::npos ? comma : comma - start);
    try {
      capacities.push_back(arp::csv::parse_double(piece, "--capacities"));
    } catch (const arp::Error&) {
      throw arp::usage_error("--capacities: \"" + piece + "\" is not a number");
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (capacities.size() == 1 && releases > 1) {
    capacities.assign(static_cast<std::size_t>(releases), capacities.front());
  }
  if (capacities.size() != static_cast<std::size_t>(releases)) {
    throw arp::usage_error("--capacities needs 1 or " + std::to_string(releases) +
                           " values, got " + std::to_string(capacities.size()));
  }
  return capacities;
}

std::string render(const nlohmann::json& doc, const std::string& format,
                   std::string (*text_renderer)(const nlohmann::json&)) {
  if (format == "text") return text_renderer(doc);
  return doc.dump(2) + "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"release planning toolkit: Kano-based feature values, trade-off fronts, baselines"};
  app.require_subcommand(1);

  dataset_flags solve_data;
  std::string solve_scenario_path;
  int solve_releases = 0;
  std::string solve_capacities;
  int solve_lambda_steps = 101;
  std::uint64_t solve_seed = 0;
  int solve_random_samples = 1000;
  long long solve_node_limit = arp::solvers::kDefaultNodeLimit;
  int solve_threads = 1;
  std::string solve_out;
  std::string solve_format = "json";
  CLI::App* solve = app.add_subcommand("solve", "compute trade-off fronts and baselines");
  add_dataset_flags(solve, solve_data);
  solve->add_option("--scenario", solve_scenario_path, "scenario JSON path");
  solve->add_option("--releases", solve_releases, "number of releases");
  solve->add_option("--capacities", solve_capacities,
                    "comma-separated per-release capacities (single value repeats)");
  solve->add_option("--lambda-steps", solve_lambda_steps, "scalarization grid size (default 101)")
      ->check(CLI::Range(2, 1000000));
  solve->add_option("--seed", solve_seed, "random baseline seed (default 0)");
  solve->add_option("--random-samples", solve_random_samples,
                    "random baseline size (default 1000)")
      ->check(CLI::Range(1, 100000000));
  solve->add_option("--node-limit", solve_node_limit, "search node budget per solve")
      ->check(CLI::Range(1LL, 1000000000000LL));
  solve->add_option("--threads", solve_threads, "worker threads for the lambda sweep (default 1)")
      ->check(CLI::Range(1, 256));
  solve->add_option("--out", solve_out, "write the report here instead of stdout");
  solve->add_option("--format", solve_format, "output format (default json)")
      ->check(CLI::IsMember({"json", "text"}));

  dataset_flags kano_data;
  std::string kano_out;
  CLI::App* kano = app.add_subcommand("kano", "derive per-feature satisfaction values");
  add_dataset_flags(kano, kano_data);
  kano->add_option("--out", kano_out, "write the CSV here instead of stdout");

  std::string roi_input;
  std::string roi_out;
  std::string roi_format = "json";
  CLI::App* roi = app.add_subcommand("roi", "discount a cashflow series");
  roi->add_option("--input", roi_input, "cashflow JSON path")->required();
  roi->add_option("--out", roi_out, "write the result here instead of stdout");
  roi->add_option("--format", roi_format, "output format (default json)")
      ->check(CLI::IsMember({"json", "text"}));

  dataset_flags compare_data;
  std::string compare_report_path;
  std::vector<std::string> compare_plan_ids;
  std::string compare_out;
  std::string compare_format = "json";
  CLI::App* compare = app.add_subcommand("compare", "score report plans per stakeholder");
  add_dataset_flags(compare, compare_data);
  compare->add_option("--report", compare_report_path, "solve report JSON path")->required();
  compare->add_option("--plan", compare_plan_ids,
                      "plan id to include (repeatable; default: every front plan)");
  compare->add_option("--out", compare_out, "write the result here instead of stdout");
  compare->add_option("--format", compare_format, "output format (default json)")
      ->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (solve->parsed()) {
      bool manual = solve->count("--releases") > 0 || solve->count("--capacities") > 0;
      arp::ingest::ScenarioConfig config;
      if (!solve_scenario_path.empty()) {
        if (manual) {
          throw arp::usage_error("pass either --scenario or --releases/--capacities, not both");
        }
        config = arp::ingest::parse_scenario(arp::pipeline::read_file(solve_scenario_path));
      } else {
        if (solve->count("--releases") == 0 || solve->count("--capacities") == 0) {
          throw arp::usage_error("pass --scenario, or both --releases and --capacities");
        }
        if (solve_releases < 1) throw arp::usage_error("--releases must be at least 1");
        config.release_count = solve_releases;
        config.capacity_scenarios = {parse_capacity_list(solve_capacities, solve_releases)};
      }
      if (solve->count("--lambda-steps") > 0) config.lambda_steps = solve_lambda_steps;
      if (solve->count("--seed") > 0) config.seed = solve_seed;

      arp::pipeline::SolveOptions options;
      options.lambda_steps = config.lambda_steps;
      options.seed = config.seed;
      options.random_samples = solve_random_samples;
      options.node_limit = solve_node_limit;
      options.threads = solve_threads;

      arp::pipeline::Dataset dataset = load(solve_data);
      nlohmann::json report = arp::pipeline::run_solve(dataset, config, options);
      emit(render(report, solve_format, arp::pipeline::render_solve_text), solve_out);
      return 0;
    }
    if (kano->parsed()) {
      arp::pipeline::Dataset dataset = load(kano_data);
      emit(arp::pipeline::run_kano_csv(dataset), kano_out);
      return 0;
    }
    if (roi->parsed()) {
      nlohmann::json result = arp::pipeline::run_roi(arp::pipeline::read_file(roi_input));
      emit(render(result, roi_format, arp::pipeline::render_roi_text), roi_out);
      return 0;
    }
    if (compare->parsed()) {
      arp::pipeline::Dataset dataset = load(compare_data);
      nlohmann::json report;
      try {
        report = nlohmann::json::parse(arp::pipeline::read_file(compare_report_path));
      } catch (const nlohmann::json::parse_error& e) {
        throw arp::data_error(std::string("report JSON: ") + e.what());
      }
      nlohmann::json result = arp::pipeline::run_compare(dataset, report, compare_plan_ids);
      emit(render(result, compare_format, arp::pipeline::render_compare_text), compare_out);
      return 0;
    }
  } catch (const arp::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
