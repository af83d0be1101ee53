#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "arp/analysis.hpp"
#include "arp/errors.hpp"
#include "arp/ingest.hpp"
#include "arp/kano.hpp"
#include "arp/model.hpp"
#include "arp/pipeline.hpp"
#include "arp/roi.hpp"
#include "arp/solvers.hpp"
#include "json.hpp"
#include "support.hpp"

using namespace arp;

namespace {

constexpr std::uint64_t kInstanceSeed = 11701;
constexpr int kInstanceCount = 200;

struct Outcome {
  bool pass = false;
  std::string detail;
  std::string extra;  // optional indented block printed under the status line
};

std::string format_seconds(double seconds) {
  std::ostringstream out;
  out.precision(1);
  out << std::fixed << seconds << " s";
  return out.str();
}

std::string format_fraction(double value) {
  std::ostringstream out;
  out.precision(3);
  out << std::fixed << value;
  return out.str();
}

double elapsed_seconds(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

pipeline::Dataset load_bundled_dataset() {
  pipeline::DatasetPaths paths;
  paths.features_path = std::string(ARP_DATA_DIR) + "/features.csv";
  paths.stakeholders_path = std::string(ARP_DATA_DIR) + "/stakeholders.csv";
  paths.kano_path = std::string(ARP_DATA_DIR) + "/kano_fractions.csv";
  return pipeline::load_dataset(paths);
}

ingest::ScenarioConfig load_bundled_scenario() {
  return ingest::parse_scenario(pipeline::read_file(std::string(ARP_DATA_DIR) + "/scenario.json"));
}

// Criterion 1: the exact solver matches a plain enumeration oracle on 200
// random instances over an 11-point lambda grid, within 1e-9, in under 60 s.
Outcome criterion1() {
  auto start = std::chrono::steady_clock::now();
  std::mt19937_64 gen(kInstanceSeed);
  std::vector<double> grid = solvers::uniform_lambda_grid(11);
  int solves = 0;
  int exact = 0;
  for (int i = 0; i < kInstanceCount; ++i) {
    model::ArpInstance instance = support::random_instance(gen);
    std::array<double, 11> best;
    best.fill(-1e300);
    support::for_each_feasible(instance, [&](const model::ReleasePlan& plan) {
      model::ObjectiveVector v = model::evaluate(instance, plan);
      for (std::size_t j = 0; j < grid.size(); ++j) {
        best[j] = std::max(best[j], solvers::scalarized_value(grid[j], v));
      }
    });
    for (std::size_t j = 0; j < grid.size(); ++j) {
      solvers::SolveResult result = solvers::solve_scalarized(instance, grid[j]);
      ++solves;
      double achieved = solvers::scalarized_value(grid[j], result.objectives);
      if (result.proven && std::fabs(achieved - best[j]) <= 1e-9) ++exact;
    }
  }
  double seconds = elapsed_seconds(start);
  Outcome outcome;
  outcome.pass = exact == solves && seconds < 60.0;
  outcome.detail = std::to_string(exact) + "/" + std::to_string(solves) +
                   " solves match the enumeration optimum, " + format_seconds(seconds);
  return outcome;
}

// Criterion 2: on the same instances, every sweep member's objective vector
// appears in the brute-force front and the sweep output is pairwise
// non-dominated.
Outcome criterion2() {
  std::mt19937_64 gen(kInstanceSeed);
  solvers::SweepConfig config;
  config.lambda_grid = solvers::uniform_lambda_grid(11);
  int membership_violations = 0;
  int domination_violations = 0;
  int members_checked = 0;
  for (int i = 0; i < kInstanceCount; ++i) {
    model::ArpInstance instance = support::random_instance(gen);
    solvers::SweepResult sweep = solvers::sweep_pareto(instance, config);
    std::vector<solvers::FrontEntry> front = solvers::brute_force_front(instance);
    for (const auto& member : sweep.members) {
      ++members_checked;
      bool found = false;
      for (const auto& entry : front) {
        if (entry.objectives == member.objectives) {
          found = true;
          break;
        }
      }
      if (!found) ++membership_violations;
    }
    for (std::size_t a = 0; a < sweep.members.size(); ++a) {
      for (std::size_t b = 0; b < sweep.members.size(); ++b) {
        if (a != b && analysis::dominates(sweep.members[a].objectives,
                                          sweep.members[b].objectives)) {
          ++domination_violations;
        }
      }
    }
  }
  Outcome outcome;
  outcome.pass = membership_violations == 0 && domination_violations == 0;
  outcome.detail = std::to_string(members_checked) + " sweep members, " +
                   std::to_string(membership_violations) + " outside the brute-force front, " +
                   std::to_string(domination_violations) + " domination violations";
  return outcome;
}

// Criterion 3: on the bundled full-size dataset, at least 99% of 1,000
// seeded random plans are weakly dominated by the sweep front.
Outcome criterion3() {
  pipeline::Dataset dataset = load_bundled_dataset();
  ingest::ScenarioConfig scenario = load_bundled_scenario();
  std::vector<kano::FeatureValue> values = pipeline::aggregate_values(dataset);

  Outcome outcome;
  outcome.pass = true;
  std::string fractions;
  for (std::size_t s = 0; s < scenario.capacity_scenarios.size(); ++s) {
    model::ArpInstance instance = pipeline::build_instance(
        dataset, values, scenario.release_count, scenario.capacity_scenarios[s],
        scenario.satisfaction_discounts, scenario.dissatisfaction_discounts);
    solvers::SweepConfig config;
    config.lambda_grid = solvers::uniform_lambda_grid(scenario.lambda_steps);
    solvers::SweepResult sweep = solvers::sweep_pareto(instance, config);

    std::vector<model::ObjectiveVector> front;
    for (const auto& member : sweep.members) front.push_back(member.objectives);
    std::vector<model::ObjectiveVector> randoms;
    for (const auto& plan : solvers::random_search(instance, 1000, 42)) {
      randoms.push_back(model::evaluate(instance, plan));
    }
    double fraction = analysis::weakly_dominated_fraction(randoms, front);
    if (fraction < 0.99) outcome.pass = false;
    if (!fractions.empty()) fractions += ", ";
    fractions += "scenario " + std::to_string(s) + ": " + format_fraction(fraction);
  }
  outcome.detail = "weakly dominated fractions over 1000 random plans: " + fractions;
  return outcome;
}

// Criterion 4: no greedy plan strictly dominates a sweep solution from an
// interior lambda, on the random instances and the bundled scenarios alike.
Outcome criterion4() {
  std::mt19937_64 gen(kInstanceSeed);
  solvers::SweepConfig config;
  config.lambda_grid = solvers::uniform_lambda_grid(11);
  int violations = 0;
  std::vector<double> per_instance;

  auto inspect = [&](const model::ArpInstance& instance, const solvers::SweepConfig& cfg) {
    solvers::SweepResult sweep = solvers::sweep_pareto(instance, cfg);
    std::vector<solvers::HeuristicPlan> heuristics = solvers::greedy_portfolio(instance);

    std::vector<model::ObjectiveVector> front;
    for (const auto& member : sweep.members) front.push_back(member.objectives);
    std::vector<model::ObjectiveVector> heuristic_objectives;
    for (const auto& entry : heuristics) {
      heuristic_objectives.push_back(model::evaluate(instance, entry.plan));
    }
    for (const auto& member : sweep.members) {
      bool interior = false;
      for (double lambda : member.lambdas) {
        if (lambda > 0.0 && lambda < 1.0) interior = true;
      }
      if (!interior) continue;
      for (const auto& h : heuristic_objectives) {
        if (analysis::dominates(h, member.objectives)) ++violations;
      }
    }
    per_instance.push_back(analysis::dominated_fraction(heuristic_objectives, front));
  };

  for (int i = 0; i < kInstanceCount; ++i) {
    inspect(support::random_instance(gen), config);
  }
  pipeline::Dataset dataset = load_bundled_dataset();
  ingest::ScenarioConfig scenario = load_bundled_scenario();
  std::vector<kano::FeatureValue> values = pipeline::aggregate_values(dataset);
  solvers::SweepConfig bundled_config;
  bundled_config.lambda_grid = solvers::uniform_lambda_grid(scenario.lambda_steps);
  for (const auto& capacities : scenario.capacity_scenarios) {
    inspect(pipeline::build_instance(dataset, values, scenario.release_count, capacities,
                                     scenario.satisfaction_discounts,
                                     scenario.dissatisfaction_discounts),
            bundled_config);
  }

  double min_fraction = 1.0;
  double max_fraction = 0.0;
  double sum = 0;
  for (double f : per_instance) {
    min_fraction = std::min(min_fraction, f);
    max_fraction = std::max(max_fraction, f);
    sum += f;
  }
  Outcome outcome;
  outcome.pass = violations == 0;
  outcome.detail = std::to_string(violations) + " domination violations; dominated fraction per " +
                   "instance min " + format_fraction(min_fraction) + ", mean " +
                   format_fraction(sum / per_instance.size()) + ", max " +
                   format_fraction(max_fraction);
  std::string block = "  per-instance heuristic dominated fractions:";
  for (std::size_t i = 0; i < per_instance.size(); ++i) {
    block += (i % 20 == 0 ? "\n    " : " ") + format_fraction(per_instance[i]);
  }
  outcome.extra = block;
  return outcome;
}

// Criterion 5: the documented formula examples hold to 1e-9 (1e-6 for the
// hand-rounded NPV values).
Outcome criterion5() {
  int checks = 0;
  int passed = 0;
  auto expect = [&](double actual, double expected, double tol = 1e-9) {
    ++checks;
    if (std::fabs(actual - expected) <= tol) ++passed;
  };

  auto fractions = [](double a, double o, double m, double i, double r = 0, double q = 0) {
    kano::KanoFractions f;
    f.attractive = a;
    f.one_dimensional = o;
    f.must_be = m;
    f.indifferent = i;
    f.reverse = r;
    f.questionable = q;
    return f;
  };
  expect(kano::compute_satisfaction(fractions(0.5, 0.25, 0.25, 0)), 0.75);
  expect(kano::compute_satisfaction(fractions(0, 0, 0, 1)), 0.0);
  expect(kano::compute_satisfaction(fractions(0.2, 0.2, 0.2, 0.2, 0.2)), 0.5);
  expect(kano::compute_dissatisfaction(fractions(0.5, 0.25, 0.25, 0)), 0.5);
  expect(kano::compute_dissatisfaction(fractions(1, 0, 0, 0)), 0.0);
  expect(kano::compute_dissatisfaction(fractions(0, 0, 1, 0)), 1.0);

  model::ArpInstance ts_case;
  ts_case.release_count = 2;
  ts_case.capacities = {100, 100};
  ts_case.features = {{"F1", 0.75, 0.1, 1}, {"F2", 0.5, 0.1, 1}};
  ts_case.discounts.w = {1.0, 0.6, 0.0};
  ts_case.discounts.z = {0.0, 0.4, 1.0};
  expect(model::total_satisfaction(ts_case, {1, 2}), 0.75 + 0.6 * 0.5);
  expect(model::total_satisfaction(ts_case, {3, 3}), 0.0);

  model::ArpInstance tds_case;
  tds_case.release_count = 1;
  tds_case.capacities = {25};
  tds_case.features = {{"F1", 0.75, 0.5, 10}, {"F2", 0.5, 0.8, 20}};
  tds_case.discounts = model::default_discounts(1);
  expect(model::total_dissatisfaction(tds_case, {1, 2}), 0.8);
  expect(model::total_dissatisfaction(tds_case, {1, 1}), 0.0);

  ++checks;
  if (!model::is_feasible(tds_case, {1, 1})) ++passed;
  ++checks;
  if (model::is_feasible(tds_case, {1, 2})) ++passed;
  ++checks;
  if (model::is_feasible(tds_case, {2, 2})) ++passed;

  roi::CashflowSeries flat;
  flat.cashflows = {100, 100, 100};
  flat.discount_rate = 0.0;
  expect(roi::npv(flat), 300.0);
  roi::CashflowSeries single;
  single.cashflows = {50};
  single.discount_rate = 0.37;
  expect(roi::npv(single), 50.0);
  roi::CashflowSeries discounted = flat;
  discounted.discount_rate = 0.1;
  expect(roi::npv(discounted), 273.5537, 1e-4);
  expect(roi::npv(discounted), 273.55371900826446);

  expect(roi::npv_added(discounted, discounted), 0.0);
  roi::CashflowSeries base;
  base.cashflows = {250};
  base.discount_rate = 0.1;
  expect(roi::npv_added(discounted, base), 23.5537, 1e-4);
  roi::CashflowSeries zero;
  zero.cashflows = {0, 0, 0};
  zero.discount_rate = 0.1;
  expect(roi::npv_added(discounted, zero), roi::npv(discounted));

  Outcome outcome;
  outcome.pass = passed == checks;
  outcome.detail = std::to_string(passed) + "/" + std::to_string(checks) + " formula examples";
  return outcome;
}

// Criterion 6: moving one feature to an earlier release never lowers TS and
// never raises TDS, over 10,000 randomized trials.
Outcome criterion6() {
  std::mt19937_64 gen(11706);
  int trials = 0;
  int violations = 0;
  while (trials < 10000) {
    model::ArpInstance instance = support::random_instance(gen);
    model::ReleasePlan plan =
        support::random_plan(gen, instance.features.size(), instance.release_count);
    std::uniform_int_distribution<std::size_t> pick(0, plan.size() - 1);
    std::size_t f = pick(gen);
    if (plan[f] == 1) continue;
    std::uniform_int_distribution<int> target(1, plan[f] - 1);
    model::ReleasePlan earlier = plan;
    earlier[f] = target(gen);
    ++trials;
    model::ObjectiveVector before = model::evaluate(instance, plan);
    model::ObjectiveVector after = model::evaluate(instance, earlier);
    if (after.ts < before.ts || after.tds > before.tds) ++violations;
  }
  Outcome outcome;
  outcome.pass = violations == 0;
  outcome.detail = std::to_string(violations) + " violations in " + std::to_string(trials) +
                   " earlier-move trials";
  return outcome;
}

// Criterion 7: the CLI produces byte-identical reports across repeat runs and
// across thread counts on the bundled dataset with --seed 42.
Outcome criterion7() {
  namespace fs = std::filesystem;
  std::string data = ARP_DATA_DIR;
  std::string cli = ARP_CLI_PATH;
  fs::path dir = fs::temp_directory_path();
  std::array<fs::path, 3> outs = {dir / "arp_determinism_a.json", dir / "arp_determinism_b.json",
                                  dir / "arp_determinism_c.json"};
  std::array<std::string, 3> extra = {"", "", " --threads 4"};

  Outcome outcome;
  for (int run = 0; run < 3; ++run) {
    std::string command = "\"" + cli + "\" solve" + " --features \"" + data + "/features.csv\"" +
                          " --stakeholders \"" + data + "/stakeholders.csv\"" + " --kano \"" +
                          data + "/kano_fractions.csv\"" + " --scenario \"" + data +
                          "/scenario.json\"" + " --seed 42" + extra[run] + " --out \"" +
                          outs[run].string() + "\"";
    int rc = std::system(command.c_str());
    if (rc != 0) {
      outcome.detail = "solve run " + std::to_string(run + 1) + " exited with code " +
                       std::to_string(rc);
      return outcome;
    }
  }
  std::array<std::string, 3> contents;
  for (int run = 0; run < 3; ++run) {
    contents[run] = pipeline::read_file(outs[run].string());
    fs::remove(outs[run]);
  }
  bool repeat_identical = contents[0] == contents[1];
  bool threads_identical = contents[0] == contents[2];
  outcome.pass = repeat_identical && threads_identical && !contents[0].empty();
  outcome.detail = std::string("repeat runs ") +
                   (repeat_identical ? "byte-identical" : "differ") + ", 1 vs 4 threads " +
                   (threads_identical ? "byte-identical" : "differ") + " (" +
                   std::to_string(contents[0].size()) + " bytes)";
  return outcome;
}

// Criterion 8: Fleiss kappa is exactly 1 for perfect agreement and near 0 for
// a large uniform random matrix.
Outcome criterion8() {
  analysis::RatingsMatrix perfect;
  for (int subject = 0; subject < 6; ++subject) {
    perfect.cells.push_back(std::vector<std::string>(4, subject % 2 == 0 ? "A" : "B"));
  }
  bool perfect_ok = analysis::fleiss_kappa(perfect) == 1.0;

  std::mt19937_64 gen(11708);
  std::uniform_int_distribution<int> coin(0, 1);
  analysis::RatingsMatrix random_matrix;
  random_matrix.cells.resize(100);
  for (auto& row : random_matrix.cells) {
    for (int rater = 0; rater < 10; ++rater) {
      row.push_back(coin(gen) == 0 ? "A" : "B");
    }
  }
  double kappa = analysis::fleiss_kappa(random_matrix);
  bool random_ok = std::fabs(kappa) < 0.05;

  Outcome outcome;
  outcome.pass = perfect_ok && random_ok;
  outcome.detail = std::string("perfect agreement kappa ") + (perfect_ok ? "== 1.0" : "!= 1.0") +
                   ", uniform 100x10x2 kappa = " + format_fraction(kappa);
  return outcome;
}

// Criterion 9: the invariant suite holds under 1,000+ randomized cases per
// property.
Outcome criterion9() {
  std::mt19937_64 gen(11709);
  int violations = 0;
  int cases = 0;

  std::uniform_int_distribution<int> coord(0, 6);
  auto random_objective = [&] {
    return model::ObjectiveVector{coord(gen) / 6.0, coord(gen) / 6.0};
  };
  for (int trial = 0; trial < 1000; ++trial) {
    ++cases;
    model::ObjectiveVector a = random_objective();
    model::ObjectiveVector b = random_objective();
    model::ObjectiveVector c = random_objective();
    if (analysis::dominates(a, a)) ++violations;
    if (analysis::dominates(a, b) && analysis::dominates(b, a)) ++violations;
    if (analysis::dominates(a, b) && analysis::dominates(b, c) && !analysis::dominates(a, c)) {
      ++violations;
    }
  }

  std::uniform_int_distribution<int> member_count(0, 8);
  std::uniform_int_distribution<int> entry(1, 3);
  for (int trial = 0; trial < 1000; ++trial) {
    ++cases;
    std::vector<analysis::FrontMember> members;
    int n = member_count(gen);
    for (int i = 0; i < n; ++i) {
      analysis::FrontMember member;
      member.plan = {entry(gen), entry(gen)};
      member.objectives = random_objective();
      members.push_back(member);
    }
    analysis::ParetoFront once = analysis::pareto_filter(members);
    analysis::ParetoFront twice = analysis::pareto_filter(once.members);
    std::shuffle(members.begin(), members.end(), gen);
    analysis::ParetoFront shuffled = analysis::pareto_filter(members);
    auto equal = [](const analysis::ParetoFront& x, const analysis::ParetoFront& y) {
      if (x.members.size() != y.members.size()) return false;
      for (std::size_t i = 0; i < x.members.size(); ++i) {
        if (!(x.members[i].objectives == y.members[i].objectives) ||
            x.members[i].plan != y.members[i].plan) {
          return false;
        }
      }
      return true;
    };
    if (!equal(once, twice) || !equal(once, shuffled)) ++violations;
  }

  std::uniform_int_distribution<int> length(1, 8);
  for (int trial = 0; trial < 1000; ++trial) {
    ++cases;
    std::size_t n = static_cast<std::size_t>(length(gen));
    model::ReleasePlan a = support::random_plan(gen, n, 3);
    model::ReleasePlan b = support::random_plan(gen, n, 3);
    model::ReleasePlan c = support::random_plan(gen, n, 3);
    int ab = analysis::plan_distance(a, b);
    if (ab < 0) ++violations;
    if (ab != analysis::plan_distance(b, a)) ++violations;
    if ((ab == 0) != (a == b)) ++violations;
    if (analysis::plan_distance(a, c) > ab + analysis::plan_distance(b, c)) ++violations;
  }

  std::uniform_int_distribution<int> k_dist(1, 6);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto random_decreasing = [&](int k) {
    std::vector<double> interior;
    while (static_cast<int>(interior.size()) < k - 1) {
      double v = unit(gen);
      if (v > 0.0 && v < 1.0) interior.push_back(v);
    }
    std::sort(interior.rbegin(), interior.rend());
    interior.erase(std::unique(interior.begin(), interior.end()), interior.end());
    while (static_cast<int>(interior.size()) < k - 1) {
      double v = unit(gen);
      if (v > 0.0 && v < 1.0) {
        interior.push_back(v);
        std::sort(interior.rbegin(), interior.rend());
        interior.erase(std::unique(interior.begin(), interior.end()), interior.end());
      }
    }
    std::vector<double> w = {1.0};
    w.insert(w.end(), interior.begin(), interior.end());
    w.push_back(0.0);
    return w;
  };
  for (int trial = 0; trial < 1000; ++trial) {
    ++cases;
    int k = k_dist(gen);
    model::DiscountVectors d;
    d.w = random_decreasing(k);
    d.z = random_decreasing(k);
    std::reverse(d.z.begin(), d.z.end());
    try {
      model::validate_discounts(d, k);
    } catch (const Error&) {
      ++violations;
    }

    model::DiscountVectors bad = d;
    switch (trial % 4) {
      case 0:
        bad.w.front() = 0.5;
        break;
      case 1:
        bad.w.back() = 0.25;
        break;
      case 2:
        bad.z.front() = 0.75;
        break;
      case 3:
        bad.z[bad.z.size() - 1] = bad.z[bad.z.size() - 2];
        break;
    }
    bool rejected = false;
    try {
      model::validate_discounts(bad, k);
    } catch (const Error&) {
      rejected = true;
    }
    if (!rejected) ++violations;
  }

  Outcome outcome;
  outcome.pass = violations == 0;
  outcome.detail = std::to_string(violations) + " violations across " + std::to_string(cases) +
                   " property cases";
  return outcome;
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    const char* name;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {1, "exact solves match enumeration", criterion1},
      {2, "sweep front matches the brute-force front", criterion2},
      {3, "random baseline is weakly dominated", criterion3},
      {4, "no heuristic beats an interior sweep solution", criterion4},
      {5, "formula examples are exact", criterion5},
      {6, "earlier moves never hurt", criterion6},
      {7, "reports are byte-identical across runs and threads", criterion7},
      {8, "kappa endpoints behave", criterion8},
      {9, "invariant property suite", criterion9},
  };

  int failures = 0;
  for (const Criterion& criterion : criteria) {
    Outcome outcome;
    try {
      outcome = criterion.run();
    } catch (const std::exception& e) {
      outcome.pass = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    std::cout << (outcome.pass ? "PASS" : "FAIL") << " criterion " << criterion.number << " ("
              << criterion.name << "): " << outcome.detail << "\n";
    if (!outcome.extra.empty()) std::cout << outcome.extra << "\n";
    if (!outcome.pass) ++failures;
  }
  if (failures > 0) {
    std::cout << failures << " of 9 criteria failed\n";
    return 1;
  }
  std::cout << "all 9 criteria passed\n";
  return 0;
}
