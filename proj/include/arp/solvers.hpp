#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "arp/model.hpp"

namespace arp::solvers {

inline constexpr long long kDefaultNodeLimit = 10'000'000;
inline constexpr long long kDefaultEnumerationCap = 2'000'000;

struct SolveResult {
  model::ReleasePlan plan;
  model::ObjectiveVector objectives;
  double lambda = 0;
  bool proven = true;   // false when the node limit truncated the search
  long long nodes = 0;  // search nodes visited
};

// lambda * TS - (1 - lambda) * TDS.
double scalarized_value(double lambda, const model::ObjectiveVector& objectives);

// Exact maximization of the scalarized objective over feasible plans by
// branch and bound. At lambda 1 (or 0) the secondary objective TDS (or TS)
// breaks ties among optima, so the returned plan is never dominated by
// another optimum. Hitting the node limit returns the best plan found,
// flagged proven = false.
SolveResult solve_scalarized(const model::ArpInstance& instance, double lambda,
                             long long node_limit = kDefaultNodeLimit);

struct SweepConfig {
  std::vector<double> lambda_grid;  // ascending, inside [0,1], 0 and 1 present
  long long node_limit = kDefaultNodeLimit;
  int threads = 1;
};

// steps uniform values covering [0,1] with exact endpoints.
std::vector<double> uniform_lambda_grid(int steps);

struct SweepMember {
  model::ReleasePlan plan;
  model::ObjectiveVector objectives;
  std::vector<double> lambdas;  // grid points whose solve produced this plan
  bool proven = true;
};

struct SweepResult {
  std::vector<SweepMember> members;  // mutually non-dominated, TS descending
  long long total_nodes = 0;
  int solve_count = 0;
  bool all_proven = true;
};

// One exact solve per grid point, identical plans merged, dominated results
// dropped. Grid points are distributed over `threads` workers and merged in
// grid order, so the result does not depend on the thread count.
SweepResult sweep_pareto(const model::ArpInstance& instance, const SweepConfig& config);

struct FrontEntry {
  model::ObjectiveVector objectives;
  std::vector<model::ReleasePlan> plans;  // all plans attaining this vector, lexicographic
};

// Full enumeration oracle: the exact non-dominated set over every feasible
// plan, TS descending. Throws when (K+1)^N exceeds the enumeration cap.
std::vector<FrontEntry> brute_force_front(const model::ArpInstance& instance,
                                          long long enumeration_cap = kDefaultEnumerationCap);

struct HeuristicPlan {
  std::string heuristic;
  model::ReleasePlan plan;
};

// Eight greedy baselines. Each sorts features by its score (ties by feature
// id) and assigns each feature to the earliest release with room, else
// postpones it.
std::vector<HeuristicPlan> greedy_portfolio(const model::ArpInstance& instance);

// n_samples feasible plans: shuffle the features with a generator seeded from
// `seed`, then fill releases 1..K in order from the shuffled sequence.
// Identical seeds give identical output on every platform.
std::vector<model::ReleasePlan> random_search(const model::ArpInstance& instance, int n_samples,
                                              std::uint64_t seed);

}  // namespace arp::solvers
