#include "arp/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <random>
#include <thread>

#include "arp/analysis.hpp"
#include "arp/errors.hpp"

namespace arp::solvers {

double scalarized_value(double lambda, const model::ObjectiveVector& objectives) {
  return lambda * objectives.ts - (1.0 - lambda) * objectives.tds;
}

namespace {

// gains[f][k-1] for k = 1..K+1: the objective gained by pulling feature f
// from the postponement bucket into release k. Built so every entry is
// non-negative, non-increasing over k, and exactly zero at k = K+1. The
// search then maximizes a plain sum of gains on top of the all-postponed
// baseline.
using GainTable = std::vector<std::vector<double>>;

GainTable gain_table(const model::ArpInstance& instance, double s_coeff, double ds_coeff) {
  const auto& w = instance.discounts.w;
  const auto& z = instance.discounts.z;
  GainTable gains(instance.features.size());
  for (std::size_t f = 0; f < instance.features.size(); ++f) {
    const auto& feature = instance.features[f];
    gains[f].resize(w.size());
    for (std::size_t k = 0; k < w.size(); ++k) {
      gains[f][k] = s_coeff * w[k] * feature.satisfaction +
                    ds_coeff * (1.0 - z[k]) * feature.dissatisfaction;
    }
  }
  return gains;
}

struct DependencyLink {
  enum Kind { kNoLaterThanPartner, kNoEarlierThanPartner, kSameAsPartner };
  int partner;
  Kind kind;
};

// A gain table together with the objective mix it was built from. The bound
// computation needs the mix to split the table back into its satisfaction and
// dissatisfaction parts.
struct GainSpec {
  double s_coeff = 0;
  double ds_coeff = 0;
  GainTable gains;
};

// Resolves dependency violations left behind by a value-blind fill: pushing a
// feature to the postponement bucket can only free capacity, so feasibility
// of the capacity constraints is preserved.
void postpone_dependency_violations(const model::ArpInstance& instance, model::ReleasePlan& plan) {
  const int postponed = instance.release_count + 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto [a, b] : instance.dependencies.precedence) {
      if (plan[a] > plan[b]) {
        plan[b] = postponed;
        changed = true;
      }
    }
    for (auto [a, b] : instance.dependencies.coupling) {
      if (plan[a] != plan[b]) {
        plan[a] = postponed;
        plan[b] = postponed;
        changed = true;
      }
    }
  }
}

model::ReleasePlan greedy_fill(const model::ArpInstance& instance,
                               const std::vector<int>& feature_order) {
  const int n = static_cast<int>(instance.features.size());
  const int postponed = instance.release_count + 1;
  model::ReleasePlan plan(n, postponed);
  for (int f : feature_order) {
    for (int k = 1; k <= instance.release_count; ++k) {
      // Candidate load computed exactly as the canonical check will see it:
      // feature index order, with f included at its own position.
      double load = 0;
      for (int i = 0; i < n; ++i) {
        if (plan[i] == k || i == f) load += instance.features[i].effort;
      }
      if (load <= instance.capacities[k - 1]) {
        plan[f] = k;
        break;
      }
    }
  }
  postpone_dependency_violations(instance, plan);
  return plan;
}

double value_density(double value, double effort) {
  if (effort > 0) return value / effort;
  return value > 0 ? std::numeric_limits<double>::infinity() : 0.0;
}

// Depth-first branch and bound. Features are branched in descending order of
// first-release gain density, releases in ascending order, so the plan found
// is the same on every run. Before the search starts, a handful of greedy
// fills seed the incumbent so near-optimal subtrees prune immediately.
//
// The bound is the smallest of three admissible relaxations:
//  - per-release fractional knapsacks that ignore the coupling between
//    releases (each feature may count once per release),
//  - one fractional knapsack over the pooled remaining capacity using each
//    feature's best (release 1) gain,
//  - a layered relaxation per objective term: at most the first release's
//    remaining capacity of effort-mass can earn first-release discounts, the
//    next layer earns second-release discounts, and so on. Pouring mass in
//    density order into layers in discount order maximizes that relaxation,
//    so the result bounds every feasible completion without pretending all
//    mass fits the first release.
//
// An optional secondary gain table switches the search to lexicographic
// maximization: among plans optimal for the primary table, the one maximizing
// the secondary sum wins.
class BnbSearch {
 public:
  BnbSearch(const model::ArpInstance& instance, const GainSpec& primary,
            const GainSpec* secondary, long long node_limit)
      : instance_(instance),
        primary_(primary.gains),
        secondary_(secondary ? &secondary->gains : nullptr),
        node_limit_(node_limit),
        n_(static_cast<int>(instance.features.size())),
        k_(instance.release_count) {
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), 0);
    std::vector<double> branch_density(n_);
    for (int f = 0; f < n_; ++f) {
      branch_density[f] = value_density(primary.gains[f][0], instance.features[f].effort);
    }
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
      if (branch_density[a] != branch_density[b]) return branch_density[a] > branch_density[b];
      return instance.features[a].effort > instance.features[b].effort;
    });

    loads_.assign(n_ + 1, std::vector<double>(k_, 0.0));
    loads_[0] = instance.capacities;
    // Internal load tracking sums efforts in branch order, the canonical
    // feasibility check sums in feature index order. The slack absorbs the
    // reordering rounding so no canonically feasible plan is pruned; leaves
    // are rechecked canonically before they can become the incumbent.
    slack_.resize(k_);
    for (int r = 0; r < k_; ++r) slack_[r] = 1e-9 * (1.0 + instance.capacities[r]);

    primary_bound_ = make_bound_data(primary);
    if (secondary) secondary_bound_ = make_bound_data(*secondary);

    links_.resize(n_);
    for (auto [a, b] : instance.dependencies.precedence) {
      links_[a].push_back({b, DependencyLink::kNoLaterThanPartner});
      links_[b].push_back({a, DependencyLink::kNoEarlierThanPartner});
    }
    for (auto [a, b] : instance.dependencies.coupling) {
      links_[a].push_back({b, DependencyLink::kSameAsPartner});
      links_[b].push_back({a, DependencyLink::kSameAsPartner});
    }

    // A feature with zero gain everywhere cannot change either objective, so
    // branching it beyond the postponement bucket only multiplies the tree.
    // Keep full branching when the feature participates in a dependency.
    postpone_only_.assign(n_, 0);
    for (int f = 0; f < n_; ++f) {
      if (!links_[f].empty()) continue;
      bool all_zero = true;
      for (int k = 0; k <= k_ && all_zero; ++k) {
        if (primary_[f][k] != 0.0) all_zero = false;
        if (secondary_ && (*secondary_)[f][k] != 0.0) all_zero = false;
      }
      postpone_only_[f] = all_zero ? 1 : 0;
    }

    plan_.assign(n_, 0);
    assigned_.assign(n_, 0);
    best_plan_.assign(n_, k_ + 1);
    seed_incumbent(primary, secondary);
  }

  void run() { dfs(0, 0.0, 0.0); }

  const model::ReleasePlan& best_plan() const { return best_plan_; }
  long long nodes() const { return nodes_; }
  bool truncated() const { return truncated_; }

 private:
  // One objective term for the layered relaxation: effort-mass poured into
  // release layers earns levels[r] per unit of quality. Levels are
  // non-increasing because the discount vectors are monotone.
  struct LayerTerm {
    std::vector<double> levels;
    std::vector<double> quality;
    std::vector<double> rate;
    std::vector<int> order;       // positive quality and effort, by rate descending
    std::vector<int> weightless;  // positive quality, zero effort
  };

  struct BoundData {
    const GainTable* gains = nullptr;
    std::vector<std::vector<int>> per_release;
    std::vector<int> merged;
    std::vector<LayerTerm> terms;
  };

  LayerTerm make_term(std::vector<double> levels, std::vector<double> quality) const {
    LayerTerm term;
    term.levels = std::move(levels);
    term.quality = std::move(quality);
    term.rate.assign(n_, 0.0);
    for (int f = 0; f < n_; ++f) {
      if (term.quality[f] <= 0) continue;
      double effort = instance_.features[f].effort;
      if (effort > 0) {
        term.rate[f] = term.quality[f] / effort;
        term.order.push_back(f);
      } else {
        term.weightless.push_back(f);
      }
    }
    std::stable_sort(term.order.begin(), term.order.end(),
                     [&](int a, int b) { return term.rate[a] > term.rate[b]; });
    return term;
  }

  BoundData make_bound_data(const GainSpec& spec) const {
    BoundData data;
    data.gains = &spec.gains;
    data.per_release = density_orders(spec.gains);
    data.merged = order_by_density(spec.gains, 0);
    if (spec.s_coeff > 0) {
      std::vector<double> levels(k_);
      for (int r = 0; r < k_; ++r) levels[r] = spec.s_coeff * instance_.discounts.w[r];
      std::vector<double> quality(n_);
      for (int f = 0; f < n_; ++f) quality[f] = instance_.features[f].satisfaction;
      data.terms.push_back(make_term(std::move(levels), std::move(quality)));
    }
    if (spec.ds_coeff > 0) {
      std::vector<double> levels(k_);
      for (int r = 0; r < k_; ++r) levels[r] = spec.ds_coeff * (1.0 - instance_.discounts.z[r]);
      std::vector<double> quality(n_);
      for (int f = 0; f < n_; ++f) quality[f] = instance_.features[f].dissatisfaction;
      data.terms.push_back(make_term(std::move(levels), std::move(quality)));
    }
    return data;
  }

  std::vector<std::vector<int>> density_orders(const GainTable& gains) const {
    std::vector<std::vector<int>> orders(k_);
    for (int r = 0; r < k_; ++r) orders[r] = order_by_density(gains, r);
    return orders;
  }

  std::vector<int> order_by_density(const GainTable& gains, int r) const {
    std::vector<double> density(n_);
    for (int f = 0; f < n_; ++f) {
      double gain = gains[f][r];
      double effort = instance_.features[f].effort;
      if (effort > 0) {
        density[f] = gain / effort;
      } else {
        density[f] = gain > 0 ? std::numeric_limits<double>::infinity() : 0.0;
      }
    }
    std::vector<int> order(n_);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return density[a] > density[b]; });
    return order;
  }

  // Fractional knapsack over the unassigned features, greedy by density.
  // Zero-gain features sort to the tail, so the scan may stop at the first.
  double fractional_fill(const GainTable& gains, const std::vector<int>& order, int r,
                         double cap) const {
    double total = 0;
    for (int f : order) {
      if (assigned_[f]) continue;
      double gain = gains[f][r];
      if (gain <= 0) break;
      double effort = instance_.features[f].effort;
      if (effort <= 0) {
        total += gain;
        continue;
      }
      if (effort <= cap) {
        total += gain;
        cap -= effort;
      } else {
        total += gain * (cap / effort);
        break;
      }
    }
    return total;
  }

  double layered_fill(const LayerTerm& term, const std::vector<double>& caps) const {
    double total = 0;
    for (int f : term.weightless) {
      if (!assigned_[f]) total += term.levels[0] * term.quality[f];
    }
    std::size_t idx = 0;
    double mass = 0;
    double rate = 0;
    for (int r = 0; r < k_; ++r) {
      double level = term.levels[r];
      if (level <= 0) break;
      double cap = std::max(caps[r], 0.0);
      while (cap > 0) {
        if (mass <= 0) {
          while (idx < term.order.size() && assigned_[term.order[idx]]) ++idx;
          if (idx == term.order.size()) return total;
          int f = term.order[idx++];
          mass = instance_.features[f].effort;
          rate = term.rate[f];
        }
        double take = std::min(cap, mass);
        total += level * rate * take;
        cap -= take;
        mass -= take;
      }
    }
    return total;
  }

  double remaining_bound(const BoundData& data, int depth) const {
    const std::vector<double>& caps = loads_[depth];
    double split_total = 0;
    double pooled_cap = 0;
    for (int r = 0; r < k_; ++r) {
      double cap = std::max(caps[r], 0.0);
      pooled_cap += cap;
      split_total += fractional_fill(*data.gains, data.per_release[r], r, cap);
    }
    double bound = std::min(split_total, fractional_fill(*data.gains, data.merged, 0, pooled_cap));
    double layered = 0;
    for (const LayerTerm& term : data.terms) layered += layered_fill(term, caps);
    return std::min(bound, layered);
  }

  void seed_incumbent(const GainSpec& primary, const GainSpec* secondary) {
    std::vector<std::vector<double>> scores;
    std::vector<double> density(n_);
    std::vector<double> gain(n_);
    std::vector<double> smallness(n_);
    for (int f = 0; f < n_; ++f) {
      density[f] = value_density(primary.gains[f][0], instance_.features[f].effort);
      gain[f] = primary.gains[f][0];
      smallness[f] = -instance_.features[f].effort;
    }
    scores.push_back(std::move(density));
    scores.push_back(std::move(gain));
    scores.push_back(std::move(smallness));
    if (secondary) {
      std::vector<double> secondary_density(n_);
      for (int f = 0; f < n_; ++f) {
        secondary_density[f] = value_density(secondary->gains[f][0], instance_.features[f].effort);
      }
      scores.push_back(std::move(secondary_density));
    }
    for (const std::vector<double>& score : scores) {
      std::vector<int> order(n_);
      std::iota(order.begin(), order.end(), 0);
      std::stable_sort(order.begin(), order.end(),
                       [&](int a, int b) { return score[a] > score[b]; });
      model::ReleasePlan candidate = greedy_fill(instance_, order);
      double sum1 = 0;
      double sum2 = 0;
      for (int f = 0; f < n_; ++f) {
        sum1 += primary.gains[f][candidate[f] - 1];
        if (secondary) sum2 += secondary->gains[f][candidate[f] - 1];
      }
      if (sum1 > best1_ || (secondary && sum1 == best1_ && sum2 > best2_)) {
        best1_ = sum1;
        best2_ = sum2;
        best_plan_ = candidate;
      }
    }
  }

  bool links_ok(int f, int k) const {
    for (const DependencyLink& link : links_[f]) {
      int other = plan_[link.partner];
      if (other == 0) continue;
      switch (link.kind) {
        case DependencyLink::kNoLaterThanPartner:
          if (k > other) return false;
          break;
        case DependencyLink::kNoEarlierThanPartner:
          if (k < other) return false;
          break;
        case DependencyLink::kSameAsPartner:
          if (k != other) return false;
          break;
      }
    }
    return true;
  }

  void dfs(int depth, double cur1, double cur2) {
    ++nodes_;
    if (nodes_ > node_limit_) {
      truncated_ = true;
      return;
    }
    if (depth == n_) {
      bool improves = cur1 > best1_ || (secondary_ && cur1 == best1_ && cur2 > best2_);
      if (improves && model::is_feasible(instance_, plan_)) {
        best_plan_ = plan_;
        best1_ = cur1;
        best2_ = cur2;
      }
      return;
    }

    double ub1 = cur1 + remaining_bound(primary_bound_, depth);
    if (ub1 < best1_) return;
    if (ub1 == best1_) {
      if (!secondary_) return;
      double ub2 = cur2 + remaining_bound(secondary_bound_, depth);
      if (ub2 <= best2_) return;
    }

    int f = order_[depth];
    double effort = instance_.features[f].effort;
    const std::vector<double>& caps = loads_[depth];
    int first = postpone_only_[f] ? k_ + 1 : 1;
    for (int k = first; k <= k_ + 1; ++k) {
      if (k <= k_ && effort > caps[k - 1] + slack_[k - 1]) continue;
      if (!links_ok(f, k)) continue;
      std::vector<double>& child = loads_[depth + 1];
      child = caps;
      if (k <= k_) child[k - 1] = caps[k - 1] - effort;
      plan_[f] = k;
      assigned_[f] = 1;
      double next2 = secondary_ ? cur2 + (*secondary_)[f][k - 1] : 0.0;
      dfs(depth + 1, cur1 + primary_[f][k - 1], next2);
      assigned_[f] = 0;
      plan_[f] = 0;
      if (truncated_) return;
    }
  }

  const model::ArpInstance& instance_;
  const GainTable& primary_;
  const GainTable* secondary_;
  long long node_limit_;
  int n_;
  int k_;

  std::vector<int> order_;
  std::vector<std::vector<double>> loads_;
  std::vector<double> slack_;
  BoundData primary_bound_;
  BoundData secondary_bound_;
  std::vector<std::vector<DependencyLink>> links_;
  std::vector<char> postpone_only_;

  model::ReleasePlan plan_;
  std::vector<char> assigned_;
  model::ReleasePlan best_plan_;
  double best1_ = 0;
  double best2_ = 0;
  long long nodes_ = 0;
  bool truncated_ = false;
};

// Canonical representative among equal-value optima: walk features in index
// order and pull each into the earliest release that changes neither gain sum
// and stays feasible, until nothing moves.
void repair_earlier_moves(const model::ArpInstance& instance, const GainTable& primary,
                          const GainTable* secondary, model::ReleasePlan& plan) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t f = 0; f < plan.size(); ++f) {
      for (int k = 1; k < plan[f]; ++k) {
        if (primary[f][k - 1] != primary[f][plan[f] - 1]) continue;
        if (secondary && (*secondary)[f][k - 1] != (*secondary)[f][plan[f] - 1]) continue;
        int previous = plan[f];
        plan[f] = k;
        if (model::is_feasible(instance, plan)) {
          changed = true;
          break;
        }
        plan[f] = previous;
      }
    }
  }
}

}  // namespace

SolveResult solve_scalarized(const model::ArpInstance& instance, double lambda,
                             long long node_limit) {
  model::validate_instance(instance);
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw usage_error("lambda must lie in [0,1], got " + std::to_string(lambda));
  }
  if (node_limit < 1) throw usage_error("node limit must be positive");

  GainSpec primary;
  GainSpec secondary_storage;
  const GainSpec* secondary = nullptr;
  if (lambda == 1.0) {
    primary = GainSpec{1.0, 0.0, gain_table(instance, 1.0, 0.0)};
    secondary_storage = GainSpec{0.0, 1.0, gain_table(instance, 0.0, 1.0)};
    secondary = &secondary_storage;
  } else if (lambda == 0.0) {
    primary = GainSpec{0.0, 1.0, gain_table(instance, 0.0, 1.0)};
    secondary_storage = GainSpec{1.0, 0.0, gain_table(instance, 1.0, 0.0)};
    secondary = &secondary_storage;
  } else {
    primary = GainSpec{lambda, 1.0 - lambda, gain_table(instance, lambda, 1.0 - lambda)};
  }

  BnbSearch search(instance, primary, secondary, node_limit);
  search.run();
  model::ReleasePlan plan = search.best_plan();
  repair_earlier_moves(instance, primary.gains, secondary ? &secondary->gains : nullptr, plan);

  SolveResult result;
  result.plan = std::move(plan);
  result.objectives = model::evaluate(instance, result.plan);
  result.lambda = lambda;
  result.proven = !search.truncated();
  result.nodes = search.nodes();
  return result;
}

std::vector<double> uniform_lambda_grid(int steps) {
  if (steps < 2) throw usage_error("lambda grid needs at least 2 steps");
  std::vector<double> grid(steps);
  for (int i = 0; i < steps; ++i) {
    grid[i] = static_cast<double>(i) / static_cast<double>(steps - 1);
  }
  grid.front() = 0.0;
  grid.back() = 1.0;
  return grid;
}

SweepResult sweep_pareto(const model::ArpInstance& instance, const SweepConfig& config) {
  model::validate_instance(instance);
  const auto& grid = config.lambda_grid;
  if (grid.size() < 2 || grid.front() != 0.0 || grid.back() != 1.0) {
    throw usage_error("lambda grid must include 0 and 1");
  }
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i] >= 0.0 && grid[i] <= 1.0)) {
      throw usage_error("lambda grid values must lie in [0,1]");
    }
    if (i > 0 && !(grid[i] > grid[i - 1])) {
      throw usage_error("lambda grid must be strictly ascending");
    }
  }

  std::vector<SolveResult> solves(grid.size());
  int threads = std::max(1, config.threads);
  if (threads == 1) {
    for (std::size_t i = 0; i < grid.size(); ++i) {
      solves[i] = solve_scalarized(instance, grid[i], config.node_limit);
    }
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> failures(threads);
    for (int t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        try {
          for (std::size_t i = static_cast<std::size_t>(t); i < grid.size();
               i += static_cast<std::size_t>(threads)) {
            solves[i] = solve_scalarized(instance, grid[i], config.node_limit);
          }
        } catch (...) {
          failures[t] = std::current_exception();
        }
      });
    }
    for (auto& worker : pool) worker.join();
    for (const auto& failure : failures) {
      if (failure) std::rethrow_exception(failure);
    }
  }

  SweepResult result;
  result.solve_count = static_cast<int>(grid.size());
  std::map<model::ReleasePlan, std::size_t> plan_index;
  for (const SolveResult& solve : solves) {
    result.total_nodes += solve.nodes;
    result.all_proven = result.all_proven && solve.proven;
    auto [it, inserted] = plan_index.try_emplace(solve.plan, result.members.size());
    if (inserted) {
      result.members.push_back(SweepMember{solve.plan, solve.objectives, {solve.lambda}, solve.proven});
    } else {
      SweepMember& member = result.members[it->second];
      member.lambdas.push_back(solve.lambda);
      member.proven = member.proven && solve.proven;
    }
  }

  std::vector<SweepMember> kept;
  for (const SweepMember& candidate : result.members) {
    bool dominated = false;
    for (const SweepMember& other : result.members) {
      if (analysis::dominates(other.objectives, candidate.objectives)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) kept.push_back(candidate);
  }
  std::sort(kept.begin(), kept.end(), [](const SweepMember& a, const SweepMember& b) {
    if (a.objectives.ts != b.objectives.ts) return a.objectives.ts > b.objectives.ts;
    if (a.objectives.tds != b.objectives.tds) return a.objectives.tds < b.objectives.tds;
    return a.plan < b.plan;
  });
  result.members = std::move(kept);
  return result;
}

std::vector<FrontEntry> brute_force_front(const model::ArpInstance& instance,
                                          long long enumeration_cap) {
  model::validate_instance(instance);
  if (enumeration_cap < 1) throw usage_error("enumeration cap must be positive");
  const int n = static_cast<int>(instance.features.size());
  const long long choices = instance.release_count + 1;
  long long total = 1;
  for (int i = 0; i < n; ++i) {
    if (total > enumeration_cap / choices) {
      throw limit_error("enumerating " + std::to_string(choices) + "^" + std::to_string(n) +
                        " plans exceeds the cap of " + std::to_string(enumeration_cap));
    }
    total *= choices;
  }

  struct Entry {
    double tds;
    std::vector<model::ReleasePlan> plans;
  };
  std::map<double, Entry> staircase;  // key TS; TDS strictly ascending with TS

  auto consider = [&](const model::ReleasePlan& candidate, const model::ObjectiveVector& obj) {
    auto it = staircase.lower_bound(obj.ts);
    if (it != staircase.end()) {
      if (it->first == obj.ts && it->second.tds == obj.tds) {
        it->second.plans.push_back(candidate);
        return;
      }
      // The first entry at TS >= candidate's has the smallest TDS among them.
      if (it->second.tds <= obj.tds) return;
      if (it->first == obj.ts) it = staircase.erase(it);
    }
    while (it != staircase.begin()) {
      auto prev = std::prev(it);
      if (prev->second.tds >= obj.tds) {
        it = staircase.erase(prev);
      } else {
        break;
      }
    }
    staircase.emplace_hint(it, obj.ts, Entry{obj.tds, {candidate}});
  };

  model::ReleasePlan plan(n, 1);
  for (;;) {
    if (model::is_feasible(instance, plan)) {
      consider(plan, model::evaluate(instance, plan));
    }
    int pos = n - 1;
    while (pos >= 0 && plan[pos] == choices) {
      plan[pos] = 1;
      --pos;
    }
    if (pos < 0) break;
    ++plan[pos];
  }

  std::vector<FrontEntry> front;
  front.reserve(staircase.size());
  for (auto it = staircase.rbegin(); it != staircase.rend(); ++it) {
    front.push_back(FrontEntry{model::ObjectiveVector{it->first, it->second.tds},
                               std::move(it->second.plans)});
  }
  return front;
}

std::vector<HeuristicPlan> greedy_portfolio(const model::ArpInstance& instance) {
  model::validate_instance(instance);
  const int n = static_cast<int>(instance.features.size());
  static constexpr const char* kNames[8] = {
      "satisfaction",
      "dissatisfaction",
      "combined_value",
      "satisfaction_per_effort",
      "dissatisfaction_per_effort",
      "combined_value_per_effort",
      "smallest_effort",
      "first_release_value",
  };

  std::vector<HeuristicPlan> portfolio;
  portfolio.reserve(8);
  for (int h = 0; h < 8; ++h) {
    std::vector<double> score(n);
    for (int f = 0; f < n; ++f) {
      const auto& feature = instance.features[f];
      double s = feature.satisfaction;
      double ds = feature.dissatisfaction;
      double effort = feature.effort;
      switch (h) {
        case 0: score[f] = s; break;
        case 1: score[f] = ds; break;
        case 2: score[f] = s + ds; break;
        case 3: score[f] = value_density(s, effort); break;
        case 4: score[f] = value_density(ds, effort); break;
        case 5: score[f] = value_density(s + ds, effort); break;
        case 6: score[f] = -effort; break;
        case 7: score[f] = s * instance.discounts.w[0] + ds; break;
      }
    }
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      if (score[a] != score[b]) return score[a] > score[b];
      return instance.features[a].id < instance.features[b].id;
    });
    portfolio.push_back(HeuristicPlan{kNames[h], greedy_fill(instance, order)});
  }
  return portfolio;
}

namespace {

// Unbiased draw from [0, bound) by rejection; keeps output identical across
// platforms, unlike std::uniform_int_distribution.
std::uint64_t bounded_draw(std::mt19937_64& gen, std::uint64_t bound) {
  std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    std::uint64_t draw = gen();
    if (draw >= threshold) return draw % bound;
  }
}

}  // namespace

std::vector<model::ReleasePlan> random_search(const model::ArpInstance& instance, int n_samples,
                                              std::uint64_t seed) {
  model::validate_instance(instance);
  if (n_samples < 1) throw usage_error("random search needs at least one sample");
  const int n = static_cast<int>(instance.features.size());
  const int postponed = instance.release_count + 1;

  std::mt19937_64 gen(seed);
  std::vector<model::ReleasePlan> plans;
  plans.reserve(static_cast<std::size_t>(n_samples));
  std::vector<int> perm(n);
  for (int sample = 0; sample < n_samples; ++sample) {
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = n - 1; i > 0; --i) {
      int j = static_cast<int>(bounded_draw(gen, static_cast<std::uint64_t>(i) + 1));
      std::swap(perm[i], perm[j]);
    }
    model::ReleasePlan plan(n, postponed);
    for (int k = 1; k <= instance.release_count; ++k) {
      for (int f : perm) {
        if (plan[f] != postponed) continue;
        double load = 0;
        for (int i = 0; i < n; ++i) {
          if (plan[i] == k || i == f) load += instance.features[i].effort;
        }
        if (load <= instance.capacities[k - 1]) plan[f] = k;
      }
    }
    postpone_dependency_violations(instance, plan);
    plans.push_back(std::move(plan));
  }
  return plans;
}

}  // namespace arp::solvers
