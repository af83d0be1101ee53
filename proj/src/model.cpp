#include "arp/model.hpp"

#include <queue>
#include <unordered_set>

#include "arp/errors.hpp"

namespace arp::model {

DiscountVectors default_discounts(int release_count) {
  if (release_count < 1) {
    throw data_error("release count must be >= 1, got " + std::to_string(release_count));
  }
  int k_max = release_count;
  DiscountVectors d;
  d.w.resize(k_max + 1);
  d.z.resize(k_max + 1);
  for (int k = 1; k <= k_max + 1; ++k) {
    d.w[k - 1] = static_cast<double>(k_max + 1 - k) / k_max;
    d.z[k - 1] = static_cast<double>(k - 1) / k_max;
  }
  d.w.front() = 1.0;
  d.w.back() = 0.0;
  d.z.front() = 0.0;
  d.z.back() = 1.0;
  return d;
}

void validate_discounts(const DiscountVectors& discounts, int release_count) {
  std::size_t want = static_cast<std::size_t>(release_count) + 1;
  if (discounts.w.size() != want || discounts.z.size() != want) {
    throw data_error("discount vectors must have length K+1 = " + std::to_string(want) +
                     ", got w: " + std::to_string(discounts.w.size()) +
                     ", z: " + std::to_string(discounts.z.size()));
  }
  if (discounts.w.front() != 1.0 || discounts.w.back() != 0.0) {
    throw data_error("satisfaction discounts must run from 1 at release 1 to 0 at postponement");
  }
  if (discounts.z.front() != 0.0 || discounts.z.back() != 1.0) {
    throw data_error("dissatisfaction discounts must run from 0 at release 1 to 1 at postponement");
  }
  for (std::size_t i = 1; i < want; ++i) {
    if (!(discounts.w[i] < discounts.w[i - 1])) {
      throw data_error("satisfaction discounts must be strictly decreasing");
    }
    if (!(discounts.z[i] > discounts.z[i - 1])) {
      throw data_error("dissatisfaction discounts must be strictly increasing");
    }
  }
}

namespace {

void check_dependency_indexes(const std::vector<std::pair<int, int>>& pairs, int n,
                              const char* what) {
  for (auto [a, b] : pairs) {
    if (a < 0 || a >= n || b < 0 || b >= n) {
      throw data_error(std::string(what) + " pair (" + std::to_string(a) + ", " +
                       std::to_string(b) + ") references a feature index outside 0.." +
                       std::to_string(n - 1));
    }
  }
}

void check_precedence_acyclic(const std::vector<std::pair<int, int>>& precedence, int n) {
  std::vector<std::vector<int>> out(n);
  std::vector<int> indegree(n, 0);
  for (auto [a, b] : precedence) {
    if (a == b) throw data_error("precedence pair may not reference the same feature twice");
    out[a].push_back(b);
    ++indegree[b];
  }
  std::queue<int> ready;
  for (int i = 0; i < n; ++i) {
    if (indegree[i] == 0) ready.push(i);
  }
  int processed = 0;
  while (!ready.empty()) {
    int node = ready.front();
    ready.pop();
    ++processed;
    for (int next : out[node]) {
      if (--indegree[next] == 0) ready.push(next);
    }
  }
  if (processed != n) {
    throw data_error("precedence constraints contain a cycle");
  }
}

}  // namespace

void validate_instance(const ArpInstance& instance) {
  if (instance.release_count < 1) {
    throw data_error("instance needs at least one release, got " +
                     std::to_string(instance.release_count));
  }
  if (instance.capacities.size() != static_cast<std::size_t>(instance.release_count)) {
    throw data_error("instance has " + std::to_string(instance.capacities.size()) +
                     " capacities for " + std::to_string(instance.release_count) + " releases");
  }
  for (double cap : instance.capacities) {
    if (!(cap >= 0)) throw data_error("release capacities must be >= 0");
  }
  std::unordered_set<std::string> ids;
  for (const auto& f : instance.features) {
    if (!ids.insert(f.id).second) throw data_error("duplicate feature id: " + f.id);
    if (!(f.satisfaction >= 0 && f.satisfaction <= 1)) {
      throw data_error("feature " + f.id + ": satisfaction outside [0,1]");
    }
    if (!(f.dissatisfaction >= 0 && f.dissatisfaction <= 1)) {
      throw data_error("feature " + f.id + ": dissatisfaction outside [0,1]");
    }
    if (!(f.effort >= 0)) throw data_error("feature " + f.id + ": negative effort");
  }
  validate_discounts(instance.discounts, instance.release_count);
  int n = static_cast<int>(instance.features.size());
  check_dependency_indexes(instance.dependencies.precedence, n, "precedence");
  check_dependency_indexes(instance.dependencies.coupling, n, "coupling");
  check_precedence_acyclic(instance.dependencies.precedence, n);
}

void validate_plan(const ArpInstance& instance, const ReleasePlan& plan) {
  if (plan.size() != instance.features.size()) {
    throw data_error("plan length " + std::to_string(plan.size()) + " does not match feature count " +
                     std::to_string(instance.features.size()));
  }
  int postponed = instance.release_count + 1;
  for (std::size_t n = 0; n < plan.size(); ++n) {
    if (plan[n] < 1 || plan[n] > postponed) {
      throw data_error("plan entry " + std::to_string(n) + " is " + std::to_string(plan[n]) +
                       ", outside 1.." + std::to_string(postponed));
    }
  }
}

std::vector<double> release_loads(const ArpInstance& instance, const ReleasePlan& plan) {
  validate_plan(instance, plan);
  std::vector<double> loads(instance.release_count, 0.0);
  for (std::size_t n = 0; n < plan.size(); ++n) {
    if (plan[n] <= instance.release_count) {
      loads[plan[n] - 1] += instance.features[n].effort;
    }
  }
  return loads;
}

bool is_feasible(const ArpInstance& instance, const ReleasePlan& plan) {
  std::vector<double> loads = release_loads(instance, plan);
  for (int k = 0; k < instance.release_count; ++k) {
    if (loads[k] > instance.capacities[k]) return false;
  }
  for (auto [a, b] : instance.dependencies.precedence) {
    if (plan[a] > plan[b]) return false;
  }
  for (auto [a, b] : instance.dependencies.coupling) {
    if (plan[a] != plan[b]) return false;
  }
  return true;
}

double total_satisfaction(const ArpInstance& instance, const ReleasePlan& plan) {
  validate_plan(instance, plan);
  double total = 0;
  for (std::size_t n = 0; n < plan.size(); ++n) {
    total += instance.discounts.w[plan[n] - 1] * instance.features[n].satisfaction;
  }
  return total;
}

double total_dissatisfaction(const ArpInstance& instance, const ReleasePlan& plan) {
  validate_plan(instance, plan);
  double total = 0;
  for (std::size_t n = 0; n < plan.size(); ++n) {
    total += instance.discounts.z[plan[n] - 1] * instance.features[n].dissatisfaction;
  }
  return total;
}

ObjectiveVector evaluate(const ArpInstance& instance, const ReleasePlan& plan) {
  return ObjectiveVector{total_satisfaction(instance, plan), total_dissatisfaction(instance, plan)};
}

}  // namespace arp::model
