#pragma once

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "arp/model.hpp"

namespace support {

inline bool near(double a, double b, double tol = 1e-9) { return std::fabs(a - b) <= tol; }

struct InstanceParams {
  int n_min = 4;
  int n_max = 12;
  int k_min = 1;
  int k_max = 3;
  long long enumeration_cap = 2'000'000;  // 0 disables the (K+1)^N bound on N
};

// Random problem with uniform S/DS in [0,1], efforts in [1,60] and per-release
// capacities between 20% and 80% of the mean per-release effort share, so both
// tight and roomy releases occur.
inline arp::model::ArpInstance random_instance(std::mt19937_64& gen,
                                               const InstanceParams& params = {}) {
  std::uniform_int_distribution<int> k_dist(params.k_min, params.k_max);
  int k = k_dist(gen);

  int n_max = params.n_max;
  if (params.enumeration_cap > 0) {
    long long plans = 1;
    int bound = 0;
    while (bound < params.n_max) {
      if (plans > params.enumeration_cap / (k + 1)) break;
      plans *= k + 1;
      ++bound;
    }
    if (bound < n_max) n_max = bound;
  }
  std::uniform_int_distribution<int> n_dist(std::min(params.n_min, n_max), n_max);
  int n = n_dist(gen);

  arp::model::ArpInstance instance;
  instance.release_count = k;
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> effort_dist(1.0, 60.0);
  double total_effort = 0;
  for (int i = 0; i < n; ++i) {
    arp::model::ArpFeature feature;
    feature.id = "F" + std::to_string(i + 1);
    feature.satisfaction = unit(gen);
    feature.dissatisfaction = unit(gen);
    feature.effort = effort_dist(gen);
    total_effort += feature.effort;
    instance.features.push_back(feature);
  }
  std::uniform_real_distribution<double> cap_share(0.2, 0.8);
  for (int r = 0; r < k; ++r) {
    instance.capacities.push_back(cap_share(gen) * total_effort / k);
  }
  instance.discounts = arp::model::default_discounts(k);
  return instance;
}

inline arp::model::ReleasePlan random_plan(std::mt19937_64& gen, std::size_t n, int k) {
  std::uniform_int_distribution<int> release(1, k + 1);
  arp::model::ReleasePlan plan(n);
  for (auto& entry : plan) entry = release(gen);
  return plan;
}

// Visits every feasible plan of a small instance, in lexicographic order of
// the assignment vector. Independent of the solvers: plain odometer counting
// plus the model's own feasibility check.
template <typename Visitor>
inline void for_each_feasible(const arp::model::ArpInstance& instance, Visitor&& visit) {
  std::size_t n = instance.features.size();
  arp::model::ReleasePlan plan(n, 1);
  while (true) {
    if (arp::model::is_feasible(instance, plan)) visit(plan);
    bool carried_out = true;
    for (std::size_t i = n; i-- > 0;) {
      if (plan[i] <= instance.release_count) {
        ++plan[i];
        carried_out = false;
        break;
      }
      plan[i] = 1;
    }
    if (carried_out) break;
  }
}

}  // namespace support
