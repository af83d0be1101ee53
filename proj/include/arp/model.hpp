#pragma once

#include <string>
#include <utility>
#include <vector>

namespace arp::model {

struct ArpFeature {
  std::string id;
  double satisfaction = 0;     // S(n), in [0,1]
  double dissatisfaction = 0;  // DS(n), in [0,1]
  double effort = 0;           // person-hours, >= 0
};

// Per-release multipliers, index k-1 holds the value for release k. Index K
// is the postponement bucket: w ends at 0 (a postponed feature satisfies
// nobody), z ends at 1 (its full dissatisfaction materializes).
struct DiscountVectors {
  std::vector<double> w;  // length K+1, w[0] = 1, strictly decreasing to 0
  std::vector<double> z;  // length K+1, z[0] = 0, strictly increasing to 1
};

// Feature index pairs. Precedence (i, j) requires x(i) <= x(j); coupling
// requires x(i) == x(j).
struct Dependencies {
  std::vector<std::pair<int, int>> precedence;
  std::vector<std::pair<int, int>> coupling;
};

struct ArpInstance {
  std::vector<ArpFeature> features;
  int release_count = 0;           // K
  std::vector<double> capacities;  // length K, person-hours per release
  DiscountVectors discounts;
  Dependencies dependencies;
};

// Assignment vector: plan[n] in {1..K+1}, K+1 means postponed.
using ReleasePlan = std::vector<int>;

struct ObjectiveVector {
  double ts = 0;   // total satisfaction
  double tds = 0;  // total dissatisfaction
};

inline bool operator==(const ObjectiveVector& a, const ObjectiveVector& b) {
  return a.ts == b.ts && a.tds == b.tds;
}

// w(k) = (K+1-k)/K, z(k) = (k-1)/K. Linear decay/growth hitting the required
// endpoints exactly.
DiscountVectors default_discounts(int release_count);

// Throws arp::Error(Data) unless both vectors have length K+1, w runs 1 -> 0
// strictly decreasing and z runs 0 -> 1 strictly increasing.
void validate_discounts(const DiscountVectors& discounts, int release_count);

// Structural checks: K >= 1, capacities length K and >= 0, S/DS in [0,1],
// efforts >= 0, unique feature ids, dependency indexes in range, precedence
// graph acyclic.
void validate_instance(const ArpInstance& instance);

// Throws unless plan has length N with every entry in 1..K+1.
void validate_plan(const ArpInstance& instance, const ReleasePlan& plan);

// Effort assigned to each release 1..K (postponed effort consumes nothing).
// Summed in feature index order; this order is the canonical one used by
// every feasibility check.
std::vector<double> release_loads(const ArpInstance& instance, const ReleasePlan& plan);

// True iff every release load fits its capacity (exact comparison, no
// tolerance) and all declared dependencies hold.
bool is_feasible(const ArpInstance& instance, const ReleasePlan& plan);

// TS(x): sum over features of w(x(n)) * S(n), accumulated in index order.
double total_satisfaction(const ArpInstance& instance, const ReleasePlan& plan);

// TDS(x): sum over features of z(x(n)) * DS(n), accumulated in index order.
double total_dissatisfaction(const ArpInstance& instance, const ReleasePlan& plan);

ObjectiveVector evaluate(const ArpInstance& instance, const ReleasePlan& plan);

}  // namespace arp::model
