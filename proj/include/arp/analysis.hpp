#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "arp/model.hpp"

namespace arp::analysis {

// Maximize TS, minimize TDS. Strict domination: at least as good on both
// criteria and strictly better on one.
bool dominates(const model::ObjectiveVector& a, const model::ObjectiveVector& b);

struct FrontMember {
  model::ReleasePlan plan;
  model::ObjectiveVector objectives;
};

struct ParetoFront {
  std::vector<FrontMember> members;  // TS descending, TDS ascending, plan lexicographic
};

// Keeps exactly the non-dominated input elements. Elements with identical
// objective vectors never dominate each other, so ties all survive.
ParetoFront pareto_filter(std::span<const FrontMember> candidates);

// Fraction of candidates strictly dominated by at least one reference vector.
// Throws on an empty candidate list.
double dominated_fraction(std::span<const model::ObjectiveVector> candidates,
                          std::span<const model::ObjectiveVector> reference);

// Same, but counts candidates weakly dominated: some reference vector is at
// least as good on both criteria (equality counts).
double weakly_dominated_fraction(std::span<const model::ObjectiveVector> candidates,
                                 std::span<const model::ObjectiveVector> reference);

struct PlanRanking {
  std::vector<std::size_t> by_satisfaction;     // plan indexes, highest TS first
  std::vector<std::size_t> by_dissatisfaction;  // plan indexes, lowest TDS first
};

// Orders the given plans through the eyes of one stakeholder: `view` is the
// instance with S/DS replaced by that stakeholder's own values. Ties keep the
// lower plan index first.
PlanRanking rank_plans(const model::ArpInstance& view, std::span<const model::ReleasePlan> plans);

// cells[subject][rater] = categorical rating.
struct RatingsMatrix {
  std::vector<std::vector<std::string>> cells;
};

// Chance-corrected inter-rater agreement over the matrix. Needs at least one
// subject and two raters. When expected chance agreement is 1 (every rating
// in one category), agreement is necessarily perfect and the value is 1.
double fleiss_kappa(const RatingsMatrix& matrix);

// Hamming distance between assignment vectors of equal length.
int plan_distance(const model::ReleasePlan& a, const model::ReleasePlan& b);

}  // namespace arp::analysis
