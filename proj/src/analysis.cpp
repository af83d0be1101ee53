#include "arp/analysis.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "arp/errors.hpp"

namespace arp::analysis {

bool dominates(const model::ObjectiveVector& a, const model::ObjectiveVector& b) {
  if (a.ts < b.ts || a.tds > b.tds) return false;
  return a.ts > b.ts || a.tds < b.tds;
}

ParetoFront pareto_filter(std::span<const FrontMember> candidates) {
  std::vector<FrontMember> sorted(candidates.begin(), candidates.end());
  std::sort(sorted.begin(), sorted.end(), [](const FrontMember& a, const FrontMember& b) {
    if (a.objectives.ts != b.objectives.ts) return a.objectives.ts > b.objectives.ts;
    if (a.objectives.tds != b.objectives.tds) return a.objectives.tds < b.objectives.tds;
    return a.plan < b.plan;
  });

  ParetoFront front;
  double best_tds = 0;
  bool have_any = false;
  std::size_t i = 0;
  while (i < sorted.size()) {
    // One group of equal TS at a time; within it only the minimal TDS survives.
    std::size_t j = i;
    double group_tds = sorted[i].objectives.tds;
    while (j < sorted.size() && sorted[j].objectives.ts == sorted[i].objectives.ts &&
           sorted[j].objectives.tds == group_tds) {
      ++j;
    }
    if (!have_any || group_tds < best_tds) {
      for (std::size_t k = i; k < j; ++k) front.members.push_back(sorted[k]);
      best_tds = group_tds;
      have_any = true;
    }
    // Skip the rest of this TS group: dominated by the group's minimum.
    while (j < sorted.size() && sorted[j].objectives.ts == sorted[i].objectives.ts) ++j;
    i = j;
  }
  return front;
}

namespace {

double count_dominated(std::span<const model::ObjectiveVector> candidates,
                       std::span<const model::ObjectiveVector> reference, bool weak) {
  if (candidates.empty()) {
    throw data_error("dominated fraction needs at least one candidate");
  }
  std::size_t hit = 0;
  for (const auto& c : candidates) {
    for (const auto& r : reference) {
      bool covered = weak ? (r.ts >= c.ts && r.tds <= c.tds) : dominates(r, c);
      if (covered) {
        ++hit;
        break;
      }
    }
  }
  return static_cast<double>(hit) / static_cast<double>(candidates.size());
}

}  // namespace

double dominated_fraction(std::span<const model::ObjectiveVector> candidates,
                          std::span<const model::ObjectiveVector> reference) {
  return count_dominated(candidates, reference, false);
}

double weakly_dominated_fraction(std::span<const model::ObjectiveVector> candidates,
                                 std::span<const model::ObjectiveVector> reference) {
  return count_dominated(candidates, reference, true);
}

PlanRanking rank_plans(const model::ArpInstance& view, std::span<const model::ReleasePlan> plans) {
  std::vector<model::ObjectiveVector> values;
  values.reserve(plans.size());
  for (const auto& plan : plans) values.push_back(model::evaluate(view, plan));

  PlanRanking ranking;
  ranking.by_satisfaction.resize(plans.size());
  ranking.by_dissatisfaction.resize(plans.size());
  std::iota(ranking.by_satisfaction.begin(), ranking.by_satisfaction.end(), 0);
  std::iota(ranking.by_dissatisfaction.begin(), ranking.by_dissatisfaction.end(), 0);
  std::sort(ranking.by_satisfaction.begin(), ranking.by_satisfaction.end(),
            [&](std::size_t a, std::size_t b) {
              if (values[a].ts != values[b].ts) return values[a].ts > values[b].ts;
              return a < b;
            });
  std::sort(ranking.by_dissatisfaction.begin(), ranking.by_dissatisfaction.end(),
            [&](std::size_t a, std::size_t b) {
              if (values[a].tds != values[b].tds) return values[a].tds < values[b].tds;
              return a < b;
            });
  return ranking;
}

double fleiss_kappa(const RatingsMatrix& matrix) {
  std::size_t subjects = matrix.cells.size();
  if (subjects == 0) throw data_error("agreement needs at least one subject");
  std::size_t raters = matrix.cells.front().size();
  if (raters < 2) throw data_error("agreement needs at least two raters");
  for (const auto& row : matrix.cells) {
    if (row.size() != raters) throw data_error("ratings matrix is not rectangular");
  }

  std::map<std::string, std::size_t> categories;
  for (const auto& row : matrix.cells) {
    for (const auto& cell : row) categories.emplace(cell, categories.size());
  }

  // Per-subject category counts n_ij, then
  //   P_i  = (sum_j n_ij^2 - r) / (r (r - 1))
  //   p_j  = sum_i n_ij / (N r)
  //   kappa = (mean P_i - sum_j p_j^2) / (1 - sum_j p_j^2)
  std::vector<double> category_mass(categories.size(), 0.0);
  double p_mean = 0;
  std::vector<double> counts(categories.size());
  for (const auto& row : matrix.cells) {
    std::fill(counts.begin(), counts.end(), 0.0);
    for (const auto& cell : row) counts[categories.at(cell)] += 1.0;
    double agreement = 0;
    for (std::size_t j = 0; j < counts.size(); ++j) {
      agreement += counts[j] * counts[j];
      category_mass[j] += counts[j];
    }
    double r = static_cast<double>(raters);
    p_mean += (agreement - r) / (r * (r - 1.0));
  }
  p_mean /= static_cast<double>(subjects);

  double chance = 0;
  double total = static_cast<double>(subjects) * static_cast<double>(raters);
  for (double mass : category_mass) {
    double share = mass / total;
    chance += share * share;
  }
  if (chance >= 1.0) return 1.0;
  return (p_mean - chance) / (1.0 - chance);
}

int plan_distance(const model::ReleasePlan& a, const model::ReleasePlan& b) {
  if (a.size() != b.size()) {
    throw data_error("plan distance needs equal lengths, got " + std::to_string(a.size()) +
                     " and " + std::to_string(b.size()));
  }
  int distance = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) ++distance;
  }
  return distance;
}

}  // namespace arp::analysis
