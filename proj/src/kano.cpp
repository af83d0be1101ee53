#include "arp/kano.hpp"

#include <cmath>
#include <string>

#include "arp/errors.hpp"

namespace arp::kano {

namespace {

// Rows: functional answer. Columns: dysfunctional answer.
// Order: like, must-be, neutral, live-with, dislike.
constexpr char kEvaluationMatrix[kAnswerCount][kAnswerCount] = {
    // dysfunctional:  like  must-be  neutral  live-with  dislike
    /* like      */ {'Q', 'A', 'A', 'A', 'O'},
    /* must-be   */ {'R', 'I', 'I', 'I', 'M'},
    /* neutral   */ {'R', 'I', 'I', 'I', 'M'},
    /* live-with */ {'R', 'I', 'I', 'I', 'M'},
    /* dislike   */ {'R', 'R', 'R', 'R', 'Q'},
};

void check_distribution(std::span<const double, kAnswerCount> distribution, const char* which) {
  double sum = 0;
  for (double p : distribution) {
    if (p < 0) throw data_error(std::string(which) + " answer distribution has a negative entry");
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-6) {
    throw data_error(std::string(which) + " answer distribution sums to " + std::to_string(sum) +
                     ", expected 1");
  }
}

void accumulate(KanoFractions& fractions, char category, double weight) {
  switch (category) {
    case 'A': fractions.attractive += weight; break;
    case 'O': fractions.one_dimensional += weight; break;
    case 'M': fractions.must_be += weight; break;
    case 'I': fractions.indifferent += weight; break;
    case 'R': fractions.reverse += weight; break;
    case 'Q': fractions.questionable += weight; break;
  }
}

}  // namespace

void validate_fractions(const KanoFractions& fractions, double tolerance) {
  const double components[6] = {fractions.attractive, fractions.one_dimensional,
                                fractions.must_be,    fractions.indifferent,
                                fractions.reverse,    fractions.questionable};
  for (double c : components) {
    if (!(c >= 0.0 && c <= 1.0 + tolerance)) {
      throw data_error("kano fraction out of [0,1]: " + std::to_string(c));
    }
  }
  if (std::abs(fractions.sum() - 1.0) > tolerance) {
    throw data_error("kano fractions sum to " + std::to_string(fractions.sum()) + ", expected 1");
  }
}

char evaluation_cell(Answer functional, Answer dysfunctional) {
  return kEvaluationMatrix[static_cast<int>(functional)][static_cast<int>(dysfunctional)];
}

KanoFractions classify_raw_response(std::span<const double, kAnswerCount> functional,
                                    std::span<const double, kAnswerCount> dysfunctional) {
  check_distribution(functional, "functional");
  check_distribution(dysfunctional, "dysfunctional");
  KanoFractions fractions;
  for (int f = 0; f < kAnswerCount; ++f) {
    for (int d = 0; d < kAnswerCount; ++d) {
      double weight = functional[f] * dysfunctional[d];
      if (weight != 0) accumulate(fractions, kEvaluationMatrix[f][d], weight);
    }
  }
  return fractions;
}

KanoFractions aggregate_fractions(std::span<const KanoFractions> fractions,
                                  std::span<const double> weights) {
  if (fractions.empty()) {
    throw data_error("no responses to aggregate for this feature");
  }
  if (fractions.size() != weights.size()) {
    throw data_error("aggregate_fractions: " + std::to_string(fractions.size()) + " responses vs " +
                     std::to_string(weights.size()) + " weights");
  }
  double total = 0;
  for (double w : weights) {
    if (!(w > 0)) throw data_error("stakeholder weights must be positive");
    total += w;
  }
  KanoFractions out;
  for (std::size_t i = 0; i < fractions.size(); ++i) {
    double share = weights[i] / total;
    out.attractive += share * fractions[i].attractive;
    out.one_dimensional += share * fractions[i].one_dimensional;
    out.must_be += share * fractions[i].must_be;
    out.indifferent += share * fractions[i].indifferent;
    out.reverse += share * fractions[i].reverse;
    out.questionable += share * fractions[i].questionable;
  }
  return out;
}

double compute_satisfaction(const KanoFractions& fractions) {
  double denom = fractions.classifiable();
  if (!(denom > 0)) throw data_error("no classifiable responses");
  return (fractions.attractive + fractions.one_dimensional) / denom;
}

double compute_dissatisfaction(const KanoFractions& fractions) {
  double denom = fractions.classifiable();
  if (!(denom > 0)) throw data_error("no classifiable responses");
  return (fractions.must_be + fractions.one_dimensional) / denom;
}

FeatureValue compute_value(const KanoFractions& fractions) {
  return FeatureValue{compute_satisfaction(fractions), compute_dissatisfaction(fractions)};
}

}  // namespace arp::kano
