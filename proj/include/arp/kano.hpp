#pragma once

#include <array>
#include <span>

namespace arp::kano {

// Answer options of the two survey questions, in column/row order of the
// evaluation matrix below.
enum class Answer { Like = 0, MustBe = 1, Neutral = 2, LiveWith = 3, Dislike = 4 };

inline constexpr int kAnswerCount = 5;

// Category proportions for one feature. Each component is in [0,1] and the
// six components sum to 1 (within 1e-6 after parsing).
struct KanoFractions {
  double attractive = 0;       // a
  double one_dimensional = 0;  // o
  double must_be = 0;          // m
  double indifferent = 0;      // i
  double reverse = 0;          // r
  double questionable = 0;     // q

  double sum() const {
    return attractive + one_dimensional + must_be + indifferent + reverse + questionable;
  }
  // Mass of the categories that enter the satisfaction/dissatisfaction ratios.
  double classifiable() const { return attractive + one_dimensional + must_be + indifferent; }
};

struct FeatureValue {
  double satisfaction = 0;     // S, in [0,1]
  double dissatisfaction = 0;  // DS, in [0,1]
};

// Throws arp::Error(Data) unless all components are in [0,1] and sum to 1
// within `tolerance`.
void validate_fractions(const KanoFractions& fractions, double tolerance = 1e-6);

// Maps a pair of answer distributions (functional, dysfunctional; both summing
// to 1) through the category evaluation matrix. The result is the joint weight
// of each category over all 25 answer pairs and sums to 1.
KanoFractions classify_raw_response(std::span<const double, kAnswerCount> functional,
                                    std::span<const double, kAnswerCount> dysfunctional);

// Category assigned to one (functional, dysfunctional) answer pair. Exposed so
// the matrix itself is testable and swappable in one place.
char evaluation_cell(Answer functional, Answer dysfunctional);

// Component-wise weighted mean across stakeholders, weights normalized to sum
// 1. Throws on an empty span or non-positive weight.
KanoFractions aggregate_fractions(std::span<const KanoFractions> fractions,
                                  std::span<const double> weights);

// S = (a + o) / (a + o + m + i). Reverse and questionable mass is excluded.
// Throws when the denominator is zero ("no classifiable responses").
double compute_satisfaction(const KanoFractions& fractions);

// DS = (m + o) / (a + o + m + i), same denominator and exclusions.
double compute_dissatisfaction(const KanoFractions& fractions);

FeatureValue compute_value(const KanoFractions& fractions);

}  // namespace arp::kano
