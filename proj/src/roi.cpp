#include "arp/roi.hpp"

#include <cmath>
#include <string>

#include "arp/errors.hpp"

namespace arp::roi {

double npv(const CashflowSeries& series) {
  if (!(series.discount_rate > -1.0)) {
    throw data_error("discount rate must be greater than -1, got " +
                     std::to_string(series.discount_rate));
  }
  for (double r : series.cashflows) {
    if (!std::isfinite(r)) throw data_error("cashflows must be finite");
  }
  double value = 0;
  double divisor = 1.0;
  for (std::size_t t = 0; t < series.cashflows.size(); ++t) {
    value += series.cashflows[t] / divisor;
    divisor *= 1.0 + series.discount_rate;
  }
  return value;
}

double npv_added(const CashflowSeries& optimized, const CashflowSeries& baseline) {
  return npv(optimized) - npv(baseline);
}

}  // namespace arp::roi
