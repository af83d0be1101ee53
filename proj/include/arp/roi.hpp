#pragma once

#include <vector>

namespace arp::roi {

struct CashflowSeries {
  std::vector<double> cashflows;  // net cashflow per period, index 0 = today
  double discount_rate = 0;       // per period, must stay above -1
};

// Present value of the series: sum of cashflows[t] / (1 + rate)^t.
double npv(const CashflowSeries& series);

// npv(optimized) - npv(baseline).
double npv_added(const CashflowSeries& optimized, const CashflowSeries& baseline);

}  // namespace arp::roi
