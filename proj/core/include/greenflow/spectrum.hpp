#pragma once

#include <vector>

#include "greenflow/operators.hpp"

namespace greenflow {

struct SpectrumEstimate {
  double R = 0.0;
  double lambda = 0.0;
};

struct SpectrumReport {
  double analytic_lower = 0.0;  // b^2/4
  std::vector<SpectrumEstimate> estimates;
  double extrapolated = 0.0;  // lambda(R) ~ lambda_inf + c/R^2 on the last 3
  bool consistent = false;    // extrapolated >= analytic_lower - tolerance
  double tolerance_rel = 0.05;
};

// b^2/4, the analytic spectral gap lower bound; rejects uncertified models.
double lambda1_lower_bound(const WarpedModel& model);

// Dirichlet eigenvalues over the grid's exhaustion radii (needs >= 3),
// Richardson-extrapolated in 1/R^2 over the last three.
SpectrumReport lambda1_exhaustion(const WarpedModel& model,
                                  const SparseOperator& op);

}  // namespace greenflow
