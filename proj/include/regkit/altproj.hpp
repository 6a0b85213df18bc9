#pragma once

#include "regkit/common.hpp"
#include "regkit/geometry.hpp"

#include <optional>
#include <string>
#include <vector>

namespace regkit {

struct APTrace {
  std::vector<std::pair<Vec, Vec>> iterates;  // (x_k on the A side, y_k on B)
  std::vector<double> gaps;                   // d(x_k, B)
  std::optional<double> fittedRate;
  bool converged = false;

  std::string toCsv() const;  // iter, gap
};

struct APOptions {
  int maxIter = 10000;
  double tol = 1e-8;
  uint64_t seed = 42;  // tie-break for multi-valued projections
};

APTrace alternate(const SetRep& A, const SetRep& B, const Vec& x0,
                  const APOptions& opts = {});

// Least-squares slope of log(gap) over the final half of the trace; needs at
// least 8 positive gaps, nullopt if gaps hit zero inside the fit window.
std::optional<double> rateEstimate(const APTrace& trace);

}  // namespace regkit
