#pragma once

#include "regkit/common.hpp"
#include "regkit/geometry.hpp"
#include "regkit/pl_function.hpp"
#include "regkit/regularity.hpp"

#include <optional>
#include <vector>

namespace regkit {

enum class SubdiffVariant { Proximal, Frechet, Limiting, Clarke };

struct SubdiffResult {
  SubdiffVariant variant = SubdiffVariant::Clarke;
  std::vector<Vec> grads;   // generators; extreme points when hull=true
  bool hull = false;        // true: the set is conv(grads)
  bool unbounded = false;   // declared-lsc jump points have unbounded sets
  std::vector<Vec> horizon; // v with (v,0) an epigraph normal
};

SubdiffResult subdiffPL(const PLFunction& f, const Vec& x, SubdiffVariant variant);
SubdiffResult clarkeSubdiffPL(const PLFunction& f, const Vec& x);

struct FunctionModulusQuery {
  Vec xBar;
  std::vector<double> deltaSweep = {1e-1, 0.0316227766016838, 1e-2,
                                    0.00316227766016838, 1e-3};
  int samples = 600;
  uint64_t seed = 42;
};

// sup of the convexity defect ratio over x,y in B_delta(xBar), t in (0,1).
ModulusReport approxConvexityModulus(const PLFunction& f, const FunctionModulusQuery& q);
// sup of [<v,y-x> - f(y) + f(x)] / ||y-x|| over Clarke subgradients at x.
ModulusReport subgradientInequalityModulus(const PLFunction& f, const FunctionModulusQuery& q);
// sup of -<x1*-x2*, x1-x2> / ||x1-x2||.
ModulusReport submonotonicityModulus(const PLFunction& f, const FunctionModulusQuery& q);

// Epigraph of f (restricted to lambda when given) as a SetRep usable by the
// geometry/cones/regularity layers.
SetRep epigraphOf(const PLFunction& f, const Vec& regionLo, const Vec& regionHi,
                  std::optional<Cell> lambda = std::nullopt, double alphaCap = 1e6);
SetRep epigraphOf(PLFunctionPtr f, const Vec& regionLo, const Vec& regionHi,
                  std::optional<Cell> lambda = std::nullopt, double alphaCap = 1e6);

struct EpiQuery {
  Vec xBar;
  Vec vBar;
  int e = -1;  // -1 normal flavor, 0 horizon flavor
  std::optional<Cell> lambda;
  std::vector<double> deltaSweep = {1e-1, 0.0316227766016838, 1e-2,
                                    0.00316227766016838, 1e-3};
  int samples = 600;
  uint64_t seed = 42;
  double alphaBandFraction = 1.0;  // alpha sampled in [f(x), f(x) + frac*delta]
};

// Primal epi-subregularity inequality for the declared flavor; must agree
// with the set-level modulus on epigraphOf(f, lambda) at the lifted witness.
ModulusReport epiSubregularityCheck(const PLFunction& f, const Vec& regionLo,
                                    const Vec& regionHi, const EpiQuery& q);

}  // namespace regkit
