#pragma once

#include "regkit/common.hpp"
#include "regkit/geometry.hpp"

#include <optional>
#include <vector>

namespace regkit {

// Finite direction bundle standing in for a cone. hullClosed=false reads the
// cone as the union of rays through dirs; true as their closed convex conic
// hull.
struct DirectionSet {
  std::vector<Vec> dirs;
  bool hullClosed = false;
  int dim = 0;

  bool empty() const { return dirs.empty(); }
};

struct TruncatedCone {
  DirectionSet base;
  double radius;
};

struct ConeEstimateOptions {
  int nDirs = 0;        // 0 -> default per dimension
  double tStep = 0.0;   // 0 -> 1e-6 * local scale
  uint64_t seed = 42;
  double delta = 0.1;   // locality radius for the outer limit
  int nPoints = 48;     // member samples per inner level
};

// Directions d with omega ∈ P(omega + t d), screened on a sphere grid and
// snapped to the exact normal by foot iteration.
DirectionSet proximalNormalDirections(const SetRep& set, const Vec& omega,
                                      const ConeEstimateOptions& opts = {});

// Outer-limit estimate: proximal directions at members of the finest inner
// ball of the schedule {delta, delta/4, delta/16, delta/64}, plus the
// center's own directions, clustered at the dedup resolution.
DirectionSet limitingNormalDirections(const SetRep& set, const Vec& omega,
                                      const ConeEstimateOptions& opts = {});

// Limiting estimate with hullClosed=true.
DirectionSet clarkeNormalGenerators(const SetRep& set, const Vec& omega,
                                    const ConeEstimateOptions& opts = {});

// Searches set ∩ B_delta(omega) for a point falsifying v ∈ N̂ at level eps,
// i.e. <v, w - omega> > eps * ||w - omega||.
std::optional<Vec> frechetNormalWitness(const SetRep& set, const Vec& omega,
                                        const Vec& v, double eps, double delta,
                                        int nSamples = 2000,
                                        uint64_t seed = 42);

TruncatedCone truncate(const DirectionSet& cone, double r);

bool coneContains(const DirectionSet& cone, const Vec& v,
                  double thetaTol = tol::thetaDedup);
bool truncatedConeContains(const TruncatedCone& cone, const Vec& v,
                           double thetaTol = tol::thetaDedup);

// Angular distance from v to the cone (0 if inside).
double angularDistanceToCone(const DirectionSet& cone, const Vec& v);

// Symmetric Hausdorff angular distance between the cones described by two
// direction sets (hull arcs sampled when hullClosed).
double hausdorffAngular(const DirectionSet& a, const DirectionSet& b);

DirectionSet dedupDirections(std::vector<Vec> dirs, bool hullClosed, int dim,
                             double theta = tol::thetaDedup);

// Exact member-point cones used inside the regularity estimators.
// Closed forms per variant; unions use the intersection rule for proximal
// and exposure-tested face rays for limiting.
struct MemberCones {
  DirectionSet proximal;  // hullClosed=true when the cone is a convex fan
  DirectionSet limiting;
  DirectionSet clarke;    // hull of limiting
};

MemberCones exactMemberCones(const SetRep& set, const Vec& x);

}  // namespace regkit
