#pragma once

#include "regkit/common.hpp"
#include "regkit/pl_function.hpp"

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace regkit {

struct ProjectionResult {
  std::vector<Vec> nearest;
  double dist = 0.0;
};

// Local minimum of the distance over one structural piece (union branch,
// epigraph piece, sphere sheet). Used by the prox-regularity ridge probe.
struct ProjectionCandidate {
  Vec point;
  double dist;
};

class SetRep;

namespace setrep {

struct Polytope {
  Mat A;
  Vec b;
};

struct Ball {
  Vec center;
  double radius;
};

// 2-D circular sector {apex + r(cos t, sin t) : 0<=r<=radius, t in [lo,hi]}.
struct Sector {
  Vec apex;
  double angleLo;
  double angleHi;
  double radius;
};

// 2-D outer ball minus the open inner ball. Smooth prox-regular control set.
struct Crescent {
  Vec outerCenter;
  double outerRadius;
  Vec innerCenter;
  double innerRadius;
};

struct EpigraphPL {
  PLFunctionPtr f;
  Vec regionLo;  // spatial box for x
  Vec regionHi;
  double alphaCap;                  // epigraph truncated at alpha <= alphaCap
  std::optional<Cell> lambda;      // optional spatial restriction
  std::vector<Polytope> pieces;    // lifted piece polytopes, derived
};

struct Union {
  std::vector<SetRep> members;
};

struct Intersection {
  std::vector<SetRep> members;  // convex members only
};

}  // namespace setrep

// Immutable closed subset of R^n with an exact multi-valued projector.
class SetRep {
 public:
  using Variant = std::variant<setrep::Polytope, setrep::Ball, setrep::Sector,
                               setrep::Crescent, setrep::EpigraphPL,
                               setrep::Union, setrep::Intersection>;

  static SetRep polytope(Mat A, Vec b);
  static SetRep ball(Vec center, double radius);
  static SetRep sector(Vec apex, double angleLo, double angleHi, double radius);
  static SetRep crescent(Vec outerCenter, double outerRadius, Vec innerCenter,
                         double innerRadius);
  static SetRep epigraphPL(PLFunctionPtr f, Vec regionLo, Vec regionHi,
                           std::optional<Cell> lambda = std::nullopt,
                           double alphaCap = 1e6);
  static SetRep unionOf(std::vector<SetRep> members);
  static SetRep intersectionOf(std::vector<SetRep> members);

  static SetRep halfspace(Vec normal, double offset);  // {x : <n,x> <= offset}
  static SetRep singleton(const Vec& p);

  int dim() const { return dim_; }
  const Variant& variant() const { return *impl_; }
  bool convex() const { return convex_; }

  bool contains(const Vec& x, double t = tol::tolMem) const;
  ProjectionResult project(const Vec& x) const;
  double distance(const Vec& x) const;
  // Per-piece local minima, deduplicated; superset of the global nearest set.
  std::vector<ProjectionCandidate> projectCandidates(const Vec& x) const;

  // Deterministic members of set ∩ B_delta(center): rejection samples plus
  // projections of a sphere grid around the center (boundary biased).
  std::vector<Vec> sampleMembers(const Vec& center, double delta, int n,
                                 uint64_t seed) const;

  SetRep scaled(double s) const;  // s * set, for homogeneity tests

 private:
  SetRep(std::shared_ptr<const Variant> impl, int dim, bool convex)
      : impl_(std::move(impl)), dim_(dim), convex_(convex) {}
  std::shared_ptr<const Variant> impl_;
  int dim_;
  bool convex_;
};

// Exact projection onto {x : Ax <= b} by KKT verification over active-row
// subsets. Exact for the small systems this toolkit works with.
Vec projectPolytope(const Mat& A, const Vec& b, const Vec& x);

// Projection of v onto cone(dirs) (nonnegative combinations), by the same
// subset enumeration. Returns the projected point.
Vec projectOntoConicHull(const std::vector<Vec>& dirs, const Vec& v);

// Deterministic sphere grid: nDirs unit vectors (equal angles in 2-D,
// Fibonacci lattice in 3-D, seeded otherwise).
std::vector<Vec> sphereGrid(int dim, int nDirs, uint64_t seed = 0);

}  // namespace regkit
