#pragma once

#include "regkit/common.hpp"
#include "regkit/cones.hpp"
#include "regkit/geometry.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace regkit {

enum class RegKind {
  EpsSubregular,
  Subregular,
  ClarkeRegular,
  SuperRegular,
  ClarkeSuperRegular,
  Subsmooth,
  SemiSubsmooth,
  ProxRegularScan,
  ConvexCheck,
};

std::string toString(RegKind k);

enum class Verdict { Holds, HoldsAtLevel, Fails };
std::string toString(Verdict v);

struct Witness {
  Vec point;
  Vec normal;
};

struct RegularityQuery {
  RegKind kind = RegKind::ClarkeRegular;
  Vec omegaBar;
  std::optional<SetRep> lambda;       // default per kind (set itself or R^n)
  std::vector<Witness> witnesses;     // fixed pairs for EpsSubregular
  std::optional<double> truncationR;  // required for (Semi)Subsmooth
  std::vector<double> deltaSweep = {1e-1, 0.0316227766016838, 1e-2,
                                    0.00316227766016838, 1e-3};
  int samples = 2000;
  uint64_t seed = 42;
  double probeRadius = 0.35;  // prox scan single-valuedness probe
};

// The points/vectors achieving the supremum; layout depends on the kind.
struct SupTerm {
  std::vector<Vec> parts;
  double value = 0.0;
};

struct DeltaEntry {
  double delta;
  double epsHat;
  SupTerm witness;
};

struct ModulusReport {
  RegKind kind = RegKind::ClarkeRegular;
  std::vector<DeltaEntry> perDelta;  // delta decreasing
  Verdict verdict = Verdict::HoldsAtLevel;
  double level = 0.0;  // epsHat at the smallest delta
  std::optional<double> sigmaUsed;
  std::optional<double> gammaHat;
  bool multiValuedProjectorFound = false;
  std::optional<Vec> multiValuedAt;

  std::string toCsv() const;  // two columns: delta, epsHat
};

ModulusReport epsSubregularityModulus(const SetRep& set, const RegularityQuery& q);
ModulusReport clarkeRegularityModulus(const SetRep& set, const RegularityQuery& q);
ModulusReport superRegularityModulus(const SetRep& set, const RegularityQuery& q);
ModulusReport clarkeSuperRegularityModulus(const SetRep& set, const RegularityQuery& q);
ModulusReport subsmoothnessModulus(const SetRep& set, const RegularityQuery& q);
ModulusReport semiSubsmoothnessModulus(const SetRep& set, const RegularityQuery& q);
ModulusReport proxRegularityScan(const SetRep& set, const RegularityQuery& q);
ModulusReport convexityCheck(const SetRep& set, const RegularityQuery& q);

ModulusReport runModulus(const SetRep& set, const RegularityQuery& q);

// Re-evaluates a recorded witness term; reports must reproduce their epsHat.
double reevaluateTerm(const SetRep& set, RegKind kind, const RegularityQuery& q,
                      const SupTerm& term);

struct HierarchyRow {
  RegKind kind;
  Verdict verdict;
  double level;
};

struct HierarchyTable {
  std::vector<HierarchyRow> rows;  // strongest first
  std::vector<std::string> diagnostics;  // InconsistentHierarchy messages
  bool consistent() const { return diagnostics.empty(); }
};

// Runs the Corollary-style ladder: prox-regular -> subsmooth <-> Clarke
// super-regular -> super-regular -> Clarke regular -> eps-subregular (best
// witness), and flags stronger-Holds/weaker-Fails inversions.
HierarchyTable classifyHierarchy(const SetRep& set, const Vec& omegaBar,
                                 const RegularityQuery& params);

// Shared verdict rule for delta sweeps.
Verdict sweepVerdict(const std::vector<DeltaEntry>& perDelta, double* levelOut);

}  // namespace regkit
