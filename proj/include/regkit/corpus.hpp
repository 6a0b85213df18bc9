#pragma once

#include "regkit/common.hpp"
#include "regkit/cones.hpp"
#include "regkit/functions.hpp"
#include "regkit/geometry.hpp"
#include "regkit/regularity.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace regkit {
namespace corpus {

struct ConeOracle {
  std::string label;
  Vec point;
  DirectionSet proximal;
  DirectionSet limiting;
  DirectionSet clarke;
};

struct ExpectedVerdict {
  RegKind kind;
  std::string pointLabel;
  Vec point;
  Verdict verdict;
  std::optional<double> level;       // asserted |epsHat - level| <= levelTol
  double levelTol = 0.05;
  std::vector<Witness> witnesses;    // for EpsSubregular
  std::optional<std::string> lambdaName;
  std::optional<double> truncationR;
};

struct CorpusEntry {
  std::string name;
  std::string provenance;
  std::optional<SetRep> set;
  PLFunctionPtr function;            // when the entry is a function
  std::vector<ConeOracle> coneOracles;
  std::vector<ExpectedVerdict> expectedVerdicts;
};

// Pizza slice A and Pac-Man B with the closed-form cone oracles at 0.
struct Pacman {
  SetRep A;
  SetRep B;
  std::vector<ConeOracle> oraclesB;
};
Pacman pacman();

// Reconstructed continuous piecewise-linear counterexample: zero for x <= 0,
// chords of g(x) = -(2/3)x^2 between the nodes 2^-k, constant for x >= 1/2.
struct Example32 {
  PLFunctionPtr f;
  SetRep epi;
  int kMax;  // chords down to 2^-kMax, linear bridge to 0 below

  // Kink at x = 2^-j (j >= 1). j = 1 is the convex junction at 1/2; the
  // concave kinks of the construction are j >= 2.
  Vec kink(int j) const;
  // Paper-indexed concave kink, at x = 2^-(k+1).
  Vec concaveKink(int k) const;
  // Adjacent chord slopes (left, right) at kink j.
  std::pair<double, double> kinkSlopes(int j) const;
  DirectionSet kinkLimitingOracle(int j) const;
};
Example32 example32();

struct FunctionEntry {
  PLFunctionPtr f;
  SetRep epi;
};

FunctionEntry negAbs();            // f(x) = -|x| on [-1,1]
FunctionEntry absFn();             // f(x) = |x| on [-1,1]
FunctionEntry countingFunction(int n);  // ||x||_0, lsc step function
FunctionEntry smoothControl();     // fine PL interpolation of -x^2/2

SetRep unitBall2();
SetRep unitSquare();
SetRep halfspaceX();               // {x : x1 <= 0}
SetRep crescentSet();              // ball(0,1) minus open ball((1,0),1/2)
SetRep twoHalfspaceA();            // {y <= 0}
SetRep twoHalfspaceB(double theta);// {sin(t) x - cos(t) y <= 0}

std::vector<CorpusEntry> all();
const CorpusEntry& byName(const std::string& name);
std::vector<std::string> names();

}  // namespace corpus
}  // namespace regkit
