#pragma once

#include "regkit/common.hpp"

#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace regkit {

// Polyhedral cell {x : Ax <= b}.
struct Cell {
  Mat A;
  Vec b;

  int dim() const { return static_cast<int>(A.cols()); }
  bool contains(const Vec& x, double t = tol::tolMem) const {
    return ((A * x - b).array() <= t).all();
  }
};

Cell intervalCell(double lo, double hi);
Cell boxCell(const Vec& lo, const Vec& hi);

// Piecewise-linear function on R^1 or R^2. Pieces are (cell, affine a.x + c)
// and the value at x is the minimum over cells containing x, which is the lsc
// reading of step functions; for continuous functions the minimum is
// immaterial on shared faces.
class PLFunction {
 public:
  struct Piece {
    Cell cell;
    Vec a;
    double c = 0.0;
    double value(const Vec& x) const { return a.dot(x) + c; }
  };

  PLFunction(int dim, std::vector<Piece> pieces, bool continuous);

  int dim() const { return dim_; }
  bool continuous() const { return continuous_; }
  const std::vector<Piece>& pieces() const { return pieces_; }

  bool inDomain(const Vec& x, double t = tol::tolMem) const;
  // Lsc value; +inf outside the domain.
  double eval(const Vec& x) const;
  double evalFinite(const Vec& x) const;  // throws OutsideDomain

  // Indices of pieces whose cell contains x and whose value equals eval(x).
  std::vector<int> activeMinPieces(const Vec& x, double t = 1e-9) const;
  // All pieces whose cell contains x (including higher-value branches of a
  // declared step function).
  std::vector<int> incidentPieces(const Vec& x, double t = 1e-9) const;

  double lipschitzBound() const { return lipBound_; }
  // 1-D helpers: sorted breakpoints of the domain partition.
  const std::vector<double>& knots() const { return knots_; }

  // Builds a continuous univariate PL function from breakpoints
  // x_0 < ... < x_m with values y_i (linear on each [x_i, x_{i+1}]).
  static PLFunction fromBreakpoints(const std::vector<double>& xs,
                                    const std::vector<double>& ys);

 private:
  int dim_;
  std::vector<Piece> pieces_;
  bool continuous_;
  double lipBound_ = 0.0;
  std::vector<double> knots_;
  // 1-D acceleration: piece indices sorted by interval start.
  std::vector<int> sorted1d_;
  std::vector<double> sortedLo_;

  void buildIndex();
};

using PLFunctionPtr = std::shared_ptr<const PLFunction>;

}  // namespace regkit
