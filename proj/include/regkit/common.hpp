#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace regkit {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

// Global numerical tolerances. tolProj is the relative tie tolerance for
// multi-valued projection, tolMem the membership tolerance.
namespace tol {
inline constexpr double tolProj = 1e-9;
inline constexpr double tolMem = 1e-8;
inline constexpr double thetaDedup = 1e-3;
inline constexpr double epsPass = 0.02;
inline constexpr double epsFail = 0.2;
inline constexpr double epsZero = 1e-9;
}  // namespace tol

enum class ErrorCode {
  DimensionMismatch,
  InfeasibleSet,
  EmptyNeighborhood,
  NotAMember,
  MissingWitness,
  MissingTruncation,
  ZeroVector,
  UnsupportedComposition,
  OutsideDomain,
  NotLipschitz,
  InfiniteValue,
  UnboundedBelow,
  FlavorMismatch,
  InsufficientData,
  UsageError,
  FileNotFound,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& msg)
      : std::runtime_error(msg), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) {
  throw Error(code, msg);
}

inline void requireSameDim(int a, int b, const char* where) {
  if (a != b) fail(ErrorCode::DimensionMismatch, std::string(where) + ": dimension mismatch");
}

// Deterministic RNG. std::uniform_real_distribution is implementation
// defined, so uniforms are derived from raw mt19937_64 output directly.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(mix(seed)) {}

  double uniform() {
    return static_cast<double>(raw() >> 11) * 0x1.0p-53;
  }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform on the unit sphere in R^dim.
  Vec sphere(int dim) {
    Vec v(dim);
    double n2 = 0.0;
    do {
      for (int i = 0; i < dim; ++i) v[i] = gaussian();
      n2 = v.squaredNorm();
    } while (n2 < 1e-24);
    return v / std::sqrt(n2);
  }

  // Uniform in the unit ball in R^dim.
  Vec ball(int dim) {
    Vec d = sphere(dim);
    double r = std::pow(uniform(), 1.0 / dim);
    return r * d;
  }

  Rng fork(uint64_t salt) const { return Rng(state_ ^ mix(salt)); }

 private:
  uint64_t raw() {
    // splitmix64 step; fully specified, platform independent
    state_ += 0x9e3779b97f4a7c15ULL;
    uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  double gaussian() {
    if (haveSpare_) {
      haveSpare_ = false;
      return spare_;
    }
    double u, v, s;
    do {
      u = 2.0 * uniform() - 1.0;
      v = 2.0 * uniform() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s < 1e-300);
    double m = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * m;
    haveSpare_ = true;
    return u * m;
  }
  static uint64_t mix(uint64_t x) {
    x ^= x >> 33;
    x *= 0xff51afd7ed558ccdULL;
    x ^= x >> 33;
    x *= 0xc4ceb9fe1a85ec53ULL;
    x ^= x >> 33;
    return x;
  }
  uint64_t state_;
  double spare_ = 0.0;
  bool haveSpare_ = false;
};

inline Vec vec2(double a, double b) {
  Vec v(2);
  v << a, b;
  return v;
}

inline Vec vec3(double a, double b, double c) {
  Vec v(3);
  v << a, b, c;
  return v;
}

inline Vec unit(const Vec& v) {
  double n = v.norm();
  if (n < 1e-15) fail(ErrorCode::ZeroVector, "unit: zero vector");
  return v / n;
}

// Angle between two nonzero vectors, in [0, pi].
inline double angleBetween(const Vec& a, const Vec& b) {
  double na = a.norm(), nb = b.norm();
  if (na < 1e-15 || nb < 1e-15) fail(ErrorCode::ZeroVector, "angleBetween: zero vector");
  double c = a.dot(b) / (na * nb);
  c = std::max(-1.0, std::min(1.0, c));
  return std::acos(c);
}

inline double localScale(const Vec& x) {
  return std::max(1.0, x.lpNorm<Eigen::Infinity>());
}

}  // namespace regkit
