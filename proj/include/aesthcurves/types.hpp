#pragma once

#include <Eigen/Core>
#include <Eigen/Dense>

#include <limits>
#include <stdexcept>
#include <string>

namespace aesth {

using Vec2 = Eigen::Vector2d;
using Mat2 = Eigen::Matrix2d;

constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Closed parameter interval [lo, hi].
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  double length() const { return hi - lo; }
  double midpoint() const { return 0.5 * (lo + hi); }
  bool contains(double t, double slack = 0.0) const {
    return t >= lo - slack && t <= hi + slack;
  }
  double clamp(double t) const { return t < lo ? lo : (t > hi ? hi : t); }
  /// Affine map of u in [0,1] onto the interval.
  double at_fraction(double u) const { return lo + u * (hi - lo); }
};

/// 2x2 determinant of two column vectors, det(a, b).
inline double det2(const Vec2& a, const Vec2& b) {
  return a.x() * b.y() - a.y() * b.x();
}

/// Invertible planar affine map z -> A z + b.
struct AffineMap {
  Mat2 A = Mat2::Identity();
  Vec2 b = Vec2::Zero();

  Vec2 operator()(const Vec2& z) const { return A * z + b; }
  double det() const { return A.determinant(); }

  AffineMap inverse() const {
    AffineMap inv;
    inv.A = A.inverse();
    inv.b = -inv.A * b;
    return inv;
  }

  /// Composition: (f * g)(z) = f(g(z)).
  friend AffineMap operator*(const AffineMap& f, const AffineMap& g) {
    AffineMap h;
    h.A = f.A * g.A;
    h.b = f.A * g.b + f.b;
    return h;
  }
};

/// Unit tangent and leftward unit normal at a curve point.
struct FrenetFrame {
  Vec2 tangent;
  Vec2 normal;
};

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DegenerateCurve : Error { using Error::Error; };
struct InvalidSteps : Error { using Error::Error; };
struct SingularMatrix : Error { using Error::Error; };
struct InfiniteRadius : Error { using Error::Error; };
struct DegenerateRange : Error { using Error::Error; };
struct NonMonotoneRadius : Error { using Error::Error; };
struct StationaryRadius : Error { using Error::Error; };
struct DomainViolation : Error { using Error::Error; };
struct ZeroEta : Error { using Error::Error; };
struct InsufficientSamples : Error { using Error::Error; };
struct InvalidParams : Error { using Error::Error; };
struct EmptyInterval : Error { using Error::Error; };
struct InflectionInDomain : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct ValidationError : Error { using Error::Error; };

}  // namespace aesth
