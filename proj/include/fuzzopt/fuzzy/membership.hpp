#pragma once

#include <functional>
#include <vector>

#include "fuzzopt/error.hpp"

namespace fuzzopt::fuzzy {

struct DegenerateSet : Error {
  using Error::Error;
};

struct Vertex {
  double x;
  double mu;
  friend bool operator==(const Vertex&, const Vertex&) = default;
};

/// Piecewise-linear fuzzy set over the reals.
///
/// Between vertices the grade is interpolated linearly. Outside the vertex
/// range the grade equals the boundary grade: sets whose boundary grade is
/// positive are held constant toward infinity (shoulders), all others drop
/// to zero. Only piecewise-linear shapes are supported so that combination,
/// matching and defuzzification are exact and reproducible.
class MembershipFunction {
 public:
  explicit MembershipFunction(std::vector<Vertex> vertices);

  static MembershipFunction triangle(double a, double b, double c);
  static MembershipFunction trapezoid(double a, double b, double c, double d);
  /// Constant grade over [lo, hi].
  static MembershipFunction plateau(double lo, double hi, double mu);

  /// Membership grade at x. Total: no input is invalid.
  double operator()(double x) const;

  const std::vector<Vertex>& vertices() const { return v_; }
  double support_lo() const { return v_.front().x; }
  double support_hi() const { return v_.back().x; }
  double max_mu() const;

  /// min(mu, level), exact (crossing points become vertices).
  MembershipFunction clipped(double level) const;

  /// Scales grades so the peak is 1. Throws DegenerateSet on an all-zero set.
  MembershipFunction normalized() const;

  /// x -> a*x + b applied to the support (a != 0; a < 0 mirrors the shape).
  MembershipFunction x_mapped(double a, double b) const;

  /// Restricts the support to [lo, hi]. Mass outside collapses onto the
  /// boundary: the boundary grade becomes the maximum grade attained at or
  /// beyond it, which models clamping the underlying quantity into range.
  MembershipFunction truncated(double lo, double hi) const;

  /// Pointwise combination evaluated on the union of both vertex sets plus
  /// all segment crossings. Exact for min/max; other operators are
  /// linearized between breakpoints.
  static MembershipFunction combine(const MembershipFunction& a, const MembershipFunction& b,
                                    const std::function<double(double, double)>& op);

  /// sup_x min(a(x), b(x)), computed on segment intersections (exact).
  static double sup_min(const MembershipFunction& a, const MembershipFunction& b);

  /// Center of gravity over the vertex range. Throws DegenerateSet when the
  /// set carries no mass.
  double centroid() const;

  /// Midpoint of the hull of the x-region attaining the peak grade.
  double mean_of_maxima() const;

  friend bool operator==(const MembershipFunction&, const MembershipFunction&) = default;

 private:
  std::vector<Vertex> v_;
};

}  // namespace fuzzopt::fuzzy
