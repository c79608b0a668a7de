#include "fuzzopt/fuzzy/membership.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace fuzzopt::fuzzy {

namespace {

void validate(const std::vector<Vertex>& v) {
  if (v.size() < 2) throw Error("membership function needs at least 2 vertices");
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!(v[i].mu >= 0.0 && v[i].mu <= 1.0))
      throw Error("membership grade outside [0,1]");
    if (i > 0 && !(v[i - 1].x < v[i].x))
      throw Error("membership vertices must be strictly increasing in x");
  }
}

}  // namespace

MembershipFunction::MembershipFunction(std::vector<Vertex> vertices) : v_(std::move(vertices)) {
  validate(v_);
}

MembershipFunction MembershipFunction::triangle(double a, double b, double c) {
  if (!(a <= b && b <= c && a < c)) throw Error("triangle needs a <= b <= c with a < c");
  std::vector<Vertex> v;
  if (a == b) {
    v = {{a, 1.0}, {c, 0.0}};
  } else if (b == c) {
    v = {{a, 0.0}, {b, 1.0}};
  } else {
    v = {{a, 0.0}, {b, 1.0}, {c, 0.0}};
  }
  return MembershipFunction(std::move(v));
}

MembershipFunction MembershipFunction::trapezoid(double a, double b, double c, double d) {
  if (!(a <= b && b <= c && c <= d && a < d)) throw Error("trapezoid needs a <= b <= c <= d with a < d");
  if (b == c) return triangle(a, b, d);
  std::vector<Vertex> v;
  if (a == b) {
    v.push_back({a, 1.0});
  } else {
    v.push_back({a, 0.0});
    v.push_back({b, 1.0});
  }
  if (c == d) {
    v.push_back({c, 1.0});
  } else {
    v.push_back({c, 1.0});
    v.push_back({d, 0.0});
  }
  return MembershipFunction(std::move(v));
}

MembershipFunction MembershipFunction::plateau(double lo, double hi, double mu) {
  return MembershipFunction({{lo, mu}, {hi, mu}});
}

double MembershipFunction::operator()(double x) const {
  if (x <= v_.front().x) return v_.front().mu;
  if (x >= v_.back().x) return v_.back().mu;
  auto it = std::upper_bound(v_.begin(), v_.end(), x,
                             [](double val, const Vertex& v) { return val < v.x; });
  const Vertex& hi = *it;
  const Vertex& lo = *(it - 1);
  const double t = (x - lo.x) / (hi.x - lo.x);
  return lo.mu + t * (hi.mu - lo.mu);
}

double MembershipFunction::max_mu() const {
  double m = 0.0;
  for (const auto& v : v_) m = std::max(m, v.mu);
  return m;
}

MembershipFunction MembershipFunction::clipped(double level) const {
  level = std::clamp(level, 0.0, 1.0);
  std::vector<Vertex> out;
  out.reserve(v_.size() + 2);
  for (std::size_t i = 0; i < v_.size(); ++i) {
    if (i > 0) {
      const Vertex& a = v_[i - 1];
      const Vertex& b = v_[i];
      // insert the crossing with the clip level, if strictly inside
      if ((a.mu - level) * (b.mu - level) < 0.0) {
        const double t = (level - a.mu) / (b.mu - a.mu);
        out.push_back({a.x + t * (b.x - a.x), level});
      }
    }
    out.push_back({v_[i].x, std::min(v_[i].mu, level)});
  }
  return MembershipFunction(std::move(out));
}

MembershipFunction MembershipFunction::normalized() const {
  const double m = max_mu();
  if (m == 0.0) throw DegenerateSet("cannot normalize an all-zero set");
  if (m == 1.0) return *this;
  std::vector<Vertex> out = v_;
  for (auto& v : out) v.mu /= m;
  return MembershipFunction(std::move(out));
}

MembershipFunction MembershipFunction::x_mapped(double a, double b) const {
  if (a == 0.0) throw Error("x_mapped needs a != 0");
  std::vector<Vertex> out = v_;
  for (auto& v : out) v.x = a * v.x + b;
  if (a < 0.0) std::reverse(out.begin(), out.end());
  return MembershipFunction(std::move(out));
}

MembershipFunction MembershipFunction::truncated(double lo, double hi) const {
  if (!(lo < hi)) throw Error("truncated needs lo < hi");
  double left = (*this)(lo);
  double right = (*this)(hi);
  std::vector<Vertex> out;
  for (const auto& v : v_) {
    if (v.x <= lo) {
      left = std::max(left, v.mu);
    } else if (v.x >= hi) {
      right = std::max(right, v.mu);
    }
  }
  out.push_back({lo, left});
  for (const auto& v : v_) {
    if (v.x > lo && v.x < hi) out.push_back(v);
  }
  out.push_back({hi, right});
  return MembershipFunction(std::move(out));
}

namespace {

// Drops interior vertices lying exactly on the line between their kept
// neighbors (same interpolation formula as evaluation, so the check is
// exact). Keeps combined shapes canonical: a pointwise-identical function
// always reduces to the same vertex list, which in turn keeps
// defuzzification bit-stable.
std::vector<Vertex> simplified(std::vector<Vertex> v) {
  if (v.size() <= 2) return v;
  std::vector<Vertex> out;
  out.push_back(v.front());
  for (std::size_t i = 1; i + 1 < v.size(); ++i) {
    const Vertex& prev = out.back();
    const Vertex& next = v[i + 1];
    const double t = (v[i].x - prev.x) / (next.x - prev.x);
    const double interp = prev.mu + t * (next.mu - prev.mu);
    if (interp != v[i].mu) out.push_back(v[i]);
  }
  out.push_back(v.back());
  return out;
}

std::vector<double> breakpoints(const MembershipFunction& a, const MembershipFunction& b) {
  std::set<double> xs;
  for (const auto& v : a.vertices()) xs.insert(v.x);
  for (const auto& v : b.vertices()) xs.insert(v.x);
  std::vector<double> grid(xs.begin(), xs.end());
  std::vector<double> out;
  out.reserve(grid.size() * 2);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    out.push_back(grid[i]);
    if (i + 1 == grid.size()) break;
    const double x0 = grid[i], x1 = grid[i + 1];
    const double fa0 = a(x0), fa1 = a(x1), fb0 = b(x0), fb1 = b(x1);
    const double d0 = fa0 - fb0, d1 = fa1 - fb1;
    if (d0 * d1 < 0.0) {
      const double t = d0 / (d0 - d1);
      const double xc = x0 + t * (x1 - x0);
      if (xc > x0 && xc < x1) out.push_back(xc);
    }
  }
  return out;
}

}  // namespace

MembershipFunction MembershipFunction::combine(const MembershipFunction& a,
                                               const MembershipFunction& b,
                                               const std::function<double(double, double)>& op) {
  std::vector<Vertex> out;
  for (double x : breakpoints(a, b)) {
    out.push_back({x, std::clamp(op(a(x), b(x)), 0.0, 1.0)});
  }
  return MembershipFunction(simplified(std::move(out)));
}

double MembershipFunction::sup_min(const MembershipFunction& a, const MembershipFunction& b) {
  double best = 0.0;
  for (double x : breakpoints(a, b)) {
    best = std::max(best, std::min(a(x), b(x)));
  }
  return best;
}

double MembershipFunction::centroid() const {
  double area = 0.0;
  double moment = 0.0;
  for (std::size_t i = 1; i < v_.size(); ++i) {
    const Vertex& p = v_[i - 1];
    const Vertex& q = v_[i];
    const double dx = q.x - p.x;
    // mu(x) = m*x + c on the segment
    const double m = (q.mu - p.mu) / dx;
    const double c = p.mu - m * p.x;
    area += m * (q.x * q.x - p.x * p.x) / 2.0 + c * dx;
    moment += m * (q.x * q.x * q.x - p.x * p.x * p.x) / 3.0 + c * (q.x * q.x - p.x * p.x) / 2.0;
  }
  if (area <= 0.0) throw DegenerateSet("centroid of an all-zero set");
  return moment / area;
}

double MembershipFunction::mean_of_maxima() const {
  const double m = max_mu();
  if (m == 0.0) throw DegenerateSet("mean of maxima of an all-zero set");
  double first = 0.0, last = 0.0;
  bool seen = false;
  for (const auto& v : v_) {
    if (v.mu == m) {
      if (!seen) first = v.x;
      last = v.x;
      seen = true;
    }
  }
  return (first + last) / 2.0;
}

}  // namespace fuzzopt::fuzzy
