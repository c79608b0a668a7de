// Independent test oracles. Everything here recomputes expected values by
// brute force (grids, enumeration, quadrature) without touching the code
// paths under test.
#pragma once

#include <cmath>
#include <set>
#include <vector>

#include "fuzzopt/fuzzy/membership.hpp"
#include "fuzzopt/queens/queens.hpp"
#include "fuzzopt/shift/schedule.hpp"

namespace oracles {

using fuzzopt::fuzzy::MembershipFunction;

/// sup_x min(a(x), b(x)) by grid search.
inline double grid_sup_min(const MembershipFunction& a, const MembershipFunction& b, double lo,
                           double hi, double step) {
  double best = 0.0;
  for (double x = lo; x <= hi + step / 2; x += step) {
    best = std::max(best, std::min(a(x), b(x)));
  }
  return best;
}

/// Centroid by composite trapezoidal quadrature.
inline double quadrature_centroid(const MembershipFunction& f, int samples = 200000) {
  const double lo = f.support_lo(), hi = f.support_hi();
  const double h = (hi - lo) / samples;
  double area = 0.0, moment = 0.0;
  for (int i = 0; i <= samples; ++i) {
    const double x = lo + i * h;
    const double w = (i == 0 || i == samples) ? 0.5 : 1.0;
    area += w * f(x);
    moment += w * x * f(x);
  }
  return moment / area;
}

/// Attacking queen pairs by the O(n^2) definition.
inline long long attack_pairs(const fuzzopt::queens::QueensBoard& b) {
  long long pairs = 0;
  for (int i = 0; i < b.size(); ++i) {
    for (int j = i + 1; j < b.size(); ++j) {
      const int ri = b.row(i), rj = b.row(j);
      if (ri == rj || std::abs(ri - rj) == j - i) ++pairs;
    }
  }
  return pairs;
}

/// chi-square statistic against the uniform distribution.
inline double chi_square_uniform(const std::vector<long long>& observed, long long total) {
  const double expected = static_cast<double>(total) / observed.size();
  double chi = 0.0;
  for (long long o : observed) {
    const double d = o - expected;
    chi += d * d / expected;
  }
  return chi;
}

/// Serializes a schedule grid into a comparable key (used for neighbor-set
/// equality checks).
inline std::string schedule_key(const fuzzopt::shift::Schedule& s) {
  std::string key;
  for (int d = 0; d < fuzzopt::shift::kCycleDays; ++d) {
    for (int g = 0; g < fuzzopt::shift::kSubgroups; ++g) {
      if (const auto& a = s.at(d, g)) {
        key += std::to_string(d) + ":" + std::to_string(g) + ":" + to_string(a->shift) + ":" +
               std::to_string(a->duration) + ";";
      }
    }
  }
  return key;
}

}  // namespace oracles
