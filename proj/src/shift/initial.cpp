#include <algorithm>
#include <cmath>

#include "fuzzopt/shift/schedule.hpp"
#include "fuzzopt/util/rng.hpp"

namespace fuzzopt::shift {

namespace {

constexpr double kQuarter = 0.25;

double quantize_down(double v) { return std::floor(v / kQuarter) * kQuarter; }

/// Least-loaded-first selection with a seed-rotated tie break.
template <typename LoadFn>
std::vector<int> pick_least_loaded(int universe, int count, LoadFn load,
                                   const std::vector<bool>& excluded, Rng& rng) {
  std::vector<int> order(static_cast<std::size_t>(universe));
  for (int i = 0; i < universe; ++i) order[static_cast<std::size_t>(i)] = i;
  const int rot = rng.below_int(universe);
  std::rotate(order.begin(), order.begin() + rot, order.end());
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return load(a) < load(b); });
  std::vector<int> picked;
  for (int i : order) {
    if (excluded[static_cast<std::size_t>(i)]) continue;
    picked.push_back(i);
    if (static_cast<int>(picked.size()) == count) break;
  }
  return picked;
}

}  // namespace

bool retune_td_durations(Schedule& s, const OperationPlan& p) {
  const double fair = p.fair_share();
  bool ok = true;
  for (int g = 0; g < kSubgroups; ++g) {
    std::vector<int> td_days;
    double fixed = 0.0;
    for (int d = 0; d < kCycleDays; ++d) {
      if (const auto& a = s.at(d, g)) {
        if (a->shift == ShiftCode::TD) {
          td_days.push_back(d);
        } else {
          fixed += a->duration;
        }
      }
    }
    if (td_days.empty()) {
      ok = ok && std::abs(fixed - fair) <= p.hour_tolerance;
      continue;
    }
    const int n = static_cast<int>(td_days.size());
    const double per_td = std::clamp((fair - fixed) / n, kTdMinHours, kTdMaxHours);
    double base = std::clamp(quantize_down(per_td), kTdMinHours, kTdMaxHours);
    // distribute the quantization remainder over the first few assignments
    int bumps = 0;
    if (base + kQuarter <= kTdMaxHours) {
      const double remainder = (fair - fixed) - base * n;
      bumps = std::clamp(static_cast<int>(std::llround(remainder / kQuarter)), 0, n);
    }
    double total = fixed;
    for (int i = 0; i < n; ++i) {
      const double dur = i < bumps ? base + kQuarter : base;
      s.set(td_days[static_cast<std::size_t>(i)], g, {ShiftCode::TD, dur});
      total += dur;
    }
    ok = ok && std::abs(total - fair) <= p.hour_tolerance;
  }
  return ok;
}

Schedule initial_solution(const OperationPlan& p, std::uint64_t seed) {
  p.validate();
  Rng rng(seed);
  Schedule s;
  std::vector<double> load(kSubgroups, 0.0);

  for (int d = 0; d < kCycleDays; ++d) {
    std::vector<bool> busy(kSubgroups, false);
    for (const Requirement& req : p.days[static_cast<std::size_t>(d)]) {
      if (req.count == 0) continue;
      if (req.unit == UnitKind::Group) {
        std::vector<bool> group_busy(kGroups, false);
        for (int grp = 0; grp < kGroups; ++grp) {
          group_busy[static_cast<std::size_t>(grp)] =
              busy[static_cast<std::size_t>(2 * grp)] || busy[static_cast<std::size_t>(2 * grp + 1)];
        }
        auto groups = pick_least_loaded(
            kGroups, req.count,
            [&](int grp) { return load[static_cast<std::size_t>(2 * grp)] +
                                  load[static_cast<std::size_t>(2 * grp + 1)]; },
            group_busy, rng);
        if (static_cast<int>(groups.size()) < req.count)
          throw Unsatisfiable("cannot cover group requirement on " + day_label(d));
        for (int grp : groups) {
          for (int g : {2 * grp, 2 * grp + 1}) {
            s.set(d, g, {req.shift, nominal_duration(req.shift)});
            load[static_cast<std::size_t>(g)] += nominal_duration(req.shift);
            busy[static_cast<std::size_t>(g)] = true;
          }
        }
      } else {
        auto subs = pick_least_loaded(
            kSubgroups, req.count, [&](int g) { return load[static_cast<std::size_t>(g)]; }, busy,
            rng);
        if (static_cast<int>(subs.size()) < req.count)
          throw Unsatisfiable("cannot cover requirement on " + day_label(d));
        for (int g : subs) {
          s.set(d, g, {req.shift, nominal_duration(req.shift)});
          load[static_cast<std::size_t>(g)] += nominal_duration(req.shift);
          busy[static_cast<std::size_t>(g)] = true;
        }
      }
    }
  }

  if (!retune_td_durations(s, p) || !validate_hard(s, p).empty())
    throw Unsatisfiable("plan hours cannot be balanced across the subgroups");
  return s;
}

}  // namespace fuzzopt::shift
