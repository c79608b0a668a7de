#include "fuzzopt/shift/schedule.hpp"

#include <cmath>
#include <set>

namespace fuzzopt::shift {

double Schedule::subgroup_cycle_hours(int subgroup) const {
  double h = 0.0;
  for (int d = 0; d < kCycleDays; ++d) {
    if (const auto& a = at(d, subgroup)) h += a->duration;
  }
  return h;
}

double Schedule::week_hours(int subgroup, int week) const {
  double h = 0.0;
  for (int d = week * kDaysPerWeek; d < (week + 1) * kDaysPerWeek; ++d) {
    if (const auto& a = at(d, subgroup)) h += a->duration;
  }
  return h;
}

int Schedule::count(int day, ShiftCode code) const {
  int n = 0;
  for (int g = 0; g < kSubgroups; ++g) {
    if (const auto& a = at(day, g); a && a->shift == code) ++n;
  }
  return n;
}

std::string Schedule::subgroup_name(int subgroup) {
  static const char* names[kSubgroups] = {"A1", "A2", "B1", "B2", "C1", "C2"};
  return names[subgroup];
}

int Schedule::subgroup_index(const std::string& name) {
  for (int g = 0; g < kSubgroups; ++g) {
    if (subgroup_name(g) == name) return g;
  }
  return -1;
}

std::string Schedule::group_name(int group) { return std::string(1, static_cast<char>('A' + group)); }

std::string to_string(HardViolation::Kind k) {
  switch (k) {
    case HardViolation::Kind::Coverage: return "coverage";
    case HardViolation::Kind::GroupStructure: return "group-structure";
    case HardViolation::Kind::Hours: return "hours";
    case HardViolation::Kind::Duration: return "duration";
  }
  return "?";
}

namespace {

bool duration_ok(const Assignment& a) {
  switch (a.shift) {
    case ShiftCode::TD: return a.duration >= kTdMinHours && a.duration <= kTdMaxHours;
    case ShiftCode::TDWE: return a.duration == kTdweHours;
    case ShiftCode::SWWE: return a.duration == kSwweHours;
  }
  return false;
}

}  // namespace

std::vector<HardViolation> validate_hard(const Schedule& s, const OperationPlan& p) {
  std::vector<HardViolation> out;
  for (int d = 0; d < kCycleDays; ++d) {
    for (ShiftCode code : {ShiftCode::TD, ShiftCode::TDWE, ShiftCode::SWWE}) {
      const int want = p.required_slots(d, code);
      const int have = s.count(d, code);
      if (want != have) {
        out.push_back({HardViolation::Kind::Coverage, d, -1,
                       day_label(d) + " needs " + std::to_string(want) + " " + to_string(code) +
                           ", has " + std::to_string(have)});
      }
      const int groups_wanted = p.required_groups(d, code);
      if (groups_wanted > 0) {
        int complete = 0;
        for (int grp = 0; grp < kGroups; ++grp) {
          const auto& a = s.at(d, 2 * grp);
          const auto& b = s.at(d, 2 * grp + 1);
          const bool ga = a && a->shift == code;
          const bool gb = b && b->shift == code;
          if (ga && gb) {
            ++complete;
          } else if (ga != gb) {
            out.push_back({HardViolation::Kind::GroupStructure, d, 2 * grp + (ga ? 1 : 0),
                           day_label(d) + " splits group " + Schedule::group_name(grp) + " on " +
                               to_string(code)});
          }
        }
        if (complete != groups_wanted) {
          out.push_back({HardViolation::Kind::GroupStructure, d, -1,
                         day_label(d) + " needs " + std::to_string(groups_wanted) +
                             " whole groups on " + to_string(code)});
        }
      }
    }
    for (int g = 0; g < kSubgroups; ++g) {
      if (const auto& a = s.at(d, g)) {
        if (!duration_ok(*a)) {
          out.push_back({HardViolation::Kind::Duration, d, g,
                         Schedule::subgroup_name(g) + " on " + day_label(d) +
                             " has out-of-range duration"});
        }
      }
    }
  }
  const double fair = p.fair_share();
  for (int g = 0; g < kSubgroups; ++g) {
    const double h = s.subgroup_cycle_hours(g);
    if (std::abs(h - fair) > p.hour_tolerance + 1e-9) {
      out.push_back({HardViolation::Kind::Hours, -1, g,
                     Schedule::subgroup_name(g) + " works " + std::to_string(h) +
                         " h, fair share is " + std::to_string(fair)});
    }
  }
  return out;
}

}  // namespace fuzzopt::shift
