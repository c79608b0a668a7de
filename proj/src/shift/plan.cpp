#include "fuzzopt/shift/plan.hpp"

#include <algorithm>

namespace fuzzopt::shift {

std::string to_string(ShiftCode c) {
  switch (c) {
    case ShiftCode::TD: return "TD";
    case ShiftCode::TDWE: return "TDWE";
    case ShiftCode::SWWE: return "SWWE";
  }
  return "?";
}

ShiftCode shift_code_from_string(const std::string& s) {
  if (s == "TD") return ShiftCode::TD;
  if (s == "TDWE") return ShiftCode::TDWE;
  if (s == "SWWE") return ShiftCode::SWWE;
  throw Error("unknown shift code: '" + s + "'");
}

double nominal_duration(ShiftCode c) {
  switch (c) {
    case ShiftCode::TD: return kTdNominalHours;
    case ShiftCode::TDWE: return kTdweHours;
    case ShiftCode::SWWE: return kSwweHours;
  }
  return 0.0;
}

std::string to_string(UnitKind k) { return k == UnitKind::Subgroup ? "subgroup" : "group"; }

UnitKind unit_kind_from_string(const std::string& s) {
  if (s == "subgroup") return UnitKind::Subgroup;
  if (s == "group") return UnitKind::Group;
  throw Error("unknown unit kind: '" + s + "'");
}

std::string day_label(int day) {
  static const char* names[kDaysPerWeek] = {"Mon", "Tue", "Wed", "Thu", "Fri", "Sat", "Sun"};
  return std::string(names[day_of_week(day)]) + std::to_string(week_of(day) + 1);
}

int OperationPlan::required_slots(int day, ShiftCode code) const {
  int slots = 0;
  for (const auto& r : days[static_cast<std::size_t>(day)]) {
    if (r.shift != code) continue;
    slots += r.unit == UnitKind::Group ? 2 * r.count : r.count;
  }
  return slots;
}

int OperationPlan::required_groups(int day, ShiftCode code) const {
  int groups = 0;
  for (const auto& r : days[static_cast<std::size_t>(day)]) {
    if (r.shift == code && r.unit == UnitKind::Group) groups += r.count;
  }
  return groups;
}

double OperationPlan::nominal_total_hours() const {
  double total = 0.0;
  for (int d = 0; d < cycle_days; ++d) {
    for (ShiftCode c : {ShiftCode::TD, ShiftCode::TDWE, ShiftCode::SWWE}) {
      total += required_slots(d, c) * nominal_duration(c);
    }
  }
  return total;
}

void OperationPlan::validate() const {
  if (cycle_days != kCycleDays) throw Unsatisfiable("plan cycle must cover 21 days");
  for (int d = 0; d < cycle_days; ++d) {
    int slots = 0;
    for (const auto& r : days[static_cast<std::size_t>(d)]) {
      if (r.count < 0) throw Unsatisfiable("negative requirement count on " + day_label(d));
      slots += r.unit == UnitKind::Group ? 2 * r.count : r.count;
      if (r.unit == UnitKind::Group && r.count > kGroups)
        throw Unsatisfiable("more groups required than exist on " + day_label(d));
    }
    if (slots > kSubgroups)
      throw Unsatisfiable("requirements on " + day_label(d) + " exceed the six subgroups");
    for (ShiftCode c : {ShiftCode::TD, ShiftCode::TDWE, ShiftCode::SWWE}) {
      bool sub = false, grp = false;
      for (const auto& r : days[static_cast<std::size_t>(d)]) {
        if (r.shift != c) continue;
        (r.unit == UnitKind::Group ? grp : sub) = true;
      }
      if (sub && grp)
        throw Unsatisfiable("mixed group and subgroup requirements for " + to_string(c) + " on " +
                            day_label(d));
    }
  }
  // exactly one Saturday deviates (the maintenance setting)
  if (maintenance_saturday(*this) < 0)
    throw Unsatisfiable("plan needs exactly one maintenance Saturday");
}

OperationPlan default_reference_plan() {
  OperationPlan p;
  for (int d = 0; d < kCycleDays; ++d) {
    auto& reqs = p.days[static_cast<std::size_t>(d)];
    if (is_mon_wed(d)) {
      reqs.push_back({ShiftCode::TD, UnitKind::Subgroup, 5});
    } else if (is_thu_fri(d)) {
      reqs.push_back({ShiftCode::TD, UnitKind::Group, 2});
    } else if (is_saturday(d)) {
      if (week_of(d) == kWeeks - 1) {
        // maintenance Saturday: two weekend day shifts, no substitution
        reqs.push_back({ShiftCode::TDWE, UnitKind::Subgroup, 2});
      } else {
        reqs.push_back({ShiftCode::TDWE, UnitKind::Subgroup, 1});
        reqs.push_back({ShiftCode::SWWE, UnitKind::Subgroup, 1});
      }
    } else {
      reqs.push_back({ShiftCode::TDWE, UnitKind::Subgroup, 1});
    }
  }
  return p;
}

int maintenance_saturday(const OperationPlan& p) {
  std::array<int, kWeeks> sats{};
  for (int w = 0; w < kWeeks; ++w) sats[static_cast<std::size_t>(w)] = w * kDaysPerWeek + 5;
  auto sorted_reqs = [&](int day) {
    auto reqs = p.days[static_cast<std::size_t>(day)];
    std::sort(reqs.begin(), reqs.end(), [](const Requirement& a, const Requirement& b) {
      return std::tuple(a.shift, a.unit, a.count) < std::tuple(b.shift, b.unit, b.count);
    });
    return reqs;
  };
  const auto r0 = sorted_reqs(sats[0]);
  const auto r1 = sorted_reqs(sats[1]);
  const auto r2 = sorted_reqs(sats[2]);
  if (r0 == r1 && r1 == r2) return -1;
  if (r0 == r1) return sats[2];
  if (r0 == r2) return sats[1];
  if (r1 == r2) return sats[0];
  return -1;  // all three differ: no single deviating Saturday
}

}  // namespace fuzzopt::shift
