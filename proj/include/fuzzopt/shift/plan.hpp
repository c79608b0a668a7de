#pragma once

#include <array>
#include <string>
#include <vector>

#include "fuzzopt/error.hpp"

namespace fuzzopt::shift {

struct Unsatisfiable : Error {
  using Error::Error;
};

constexpr int kCycleDays = 21;
constexpr int kDaysPerWeek = 7;
constexpr int kWeeks = 3;
constexpr int kSubgroups = 6;
constexpr int kGroups = 3;

/// TD: weekday day shift, 8-9 h (8.5 nominal). TDWE: weekend day shift,
/// fixed 4 h. SWWE: weekend shift substitution, fixed 12 h (Saturdays).
enum class ShiftCode { TD, TDWE, SWWE };

constexpr double kTdMinHours = 8.0;
constexpr double kTdMaxHours = 9.0;
constexpr double kTdNominalHours = 8.5;
constexpr double kTdweHours = 4.0;
constexpr double kSwweHours = 12.0;

std::string to_string(ShiftCode);
ShiftCode shift_code_from_string(const std::string&);
double nominal_duration(ShiftCode);

/// Whether a requirement allocates single subgroups or whole groups (both
/// subgroups of each selected group).
enum class UnitKind { Subgroup, Group };

std::string to_string(UnitKind);
UnitKind unit_kind_from_string(const std::string&);

struct Requirement {
  ShiftCode shift = ShiftCode::TD;
  UnitKind unit = UnitKind::Subgroup;
  int count = 0;
  friend bool operator==(const Requirement&, const Requirement&) = default;
};

inline int day_of_week(int day) { return day % kDaysPerWeek; }  // 0 = Mon .. 6 = Sun
inline int week_of(int day) { return day / kDaysPerWeek; }
inline bool is_mon_wed(int day) { return day_of_week(day) <= 2; }
inline bool is_thu_fri(int day) { int w = day_of_week(day); return w == 3 || w == 4; }
inline bool is_saturday(int day) { return day_of_week(day) == 5; }
inline bool is_sunday(int day) { return day_of_week(day) == 6; }
inline bool is_weekend(int day) { return day_of_week(day) >= 5; }

std::string day_label(int day);  // Mon1 .. Sun3

/// Per-day shift requirements over the three-week cycle. The cycle repeats
/// week by week except for one maintenance Saturday with its own setting.
struct OperationPlan {
  int cycle_days = kCycleDays;
  double nominal_weekly_hours = 38.5;
  double hour_tolerance = 1.5;  // allowed deviation from the fair share per cycle
  std::array<std::vector<Requirement>, kCycleDays> days;

  void validate() const;  // throws Unsatisfiable

  /// Total cycle hours with TD at its nominal duration; the per-subgroup
  /// hours requirement is fair_share() +- hour_tolerance.
  double nominal_total_hours() const;
  double fair_share() const { return nominal_total_hours() / kSubgroups; }

  /// Subgroup slots required on `day` for `code` (group requirements count
  /// both subgroups).
  int required_slots(int day, ShiftCode code) const;
  int required_groups(int day, ShiftCode code) const;
  bool allows(int day, ShiftCode code) const { return required_slots(day, code) > 0; }

  friend bool operator==(const OperationPlan&, const OperationPlan&) = default;
};

/// The bundled roster: Mon-Wed five subgroups on day shift, Thu-Fri two
/// whole groups, Sundays one weekend day shift, Saturdays one weekend day
/// shift plus one substitution, except the maintenance Saturday (third week)
/// which needs two weekend day shifts and no substitution.
OperationPlan default_reference_plan();

int maintenance_saturday(const OperationPlan&);  // -1 if none

}  // namespace fuzzopt::shift
