#pragma once

#include <array>
#include <optional>

#include "fuzzopt/position.hpp"
#include "fuzzopt/shift/plan.hpp"

namespace fuzzopt::shift {

struct Assignment {
  ShiftCode shift = ShiftCode::TD;
  double duration = kTdNominalHours;
  friend bool operator==(const Assignment&, const Assignment&) = default;
};

/// 21-day x 6-subgroup assignment grid. Subgroups are indexed 0..5 and named
/// A1, A2, B1, B2, C1, C2; consecutive pairs form the groups A, B, C.
/// Schedules are value types; repairs and the optimizer work on copies.
class Schedule {
 public:
  const std::optional<Assignment>& at(int day, int subgroup) const {
    return grid_[static_cast<std::size_t>(day)][static_cast<std::size_t>(subgroup)];
  }
  void set(int day, int subgroup, Assignment a) {
    grid_[static_cast<std::size_t>(day)][static_cast<std::size_t>(subgroup)] = a;
  }
  void clear(int day, int subgroup) {
    grid_[static_cast<std::size_t>(day)][static_cast<std::size_t>(subgroup)].reset();
  }

  double subgroup_cycle_hours(int subgroup) const;
  double week_hours(int subgroup, int week) const;
  int count(int day, ShiftCode code) const;

  static int group_of(int subgroup) { return subgroup / 2; }
  static int partner_of(int subgroup) { return subgroup ^ 1; }
  static std::string subgroup_name(int subgroup);
  static int subgroup_index(const std::string& name);  // -1 if unknown
  static std::string group_name(int group);

  friend bool operator==(const Schedule&, const Schedule&) = default;

 private:
  std::array<std::array<std::optional<Assignment>, kSubgroups>, kCycleDays> grid_{};
};

struct HardViolation {
  enum class Kind { Coverage, GroupStructure, Hours, Duration };
  Kind kind;
  int day = -1;       // -1 when not day-specific
  int subgroup = -1;  // -1 when not subgroup-specific
  std::string detail;
};

std::string to_string(HardViolation::Kind);

/// Checks the hard requirements: per-day assignments match the plan exactly,
/// group days keep whole groups together, durations stay in range, and every
/// subgroup's cycle hours are within tolerance of the plan's fair share.
/// Violations come back as data; an empty list means the schedule is valid.
std::vector<HardViolation> validate_hard(const Schedule& s, const OperationPlan& p);

/// Deterministic feasible starting schedule: requirements are assigned
/// greedily to the least-loaded eligible units (seed-rotated tie breaking),
/// then TD durations are tuned inside [8, 9] in quarter-hour steps to bring
/// every subgroup close to the fair share. Throws Unsatisfiable when the
/// plan cannot be covered.
Schedule initial_solution(const OperationPlan& p, std::uint64_t seed);

/// Re-tunes every TD duration (quarter-hour steps inside [8, 9]) so each
/// subgroup approaches the plan's fair share. Returns false when a subgroup
/// cannot reach the tolerance window.
bool retune_td_durations(Schedule& s, const OperationPlan& p);

}  // namespace fuzzopt::shift
