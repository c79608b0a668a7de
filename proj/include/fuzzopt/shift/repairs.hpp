#pragma once

#include <optional>

#include "fuzzopt/position.hpp"
#include "fuzzopt/shift/schedule.hpp"

namespace fuzzopt::shift {

/// The four modification operators of the shift domain. All of them exchange
/// assignment patterns between days so that per-day coverage, group
/// structure and per-subgroup hours are preserved exactly; a repair that
/// finds no feasible exchange reports a no-op instead of breaking anything.
enum class RepairOp { MonWed, MonWedThuFri, WeekendTd, WeekendSw };

std::string to_string(RepairOp);
RepairOp repair_op_from_string(const std::string&);

/// Scan offsets: the search for an exchange partner starts at these offsets
/// and wraps, so callers control where the iteration begins. Every feasible
/// exchange is reachable under some choice of offsets.
struct RepairStart {
  int day_offset = 0;
  int unit_offset = 0;
  int aux_offset = 0;
};

struct RepairOutcome {
  Schedule schedule;
  std::vector<Position> changed;  // cells whose content differs from the input
  std::string move_key;           // canonical move identity, used by tabu lists
};

/// Applies one repair at `pos` (a currently assigned cell of the matching
/// day class). Returns the repaired schedule or nullopt when no feasible
/// exchange exists from the given start offsets.
std::optional<RepairOutcome> apply_repair(const Schedule& s, const OperationPlan& p, RepairOp op,
                                          Position pos, const RepairStart& start);

/// Repair operators applicable to the assignment at `pos` (day class and
/// shift code decide; unassigned cells yield an empty list).
std::vector<RepairOp> repair_ops_for(const Schedule& s, Position pos);

}  // namespace fuzzopt::shift
