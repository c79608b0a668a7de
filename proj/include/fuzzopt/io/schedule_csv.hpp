#pragma once

#include <string>

#include "fuzzopt/optim/config.hpp"
#include "fuzzopt/shift/schedule.hpp"

namespace fuzzopt::io {

/// Schedule grid as CSV: one row per day (Mon1..Sun3), one column per
/// subgroup (A1..C2), cells "CODE:duration" or empty. Durations use the
/// shortest exact decimal representation, so write/read round-trips
/// bit-exactly.
std::string schedule_to_csv(const shift::Schedule& s);
shift::Schedule schedule_from_csv(const std::string& text);

/// Optimization trace as CSV: eval_index,current,best.
std::string trace_to_csv(const std::vector<optim::TracePoint>& trace);

}  // namespace fuzzopt::io
