#pragma once

#include "fuzzopt/constraints/model.hpp"

namespace fuzzopt::constraints {

/// Output variable for compare-constraint satisfaction: five equidistant
/// triangles over [0, 1] named very_bad, bad, zero, good, very_good.
const fuzzy::LinguisticVariable& satisfaction_variable();

/// Normalized deviation variable over [-1, 1] with the seven terms
/// negative_big .. positive_big. The term shapes depend on the compare
/// operator: for inequalities the satisfied side is tiled by trapezoid cores
/// so that any satisfied deviation fires a fully-satisfied rule, which pins
/// the score there to exactly 1; for equality the layout is symmetric.
const fuzzy::LinguisticVariable& deviation_variable(CompareOp op);

/// Rule table mapping deviation terms to satisfaction terms, oriented by the
/// compare operator (for <= the positive side violates; for >= the mirror;
/// for = both big deviations map to very_bad).
fuzzy::RuleSet make_default_ruleset(const CompareConstraint& c);
fuzzy::RuleSet make_default_ruleset(CompareOp op);

}  // namespace fuzzopt::constraints
