#pragma once

#include <map>

#include "fuzzopt/constraints/model.hpp"

namespace fuzzopt::constraints {

using Bindings = std::map<std::string, fuzzy::FuzzyValue>;

/// Degree of satisfaction of a compare constraint for one value, in [0, 1].
///
/// The deviation (value - compare_value) / ramp_width is matched against the
/// deviation terms, the default (or given) rule table fires, and the result
/// is defuzzified. Scores are calibrated so that the fully satisfied region
/// maps to exactly 1 and a full-ramp violation to exactly 0; in between the
/// score decreases monotonically with the violation. Crisp dilatation short
/// circuits to a 0/1 step at the compare value.
double evaluate_compare(const CompareConstraint& c, const fuzzy::FuzzyValue& binding,
                        const fuzzy::OperatorSet& ops);
double evaluate_compare(const CompareConstraint& c, const fuzzy::FuzzyValue& binding,
                        const fuzzy::OperatorSet& ops, const fuzzy::RuleSet& rules);

/// Bottom-up evaluation of a whole set. Concat nodes combine their children
/// with the and/or operator weighted by the children's importances; the set
/// score aggregates the roots. A leaf score of 0 with positive importance is
/// a hard barrier and marks the whole result invalid (scoring still
/// completes, the violation ranking needs the full tree).
SetOfEvalConstraints evaluate_set(const SetOfConstraints& s, const Bindings& bindings);

}  // namespace fuzzopt::constraints
