#include "fuzzopt/fuzzy/rules.hpp"

namespace fuzzopt::fuzzy {

namespace {

double antecedent_degree(const Antecedent& a, const std::map<std::string, TermDegrees>& inputs) {
  auto vi = inputs.find(a.variable);
  if (vi == inputs.end()) throw UnresolvedVariable("no degrees for variable '" + a.variable + "'");
  auto ti = vi->second.find(a.term);
  if (ti == vi->second.end())
    throw UnresolvedVariable("variable '" + a.variable + "' has no term '" + a.term + "'");
  return ti->second;
}

}  // namespace

MembershipFunction apply_rules(const RuleSet& rs, const std::map<std::string, TermDegrees>& inputs,
                               const LinguisticVariable& output, const OperatorSet& ops) {
  MembershipFunction acc = MembershipFunction::plateau(output.lo, output.hi, 0.0);
  for (const Rule& rule : rs.rules) {
    if (rule.antecedents.empty()) throw UnresolvedVariable("rule without antecedents");
    if (rule.output_variable != output.name)
      throw UnresolvedVariable("rule concludes on '" + rule.output_variable +
                               "', expected '" + output.name + "'");
    auto term = output.terms.find(rule.output_term);
    if (term == output.terms.end())
      throw UnresolvedVariable("output variable has no term '" + rule.output_term + "'");

    double strength = antecedent_degree(rule.antecedents.front(), inputs);
    for (std::size_t i = 1; i < rule.antecedents.size(); ++i) {
      const double d = antecedent_degree(rule.antecedents[i], inputs);
      strength = rule.connective == Connective::And ? apply_and(ops.and_op, strength, d)
                                                    : apply_or(ops.or_op, strength, d);
    }
    if (strength <= 0.0) continue;
    acc = MembershipFunction::combine(acc, term->second.clipped(strength),
                                      [&](double a, double b) { return apply_or(ops.or_op, a, b); });
  }
  return acc;
}

double defuzzify(const MembershipFunction& set, Defuzz method) {
  return method == Defuzz::Centroid ? set.centroid() : set.mean_of_maxima();
}

}  // namespace fuzzopt::fuzzy
