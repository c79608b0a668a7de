#pragma once

#include <map>
#include <string>
#include <vector>

#include "fuzzopt/fuzzy/operators.hpp"
#include "fuzzopt/fuzzy/variable.hpp"

namespace fuzzopt::fuzzy {

struct UnresolvedVariable : Error {
  using Error::Error;
};

enum class Connective { And, Or };

struct Antecedent {
  std::string variable;
  std::string term;
  friend bool operator==(const Antecedent&, const Antecedent&) = default;
};

struct Rule {
  std::vector<Antecedent> antecedents;
  Connective connective = Connective::And;
  std::string output_variable;
  std::string output_term;
  friend bool operator==(const Rule&, const Rule&) = default;
};

struct RuleSet {
  std::vector<Rule> rules;
  friend bool operator==(const RuleSet&, const RuleSet&) = default;
};

/// Mamdani-style inference: per rule the firing strength folds the
/// antecedent degrees with the and/or operator, the consequent term is
/// clipped at that strength, and all rule outputs are merged pointwise with
/// the or operator over the output universe.
MembershipFunction apply_rules(const RuleSet& rs,
                               const std::map<std::string, TermDegrees>& inputs,
                               const LinguisticVariable& output, const OperatorSet& ops);

double defuzzify(const MembershipFunction& set, Defuzz method);

}  // namespace fuzzopt::fuzzy
