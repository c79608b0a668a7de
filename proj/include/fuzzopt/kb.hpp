#pragma once

#include "fuzzopt/constraints/model.hpp"
#include "fuzzopt/dyneval/generation.hpp"

namespace fuzzopt {

/// A complete constraint knowledge base: vocabulary, operator choices, the
/// static constraint layer, and the dynamic layer (templates plus the rules
/// that instantiate them over a problem instantiation).
struct KnowledgeBase {
  std::string name;
  fuzzy::OperatorSet operator_set;
  double violation_threshold = 0.9;
  std::vector<fuzzy::LinguisticVariable> variables;
  std::vector<dyneval::TemplateConstraint> templates;
  std::vector<dyneval::GenerationRule> rules;
  std::vector<constraints::SetOfConstraints> constraint_sets;

  const fuzzy::LinguisticVariable* find_variable(const std::string& name) const;
  const dyneval::TemplateConstraint* find_template(const std::string& name) const;

  /// Checks every cross-reference and invariant; throws on the first defect,
  /// or returns the list of diagnostics when collect_all is set.
  std::vector<std::string> validate(bool collect_all = false) const;
};

}  // namespace fuzzopt
