#include "fuzzopt/kb.hpp"

#include <set>

namespace fuzzopt {

const fuzzy::LinguisticVariable* KnowledgeBase::find_variable(const std::string& vname) const {
  for (const auto& v : variables) {
    if (v.name == vname) return &v;
  }
  return nullptr;
}

const dyneval::TemplateConstraint* KnowledgeBase::find_template(const std::string& tname) const {
  for (const auto& t : templates) {
    if (t.base.name == tname) return &t;
  }
  return nullptr;
}

namespace {

void check(std::vector<std::string>& diags, bool collect_all, bool ok, const std::string& msg) {
  if (ok) return;
  if (!collect_all) throw Error(msg);
  diags.push_back(msg);
}

}  // namespace

std::vector<std::string> KnowledgeBase::validate(bool collect_all) const {
  std::vector<std::string> diags;
  check(diags, collect_all, !name.empty(), "knowledge base needs a name");
  check(diags, collect_all, violation_threshold >= 0.0 && violation_threshold <= 1.0,
        "violation threshold outside [0,1]");
  for (const auto& v : variables) {
    try {
      v.validate();
    } catch (const Error& e) {
      check(diags, collect_all, false, e.what());
    }
  }
  std::set<std::string> template_names;
  for (const auto& t : templates) {
    check(diags, collect_all, template_names.insert(t.base.name).second,
          "duplicate template '" + t.base.name + "'");
    check(diags, collect_all, t.base.ramp_width > 0.0,
          "template '" + t.base.name + "' has non-positive ramp width");
    check(diags, collect_all, t.base.importance >= 0.0,
          "template '" + t.base.name + "' has negative importance");
    check(diags, collect_all, find_variable(t.base.variable) != nullptr,
          "template '" + t.base.name + "' references unknown variable '" + t.base.variable + "'");
  }
  std::set<std::string> rule_names;
  for (const auto& r : rules) {
    check(diags, collect_all, rule_names.insert(r.name).second,
          "duplicate generation rule '" + r.name + "'");
    check(diags, collect_all, find_template(r.template_name) != nullptr,
          "rule '" + r.name + "' references unknown template '" + r.template_name + "'");
  }
  for (const auto& cs : constraint_sets) {
    try {
      cs.validate();
    } catch (const Error& e) {
      check(diags, collect_all, false, e.what());
    }
  }
  return diags;
}

}  // namespace fuzzopt
