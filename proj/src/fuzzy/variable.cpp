#include "fuzzopt/fuzzy/variable.hpp"

namespace fuzzopt::fuzzy {

void LinguisticVariable::validate() const {
  if (name.empty()) throw Error("linguistic variable needs a name");
  if (!(lo < hi)) throw Error("universe of '" + name + "' needs lo < hi");
  if (terms.empty()) throw Error("linguistic variable '" + name + "' needs at least one term");
  for (const auto& [term, mf] : terms) {
    if (mf.support_lo() < lo || mf.support_hi() > hi)
      throw Error("term '" + term + "' of '" + name + "' leaves the universe");
  }
}

double FuzzyValue::representative() const {
  if (is_crisp()) return crisp_value();
  return dist().centroid();
}

TermDegrees fuzzify(const LinguisticVariable& var, const FuzzyValue& value) {
  TermDegrees out;
  if (value.is_crisp()) {
    const double x = value.crisp_value();
    if (x < var.lo || x > var.hi)
      throw OutOfUniverse("value " + std::to_string(x) + " outside universe of '" + var.name + "'");
    for (const auto& [term, mf] : var.terms) out[term] = mf(x);
  } else {
    const MembershipFunction& dist = value.dist();
    if (dist.support_lo() < var.lo || dist.support_hi() > var.hi)
      throw OutOfUniverse("distribution leaves universe of '" + var.name + "'");
    for (const auto& [term, mf] : var.terms) out[term] = MembershipFunction::sup_min(dist, mf);
  }
  return out;
}

}  // namespace fuzzopt::fuzzy
