#include "fuzzopt/constraints/defaults.hpp"

namespace fuzzopt::constraints {

using fuzzy::LinguisticVariable;
using fuzzy::MembershipFunction;
using fuzzy::Rule;
using fuzzy::RuleSet;

namespace {

constexpr double kThird = 1.0 / 3.0;
constexpr double kTwoThirds = 2.0 / 3.0;

LinguisticVariable build_satisfaction() {
  LinguisticVariable v;
  v.name = "satisfaction";
  v.lo = 0.0;
  v.hi = 1.0;
  v.terms.emplace("very_bad", MembershipFunction::triangle(0.0, 0.0, 0.25));
  v.terms.emplace("bad", MembershipFunction::triangle(0.0, 0.25, 0.5));
  v.terms.emplace("zero", MembershipFunction::triangle(0.25, 0.5, 0.75));
  v.terms.emplace("good", MembershipFunction::triangle(0.5, 0.75, 1.0));
  v.terms.emplace("very_good", MembershipFunction::triangle(0.75, 1.0, 1.0));
  return v;
}

// Satisfied side tiled with trapezoid cores so some term fires at grade 1
// anywhere on it; violating side is a triangular partition ending in a
// shoulder that holds grade 1 from the full ramp outward.
LinguisticVariable build_deviation_le() {
  LinguisticVariable v;
  v.name = "deviation";
  v.lo = -1.0;
  v.hi = 1.0;
  v.terms.emplace("negative_big",
                  MembershipFunction({{-1.0, 1.0}, {-kTwoThirds, 1.0}, {-kThird, 0.0}}));
  v.terms.emplace("negative_medium",
                  MembershipFunction::trapezoid(-1.0, -kTwoThirds, -kThird, 0.0));
  v.terms.emplace("negative_small",
                  MembershipFunction::trapezoid(-kTwoThirds, -kThird, 0.0, kThird));
  v.terms.emplace("zero", MembershipFunction::triangle(-kThird, 0.0, kThird));
  v.terms.emplace("positive_small", MembershipFunction::triangle(0.0, kThird, kTwoThirds));
  v.terms.emplace("positive_medium", MembershipFunction::triangle(kThird, kTwoThirds, 1.0));
  v.terms.emplace("positive_big", MembershipFunction({{kTwoThirds, 0.0}, {1.0, 1.0}}));
  return v;
}

LinguisticVariable mirrored(const LinguisticVariable& src) {
  LinguisticVariable v;
  v.name = src.name;
  v.lo = -src.hi;
  v.hi = -src.lo;
  auto flip = [](const std::string& term) {
    if (term.rfind("negative", 0) == 0) return "positive" + term.substr(8);
    if (term.rfind("positive", 0) == 0) return "negative" + term.substr(8);
    return term;
  };
  for (const auto& [term, mf] : src.terms) v.terms.emplace(flip(term), mf.x_mapped(-1.0, 0.0));
  return v;
}

LinguisticVariable build_deviation_eq() {
  LinguisticVariable v;
  v.name = "deviation";
  v.lo = -1.0;
  v.hi = 1.0;
  v.terms.emplace("negative_big", MembershipFunction({{-1.0, 1.0}, {-kTwoThirds, 0.0}}));
  v.terms.emplace("negative_medium", MembershipFunction::triangle(-1.0, -kTwoThirds, -kThird));
  v.terms.emplace("negative_small", MembershipFunction::triangle(-kTwoThirds, -kThird, 0.0));
  v.terms.emplace("zero", MembershipFunction::triangle(-kThird, 0.0, kThird));
  v.terms.emplace("positive_small", MembershipFunction::triangle(0.0, kThird, kTwoThirds));
  v.terms.emplace("positive_medium", MembershipFunction::triangle(kThird, kTwoThirds, 1.0));
  v.terms.emplace("positive_big", MembershipFunction({{kTwoThirds, 0.0}, {1.0, 1.0}}));
  return v;
}

Rule rule(const char* dev_term, const char* sat_term) {
  Rule r;
  r.antecedents = {{"deviation", dev_term}};
  r.output_variable = "satisfaction";
  r.output_term = sat_term;
  return r;
}

}  // namespace

const LinguisticVariable& satisfaction_variable() {
  static const LinguisticVariable v = build_satisfaction();
  return v;
}

const LinguisticVariable& deviation_variable(CompareOp op) {
  static const LinguisticVariable le = build_deviation_le();
  static const LinguisticVariable ge = mirrored(build_deviation_le());
  static const LinguisticVariable eq = build_deviation_eq();
  switch (op) {
    case CompareOp::Le:
    case CompareOp::Lt: return le;
    case CompareOp::Ge:
    case CompareOp::Gt: return ge;
    case CompareOp::Eq: return eq;
  }
  return le;
}

RuleSet make_default_ruleset(CompareOp op) {
  RuleSet rs;
  switch (op) {
    case CompareOp::Le:
    case CompareOp::Lt:
      rs.rules = {rule("negative_big", "very_good"),   rule("negative_medium", "very_good"),
                  rule("negative_small", "very_good"), rule("zero", "very_good"),
                  rule("positive_small", "zero"),      rule("positive_medium", "bad"),
                  rule("positive_big", "very_bad")};
      break;
    case CompareOp::Ge:
    case CompareOp::Gt:
      rs.rules = {rule("positive_big", "very_good"),   rule("positive_medium", "very_good"),
                  rule("positive_small", "very_good"), rule("zero", "very_good"),
                  rule("negative_small", "zero"),      rule("negative_medium", "bad"),
                  rule("negative_big", "very_bad")};
      break;
    case CompareOp::Eq:
      rs.rules = {rule("zero", "very_good"),          rule("negative_small", "zero"),
                  rule("positive_small", "zero"),     rule("negative_medium", "bad"),
                  rule("positive_medium", "bad"),     rule("negative_big", "very_bad"),
                  rule("positive_big", "very_bad")};
      break;
  }
  return rs;
}

RuleSet make_default_ruleset(const CompareConstraint& c) { return make_default_ruleset(c.op); }

}  // namespace fuzzopt::constraints
