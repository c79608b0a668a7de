#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fuzzopt/constraints/defaults.hpp"
#include "fuzzopt/constraints/evaluate.hpp"
#include "fuzzopt/io/json_io.hpp"
#include "fuzzopt/util/rng.hpp"

using namespace fuzzopt;
using namespace fuzzopt::constraints;
using fuzzy::FuzzyValue;

namespace {

CompareConstraint alu_constraint() {
  CompareConstraint c;
  c.name = "alu-cons";
  c.comment = "aluminum content must stay below the limit";
  c.variable = "alu-cntnt";
  c.op = CompareOp::Le;
  c.compare_value = 0.08;
  c.ramp_width = 0.04;
  return c;
}

bool has_rule(const fuzzy::RuleSet& rs, const std::string& dev_term,
              const std::string& sat_term) {
  for (const auto& r : rs.rules) {
    if (r.antecedents.size() == 1 && r.antecedents[0].variable == "deviation" &&
        r.antecedents[0].term == dev_term && r.output_term == sat_term) {
      return true;
    }
  }
  return false;
}

double score_of(const CompareConstraint& c, double value, fuzzy::OperatorSet ops = {}) {
  return evaluate_compare(c, FuzzyValue::crisp(value), ops);
}

}  // namespace

TEST_CASE("default rule generation") {
  const auto le = make_default_ruleset(alu_constraint());
  CHECK(le.rules.size() == 7);  // one rule per deviation term
  CHECK(has_rule(le, "positive_medium", "bad"));
  CHECK(has_rule(le, "positive_big", "very_bad"));
  CHECK(has_rule(le, "positive_small", "zero"));
  CHECK(has_rule(le, "negative_big", "very_good"));

  // >= mirrors <=: the negative side becomes the violating one
  CompareConstraint ge = alu_constraint();
  ge.op = CompareOp::Ge;
  const auto mirrored = make_default_ruleset(ge);
  CHECK(has_rule(mirrored, "negative_medium", "bad"));
  CHECK(has_rule(mirrored, "negative_big", "very_bad"));
  CHECK(has_rule(mirrored, "negative_small", "zero"));
  CHECK(has_rule(mirrored, "positive_big", "very_good"));

  // equality penalizes both directions symmetrically
  CompareConstraint eq = alu_constraint();
  eq.op = CompareOp::Eq;
  const auto sym = make_default_ruleset(eq);
  CHECK(has_rule(sym, "positive_big", "very_bad"));
  CHECK(has_rule(sym, "negative_big", "very_bad"));
  CHECK(has_rule(sym, "positive_medium", "bad"));
  CHECK(has_rule(sym, "negative_medium", "bad"));
}

TEST_CASE("default ramp width") {
  CHECK(default_ramp_width(0.08) == 0.04);
  CHECK(default_ramp_width(-10.0) == 5.0);
  CHECK(default_ramp_width(0.0) == 1e-6);
}

TEST_CASE("compare evaluation hits the contract points") {
  const auto c = alu_constraint();
  CHECK(score_of(c, 0.08) == 1.0);  // boundary of the satisfied region
  CHECK(score_of(c, 0.04) == 1.0);
  // 0.12 - 0.08 is a hair below 0.04 in binary, so allow the representation
  // error; an exactly representable full-ramp violation is exactly 0
  CHECK(score_of(c, 0.12) <= 1e-12);
  CHECK(score_of(c, 0.2) == 0.0);

  CompareConstraint exact;  // d = 1 exactly
  exact.name = "exact";
  exact.variable = "x";
  exact.op = CompareOp::Le;
  exact.compare_value = 0.0;
  exact.ramp_width = 1.0;
  CHECK(score_of(exact, 1.0) == 0.0);
  CHECK(score_of(exact, 0.0) == 1.0);

  // half-ramp golden, frozen from the pipeline (symmetric term layout)
  CHECK(score_of(c, 0.10) == doctest::Approx(0.35).epsilon(1e-9));
  CHECK(score_of(exact, 0.5) == doctest::Approx(0.35).epsilon(1e-9));
}

TEST_CASE("orientation: >= mirrors <= and = is symmetric") {
  CompareConstraint ge = alu_constraint();
  ge.op = CompareOp::Ge;
  CHECK(score_of(ge, 0.08) == 1.0);
  CHECK(score_of(ge, 0.10) == 1.0);
  CHECK(score_of(ge, 0.06) == doctest::Approx(0.35).epsilon(1e-9));
  CHECK(score_of(ge, 0.04) == 0.0);

  CompareConstraint eq = alu_constraint();
  eq.op = CompareOp::Eq;
  CHECK(score_of(eq, 0.08) == 1.0);
  CHECK(score_of(eq, 0.10) == doctest::Approx(score_of(eq, 0.06)).epsilon(1e-12));
  CHECK(score_of(eq, 0.04) == 0.0);
}

TEST_CASE("crisp dilatation is a step at the compare value") {
  CompareConstraint c = alu_constraint();
  c.dilatation = Dilatation::Crisp;
  CHECK(score_of(c, 0.08) == 1.0);
  CHECK(score_of(c, 0.080001) == 0.0);
  c.op = CompareOp::Lt;
  CHECK(score_of(c, 0.08) == 0.0);  // strictness only observable when crisp
  c.op = CompareOp::Eq;
  CHECK(score_of(c, 0.08) == 1.0);
  CHECK(score_of(c, 0.0800001) == 0.0);
}

TEST_CASE("mixed dilatation keeps the satisfied side crisp") {
  CompareConstraint c = alu_constraint();
  c.dilatation = Dilatation::Mixed;
  CHECK(score_of(c, 0.05) == 1.0);
  CHECK(score_of(c, 0.08) == 1.0);
  CHECK(score_of(c, 0.10) == doctest::Approx(0.35).epsilon(1e-9));
}

TEST_CASE("linear curve maps the violation proportionally") {
  CompareConstraint c;
  c.name = "linear";
  c.variable = "x";
  c.op = CompareOp::Le;
  c.compare_value = 0.0;
  c.ramp_width = 3.0;
  c.curve = Curve::Linear;
  CHECK(score_of(c, 0.0) == 1.0);
  CHECK(score_of(c, 1.0) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(score_of(c, 2.0) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(score_of(c, 3.0) == 0.0);
  CHECK(score_of(c, 5.0) == 0.0);
}

TEST_CASE("satisfaction is monotone in the violation (property)") {
  Rng rng(77);
  for (int iter = 0; iter < 25; ++iter) {
    CompareConstraint c;
    c.name = "prop";
    c.variable = "x";
    c.op = iter % 2 == 0 ? CompareOp::Le : CompareOp::Ge;
    c.compare_value = -2.0 + 4.0 * rng.unit();
    c.ramp_width = 0.1 + 2.0 * rng.unit();
    const double sign = c.op == CompareOp::Le ? 1.0 : -1.0;
    double prev = 2.0;
    for (int i = 0; i <= 300; ++i) {
      const double d = -1.3 + 2.6 * i / 300.0;
      const double s = score_of(c, c.compare_value + sign * d * c.ramp_width);
      CHECK(s <= prev + 1e-12);
      prev = s;
    }
  }
}

TEST_CASE("equality satisfaction is unimodal with the peak at the compare value") {
  CompareConstraint c;
  c.name = "eq";
  c.variable = "x";
  c.op = CompareOp::Eq;
  c.compare_value = 4.0;
  c.ramp_width = 2.0;
  CHECK(score_of(c, 4.0) == 1.0);
  double prev = -1.0;
  for (int i = 0; i <= 100; ++i) {  // rising toward the peak
    const double s = score_of(c, 1.5 + i * (4.0 - 1.5) / 100.0);
    CHECK(s >= prev - 1e-12);
    prev = s;
  }
  prev = 2.0;
  for (int i = 0; i <= 100; ++i) {  // falling after the peak
    const double s = score_of(c, 4.0 + i * 2.5 / 100.0);
    CHECK(s <= prev + 1e-12);
    prev = s;
  }
}

namespace {

SetOfConstraints linear_pair_set(ConcatOp op, double importance_a = 1.0,
                                 double importance_b = 1.0) {
  SetOfConstraints s;
  s.name = "pair";
  fuzzy::LinguisticVariable x;
  x.name = "a";
  x.lo = -10.0;
  x.hi = 10.0;
  x.terms.emplace("any", fuzzy::MembershipFunction::plateau(-10.0, 10.0, 1.0));
  fuzzy::LinguisticVariable y = x;
  y.name = "b";
  s.parameter_set = {x, y};

  CompareConstraint ca;
  ca.name = "ca";
  ca.variable = "a";
  ca.op = CompareOp::Le;
  ca.compare_value = 0.0;
  ca.ramp_width = 1.0;
  ca.curve = Curve::Linear;
  ca.importance = importance_a;
  CompareConstraint cb = ca;
  cb.name = "cb";
  cb.variable = "b";
  cb.importance = importance_b;

  ConcatConstraint root;
  root.name = "both";
  root.op = op;
  root.left = make_node(ca);
  root.right = make_node(cb);
  s.roots.push_back(make_node(root));
  return s;
}

}  // namespace

TEST_CASE("set evaluation and hard barriers") {
  SUBCASE("single satisfied compare") {
    SetOfConstraints s = linear_pair_set(ConcatOp::And);
    s.roots = {s.roots[0]->concat().left};
    const auto eval = evaluate_set(s, {{"a", FuzzyValue::crisp(-1.0)}});
    CHECK(eval.valid);
    CHECK(eval.score == 1.0);
  }

  SUBCASE("AND(min) with one hard-violated leaf invalidates the set") {
    const SetOfConstraints s = linear_pair_set(ConcatOp::And);
    const auto eval =
        evaluate_set(s, {{"a", FuzzyValue::crisp(-1.0)}, {"b", FuzzyValue::crisp(2.0)}});
    CHECK_FALSE(eval.valid);
    CHECK(eval.score == 0.0);
    CHECK(eval.roots[0].children[0].hard_violation == false);
    CHECK(eval.roots[0].children[1].hard_violation == true);
    CHECK(eval.roots[0].children[1].score == 0.0);
  }

  SUBCASE("OR(max) keeps the better branch but the barrier still invalidates") {
    const SetOfConstraints s = linear_pair_set(ConcatOp::Or);
    const auto eval =
        evaluate_set(s, {{"a", FuzzyValue::crisp(2.0)}, {"b", FuzzyValue::crisp(0.3)}});
    CHECK(eval.roots[0].score == doctest::Approx(0.7).epsilon(1e-15));
    CHECK_FALSE(eval.valid);
  }

  SUBCASE("zero-importance leaves cannot raise hard barriers") {
    const SetOfConstraints s = linear_pair_set(ConcatOp::Or, 1.0, 0.0);
    const auto eval =
        evaluate_set(s, {{"a", FuzzyValue::crisp(-1.0)}, {"b", FuzzyValue::crisp(5.0)}});
    CHECK(eval.valid);
    CHECK(eval.roots[0].children[1].hard_violation == false);
  }

  SUBCASE("missing binding") {
    const SetOfConstraints s = linear_pair_set(ConcatOp::And);
    CHECK_THROWS_AS(evaluate_set(s, {{"a", FuzzyValue::crisp(0.0)}}), UnboundVariable);
  }

  SUBCASE("crisp binding outside the declared universe") {
    const SetOfConstraints s = linear_pair_set(ConcatOp::And);
    CHECK_THROWS_AS(
        evaluate_set(s, {{"a", FuzzyValue::crisp(50.0)}, {"b", FuzzyValue::crisp(0.0)}}),
        fuzzy::OutOfUniverse);
  }
}

TEST_CASE("concat truth table against the hand rule (equal importances)") {
  const double values[] = {0.0, 0.3, 0.7, 1.0};
  for (double sa : values) {
    for (double sb : values) {
      for (ConcatOp op : {ConcatOp::And, ConcatOp::Or}) {
        const SetOfConstraints s = linear_pair_set(op);
        // linear curve: score = 1 - value for values in [0, 1]
        const auto eval = evaluate_set(
            s, {{"a", FuzzyValue::crisp(1.0 - sa)}, {"b", FuzzyValue::crisp(1.0 - sb)}});
        const double expect = op == ConcatOp::And ? std::min(sa, sb) : std::max(sa, sb);
        CHECK(eval.roots[0].score == doctest::Approx(expect).epsilon(1e-12));
        const bool expect_valid = sa > 0.0 && sb > 0.0;
        CHECK(eval.valid == expect_valid);
      }
    }
  }
}

TEST_CASE("min aggregation over roots never exceeds any root score") {
  Rng rng(5);
  for (int iter = 0; iter < 200; ++iter) {
    SetOfConstraints s = linear_pair_set(ConcatOp::And);
    s.operator_set.aggregation = fuzzy::Aggregation::Min;
    s.roots = {s.roots[0]->concat().left, s.roots[0]->concat().right};
    const auto eval = evaluate_set(s, {{"a", FuzzyValue::crisp(rng.unit() * 2.0)},
                                       {"b", FuzzyValue::crisp(rng.unit() * 2.0)}});
    for (const auto& root : eval.roots) CHECK(eval.score <= root.score + 1e-15);
  }
}

TEST_CASE("soften and harden") {
  SUBCASE("factor 1 is the identity") {
    const SetOfConstraints s = linear_pair_set(ConcatOp::And);
    const SetOfConstraints same = soften_harden(s, 1.0);
    CHECK(same.roots[0]->concat().left->compare() == s.roots[0]->concat().left->compare());
  }

  SUBCASE("factor 2 lifts the old full-ramp point to the half-ramp golden") {
    CompareConstraint c;
    c.name = "soft";
    c.variable = "x";
    c.op = CompareOp::Le;
    c.compare_value = 0.0;
    c.ramp_width = 1.0;
    CHECK(score_of(c, 1.0) == 0.0);
    SetOfConstraints s;
    s.name = "soften";
    fuzzy::LinguisticVariable x;
    x.name = "x";
    x.lo = -10.0;
    x.hi = 10.0;
    x.terms.emplace("any", fuzzy::MembershipFunction::plateau(-10.0, 10.0, 1.0));
    s.parameter_set = {x};
    s.roots.push_back(make_node(c));
    const SetOfConstraints softened = soften_harden(s, 2.0);
    const double after = score_of(softened.roots[0]->compare(), 1.0);
    CHECK(after == doctest::Approx(0.35).epsilon(1e-9));  // pipeline golden at d = 0.5
  }

  SUBCASE("hardening never raises a violating score") {
    CompareConstraint c;
    c.name = "hard";
    c.variable = "x";
    c.op = CompareOp::Le;
    c.compare_value = 0.0;
    c.ramp_width = 1.0;
    CompareConstraint harder = c;
    harder.ramp_width *= 0.5;
    for (double v = 0.0; v <= 2.0; v += 0.05) {
      CHECK(score_of(harder, v) <= score_of(c, v) + 1e-12);
    }
  }

  SUBCASE("individually tuned constraints are exempt") {
    SetOfConstraints s = linear_pair_set(ConcatOp::And);
    CompareConstraint tuned = s.roots[0]->concat().left->compare();
    tuned.tuned = true;
    ConcatConstraint root = s.roots[0]->concat();
    root.left = make_node(tuned);
    s.roots = {make_node(root)};
    const SetOfConstraints softened = soften_harden(s, 3.0);
    CHECK(softened.roots[0]->concat().left->compare().ramp_width == tuned.ramp_width);
    CHECK(softened.roots[0]->concat().right->compare().ramp_width ==
          3.0 * s.roots[0]->concat().right->compare().ramp_width);
  }

  SUBCASE("non-positive factors are rejected") {
    const SetOfConstraints s = linear_pair_set(ConcatOp::And);
    CHECK_THROWS_AS(soften_harden(s, 0.0), NonPositiveFactor);
    CHECK_THROWS_AS(soften_harden(s, -1.0), NonPositiveFactor);
  }
}

TEST_CASE("serialize, parse, evaluate: identical scores") {
  KnowledgeBase kb;
  kb.name = "static-roundtrip";
  kb.constraint_sets.push_back(linear_pair_set(ConcatOp::And));

  const KnowledgeBase back = io::kb_from_json(io::kb_to_json(kb));
  const Bindings bindings = {{"a", FuzzyValue::crisp(0.4)}, {"b", FuzzyValue::crisp(0.9)}};
  const auto before = evaluate_set(kb.constraint_sets[0], bindings);
  const auto after = evaluate_set(back.constraint_sets[0], bindings);
  CHECK(before.score == after.score);  // bit-identical
  CHECK(before.valid == after.valid);
}

TEST_CASE("possibilistic bindings run through the same pipeline") {
  const auto c = alu_constraint();
  // a distribution entirely inside the satisfied region stays at 1
  const auto low = fuzzy::MembershipFunction::triangle(0.02, 0.04, 0.06);
  CHECK(evaluate_compare(c, FuzzyValue::distribution(low), {}) == 1.0);
  // mass beyond the full ramp drags the score strictly below the crisp value
  const auto wide = fuzzy::MembershipFunction::triangle(0.06, 0.10, 0.18);
  const double spread = evaluate_compare(c, FuzzyValue::distribution(wide), {});
  CHECK(spread > 0.0);
  CHECK(spread < 1.0);
}

TEST_CASE("set validation catches structural defects") {
  SetOfConstraints s = linear_pair_set(ConcatOp::And);
  CHECK_NOTHROW(s.validate());

  SUBCASE("unknown variable") {
    CompareConstraint c = s.roots[0]->concat().left->compare();
    c.variable = "ghost";
    c.name = "ghost-ref";
    s.roots.push_back(make_node(c));
    CHECK_THROWS_AS(s.validate(), Error);
  }
  SUBCASE("duplicate names") {
    s.roots.push_back(s.roots[0]);
    CHECK_THROWS_AS(s.validate(), Error);
  }
}
