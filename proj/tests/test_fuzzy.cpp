#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fuzzopt/fuzzy/rules.hpp"
#include "fuzzopt/io/json_io.hpp"
#include "fuzzopt/util/rng.hpp"
#include "oracles.hpp"

using namespace fuzzopt;
using fuzzy::FuzzyValue;
using fuzzy::LinguisticVariable;
using fuzzy::MembershipFunction;

namespace {

MembershipFunction random_mf(Rng& rng, double lo, double hi) {
  const int n = 2 + rng.below_int(5);
  std::vector<fuzzy::Vertex> v;
  double x = lo;
  const double gap = (hi - lo) / (n + 1);
  for (int i = 0; i < n; ++i) {
    x += gap * (0.2 + 0.8 * rng.unit());
    v.push_back({x, rng.unit()});
  }
  return MembershipFunction(std::move(v));
}

LinguisticVariable low_high_var() {
  LinguisticVariable var;
  var.name = "level";
  var.lo = 0.0;
  var.hi = 1.0;
  var.terms.emplace("low", MembershipFunction::triangle(0.0, 0.0, 1.0));
  var.terms.emplace("high", MembershipFunction::triangle(0.0, 1.0, 1.0));
  return var;
}

}  // namespace

TEST_CASE("membership grade of a triangle") {
  const auto tri = MembershipFunction::triangle(0.0, 1.0, 2.0);
  CHECK(tri(1.0) == 1.0);   // apex
  CHECK(tri(3.0) == 0.0);   // outside the support
  CHECK(tri(0.5) == 0.5);   // linear interpolation
  CHECK(tri(-1.0) == 0.0);
  CHECK(tri(1.5) == 0.5);
}

TEST_CASE("boundary grades are held toward infinity") {
  const MembershipFunction shoulder({{0.0, 1.0}, {1.0, 0.0}});
  CHECK(shoulder(-100.0) == 1.0);
  CHECK(shoulder(2.0) == 0.0);
  const MembershipFunction rising({{0.0, 0.0}, {1.0, 1.0}});
  CHECK(rising(5.0) == 1.0);
}

TEST_CASE("invalid vertex lists are rejected") {
  CHECK_THROWS_AS(MembershipFunction({{0.0, 0.5}}), Error);
  CHECK_THROWS_AS(MembershipFunction({{0.0, 0.0}, {0.0, 1.0}}), Error);
  CHECK_THROWS_AS(MembershipFunction({{0.0, 0.0}, {1.0, 1.5}}), Error);
}

TEST_CASE("membership is Lipschitz in x (continuity property)") {
  Rng rng(7);
  for (int iter = 0; iter < 200; ++iter) {
    const auto mf = random_mf(rng, -3.0, 3.0);
    double max_slope = 0.0;
    const auto& v = mf.vertices();
    for (std::size_t i = 1; i < v.size(); ++i) {
      max_slope = std::max(max_slope, std::abs(v[i].mu - v[i - 1].mu) / (v[i].x - v[i - 1].x));
    }
    const double eps = 1e-4;
    for (int k = 0; k < 50; ++k) {
      const double x = -3.5 + 7.0 * rng.unit();
      CHECK(std::abs(mf(x) - mf(x + eps)) <= max_slope * eps + 1e-12);
    }
  }
}

TEST_CASE("fuzzify crisp values") {
  const auto var = low_high_var();
  const auto at0 = fuzzy::fuzzify(var, FuzzyValue::crisp(0.0));
  CHECK(at0.at("low") == 1.0);
  CHECK(at0.at("high") == 0.0);
  const auto at_half = fuzzy::fuzzify(var, FuzzyValue::crisp(0.5));
  CHECK(at_half.at("low") == 0.5);
  CHECK(at_half.at("high") == 0.5);
  CHECK_THROWS_AS(fuzzy::fuzzify(var, FuzzyValue::crisp(1.5)), fuzzy::OutOfUniverse);
}

TEST_CASE("crisp fuzzify equals the membership grade exactly") {
  Rng rng(11);
  auto var = low_high_var();
  var.terms.emplace("mid", MembershipFunction::triangle(0.2, 0.5, 0.8));
  for (int k = 0; k < 500; ++k) {
    const double x = rng.unit();
    const auto degrees = fuzzy::fuzzify(var, FuzzyValue::crisp(x));
    for (const auto& [term, mf] : var.terms) {
      CHECK(degrees.at(term) == mf(x));  // bit-identical, same code path
    }
  }
}

TEST_CASE("possibilistic fuzzify matches the grid sup-min oracle") {
  const auto var = low_high_var();
  const auto dist = MembershipFunction::triangle(0.25, 0.5, 0.75);
  const auto degrees = fuzzy::fuzzify(var, FuzzyValue::distribution(dist));

  // frozen from the grid oracle below: both crossings sit at grade 0.6
  CHECK(degrees.at("low") == doctest::Approx(0.6).epsilon(1e-12));
  CHECK(degrees.at("high") == doctest::Approx(0.6).epsilon(1e-12));

  for (const char* term : {"low", "high"}) {
    const double oracle = oracles::grid_sup_min(dist, var.terms.at(term), 0.0, 1.0, 1e-4);
    CHECK(degrees.at(term) == doctest::Approx(oracle).epsilon(2e-4));
    CHECK(degrees.at(term) >= oracle - 1e-12);  // grid can only undershoot the true sup
  }
}

TEST_CASE("sup-min against random distributions stays above the grid oracle") {
  Rng rng(23);
  for (int iter = 0; iter < 50; ++iter) {
    const auto a = random_mf(rng, 0.0, 1.0);
    const auto b = random_mf(rng, 0.0, 1.0);
    const double exact = MembershipFunction::sup_min(a, b);
    const double grid = oracles::grid_sup_min(a, b, -0.5, 1.5, 1e-3);
    CHECK(exact >= grid - 1e-12);
    CHECK(exact == doctest::Approx(grid).epsilon(5e-3));
  }
}

TEST_CASE("apply_rules") {
  LinguisticVariable out;
  out.name = "quality";
  out.lo = 0.0;
  out.hi = 1.0;
  out.terms.emplace("bad", MembershipFunction::triangle(0.0, 0.25, 0.5));
  out.terms.emplace("good", MembershipFunction::triangle(0.5, 0.75, 1.0));

  fuzzy::RuleSet rs;
  rs.rules.push_back({{{"level", "low"}}, fuzzy::Connective::And, "quality", "bad"});
  rs.rules.push_back({{{"level", "high"}}, fuzzy::Connective::And, "quality", "good"});

  const fuzzy::OperatorSet ops;

  SUBCASE("no rule fires: all-zero output") {
    const auto set = fuzzy::apply_rules(rs, {{"level", {{"low", 0.0}, {"high", 0.0}}}}, out, ops);
    CHECK(set.max_mu() == 0.0);
  }

  SUBCASE("full firing reproduces the consequent term exactly") {
    const auto set = fuzzy::apply_rules(rs, {{"level", {{"low", 1.0}, {"high", 0.0}}}}, out, ops);
    for (double x = 0.0; x <= 1.0; x += 1e-3) {
      CHECK(set(x) == doctest::Approx(out.terms.at("bad")(x)).epsilon(1e-12));
    }
  }

  SUBCASE("two half-fired rules combine to the pointwise max of the clipped terms") {
    const auto set = fuzzy::apply_rules(rs, {{"level", {{"low", 0.5}, {"high", 0.5}}}}, out, ops);
    for (double x = 0.0; x <= 1.0; x += 1e-3) {
      const double expect = std::max(std::min(out.terms.at("bad")(x), 0.5),
                                     std::min(out.terms.at("good")(x), 0.5));
      CHECK(set(x) == doctest::Approx(expect).epsilon(1e-9));
    }
  }

  SUBCASE("unknown antecedent variable is an error") {
    CHECK_THROWS_AS(fuzzy::apply_rules(rs, {{"other", {{"low", 1.0}}}}, out, ops),
                    fuzzy::UnresolvedVariable);
  }
}

TEST_CASE("aggregate") {
  const fuzzy::OperatorSet ops;
  using fuzzy::Aggregation;
  auto agg = [&](Aggregation a, std::vector<fuzzy::Scored> in) {
    fuzzy::OperatorSet o = ops;
    o.aggregation = a;
    return fuzzy::aggregate(o, in);
  };

  CHECK(agg(Aggregation::Min, {{0.3, 1.0}, {0.7, 2.0}}) == 0.3);
  CHECK(agg(Aggregation::Max, {{0.3, 1.0}, {0.7, 2.0}}) == 0.7);
  CHECK(agg(Aggregation::WeightedMean, {{1.0, 0.4}, {1.0, 2.5}}) == 1.0);  // idempotence
  // exponent-weighted-min: 0.81^0.5 = 0.9, so the 0.25 branch wins
  CHECK(agg(Aggregation::ExponentWeightedMin, {{0.25, 1.0}, {0.81, 0.5}}) == 0.25);

  CHECK_THROWS_AS(agg(Aggregation::Min, {}), fuzzy::EmptyInput);
  CHECK_THROWS_AS(agg(Aggregation::WeightedMean, {{0.5, 0.0}, {0.6, 0.0}}), fuzzy::AllZeroWeights);
  CHECK_THROWS_AS(agg(Aggregation::ExponentWeightedMin, {{0.5, 0.0}}), fuzzy::AllZeroWeights);
}

TEST_CASE("aggregation ordering: min <= weighted-mean <= max") {
  Rng rng(101);
  fuzzy::OperatorSet o_min, o_mean, o_max;
  o_min.aggregation = fuzzy::Aggregation::Min;
  o_mean.aggregation = fuzzy::Aggregation::WeightedMean;
  o_max.aggregation = fuzzy::Aggregation::Max;
  for (int iter = 0; iter < 10000; ++iter) {
    std::vector<fuzzy::Scored> in;
    const int n = 1 + rng.below_int(6);
    for (int i = 0; i < n; ++i) in.push_back({rng.unit(), 0.01 + rng.unit()});
    const double lo = fuzzy::aggregate(o_min, in);
    const double mid = fuzzy::aggregate(o_mean, in);
    const double hi = fuzzy::aggregate(o_max, in);
    CHECK(lo <= mid + 1e-15);
    CHECK(mid <= hi + 1e-15);
  }
}

TEST_CASE("defuzzify") {
  using fuzzy::Defuzz;
  CHECK(fuzzy::defuzzify(MembershipFunction::triangle(0.0, 1.0, 2.0), Defuzz::Centroid) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(fuzzy::defuzzify(MembershipFunction::trapezoid(0.0, 1.0, 3.0, 4.0),
                         Defuzz::MeanOfMaxima) == 2.0);

  // centroid of tri(0,0,3): integral x(1-x/3) / integral (1-x/3) = 1 exactly
  const auto half = MembershipFunction::triangle(0.0, 0.0, 3.0);
  CHECK(fuzzy::defuzzify(half, Defuzz::Centroid) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(oracles::quadrature_centroid(half) == doctest::Approx(1.0).epsilon(1e-6));

  CHECK_THROWS_AS(fuzzy::defuzzify(MembershipFunction::plateau(0.0, 1.0, 0.0), Defuzz::Centroid),
                  fuzzy::DegenerateSet);
  CHECK_THROWS_AS(
      fuzzy::defuzzify(MembershipFunction::plateau(0.0, 1.0, 0.0), Defuzz::MeanOfMaxima),
      fuzzy::DegenerateSet);
}

TEST_CASE("centroid of symmetric sets sits on the symmetry axis") {
  Rng rng(31);
  for (int iter = 0; iter < 1000; ++iter) {
    // random right half, mirrored around a random axis
    const double axis = -5.0 + 10.0 * rng.unit();
    const int segments = 1 + rng.below_int(4);
    std::vector<fuzzy::Vertex> right;
    double x = axis;
    double mu = rng.unit();
    right.push_back({x, mu});
    for (int i = 0; i < segments; ++i) {
      x += 0.1 + rng.unit();
      right.push_back({x, rng.unit()});
    }
    std::vector<fuzzy::Vertex> full;
    for (auto it = right.rbegin(); it != right.rend(); ++it) {
      full.push_back({2 * axis - it->x, it->mu});
    }
    for (std::size_t i = 1; i < right.size(); ++i) full.push_back(right[i]);
    const MembershipFunction mf(std::move(full));
    if (mf.max_mu() == 0.0) continue;
    CHECK(mf.centroid() == doctest::Approx(axis).epsilon(1e-9));
  }
}

TEST_CASE("clipping and combination stay exact at crossings") {
  const auto tri = MembershipFunction::triangle(0.0, 1.0, 2.0);
  const auto clipped = tri.clipped(0.5);
  CHECK(clipped(0.5) == 0.5);
  CHECK(clipped(1.0) == 0.5);
  CHECK(clipped(0.25) == 0.25);
  const auto other = MembershipFunction::triangle(1.0, 2.0, 3.0);
  const auto combined = MembershipFunction::combine(
      tri, other, [](double a, double b) { return std::max(a, b); });
  CHECK(combined(1.5) == 0.5);  // crossing point becomes a vertex
  CHECK(combined(1.0) == 1.0);
  CHECK(combined(2.0) == 1.0);
}

TEST_CASE("distribution values are normalized on construction") {
  const auto low = MembershipFunction({{0.0, 0.0}, {1.0, 0.5}, {2.0, 0.0}});
  const auto val = FuzzyValue::distribution(low);
  CHECK(val.dist().max_mu() == 1.0);
  CHECK_THROWS_AS(FuzzyValue::distribution(MembershipFunction::plateau(0.0, 1.0, 0.0)),
                  fuzzy::DegenerateSet);
}

TEST_CASE("vocabulary and operator choices round-trip through JSON") {
  KnowledgeBase kb;
  kb.name = "roundtrip";
  kb.operator_set.and_op = fuzzy::AndOp::Product;
  kb.operator_set.or_op = fuzzy::OrOp::ProbSum;
  kb.operator_set.aggregation = fuzzy::Aggregation::ExponentWeightedMin;
  kb.operator_set.defuzz = fuzzy::Defuzz::MeanOfMaxima;
  kb.operator_set.weighing = fuzzy::Weighing::Raw;
  kb.variables.push_back(low_high_var());

  constraints::SetOfConstraints cs;
  cs.name = "static";
  cs.parameter_set.push_back(low_high_var());
  constraints::CompareConstraint c;
  c.name = "level_low";
  c.variable = "level";
  c.op = constraints::CompareOp::Le;
  c.compare_value = 0.25;
  c.ramp_width = 0.5;
  cs.roots.push_back(constraints::make_node(c));
  cs.ruleset.rules.push_back({{{"level", "low"}}, fuzzy::Connective::Or, "quality", "good"});
  kb.constraint_sets.push_back(cs);

  const KnowledgeBase back = io::kb_from_json(io::kb_to_json(kb));
  CHECK(back.operator_set == kb.operator_set);
  CHECK(back.variables.at(0) == kb.variables.at(0));
  CHECK(back.constraint_sets.at(0).ruleset == kb.constraint_sets.at(0).ruleset);
  CHECK(back.constraint_sets.at(0).roots.at(0)->compare() == cs.roots.at(0)->compare());
  CHECK(io::kb_canonical(back) == io::kb_canonical(kb));
}
