#include "fuzzopt/fuzzy/operators.hpp"

#include <algorithm>
#include <cmath>

namespace fuzzopt::fuzzy {

double apply_and(AndOp op, double a, double b) {
  switch (op) {
    case AndOp::Min: return std::min(a, b);
    case AndOp::Product: return a * b;
  }
  return 0.0;
}

double apply_or(OrOp op, double a, double b) {
  switch (op) {
    case OrOp::Max: return std::max(a, b);
    case OrOp::ProbSum: return a + b - a * b;
  }
  return 0.0;
}

namespace {

double weighted_pow(double score, double exponent) {
  if (exponent == 0.0) return 1.0;
  if (score == 0.0) return 0.0;
  return std::pow(score, exponent);
}

}  // namespace

double aggregate(const OperatorSet& ops, std::span<const Scored> inputs) {
  if (inputs.empty()) throw EmptyInput("aggregate over empty input");
  switch (ops.aggregation) {
    case Aggregation::Min: {
      double m = 1.0;
      for (const auto& s : inputs) m = std::min(m, s.score);
      return m;
    }
    case Aggregation::Max: {
      double m = 0.0;
      for (const auto& s : inputs) m = std::max(m, s.score);
      return m;
    }
    case Aggregation::WeightedMean: {
      double num = 0.0, den = 0.0;
      for (const auto& s : inputs) {
        num += s.weight * s.score;
        den += s.weight;
      }
      if (den == 0.0) throw AllZeroWeights("weighted-mean with all weights zero");
      return std::clamp(num / den, 0.0, 1.0);
    }
    case Aggregation::ExponentWeightedMin: {
      double max_w = 0.0;
      for (const auto& s : inputs) max_w = std::max(max_w, s.weight);
      if (max_w == 0.0) throw AllZeroWeights("exponent-weighted-min with all weights zero");
      double m = 1.0;
      for (const auto& s : inputs) {
        const double e = ops.weighing == Weighing::Normalized ? s.weight / max_w : s.weight;
        m = std::min(m, weighted_pow(s.score, e));
      }
      return m;
    }
  }
  return 0.0;
}

std::string to_string(AndOp v) { return v == AndOp::Min ? "min" : "product"; }
std::string to_string(OrOp v) { return v == OrOp::Max ? "max" : "probabilistic-sum"; }

std::string to_string(Aggregation v) {
  switch (v) {
    case Aggregation::Min: return "min";
    case Aggregation::Max: return "max";
    case Aggregation::WeightedMean: return "weighted-mean";
    case Aggregation::ExponentWeightedMin: return "exponent-weighted-min";
  }
  return "?";
}

std::string to_string(Defuzz v) { return v == Defuzz::Centroid ? "centroid" : "mean-of-maxima"; }
std::string to_string(Weighing v) { return v == Weighing::Normalized ? "normalized" : "raw"; }

namespace {
[[noreturn]] void bad_name(const char* what, const std::string& s) {
  throw Error(std::string("unknown ") + what + ": '" + s + "'");
}
}  // namespace

AndOp and_op_from_string(const std::string& s) {
  if (s == "min") return AndOp::Min;
  if (s == "product") return AndOp::Product;
  bad_name("and operator", s);
}

OrOp or_op_from_string(const std::string& s) {
  if (s == "max") return OrOp::Max;
  if (s == "probabilistic-sum") return OrOp::ProbSum;
  bad_name("or operator", s);
}

Aggregation aggregation_from_string(const std::string& s) {
  if (s == "min") return Aggregation::Min;
  if (s == "max") return Aggregation::Max;
  if (s == "weighted-mean") return Aggregation::WeightedMean;
  if (s == "exponent-weighted-min") return Aggregation::ExponentWeightedMin;
  bad_name("aggregation operator", s);
}

Defuzz defuzz_from_string(const std::string& s) {
  if (s == "centroid") return Defuzz::Centroid;
  if (s == "mean-of-maxima") return Defuzz::MeanOfMaxima;
  bad_name("defuzzification method", s);
}

Weighing weighing_from_string(const std::string& s) {
  if (s == "normalized") return Weighing::Normalized;
  if (s == "raw") return Weighing::Raw;
  bad_name("weighing scheme", s);
}

}  // namespace fuzzopt::fuzzy
