#pragma once

#include <span>
#include <string>

#include "fuzzopt/error.hpp"

namespace fuzzopt::fuzzy {

struct EmptyInput : Error {
  using Error::Error;
};
struct AllZeroWeights : Error {
  using Error::Error;
};

enum class AndOp { Min, Product };
enum class OrOp { Max, ProbSum };
enum class Aggregation { Min, Max, WeightedMean, ExponentWeightedMin };
enum class Defuzz { Centroid, MeanOfMaxima };
enum class Weighing { Normalized, Raw };

/// Operator choices shared by a whole knowledge base. Serializes to JSON and
/// round-trips exactly.
struct OperatorSet {
  AndOp and_op = AndOp::Min;
  OrOp or_op = OrOp::Max;
  Aggregation aggregation = Aggregation::WeightedMean;
  Defuzz defuzz = Defuzz::Centroid;
  Weighing weighing = Weighing::Normalized;

  friend bool operator==(const OperatorSet&, const OperatorSet&) = default;
};

double apply_and(AndOp op, double a, double b);
double apply_or(OrOp op, double a, double b);

struct Scored {
  double score;
  double weight;
};

/// Combines scored, weighted inputs into one score in [0, 1].
///
/// min/max ignore the weights. weighted-mean is sum(w*s)/sum(w). The
/// exponent-weighted scheme raises scores of unimportant inputs toward 1
/// before taking the minimum: min over s_i^(w_i / max_w) when weighing is
/// normalized, min over s_i^w_i when raw.
double aggregate(const OperatorSet& ops, std::span<const Scored> inputs);

std::string to_string(AndOp);
std::string to_string(OrOp);
std::string to_string(Aggregation);
std::string to_string(Defuzz);
std::string to_string(Weighing);
AndOp and_op_from_string(const std::string&);
OrOp or_op_from_string(const std::string&);
Aggregation aggregation_from_string(const std::string&);
Defuzz defuzz_from_string(const std::string&);
Weighing weighing_from_string(const std::string&);

}  // namespace fuzzopt::fuzzy
