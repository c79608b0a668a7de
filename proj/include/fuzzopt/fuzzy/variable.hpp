#pragma once

#include <map>
#include <string>
#include <variant>

#include "fuzzopt/fuzzy/membership.hpp"

namespace fuzzopt::fuzzy {

struct OutOfUniverse : Error {
  using Error::Error;
};

/// Named variable whose values are terms (words) backed by fuzzy sets over a
/// real universe [lo, hi].
struct LinguisticVariable {
  std::string name;
  double lo = 0.0;
  double hi = 1.0;
  std::map<std::string, MembershipFunction> terms;

  void validate() const;
  friend bool operator==(const LinguisticVariable&, const LinguisticVariable&) = default;
};

/// Either a crisp number or a possibility distribution over the universe.
/// Distributions are normalized to peak grade 1 on construction.
class FuzzyValue {
 public:
  static FuzzyValue crisp(double x) { return FuzzyValue(x); }
  static FuzzyValue distribution(MembershipFunction mf) { return FuzzyValue(mf.normalized()); }

  bool is_crisp() const { return std::holds_alternative<double>(v_); }
  double crisp_value() const { return std::get<double>(v_); }
  const MembershipFunction& dist() const { return std::get<MembershipFunction>(v_); }

  /// Representative real value: the number itself, or the distribution's
  /// center of gravity.
  double representative() const;

 private:
  explicit FuzzyValue(double x) : v_(x) {}
  explicit FuzzyValue(MembershipFunction mf) : v_(std::move(mf)) {}
  std::variant<double, MembershipFunction> v_;
};

using TermDegrees = std::map<std::string, double>;

/// Matches a value against every term of the variable. Crisp inputs use the
/// membership grade directly; distributions use sup-min (possibilistic)
/// matching. Throws OutOfUniverse for inputs outside [lo, hi].
TermDegrees fuzzify(const LinguisticVariable& var, const FuzzyValue& value);

}  // namespace fuzzopt::fuzzy
