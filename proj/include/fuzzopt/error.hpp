#pragma once

#include <stdexcept>
#include <string>

namespace fuzzopt {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fuzzopt
