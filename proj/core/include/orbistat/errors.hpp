#pragma once

#include <stdexcept>
#include <string>

namespace orbistat {

// Bad input: malformed config, violated precondition, out-of-contract argument.
// The CLI maps this to exit code 2.
class validation_error : public std::runtime_error {
 public:
  explicit validation_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A computation could not be completed within stated resource limits
// (group closure cap, factorization degree cap, enumeration budget).
// The CLI maps this to exit code 1.
class resource_error : public std::runtime_error {
 public:
  explicit resource_error(const std::string& msg) : std::runtime_error(msg) {}
};

// An arithmetic routine could not certify its result (e.g. a cofactor
// survived trial division and failed the primality test).
class incomplete_factorization : public std::runtime_error {
 public:
  explicit incomplete_factorization(const std::string& msg)
      : std::runtime_error(msg) {}
};

}  // namespace orbistat
