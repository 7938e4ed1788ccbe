#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orbistat/counting.hpp"
#include "orbistat/fibration.hpp"
#include "orbistat/solubility.hpp"

namespace orbistat::registry {

// A worked example: a fibration descriptor, the local-test mode its counts
// use, the exact invariants it should exhibit, and (when the count reduces
// to a two-sided multiplicative problem) the matching pair model.
struct Entry {
  std::string key;
  std::string summary;
  orb::FibrationDescriptor descriptor;  // validated, bad primes folded
  sol::Mode default_mode = sol::Mode::sufficient;
  Rat expected_b;                       // 2 - deg(partial)
  Rat expected_delta;
  std::optional<Rat> expected_theta;
  std::optional<count::PairCountSpec> pair_model;
  std::string growth_note;
  std::string note;
};

const std::vector<Entry>& entries();
const Entry& lookup(const std::string& key);  // validation_error when absent

// Group data for the fields appearing in the registry descriptors.
const orb::DeltaResolver& resolver();

}  // namespace orbistat::registry
