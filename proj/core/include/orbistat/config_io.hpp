#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "orbistat/counting.hpp"
#include "orbistat/fibration.hpp"
#include "orbistat/frobenian.hpp"
#include "orbistat/groups.hpp"
#include "orbistat/solubility.hpp"

namespace orbistat::config {

using json = nlohmann::json;

// Every *_from_json reports failures as validation_error with a dotted path
// into the document, e.g. "points[2].components[0].field".

// Coefficient array, constant term first; entries are integers or decimal
// strings.
poly::IntPoly poly_from_json(const json& j, const std::string& path);
json poly_to_json(const poly::IntPoly& f);

poly::BinaryForm form_from_json(const json& j, const std::string& path);
json form_to_json(const poly::BinaryForm& g);

// An integer, or a string "a" / "a/b".
Rat rat_from_json(const json& j, const std::string& path);
json rat_to_json(const Rat& r);

// {"kind": "all" | "has_root" | "root_count" | "splits_completely"
//         | "intersection" | "complement",
//  "poly": [...], "count": m, "sets": [...], "of": {...},
//  "excluded": [p, ...]}        (fields as the kind requires)
frob::FrobenianSet frobenian_from_json(const json& j, const std::string& path);
json frobenian_to_json(const frob::FrobenianSet& s);

// {"name": "...", "bad_primes": [...],
//  "points": [{"form": [...], "split": false,
//              "components": [{"label": "...", "multiplicity": m,
//                              "field": [...]}],
//              "min_mult_field": [...], "intersections": [[i, j], ...]}]}
// The result is validated and has its bad primes folded.
orb::FibrationDescriptor descriptor_from_json(const json& j);
json descriptor_to_json(const orb::FibrationDescriptor& d);

// {"m0": ..., "m1": ..., "P0": {...}, "P1": {...}, "S": [...],
//  "density0": ..., "density1": ...}; all fields optional.
count::PairCountSpec pair_spec_from_json(const json& j, const std::string& path);
json pair_spec_to_json(const count::PairCountSpec& spec);

// {"degree": n, "generators": [[...], ...], "h1": [[...]], "h2": [[...]]}
struct GroupData {
  groups::FiniteGroup G;
  std::vector<groups::Perm> h1, h2;
};
GroupData group_data_from_json(const json& j);

// One counting run over a grid of heights.
//   {"kind": "pairs",   "grid": [...], "spec": {...}}
//   {"kind": "local",   "grid": [...], "registry": "key" | "descriptor": {...},
//    "mode": "sufficient"}
//   {"kind": "support", "grid": [...], "set": {...}, "density": ...,
//    "S": [...]}
//   {"kind": "beta",    "grid": [...], "field": [...]}
struct CountTask {
  std::string kind;
  std::vector<std::int64_t> grid;
  count::PairCountSpec pair_spec;
  orb::FibrationDescriptor descriptor;
  sol::Mode mode = sol::Mode::sufficient;
  frob::FrobenianSet support = frob::FrobenianSet::all_primes();
  Rat support_density = 1;
  std::vector<std::int64_t> support_s;
  poly::IntPoly beta_field;
};
CountTask count_task_from_json(const json& j);

json load_json_file(const std::string& path);

// "registry:KEY", or a path to a descriptor document.
orb::FibrationDescriptor load_descriptor(const std::string& spec);

}  // namespace orbistat::config
