#include "orbistat/config_io.hpp"

#include <fstream>
#include <limits>

#include "orbistat/errors.hpp"
#include "orbistat/registry.hpp"

namespace orbistat::config {
namespace {

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
  throw validation_error("config: " + path + ": " + msg);
}

std::string idx(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

std::string key(const std::string& path, const std::string& k) {
  return path.empty() ? k : path + "." + k;
}

const json& need(const json& j, const std::string& k, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(k);
  if (it == j.end()) fail(key(path, k), "missing");
  return *it;
}

const json* opt(const json& j, const std::string& k, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(k);
  return it == j.end() ? nullptr : &*it;
}

Int int_from_json(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_number_unsigned()) return Int(j.get<std::uint64_t>());
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>());
    } catch (const std::exception&) {
      fail(path, "not an integer: \"" + j.get<std::string>() + "\"");
    }
  }
  fail(path, "expected an integer or a decimal string");
}

std::int64_t i64_from_json(const json& j, const std::string& path) {
  if (j.is_number_integer()) return j.get<std::int64_t>();
  if (j.is_number_unsigned()) {
    auto u = j.get<std::uint64_t>();
    if (u > 0x7fffffffffffffffULL) fail(path, "out of range");
    return static_cast<std::int64_t>(u);
  }
  fail(path, "expected an integer");
}

std::vector<std::int64_t> i64_list(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of integers");
  std::vector<std::int64_t> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(i64_from_json(j[i], idx(path, i)));
  return out;
}

std::vector<Int> coeffs_from_json(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected a coefficient array");
  std::vector<Int> c;
  c.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i)
    c.push_back(int_from_json(j[i], idx(path, i)));
  return c;
}

json int_to_json(const Int& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return to_string(v);
}

groups::Perm perm_from_json(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected a permutation (image array)");
  groups::Perm p;
  p.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    auto v = i64_from_json(j[i], idx(path, i));
    if (v < 0 || v > 1000000) fail(idx(path, i), "image out of range");
    p.push_back(static_cast<int>(v));
  }
  return p;
}

std::vector<groups::Perm> perm_list(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of permutations");
  std::vector<groups::Perm> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(perm_from_json(j[i], idx(path, i)));
  return out;
}

}  // namespace

poly::IntPoly poly_from_json(const json& j, const std::string& path) {
  return poly::IntPoly(coeffs_from_json(j, path));
}

json poly_to_json(const poly::IntPoly& f) {
  json out = json::array();
  for (const auto& c : f.coeffs()) out.push_back(int_to_json(c));
  return out;
}

poly::BinaryForm form_from_json(const json& j, const std::string& path) {
  auto c = coeffs_from_json(j, path);
  if (c.empty()) fail(path, "form needs coefficients");
  poly::BinaryForm f(std::move(c));
  if (f.is_zero()) fail(path, "zero form");
  return f;
}

json form_to_json(const poly::BinaryForm& g) {
  json out = json::array();
  for (const auto& c : g.coeffs()) out.push_back(int_to_json(c));
  return out;
}

Rat rat_from_json(const json& j, const std::string& path) {
  if (j.is_number_integer() || j.is_number_unsigned())
    return Rat(int_from_json(j, path));
  if (j.is_string()) {
    auto s = j.get<std::string>();
    auto slash = s.find('/');
    try {
      if (slash == std::string::npos) return Rat(Int(s));
      Int den(s.substr(slash + 1));
      if (den == 0) fail(path, "zero denominator");
      return Rat(Int(s.substr(0, slash)), den);
    } catch (const validation_error&) {
      throw;
    } catch (const std::exception&) {
      fail(path, "not a rational: \"" + s + "\"");
    }
  }
  fail(path, "expected an integer or \"a/b\"");
}

json rat_to_json(const Rat& r) {
  if (rat_den(r) == 1) return int_to_json(rat_num(r));
  return to_string(r);
}

frob::FrobenianSet frobenian_from_json(const json& j, const std::string& path) {
  const auto& kj = need(j, "kind", path);
  if (!kj.is_string()) fail(key(path, "kind"), "expected a string");
  auto kind = kj.get<std::string>();
  frob::FrobenianSet s = frob::FrobenianSet::all_primes();
  if (kind == "all") {
  } else if (kind == "has_root") {
    s = frob::FrobenianSet::has_root(
        poly_from_json(need(j, "poly", path), key(path, "poly")));
  } else if (kind == "root_count") {
    auto m = i64_from_json(need(j, "count", path), key(path, "count"));
    if (m < 0) fail(key(path, "count"), "negative");
    s = frob::FrobenianSet::root_count(
        poly_from_json(need(j, "poly", path), key(path, "poly")),
        static_cast<int>(m));
  } else if (kind == "splits_completely") {
    s = frob::FrobenianSet::splits_completely(
        poly_from_json(need(j, "poly", path), key(path, "poly")));
  } else if (kind == "intersection") {
    const auto& sets = need(j, "sets", path);
    if (!sets.is_array() || sets.empty())
      fail(key(path, "sets"), "expected a non-empty array");
    std::vector<frob::FrobenianSet> children;
    for (std::size_t i = 0; i < sets.size(); ++i)
      children.push_back(frobenian_from_json(sets[i], idx(key(path, "sets"), i)));
    s = frob::FrobenianSet::intersection(std::move(children));
  } else if (kind == "complement") {
    s = frob::FrobenianSet::complement(
        frobenian_from_json(need(j, "of", path), key(path, "of")));
  } else {
    fail(key(path, "kind"), "unknown kind \"" + kind + "\"");
  }
  if (const auto* ex = opt(j, "excluded", path))
    s = s.with_excluded(i64_list(*ex, key(path, "excluded")));
  return s;
}

json frobenian_to_json(const frob::FrobenianSet& s) {
  json out = json::object();
  switch (s.kind()) {
    case frob::FrobenianSet::Kind::all:
      out["kind"] = "all";
      break;
    case frob::FrobenianSet::Kind::has_root:
      out["kind"] = "has_root";
      out["poly"] = poly_to_json(s.polynomial());
      break;
    case frob::FrobenianSet::Kind::root_count:
      out["kind"] = "root_count";
      out["poly"] = poly_to_json(s.polynomial());
      out["count"] = s.target_count();
      break;
    case frob::FrobenianSet::Kind::splits_completely:
      out["kind"] = "splits_completely";
      out["poly"] = poly_to_json(s.polynomial());
      break;
    case frob::FrobenianSet::Kind::intersection: {
      out["kind"] = "intersection";
      json sets = json::array();
      for (const auto& c : s.children()) sets.push_back(frobenian_to_json(c));
      out["sets"] = std::move(sets);
      break;
    }
    case frob::FrobenianSet::Kind::complement:
      out["kind"] = "complement";
      out["of"] = frobenian_to_json(s.children().front());
      break;
  }
  if (!s.excluded().empty())
    out["excluded"] = std::vector<std::int64_t>(s.excluded().begin(),
                                                s.excluded().end());
  return out;
}

orb::FibrationDescriptor descriptor_from_json(const json& j) {
  orb::FibrationDescriptor d;
  const auto& name = need(j, "name", "");
  if (!name.is_string()) fail("name", "expected a string");
  d.name = name.get<std::string>();
  if (const auto* bad = opt(j, "bad_primes", ""))
    for (auto p : i64_list(*bad, "bad_primes")) d.bad_primes.insert(p);
  const auto& points = need(j, "points", "");
  if (!points.is_array()) fail("points", "expected an array");
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto& pj = points[i];
    auto ppath = idx("points", i);
    orb::ClosedPointFibre f;
    f.form = form_from_json(need(pj, "form", ppath), key(ppath, "form"));
    if (const auto* sp = opt(pj, "split", ppath)) {
      if (!sp->is_boolean()) fail(key(ppath, "split"), "expected a boolean");
      f.split = sp->get<bool>();
    }
    if (const auto* comps = opt(pj, "components", ppath)) {
      if (!comps->is_array()) fail(key(ppath, "components"), "expected an array");
      for (std::size_t c = 0; c < comps->size(); ++c) {
        const auto& cj = (*comps)[c];
        auto cpath = idx(key(ppath, "components"), c);
        orb::Component comp;
        const auto& label = need(cj, "label", cpath);
        if (!label.is_string()) fail(key(cpath, "label"), "expected a string");
        comp.label = label.get<std::string>();
        if (const auto* m = opt(cj, "multiplicity", cpath)) {
          auto v = i64_from_json(*m, key(cpath, "multiplicity"));
          if (v < 1 || v > 1000000) fail(key(cpath, "multiplicity"), "out of range");
          comp.multiplicity = static_cast<int>(v);
        }
        comp.field_poly =
            poly_from_json(need(cj, "field", cpath), key(cpath, "field"));
        f.components.push_back(std::move(comp));
      }
    }
    if (const auto* mm = opt(pj, "min_mult_field", ppath))
      f.min_mult_field = poly_from_json(*mm, key(ppath, "min_mult_field"));
    else if (!f.components.empty())
      fail(key(ppath, "min_mult_field"), "missing");
    if (const auto* ints = opt(pj, "intersections", ppath)) {
      if (!ints->is_array()) fail(key(ppath, "intersections"), "expected an array");
      for (std::size_t c = 0; c < ints->size(); ++c) {
        auto pair = i64_list((*ints)[c], idx(key(ppath, "intersections"), c));
        if (pair.size() != 2)
          fail(idx(key(ppath, "intersections"), c), "expected a pair [i, j]");
        f.intersections.emplace_back(static_cast<int>(pair[0]),
                                     static_cast<int>(pair[1]));
      }
    }
    d.points.push_back(std::move(f));
  }
  d.validate_and_fold();
  return d;
}

json descriptor_to_json(const orb::FibrationDescriptor& d) {
  json out = json::object();
  out["name"] = d.name;
  out["bad_primes"] =
      std::vector<std::int64_t>(d.bad_primes.begin(), d.bad_primes.end());
  json points = json::array();
  for (const auto& f : d.points) {
    json pj = json::object();
    pj["form"] = form_to_json(f.form);
    if (f.split) pj["split"] = true;
    json comps = json::array();
    for (const auto& c : f.components) {
      json cj = json::object();
      cj["label"] = c.label;
      cj["multiplicity"] = c.multiplicity;
      cj["field"] = poly_to_json(c.field_poly);
      comps.push_back(std::move(cj));
    }
    pj["components"] = std::move(comps);
    if (!f.components.empty())
      pj["min_mult_field"] = poly_to_json(f.min_mult_field);
    if (!f.intersections.empty()) {
      json ints = json::array();
      for (const auto& [a, b] : f.intersections)
        ints.push_back(json::array({a, b}));
      pj["intersections"] = std::move(ints);
    }
    points.push_back(std::move(pj));
  }
  out["points"] = std::move(points);
  return out;
}

count::PairCountSpec pair_spec_from_json(const json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  count::PairCountSpec spec;
  if (const auto* m0 = opt(j, "m0", path)) {
    auto v = i64_from_json(*m0, key(path, "m0"));
    if (v < 1 || v > 64) fail(key(path, "m0"), "out of range");
    spec.m0 = static_cast<int>(v);
  }
  if (const auto* m1 = opt(j, "m1", path)) {
    auto v = i64_from_json(*m1, key(path, "m1"));
    if (v < 1 || v > 64) fail(key(path, "m1"), "out of range");
    spec.m1 = static_cast<int>(v);
  }
  if (const auto* p0 = opt(j, "P0", path))
    spec.P0 = frobenian_from_json(*p0, key(path, "P0"));
  if (const auto* p1 = opt(j, "P1", path))
    spec.P1 = frobenian_from_json(*p1, key(path, "P1"));
  if (const auto* s = opt(j, "S", path)) spec.S = i64_list(*s, key(path, "S"));
  if (const auto* d0 = opt(j, "density0", path))
    spec.density0 = rat_from_json(*d0, key(path, "density0"));
  if (const auto* d1 = opt(j, "density1", path))
    spec.density1 = rat_from_json(*d1, key(path, "density1"));
  spec.validate();
  return spec;
}

json pair_spec_to_json(const count::PairCountSpec& spec) {
  json out = json::object();
  out["m0"] = spec.m0;
  out["m1"] = spec.m1;
  out["P0"] = frobenian_to_json(spec.P0);
  out["P1"] = frobenian_to_json(spec.P1);
  out["S"] = spec.S;
  out["density0"] = rat_to_json(spec.density0);
  out["density1"] = rat_to_json(spec.density1);
  return out;
}

GroupData group_data_from_json(const json& j) {
  auto deg = i64_from_json(need(j, "degree", ""), "degree");
  if (deg < 1 || deg > 64) fail("degree", "out of range");
  auto gens = perm_list(need(j, "generators", ""), "generators");
  GroupData out{groups::FiniteGroup::close_generators(static_cast<int>(deg), gens),
                {},
                {}};
  if (const auto* h1 = opt(j, "h1", "")) out.h1 = perm_list(*h1, "h1");
  if (const auto* h2 = opt(j, "h2", "")) out.h2 = perm_list(*h2, "h2");
  return out;
}

CountTask count_task_from_json(const json& j) {
  CountTask task;
  const auto& kind = need(j, "kind", "");
  if (!kind.is_string()) fail("kind", "expected a string");
  task.kind = kind.get<std::string>();
  task.grid = i64_list(need(j, "grid", ""), "grid");
  if (task.grid.empty()) fail("grid", "empty");
  for (std::size_t i = 0; i < task.grid.size(); ++i) {
    if (task.grid[i] < 1) fail(idx("grid", i), "heights must be positive");
    if (i > 0 && task.grid[i] <= task.grid[i - 1])
      fail(idx("grid", i), "heights must increase");
  }
  if (task.kind == "pairs") {
    task.pair_spec = pair_spec_from_json(need(j, "spec", ""), "spec");
  } else if (task.kind == "local") {
    if (const auto* reg = opt(j, "registry", "")) {
      if (!reg->is_string()) fail("registry", "expected a string");
      const auto& entry = registry::lookup(reg->get<std::string>());
      task.descriptor = entry.descriptor;
      task.mode = entry.default_mode;
    } else {
      task.descriptor = descriptor_from_json(need(j, "descriptor", ""));
    }
    if (const auto* mode = opt(j, "mode", "")) {
      if (!mode->is_string()) fail("mode", "expected a string");
      task.mode = sol::mode_from_string(mode->get<std::string>());
    }
  } else if (task.kind == "support") {
    task.support = frobenian_from_json(need(j, "set", ""), "set");
    task.support_density = rat_from_json(need(j, "density", ""), "density");
    if (const auto* s = opt(j, "S", "")) task.support_s = i64_list(*s, "S");
  } else if (task.kind == "beta") {
    task.beta_field = poly_from_json(need(j, "field", ""), "field");
  } else {
    fail("kind", "unknown kind \"" + task.kind +
                     "\" (pairs, local, support, beta)");
  }
  return task;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw validation_error("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw validation_error(path + ": " + e.what());
  }
}

orb::FibrationDescriptor load_descriptor(const std::string& spec) {
  const std::string prefix = "registry:";
  if (spec.rfind(prefix, 0) == 0)
    return registry::lookup(spec.substr(prefix.size())).descriptor;
  return descriptor_from_json(load_json_file(spec));
}

}  // namespace orbistat::config
