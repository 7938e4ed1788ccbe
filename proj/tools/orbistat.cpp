#include <chrono>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "orbistat/config_io.hpp"
#include "orbistat/counting.hpp"
#include "orbistat/errors.hpp"
#include "orbistat/fibration.hpp"
#include "orbistat/frobenian.hpp"
#include "orbistat/registry.hpp"
#include "orbistat/report.hpp"
#include "orbistat/sieve.hpp"
#include "orbistat/solubility.hpp"

namespace {

using namespace orbistat;
using config::json;

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == ',' || ch == ' ' || ch == '[' || ch == ']') {
      if (!cur.empty()) out.push_back(cur), cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

poly::IntPoly parse_poly_arg(const std::string& s) {
  std::vector<Int> c;
  for (const auto& tok : split_list(s)) {
    try {
      c.emplace_back(tok);
    } catch (const std::exception&) {
      throw validation_error("bad coefficient '" + tok + "' in \"" + s + "\"");
    }
  }
  if (c.empty()) throw validation_error("empty coefficient list \"" + s + "\"");
  return poly::IntPoly(std::move(c));
}

// Comma-separated heights; scientific notation accepted ("1e6,4e6").
std::vector<std::int64_t> parse_grid(const std::string& s) {
  std::vector<std::int64_t> out;
  for (const auto& tok : split_list(s)) {
    double d = 0;
    try {
      std::size_t used = 0;
      d = std::stod(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw validation_error("bad height '" + tok + "' in grid");
    }
    if (!(d >= 1 && d <= 4e18))
      throw validation_error("height '" + tok + "' out of range");
    out.push_back(static_cast<std::int64_t>(std::llround(d)));
  }
  for (std::size_t i = 1; i < out.size(); ++i)
    if (out[i] <= out[i - 1])
      throw validation_error("grid heights must increase");
  if (out.empty()) throw validation_error("empty grid");
  return out;
}

Rat parse_rat_arg(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
  } catch (const std::exception&) {
    throw validation_error("bad rational '" + s + "'");
  }
}

std::vector<std::int64_t> parse_i64_list(const std::string& s) {
  std::vector<std::int64_t> out;
  for (const auto& tok : split_list(s)) {
    try {
      out.push_back(std::stoll(tok));
    } catch (const std::exception&) {
      throw validation_error("bad integer '" + tok + "'");
    }
  }
  return out;
}

sol::RationalPoint parse_point(const std::string& s) {
  auto sep = s.find('/');
  if (sep == std::string::npos) sep = s.find(',');
  try {
    if (sep == std::string::npos) return sol::RationalPoint::make(Int(s), 1);
    return sol::RationalPoint::make(Int(s.substr(0, sep)),
                                    Int(s.substr(sep + 1)));
  } catch (const validation_error&) {
    throw;
  } catch (const std::exception&) {
    throw validation_error("bad point '" + s + "' (use a, a/b or a,b)");
  }
}

// A registry key, "registry:KEY", or a path to a descriptor document.
const registry::Entry* registry_entry_for(const std::string& target) {
  std::string key = target;
  const std::string prefix = "registry:";
  if (key.rfind(prefix, 0) == 0) key = key.substr(prefix.size());
  for (const auto& e : registry::entries())
    if (e.key == key) return &e;
  return nullptr;
}

orb::FibrationDescriptor resolve_target(const std::string& target) {
  if (const auto* e = registry_entry_for(target)) return e->descriptor;
  if (target.rfind("registry:", 0) == 0)
    return config::load_descriptor(target);  // reports the unknown key
  return config::load_descriptor(target);
}

std::string set_str(const std::set<std::int64_t>& s) {
  std::string out;
  for (auto p : s) {
    if (!out.empty()) out += ", ";
    out += std::to_string(p);
  }
  return out.empty() ? "(none)" : out;
}

void print_descriptor(const orb::FibrationDescriptor& d) {
  std::cout << "name: " << d.name << "\n";
  std::cout << "bad primes: " << set_str(d.bad_primes) << "\n";
  for (const auto& f : d.points) {
    std::cout << "  fibre " << f.form.str() << ":";
    if (f.split) {
      std::cout << " split\n";
      continue;
    }
    for (const auto& c : f.components) {
      std::cout << " " << c.label;
      if (c.multiplicity != 1) std::cout << "^" << c.multiplicity;
      if (c.field_poly.degree() > 1)
        std::cout << "/(" << c.field_poly.str() << ")";
    }
    std::cout << "\n";
  }
}

int cmd_examples(bool as_json) {
  if (as_json) {
    json out = json::array();
    for (const auto& e : registry::entries()) {
      json ej;
      ej["key"] = e.key;
      ej["summary"] = e.summary;
      ej["mode"] = sol::to_string(e.default_mode);
      ej["b"] = config::rat_to_json(e.expected_b);
      ej["delta"] = config::rat_to_json(e.expected_delta);
      if (e.expected_theta)
        ej["theta"] = config::rat_to_json(*e.expected_theta);
      if (e.pair_model) ej["pair_model"] = config::pair_spec_to_json(*e.pair_model);
      ej["growth"] = e.growth_note;
      if (!e.note.empty()) ej["note"] = e.note;
      ej["descriptor"] = config::descriptor_to_json(e.descriptor);
      out.push_back(std::move(ej));
    }
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  for (const auto& e : registry::entries()) {
    std::cout << e.key << "  (mode " << sol::to_string(e.default_mode)
              << ", b = " << to_string(e.expected_b)
              << ", Delta = " << to_string(e.expected_delta);
    if (e.expected_theta)
      std::cout << ", Theta = " << to_string(*e.expected_theta);
    std::cout << ")\n    " << e.summary << "\n    " << e.growth_note << "\n";
    if (!e.note.empty()) std::cout << "    " << e.note << "\n";
  }
  return 0;
}

int cmd_exponents(const std::string& target, bool as_json) {
  auto desc = resolve_target(target);
  const auto& R = registry::resolver();
  auto pe = orb::predicted_exponents(desc, R);
  const auto* entry = registry_entry_for(target);
  if (as_json) {
    json out;
    out["name"] = desc.name;
    out["divisor_degree"] = config::rat_to_json(pe.divisor_degree);
    out["b"] = config::rat_to_json(pe.b_exponent);
    out["anti_ample"] = pe.anti_ample;
    out["delta"] = config::rat_to_json(pe.delta);
    out["twist_degree"] = pe.twist_degree;
    if (pe.theta) {
      out["theta"] = config::rat_to_json(*pe.theta);
      out["theta_argmin"] = json::array(
          {to_string(pe.theta_argmin->first), to_string(pe.theta_argmin->second)});
    }
    out["descriptor"] = config::descriptor_to_json(desc);
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  print_descriptor(desc);
  std::cout << "orbifold divisor degree: " << to_string(pe.divisor_degree)
            << "  (b = " << to_string(pe.b_exponent) << ", "
            << (pe.anti_ample ? "anti-ample" : "not anti-ample") << ")\n";
  std::cout << "Delta = " << to_string(pe.delta) << "\n";
  if (pe.theta) {
    std::cout << "twist degree d = " << pe.twist_degree
              << ", Theta = " << to_string(*pe.theta) << " at v = ("
              << to_string(pe.theta_argmin->first) << ", "
              << to_string(pe.theta_argmin->second) << ")\n";
  } else {
    std::cout << "Theta not computed: a multiple fibre sits away from the "
                 "coordinate axes\n";
  }
  if (entry) {
    bool ok = pe.b_exponent == entry->expected_b &&
              pe.delta == entry->expected_delta &&
              (!entry->expected_theta ||
               (pe.theta && *pe.theta == *entry->expected_theta));
    std::cout << "registry expectation: "
              << (ok ? "matches" : "MISMATCH") << "\n";
    std::cout << entry->growth_note << "\n";
  }
  return 0;
}

int cmd_delta(const std::string& e_arg, const std::string& k_arg,
              const std::string& group_file, std::int64_t empirical_x,
              bool as_json) {
  if (!group_file.empty()) {
    auto gd = config::group_data_from_json(config::load_json_file(group_file));
    auto H1 = gd.h1.empty() ? groups::whole_group(gd.G)
                            : groups::subgroup_from_perms(gd.G, gd.h1);
    auto H2 = groups::subgroup_from_perms(gd.G, gd.h2);
    auto red = groups::delta_normal_closure_reduction(gd.G, H1, H2);
    if (as_json) {
      json out;
      out["order"] = gd.G.order();
      out["h1_order"] = H1.order();
      out["h2_order"] = H2.order();
      out["delta"] = config::rat_to_json(red.direct);
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << "group of order " << gd.G.order() << ", #H1 = " << H1.order()
                << ", #H2 = " << H2.order() << "\n";
      std::cout << "delta = " << to_string(red.direct)
                << " (normal-closure reduction agrees, enlarged #H1 = "
                << red.enlarged_h1_order << ")\n";
    }
    return 0;
  }
  if (e_arg.empty()) throw validation_error("delta needs --E or --group");
  auto E = parse_poly_arg(e_arg);
  auto K = k_arg.empty() ? poly::poly_x() : parse_poly_arg(k_arg);
  Rat d = registry::resolver().delta(E, K);
  json out;
  out["E"] = E.str();
  out["K"] = K.str();
  out["delta"] = config::rat_to_json(d);
  if (empirical_x > 0) {
    poly::PrimeTable table(static_cast<std::uint32_t>(empirical_x) + 1);
    auto est = frob::delta_empirical(E, K, empirical_x, table);
    out["empirical"] = est.value;
    out["empirical_x"] = empirical_x;
    out["abs_error"] = std::abs(est.value - to_double(d));
  }
  if (as_json) {
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "delta(" << E.str() << ", " << K.str()
              << ") = " << to_string(d) << "\n";
    if (empirical_x > 0)
      std::cout << "empirical over primes <= " << empirical_x << ": "
                << out["empirical"].get<double>()
                << "  (|error| = " << out["abs_error"].get<double>() << ")\n";
  }
  return 0;
}

// Largest fibre value |h_D(x0, x1)| over the descriptor at the given height.
Int max_fibre_value(const orb::FibrationDescriptor& desc, const Int& height) {
  Int best = 1;
  for (const auto& f : desc.points) {
    Int m = 0;
    for (const auto& c : f.form.coeffs()) m += abs(c);
    for (int i = 0; i < f.form.degree(); ++i) m *= height;
    best = std::max(best, m);
  }
  return best;
}

int cmd_check(const std::string& target, const std::string& point_str,
              const std::string& mode_str, const std::string& group_file) {
  if (group_file.empty() && target.empty())
    throw validation_error("check needs a descriptor target and/or --group");
  if (!group_file.empty()) {
    auto gd = config::group_data_from_json(config::load_json_file(group_file));
    const auto& G = gd.G;
    auto H1 = gd.h1.empty() ? groups::whole_group(G)
                            : groups::subgroup_from_perms(G, gd.h1);
    auto H2 = groups::subgroup_from_perms(G, gd.h2);
    std::cout << "group: order " << G.order() << ", degree " << G.degree()
              << "\n";
    auto classes = groups::conjugacy_classes(G);
    for (const auto& cls : classes) {
      auto [lhs, rhs] = groups::fixpoints_class_sum(G, H2, cls);
      if (lhs != rhs)
        throw validation_error("fixed-point identity failed on a class");
    }
    std::cout << "fixed-point identity: ok over " << classes.size()
              << " classes\n";
    auto sizes = groups::product_set_check(G, H1, H2);
    if (sizes.s * sizes.t != sizes.s_and_t * sizes.st)
      throw validation_error("product-set identity failed");
    std::cout << "product-set identity: ok (#H1 #H2 = " << sizes.s * sizes.t
              << " = #(H1 cap H2) #(H1 H2))\n";
    auto red = groups::delta_normal_closure_reduction(G, H1, H2);
    if (red.direct != red.reduced)
      throw validation_error("normal-closure reduction disagreed");
    std::cout << "normal-closure reduction: ok, delta = "
              << to_string(red.direct) << "\n";
  }
  if (target.empty()) return 0;
  auto desc = resolve_target(target);
  if (point_str.empty()) {
    print_descriptor(desc);
    auto cd = orb::canonical_degree(orb::orbifold_divisor(desc));
    std::cout << "descriptor ok: " << desc.points.size()
              << " marked fibres, divisor degree "
              << to_string(cd.divisor_degree) << "\n";
    return 0;
  }
  auto pt = parse_point(point_str);
  sol::Mode mode = sol::Mode::sufficient;
  if (const auto* e = registry_entry_for(target)) mode = e->default_mode;
  if (!mode_str.empty()) mode = sol::mode_from_string(mode_str);
  Int maxval = max_fibre_value(desc, pt.height());
  Int root = sqrt(maxval) + 2;
  if (root > 100000000)
    throw resource_error("point height beyond the factorization range");
  poly::PrimeTable table(static_cast<std::uint32_t>(
      std::max<std::int64_t>(1000, static_cast<std::int64_t>(root))));
  auto rep = sol::soluble_away_from_s(desc, pt, mode, table);
  std::cout << "point " << pt.str() << ", mode " << sol::to_string(mode) << "\n";
  if (rep.on_divisor) {
    std::cout << "lies on the marked fibre " << rep.on_divisor_point
              << " (excluded from counts)\n";
    return 0;
  }
  for (const auto& v : rep.verdicts)
    std::cout << "  p=" << v.prime << " at fibre " << v.point
              << ", valuation " << v.valuation << ": " << sol::to_string(v.outcome)
              << "\n";
  if (rep.verdicts.empty())
    std::cout << "  no primes outside the bad set meet a marked fibre\n";
  std::cout << (rep.overall ? "accepted" : "rejected") << " by the "
            << sol::to_string(mode) << " test\n";
  return 0;
}

double safe_log(double x) { return std::max(std::log(x), 1.0); }

int cmd_count(const std::string& task_file, const std::string& target,
              const std::string& support_file, const std::string& density_str,
              const std::string& s_str, const std::string& mode_str,
              const std::string& grid_str, std::int64_t cutoff,
              std::int64_t primes_bound, const std::string& out_path) {
  config::CountTask task;
  bool have = false;
  auto load_file = [&](const std::string& path) {
    auto j = config::load_json_file(path);
    if (j.is_object() && j.contains("kind")) {
      task = config::count_task_from_json(j);
    } else {
      task.kind = "local";
      task.descriptor = config::descriptor_from_json(j);
    }
  };
  if (!task_file.empty()) {
    load_file(task_file);
    have = true;
  } else if (!support_file.empty()) {
    task.kind = "support";
    task.support =
        config::frobenian_from_json(config::load_json_file(support_file), "set");
    if (density_str.empty())
      throw validation_error("count --support needs --density");
    task.support_density = parse_rat_arg(density_str);
    if (!s_str.empty()) task.support_s = parse_i64_list(s_str);
    have = true;
  } else if (!target.empty()) {
    if (const auto* e = registry_entry_for(target)) {
      task.kind = "local";
      task.descriptor = e->descriptor;
      task.mode = e->default_mode;
    } else {
      load_file(target);
    }
    have = true;
  }
  if (!have)
    throw validation_error("count needs a task file, a descriptor target, or --support");
  if (!grid_str.empty()) task.grid = parse_grid(grid_str);
  if (task.grid.empty())
    throw validation_error("no height grid: pass --B (e.g. --B 1e4,1e5)");
  if (!mode_str.empty()) task.mode = sol::mode_from_string(mode_str);
  std::int64_t maxB = task.grid.back();
  auto widen = [&](std::int64_t b) {
    return static_cast<std::uint32_t>(std::max(b, primes_bound));
  };

  report::CountReport rep;
  if (task.kind == "pairs") {
    const auto& spec = task.pair_spec;
    poly::PrimeTable table(widen(std::max(maxB, cutoff) + 1));
    auto cr = count::asymptotic_constant(spec, cutoff, table);
    rep.title = "frobenian pairs, m = (" + std::to_string(spec.m0) + ", " +
                std::to_string(spec.m1) + ")";
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "leading constant %.8f (cutoff %lld; half-cutoff value %.8f)",
                  cr.value, static_cast<long long>(cr.cutoff), cr.value_half);
    rep.notes.push_back(buf);
    if (!cr.warned.empty()) {
      std::string w = "excluded primes treated as non-members:";
      for (auto p : cr.warned) w += " " + std::to_string(p);
      rep.notes.push_back(w);
    }
    rep.notes.push_back("axis pairs reported apart from the count");
    for (auto B : task.grid) {
      auto pc = count::count_frobenian_pairs(spec, B, table);
      report::CountRow row;
      row.B = B;
      row.count = pc.pairs;
      row.main_term = count::pair_count_main(spec, cr.value, double(B));
      row.ratio = row.main_term > 0 ? double(row.count) / row.main_term : 0.0;
      row.seconds = pc.seconds;
      rep.rows.push_back(row);
    }
  } else if (task.kind == "local") {
    const auto& R = registry::resolver();
    auto pe = orb::predicted_exponents(task.descriptor, R);
    Rat theta = pe.theta ? *pe.theta : pe.delta;
    double b = to_double(pe.b_exponent), th = to_double(theta);
    std::int64_t middle_max = 1;
    for (const auto& f : task.descriptor.points) {
      if (f.at_zero() || f.at_infinity()) continue;
      Int m = 0;
      for (const auto& c : f.form.coeffs()) m += abs(c);
      Int v = m;
      for (int i = 0; i < f.form.degree(); ++i) v *= maxB;
      if (v > std::numeric_limits<std::int64_t>::max() / 2)
        throw resource_error("middle fibre values overflow at this height");
      middle_max = std::max(middle_max, static_cast<std::int64_t>(v));
    }
    std::int64_t root = static_cast<std::int64_t>(std::sqrt(double(middle_max))) + 2;
    poly::PrimeTable table(widen(std::max({maxB + 1, root, std::int64_t(1000)})));
    rep.title = task.descriptor.name + ", mode " + sol::to_string(task.mode);
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "main term B^%s / (log B)^%s", to_string(pe.b_exponent).c_str(),
                  to_string(theta).c_str());
    rep.notes.push_back(buf);
    for (auto B : task.grid) {
      auto nr = count::count_nloc_example(task.descriptor, B, task.mode, table);
      report::CountRow row;
      row.B = B;
      row.count = nr.points;
      row.main_term = std::pow(double(B), b) * std::pow(safe_log(double(B)), -th);
      row.ratio = double(row.count) / row.main_term;
      row.seconds = nr.seconds;
      rep.rows.push_back(row);
      std::snprintf(buf, sizeof(buf), "B=%lld: %lld points on marked fibres",
                    static_cast<long long>(B), static_cast<long long>(nr.on_divisor));
      rep.notes.push_back(buf);
    }
  } else if (task.kind == "support") {
    poly::PrimeTable table(widen(std::max(maxB, cutoff) + 1));
    double dens = to_double(task.support_density);
    rep.title = "multiplicative support count, density " +
                to_string(task.support_density);
    for (auto B : task.grid) {
      auto t0 = std::chrono::steady_clock::now();
      auto n = count::count_mult_support(task.support, task.support_s, B, table);
      auto t1 = std::chrono::steady_clock::now();
      report::CountRow row;
      row.B = B;
      row.count = n;
      row.main_term = count::mult_support_main(task.support, task.support_s,
                                               dens, B, cutoff, table);
      row.ratio = row.main_term > 0 ? double(row.count) / row.main_term : 0.0;
      row.seconds = std::chrono::duration<double>(t1 - t0).count();
      rep.rows.push_back(row);
    }
  } else if (task.kind == "beta") {
    if (maxB > 46000)
      throw resource_error("beta count needs a table up to X^2; X too large");
    poly::PrimeTable table(widen(maxB * maxB + 1));
    rep.title = "beta-sieve pairs for " + task.beta_field.str();
    rep.notes.push_back("main term X^{4/3} / (log X)^{2/3}");
    for (auto X : task.grid) {
      auto t0 = std::chrono::steady_clock::now();
      auto n = count::count_beta_sieve_pairs(task.beta_field, X, table);
      auto t1 = std::chrono::steady_clock::now();
      report::CountRow row;
      row.B = X;
      row.count = n;
      row.main_term =
          std::pow(double(X), 4.0 / 3.0) * std::pow(safe_log(double(X)), -2.0 / 3.0);
      row.ratio = double(row.count) / row.main_term;
      row.seconds = std::chrono::duration<double>(t1 - t0).count();
      rep.rows.push_back(row);
    }
  } else {
    throw validation_error("unknown task kind " + task.kind);
  }
  report::write_report(rep, out_path);
  return 0;
}

int cmd_sieve(const std::string& target, std::int64_t v0, std::int64_t v1,
              std::int64_t pmax, std::int64_t exact_pmax, std::int64_t Q,
              double B0, double B1, bool as_json) {
  auto desc = resolve_target(target);
  if (v0 == 0 || v1 == 0) throw validation_error("v0, v1 must be nonzero");
  const auto& R = registry::resolver();
  auto pe = orb::predicted_exponents(desc, R);
  poly::PrimeTable table(static_cast<std::uint32_t>(std::max<std::int64_t>(pmax, 100)) + 1);
  Int V0 = v0, V1 = v1;
  std::vector<std::pair<std::int64_t, double>> omega;
  json rows = json::array();
  for (auto p : table.primes()) {
    if (p > pmax) break;
    if (desc.bad_primes.count(p) || v0 % p == 0 || v1 % p == 0) continue;
    double main = sieve::omega_bar_main(desc, p, V0, V1);
    omega.emplace_back(p, main);
    json row;
    row["p"] = p;
    row["omega_main"] = main;
    if (p <= exact_pmax) {
      double ex = sieve::omega_bar_exact(desc, p, V0, V1);
      row["omega_exact"] = ex;
      row["diff"] = std::abs(ex - main);
    }
    rows.push_back(std::move(row));
  }
  double L = sieve::large_sieve_l(Q, omega);
  double bound = sieve::large_sieve_bound(B0, B1, pe.twist_degree, Q, L);
  if (as_json) {
    json out;
    out["name"] = desc.name;
    out["v"] = json::array({v0, v1});
    out["rows"] = std::move(rows);
    out["L"] = L;
    out["Q"] = Q;
    out["bound"] = bound;
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::cout << "model " << desc.name << ", v = (" << v0 << ", " << v1 << ")\n";
  std::cout << "p       omega_main    omega_exact   |diff|\n";
  for (const auto& row : rows) {
    char buf[120];
    if (row.contains("omega_exact"))
      std::snprintf(buf, sizeof(buf), "%-7lld %-13.8f %-13.8f %.8f",
                    row["p"].get<long long>(), row["omega_main"].get<double>(),
                    row["omega_exact"].get<double>(), row["diff"].get<double>());
    else
      std::snprintf(buf, sizeof(buf), "%-7lld %-13.8f", row["p"].get<long long>(),
                    row["omega_main"].get<double>());
    std::cout << buf << "\n";
  }
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "L(Q=%lld) = %.8f, bound (B0+Q^{2m})(B1+Q^{2m})/L = %.4f (m=%d)",
                static_cast<long long>(Q), L, bound, pe.twist_degree);
  std::cout << buf << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"arithmetic statistics of fibrations with multiple fibres"};
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads, "worker threads (0 = hardware)");

  auto* ex = app.add_subcommand("examples", "list the built-in examples");
  bool ex_json = false;
  ex->add_flag("--json", ex_json, "full JSON dump");

  auto* expo = app.add_subcommand("exponents",
                                  "orbifold degree, b, Delta and Theta");
  std::string expo_target;
  bool expo_json = false;
  expo->add_option("target", expo_target, "registry key or descriptor file")
      ->required();
  expo->add_flag("--json", expo_json, "JSON output");

  auto* del = app.add_subcommand("delta", "delta(E, K) from registered group data");
  std::string del_e, del_k, del_group;
  std::int64_t del_emp = 0;
  bool del_json = false;
  del->add_option("--E", del_e, "coefficients of E, constant first");
  del->add_option("--K", del_k, "coefficients of K (default Q)");
  del->add_option("--group", del_group, "group data file (degree, generators, h1, h2)");
  del->add_option("--empirical", del_emp, "also estimate over primes <= X");
  del->add_flag("--json", del_json, "JSON output");

  auto* chk = app.add_subcommand("check", "local solubility verdicts for a point");
  std::string chk_target, chk_point, chk_mode, chk_group;
  chk->add_option("target", chk_target, "registry key or descriptor file");
  chk->add_option("--point", chk_point, "point of P^1(Q): a, a/b or a,b");
  chk->add_option("--mode", chk_mode, "sufficient | necessary | clique");
  chk->add_option("--group", chk_group,
                  "instead: verify the group identities on a data file");

  auto* cnt = app.add_subcommand("count", "counts over a height grid");
  std::string cnt_task, cnt_target, cnt_support, cnt_density, cnt_s, cnt_mode,
      cnt_grid, cnt_out = "-";
  std::int64_t cnt_cutoff = 10000000, cnt_pbound = 0;
  cnt->add_option("target", cnt_target,
                  "task file, registry key or descriptor file");
  cnt->add_option("--task", cnt_task, "task file (pairs/local/support/beta)");
  cnt->add_option("--support", cnt_support, "frobenian set file (support count)");
  cnt->add_option("--density", cnt_density, "density of the support set (a/b)");
  cnt->add_option("--S", cnt_s, "unrestricted primes for --support");
  cnt->add_option("--mode", cnt_mode, "sufficient | necessary | clique");
  cnt->add_option("--B,--grid", cnt_grid, "heights, e.g. 1e4,1e5,1e6");
  cnt->add_option("--cutoff", cnt_cutoff, "Euler product cutoff");
  cnt->add_option("--primes-bound", cnt_pbound, "raise the prime table bound");
  cnt->add_option("--out", cnt_out, "output path; - for stdout, .json for JSON");

  auto* sv = app.add_subcommand("sieve", "local sieve densities and L(Q)");
  std::string sv_target;
  std::int64_t sv_v0 = 1, sv_v1 = 1, sv_pmax = 50, sv_exact = 13, sv_q = 10;
  double sv_b0 = 10000, sv_b1 = 10000;
  bool sv_json = false;
  sv->add_option("target", sv_target, "registry key or descriptor file")
      ->required();
  sv->add_option("--v0", sv_v0, "twist numerator scale");
  sv->add_option("--v1", sv_v1, "twist denominator scale");
  sv->add_option("--pmax", sv_pmax, "first-order densities for p <= pmax");
  sv->add_option("--exact-pmax", sv_exact,
                 "exact densities for p <= this (engine limit 37)");
  sv->add_option("--Q", sv_q, "large-sieve moduli bound");
  sv->add_option("--B0", sv_b0, "box side for the bound");
  sv->add_option("--B1", sv_b1, "box side for the bound");
  sv->add_flag("--json", sv_json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (threads > 0)
    setenv("ORBISTAT_THREADS", std::to_string(threads).c_str(), 1);

  try {
    if (ex->parsed()) return cmd_examples(ex_json);
    if (expo->parsed()) return cmd_exponents(expo_target, expo_json);
    if (del->parsed())
      return cmd_delta(del_e, del_k, del_group, del_emp, del_json);
    if (chk->parsed())
      return cmd_check(chk_target, chk_point, chk_mode, chk_group);
    if (cnt->parsed())
      return cmd_count(cnt_task, cnt_target, cnt_support, cnt_density, cnt_s,
                       cnt_mode, cnt_grid, cnt_cutoff, cnt_pbound, cnt_out);
    if (sv->parsed())
      return cmd_sieve(sv_target, sv_v0, sv_v1, sv_pmax, sv_exact, sv_q, sv_b0,
                       sv_b1, sv_json);
  } catch (const validation_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
