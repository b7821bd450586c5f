#pragma once

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <set>

#include <json.hpp>

#include "constructions.hpp"
#include "generator_file.hpp"
#include "meataxe.hpp"
#include "mullineux.hpp"

namespace rank3 {

using json = nlohmann::ordered_json;

enum class Tier { Core, Heavy, Ingest };

inline const char* to_string(Tier t) {
  switch (t) {
    case Tier::Core: return "core";
    case Tier::Heavy: return "heavy";
    case Tier::Ingest: return "ingest";
  }
  return "?";
}

inline Tier tier_from_string(const std::string& s) {
  if (s == "core") return Tier::Core;
  if (s == "heavy") return Tier::Heavy;
  if (s == "ingest") return Tier::Ingest;
  throw DomainError("unknown tier '" + s + "'");
}

struct ExpectedCase {
  std::string label;
  std::string citation;
  Tier tier = Tier::Core;
  json expected;
  // returns the computed value, or null when the case cannot run (skipped)
  std::function<json()> compute;
  // defaults to equality
  std::function<bool(const json& expected, const json& computed)> match;
};

struct CaseResult {
  std::string label, citation;
  json expected, computed;
  bool match = false, skipped = false;
  double seconds = 0;
};

struct VerdictReport {
  std::string tier;
  std::vector<CaseResult> cases;
  std::size_t passed = 0, failed = 0, skipped = 0;
  bool ok() const { return failed == 0; }
};

namespace repro_detail {

inline json sorted_sizes(const std::vector<OrbitCell>& cells) {
  std::vector<std::uint64_t> s;
  for (auto& c : cells) s.push_back(c.size);
  std::sort(s.begin(), s.end());
  return s;
}

inline json cd_json(const OrbitReport& r) { return json::array({r.cd.c, r.cd.d}); }

inline const BasePoint& base_point(const ConstructedCase& c, const std::string& name) {
  for (auto& b : c.base_points)
    if (b.name == name) return b;
  throw InternalError("no base point " + name + " in " + c.label);
}

inline OrbitReport measure(const ConstructedCase& c, const std::string& name, std::size_t cap = kDefaultOrbitCap) {
  return cd_parameters(c.space, c.group, base_point(c, name).v, cap);
}

inline json cd_pairs(const ConstructedCase& c, const std::vector<std::string>& names) {
  std::set<std::pair<i64, i64>> s;
  for (auto& n : names) {
    auto r = measure(c, n);
    s.insert({r.cd.c, r.cd.d});
  }
  json out = json::array();
  for (auto& [a, b] : s) out.push_back({a, b});
  return out;
}

inline std::vector<Perm> sym_gens(std::size_t n) {
  std::vector<int> cyc;
  for (std::size_t i = 1; i <= n; ++i) cyc.push_back(static_cast<int>(i));
  return {perm_from_cycles(n, {{1, 2}}), perm_from_cycles(n, {cyc})};
}

/// Orbits of size 315 of S_8 on the 13-dimensional factor of U (x) U, split by type.
inline json s8_dim13_orbits() {
  auto U = permutation_module(8, sym_gens(8), gf3());
  auto T = tensor_module(U, U);
  const GModule* m13 = nullptr;
  auto fs = composition_factors(T);
  for (auto& f : fs)
    if (f.module.dim == 13) m13 = &f.module;
  if (!m13) return json{{"error", "no 13-dimensional factor"}};
  auto form = invariant_bilinear_form(*m13);
  if (form.kind != FormKind::Symmetric || !form.gram->invertible()) return json{{"error", "no symmetric form"}};
  QuadraticSpace V(*form.gram);
  MatrixGroup G(gf3(), 13, m13->gens, "S8", V.gram());
  json out;
  for (Sign xi : {Sign::Plus, Sign::Minus}) {
    std::set<std::pair<i64, i64>> s;
    for (auto& c : orbit_partition(V, G, xi))
      if (c.size == 315) s.insert({c.cd.c, c.cd.d});
    json arr = json::array();
    for (auto& [a, b] : s) arr.push_back({a, b});
    out[xi == Sign::Plus ? "plus" : "minus"] = arr;
  }
  return out;
}

inline bool contains_pair(const json& arr, const json& pair) {
  return std::find(arr.begin(), arr.end(), pair) != arr.end();
}

inline json ingest_case(const std::string& dir, const std::string& file) {
  namespace fs = std::filesystem;
  if (dir.empty()) return nullptr;
  fs::path p = fs::path(dir) / file;
  if (!fs::exists(p)) return nullptr;
  auto gf = parse_generator_file(p.string());
  if (!gf.group.form) throw ParseError(0, file + " has no form block");
  QuadraticSpace V(*gf.group.form);
  json out = json::array();
  for (auto& b : gf.base_points) {
    auto r = cd_parameters(V, gf.group, b.v);
    out.push_back({r.cd.c, r.cd.d});
  }
  return out;
}

}  // namespace repro_detail

/// Expected values of every reproduced case. The ingest cases look for
/// l2_13.gen and mcl.gen in `ingest_dir`; each file must carry a form and
/// "# base" lines.
inline std::vector<ExpectedCase> expected_cases(const std::string& ingest_dir = {}) {
  using namespace repro_detail;
  std::vector<ExpectedCase> cs;

  cs.push_back({"wreath-5-orbits", "O_1(3) wr S_5 in Omega_5(3)", Tier::Core,
                json{{"plus", {5, 40}}, {"minus", {16, 20}}}, [] {
                  auto c = wreath_o1_subgroup(5);
                  return json{{"plus", sorted_sizes(orbit_partition(c.space, c.group, Sign::Plus, false))},
                              {"minus", sorted_sizes(orbit_partition(c.space, c.group, Sign::Minus, false))}};
                }, {}});
  cs.push_back({"wreath-7-orbits", "O_1(3) wr S_7 in Omega_7(3)", Tier::Core, json{{"plus", {42, 336}}}, [] {
                  auto c = wreath_o1_subgroup(7);
                  return json{{"plus", sorted_sizes(orbit_partition(c.space, c.group, Sign::Plus, false))}};
                }, {}});
  {
    json e = json::object();
    for (i64 n : {5, 7, 9, 11, 13})
      e[std::to_string(n)] = {{"x1", {0, n - 1}}, {"x1+x2", {4 * n - 8, n * n - 5 * n + 7}}};
    cs.push_back({"wreath-cd", "O_1(3) wr S_n, (c,d) of the two base orbits", Tier::Core, e, [] {
                    json out = json::object();
                    for (std::size_t n : {5u, 7u, 9u, 11u, 13u}) {
                      auto c = wreath_o1_subgroup(n);
                      out[std::to_string(n)] = {{"x1", cd_json(measure(c, "x1"))}, {"x1+x2", cd_json(measure(c, "x1+x2"))}};
                    }
                    return out;
                  }, {}});
  }
  cs.push_back({"wreath-eq1", "O_1(3) wr S_n, cases where equation (1) holds", Tier::Core,
                json::array({{5, "+", "t"}, {5, "-", "s"}, {7, "+", "t"}}), [] {
                  json out = json::array();
                  for (std::size_t n : {5u, 7u, 9u, 11u, 13u}) {
                    auto c = wreath_o1_subgroup(n);
                    std::set<std::pair<std::string, std::string>> hits;
                    for (auto& b : c.base_points) {
                      auto r = cd_parameters(c.space, c.group, b.v);
                      std::string xi = to_string(r.type.sign());
                      if (r.eq1_s.value_or(false)) hits.insert({xi, "s"});
                      if (r.eq1_t.value_or(false)) hits.insert({xi, "t"});
                    }
                    for (auto& [xi, r] : hits) out.push_back({n, xi, r});
                  }
                  return out;
                }, {}});
  cs.push_back({"parabolic-7-1", "stabilizer of a singular point in Omega_7(3)", Tier::Core,
                json{{"plus", {135, 243}}}, [] {
                  auto c = parabolic_subgroup(7, 1);
                  return json{{"plus", sorted_sizes(orbit_partition(c.space, c.group, Sign::Plus, false))}};
                }, {}});
  cs.push_back({"field-extension-9", "Omega_3(27).3 in Omega_9(3)", Tier::Core,
                json{{"plus", {1053, 1134, 1134}}, {"minus", {1053, 1053, 1134}}, {"c-2d", {{"plus", json::array({80})}, {"minus", json::array({-82})}}}},
                [] {
                  auto c = field_extension_subgroup(9);
                  json out, diff;
                  for (Sign xi : {Sign::Plus, Sign::Minus}) {
                    auto cells = orbit_partition(c.space, c.group, xi);
                    std::set<i64> d;
                    for (auto& cell : cells) d.insert(cell.cd.c - 2 * cell.cd.d);
                    const char* k = xi == Sign::Plus ? "plus" : "minus";
                    out[k] = sorted_sizes(cells);
                    diff[k] = d;
                  }
                  out["c-2d"] = diff;
                  return out;
                }, {}});
  for (auto [n, c, d] : std::vector<std::tuple<std::size_t, i64, i64>>{{10, 438, 191}, {14, 1970, 1032}, {15, 2618, 1476}, {16, 3396, 2063}})
    cs.push_back({"deleted-" + std::to_string(n) + "-w", "S_" + std::to_string(n) + " on the fully deleted permutation module",
                  Tier::Core, json::array({c, d}), [n] { return cd_json(measure(deleted_permutation_module(n), "w")); }, {}});
  {
    json e = json::object();
    for (i64 n = 10; n <= 16; ++n)
      for (char w : {'v', 'w'}) {
        auto f = deleted_module_closed_forms(n, w);
        e[std::to_string(n) + w] = {f.orbit, f.c, f.d};
      }
    cs.push_back({"deleted-closed-forms", "fully deleted module, closed forms for orbit size and (c,d)", Tier::Core, e, [] {
                    json out = json::object();
                    for (std::size_t n = 10; n <= 16; ++n) {
                      auto c = deleted_permutation_module(n);
                      for (char w : {'v', 'w'}) {
                        auto r = measure(c, std::string(1, w));
                        out[std::to_string(n) + w] = {r.size, r.cd.c, r.cd.d};
                      }
                    }
                    return out;
                  }, {}});
  }
  cs.push_back({"s8-dim13", "S_8 on the 13-dimensional factor of U (x) U over GF(3)", Tier::Core,
                json{{"plus", json::array({json::array({212, 102})})}, {"minus", json::array({json::array({230, 84})})}}, [] { return s8_dim13_orbits(); },
                [](const json& e, const json& c) {
                  return c.contains("plus") && contains_pair(c["plus"], e["plus"][0]) &&
                         contains_pair(c["minus"], e["minus"][0]);
                }});
  cs.push_back({"omega7-wedge", "Omega_7(3) on the exterior square", Tier::Core, json::array({{13040, 9072}, {26324, 17901}}),
                [] { return cd_pairs(wedge_square_rep(), {"(e1-f1)^x", "(e1+f1)^x"}); }, {}});
  cs.push_back({"omega7-sym", "Omega_7(3) on the 27-dimensional section of the symmetric square", Tier::Core,
                json::array({{13850, 8262}, {26324, 17901}}),
                [] { return cd_pairs(sym_square_quotient_rep(), {"(e1-f1).x", "(e1+f1).x"}); }, {}});
  cs.push_back({"sp6-lambda2", "Sp_6(3) on the 13-dimensional module", Tier::Core, json{{"plus", 2}, {"minus", 1}}, [] {
                  auto c = symplectic_lambda2_module();
                  return json{{"plus", orbit_partition(c.space, c.group, Sign::Plus, false).size()},
                              {"minus", orbit_partition(c.space, c.group, Sign::Minus, false).size()}};
                }, {}});
  cs.push_back({"sp6-sym-small", "Sp_6(3) on the symmetric square, small orbit", Tier::Core, json::array({26324, 17901}),
                [] { return cd_json(measure(sp6_sym_square(), "e1e1-f1f1")); }, {}});
  cs.push_back({"bound-eq4", "tensor, tensor-wreath and imprimitive subgroups: base orbits below (3^m+1)/2", Tier::Core,
                json{{"tensor", false}, {"tensor-wreath", false}, {"imprimitive", false}}, [] {
                  auto any_eq4 = [](const ConstructedCase& c) {
                    bool any = false;
                    for (auto& b : c.base_points) any |= cd_parameters(c.space, c.group, b.v).eq4.value_or(true);
                    return any;
                  };
                  return json{{"tensor", any_eq4(tensor_product_subgroup(3, 5))},
                              {"tensor-wreath", any_eq4(tensor_wreath_subgroup(5))},
                              {"imprimitive", any_eq4(imprimitive_subgroup(3, 3))}};
                }, {}});
  {
    std::vector<std::pair<Partition, Partition>> pairs{
        {{4, 2}, {2, 2, 1, 1}}, {{5, 2}, {3, 2, 1, 1}}, {{5, 1, 1}, {3, 2, 2}}, {{7, 1}, {4, 3, 1}},
        {{6, 2}, {3, 3, 1, 1}}, {{6, 1, 1}, {3, 3, 2}}, {{7, 1, 1}, {4, 3, 2}}, {{8, 1}, {4, 4, 1}}};
    json e = json::object();
    for (auto& [l, m] : pairs) e[partition_to_string(l)] = partition_to_string(m);
    cs.push_back({"mullineux-table", "Mullineux images for p = 3", Tier::Core, e, [pairs] {
                    json out = json::object();
                    for (auto& [l, m] : pairs) out[partition_to_string(l)] = partition_to_string(mullineux_map(l, 3));
                    return out;
                  }, {}});
  }
  cs.push_back({"mullineux-hooks", "n with (n-2,1,1) fixed by the Mullineux map, 5 <= n <= 60", Tier::Core, json::array({5, 6}), [] {
                  json out = json::array();
                  for (int n = 5; n <= 60; ++n)
                    if (is_mullineux_fixed({n - 2, 1, 1}, 3)) out.push_back(n);
                  return out;
                }, {}});

  cs.push_back({"sp6-sym-heavy", "Sp_6(3) on the symmetric square, orbit of 10614240 points", Tier::Heavy,
                json::array({7075430, 3538809}),
                [] { return cd_json(measure(sp6_sym_square(), "e1e1-e2e2+e3e3+f3f3", 30'000'000)); }, {}});

  auto any_pair = [](const json& e, const json& c) { return c.is_array() && contains_pair(c, e); };
  cs.push_back({"l2-13-ingest", "L_2(13) in Omega_13(3), file l2_13.gen", Tier::Ingest, json::array({734, 357}),
                [ingest_dir] { return ingest_case(ingest_dir, "l2_13.gen"); }, any_pair});
  cs.push_back({"mcl-ingest", "McL in Omega_21(3), file mcl.gen", Tier::Ingest, json::array({12194, 10080}),
                [ingest_dir] { return ingest_case(ingest_dir, "mcl.gen"); }, any_pair});
  return cs;
}

struct ReproductionOptions {
  std::string ingest_dir;
  bool deterministic = false;  // report seconds as 0
  std::function<void(const CaseResult&)> progress;
};

/// Tiers are cumulative for heavy (core + heavy); ingest runs only the ingest cases.
inline VerdictReport run_reproduction_suite(Tier tier, const ReproductionOptions& opt = {}) {
  VerdictReport rep;
  rep.tier = to_string(tier);
  for (auto& c : expected_cases(opt.ingest_dir)) {
    bool wanted = tier == Tier::Ingest ? c.tier == Tier::Ingest
                                       : (c.tier == Tier::Core || (tier == Tier::Heavy && c.tier == Tier::Heavy));
    if (!wanted) continue;
    CaseResult r{c.label, c.citation, c.expected, nullptr};
    auto t0 = std::chrono::steady_clock::now();
    try {
      r.computed = c.compute();
      if (r.computed.is_null())
        r.skipped = true;
      else
        r.match = c.match ? c.match(c.expected, r.computed) : c.expected == r.computed;
    } catch (const std::exception& e) {
      r.computed = json{{"error", e.what()}};
    }
    r.seconds = opt.deterministic ? 0.0 : std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (r.skipped)
      ++rep.skipped;
    else if (r.match)
      ++rep.passed;
    else
      ++rep.failed;
    if (opt.progress) opt.progress(r);
    rep.cases.push_back(std::move(r));
  }
  std::sort(rep.cases.begin(), rep.cases.end(), [](auto& a, auto& b) { return a.label < b.label; });
  return rep;
}

inline json to_json(const VerdictReport& rep) {
  json cases = json::array();
  for (auto& r : rep.cases)
    cases.push_back({{"case", r.label},
                     {"citation", r.citation},
                     {"expected", r.expected},
                     {"computed", r.computed},
                     {"match", r.match},
                     {"status", r.skipped ? "SKIPPED" : r.match ? "PASS" : "FAIL"},
                     {"seconds", r.seconds}});
  return json{{"tier", rep.tier}, {"cases", cases}, {"summary", {{"passed", rep.passed}, {"failed", rep.failed}, {"skipped", rep.skipped}}}};
}

}  // namespace rank3
