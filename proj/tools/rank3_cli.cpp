#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "rank3/reproduction.hpp"

using namespace rank3;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Sign parse_sign(const std::string& s) {
  if (s == "+" || s == "plus" || s == "1") return Sign::Plus;
  if (s == "-" || s == "minus" || s == "-1") return Sign::Minus;
  throw UsageError("sign must be + or -, got '" + s + "'");
}

std::string tuple_str(const std::vector<i64>& xs) {
  std::string s = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s + ")";
}

/// A base-point name from the file, or coordinates separated by commas or spaces.
Vec parse_vector(const std::string& arg, const GeneratorFile& gf) {
  for (auto& b : gf.base_points)
    if (b.name == arg) return b.v;
  std::string t = arg;
  for (auto& ch : t)
    if (ch == ',') ch = ' ';
  std::istringstream in(t);
  Vec v;
  long long x;
  while (in >> x) {
    if (x < 0 || x >= static_cast<long long>(gf.group.field->q())) throw UsageError("coordinate out of range: " + std::to_string(x));
    v.push_back(static_cast<Elt>(x));
  }
  if (!in.eof()) throw UsageError("cannot read vector '" + arg + "'");
  if (v.size() != gf.group.dim)
    throw UsageError("vector has " + std::to_string(v.size()) + " coordinates, expected " + std::to_string(gf.group.dim));
  return v;
}

QuadraticSpace space_of(const GeneratorFile& gf) {
  if (!gf.group.form) throw UsageError("generator file has no form block");
  return QuadraticSpace(*gf.group.form);
}

json report_json(const OrbitReport& r) {
  json j{{"base", vec_to_string(r.base)}, {"type", to_string(r.type.kind)}, {"size", r.size}, {"c", r.cd.c}, {"d", r.cd.d}};
  auto opt = [](const std::optional<bool>& b) { return b ? json(*b) : json(nullptr); };
  j["eq1_s"] = opt(r.eq1_s);
  j["eq1_t"] = opt(r.eq1_t);
  j["eq2"] = opt(r.eq2);
  j["eq3"] = opt(r.eq3);
  j["eq4"] = opt(r.eq4);
  return j;
}

std::string verdict(const std::optional<bool>& b) { return !b ? "n/a" : *b ? "HOLDS" : "fails"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rank3: orbit parameters of subgroups of Omega_{2m+1}(3)"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit JSON");

  if (const char* t = std::getenv("RANK3_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(t, &end, 10);
    if (*t == '\0' || *end != '\0' || v < 1) {
      std::cerr << "RANK3_THREADS must be a positive integer\n";
      return 2;
    }
  }

  auto* count = app.add_subcommand("count", "closed-form counts #{v : Q(v) = gamma} of the standard space");
  std::size_t count_n = 0;
  std::uint64_t count_q = 3;
  count->add_option("n", count_n, "dimension")->required()->check(CLI::Range(1, 64));
  count->add_option("q", count_q, "field size (odd prime power)")->required();

  auto* higman = app.add_subcommand("higman", "rank-3 parameters of Omega_{2m+1}(3) on E_xi");
  unsigned hm = 0;
  std::string hxi;
  higman->add_option("m", hm)->required()->check(CLI::Range(2, 30));
  higman->add_option("xi", hxi)->required();

  auto* check = app.add_subcommand("check-eq", "equation verdicts for a (c,d) pair");
  unsigned cm = 0;
  std::string cxi;
  i64 cc = 0, cd = 0;
  check->add_option("m", cm)->required()->check(CLI::Range(2, 30));
  check->add_option("xi", cxi)->required();
  check->add_option("c", cc)->required();
  check->add_option("d", cd)->required();

  auto* construct = app.add_subcommand("construct", "build a construction and list its base points");
  std::string clabel;
  construct->add_option("label", clabel)->required();

  auto* orbit_cmd = app.add_subcommand("orbit", "orbit size of a vector under the generators of a file");
  auto* cd_cmd = app.add_subcommand("cd", "(c,d) and equation verdicts for the orbit of a vector");
  std::string ofile, ovec;
  std::size_t ocap = kDefaultOrbitCap;
  for (auto* s : {orbit_cmd, cd_cmd}) {
    s->add_option("file", ofile)->required();
    s->add_option("vector", ovec, "coordinates or a base-point name")->required();
    s->add_option("--cap", ocap, "orbit size cap");
  }

  auto* mull = app.add_subcommand("mullineux", "Mullineux image of a p-regular partition");
  std::string mpart;
  int mp = 3;
  mull->add_option("partition", mpart, "e.g. 8,1")->required();
  mull->add_option("-p", mp, "prime")->check(CLI::Range(2, 97));

  auto* split = app.add_subcommand("split", "composition factors of the module given by a generator file");
  std::string sfile;
  std::uint64_t sseed = 1;
  split->add_option("file", sfile)->required();
  split->add_option("--seed", sseed);

  auto* repro = app.add_subcommand("reproduce", "run the reproduction suite");
  std::string rtier = "core", rdir;
  bool rdet = false;
  repro->add_option("tier", rtier)->check(CLI::IsMember({"core", "heavy", "ingest"}));
  repro->add_option("--ingest-dir", rdir, "directory holding l2_13.gen and mcl.gen");
  repro->add_flag("--deterministic", rdet, "report 0 seconds so output is byte-identical");

  auto* exp = app.add_subcommand("export", "write a construction as a generator file");
  std::string elabel, eout;
  exp->add_option("label", elabel)->required();
  exp->add_option("-o,--output", eout, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (count->parsed()) {
      auto [p, a] = prime_power(count_q);
      if (p == 2) throw UsageError("q must be odd");
      auto V = standard_space(count_n, field_create(p, a));
      json rows = json::array();
      for (Elt g = 0; g < V.field().q(); ++g) {
        auto c = count_norm_vectors(V, g);
        rows.push_back({{"gamma", g}, {"closed_form", c.closed_form}, {"exhaustive", c.exhaustive ? json(*c.exhaustive) : json(nullptr)}});
      }
      if (as_json) {
        std::cout << json{{"n", count_n}, {"q", count_q}, {"counts", rows}}.dump(2) << "\n";
      } else {
        std::cout << "gamma closed_form exhaustive\n";
        for (auto& r : rows)
          std::cout << r["gamma"] << " " << r["closed_form"] << " " << (r["exhaustive"].is_null() ? "-" : r["exhaustive"].dump()) << "\n";
      }
      return 0;
    }
    if (higman->parsed()) {
      auto p = odd_orthogonal_params(hm, parse_sign(hxi));
      std::vector<i64> t{p.total, p.k, p.l, p.lambda, p.mu, p.s, p.t, p.f_s, p.f_t};
      if (as_json)
        std::cout << json{{"total", p.total}, {"k", p.k}, {"l", p.l}, {"lambda", p.lambda}, {"mu", p.mu},
                          {"s", p.s}, {"t", p.t}, {"f_s", p.f_s}, {"f_t", p.f_t}}.dump(2) << "\n";
      else
        std::cout << tuple_str(t) << "\n";
      return 0;
    }
    if (check->parsed()) {
      Sign xi = parse_sign(cxi);
      auto p = odd_orthogonal_params(cm, xi);
      CdPair pr{cc, cd};
      bool t = check_eq1(p, Eigen::T, pr), s = check_eq1(p, Eigen::S, pr);
      if (as_json)
        std::cout << json{{"eq1_t", t}, {"eq1_s", s}, {"eq2", check_eq2(cm, xi, pr)}, {"eq3", check_eq3(cm, xi, pr)},
                          {"eq4", check_eq4(cm, pr)}}.dump(2) << "\n";
      else
        std::cout << "r=t: " << (t ? "HOLDS" : "fails") << "; r=s: " << (s ? "HOLDS" : "fails") << "\n";
      return 0;
    }
    if (construct->parsed()) {
      auto c = construct_by_label(clabel);
      json bases = json::array();
      for (auto& b : c.base_points) {
        auto ty = c.space.point_type(b.v);
        bases.push_back({{"name", b.name}, {"type", to_string(ty.kind)}, {"vector", vec_to_string(b.v)}});
      }
      json j{{"label", c.label}, {"description", c.citation}, {"dim", c.space.dim()}, {"field", c.group.field->q()},
             {"generators", c.group.gens.size()}, {"base_points", bases}};
      if (as_json) {
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << c.label << ": " << c.citation << "\ndim " << c.space.dim() << " over GF(" << c.group.field->q() << "), "
                  << c.group.gens.size() << " generators\n";
        for (auto& b : bases) std::cout << "  " << b["name"].get<std::string>() << " " << b["type"].get<std::string>() << "\n";
      }
      return 0;
    }
    if (orbit_cmd->parsed() || cd_cmd->parsed()) {
      auto gf = parse_generator_file(ofile);
      Vec v = parse_vector(ovec, gf);
      if (orbit_cmd->parsed()) {
        auto o = orbit(gf.group, v, ocap);
        if (as_json)
          std::cout << json{{"vector", vec_to_string(v)}, {"size", o.size()}}.dump(2) << "\n";
        else
          std::cout << o.size() << "\n";
        return 0;
      }
      auto r = cd_parameters(space_of(gf), gf.group, v, ocap);
      if (as_json) {
        std::cout << report_json(r).dump(2) << "\n";
      } else {
        std::cout << "type " << to_string(r.type.kind) << " size " << r.size << " (c,d)=(" << r.cd.c << "," << r.cd.d << ")\n";
        if (r.eq1_s)
          std::cout << "r=t: " << verdict(r.eq1_t) << "; r=s: " << verdict(r.eq1_s) << "; eq2: " << verdict(r.eq2)
                    << "; eq3: " << verdict(r.eq3) << "; eq4: " << verdict(r.eq4) << "\n";
      }
      return 0;
    }
    if (mull->parsed()) {
      auto l = parse_partition(mpart);
      auto m = mullineux_map(l, mp);
      if (as_json)
        std::cout << json{{"partition", partition_to_string(l)}, {"p", mp}, {"image", partition_to_string(m)},
                          {"symbol", mullineux_symbol(l, mp).to_string()}, {"fixed", m == l}}.dump(2) << "\n";
      else
        std::cout << partition_to_string(m) << "\n";
      return 0;
    }
    if (split->parsed()) {
      auto gf = parse_generator_file(sfile);
      GModule M(gf.group.field, gf.group.dim, gf.group.gens);
      auto fs = composition_factors(M, sseed);
      json arr = json::array();
      for (auto& f : fs) arr.push_back({{"dim", f.module.dim}, {"multiplicity", f.multiplicity}});
      if (as_json) {
        std::cout << json{{"dim", M.dim}, {"factors", arr}}.dump(2) << "\n";
      } else {
        for (auto& f : fs) std::cout << "dim " << f.module.dim << " x" << f.multiplicity << "\n";
      }
      return 0;
    }
    if (repro->parsed()) {
      ReproductionOptions opt;
      opt.ingest_dir = rdir;
      opt.deterministic = rdet;
      if (!as_json)
        opt.progress = [](const CaseResult& r) {
          std::cout << (r.skipped ? "SKIPPED" : r.match ? "PASS" : "FAIL") << "  " << r.label << "  expected "
                    << r.expected.dump() << "  computed " << r.computed.dump() << "\n";
        };
      auto rep = run_reproduction_suite(tier_from_string(rtier), opt);
      if (as_json)
        std::cout << to_json(rep).dump(2) << "\n";
      else
        std::cout << "passed " << rep.passed << " failed " << rep.failed << " skipped " << rep.skipped << "\n";
      return rep.ok() ? 0 : 1;
    }
    if (exp->parsed()) {
      auto c = construct_by_label(elabel);
      MatrixGroup G = c.group;
      G.form = c.space.gram();
      std::string text = write_generator_file(G, c.base_points, {c.label});
      if (eout.empty()) {
        std::cout << text;
      } else {
        std::ofstream out(eout);
        if (!out) throw UsageError("cannot write " + eout);
        out << text;
      }
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
