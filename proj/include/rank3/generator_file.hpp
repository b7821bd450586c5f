#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "constructions.hpp"

namespace rank3 {

// rank3gen v1
// dim <n> field <q> gens <k>
// modulus <c0 .. ca>          (only for non-prime q)
// form                        (optional, then n rows)
// gen <i>                     (k blocks of n rows)
// Lines starting with '#' are comments; "# base <name> <coords>" names a base point.

struct GeneratorFile {
  MatrixGroup group;
  std::vector<BasePoint> base_points;
  std::vector<std::string> comments;  // other comment lines, without the leading '#'
};

inline std::pair<std::uint32_t, std::uint32_t> prime_power(std::uint64_t q) {
  if (q < 2) throw DomainError("field size must be at least 2");
  std::uint32_t p = 2;
  while (q % p) ++p;
  std::uint32_t a = 0;
  while (q % p == 0) {
    q /= p;
    ++a;
  }
  if (q != 1) throw DomainError("field size is not a prime power");
  return {p, a};
}

inline std::string write_generator_file(const MatrixGroup& G, const std::vector<BasePoint>& base = {},
                                        const std::vector<std::string>& comments = {}) {
  const FiniteField& F = *G.field;
  std::ostringstream out;
  out << "rank3gen v1\n";
  for (auto& c : comments) out << "# " << c << "\n";
  out << "dim " << G.dim << " field " << F.q() << " gens " << G.gens.size() << "\n";
  if (!F.is_prime_field()) {
    out << "modulus";
    for (auto c : F.modulus()) out << " " << c;
    out << "\n";
  }
  for (auto& b : base) out << "# base " << b.name << " " << vec_to_string(b.v) << "\n";
  auto rows = [&](const Matrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? " " : "") << m(i, j);
      out << "\n";
    }
  };
  if (G.form) {
    out << "form\n";
    rows(*G.form);
  }
  for (std::size_t k = 0; k < G.gens.size(); ++k) {
    out << "gen " << k + 1 << "\n";
    rows(G.gens[k]);
  }
  return out.str();
}

inline GeneratorFile parse_generator_text(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::pair<std::size_t, std::string>> lines;  // content lines with numbers
  GeneratorFile gf;
  std::vector<std::pair<std::size_t, std::string>> base_lines;
  std::string line;
  std::size_t no = 0;
  while (std::getline(in, line)) {
    ++no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    if (line[first] == '#') {
      std::string body = line.substr(first + 1);
      if (!body.empty() && body[0] == ' ') body.erase(0, 1);
      if (body.rfind("base ", 0) == 0)
        base_lines.push_back({no, body.substr(5)});
      else
        gf.comments.push_back(body);
      continue;
    }
    lines.push_back({no, line});
  }
  std::size_t at = 0;
  auto next = [&](const char* what) -> std::pair<std::size_t, std::string>& {
    if (at >= lines.size()) throw ParseError(no + 1, std::string("unexpected end of file, expected ") + what);
    return lines[at++];
  };
  auto words = [](const std::string& s) {
    std::istringstream ss(s);
    std::vector<std::string> w;
    std::string t;
    while (ss >> t) w.push_back(t);
    return w;
  };
  auto number = [](std::size_t ln, const std::string& s) -> std::uint64_t {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError(ln, "expected a non-negative integer, got '" + s + "'");
    try {
      return std::stoull(s);
    } catch (const std::exception&) {
      throw ParseError(ln, "integer out of range '" + s + "'");
    }
  };

  auto& h = next("header");
  if (words(h.second) != std::vector<std::string>{"rank3gen", "v1"}) throw ParseError(h.first, "bad header, expected 'rank3gen v1'");
  auto& d = next("dimension line");
  auto dw = words(d.second);
  if (dw.size() != 6 || dw[0] != "dim" || dw[2] != "field" || dw[4] != "gens")
    throw ParseError(d.first, "expected 'dim <n> field <q> gens <k>'");
  std::size_t n = number(d.first, dw[1]), k = number(d.first, dw[5]);
  std::uint64_t q = number(d.first, dw[3]);
  if (n == 0 || n > 4096) throw ParseError(d.first, "dimension out of range");
  std::pair<std::uint32_t, std::uint32_t> pa;
  try {
    pa = prime_power(q);
  } catch (const DomainError& e) {
    throw ParseError(d.first, e.what());
  }
  FieldPtr F;
  if (pa.second > 1) {
    auto& m = next("modulus line");
    auto mw = words(m.second);
    if (mw.empty() || mw[0] != "modulus") throw ParseError(m.first, "expected 'modulus <c0 .. ca>' for a non-prime field");
    std::vector<std::uint32_t> coeffs;
    for (std::size_t i = 1; i < mw.size(); ++i) coeffs.push_back(static_cast<std::uint32_t>(number(m.first, mw[i])));
    try {
      F = field_create(pa.first, pa.second, coeffs);
    } catch (const std::exception& e) {
      throw ParseError(m.first, e.what());
    }
  } else {
    F = pa.first == 3 ? gf3() : field_create(pa.first, 1);
  }

  auto read_matrix = [&](const char* what) {
    Matrix M(F, n, n);
    for (std::size_t i = 0; i < n; ++i) {
      auto& r = next(what);
      auto rw = words(r.second);
      if (rw.size() != n) throw ParseError(r.first, "expected " + std::to_string(n) + " entries");
      for (std::size_t j = 0; j < n; ++j) {
        auto v = number(r.first, rw[j]);
        if (v >= F->q()) throw ParseError(r.first, "field element out of range: " + rw[j]);
        M(i, j) = static_cast<Elt>(v);
      }
    }
    return M;
  };

  std::optional<Matrix> form;
  if (at < lines.size() && words(lines[at].second) == std::vector<std::string>{"form"}) {
    std::size_t ln = lines[at].first;
    ++at;
    form = read_matrix("form row");
    if (!form->is_symmetric()) throw ParseError(ln, "form is not symmetric");
  }
  std::vector<Matrix> gens;
  for (std::size_t g = 0; g < k; ++g) {
    auto& gl = next("generator block");
    auto gw = words(gl.second);
    if (gw.size() != 2 || gw[0] != "gen" || number(gl.first, gw[1]) != g + 1)
      throw ParseError(gl.first, "expected 'gen " + std::to_string(g + 1) + "'");
    Matrix M = read_matrix("generator row");
    if (!M.invertible()) throw ParseError(gl.first, "generator " + std::to_string(g + 1) + " is singular");
    if (form && !(M * *form * M.transpose() == *form))
      throw ParseError(gl.first, "generator " + std::to_string(g + 1) + " does not preserve the form");
    gens.push_back(M);
  }
  if (at < lines.size()) throw ParseError(lines[at].first, "trailing content after the last generator");
  gf.group = MatrixGroup(F, n, gens, {}, form);
  for (auto& [ln, body] : base_lines) {
    auto bw = words(body);
    if (bw.size() != n + 1) throw ParseError(ln, "base point needs a name and " + std::to_string(n) + " coordinates");
    Vec v;
    for (std::size_t j = 1; j <= n; ++j) {
      auto x = number(ln, bw[j]);
      if (x >= F->q()) throw ParseError(ln, "field element out of range: " + bw[j]);
      v.push_back(static_cast<Elt>(x));
    }
    gf.base_points.push_back({bw[0], v});
  }
  return gf;
}

inline GeneratorFile parse_generator_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_generator_text(ss.str());
}

}  // namespace rank3
