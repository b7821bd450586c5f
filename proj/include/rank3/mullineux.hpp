#pragma once

#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"

namespace rank3 {

using Partition = std::vector<int>;

inline int partition_size(const Partition& l) {
  int n = 0;
  for (int x : l) n += x;
  return n;
}

inline bool is_partition(const Partition& l) {
  for (std::size_t i = 0; i < l.size(); ++i)
    if (l[i] <= 0 || (i && l[i] > l[i - 1])) return false;
  return true;
}

inline Partition parse_partition(const std::string& s) {
  Partition l;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) throw ParseError(0, "empty part in partition");
    std::size_t pos = 0;
    int v = std::stoi(tok, &pos);
    if (pos != tok.size()) throw ParseError(0, "bad part '" + tok + "'");
    l.push_back(v);
  }
  if (!is_partition(l)) throw DomainError("not a partition: " + s);
  return l;
}

inline std::string partition_to_string(const Partition& l) {
  std::string s;
  for (std::size_t i = 0; i < l.size(); ++i) s += (i ? "," : "") + std::to_string(l[i]);
  return s;
}

inline bool is_p_regular(const Partition& l, int p) {
  int run = 0;
  for (std::size_t i = 0; i < l.size(); ++i) {
    run = (i && l[i] == l[i - 1]) ? run + 1 : 1;
    if (run >= p) return false;
  }
  return true;
}

/// All partitions of n in lexicographically descending order.
inline std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int left, int maxp) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int x = std::min(left, maxp); x >= 1; --x) {
      cur.push_back(x);
      rec(left - x, x);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

/// Cells (row, col), 0-based, removed as the p-rim of l.
inline std::vector<std::pair<int, int>> p_rim(const Partition& l, int p) {
  std::vector<std::pair<int, int>> cells;
  int rows = static_cast<int>(l.size());
  int i = 0;
  while (i < rows) {
    // walk the rim starting at the right end of row i
    int r = i, c = l[i] - 1, taken = 0;
    while (taken < p) {
      cells.push_back({r, c});
      ++taken;
      if (r + 1 < rows && l[r + 1] > c) {
        ++r;
      } else if (c > 0) {
        --c;
      } else {
        r = rows;
        break;
      }
      if (r >= rows) break;
    }
    if (taken < p) break;
    i = cells.back().first + 1;
  }
  return cells;
}

inline Partition remove_cells(const Partition& l, const std::vector<std::pair<int, int>>& cells) {
  Partition m = l;
  for (auto& [r, c] : cells) (void)c, --m[r];
  Partition out;
  for (int x : m)
    if (x > 0) out.push_back(x);
  if (!is_partition(out)) throw InternalError("p-rim removal left a non-partition");
  return out;
}

struct MullineuxSymbol {
  std::vector<int> h, r;

  bool operator==(const MullineuxSymbol&) const = default;
  std::string to_string() const {
    std::string s = "[[";
    for (std::size_t i = 0; i < h.size(); ++i) s += (i ? "," : "") + std::to_string(h[i]);
    s += "],[";
    for (std::size_t i = 0; i < r.size(); ++i) s += (i ? "," : "") + std::to_string(r[i]);
    return s + "]]";
  }
};

struct FrobeniusSymbol {
  std::vector<int> a, b, eps;
};

inline MullineuxSymbol mullineux_symbol(const Partition& l, int p) {
  if (!is_partition(l)) throw DomainError("not a partition");
  if (!is_p_regular(l, p)) throw DomainError("partition is not p-regular");
  MullineuxSymbol m;
  Partition cur = l;
  while (!cur.empty()) {
    auto cells = p_rim(cur, p);
    m.h.push_back(static_cast<int>(cells.size()));
    m.r.push_back(static_cast<int>(cur.size()));
    cur = remove_cells(cur, cells);
  }
  return m;
}

inline int rim_eps(int h, int p) { return h % p == 0 ? 0 : 1; }

inline FrobeniusSymbol frobenius_symbol(const MullineuxSymbol& m, int p) {
  FrobeniusSymbol f;
  for (std::size_t i = 0; i < m.h.size(); ++i) {
    int e = rim_eps(m.h[i], p);
    f.a.push_back(m.h[i] - m.r[i]);
    f.b.push_back(m.r[i] - e);
    f.eps.push_back(e);
  }
  return f;
}

inline MullineuxSymbol symbol_from_frobenius(const FrobeniusSymbol& f) {
  MullineuxSymbol m;
  for (std::size_t i = 0; i < f.a.size(); ++i) {
    m.h.push_back(f.a[i] + f.b[i] + f.eps[i]);
    m.r.push_back(f.b[i] + f.eps[i]);
  }
  return m;
}

/// The unique p-regular partition with the given symbol, built column by column
/// from the last; each step searches the partitions mu over the previous one with
/// |mu| increased by h_i and r_i rows whose p-rim gives back the previous partition.
inline std::optional<Partition> partition_from_symbol(const MullineuxSymbol& m, int p) {
  std::function<std::optional<Partition>(std::size_t, const Partition&)> step =
      [&](std::size_t k, const Partition& inner) -> std::optional<Partition> {
    if (k == 0) return inner;
    std::size_t i = k - 1;
    int h = m.h[i], rows = m.r[i];
    if (rows < static_cast<int>(inner.size()) || h <= 0) return std::nullopt;
    std::vector<Partition> found;
    Partition mu(rows, 0);
    std::function<void(int, int)> fill = [&](int row, int left) {
      if (row == rows) {
        if (left == 0) {
          auto cells = p_rim(mu, p);
          if (static_cast<int>(cells.size()) == h && remove_cells(mu, cells) == inner && is_p_regular(mu, p))
            found.push_back(mu);
        }
        return;
      }
      int base = row < static_cast<int>(inner.size()) ? inner[row] : 0;
      int cap = row ? mu[row - 1] : base + left;
      for (int x = std::max(base, 1); x <= cap && x - base <= left; ++x) {
        mu[row] = x;
        fill(row + 1, left - (x - base));
      }
    };
    fill(0, h);
    for (auto& cand : found)
      if (auto r = step(i, cand)) return r;
    return std::nullopt;
  };
  auto res = step(m.h.size(), Partition{});
  if (res && mullineux_symbol(*res, p) == m) return res;
  return std::nullopt;
}

inline Partition mullineux_map(const Partition& l, int p) {
  auto M = mullineux_symbol(l, p);
  MullineuxSymbol img;
  for (std::size_t i = 0; i < M.h.size(); ++i) {
    img.h.push_back(M.h[i]);
    img.r.push_back(M.h[i] - M.r[i] + rim_eps(M.h[i], p));
  }
  auto res = partition_from_symbol(img, p);
  if (!res) throw InternalError("Mullineux image symbol does not reconstruct");
  return *res;
}

/// Same map through the Frobenius form: interchange the rows a and b.
inline Partition mullineux_map_frobenius(const Partition& l, int p) {
  auto f = frobenius_symbol(mullineux_symbol(l, p), p);
  std::swap(f.a, f.b);
  auto res = partition_from_symbol(symbol_from_frobenius(f), p);
  if (!res) throw InternalError("swapped Frobenius symbol does not reconstruct");
  return *res;
}

inline bool is_mullineux_fixed(const Partition& l, int p) {
  auto f = frobenius_symbol(mullineux_symbol(l, p), p);
  return f.a == f.b;
}

/// Condition on consecutive blocks of equal parts: l_i - l_{i+1} + a_i + a_{i+1} = 0 mod p.
inline bool is_js_partition(const Partition& l, int p) {
  if (!is_p_regular(l, p)) throw DomainError("partition is not p-regular");
  std::vector<std::pair<int, int>> blocks;
  for (int x : l) {
    if (!blocks.empty() && blocks.back().first == x)
      ++blocks.back().second;
    else
      blocks.push_back({x, 1});
  }
  for (std::size_t i = 0; i + 1 < blocks.size(); ++i) {
    int v = blocks[i].first - blocks[i + 1].first + blocks[i].second + blocks[i + 1].second;
    if (v % p != 0) return false;
  }
  return true;
}

}  // namespace rank3
