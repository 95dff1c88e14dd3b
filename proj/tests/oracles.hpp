#pragma once

// Brute-force reference implementations. They share only the bit storage
// with the library: containment enumerates every tuple of index subsets,
// and the extremal functions enumerate every host matrix.

#include <functional>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "satmat/matrix.hpp"

namespace oracle {

using satmat::Coord;
using satmat::Matrix01;
using satmat::Shape;
using Selection = std::vector<std::vector<int>>;

inline void subsets(int n, int l, std::vector<std::vector<int>>& out) {
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int from) {
    if (static_cast<int>(cur.size()) == l) {
      out.push_back(cur);
      return;
    }
    for (int v = from; v <= n; ++v) {
      cur.push_back(v);
      rec(v + 1);
      cur.pop_back();
    }
  };
  rec(1);
}

/// Every selection tuple, in lexicographic order.
inline std::vector<Selection> all_selections(const Shape& host, const Shape& pat) {
  std::vector<std::vector<std::vector<int>>> per_dim(host.dims());
  for (std::size_t i = 0; i < host.dims(); ++i) subsets(host.extent(i), pat.extent(i), per_dim[i]);
  std::vector<Selection> out;
  Selection cur(host.dims());
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == host.dims()) {
      out.push_back(cur);
      return;
    }
    for (const auto& s : per_dim[i]) {
      cur[i] = s;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

inline Coord image(const Selection& sel, const Coord& pc) {
  std::vector<int> x(pc.size());
  for (std::size_t i = 0; i < pc.size(); ++i) x[i] = sel[i][pc[i] - 1];
  return Coord(x);
}

/// Embeddings of p in m; with `anchor`, only those mapping a 1-entry of p
/// onto anchor; with `target`, only those mapping exactly target onto anchor.
inline std::vector<Selection> embeddings(const Matrix01& m, const Matrix01& p,
                                         std::optional<Coord> anchor = std::nullopt,
                                         std::optional<Coord> target = std::nullopt) {
  std::vector<Selection> out;
  if (!p.shape().fits_in(m.shape())) return out;
  const auto ones = p.one_entries();
  for (const Selection& sel : all_selections(m.shape(), p.shape())) {
    bool ok = true, through = !anchor;
    for (const Coord& o : ones) {
      const Coord h = image(sel, o);
      if (!m.get(h)) {
        ok = false;
        break;
      }
      if (anchor && h == *anchor && (!target || o == *target)) through = true;
    }
    if (ok && through) out.push_back(sel);
  }
  return out;
}

inline bool contains(const Matrix01& m, const Matrix01& p) { return !embeddings(m, p).empty(); }

inline bool saturating(const Matrix01& m, const Matrix01& p) {
  if (contains(m, p)) return false;
  for (std::size_t lin = 0; lin < m.cell_count(); ++lin) {
    if (m.get(lin)) continue;
    Matrix01 f = m;
    f.set(lin, true);
    if (!contains(f, p)) return false;
  }
  return true;
}

inline bool semisaturating(const Matrix01& m, const Matrix01& p) {
  for (std::size_t lin = 0; lin < m.cell_count(); ++lin) {
    if (m.get(lin)) continue;
    Matrix01 f = m;
    f.set(lin, true);
    if (embeddings(f, p, m.shape().coord(lin)).empty()) return false;
  }
  return true;
}

struct Extremes {
  std::size_t ex = 0, sat = 0, ssat = 0;
  bool any_avoiding = false;
};

/// ex, sat and ssat over all 2^cells matrices of `shape`.
inline Extremes extremes(const Shape& shape, const Matrix01& p) {
  Extremes r;
  r.sat = r.ssat = shape.cell_count() + 1;
  const std::size_t n = shape.cell_count();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Matrix01 m(shape);
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) m.set(i, true);
    const std::size_t w = m.weight();
    if (!contains(m, p)) {
      r.any_avoiding = true;
      r.ex = std::max(r.ex, w);
    }
    if (w < r.sat && saturating(m, p)) r.sat = w;
    if (w < r.ssat && semisaturating(m, p)) r.ssat = w;
  }
  return r;
}

/// Diagonals as classes of equal coordinate differences.
inline std::map<std::vector<int>, std::vector<Coord>> diagonal_classes(const Shape& shape) {
  std::map<std::vector<int>, std::vector<Coord>> out;
  for (std::size_t lin = 0; lin < shape.cell_count(); ++lin) {
    const Coord c = shape.coord(lin);
    std::vector<int> key;
    for (std::size_t i = 1; i < c.size(); ++i) key.push_back(c[i] - c[0]);
    out[key].push_back(c);
  }
  return out;
}

}  // namespace oracle
