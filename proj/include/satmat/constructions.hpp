#pragma once

// Explicit matrix constructions and structural extractions.

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "satmat/containment.hpp"
#include "satmat/geometry.hpp"

namespace satmat {

/// A in the low corner, B in the high corner, zeros elsewhere.
inline Matrix01 diagonal_concatenation(const Matrix01& a, const Matrix01& b) {
  if (a.dims() != b.dims()) throw std::invalid_argument("concatenated matrices differ in dimension count");
  const std::size_t d = a.dims();
  std::vector<int> ext(d);
  for (std::size_t i = 0; i < d; ++i) ext[i] = a.shape().extent(i) + b.shape().extent(i);
  Matrix01 m{Shape(std::move(ext))};
  a.for_each_one([&](std::size_t lin) { m.set(a.shape().coord(lin), true); });
  b.for_each_one([&](std::size_t lin) {
    Coord c = b.shape().coord(lin);
    for (std::size_t i = 0; i < d; ++i) c[i] += a.shape().extent(i);
    m.set(c, true);
  });
  return m;
}

/// d-dimensional k x ... x k identity pattern.
inline Matrix01 identity_pattern(std::size_t d, int k) {
  Matrix01 m(Shape::cube(d, k));
  for (int x = 1; x <= k; ++x) m.set(Coord(std::vector<int>(d, x)), true);
  return m;
}

/// The 1 x ... x 1 matrix holding a single 1-entry.
inline Matrix01 unit_pattern(std::size_t d) { return identity_pattern(d, 1); }

/// Bottommost 1-entry of every diagonal, or nothing if some diagonal is all 0.
inline std::optional<Staircase> bottom_staircase(const Matrix01& m) {
  std::vector<Coord> picked;
  bool every = true;
  for_each_diagonal(m.shape(), [&](const std::vector<Coord>& diag) {
    if (!every) return;
    for (auto it = diag.rbegin(); it != diag.rend(); ++it)
      if (m.get(*it)) {
        picked.push_back(*it);
        return;
      }
    every = false;
  });
  if (!every) return std::nullopt;
  return Staircase(std::move(picked));
}

/// Zero out t, then drop every cell with a coordinate at its maximum.
inline Matrix01 strip_shell(const Matrix01& m, const Staircase& t) {
  const Shape& s = m.shape();
  if (s.min_extent() < 2) throw std::invalid_argument("strip_shell needs every extent >= 2");
  if (!is_complete_staircase(t, s)) throw std::invalid_argument("strip_shell needs a complete staircase");
  Matrix01 cleared = m;
  for (const Coord& c : t) cleared.set(c, false);
  Matrix01 out(s.shifted(-1));
  for_each_coord(out.shape(), [&](const Coord& c) {
    if (cleared.get(c)) out.set(c, true);
  });
  return out;
}

/// m in the low corner of a matrix one larger in every dimension whose
/// shell is all 1.
inline Matrix01 wrap_in_full_shell(const Matrix01& m) {
  const Shape big = m.shape().shifted(1);
  Matrix01 out = shell(big).indicator(big);
  m.for_each_one([&](std::size_t lin) { out.set(m.shape().coord(lin), true); });
  return out;
}

/// Union of the shells of the nested shapes n, n-1, ..., n-k+1 anchored at
/// the low corner: a cell is 1 iff min_i (n_i - x_i) <= k - 1.
inline Matrix01 identity_layers(const Shape& shape, int k) {
  if (k < 1 || k > shape.min_extent())
    throw std::invalid_argument("identity_layers needs 1 <= k <= min extent");
  Matrix01 m(shape);
  for_each_coord(shape, [&](const Coord& c) {
    int slack = shape.extent(0) - c[0];
    for (std::size_t i = 1; i < shape.dims(); ++i) slack = std::min(slack, shape.extent(i) - c[i]);
    if (slack <= k - 1) m.set(c, true);
  });
  return m;
}

/// prod n_i - prod (n_i - k), clamped at zero per factor.
inline std::size_t identity_closed_form(const Shape& shape, int k) {
  std::size_t inner = 1;
  for (int n : shape.extents()) inner *= static_cast<std::size_t>(std::max(0, n - k));
  return shape.cell_count() - inner;
}

inline std::vector<std::size_t> row_major_order(const Shape& shape) {
  std::vector<std::size_t> order(shape.cell_count());
  std::iota(order.begin(), order.end(), std::size_t{0});
  return order;
}

inline std::vector<std::size_t> random_order(const Shape& shape, std::uint64_t seed) {
  std::vector<std::size_t> order = row_major_order(shape);
  std::mt19937_64 rng(seed);
  std::shuffle(order.begin(), order.end(), rng);
  return order;
}

enum class GreedyStatus { saturated, pattern_does_not_fit };

struct GreedyResult {
  Matrix01 matrix;
  GreedyStatus status = GreedyStatus::saturated;
};

/// One pass over `order`, turning each 0 into a 1 unless that creates a
/// copy of p. `seed` (default all-zero) must avoid p.
inline GreedyResult greedy_saturate(const Matrix01& p, const Shape& shape,
                                    const std::vector<std::size_t>& order,
                                    std::optional<Matrix01> seed = std::nullopt) {
  if (p.dims() != shape.dims()) throw std::invalid_argument("pattern and shape differ in dimension count");
  if (p.is_zero()) throw std::invalid_argument("greedy_saturate needs a nonzero pattern");
  if (order.size() != shape.cell_count()) throw std::invalid_argument("order must list every cell once");
  {
    std::vector<bool> seen(shape.cell_count(), false);
    for (std::size_t i : order) {
      if (i >= seen.size() || seen[i]) throw std::invalid_argument("order must be a permutation of the cells");
      seen[i] = true;
    }
  }
  if (!p.shape().fits_in(shape)) return {Matrix01::ones(shape), GreedyStatus::pattern_does_not_fit};

  Matrix01 m = seed ? std::move(*seed) : Matrix01(shape);
  if (!(m.shape() == shape)) throw std::invalid_argument("seed matrix has the wrong shape");
  if (contains(m, p)) throw std::invalid_argument("seed matrix already contains the pattern");
  for (std::size_t lin : order) {
    if (m.get(lin)) continue;
    const Coord z = shape.coord(lin);
    Matcher matcher(m, p);
    matcher.set_extra(z);
    if (!matcher.exists_through(z)) m.set(lin, true);
  }
  return {std::move(m), GreedyStatus::saturated};
}

/// Peel k layers of bottommost 1-entries. Present iff the layers consume
/// every 1-entry, each is pairwise incomparable, and layer j has weight
/// prod (n_i - j + 1) - prod (n_i - j).
inline std::optional<std::vector<Staircase>> staircase_decompose(const Matrix01& m, int k) {
  const Shape& s = m.shape();
  if (k < 1 || k > s.min_extent()) return std::nullopt;
  Matrix01 rest = m;
  std::vector<Staircase> layers;
  for (int j = 1; j <= k; ++j) {
    std::vector<Coord> layer;
    for_each_diagonal(s, [&](const std::vector<Coord>& diag) {
      for (auto it = diag.rbegin(); it != diag.rend(); ++it)
        if (rest.get(*it)) {
          layer.push_back(*it);
          return;
        }
    });
    Staircase st(std::move(layer));
    const std::size_t expected = identity_closed_form(s, j) - identity_closed_form(s, j - 1);
    if (st.size() != expected || !st.is_antichain()) return std::nullopt;
    for (const Coord& c : st) rest.set(c, false);
    layers.push_back(std::move(st));
  }
  if (!rest.is_zero()) return std::nullopt;
  return layers;
}

inline Coord first_one(const Matrix01& p) {
  std::optional<Coord> out;
  p.for_each_one([&](std::size_t lin) {
    if (!out) out = p.shape().coord(lin);
  });
  if (!out) throw std::invalid_argument("pattern has no 1-entry");
  return *out;
}

/// n x ... x n matrix that is 0 exactly on the box anchor_i <= x_i <= n - (l_i - anchor_i).
inline Matrix01 offset_block(const Matrix01& p, const Coord& anchor, int n) {
  p.shape().check(anchor);
  if (!p.get(anchor)) throw std::invalid_argument("offset_block anchor must be a 1-entry");
  if (n < p.shape().max_extent()) throw std::invalid_argument("offset_block needs n >= every pattern extent");
  const std::size_t d = p.dims();
  Matrix01 m = Matrix01::ones(Shape::cube(d, n));
  for_each_coord(m.shape(), [&](const Coord& c) {
    for (std::size_t i = 0; i < d; ++i)
      if (c[i] < anchor[i] || c[i] > n - (p.shape().extent(i) - anchor[i])) return;
    m.set(c, false);
  });
  return m;
}

inline Matrix01 offset_block(const Matrix01& p, int n) { return offset_block(p, first_one(p), n); }

/// n x ... x n matrix whose 1-entries are the cells with every coordinate in
/// the low band [1, l_i - 1] or the high band [n - l_i + 2, n].
inline Matrix01 corner_block(const Matrix01& p, int n) {
  if (n < 2 * p.shape().max_extent() - 1)
    throw std::invalid_argument("corner_block needs n >= 2 * max extent - 1");
  const std::size_t d = p.dims();
  Matrix01 m(Shape::cube(d, n));
  for_each_coord(m.shape(), [&](const Coord& c) {
    for (std::size_t i = 0; i < d; ++i) {
      const int l = p.shape().extent(i);
      if (!(c[i] < l || c[i] > n + 1 - l)) return;
    }
    m.set(c, true);
  });
  return m;
}

inline std::size_t corner_block_weight(const Shape& pattern_shape) {
  std::size_t w = 1;
  for (int l : pattern_shape.extents()) w *= static_cast<std::size_t>(2 * (l - 1));
  return w;
}

}  // namespace satmat
