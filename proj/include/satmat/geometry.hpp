#pragma once

// Cross sections, faces, rows, diagonals, staircases and shells.

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "satmat/matrix.hpp"
#include "satmat/shape.hpp"

namespace satmat {

/// The cells whose coordinates in the dimensions of `fixed` take the given
/// values; the remaining dimensions are free.
struct CrossSectionSpec {
  std::map<std::size_t, int> fixed;

  std::size_t free_count(std::size_t d) const { return d - fixed.size(); }

  std::vector<std::size_t> free_dims(std::size_t d) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < d; ++i)
      if (!fixed.count(i)) out.push_back(i);
    return out;
  }

  bool contains(const Coord& c) const {
    for (auto [dim, value] : fixed)
      if (c[dim] != value) return false;
    return true;
  }

  /// Every fixed coordinate sits at 1 or at the extent of its dimension.
  bool is_face(const Shape& shape) const {
    for (auto [dim, value] : fixed)
      if (value != 1 && value != shape.extent(dim)) return false;
    return true;
  }

  friend bool operator==(const CrossSectionSpec&, const CrossSectionSpec&) = default;
};

/// The i-row through c: every coordinate but dimension i fixed to c's.
inline CrossSectionSpec row_through(const Coord& c, std::size_t i) {
  CrossSectionSpec s;
  for (std::size_t j = 0; j < c.size(); ++j)
    if (j != i) s.fixed[j] = c[j];
  return s;
}

/// The (d-1)-dimensional cross section fixing dimension i to value.
inline CrossSectionSpec hyperplane(std::size_t i, int value) {
  CrossSectionSpec s;
  s.fixed[i] = value;
  return s;
}

inline std::vector<Coord> cross_section_cells(const Shape& shape, const CrossSectionSpec& spec) {
  for (auto [dim, value] : spec.fixed)
    if (dim >= shape.dims() || value < 1 || value > shape.extent(dim))
      throw std::invalid_argument("cross section does not fit the shape");
  std::vector<Coord> out;
  for_each_coord(shape, [&](const Coord& c) {
    if (spec.contains(c)) out.push_back(c);
  });
  return out;
}

inline std::size_t cross_section_weight(const Matrix01& m, const CrossSectionSpec& spec) {
  std::size_t w = 0;
  m.for_each_one([&](std::size_t i) { w += spec.contains(m.shape().coord(i)); });
  return w;
}

/// Diagonals start at cells with some coordinate equal to 1 and walk by +1
/// in every dimension. `f` receives each diagonal ordered top to bottom;
/// diagonals are visited in row-major order of their top cells.
template <typename F>
void for_each_diagonal(const Shape& shape, F&& f) {
  for_each_coord(shape, [&](const Coord& top) {
    bool starts = false;
    for (int x : top) starts |= (x == 1);
    if (!starts) return;
    std::vector<Coord> walk;
    Coord c = top;
    while (shape.contains(c)) {
      walk.push_back(c);
      for (std::size_t i = 0; i < c.size(); ++i) ++c[i];
    }
    f(walk);
  });
}

inline std::vector<std::vector<Coord>> diagonals(const Shape& shape) {
  std::vector<std::vector<Coord>> out;
  out.reserve(shape.diagonal_count());
  for_each_diagonal(shape, [&](const std::vector<Coord>& d) { out.push_back(d); });
  return out;
}

/// A set of coordinates, kept sorted in row-major order.
class Staircase {
 public:
  Staircase() = default;
  explicit Staircase(std::vector<Coord> coords) : coords_(std::move(coords)) {
    std::sort(coords_.begin(), coords_.end());
    coords_.erase(std::unique(coords_.begin(), coords_.end()), coords_.end());
  }

  std::size_t size() const { return coords_.size(); }
  bool empty() const { return coords_.empty(); }
  auto begin() const { return coords_.begin(); }
  auto end() const { return coords_.end(); }
  const std::vector<Coord>& coords() const { return coords_; }

  bool contains(const Coord& c) const { return std::binary_search(coords_.begin(), coords_.end(), c); }

  /// Pairwise incomparable.
  bool is_antichain() const {
    for (std::size_t a = 0; a < coords_.size(); ++a)
      for (std::size_t b = a + 1; b < coords_.size(); ++b)
        if (comparable(coords_[a], coords_[b])) return false;
    return true;
  }

  /// Number of members that are 1-entries of m.
  std::size_t weight(const Matrix01& m) const {
    std::size_t w = 0;
    for (const Coord& c : coords_) w += m.get(c);
    return w;
  }

  Matrix01 indicator(const Shape& shape) const { return Matrix01::from_ones(shape, coords_); }

  friend bool operator==(const Staircase&, const Staircase&) = default;

 private:
  std::vector<Coord> coords_;
};

/// Pairwise incomparable, one member per diagonal, diagonal_count members.
inline bool is_complete_staircase(const Staircase& s, const Shape& shape) {
  if (s.size() != shape.diagonal_count()) return false;
  for (const Coord& c : s)
    if (!shape.contains(c)) return false;
  if (!s.is_antichain()) return false;
  std::set<std::vector<int>> keys;
  for (const Coord& c : s)
    if (!keys.insert(diagonal_key(c)).second) return false;
  return true;
}

/// The complete staircase of cells with at least one coordinate at its maximum.
inline Staircase shell(const Shape& shape) {
  std::vector<Coord> out;
  for_each_coord(shape, [&](const Coord& c) {
    for (std::size_t i = 0; i < shape.dims(); ++i)
      if (c[i] == shape.extent(i)) {
        out.push_back(c);
        return;
      }
  });
  return Staircase(std::move(out));
}

enum class Side { above, member, below };

/// Position of c relative to a complete staircase. A cell that is neither
/// a member nor below any member is above the staircase.
inline Side side_of(const Coord& c, const Staircase& s) {
  if (s.contains(c)) return Side::member;
  for (const Coord& e : s)
    if (is_below(c, e)) return Side::below;
  return Side::above;
}

/// Every cell strictly below some member of the complete staircase s.
inline std::vector<Coord> entries_below(const Matrix01& m, const Staircase& s) {
  if (!is_complete_staircase(s, m.shape()))
    throw std::invalid_argument("entries_below requires a complete staircase");
  std::vector<Coord> out;
  for_each_coord(m.shape(), [&](const Coord& c) {
    if (side_of(c, s) == Side::below) out.push_back(c);
  });
  return out;
}

inline std::vector<Coord> entries_above(const Matrix01& m, const Staircase& s) {
  if (!is_complete_staircase(s, m.shape()))
    throw std::invalid_argument("entries_above requires a complete staircase");
  std::vector<Coord> out;
  for_each_coord(m.shape(), [&](const Coord& c) {
    if (s.contains(c)) return;
    for (const Coord& e : s)
      if (is_above(c, e)) {
        out.push_back(c);
        return;
      }
  });
  return out;
}

}  // namespace satmat
