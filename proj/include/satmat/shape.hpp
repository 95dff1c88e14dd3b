#pragma once

// Shapes and coordinates of d-dimensional matrices.
//
// Dimension indices are 0-based in the API (dimension i of d), coordinate
// values are 1-based: a coordinate x satisfies 1 <= x[i] <= extent(i).
// Cells are laid out row-major with the last dimension varying fastest.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace satmat {

inline constexpr std::size_t kDefaultMaxCells = std::size_t{1} << 24;

class Coord {
 public:
  Coord() = default;
  Coord(std::initializer_list<int> idx) : idx_(idx) {}
  explicit Coord(std::vector<int> idx) : idx_(std::move(idx)) {}

  std::size_t size() const { return idx_.size(); }
  int operator[](std::size_t i) const { return idx_[i]; }
  int& operator[](std::size_t i) { return idx_[i]; }

  auto begin() const { return idx_.begin(); }
  auto end() const { return idx_.end(); }
  const std::vector<int>& values() const { return idx_; }

  friend bool operator==(const Coord&, const Coord&) = default;
  friend auto operator<=>(const Coord&, const Coord&) = default;

  std::string to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < idx_.size(); ++i) os << (i ? "," : "") << idx_[i];
    os << ')';
    return os.str();
  }

 private:
  std::vector<int> idx_;
};

class Shape {
 public:
  Shape() = default;

  explicit Shape(std::vector<int> extents, std::size_t max_cells = kDefaultMaxCells)
      : extents_(std::move(extents)) {
    if (extents_.empty()) throw std::invalid_argument("shape needs at least one dimension");
    std::size_t cells = 1;
    for (int n : extents_) {
      if (n < 1) throw std::invalid_argument("shape extents must be positive");
      if (cells > max_cells / static_cast<std::size_t>(n))
        throw std::invalid_argument("shape exceeds the cell cap of " + std::to_string(max_cells));
      cells *= static_cast<std::size_t>(n);
    }
    cell_count_ = cells;
    strides_.assign(extents_.size(), 1);
    for (std::size_t i = extents_.size() - 1; i > 0; --i)
      strides_[i - 1] = strides_[i] * static_cast<std::size_t>(extents_[i]);
  }

  Shape(std::initializer_list<int> extents) : Shape(std::vector<int>(extents)) {}

  /// Cube n x ... x n with d dimensions.
  static Shape cube(std::size_t d, int n) { return Shape(std::vector<int>(d, n)); }

  std::size_t dims() const { return extents_.size(); }
  int extent(std::size_t i) const { return extents_[i]; }
  const std::vector<int>& extents() const { return extents_; }
  std::size_t stride(std::size_t i) const { return strides_[i]; }
  std::size_t cell_count() const { return cell_count_; }

  /// Number of diagonals: prod n_i - prod (n_i - 1).
  std::size_t diagonal_count() const {
    std::size_t inner = 1;
    for (int n : extents_) inner *= static_cast<std::size_t>(n - 1);
    return cell_count_ - inner;
  }

  int max_extent() const { return *std::max_element(extents_.begin(), extents_.end()); }
  int min_extent() const { return *std::min_element(extents_.begin(), extents_.end()); }

  bool contains(const Coord& c) const {
    if (c.size() != dims()) return false;
    for (std::size_t i = 0; i < dims(); ++i)
      if (c[i] < 1 || c[i] > extents_[i]) return false;
    return true;
  }

  void check(const Coord& c) const {
    if (c.size() != dims())
      throw std::invalid_argument("coordinate " + c.to_string() + " has wrong dimension count");
    if (!contains(c)) throw std::out_of_range("coordinate " + c.to_string() + " out of bounds");
  }

  std::size_t linear(const Coord& c) const {
    std::size_t at = 0;
    for (std::size_t i = 0; i < dims(); ++i) at += static_cast<std::size_t>(c[i] - 1) * strides_[i];
    return at;
  }

  Coord coord(std::size_t linear) const {
    std::vector<int> idx(dims());
    for (std::size_t i = 0; i < dims(); ++i) {
      idx[i] = static_cast<int>(linear / strides_[i]) + 1;
      linear %= strides_[i];
    }
    return Coord(std::move(idx));
  }

  /// Same dimension count with every extent shrunk (or grown) by delta.
  Shape shifted(int delta) const {
    std::vector<int> e = extents_;
    for (int& n : e) n += delta;
    return Shape(std::move(e));
  }

  bool fits_in(const Shape& host) const {
    if (host.dims() != dims()) return false;
    for (std::size_t i = 0; i < dims(); ++i)
      if (extents_[i] > host.extent(i)) return false;
    return true;
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < extents_.size(); ++i)
      s += (i ? "x" : "") + std::to_string(extents_[i]);
    return s;
  }

  friend bool operator==(const Shape& a, const Shape& b) { return a.extents_ == b.extents_; }

 private:
  std::vector<int> extents_;
  std::vector<std::size_t> strides_;
  std::size_t cell_count_ = 0;
};

/// Iterate every coordinate of shape in row-major order.
template <typename F>
void for_each_coord(const Shape& shape, F&& f) {
  std::vector<int> idx(shape.dims(), 1);
  for (std::size_t n = 0; n < shape.cell_count(); ++n) {
    f(Coord(idx));
    for (std::size_t i = shape.dims(); i-- > 0;) {
      if (++idx[i] <= shape.extent(i)) break;
      idx[i] = 1;
    }
  }
}

enum class Order { above, below, incomparable, equal };

inline const char* to_string(Order o) {
  switch (o) {
    case Order::above: return "above";
    case Order::below: return "below";
    case Order::incomparable: return "incomparable";
    case Order::equal: return "equal";
  }
  return "?";
}

namespace detail {
inline void check_same_dims(const Coord& a, const Coord& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("coordinates " + a.to_string() + " and " + b.to_string() +
                                " differ in dimension count");
}
}  // namespace detail

/// a is above b: strictly smaller in every coordinate.
inline bool is_above(const Coord& a, const Coord& b) {
  detail::check_same_dims(a, b);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a[i] < b[i])) return false;
  return true;
}

inline bool is_below(const Coord& a, const Coord& b) { return is_above(b, a); }

inline bool is_semiabove(const Coord& a, const Coord& b) {
  detail::check_same_dims(a, b);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline bool is_semibelow(const Coord& a, const Coord& b) { return is_semiabove(b, a); }

inline bool comparable(const Coord& a, const Coord& b) { return is_above(a, b) || is_above(b, a); }

inline Order order_relation(const Coord& a, const Coord& b) {
  detail::check_same_dims(a, b);
  if (a == b) return Order::equal;
  if (is_above(a, b)) return Order::above;
  if (is_above(b, a)) return Order::below;
  return Order::incomparable;
}

/// Cells share a diagonal iff their keys (x_2 - x_1, ..., x_d - x_1) agree.
inline std::vector<int> diagonal_key(const Coord& c) {
  std::vector<int> key;
  key.reserve(c.size() ? c.size() - 1 : 0);
  for (std::size_t i = 1; i < c.size(); ++i) key.push_back(c[i] - c[0]);
  return key;
}

}  // namespace satmat
