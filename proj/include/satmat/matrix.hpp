#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "satmat/shape.hpp"

namespace satmat {

/// Dense bit-packed d-dimensional 0-1 matrix with a cached weight.
class Matrix01 {
 public:
  Matrix01() = default;

  explicit Matrix01(Shape shape, bool fill = false)
      : shape_(std::move(shape)), words_((shape_.cell_count() + 63) / 64, 0) {
    if (fill) {
      for (std::size_t i = 0; i < shape_.cell_count(); ++i) words_[i / 64] |= mask(i);
      weight_ = shape_.cell_count();
    }
  }

  static Matrix01 zeros(const Shape& shape) { return Matrix01(shape, false); }
  static Matrix01 ones(const Shape& shape) { return Matrix01(shape, true); }

  /// Build from a row-major string of '0'/'1' characters.
  static Matrix01 from_bits(const Shape& shape, const std::string& bits) {
    if (bits.size() != shape.cell_count())
      throw std::invalid_argument("expected " + std::to_string(shape.cell_count()) +
                                  " cells, got " + std::to_string(bits.size()));
    Matrix01 m(shape);
    for (std::size_t i = 0; i < bits.size(); ++i) {
      if (bits[i] == '1')
        m.set(i, true);
      else if (bits[i] != '0')
        throw std::invalid_argument("cell values must be 0 or 1");
    }
    return m;
  }

  /// Build from the list of 1-entry coordinates.
  static Matrix01 from_ones(const Shape& shape, const std::vector<Coord>& ones) {
    Matrix01 m(shape);
    for (const Coord& c : ones) m.set(c, true);
    return m;
  }

  const Shape& shape() const { return shape_; }
  std::size_t dims() const { return shape_.dims(); }
  std::size_t cell_count() const { return shape_.cell_count(); }
  std::size_t weight() const { return weight_; }
  bool is_zero() const { return weight_ == 0; }
  bool is_full() const { return weight_ == shape_.cell_count(); }

  bool get(std::size_t linear) const { return (words_[linear / 64] & mask(linear)) != 0; }
  bool get(const Coord& c) const {
    shape_.check(c);
    return get(shape_.linear(c));
  }
  bool operator[](const Coord& c) const { return get(c); }

  void set(std::size_t linear, bool value) {
    const bool old = get(linear);
    if (old == value) return;
    words_[linear / 64] ^= mask(linear);
    if (value)
      ++weight_;
    else
      --weight_;
  }
  void set(const Coord& c, bool value) {
    shape_.check(c);
    set(shape_.linear(c), value);
  }

  /// Copy with the cell at c toggled.
  Matrix01 flipped(const Coord& c) const {
    Matrix01 m = *this;
    m.set(c, !get(c));
    return m;
  }

  std::vector<Coord> one_entries() const {
    std::vector<Coord> out;
    out.reserve(weight_);
    for_each_one([&](std::size_t i) { out.push_back(shape_.coord(i)); });
    return out;
  }

  /// Visit linear indices of 1-entries in increasing order.
  template <typename F>
  void for_each_one(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        const int b = std::countr_zero(bits);
        f(w * 64 + static_cast<std::size_t>(b));
        bits &= bits - 1;
      }
    }
  }

  std::string bits() const {
    std::string s(shape_.cell_count(), '0');
    for_each_one([&](std::size_t i) { s[i] = '1'; });
    return s;
  }

  /// Lexicographic order of the row-major bit strings (0 < 1).
  bool lex_less(const Matrix01& other) const { return bits() < other.bits(); }

  friend bool operator==(const Matrix01& a, const Matrix01& b) {
    return a.shape_ == b.shape_ && a.words_ == b.words_;
  }

 private:
  static std::uint64_t mask(std::size_t i) { return std::uint64_t{1} << (i % 64); }

  Shape shape_;
  std::vector<std::uint64_t> words_;
  std::size_t weight_ = 0;
};

}  // namespace satmat
