#pragma once

// Conditions deciding whether ssat(n; P, d) is bounded.
//
// (i)  every d'-dimensional face f (d' in [1, d-1]) holds a 1-entry o that
//      is the only 1-entry of each hyperplane through o fixing a dimension
//      free in f;
// (ii) some 1-entry is the only 1-entry of every hyperplane through it.

#include <bit>
#include <optional>
#include <stdexcept>
#include <vector>

#include "satmat/geometry.hpp"

namespace satmat {

namespace detail {
inline void require_nonzero(const Matrix01& p) {
  if (p.is_zero()) throw std::invalid_argument("pattern has no 1-entry");
}
}  // namespace detail

/// The hyperplane fixing dimension i at o_i holds exactly one 1-entry.
inline bool lone_in_hyperplane(const Matrix01& p, const Coord& o, std::size_t i) {
  p.shape().check(o);
  if (!p.get(o)) throw std::invalid_argument("o " + o.to_string() + " is a 0-entry");
  if (i >= p.dims()) throw std::invalid_argument("dimension out of range");
  return cross_section_weight(p, hyperplane(i, o[i])) == 1;
}

inline std::optional<Coord> property_ii(const Matrix01& p) {
  detail::require_nonzero(p);
  for (const Coord& o : p.one_entries()) {
    bool lone = true;
    for (std::size_t i = 0; i < p.dims() && lone; ++i) lone = lone_in_hyperplane(p, o, i);
    if (lone) return o;
  }
  return std::nullopt;
}

/// Faces of every dimension d' in [1, d-1], ordered by the number of fixed
/// dimensions, then by fixed dimension set, then by low/high values.
inline std::vector<CrossSectionSpec> faces(const Shape& shape) {
  const std::size_t d = shape.dims();
  std::vector<CrossSectionSpec> out;
  for (std::size_t fixed = 1; fixed < d; ++fixed) {
    // Subsets of size `fixed` in lexicographic order.
    std::vector<std::size_t> subset(fixed);
    for (std::size_t i = 0; i < fixed; ++i) subset[i] = i;
    while (true) {
      for (std::size_t bits = 0; bits < (std::size_t{1} << fixed); ++bits) {
        CrossSectionSpec f;
        for (std::size_t j = 0; j < fixed; ++j) {
          const bool high = bits >> (fixed - 1 - j) & 1;
          f.fixed[subset[j]] = high ? shape.extent(subset[j]) : 1;
        }
        out.push_back(std::move(f));
      }
      std::size_t j = fixed;
      while (j > 0 && subset[j - 1] == d - fixed + j - 1) --j;
      if (j == 0) break;
      ++subset[j - 1];
      for (std::size_t k = j; k < fixed; ++k) subset[k] = subset[k - 1] + 1;
    }
  }
  return out;
}

/// 1-entry of face f that is lone in every hyperplane fixing a free dimension of f.
inline std::optional<Coord> face_witness(const Matrix01& p, const CrossSectionSpec& f) {
  const auto free = f.free_dims(p.dims());
  for (const Coord& o : p.one_entries()) {
    if (!f.contains(o)) continue;
    bool lone = true;
    for (std::size_t j : free)
      if (!(lone = lone_in_hyperplane(p, o, j))) break;
    if (lone) return o;
  }
  return std::nullopt;
}

/// First face violating (i), or nothing when (i) holds. Vacuous for d = 1.
inline std::optional<CrossSectionSpec> property_i(const Matrix01& p) {
  detail::require_nonzero(p);
  for (const CrossSectionSpec& f : faces(p.shape()))
    if (!face_witness(p, f)) return f;
  return std::nullopt;
}

/// A 1-entry that is the only 1-entry of every d'-dimensional cross section
/// through it. Absence means ssat(n; P, d) grows at least like n^(d - d').
inline std::optional<Coord> lone_entry_condition(const Matrix01& p, std::size_t dprime) {
  const std::size_t d = p.dims();
  if (dprime < 1 || dprime >= d) throw std::invalid_argument("d' must satisfy 1 <= d' < d");
  detail::require_nonzero(p);
  const std::size_t fixed = d - dprime;
  for (const Coord& o : p.one_entries()) {
    bool lone = true;
    for (std::size_t mask = 0; mask < (std::size_t{1} << d) && lone; ++mask) {
      if (static_cast<std::size_t>(std::popcount(mask)) != fixed) continue;
      CrossSectionSpec s;
      for (std::size_t i = 0; i < d; ++i)
        if (mask >> i & 1) s.fixed[i] = o[i];
      lone = cross_section_weight(p, s) == 1;
    }
    if (lone) return o;
  }
  return std::nullopt;
}

struct SsatVerdict {
  bool bounded = false;
  bool property_i_holds = false;
  bool property_ii_holds = false;
  std::optional<CrossSectionSpec> failing_face;
  std::optional<Coord> witness_entry;
};

inline SsatVerdict classify_ssat(const Matrix01& p) {
  SsatVerdict v;
  v.failing_face = property_i(p);
  v.witness_entry = property_ii(p);
  v.property_i_holds = !v.failing_face;
  v.property_ii_holds = v.witness_entry.has_value();
  v.bounded = v.property_i_holds && v.property_ii_holds;
  return v;
}

}  // namespace satmat
