#pragma once

// Saturation verdicts.
//
// M is saturating for P when it avoids P and every 0 -> 1 flip creates a
// copy of P. M is semisaturating when every flip creates a new copy, one
// in which the flipped entry matches a 1-entry of P.
//
// All-zero patterns follow the convention sat = ssat = 0 whenever the
// pattern fits: only the all-zero host is saturating and every host is
// semisaturating. A pattern that does not fit is treated literally.

#include <optional>

#include "satmat/containment.hpp"

namespace satmat {

enum class FailureKind { contains_pattern, dead_flip };

inline const char* to_string(FailureKind k) {
  return k == FailureKind::contains_pattern ? "contains_pattern" : "dead_flip";
}

struct SaturationReport {
  bool verdict = true;
  std::optional<FailureKind> failure_kind;
  std::optional<Coord> dead_flip;            // first 0-entry whose flip creates no (new) copy
  std::optional<Embedding> existing_copy;    // copy already present in M

  static SaturationReport pass() { return {}; }
  static SaturationReport dead(Coord z) {
    return {false, FailureKind::dead_flip, std::move(z), std::nullopt};
  }
  static SaturationReport copy(Embedding e) {
    return {false, FailureKind::contains_pattern, std::nullopt, std::move(e)};
  }
};

namespace detail {
inline void check_dims(const Matrix01& m, const Matrix01& p) {
  if (m.dims() != p.dims()) throw std::invalid_argument("host and pattern differ in dimension count");
}

/// First 0-entry of m (row-major) whose flip has no copy of p through it.
inline std::optional<Coord> first_dead_flip(const Matrix01& m, const Matrix01& p) {
  Matcher matcher(m, p);
  for (std::size_t lin = 0; lin < m.cell_count(); ++lin) {
    if (m.get(lin)) continue;
    const Coord z = m.shape().coord(lin);
    matcher.set_extra(z);
    if (!matcher.exists_through(z)) return z;
  }
  return std::nullopt;
}
}  // namespace detail

inline bool avoids(const Matrix01& m, const Matrix01& p) {
  detail::check_dims(m, p);
  return !contains(m, p).has_value();
}

inline SaturationReport is_saturating(const Matrix01& m, const Matrix01& p) {
  detail::check_dims(m, p);
  if (auto e = contains(m, p)) {
    if (p.is_zero() && m.is_zero()) return SaturationReport::pass();
    return SaturationReport::copy(std::move(*e));
  }
  // Once m avoids p, any copy created by a flip must use the flipped entry.
  if (auto z = detail::first_dead_flip(m, p)) return SaturationReport::dead(std::move(*z));
  return SaturationReport::pass();
}

inline SaturationReport is_semisaturating(const Matrix01& m, const Matrix01& p) {
  detail::check_dims(m, p);
  if (p.is_zero() && p.shape().fits_in(m.shape())) return SaturationReport::pass();
  if (auto z = detail::first_dead_flip(m, p)) return SaturationReport::dead(std::move(*z));
  return SaturationReport::pass();
}

}  // namespace satmat
