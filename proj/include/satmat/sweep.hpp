#pragma once

// Tabulation of weights over a range of cube sizes n x ... x n.

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "satmat/constructions.hpp"
#include "satmat/exact_search.hpp"

namespace satmat {

struct SweepSpec {
  Matrix01 pattern;
  int n_lo = 1;
  int n_hi = 1;
  bool oracle = true;
  SearchBudget budget;
  std::optional<std::uint64_t> seed;  // greedy order; row-major when absent
};

struct SweepRow {
  int n = 0;
  std::optional<std::size_t> closed_form;  // identity patterns only
  std::size_t greedy_weight = 0;
  std::optional<std::size_t> layers_weight;  // identity patterns only
  std::optional<std::size_t> oracle_sat;     // absent when skipped
  std::optional<std::size_t> oracle_ex;
};

/// k + 1 when p is the (k+1)-extent identity pattern.
inline std::optional<int> identity_extent(const Matrix01& p) {
  const int l = p.shape().extent(0);
  for (int n : p.shape().extents())
    if (n != l) return std::nullopt;
  if (!(p == identity_pattern(p.dims(), l))) return std::nullopt;
  return l;
}

inline std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
  if (spec.n_lo < 1 || spec.n_lo > spec.n_hi) throw std::invalid_argument("sweep needs 1 <= n_lo <= n_hi");
  if (spec.pattern.is_zero()) throw std::invalid_argument("sweep needs a nonzero pattern");
  const std::size_t d = spec.pattern.dims();
  const auto ident = identity_extent(spec.pattern);
  std::vector<SweepRow> rows;
  for (int n = spec.n_lo; n <= spec.n_hi; ++n) {
    const Shape shape = Shape::cube(d, n);
    SweepRow row;
    row.n = n;
    if (ident && *ident - 1 <= n) {
      const int k = *ident - 1;
      row.closed_form = identity_closed_form(shape, k);
      row.layers_weight = k >= 1 ? identity_layers(shape, k).weight() : 0;
    }
    const auto order = spec.seed ? random_order(shape, *spec.seed + static_cast<std::uint64_t>(n))
                                 : row_major_order(shape);
    row.greedy_weight = greedy_saturate(spec.pattern, shape, order).matrix.weight();
    if (spec.oracle) {
      const ExactResult sat = exact_sat(shape, spec.pattern, spec.budget);
      if (sat.status == SearchStatus::ok) row.oracle_sat = sat.value;
      const ExactResult ex = exact_ex(shape, spec.pattern, spec.budget);
      if (ex.status == SearchStatus::ok) row.oracle_ex = ex.value;
    }
    rows.push_back(row);
  }
  return rows;
}

inline void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  auto cell = [](const std::optional<std::size_t>& v, const char* missing) {
    return v ? std::to_string(*v) : std::string(missing);
  };
  out << "# format_version: 1\n";
  out << "n,closed_form,greedy_weight,layers_weight,oracle_sat,oracle_ex\n";
  for (const SweepRow& r : rows)
    out << r.n << ',' << cell(r.closed_form, "n/a") << ',' << r.greedy_weight << ','
        << cell(r.layers_weight, "n/a") << ',' << cell(r.oracle_sat, "skipped") << ','
        << cell(r.oracle_ex, "skipped") << '\n';
}

}  // namespace satmat
