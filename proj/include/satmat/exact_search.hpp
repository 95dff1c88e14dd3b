#pragma once

// Exact ex / sat / ssat at desk scale.
//
// ex and sat run a depth-first branch-and-bound over cells in row-major
// order, trying 0 before 1, so the first optimum reached is the
// lexicographically least optimal bit string. ssat enumerates matrices by
// increasing weight. Every search is bounded by a SearchBudget; running out
// yields SearchStatus::budget_exceeded and never a guessed value.

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "satmat/constructions.hpp"
#include "satmat/saturation.hpp"

namespace satmat {

struct SearchBudget {
  std::optional<std::size_t> max_cells;  // default: 30 for ex/sat, 16 for ssat
  double time_limit_seconds = 600.0;
  std::optional<std::uint64_t> node_limit;
};

inline constexpr std::size_t kBranchAndBoundCells = 30;
inline constexpr std::size_t kExhaustiveCells = 16;

enum class SearchStatus { ok, budget_exceeded };

inline const char* to_string(SearchStatus s) {
  return s == SearchStatus::ok ? "ok" : "budget_exceeded";
}

struct ExactResult {
  SearchStatus status = SearchStatus::ok;
  std::size_t value = 0;
  std::optional<Matrix01> witness;
  std::uint64_t nodes = 0;
};

namespace detail {

class BudgetGuard {
 public:
  explicit BudgetGuard(const SearchBudget& b)
      : budget_(b), start_(std::chrono::steady_clock::now()) {}

  /// Counts one node; false once any limit is hit.
  bool tick() {
    if (exceeded_) return false;
    ++nodes_;
    if (budget_.node_limit && nodes_ > *budget_.node_limit) exceeded_ = true;
    if ((nodes_ & 0xff) == 0) {
      const std::chrono::duration<double> spent = std::chrono::steady_clock::now() - start_;
      if (spent.count() > budget_.time_limit_seconds) exceeded_ = true;
    }
    return !exceeded_;
  }

  bool exceeded() const { return exceeded_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  SearchBudget budget_;
  std::chrono::steady_clock::time_point start_;
  std::uint64_t nodes_ = 0;
  bool exceeded_ = false;
};

inline void check_search_args(const Shape& shape, const Matrix01& p) {
  if (shape.dims() != p.dims()) throw std::invalid_argument("pattern and shape differ in dimension count");
}

inline ExactResult over_budget(std::uint64_t nodes = 0) {
  ExactResult r;
  r.status = SearchStatus::budget_exceeded;
  r.nodes = nodes;
  return r;
}

inline ExactResult settled(Matrix01 witness, std::uint64_t nodes = 0) {
  ExactResult r;
  r.value = witness.weight();
  r.witness = std::move(witness);
  r.nodes = nodes;
  return r;
}

class ExSearch {
 public:
  ExSearch(const Shape& s, const Matrix01& p, BudgetGuard& guard, std::size_t lower)
      : s_(s), p_(p), guard_(guard), m_(s), best_(lower) {}

  void run() { dfs(0); }
  bool has_witness() const { return witness_.has_value(); }
  const Matrix01& witness() const { return *witness_; }

 private:
  void dfs(std::size_t pos) {
    if (!guard_.tick()) return;
    const std::size_t n = s_.cell_count();
    if (pos == n) {
      if (m_.weight() > best_ || (m_.weight() == best_ && !witness_)) {
        best_ = m_.weight();
        witness_ = m_;
      }
      return;
    }
    // Upper bound: current weight plus undecided cells that could still be 1.
    Matcher scratch(m_, p_);
    std::size_t open = 0;
    bool here = false;
    for (std::size_t lin = pos; lin < n; ++lin) {
      const Coord z = s_.coord(lin);
      scratch.set_extra(z);
      const bool ok = !scratch.exists_through(z);
      open += ok;
      if (lin == pos) here = ok;
    }
    const std::size_t bound = m_.weight() + open;
    if (bound < best_ || (bound == best_ && witness_)) return;

    dfs(pos + 1);
    if (here) {
      m_.set(pos, true);
      dfs(pos + 1);
      m_.set(pos, false);
    }
  }

  const Shape& s_;
  const Matrix01& p_;
  BudgetGuard& guard_;
  Matrix01 m_;
  std::size_t best_;
  std::optional<Matrix01> witness_;
};

class SatSearch {
 public:
  SatSearch(const Shape& s, const Matrix01& p, BudgetGuard& guard, std::size_t upper)
      : s_(s), p_(p), guard_(guard), m_(s), best_(upper), settled_(s.cell_count(), false) {}

  void run() { dfs(0); }
  bool has_witness() const { return witness_.has_value(); }
  const Matrix01& witness() const { return *witness_; }

 private:
  void dfs(std::size_t pos) {
    if (!guard_.tick()) return;
    if (m_.weight() > best_ || (m_.weight() == best_ && witness_)) return;
    const std::size_t n = s_.cell_count();
    if (pos == n) {
      if (is_saturating(m_, p_).verdict) {
        best_ = m_.weight();
        witness_ = m_;
      }
      return;
    }

    zeros_.push_back(pos);
    std::vector<std::size_t> newly_settled;
    if (zeros_feasible(pos, newly_settled)) dfs(pos + 1);
    for (std::size_t z : newly_settled) settled_[z] = false;
    zeros_.pop_back();

    Matcher current(m_, p_);
    const Coord here = s_.coord(pos);
    current.set_extra(here);
    if (!current.exists_through(here)) {
      m_.set(pos, true);
      dfs(pos + 1);
      m_.set(pos, false);
    }
  }

  /// Every decided 0 must still be able to die: with all undecided cells
  /// (after pos) set to 1, flipping it has to create a copy through it.
  /// Zeros already dead with the decided 1s alone stay dead below this node.
  bool zeros_feasible(std::size_t pos, std::vector<std::size_t>& newly_settled) {
    Matrix01 completion = m_;
    for (std::size_t lin = pos + 1; lin < s_.cell_count(); ++lin) completion.set(lin, true);
    Matcher loose(completion, p_);
    Matcher tight(m_, p_);
    for (std::size_t z : zeros_) {
      if (settled_[z]) continue;
      const Coord c = s_.coord(z);
      loose.set_extra(c);
      if (!loose.exists_through(c)) return false;
      tight.set_extra(c);
      if (tight.exists_through(c)) {
        settled_[z] = true;
        newly_settled.push_back(z);
      }
    }
    return true;
  }

  const Shape& s_;
  const Matrix01& p_;
  BudgetGuard& guard_;
  Matrix01 m_;
  std::size_t best_;
  std::optional<Matrix01> witness_;
  std::vector<std::size_t> zeros_;
  std::vector<bool> settled_;
};

}  // namespace detail

/// Maximum weight of a matrix of `shape` avoiding p.
inline ExactResult exact_ex(const Shape& shape, const Matrix01& p, const SearchBudget& budget = {}) {
  detail::check_search_args(shape, p);
  if (p.is_zero()) throw std::invalid_argument("ex is undefined for an all-zero pattern");
  if (shape.cell_count() > budget.max_cells.value_or(kBranchAndBoundCells)) return detail::over_budget();
  if (!p.shape().fits_in(shape)) return detail::settled(Matrix01::ones(shape));

  detail::BudgetGuard guard(budget);
  const Matrix01 seed = greedy_saturate(p, shape, row_major_order(shape)).matrix;
  detail::ExSearch search(shape, p, guard, seed.weight());
  search.run();
  if (guard.exceeded()) return detail::over_budget(guard.nodes());
  if (!search.has_witness()) throw std::logic_error("ex search lost its lower bound");
  return detail::settled(search.witness(), guard.nodes());
}

/// Minimum weight of a matrix of `shape` saturating for p.
inline ExactResult exact_sat(const Shape& shape, const Matrix01& p, const SearchBudget& budget = {}) {
  detail::check_search_args(shape, p);
  const bool fits = p.shape().fits_in(shape);
  if (p.is_zero() && fits) return detail::settled(Matrix01::zeros(shape));
  if (!fits) return detail::settled(Matrix01::ones(shape));
  if (shape.cell_count() > budget.max_cells.value_or(kBranchAndBoundCells)) return detail::over_budget();

  detail::BudgetGuard guard(budget);
  const Matrix01 seed = greedy_saturate(p, shape, row_major_order(shape)).matrix;
  detail::SatSearch search(shape, p, guard, seed.weight());
  search.run();
  if (guard.exceeded()) return detail::over_budget(guard.nodes());
  if (!search.has_witness()) throw std::logic_error("sat search lost its upper bound");
  return detail::settled(search.witness(), guard.nodes());
}

/// Minimum weight of a matrix of `shape` semisaturating for p. Cells that
/// no copy of p can ever pass through are 1 in every semisaturating matrix;
/// the remaining cells are enumerated by increasing weight.
inline ExactResult exact_ssat(const Shape& shape, const Matrix01& p, const SearchBudget& budget = {}) {
  detail::check_search_args(shape, p);
  const bool fits = p.shape().fits_in(shape);
  if (p.is_zero() && fits) return detail::settled(Matrix01::zeros(shape));
  if (!fits) return detail::settled(Matrix01::ones(shape));
  const std::size_t n = shape.cell_count();
  if (n > budget.max_cells.value_or(kExhaustiveCells) || n > 63) return detail::over_budget();

  Matrix01 forced(shape);
  std::vector<std::size_t> free_cells;
  {
    Matcher full(Matrix01::ones(shape), p);
    for (std::size_t lin = 0; lin < n; ++lin) {
      if (full.exists_through(shape.coord(lin)))
        free_cells.push_back(lin);
      else
        forced.set(lin, true);
    }
  }

  detail::BudgetGuard guard(budget);
  const std::size_t f = free_cells.size();
  // Free cell free_cells[k] is bit (f - 1 - k): numeric order is lexicographic order.
  auto build = [&](std::uint64_t mask) {
    Matrix01 m = forced;
    for (std::size_t k = 0; k < f; ++k)
      if (mask >> (f - 1 - k) & 1) m.set(free_cells[k], true);
    return m;
  };
  if (!guard.tick()) return detail::over_budget(guard.nodes());
  if (Matrix01 m = build(0); is_semisaturating(m, p).verdict)
    return detail::settled(std::move(m), guard.nodes());
  for (std::size_t w = 1; w <= f; ++w) {
    std::uint64_t mask = (std::uint64_t{1} << w) - 1;
    const std::uint64_t limit = std::uint64_t{1} << f;
    while (mask < limit) {
      if (!guard.tick()) return detail::over_budget(guard.nodes());
      Matrix01 m = build(mask);
      if (is_semisaturating(m, p).verdict) return detail::settled(std::move(m), guard.nodes());
      // Next mask with the same popcount.
      const std::uint64_t low = mask & (~mask + 1);
      const std::uint64_t ripple = mask + low;
      mask = ripple | (((ripple ^ mask) >> 2) / low);
    }
  }
  throw std::logic_error("the all-one matrix is always semisaturating");
}

struct RecurrenceReport {
  SearchStatus status = SearchStatus::ok;
  std::size_t shell_term = 0;  // prod n_i - prod (n_i - 1)
  std::size_t sat_large = 0;   // sat(n; P)
  std::size_t sat_small = 0;   // sat(n - 1; P')
  std::size_t ex_large = 0;
  std::size_t ex_small = 0;
  bool sat_holds = false;
  bool ex_holds = false;
  bool holds() const { return status == SearchStatus::ok && sat_holds && ex_holds; }
};

/// Checks sat(n; P) = sat(n - 1; P') + shell and the ex analogue, where
/// P = P' followed diagonally by a single 1-entry. P' itself must be some
/// A followed by a single 1-entry, i.e. the corner is its only shell 1-entry.
inline RecurrenceReport verify_recurrence(const Matrix01& p_prime, const Shape& shape,
                                          const SearchBudget& budget = {}) {
  detail::check_search_args(shape, p_prime);
  if (p_prime.is_zero()) throw std::invalid_argument("P' must be nonzero");
  const Shape& ps = p_prime.shape();
  std::vector<int> corner_idx = ps.extents();
  const Coord corner(corner_idx);
  for (const Coord& c : shell(ps))
    if (p_prime.get(c) != (c == corner))
      throw std::invalid_argument("P' must have the corner as its only shell 1-entry");
  for (std::size_t i = 0; i < shape.dims(); ++i)
    if (ps.extent(i) + 1 > shape.extent(i))
      throw std::invalid_argument("recurrence needs every host extent to exceed P' by at least one");

  const Matrix01 p = diagonal_concatenation(p_prime, unit_pattern(shape.dims()));
  const Shape small = shape.shifted(-1);
  RecurrenceReport r;
  r.shell_term = shape.diagonal_count();

  const ExactResult a = exact_sat(shape, p, budget);
  const ExactResult b = exact_sat(small, p_prime, budget);
  const ExactResult c = exact_ex(shape, p, budget);
  const ExactResult e = exact_ex(small, p_prime, budget);
  for (const ExactResult* x : {&a, &b, &c, &e})
    if (x->status != SearchStatus::ok) {
      r.status = SearchStatus::budget_exceeded;
      return r;
    }
  r.sat_large = a.value;
  r.sat_small = b.value;
  r.ex_large = c.value;
  r.ex_small = e.value;
  r.sat_holds = r.sat_large == r.sat_small + r.shell_term;
  r.ex_holds = r.ex_large == r.ex_small + r.shell_term;
  return r;
}

}  // namespace satmat
