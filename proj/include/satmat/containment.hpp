#pragma once

// Exact pattern containment.
//
// P is contained in M when strictly increasing index selections I_1..I_d
// (|I_i| = l_i) exist such that every 1-entry of P lands on a 1-entry of M.
// The search assigns selections dimension by dimension, smallest index
// first, so the first embedding found is the lexicographically least
// selection vector (I_1, I_2, ..., I_d). After each assignment the pattern
// 1-entries that use it are checked against a box of the host, counted
// with d-dimensional prefix sums.

#include <optional>
#include <stdexcept>
#include <vector>

#include "satmat/matrix.hpp"

namespace satmat {

/// selections[i] are the 1-based host indices chosen in dimension i.
struct Embedding {
  std::vector<std::vector<int>> selections;

  /// Host cell that pattern cell pc is mapped to.
  Coord image(const Coord& pc) const {
    std::vector<int> x(pc.size());
    for (std::size_t i = 0; i < pc.size(); ++i) x[i] = selections[i][pc[i] - 1];
    return Coord(std::move(x));
  }

  friend bool operator==(const Embedding&, const Embedding&) = default;
  friend auto operator<=>(const Embedding&, const Embedding&) = default;
};

/// Checks the selections are strictly increasing, in range, and carry
/// every 1-entry of p onto a 1-entry of m.
inline bool is_valid_embedding(const Matrix01& m, const Matrix01& p, const Embedding& e) {
  if (m.dims() != p.dims() || e.selections.size() != p.dims()) return false;
  for (std::size_t i = 0; i < p.dims(); ++i) {
    const auto& sel = e.selections[i];
    if (sel.size() != static_cast<std::size_t>(p.shape().extent(i))) return false;
    for (std::size_t j = 0; j < sel.size(); ++j) {
      if (sel[j] < 1 || sel[j] > m.shape().extent(i)) return false;
      if (j && sel[j] <= sel[j - 1]) return false;
    }
  }
  bool ok = true;
  p.for_each_one([&](std::size_t i) { ok = ok && m.get(e.image(p.shape().coord(i))); });
  return ok;
}

/// Reusable containment search of one pattern in one host. An optional
/// extra cell is treated as a 1-entry, standing in for a 0 -> 1 flip.
class Matcher {
 public:
  Matcher(const Matrix01& host, const Matrix01& pattern)
      : host_(host.shape()), pattern_(pattern.shape()), d_(host.dims()) {
    if (host.dims() != pattern.dims())
      throw std::invalid_argument("host and pattern differ in dimension count");
    fits_ = pattern_.fits_in(host_);
    ones_ = pattern.one_entries();
    by_slot_.resize(d_);
    for (std::size_t t = 0; t < d_; ++t) {
      by_slot_[t].resize(static_cast<std::size_t>(pattern_.extent(t)));
      for (std::size_t e = 0; e < ones_.size(); ++e)
        by_slot_[t][static_cast<std::size_t>(ones_[e][t] - 1)].push_back(e);
    }
    build_prefix(host);
  }

  void set_extra(std::optional<Coord> cell) {
    if (cell) host_.check(*cell);
    extra_ = std::move(cell);
  }

  bool pattern_fits() const { return fits_; }

  std::optional<Embedding> find() const {
    if (!fits_) return std::nullopt;
    return search(std::nullopt);
  }

  /// Embedding that sends pattern 1-entry `pattern_one` to `host_cell`.
  std::optional<Embedding> find_mapping(const Coord& host_cell, const Coord& pattern_one) const {
    if (!fits_) return std::nullopt;
    return search(Forced{host_cell, pattern_one});
  }

  /// Least embedding that sends some pattern 1-entry to host_cell.
  std::optional<Embedding> find_through(const Coord& host_cell) const {
    std::optional<Embedding> best;
    for (const Coord& o : ones_) {
      auto e = find_mapping(host_cell, o);
      if (e && (!best || *e < *best)) best = std::move(e);
    }
    return best;
  }

  bool exists_through(const Coord& host_cell) const {
    for (const Coord& o : ones_)
      if (find_mapping(host_cell, o)) return true;
    return false;
  }

 private:
  struct Forced {
    Coord host_cell;
    Coord pattern_one;
  };

  void build_prefix(const Matrix01& host) {
    pstride_.assign(d_, 1);
    for (std::size_t i = d_ - 1; i > 0; --i)
      pstride_[i - 1] = pstride_[i] * static_cast<std::size_t>(host_.extent(i) + 1);
    std::size_t total = pstride_[0] * static_cast<std::size_t>(host_.extent(0) + 1);
    prefix_.assign(total, 0);
    host.for_each_one([&](std::size_t lin) {
      const Coord c = host_.coord(lin);
      std::size_t at = 0;
      for (std::size_t i = 0; i < d_; ++i) at += static_cast<std::size_t>(c[i]) * pstride_[i];
      prefix_[at] = 1;
    });
    // Running sums along each dimension in turn.
    for (std::size_t i = 0; i < d_; ++i) {
      const std::size_t step = pstride_[i];
      const std::size_t span = step * static_cast<std::size_t>(host_.extent(i) + 1);
      for (std::size_t at = 0; at < total; ++at) {
        const std::size_t pos = (at % span) / step;
        if (pos > 0) prefix_[at] += prefix_[at - step];
      }
    }
  }

  /// Whether the inclusive box [lo, hi] (1-based) holds a 1-entry.
  bool box_has_one(const std::vector<int>& lo, const std::vector<int>& hi) const {
    if (extra_) {
      bool inside = true;
      for (std::size_t i = 0; i < d_ && inside; ++i)
        inside = (*extra_)[i] >= lo[i] && (*extra_)[i] <= hi[i];
      if (inside) return true;
    }
    long total = 0;
    const std::size_t corners = std::size_t{1} << d_;
    for (std::size_t mask = 0; mask < corners; ++mask) {
      std::size_t at = 0;
      int sign = 1;
      bool zero = false;
      for (std::size_t i = 0; i < d_; ++i) {
        int x = hi[i];
        if (mask >> i & 1) {
          x = lo[i] - 1;
          sign = -sign;
        }
        if (x == 0) {
          zero = true;
          break;
        }
        at += static_cast<std::size_t>(x) * pstride_[i];
      }
      if (!zero) total += sign * static_cast<long>(prefix_[at]);
    }
    return total > 0;
  }

  std::optional<Embedding> search(const std::optional<Forced>& forced) const {
    State st;
    st.lo.resize(d_);
    st.hi.resize(d_);
    st.sel.resize(d_);
    for (std::size_t t = 0; t < d_; ++t) {
      const int l = pattern_.extent(t);
      const int n = host_.extent(t);
      st.lo[t].resize(static_cast<std::size_t>(l));
      st.hi[t].resize(static_cast<std::size_t>(l));
      st.sel[t].assign(static_cast<std::size_t>(l), 0);
      for (int j = 0; j < l; ++j) {
        st.lo[t][j] = j + 1;
        st.hi[t][j] = n - (l - 1 - j);
      }
      if (forced) {
        const int js = forced->pattern_one[t] - 1;
        const int v = forced->host_cell[t];
        for (int j = 0; j < l; ++j) {
          if (j < js) st.hi[t][j] = std::min(st.hi[t][j], v - (js - j));
          if (j > js) st.lo[t][j] = std::max(st.lo[t][j], v + (j - js));
        }
        st.lo[t][js] = std::max(st.lo[t][js], v);
        st.hi[t][js] = std::min(st.hi[t][js], v);
      }
      for (int j = 0; j < l; ++j)
        if (st.lo[t][j] > st.hi[t][j]) return std::nullopt;
    }
    st.box_lo.resize(d_);
    st.box_hi.resize(d_);
    if (!dfs(st, 0, 0)) return std::nullopt;
    return Embedding{st.sel};
  }

  struct State {
    std::vector<std::vector<int>> lo, hi, sel;
    std::vector<int> box_lo, box_hi;
  };

  bool dfs(State& st, std::size_t t, std::size_t j) const {
    if (t == d_) return true;
    const std::size_t l = static_cast<std::size_t>(pattern_.extent(t));
    if (j == l) return dfs(st, t + 1, 0);
    int from = st.lo[t][j];
    if (j > 0) from = std::max(from, st.sel[t][j - 1] + 1);
    for (int v = from; v <= st.hi[t][j]; ++v) {
      st.sel[t][j] = v;
      bool ok = true;
      for (std::size_t e : by_slot_[t][j]) {
        const Coord& pc = ones_[e];
        for (std::size_t u = 0; u < d_; ++u) {
          const std::size_t k = static_cast<std::size_t>(pc[u] - 1);
          if (u <= t) {
            st.box_lo[u] = st.box_hi[u] = st.sel[u][k];
          } else {
            st.box_lo[u] = st.lo[u][k];
            st.box_hi[u] = st.hi[u][k];
          }
        }
        if (!box_has_one(st.box_lo, st.box_hi)) {
          ok = false;
          break;
        }
      }
      if (ok && dfs(st, t, j + 1)) return true;
    }
    return false;
  }

  Shape host_;
  Shape pattern_;
  std::size_t d_;
  bool fits_ = false;
  std::vector<Coord> ones_;
  std::vector<std::vector<std::vector<std::size_t>>> by_slot_;
  std::vector<std::size_t> pstride_;
  std::vector<std::int32_t> prefix_;
  std::optional<Coord> extra_;
};

/// Least embedding of p in m, or nothing when m avoids p. A pattern larger
/// than the host in some dimension is never contained.
inline std::optional<Embedding> contains(const Matrix01& m, const Matrix01& p) {
  return Matcher(m, p).find();
}

/// Least embedding that selects `anchor` and maps it to a 1-entry of p.
inline std::optional<Embedding> anchored_contains(const Matrix01& m, const Matrix01& p,
                                                  const Coord& anchor) {
  if (m.dims() != p.dims()) throw std::invalid_argument("host and pattern differ in dimension count");
  m.shape().check(anchor);
  if (!m.get(anchor)) throw std::invalid_argument("anchor " + anchor.to_string() + " is a 0-entry");
  return Matcher(m, p).find_through(anchor);
}

/// Flipping the 0-entry z of m creates a copy of p in which z matches o.
inline bool potentially_matches(const Matrix01& m, const Coord& z, const Matrix01& p, const Coord& o) {
  if (m.dims() != p.dims()) throw std::invalid_argument("host and pattern differ in dimension count");
  m.shape().check(z);
  p.shape().check(o);
  if (m.get(z)) throw std::invalid_argument("z " + z.to_string() + " is a 1-entry");
  if (!p.get(o)) throw std::invalid_argument("o " + o.to_string() + " is a 0-entry of the pattern");
  Matcher matcher(m, p);
  matcher.set_extra(z);
  return matcher.find_mapping(z, o).has_value();
}

}  // namespace satmat
