#pragma once

// Exact sparse echelon forms: a field version (used for coordinate solves
// and traces) and an integer version with content normalization (used for
// large characteristic-0 rank sweeps). Plus right-ideal rank/basis by
// closure under right translation.

#include <gmpxx.h>

#include <map>
#include <queue>
#include <vector>

#include "descentlab/group_algebra.hpp"

namespace descentlab {

using SparseIdx = uint32_t;

template <class F>
struct FieldEchelon {
  using S = typename F::Elem;
  using Row = std::vector<std::pair<SparseIdx, S>>;  // sorted by column

  F field;
  std::vector<Row> rows;                  // leading coefficient 1, insertion order
  std::map<SparseIdx, size_t> lead_of;    // leading column -> row index

  explicit FieldEchelon(const F& f) : field(f) {}

  int rank() const { return static_cast<int>(rows.size()); }

  // Reduces r in place against the echelon; r ends with no lead collision.
  void reduce(Row& r) const {
    while (!r.empty()) {
      auto it = lead_of.find(r.front().first);
      if (it == lead_of.end()) return;
      axpy(r, -r.front().second, rows[it->second]);
    }
  }

  // Returns true if the row was independent (rank grew).
  bool insert(Row r) {
    reduce(r);
    if (r.empty()) return false;
    S lead = r.front().second;
    if (!(lead == field.one()))
      for (auto& [c, v] : r) v /= lead;
    lead_of.emplace(r.front().first, rows.size());
    rows.push_back(std::move(r));
    return true;
  }

  // Coordinates of v over the echelon rows (by row index); false if v is
  // outside the span.
  bool coordinates(Row v, std::vector<S>& out) const {
    out.assign(rows.size(), field.zero());
    while (!v.empty()) {
      auto it = lead_of.find(v.front().first);
      if (it == lead_of.end()) return false;
      S c = v.front().second;
      out[it->second] = c;
      axpy(v, -c, rows[it->second]);
    }
    return true;
  }

  // Fully reduce: every leading column occurs in its own row only. Row
  // coordinates of a vector in the span are then direct entry lookups.
  void back_eliminate() {
    for (size_t i = 0; i < rows.size(); ++i) {
      SparseIdx lead = rows[i].front().first;
      for (size_t j = 0; j < rows.size(); ++j) {
        if (j == i) continue;
        auto it = std::lower_bound(rows[j].begin(), rows[j].end(), lead,
                                   [](auto& e, SparseIdx c) { return e.first < c; });
        if (it != rows[j].end() && it->first == lead) axpy(rows[j], -it->second, rows[i]);
      }
    }
  }

  // v += c * w (sparse merge)
  static void axpy(Row& v, const S& c, const Row& w) {
    Row out;
    out.reserve(v.size() + w.size());
    size_t i = 0, j = 0;
    while (i < v.size() || j < w.size()) {
      if (j == w.size() || (i < v.size() && v[i].first < w[j].first)) {
        out.push_back(v[i++]);
      } else if (i == v.size() || w[j].first < v[i].first) {
        S t = c * w[j].second;
        if (!t.is_zero()) out.emplace_back(w[j].first, std::move(t));
        ++j;
      } else {
        S t = v[i].second + c * w[j].second;
        if (!t.is_zero()) out.emplace_back(v[i].first, std::move(t));
        ++i, ++j;
      }
    }
    v = std::move(out);
  }
};

// Integer echelon: rows are primitive integer vectors; reduction by
// cross-multiplication, then division by the content. Exact over Q.
struct IntEchelon {
  using Row = std::vector<std::pair<SparseIdx, mpz_class>>;

  std::vector<Row> rows;
  std::map<SparseIdx, size_t> lead_of;

  int rank() const { return static_cast<int>(rows.size()); }

  static void normalize(Row& r) {
    if (r.empty()) return;
    mpz_class g = 0;
    for (auto& [c, v] : r) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
      if (g == 1) break;
    }
    if (sgn(r.front().second) < 0) g = -g;
    if (g != 1)
      for (auto& [c, v] : r) v /= g;
  }

  bool insert(Row r) {
    normalize(r);
    while (!r.empty()) {
      auto it = lead_of.find(r.front().first);
      if (it == lead_of.end()) {
        lead_of.emplace(r.front().first, rows.size());
        rows.push_back(std::move(r));
        return true;
      }
      const Row& e = rows[it->second];
      // r <- lead(e) * r - lead(r) * e
      mpz_class le = e.front().second, lr = r.front().second;
      Row out;
      out.reserve(r.size() + e.size());
      size_t i = 0, j = 0;
      while (i < r.size() || j < e.size()) {
        if (j == e.size() || (i < r.size() && r[i].first < e[j].first)) {
          out.emplace_back(r[i].first, le * r[i].second);
          ++i;
        } else if (i == r.size() || e[j].first < r[i].first) {
          out.emplace_back(e[j].first, -lr * e[j].second);
          ++j;
        } else {
          mpz_class t = le * r[i].second - lr * e[j].second;
          if (t != 0) out.emplace_back(r[i].first, std::move(t));
          ++i, ++j;
        }
      }
      r = std::move(out);
      normalize(r);
    }
    return false;
  }
};

namespace detail {

template <class F>
typename FieldEchelon<F>::Row to_row(const AlgebraElement<F>& x) {
  typename FieldEchelon<F>::Row r;
  r.reserve(x.coeff.size());
  for (auto& [s, c] : x.coeff) r.emplace_back(static_cast<SparseIdx>(s.lex_rank()), c);
  std::sort(r.begin(), r.end(), [](auto& a, auto& b) { return a.first < b.first; });
  return r;
}

// Clear denominators and strip content: a primitive integer row.
inline IntEchelon::Row to_int_row(const AlgebraElement<QQ>& x) {
  mpz_class lcm = 1;
  for (auto& [s, c] : x.coeff) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.raw().get_den().get_mpz_t());
  IntEchelon::Row r;
  r.reserve(x.coeff.size());
  for (auto& [s, c] : x.coeff) {
    mpz_class v = c.raw().get_num() * (lcm / c.raw().get_den());
    r.emplace_back(static_cast<SparseIdx>(s.lex_rank()), std::move(v));
  }
  std::sort(r.begin(), r.end(), [](auto& a, auto& b) { return a.first < b.first; });
  return r;
}

// Closure of {x} under right multiplication by adjacent transpositions;
// visit(w) -> true when x*w enlarged the span (keep expanding from w).
template <class Visit>
void right_closure(int n, Visit&& visit) {
  std::vector<Permutation> gens;
  for (int i = 1; i < n; ++i) {
    Permutation s = Permutation::identity(n);
    std::swap(s.w[static_cast<size_t>(i - 1)], s.w[static_cast<size_t>(i)]);
    gens.push_back(s);
  }
  std::queue<Permutation> todo;
  Permutation id = Permutation::identity(n);
  if (visit(id)) todo.push(id);
  while (!todo.empty()) {
    Permutation w = todo.front();
    todo.pop();
    for (const Permutation& g : gens) {
      Permutation wg = w.compose(g);
      if (visit(wg)) todo.push(wg);
    }
  }
}

}  // namespace detail

// Basis of the right ideal x F S_n, kept as an echelon plus the translates
// x*w that created it.
template <class F>
struct IdealBasis {
  FieldEchelon<F> ech;
  std::vector<Permutation> generators;  // one w per echelon row

  explicit IdealBasis(const F& f) : ech(f) {}
  int rank() const { return ech.rank(); }
};

template <class F>
IdealBasis<F> right_ideal_basis(const F& field, const AlgebraElement<F>& x) {
  IdealBasis<F> b(field);
  if (x.is_zero() || x.n == 0) return b;
  detail::right_closure(x.n, [&](const Permutation& w) {
    if (b.ech.insert(detail::to_row(x.right_mul(w)))) {
      b.generators.push_back(w);
      return true;
    }
    return false;
  });
  return b;
}

inline int right_ideal_rank(const GF& field, const AlgebraElement<GF>& x) {
  if (x.is_zero() || x.n == 0) return 0;
  FieldEchelon<GF> ech(field);
  detail::right_closure(x.n, [&](const Permutation& w) {
    return ech.insert(detail::to_row(x.right_mul(w)));
  });
  return ech.rank();
}

inline int right_ideal_rank(const QQ&, const AlgebraElement<QQ>& x) {
  if (x.is_zero() || x.n == 0) return 0;
  IntEchelon ech;
  detail::right_closure(x.n, [&](const Permutation& w) {
    return ech.insert(detail::to_int_row(x.right_mul(w)));
  });
  return ech.rank();
}

}  // namespace descentlab
