#pragma once

// Pivot decompositions of one-line words, the cycle-to-word bijection Phi,
// the segment maps Upsilon_q with their fibers, and the free basis
// {Xi^q w : w in B_q} of the right ideal Xi^q R S_n together with the
// rewriting algorithm expressing arbitrary translates in that basis.

#include <optional>

#include "descentlab/descent.hpp"
#include "descentlab/characters.hpp"
#include "descentlab/echelon.hpp"
#include "descentlab/higherlie.hpp"
#include "descentlab/modidem.hpp"

namespace descentlab {

// Successive minima split a word into pivot words; each ends with its
// minimum, and the minima increase left to right.
struct PivotDecomposition {
  Permutation word;
  std::vector<int> pivot_positions;               // rho_1 < ... < rho_l (1-based)
  std::vector<std::vector<uint8_t>> pivot_words;  // concatenation = word
  Composition cycle_type;                         // pivot word lengths
};

inline PivotDecomposition pivot_decompose(const Permutation& w) {
  int n = w.degree();
  PivotDecomposition out;
  out.word = w;
  std::vector<bool> consumed(static_cast<size_t>(n) + 1, false);
  int start = 1;
  while (start <= n) {
    uint8_t smallest = 0;
    for (int v = 1; v <= n; ++v)
      if (!consumed[static_cast<size_t>(v)]) {
        smallest = static_cast<uint8_t>(v);
        break;
      }
    int pos = start;
    while (w.image(pos) != smallest) ++pos;
    std::vector<uint8_t> pw;
    for (int i = start; i <= pos; ++i) {
      pw.push_back(static_cast<uint8_t>(w.image(i)));
      consumed[static_cast<size_t>(w.image(i))] = true;
    }
    out.pivot_positions.push_back(pos);
    out.pivot_words.push_back(std::move(pw));
    start = pos + 1;
  }
  Parts type;
  for (auto& pw : out.pivot_words) type.push_back(static_cast<int>(pw.size()));
  out.cycle_type = Composition(type);
  return out;
}

// Write sigma's cycles with minima last, sort by minima, drop parentheses.
inline Permutation phi_map(const Permutation& sigma) {
  std::vector<uint8_t> word;
  for (auto& cyc : sigma.cycles_min_last())
    for (int x : cyc) word.push_back(static_cast<uint8_t>(x));
  return Permutation(word);
}

// Inverse: multiply the pivot cycles of w.
inline Permutation phi_inverse(const Permutation& w) {
  PivotDecomposition d = pivot_decompose(w);
  std::vector<uint8_t> sigma(static_cast<size_t>(w.degree()));
  for (auto& pw : d.pivot_words)
    for (size_t i = 0; i < pw.size(); ++i)
      sigma[static_cast<size_t>(pw[i] - 1)] = pw[(i + 1) % pw.size()];
  Permutation s;
  s.w = std::move(sigma);
  return s;
}

// Upsilon_q(w): split w into q-segments, take each segment's pivot words,
// sort all of them by their pivots, concatenate.
inline Permutation upsilon(const Composition& q, const Permutation& w) {
  if (q.n() != w.degree()) throw std::invalid_argument("size mismatch");
  std::vector<std::vector<uint8_t>> pieces;
  for (int j = 1; j <= q.length(); ++j) {
    std::vector<uint8_t> seg;
    for (int i = q.partial_sum(j - 1) + 1; i <= q.partial_sum(j); ++i)
      seg.push_back(static_cast<uint8_t>(w.image(i)));
    // pivot words of the segment (successive minima of the raw letters)
    size_t start = 0;
    while (start < seg.size()) {
      uint8_t smallest = 255;
      for (size_t i = start; i < seg.size(); ++i) smallest = std::min(smallest, seg[i]);
      size_t pos = start;
      while (seg[pos] != smallest) ++pos;
      pieces.emplace_back(seg.begin() + static_cast<long>(start),
                          seg.begin() + static_cast<long>(pos) + 1);
      start = pos + 1;
    }
  }
  std::sort(pieces.begin(), pieces.end(),
            [](auto& a, auto& b) { return a.back() < b.back(); });
  std::vector<uint8_t> word;
  for (auto& piece : pieces) word.insert(word.end(), piece.begin(), piece.end());
  return Permutation(word);
}

// B_q: words whose pivot cycle type weakly refines q, in reverse-colex order.
inline std::vector<Permutation> b_set(const Composition& q) {
  std::vector<Permutation> out;
  for (const Permutation& w : all_permutations(q.n()))
    if (is_weak_refinement(pivot_decompose(w).cycle_type, q)) out.push_back(w);
  std::sort(out.begin(), out.end(), rco_less);
  return out;
}

// |B_q| = sum over partitions weakly refining q of the class size.
inline long long b_set_size(const Composition& q) {
  long long acc = 0;
  for (const Partition& la : enumerate_partitions(q.n()))
    if (is_weak_refinement(la.as_composition(), q)) acc += conjugacy_class_size(la);
  return acc;
}

// Fiber of Upsilon_q over v: concatenations of v's pivot words along
// (q,v)-compatible rearrangements (index runs increasing inside each
// q-block, block lengths summing to q).
inline std::vector<Permutation> fiber(const Composition& q, const Permutation& v) {
  PivotDecomposition d = pivot_decompose(v);
  if (!is_weak_refinement(d.cycle_type, q))
    throw std::invalid_argument("fiber: word not in B_q");
  int l = static_cast<int>(d.pivot_words.size());
  std::vector<Permutation> out;
  std::vector<int> order;
  std::vector<bool> used(static_cast<size_t>(l), false);
  auto rec = [&](auto&& self, int block, int filled, int last_in_block) -> void {
    if (block > q.length()) {
      std::vector<uint8_t> word;
      for (int t : order) {
        auto& pw = d.pivot_words[static_cast<size_t>(t)];
        word.insert(word.end(), pw.begin(), pw.end());
      }
      out.push_back(Permutation(word));
      return;
    }
    int target = q.part(block);
    if (filled == target) {
      self(self, block + 1, 0, -1);
      return;
    }
    for (int t = last_in_block + 1; t < l; ++t) {
      if (used[static_cast<size_t>(t)]) continue;
      int len = static_cast<int>(d.pivot_words[static_cast<size_t>(t)].size());
      if (filled + len > target) continue;
      used[static_cast<size_t>(t)] = true;
      order.push_back(t);
      self(self, block, filled + len, t);
      order.pop_back();
      used[static_cast<size_t>(t)] = false;
    }
  };
  rec(rec, 1, 0, -1);
  std::sort(out.begin(), out.end(), rco_less);
  return out;
}

// ---------------------------------------------------------------------------
// The free basis of Xi^q R S_n and coordinates in it.

template <class F>
struct XiBasis {
  using S = typename F::Elem;

  F field;
  Composition q;
  std::vector<Permutation> words;           // B_q in reverse-colex order
  std::vector<AlgebraElement<F>> elements;  // Xi^q w
  FieldEchelon<F> ech;                      // echelon of the elements
  std::map<Permutation, size_t> index;

  XiBasis(const F& f, Composition comp) : field(f), q(std::move(comp)), ech(f) {
    AlgebraElement<F> xi = xi_expand(field, q);
    words = b_set(q);
    for (const Permutation& w : words) {
      AlgebraElement<F> el = xi.right_mul(w);
      if (!ech.insert(detail::to_row(el)))
        throw std::logic_error("XiBasis: dependent element over this field");
      index.emplace(w, elements.size());
      elements.push_back(std::move(el));
    }
  }
};

namespace detail {
// Coefficient of w in Q_{S_1}...Q_{S_l} built from w's reversed pivot words.
inline int leading_q_sign(const PivotDecomposition& d) {
  int exp = static_cast<int>(d.pivot_words.size());
  for (auto& pw : d.pivot_words) exp += static_cast<int>(pw.size());
  return (exp % 2) ? -1 : 1;
}
}  // namespace detail

// Coordinates of Xi^q sigma over the basis {Xi^q w : w in B_q}, by the
// reverse-colex descending rewriting: the largest non-basis word w in the
// running combination is replaced via Xi^q Q_{S_1}...Q_{S_l} = 0, where the
// S_i reverse the pivot words of w. Every replacement step introduces only
// reverse-colex smaller words.
template <class F>
std::map<Permutation, typename F::Elem> express_in_basis(const XiBasis<F>& basis,
                                                         const Permutation& sigma) {
  const F& field = basis.field;
  // running combination, keyed so that the reverse-colex largest word is last
  auto cmp = [](const Permutation& a, const Permutation& b) { return rco_less(a, b); };
  std::map<Permutation, typename F::Elem, decltype(cmp)> work(cmp);
  work.emplace(sigma, field.one());

  std::map<Permutation, typename F::Elem> out;
  // every iteration strictly lowers the reverse-colex maximum of the map
  long long guard = factorial_ll(sigma.degree()) + 2;
  while (!work.empty()) {
    auto it = std::prev(work.end());
    Permutation w = it->first;
    typename F::Elem c = it->second;
    work.erase(it);
    if (basis.index.count(w)) {
      if (!c.is_zero()) {
        auto [oit, inserted] = out.emplace(w, c);
        if (!inserted) oit->second += c;
      }
      continue;
    }
    if (--guard < 0) throw std::logic_error("rewriting failed to terminate");
    PivotDecomposition d = pivot_decompose(w);
    std::vector<std::vector<uint8_t>> reversed;
    for (auto& pw : d.pivot_words)
      reversed.emplace_back(pw.rbegin(), pw.rend());
    AlgebraElement<F> qprod = q_product(field, reversed);
    int sign = detail::leading_q_sign(d);
    // w - sign * Q has no w term and only reverse-colex smaller words
    typename F::Elem scale = c * field.from_int(-sign);
    for (auto& [u, cu] : qprod.coeff) {
      if (u == w) continue;
      if (!rco_less(u, w)) throw std::logic_error("rewriting: non-descending step");
      auto [wit, inserted] = work.emplace(u, scale * cu);
      if (!inserted) {
        wit->second += scale * cu;
        if (wit->second.is_zero()) work.erase(wit);
      }
    }
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

// Independent oracle for the rewriting: exact linear solve against the
// basis. The eliminated rows carry their combinations of the original
// elements, so each query is a single reduction.
template <class F>
class XiSolver {
 public:
  explicit XiSolver(const XiBasis<F>& basis) : basis_(basis), ech_(basis.field) {
    for (size_t j = 0; j < basis.elements.size(); ++j) {
      auto row = detail::to_row(basis.elements[j]);
      std::map<size_t, typename F::Elem> combo{{j, basis.field.one()}};
      reduce(row, combo);
      if (row.empty()) throw std::logic_error("XiSolver: dependent basis");
      typename F::Elem lead = row.front().second;
      for (auto& [col, v] : row) v /= lead;
      for (auto& [k, v] : combo) v /= lead;
      ech_.lead_of.emplace(row.front().first, ech_.rows.size());
      ech_.rows.push_back(std::move(row));
      combos_.push_back(std::move(combo));
    }
  }

  std::map<Permutation, typename F::Elem> express(const Permutation& sigma) const {
    auto row = detail::to_row(xi_expand(basis_.field, basis_.q).right_mul(sigma));
    std::map<size_t, typename F::Elem> result;
    while (!row.empty()) {
      auto lit = ech_.lead_of.find(row.front().first);
      if (lit == ech_.lead_of.end()) throw std::logic_error("XiSolver: not in span");
      typename F::Elem f = row.front().second;
      FieldEchelon<F>::axpy(row, -f, ech_.rows[lit->second]);
      for (auto& [k, v] : combos_[lit->second]) {
        auto [cit, ins] = result.emplace(k, f * v);
        if (!ins) {
          cit->second += f * v;
          if (cit->second.is_zero()) result.erase(cit);
        }
      }
    }
    std::map<Permutation, typename F::Elem> out;
    for (auto& [j, c] : result) out.emplace(basis_.words[j], c);
    return out;
  }

 private:
  void reduce(typename FieldEchelon<F>::Row& row,
              std::map<size_t, typename F::Elem>& combo) const {
    while (!row.empty()) {
      auto lit = ech_.lead_of.find(row.front().first);
      if (lit == ech_.lead_of.end()) return;
      typename F::Elem f = row.front().second;
      FieldEchelon<F>::axpy(row, -f, ech_.rows[lit->second]);
      for (auto& [k, v] : combos_[lit->second]) {
        auto [cit, ins] = combo.emplace(k, -(f * v));
        if (!ins) {
          cit->second -= f * v;
          if (cit->second.is_zero()) combo.erase(cit);
        }
      }
    }
  }

  const XiBasis<F>& basis_;
  FieldEchelon<F> ech_;
  std::vector<std::map<size_t, typename F::Elem>> combos_;
};

template <class F>
std::map<Permutation, typename F::Elem> express_by_solve(const XiBasis<F>& basis,
                                                         const Permutation& sigma) {
  return XiSolver<F>(basis).express(sigma);
}

// ---------------------------------------------------------------------------
// Structure reports.

// Characteristic 0: dim X^q = sum over partitions weakly refining q of the
// higher Lie dimensions, and the class-function identity between the ideal
// characters.
struct OrdinaryDecompositionReport {
  Composition q;
  long long dim_xq = 0;
  long long dim_sum = 0;
  bool dims_match = false;
  bool characters_match = false;
  std::vector<Partition> summands;
};

inline OrdinaryDecompositionReport ordinary_decomposition_check(const Composition& q) {
  QQ field;
  OrdinaryDecompositionReport rep;
  rep.q = q;
  AlgebraElement<QQ> xi = xi_expand(field, q);
  ClassFunction<QQ> lhs = ideal_character(field, xi);
  rep.dim_xq = lhs.at(Partition(Parts(static_cast<size_t>(q.n()), 1))).to_ll();
  ClassFunction<QQ> rhs(field, q.n());
  for (const Partition& la : enumerate_partitions(q.n())) {
    if (!is_weak_refinement(la.as_composition(), q)) continue;
    rep.summands.push_back(la);
    rep.dim_sum += conjugacy_class_size(la);
    rhs += ideal_character(field, expand(field, omega_q(field, la.as_composition())));
  }
  rep.dims_match = (rep.dim_xq == rep.dim_sum) && rep.dim_xq == b_set_size(q);
  rep.characters_match = (lhs == rhs);
  return rep;
}

// Rank of Xi^q e_{mu,F} F S_n against the p-equivalence census.
struct ConjectureReport {
  Composition q;
  Partition mu;
  int p = 0;
  long long rank = 0;
  long long predicted = 0;  // # permutations with type refining q, p-equiv to mu
  bool verdict = false;
};

inline ConjectureReport conjecture_checker(const Composition& q, const Partition& mu,
                                           const IdempotentSet& idem) {
  GF field(idem.p);
  ConjectureReport rep;
  rep.q = q;
  rep.mu = mu;
  rep.p = static_cast<int>(idem.p);

  AlgebraElement<GF> x = xi_expand(field, q) * expand(field, idem.of(mu));
  rep.rank = right_ideal_rank(field, x);

  for (const Partition& la : enumerate_partitions(q.n()))
    if (is_weak_refinement(la.as_composition(), q) && p_equivalent(la, mu, rep.p))
      rep.predicted += conjugacy_class_size(la);
  rep.verdict = (rep.rank == rep.predicted);

  long long phi = young_character_value(q, mu);
  if (phi % rep.p != 0 && rep.rank != p_class_size(mu, rep.p))
    throw std::logic_error("nonvanishing Young character but rank != |C_{mu,p}|");
  if (is_coprime(q, rep.p) && sort_to_partition(q) == mu &&
      rep.rank != conjugacy_class_size(mu))
    throw std::logic_error("coprime case rank != |C_mu|");
  return rep;
}

}  // namespace descentlab
