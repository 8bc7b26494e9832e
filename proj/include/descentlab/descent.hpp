#pragma once

// The descent algebra of the symmetric group in the Xi-basis: structure
// constants, the higher Lie elements omega_q, Young characters and the
// epimorphism onto the span of Young characters, and the ordinary
// idempotent machinery (I_q, E_lambda, orthogonalized Lie idempotents).

#include <functional>
#include <memory>
#include <mutex>
#include <shared_mutex>

#include "descentlab/echelon.hpp"
#include "descentlab/group_algebra.hpp"

namespace descentlab {

template <class F>
struct DescentVector {
  using S = typename F::Elem;

  int n = 0;
  std::map<Composition, S> coeff;  // no explicit zeros

  DescentVector() = default;
  explicit DescentVector(int degree) : n(degree) {}

  static DescentVector xi(const F& field, const Composition& q) {
    DescentVector v(q.n());
    v.coeff.emplace(q, field.one());
    return v;
  }
  static DescentVector unit(const F& field, int n) { return xi(field, Composition({n})); }

  bool is_zero() const { return coeff.empty(); }

  void add_term(const Composition& q, const S& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = coeff.emplace(q, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) coeff.erase(it);
    }
  }

  DescentVector& operator+=(const DescentVector& o) {
    for (auto& [q, c] : o.coeff) add_term(q, c);
    return *this;
  }
  DescentVector& operator-=(const DescentVector& o) {
    for (auto& [q, c] : o.coeff) add_term(q, -c);
    return *this;
  }
  friend DescentVector operator+(DescentVector a, const DescentVector& b) { return a += b; }
  friend DescentVector operator-(DescentVector a, const DescentVector& b) { return a -= b; }
  friend bool operator==(const DescentVector& a, const DescentVector& b) {
    return a.n == b.n && a.coeff == b.coeff;
  }

  DescentVector scaled(const S& c) const {
    DescentVector r(n);
    if (c.is_zero()) return r;
    for (auto& [q, v] : coeff) r.coeff.emplace(q, v * c);
    return r;
  }
};

// All strong refinements r <= q, with the block statistics.
struct StrongRefinement {
  Composition r;
  RefinementStats stats;
};

inline std::vector<StrongRefinement> strong_refinements(const Composition& q) {
  // refine each part independently, then splice
  std::vector<std::vector<Composition>> per_part;
  for (int j = 1; j <= q.length(); ++j) per_part.push_back(enumerate_compositions(q.part(j)));
  std::vector<StrongRefinement> out;
  Parts cur;
  auto rec = [&](auto&& self, size_t j) -> void {
    if (j == per_part.size()) {
      Composition r(cur);
      out.push_back({r, refinement_statistics(r, q)});
      return;
    }
    for (const Composition& block : per_part[j]) {
      size_t keep = cur.size();
      cur.insert(cur.end(), block.parts.begin(), block.parts.end());
      self(self, j + 1);
      cur.resize(keep);
    }
  };
  rec(rec, 0);
  return out;
}

// Distinct rearrangements of a partition's parts.
inline std::vector<Composition> rearrangements(const Partition& la) {
  Parts p = la.parts;
  std::sort(p.begin(), p.end());
  std::vector<Composition> out;
  do {
    out.push_back(Composition(p));
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// |N^s_{r,q}| counts: matrices with row sums r, column sums q, read
// row-major (zeros dropped) giving s. Memoized per degree.
class StructureTable {
 public:
  using Products = std::vector<std::pair<Composition, long long>>;

  static StructureTable& instance(int n) {
    static std::mutex m;
    static std::map<int, std::unique_ptr<StructureTable>> tables;
    std::lock_guard<std::mutex> lock(m);
    auto& t = tables[n];
    if (!t) t.reset(new StructureTable(n));
    return *t;
  }

  // Xi^r Xi^q = sum_s |N^s_{r,q}| Xi^s
  const Products& product(const Composition& r, const Composition& q) {
    {
      std::shared_lock lock(mutex_);
      auto it = memo_.find({r, q});
      if (it != memo_.end()) return it->second;
    }
    Products p = compute(r, q);
    std::unique_lock lock(mutex_);
    return memo_.emplace(std::make_pair(r, q), std::move(p)).first->second;
  }

 private:
  explicit StructureTable(int n) : n_(n) {}

  Products compute(const Composition& r, const Composition& q) const {
    std::map<Composition, long long> acc;
    int rows = r.length(), cols = q.length();
    std::vector<int> colroom = q.parts;
    Parts word;
    auto rec = [&](auto&& self, int i) -> void {
      if (i == rows) {
        for (int room : colroom)
          if (room != 0) return;
        acc[Composition(word)] += 1;
        return;
      }
      int need = r.part(i + 1);
      // distribute `need` over the columns, bounded by column room
      auto dist = [&](auto&& dself, int j, int rest) -> void {
        if (j == cols) {
          if (rest == 0) self(self, i + 1);
          return;
        }
        int hi = std::min(rest, colroom[static_cast<size_t>(j)]);
        for (int a = 0; a <= hi; ++a) {
          colroom[static_cast<size_t>(j)] -= a;
          if (a) word.push_back(a);
          dself(dself, j + 1, rest - a);
          if (a) word.pop_back();
          colroom[static_cast<size_t>(j)] += a;
        }
      };
      dist(dist, 0, need);
    };
    rec(rec, 0);
    Products out(acc.begin(), acc.end());
    return out;
  }

  int n_;
  mutable std::shared_mutex mutex_;
  std::map<std::pair<Composition, Composition>, Products> memo_;
};

inline long long structure_constant(const Composition& s, const Composition& r,
                                    const Composition& q) {
  for (auto& [t, c] : StructureTable::instance(q.n()).product(r, q))
    if (t == s) return c;
  return 0;
}

// Columns restricted to exactly one nonzero entry.
inline std::map<Composition, long long> barred_products(const Composition& r,
                                                        const Composition& q) {
  std::map<Composition, long long> acc;
  int rows = r.length(), cols = q.length();
  std::vector<std::vector<int>> assigned(static_cast<size_t>(rows));  // column lists per row
  std::vector<int> rowroom = r.parts;
  auto rec = [&](auto&& self, int j) -> void {
    if (j == cols) {
      Parts word;
      for (int i = 0; i < rows; ++i) {
        if (rowroom[static_cast<size_t>(i)] != 0) return;
        for (int col : assigned[static_cast<size_t>(i)]) word.push_back(q.part(col + 1));
      }
      acc[Composition(word)] += 1;
      return;
    }
    for (int i = 0; i < rows; ++i) {
      if (rowroom[static_cast<size_t>(i)] < q.part(j + 1)) continue;
      rowroom[static_cast<size_t>(i)] -= q.part(j + 1);
      assigned[static_cast<size_t>(i)].push_back(j);
      self(self, j + 1);
      assigned[static_cast<size_t>(i)].pop_back();
      rowroom[static_cast<size_t>(i)] += q.part(j + 1);
    }
  };
  rec(rec, 0);
  return acc;
}

inline long long barred_constant(const Composition& s, const Composition& r,
                                 const Composition& q) {
  auto acc = barred_products(r, q);
  auto it = acc.find(s);
  return it == acc.end() ? 0 : it->second;
}

template <class F>
DescentVector<F> descent_multiply(const F& field, const DescentVector<F>& u,
                                  const DescentVector<F>& v) {
  if (u.n != v.n) throw std::invalid_argument("degree mismatch");
  DescentVector<F> out(u.n);
  auto& table = StructureTable::instance(u.n);
  for (auto& [r, a] : u.coeff)
    for (auto& [q, b] : v.coeff) {
      auto ab = a * b;
      for (auto& [s, cnt] : table.product(r, q)) out.add_term(s, ab * field.from_int(cnt));
    }
  return out;
}

template <class F>
DescentVector<F> descent_power(const F& field, const DescentVector<F>& v, long long e) {
  DescentVector<F> acc = DescentVector<F>::unit(field, v.n);
  DescentVector<F> base = v;
  while (e > 0) {
    if (e & 1) acc = descent_multiply(field, acc, base);
    base = descent_multiply(field, base, base);
    e >>= 1;
  }
  return acc;
}

// Xi^q = sum of permutations with descent set inside the partial sums of q;
// the words increase within each block of positions.
template <class F>
AlgebraElement<F> xi_expand(const F& field, const Composition& q) {
  int n = q.n();
  AlgebraElement<F> out(n);
  std::vector<uint8_t> word(static_cast<size_t>(n));
  std::vector<bool> used(static_cast<size_t>(n) + 1, false);
  auto rec = [&](auto&& self, int block, int pos) -> void {
    if (block > q.length()) {
      out.coeff.emplace(Permutation(word), field.one());
      return;
    }
    int len = q.part(block);
    // choose an increasing run of unused values for this block
    auto choose = [&](auto&& cself, int idx, int minval) -> void {
      if (idx == len) {
        self(self, block + 1, pos + len);
        return;
      }
      for (int v = minval; v <= n; ++v) {
        if (used[static_cast<size_t>(v)]) continue;
        used[static_cast<size_t>(v)] = true;
        word[static_cast<size_t>(pos + idx - 1)] = static_cast<uint8_t>(v);
        cself(cself, idx + 1, v + 1);
        used[static_cast<size_t>(v)] = false;
      }
    };
    choose(choose, 0, 1);
  };
  rec(rec, 1, 1);
  return out;
}

template <class F>
AlgebraElement<F> expand(const F& field, const DescentVector<F>& v) {
  AlgebraElement<F> out(v.n);
  for (auto& [q, c] : v.coeff) {
    for (auto& [sigma, one] : xi_expand(field, q).coeff) out.add_term(sigma, c);
  }
  return out;
}

// omega_q = sum over strong refinements s <= q of (-1)^{l(s)-l(q)} F_q(s) Xi^s.
template <class F>
DescentVector<F> omega_q(const F& field, const Composition& q) {
  DescentVector<F> out(q.n());
  for (auto& sr : strong_refinements(q)) {
    long long sign = ((sr.r.length() - q.length()) % 2) ? -1 : 1;
    out.add_term(sr.r, field.from_int(sign * sr.stats.F));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Young characters and the epimorphism onto their span.

template <class F>
struct ClassFunction {
  using S = typename F::Elem;

  int n = 0;
  std::map<Partition, S> values;  // total on P(n)

  ClassFunction() = default;
  ClassFunction(const F& field, int degree) : n(degree) {
    for (auto& la : enumerate_partitions(degree)) values.emplace(la, field.zero());
  }

  const S& at(const Partition& la) const { return values.at(la); }

  friend bool operator==(const ClassFunction& a, const ClassFunction& b) {
    return a.n == b.n && a.values == b.values;
  }
  ClassFunction& operator+=(const ClassFunction& o) {
    for (auto& [la, c] : o.values) values.at(la) += c;
    return *this;
  }
  // pointwise product
  ClassFunction& operator*=(const ClassFunction& o) {
    for (auto& [la, c] : values) c *= o.values.at(la);
    return *this;
  }
  friend ClassFunction operator*(ClassFunction a, const ClassFunction& b) { return a *= b; }
};

// phi^q(mu): number of q-tabloids fixed by a permutation of cycle type mu.
// Counted by assigning the labelled cycles of mu to the rows of q: matrices
// (c_{ij}) with sum_j c_{ij} = m_i(mu), sum_i i*c_{ij} = q_j, each weighted
// by prod_i m_i(mu)!/prod_j c_{ij}!.
inline long long young_character_value(const Composition& q, const Partition& mu) {
  if (q.n() != mu.n()) throw std::invalid_argument("size mismatch");
  auto mv = multiplicities(mu);
  std::vector<std::pair<int, int>> sizes(mv.m.begin(), mv.m.end());  // (i, m_i)
  int cols = q.length();
  std::vector<int> colroom = q.parts;
  long long total = 0;
  auto rec = [&](auto&& self, size_t row, long long weight) -> void {
    if (row == sizes.size()) {
      for (int room : colroom)
        if (room != 0) return;
      total += weight;
      return;
    }
    auto [i, mi] = sizes[row];
    auto dist = [&](auto&& dself, int j, int rest, long long w) -> void {
      if (j == cols) {
        if (rest == 0) self(self, row + 1, w);
        return;
      }
      int hi = std::min(rest, colroom[static_cast<size_t>(j)] / i);
      for (int c = 0; c <= hi; ++c) {
        colroom[static_cast<size_t>(j)] -= i * c;
        dself(dself, j + 1, rest - c, w / factorial_ll(c));
        colroom[static_cast<size_t>(j)] += i * c;
      }
    };
    dist(dist, 0, mi, weight * factorial_ll(mi));
  };
  rec(rec, 0, 1);
  return total;
}

template <class F>
ClassFunction<F> young_character(const F& field, const Composition& q) {
  ClassFunction<F> phi(field, q.n());
  for (auto& [mu, val] : phi.values) val = field.from_int(young_character_value(q, mu));
  return phi;
}

// The algebra epimorphism Xi^q -> phi^{q,F}, extended linearly.
template <class F>
ClassFunction<F> solomon_epimorphism(const F& field, const DescentVector<F>& v) {
  ClassFunction<F> out(field, v.n);
  for (auto& [q, c] : v.coeff)
    for (auto& [mu, val] : out.values) val += c * field.from_int(young_character_value(q, mu));
  return out;
}

// Characteristic function of the p-equivalence class of a p-regular lambda.
template <class F>
ClassFunction<F> char_function(const F& field, const Partition& la) {
  ClassFunction<F> out(field, la.n());
  int p = field.p();
  for (auto& [mu, val] : out.values)
    if (p == 0 ? (mu == la) : p_equivalent(mu, la, p)) val = field.one();
  return out;
}

// ---------------------------------------------------------------------------
// Ordinary (characteristic 0) idempotent machinery.

namespace detail {
inline void require_char0(int p, const char* what) {
  if (p != 0) throw std::domain_error(std::string(what) + ": ordinary-only");
}
}  // namespace detail

// I_q = sum_{r <= q} (-1)^{l(r)-l(q)} / l(r,q) Xi^r
inline DescentVector<QQ> gr_I(const QQ& field, const Composition& q) {
  detail::require_char0(field.p(), "gr_I");
  DescentVector<QQ> out(q.n());
  for (auto& sr : strong_refinements(q)) {
    long long sign = ((sr.r.length() - q.length()) % 2) ? -1 : 1;
    out.add_term(sr.r, Rational(sign, sr.stats.ell));
  }
  return out;
}

// E_lambda = (1/l(lambda)!) sum over rearrangements q of lambda of I_q
inline DescentVector<QQ> gr_E(const QQ& field, const Partition& la) {
  detail::require_char0(field.p(), "gr_E");
  DescentVector<QQ> out(la.n());
  for (auto& q : rearrangements(la)) out += gr_I(field, q);
  return out.scaled(Rational(1, factorial_ll(la.length())));
}

// Xi^q in I-coordinates: Xi^q = sum_{r <= q} 1/l!(r,q) I_r. The returned
// coefficients are indexed by r and refer to the I-basis.
inline DescentVector<QQ> xi_in_I_basis(const QQ& field, const Composition& q) {
  detail::require_char0(field.p(), "xi_in_I_basis");
  DescentVector<QQ> out(q.n());
  for (auto& sr : strong_refinements(q)) out.add_term(sr.r, Rational(1, sr.stats.ellfact));
  return out;
}

// Orthogonalization of the higher Lie idempotents nu_lambda along the
// canonical order: e_i = nu_i (1 - nu_{i-1}) ... (1 - nu_1). With the
// left-to-right group law, nu_i nu_j vanishes for j > i (the right factor
// strictly above in the order), so the correction chain runs downward; the
// resulting set coincides with the inverse-matrix construction at p = 0.
inline std::map<Partition, DescentVector<QQ>> ordinary_idempotents(const QQ& field, int n) {
  std::vector<Partition> order = enumerate_partitions(n);
  std::sort(order.begin(), order.end(), canonical_less);
  size_t m = order.size();
  std::vector<DescentVector<QQ>> nu;
  for (auto& la : order)
    nu.push_back(omega_q(field, la.as_composition()).scaled(Rational(1, qquestion(la))));
  std::map<Partition, DescentVector<QQ>> out;
  for (size_t i = 0; i < m; ++i) {
    DescentVector<QQ> e = nu[i];
    for (size_t j = i; j-- > 0;)
      e -= descent_multiply(field, e, nu[j]);
    out.emplace(order[i], std::move(e));
  }
  return out;
}

}  // namespace descentlab
