#pragma once

// Ordinary irreducible characters of the symmetric group via border-strip
// recursion, characters of right ideals, and inner-product multiplicities.

#include <mutex>

#include "descentlab/descent.hpp"
#include "descentlab/echelon.hpp"

namespace descentlab {

namespace detail {

// Beta-set of a partition: {lambda_i + l - i}, descending.
inline std::vector<int> beta_set(const Partition& la) {
  int l = la.length();
  std::vector<int> b;
  for (int i = 1; i <= l; ++i) b.push_back(la.part(i) + l - i);
  return b;
}

inline Partition partition_from_beta(std::vector<int> b) {
  std::sort(b.rbegin(), b.rend());
  int l = static_cast<int>(b.size());
  Parts p;
  for (int i = 0; i < l; ++i) {
    int part = b[static_cast<size_t>(i)] - (l - 1 - i);
    if (part > 0) p.push_back(part);
  }
  return Partition(p);
}

}  // namespace detail

// chi^lambda(mu) by removing a border strip of length mu_1 in all possible
// ways (beta-set moves), memoized per degree.
class CharacterTable {
 public:
  static CharacterTable& instance(int n) {
    static std::mutex m;
    static std::map<int, std::unique_ptr<CharacterTable>> tables;
    std::lock_guard<std::mutex> lock(m);
    auto& t = tables[n];
    if (!t) t.reset(new CharacterTable(n));
    return *t;
  }

  long long value(const Partition& la, const Partition& mu) {
    std::lock_guard<std::mutex> lock(mutex_);
    return value_locked(la, mu);
  }

 private:
  explicit CharacterTable(int) {}

  long long value_locked(const Partition& la, const Partition& mu) {
    if (la.n() != mu.n()) throw std::invalid_argument("size mismatch");
    if (la.n() == 0) return 1;
    auto key = std::make_pair(la, mu);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;

    int k = mu.part(1);
    Parts rest_parts(mu.parts.begin() + 1, mu.parts.end());
    Partition rest(rest_parts);

    std::vector<int> beta = detail::beta_set(la);
    long long total = 0;
    for (size_t idx = 0; idx < beta.size(); ++idx) {
      int b = beta[idx];
      int target = b - k;
      if (target < 0) continue;
      bool occupied = false;
      int height = 0;
      for (int x : beta) {
        if (x == target) occupied = true;
        if (x > target && x < b) ++height;
      }
      if (occupied) continue;
      std::vector<int> nb = beta;
      nb[idx] = target;
      long long sub = value_locked(detail::partition_from_beta(nb), rest);
      total += (height % 2 ? -1 : 1) * sub;
    }
    memo_.emplace(key, total);
    return total;
  }

  std::mutex mutex_;
  std::map<std::pair<Partition, Partition>, long long> memo_;
};

inline long long irreducible_character(const Partition& la, const Partition& mu) {
  return CharacterTable::instance(la.n()).value(la, mu);
}

// Number of standard Young tableaux, by the hook length product.
inline long long syt_count(const Partition& la) {
  long long hooks = 1;
  Partition conj = la.conjugate();
  for (int i = 1; i <= la.length(); ++i)
    for (int j = 1; j <= la.part(i); ++j)
      hooks *= (la.part(i) - j) + (conj.part(j) - i) + 1;
  return factorial_ll(la.n()) / hooks;
}

// Canonical class representative: consecutive cycles (1..mu_1)(mu_1+1..)...
inline Permutation class_representative(const Partition& mu) {
  int n = mu.n();
  std::vector<uint8_t> w(static_cast<size_t>(n));
  int base = 0;
  for (int j = 1; j <= mu.length(); ++j) {
    int len = mu.part(j);
    for (int i = 1; i <= len; ++i)
      w[static_cast<size_t>(base + i - 1)] = static_cast<uint8_t>(base + (i % len) + 1);
    base += len;
  }
  return Permutation(w);
}

namespace detail {
template <class F>
typename FieldEchelon<F>::Row translate_row(const typename FieldEchelon<F>::Row& row, int n,
                                            const Permutation& sigma) {
  typename FieldEchelon<F>::Row out;
  out.reserve(row.size());
  for (auto& [col, c] : row)
    out.emplace_back(
        static_cast<SparseIdx>(Permutation::from_lex_rank(n, col).compose(sigma).lex_rank()), c);
  std::sort(out.begin(), out.end(), [](auto& a, auto& b) { return a.first < b.first; });
  return out;
}
}  // namespace detail

// Ordinary character of the right ideal x Q S_n: trace of right
// multiplication by a class representative on a fully reduced echelon
// basis, where the coordinate at row i is the entry at its leading column.
inline ClassFunction<QQ> ideal_character(const QQ& field, const AlgebraElement<QQ>& x) {
  IdealBasis<QQ> basis = right_ideal_basis(field, x);
  basis.ech.back_eliminate();
  ClassFunction<QQ> ch(field, x.n);
  for (auto& [mu, val] : ch.values) {
    Permutation rep = class_representative(mu).inverse();
    // (e_i * rep)[lead_i] = e_i[lead_i * rep^{-1}]; walking rep backwards
    // saves materializing the translated rows
    Rational trace(0);
    for (size_t i = 0; i < basis.ech.rows.size(); ++i) {
      const auto& row = basis.ech.rows[i];
      SparseIdx lead = row.front().first;
      SparseIdx want = static_cast<SparseIdx>(
          Permutation::from_lex_rank(x.n, lead).compose(rep).lex_rank());
      auto it = std::lower_bound(row.begin(), row.end(), want,
                                 [](auto& e, SparseIdx c) { return e.first < c; });
      if (it != row.end() && it->first == want) trace += it->second;
    }
    val = trace;
  }
  return ch;
}

// <psi, chi^lambda> = (1/n!) sum_mu |C_mu| psi(mu) chi^lambda(mu)
inline Rational multiplicity(const ClassFunction<QQ>& psi, const Partition& la) {
  Rational acc(0);
  for (auto& [mu, val] : psi.values)
    acc += val * Rational(conjugacy_class_size(mu)) * Rational(irreducible_character(la, mu));
  return acc * Rational(1, factorial_ll(psi.n));
}

}  // namespace descentlab
