#pragma once

// Sparse elements of the symmetric group algebra over an exact scalar
// field, the Dynkin-Specht-Wever elements and the signed word sums Q_S.

#include <map>
#include <stdexcept>
#include <vector>

#include "descentlab/permutation.hpp"
#include "descentlab/scalar.hpp"

namespace descentlab {

template <class F>
struct AlgebraElement {
  using S = typename F::Elem;

  int n = 0;
  std::map<Permutation, S> coeff;  // no explicit zeros

  AlgebraElement() = default;
  explicit AlgebraElement(int degree) : n(degree) {}

  static AlgebraElement unit(const F& field, int degree) {
    AlgebraElement e(degree);
    e.coeff.emplace(Permutation::identity(degree), field.one());
    return e;
  }

  bool is_zero() const { return coeff.empty(); }
  size_t support_size() const { return coeff.size(); }

  void add_term(const Permutation& sigma, const S& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = coeff.emplace(sigma, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) coeff.erase(it);
    }
  }

  AlgebraElement& operator+=(const AlgebraElement& o) {
    if (n != o.n) throw std::invalid_argument("degree mismatch");
    for (auto& [s, c] : o.coeff) add_term(s, c);
    return *this;
  }
  AlgebraElement& operator-=(const AlgebraElement& o) {
    if (n != o.n) throw std::invalid_argument("degree mismatch");
    for (auto& [s, c] : o.coeff) add_term(s, -c);
    return *this;
  }
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.n == b.n && a.coeff == b.coeff;
  }

  AlgebraElement scaled(const S& c) const {
    AlgebraElement r(n);
    if (c.is_zero()) return r;
    for (auto& [s, v] : coeff) r.coeff.emplace(s, v * c);
    return r;
  }

  // Convolution product: bilinear extension of compose.
  AlgebraElement operator*(const AlgebraElement& o) const {
    if (n != o.n) throw std::invalid_argument("degree mismatch");
    AlgebraElement r(n);
    for (auto& [s, c] : coeff)
      for (auto& [t, d] : o.coeff) r.add_term(s.compose(t), c * d);
    return r;
  }

  // Right translate: x * sigma.
  AlgebraElement right_mul(const Permutation& sigma) const {
    AlgebraElement r(n);
    for (auto& [s, c] : coeff) r.coeff.emplace(s.compose(sigma), c);
    return r;
  }

  AlgebraElement shifted(int r, int N) const {
    AlgebraElement out(N);
    for (auto& [s, c] : coeff) out.coeff.emplace(s.shifted(r, N), c);
    return out;
  }
};

// Reduce an integral element mod p (coefficient-wise), for oracle tests.
inline AlgebraElement<GF> reduce_mod(const AlgebraElement<QQ>& a, const GF& field) {
  AlgebraElement<GF> r(a.n);
  for (auto& [s, c] : a.coeff) {
    if (!c.is_integer()) throw std::domain_error("non-integral coefficient");
    r.add_term(s, field.from_int(c.to_ll()));
  }
  return r;
}

namespace detail {
// Subset expansion of omega_k as words of length k: for each
// j = {j_1 < ... < j_t} in [2,k], the word j_t...j_1 k_1...k_{k-t} with
// sign (-1)^t, where the k's are the complement in increasing order.
inline void dynkin_words(int k, std::vector<std::pair<std::vector<uint8_t>, int>>& out) {
  out.clear();
  int bits = k - 1;
  for (int mask = 0; mask < (1 << bits); ++mask) {
    std::vector<uint8_t> word;
    int t = 0;
    for (int b = bits - 1; b >= 0; --b)
      if (mask & (1 << b)) {
        word.push_back(static_cast<uint8_t>(b + 2));
        ++t;
      }
    for (int x = 1; x <= k; ++x)
      if (x == 1 || !(mask & (1 << (x - 2)))) word.push_back(static_cast<uint8_t>(x));
    out.emplace_back(std::move(word), (t % 2) ? -1 : 1);
  }
}
}  // namespace detail

// omega_n = (1 - c_n)(1 - c_{n-1})...(1 - c_2), expanded exactly.
template <class F>
AlgebraElement<F> dynkin(const F& field, int n) {
  AlgebraElement<F> r(n);
  std::vector<std::pair<std::vector<uint8_t>, int>> words;
  detail::dynkin_words(n, words);
  for (auto& [w, sign] : words) r.add_term(Permutation(w), field.from_int(sign));
  return r;
}

// omega^q = product of shifted Dynkin elements on the blocks of q,
// embedded in degree |q|.
template <class F>
AlgebraElement<F> omega_upper(const F& field, const Composition& q) {
  int n = q.n();
  AlgebraElement<F> r = AlgebraElement<F>::unit(field, n);
  for (int j = 1; j <= q.length(); ++j) {
    AlgebraElement<F> wj = dynkin(field, q.part(j)).shifted(q.partial_sum(j - 1), n);
    r = r * wj;
  }
  return r;
}

// Q_S for an ordered alphabet list (a word with distinct letters): the
// signed sum omega_k . w over rearrangements; the input word is the unique
// summand starting with its first letter, with coefficient 1.
template <class F>
std::map<std::vector<uint8_t>, typename F::Elem> q_word_sum(const F& field,
                                                            const std::vector<uint8_t>& word) {
  {
    std::vector<uint8_t> s = word;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
      throw std::invalid_argument("repeated alphabets");
  }
  int k = static_cast<int>(word.size());
  std::map<std::vector<uint8_t>, typename F::Elem> out;
  std::vector<std::pair<std::vector<uint8_t>, int>> perms;
  detail::dynkin_words(k, perms);
  for (auto& [s, sign] : perms) {
    std::vector<uint8_t> rearranged(word.size());
    for (int i = 0; i < k; ++i)
      rearranged[static_cast<size_t>(i)] = word[static_cast<size_t>(s[static_cast<size_t>(i)] - 1)];
    auto [it, inserted] = out.emplace(std::move(rearranged), field.from_int(sign));
    if (!inserted) {
      it->second += field.from_int(sign);
      if (it->second.is_zero()) out.erase(it);
    }
  }
  return out;
}

// Q_{S_1} Q_{S_2} ... Q_{S_l} by word concatenation; the alphabets must
// partition [1,n], so the result lives in the group algebra.
template <class F>
AlgebraElement<F> q_product(const F& field, const std::vector<std::vector<uint8_t>>& words) {
  int n = 0;
  for (auto& w : words) n += static_cast<int>(w.size());
  std::map<std::vector<uint8_t>, typename F::Elem> acc;
  acc.emplace(std::vector<uint8_t>{}, field.one());
  for (auto& w : words) {
    auto qs = q_word_sum(field, w);
    std::map<std::vector<uint8_t>, typename F::Elem> next;
    for (auto& [prefix, c] : acc)
      for (auto& [tail, d] : qs) {
        std::vector<uint8_t> cat = prefix;
        cat.insert(cat.end(), tail.begin(), tail.end());
        auto [it, inserted] = next.emplace(std::move(cat), c * d);
        if (!inserted) {
          it->second += c * d;
          if (it->second.is_zero()) next.erase(it);
        }
      }
    acc = std::move(next);
  }
  AlgebraElement<F> r(n);
  for (auto& [w, c] : acc) r.add_term(Permutation(w), c);
  return r;
}

}  // namespace descentlab
