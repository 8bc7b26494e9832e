#pragma once

// One-line words w_1...w_n identified with permutations via (i)sigma = w_i.
// Composition reads left to right and coincides with the Polya action on
// words.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "descentlab/combinatorics.hpp"

namespace descentlab {

struct Permutation {
  std::vector<uint8_t> w;  // w[i-1] = (i)sigma, values in [1,n]

  Permutation() = default;
  explicit Permutation(std::vector<uint8_t> word) : w(std::move(word)) {
    std::vector<bool> seen(w.size() + 1, false);
    for (uint8_t x : w) {
      if (x < 1 || x > w.size() || seen[x]) throw std::invalid_argument("not a permutation word");
      seen[x] = true;
    }
  }
  Permutation(std::initializer_list<int> word) {
    std::vector<uint8_t> v;
    for (int x : word) v.push_back(static_cast<uint8_t>(x));
    *this = Permutation(v);
  }

  static Permutation identity(int n) {
    std::vector<uint8_t> v(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = static_cast<uint8_t>(i + 1);
    Permutation s;
    s.w = std::move(v);
    return s;
  }

  // Parse "5613427" (degrees <= 9).
  static Permutation parse(const std::string& s) {
    std::vector<uint8_t> v;
    for (char c : s) {
      if (c < '1' || c > '9') throw std::invalid_argument("bad word digit");
      v.push_back(static_cast<uint8_t>(c - '0'));
    }
    return Permutation(v);
  }

  int degree() const { return static_cast<int>(w.size()); }
  int image(int i) const { return w[static_cast<size_t>(i - 1)]; }  // (i)sigma

  // (i)(sigma tau) = ((i)sigma)tau; equals the Polya action tau . w.
  Permutation compose(const Permutation& tau) const {
    if (degree() != tau.degree()) throw std::invalid_argument("degree mismatch");
    Permutation r;
    r.w.resize(w.size());
    for (size_t i = 0; i < w.size(); ++i) r.w[i] = tau.w[static_cast<size_t>(w[i] - 1)];
    return r;
  }

  Permutation inverse() const {
    Permutation r;
    r.w.resize(w.size());
    for (size_t i = 0; i < w.size(); ++i) r.w[static_cast<size_t>(w[i] - 1)] = static_cast<uint8_t>(i + 1);
    return r;
  }

  // sigma^{+r} in degree N: acts as sigma shifted onto [r+1, r+n], fixes the rest.
  Permutation shifted(int r, int N) const {
    if (r + degree() > N) throw std::invalid_argument("shift overflows target degree");
    Permutation s = identity(N);
    for (int i = 1; i <= degree(); ++i)
      s.w[static_cast<size_t>(r + i - 1)] = static_cast<uint8_t>(image(i) + r);
    return s;
  }

  std::vector<int> descents() const {
    std::vector<int> d;
    for (int i = 1; i < degree(); ++i)
      if (image(i) > image(i + 1)) d.push_back(i);
    return d;
  }

  // Cycles of the permutation i -> (i)sigma, each rotated so its minimum
  // comes last, sorted by increasing minimum.
  std::vector<std::vector<int>> cycles_min_last() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(w.size() + 1, false);
    for (int start = 1; start <= degree(); ++start) {
      if (seen[static_cast<size_t>(start)]) continue;
      std::vector<int> cyc;
      int x = start;
      do {
        seen[static_cast<size_t>(x)] = true;
        cyc.push_back(x);
        x = image(x);
      } while (x != start);
      // start is the minimum of its cycle (we scan minima first); put it last
      std::rotate(cyc.begin(), cyc.begin() + 1, cyc.end());
      out.push_back(cyc);
    }
    return out;
  }

  Partition cycle_type() const {
    Parts p;
    for (auto& c : cycles_min_last()) p.push_back(static_cast<int>(c.size()));
    std::sort(p.rbegin(), p.rend());
    return Partition(p);
  }

  // Index in lexicographic one-line order, 0-based.
  uint64_t lex_rank() const {
    uint64_t r = 0;
    int n = degree();
    for (int i = 0; i < n; ++i) {
      int smaller = 0;
      for (int j = i + 1; j < n; ++j) smaller += (w[static_cast<size_t>(j)] < w[static_cast<size_t>(i)]);
      r += static_cast<uint64_t>(smaller) * static_cast<uint64_t>(factorial_ll(n - 1 - i));
    }
    return r;
  }

  static Permutation from_lex_rank(int n, uint64_t rank) {
    std::vector<uint8_t> avail;
    for (int i = 1; i <= n; ++i) avail.push_back(static_cast<uint8_t>(i));
    Permutation s;
    for (int i = n - 1; i >= 0; --i) {
      uint64_t f = static_cast<uint64_t>(factorial_ll(i));
      size_t idx = static_cast<size_t>(rank / f);
      rank %= f;
      s.w.push_back(avail[idx]);
      avail.erase(avail.begin() + static_cast<long>(idx));
    }
    return s;
  }

  auto operator<=>(const Permutation&) const = default;

  std::string str() const {
    std::string s;
    for (uint8_t x : w) s += static_cast<char>('0' + x);
    return s;
  }
};

// Reverse colexicographic order: scan from the right; at the first
// difference the larger letter makes the smaller word.
inline bool rco_less(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("degree mismatch");
  for (int i = a.degree(); i >= 1; --i)
    if (a.image(i) != b.image(i)) return a.image(i) > b.image(i);
  return false;
}

// Block permutation tau_r: for tau in S_k and r of length k, the unique
// permutation carrying Xi^r to Xi^q where q = (r_{(1)tau},...,r_{(k)tau}).
inline Permutation tau_block(const Permutation& tau, const Composition& r) {
  if (tau.degree() != r.length()) throw std::invalid_argument("tau_block: length mismatch");
  std::vector<uint8_t> word;
  for (int j = 1; j <= tau.degree(); ++j) {
    int src = tau.image(j);             // block of r moved into slot j
    int base = r.partial_sum(src - 1);  // r^+_{(j)tau - 1}
    for (int t = 1; t <= r.part(src); ++t) word.push_back(static_cast<uint8_t>(base + t));
  }
  return Permutation(word);
}

inline std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  Permutation s = Permutation::identity(n);
  std::vector<uint8_t> v = s.w;
  do {
    Permutation t;
    t.w = v;
    out.push_back(t);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

}  // namespace descentlab
