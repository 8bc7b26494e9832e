#pragma once

// Compositions, partitions, refinements, part multiplicities and
// p-equivalence: the indexing layer for the descent algebra.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace descentlab {

using Parts = std::vector<int>;

inline long long factorial_ll(int n) {
  long long r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

inline long long binomial_ll(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Ordered sequence of positive integers; q_j^+ partial sums are the
// descent-set boundaries used throughout.
struct Composition {
  Parts parts;

  Composition() = default;
  explicit Composition(Parts p) : parts(std::move(p)) {
    for (int x : parts)
      if (x < 1) throw std::invalid_argument("composition parts must be >= 1");
  }
  Composition(std::initializer_list<int> p) : Composition(Parts(p)) {}

  int n() const { return std::accumulate(parts.begin(), parts.end(), 0); }
  int length() const { return static_cast<int>(parts.size()); }
  int part(int j) const { return parts[static_cast<size_t>(j - 1)]; }  // 1-based
  // q_j^+ = q_1 + ... + q_j, with q_0^+ = 0.
  int partial_sum(int j) const {
    int s = 0;
    for (int i = 0; i < j; ++i) s += parts[static_cast<size_t>(i)];
    return s;
  }
  bool is_partition() const {
    return std::is_sorted(parts.rbegin(), parts.rend());
  }
  bool empty() const { return parts.empty(); }

  auto operator<=>(const Composition&) const = default;

  std::string str() const {
    std::string s = "(";
    for (size_t i = 0; i < parts.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(parts[i]);
    }
    return s + ")";
  }
};

// Weakly decreasing composition.
struct Partition {
  Parts parts;

  Partition() = default;
  explicit Partition(Parts p) : parts(std::move(p)) {
    for (int x : parts)
      if (x < 1) throw std::invalid_argument("partition parts must be >= 1");
    if (!std::is_sorted(parts.rbegin(), parts.rend()))
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
  Partition(std::initializer_list<int> p) : Partition(Parts(p)) {}

  int n() const { return std::accumulate(parts.begin(), parts.end(), 0); }
  int length() const { return static_cast<int>(parts.size()); }
  int part(int j) const { return parts[static_cast<size_t>(j - 1)]; }
  Composition as_composition() const { return Composition(parts); }

  Partition conjugate() const {
    Parts c;
    for (int i = 1; !parts.empty() && i <= parts[0]; ++i) {
      int cnt = 0;
      for (int x : parts) cnt += (x >= i);
      c.push_back(cnt);
    }
    return Partition(c);
  }

  auto operator<=>(const Partition&) const = default;
  std::string str() const { return as_composition().str(); }
};

inline Partition sort_to_partition(const Composition& q) {
  Parts p = q.parts;
  std::sort(p.rbegin(), p.rend());
  return Partition(p);
}

// m_i(q), q-double-factorial (product of m_i!) and q? = q!! * prod q_j.
struct MultiplicityVector {
  std::map<int, int> m;  // i -> m_i(q), only nonzero entries

  int of(int i) const {
    auto it = m.find(i);
    return it == m.end() ? 0 : it->second;
  }
};

inline MultiplicityVector multiplicities(const Composition& q) {
  MultiplicityVector mv;
  for (int x : q.parts) ++mv.m[x];
  return mv;
}
inline MultiplicityVector multiplicities(const Partition& q) {
  return multiplicities(q.as_composition());
}

// q!! = prod_i m_i(q)!
inline long long facmulti(const Composition& q) {
  long long r = 1;
  for (auto& [i, mi] : multiplicities(q).m) r *= factorial_ll(mi);
  return r;
}
inline long long facmulti(const Partition& q) { return facmulti(q.as_composition()); }

// q? = prod_i i^{m_i(q)} m_i(q)!
inline long long qquestion(const Composition& q) {
  long long r = facmulti(q);
  for (int x : q.parts) r *= x;
  return r;
}
inline long long qquestion(const Partition& q) { return qquestion(q.as_composition()); }

// |C_lambda| = n!/lambda?
inline long long conjugacy_class_size(const Partition& la) {
  return factorial_ll(la.n()) / qquestion(la);
}

// All 2^{n-1} compositions of n, lexicographic. n = 0 gives the empty one.
inline std::vector<Composition> enumerate_compositions(int n) {
  std::vector<Composition> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  Parts cur;
  auto rec = [&](auto&& self, int rest) -> void {
    if (rest == 0) {
      out.push_back(Composition(cur));
      return;
    }
    for (int first = 1; first <= rest; ++first) {
      cur.push_back(first);
      self(self, rest - first);
      cur.pop_back();
    }
  };
  rec(rec, n);
  return out;
}

inline bool is_p_regular(const Partition& la, int p) {
  if (p == 0) return true;
  for (auto& [i, mi] : multiplicities(la).m)
    if (mi >= p) return false;
  return true;
}

// (q,p) = 1: no part divisible by p. Every composition is coprime to 0.
inline bool is_coprime(const Composition& q, int p) {
  if (p == 0) return true;
  for (int x : q.parts)
    if (x % p == 0) return false;
  return true;
}
inline bool is_coprime(const Partition& q, int p) { return is_coprime(q.as_composition(), p); }

// P(n) if p = 0, else the p-regular partitions. Lex-descending from (n).
inline std::vector<Partition> enumerate_partitions(int n, int p = 0) {
  std::vector<Partition> out;
  Parts cur;
  auto rec = [&](auto&& self, int rest, int maxpart) -> void {
    if (rest == 0) {
      Partition la(cur);
      if (is_p_regular(la, p)) out.push_back(la);
      return;
    }
    for (int first = std::min(rest, maxpart); first >= 1; --first) {
      if (p > 0) {
        int run = 0;
        for (auto it = cur.rbegin(); it != cur.rend() && *it == first; ++it) ++run;
        if (run + 1 >= p) continue;
      }
      cur.push_back(first);
      self(self, rest - first, first);
      cur.pop_back();
    }
  };
  if (n == 0)
    out.emplace_back();
  else
    rec(rec, n, n);
  return out;
}

// Unique split of r into consecutive blocks with sums q_1,...,q_k.
// Returns block end indices (1-based into r), empty if r is not a strong
// refinement of q.
inline std::vector<int> strong_refinement_blocks(const Composition& r, const Composition& q) {
  if (r.n() != q.n()) throw std::invalid_argument("size mismatch");
  std::vector<int> ends;
  int j = 0, acc = 0;
  for (int i = 0; i < r.length(); ++i) {
    acc += r.parts[static_cast<size_t>(i)];
    if (j >= q.length()) return {};
    int target = q.parts[static_cast<size_t>(j)];
    if (acc > target) return {};
    if (acc == target) {
      ends.push_back(i + 1);
      ++j;
      acc = 0;
    }
  }
  if (j != q.length()) return {};
  return ends;
}

inline bool is_strong_refinement(const Composition& r, const Composition& q) {
  return !strong_refinement_blocks(r, q).empty() || (r.empty() && q.empty());
}

namespace detail {
// Can the multiset of parts be split into groups with the given sums?
inline bool weak_refine_rec(std::vector<int>& parts, std::vector<int>& room) {
  if (parts.empty()) {
    for (int x : room)
      if (x != 0) return false;
    return true;
  }
  int x = parts.back();
  parts.pop_back();
  int last_tried = -1;
  for (size_t i = 0; i < room.size(); ++i) {
    if (room[i] < x || room[i] == last_tried) continue;
    last_tried = room[i];
    room[i] -= x;
    if (weak_refine_rec(parts, room)) {
      room[i] += x;
      parts.push_back(x);
      return true;
    }
    room[i] += x;
  }
  parts.push_back(x);
  return false;
}
}  // namespace detail

// r is a weak refinement of q: some rearrangement of r strongly refines q,
// i.e. the parts of r can be grouped to sum to the parts of q.
inline bool is_weak_refinement(const Composition& r, const Composition& q) {
  if (r.n() != q.n()) throw std::invalid_argument("size mismatch");
  std::vector<int> parts = r.parts;
  std::sort(parts.begin(), parts.end());
  std::vector<int> room = q.parts;
  return detail::weak_refine_rec(parts, room);
}
inline bool is_weak_refinement(const Partition& r, const Composition& q) {
  return is_weak_refinement(r.as_composition(), q);
}
inline bool is_weak_refinement(const Partition& r, const Partition& q) {
  return is_weak_refinement(r.as_composition(), q.as_composition());
}
inline bool is_weak_refinement(const Composition& r, const Partition& q) {
  return is_weak_refinement(r, q.as_composition());
}

struct RefinementStats {
  long long ell;      // prod of block lengths
  long long ellfact;  // prod of block length factorials
  long long F;        // prod of last parts of blocks
};

inline RefinementStats refinement_statistics(const Composition& r, const Composition& q) {
  auto ends = strong_refinement_blocks(r, q);
  if (ends.empty() && !(r.empty() && q.empty()))
    throw std::invalid_argument("not a strong refinement");
  RefinementStats st{1, 1, 1};
  int start = 0;
  for (int e : ends) {
    int len = e - start;
    st.ell *= len;
    st.ellfact *= factorial_ll(len);
    st.F *= r.parts[static_cast<size_t>(e - 1)];
    start = e;
  }
  return st;
}

// Replace each part k*p^m (p coprime to k) by p^m copies of k; the cycle
// type of the p'-part of a permutation of this cycle type.
inline Partition p_prime_type(const Partition& la, int p) {
  if (p == 0) return la;
  Parts out;
  for (int x : la.parts) {
    int pm = 1;
    while (x % p == 0) {
      x /= p;
      pm *= p;
    }
    for (int c = 0; c < pm; ++c) out.push_back(x);
  }
  std::sort(out.rbegin(), out.rend());
  return Partition(out);
}

inline bool p_equivalent(const Partition& la, const Partition& mu, int p) {
  if (la.n() != mu.n()) return false;
  if (p == 0) return la == mu;
  return p_prime_type(la, p) == p_prime_type(mu, p);
}

// |C_{lambda,p}| = sum of |C_mu| over mu p-equivalent to lambda.
inline long long p_class_size(const Partition& la, int p) {
  if (p != 0 && !is_p_regular(la, p))
    throw std::invalid_argument("p_class_size needs a p-regular partition");
  if (p == 0) return conjugacy_class_size(la);
  long long total = 0;
  for (const Partition& mu : enumerate_partitions(la.n()))
    if (p_equivalent(la, mu, p)) total += conjugacy_class_size(mu);
  return total;
}

// Canonical total order refining weak refinement: longer partitions first,
// lexicographically ascending among equal lengths. (1^n) is least, (n)
// greatest; strict weak refinement strictly increases length, so this
// refines the refinement order. The idempotent cascade depends on it.
inline bool canonical_less(const Partition& a, const Partition& b) {
  if (a.length() != b.length()) return a.length() > b.length();
  return a.parts < b.parts;
}

// Lambda_p^+(n) in the canonical order lambda^(1) < ... < lambda^(m).
inline std::vector<Partition> canonical_regular_order(int n, int p) {
  std::vector<Partition> out = enumerate_partitions(n, p);
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

inline Composition concat(const Composition& a, const Composition& b) {
  Parts p = a.parts;
  p.insert(p.end(), b.parts.begin(), b.parts.end());
  return Composition(p);
}

}  // namespace descentlab
