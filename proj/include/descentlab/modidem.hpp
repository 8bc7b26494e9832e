#pragma once

// Construction of the complete set of orthogonal primitive idempotents
// {e_{lambda,F} : lambda p-regular} of the descent algebra in positive
// characteristic: invert the Young-character matrix on p-regular labels,
// then run the idempotent-lifting cascade.

#include <optional>
#include <sstream>

#include "descentlab/descent.hpp"

namespace descentlab {

// The matrix Phi = (phi^{lambda}(mu)) over F_p, rows/columns indexed by
// the p-regular partitions in the canonical total order; lower triangular
// with diagonal facmulti(lambda). Psi is its inverse.
struct RegularMatrix {
  uint32_t p = 0;
  int n = 0;
  std::vector<Partition> order;       // lambda^(1) < ... < lambda^(m)
  std::vector<std::vector<Fp>> entries;

  const Fp& at(size_t i, size_t j) const { return entries[i][j]; }
};

struct PhiPsi {
  RegularMatrix phi;
  RegularMatrix psi;
};

namespace detail {
// inverse of a lower-triangular matrix over F_p
inline std::vector<std::vector<Fp>> invert_lower(const std::vector<std::vector<Fp>>& a,
                                                 const GF& field) {
  size_t m = a.size();
  std::vector<std::vector<Fp>> inv(m, std::vector<Fp>(m, field.zero()));
  for (size_t j = 0; j < m; ++j) {
    inv[j][j] = a[j][j].inv();
    for (size_t i = j + 1; i < m; ++i) {
      Fp s = field.zero();
      for (size_t k = j; k < i; ++k) s += a[i][k] * inv[k][j];
      inv[i][j] = -(a[i][i].inv() * s);
    }
  }
  return inv;
}
}  // namespace detail

inline PhiPsi phi_psi(int n, uint32_t p) {
  GF field(p);
  std::vector<Partition> order = canonical_regular_order(n, static_cast<int>(p));
  size_t m = order.size();
  RegularMatrix phi{p, n, order, {}};
  phi.entries.assign(m, std::vector<Fp>(m, field.zero()));
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j)
      phi.entries[i][j] =
          field.from_int(young_character_value(order[i].as_composition(), order[j]));
  RegularMatrix psi{p, n, order, detail::invert_lower(phi.entries, field)};
  return {std::move(phi), std::move(psi)};
}

// f_{lambda,F} = sum_mu b_{lambda,mu} Xi^mu, from the Psi row of lambda.
inline DescentVector<GF> f_vector(const Partition& la, int n, uint32_t p) {
  if (!is_p_regular(la, static_cast<int>(p)))
    throw std::invalid_argument("f_vector needs a p-regular partition");
  GF field(p);
  PhiPsi pp = phi_psi(n, p);
  size_t row = 0;
  while (row < pp.psi.order.size() && !(pp.psi.order[row] == la)) ++row;
  DescentVector<GF> out(n);
  for (size_t j = 0; j < pp.psi.order.size(); ++j)
    out.add_term(pp.psi.order[j].as_composition(), pp.psi.at(row, j));
  return out;
}

// Minimal k with p^k >= n-1; x^(p^k) is then an idempotent whenever the
// image of x under the epimorphism is.
inline long long lift_exponent(int n, uint32_t p) {
  long long e = 1;
  while (e < n - 1) e *= p;
  return e;
}

template <class F>
bool is_idempotent(const F& field, const DescentVector<F>& x) {
  return descent_multiply(field, x, x) == x;
}

inline DescentVector<GF> lift_power(const GF& field, const DescentVector<GF>& x, int n) {
  DescentVector<GF> lifted = descent_power(field, x, lift_exponent(n, field.prime));
  if (!is_idempotent(field, lifted))
    throw std::logic_error("lift_power: lifted element is not idempotent");
  return lifted;
}

struct IdempotentSet {
  uint32_t p = 0;
  int n = 0;
  std::vector<Partition> order;  // canonical order on the p-regular labels
  std::map<Partition, DescentVector<GF>> e;
  std::map<Partition, DescentVector<GF>> f;        // the raw f_{lambda,F}
  std::vector<DescentVector<GF>> f_prime;          // cascade f_1', ..., f_{m+1}'

  const DescentVector<GF>& of(const Partition& la) const { return e.at(la); }
};

// The full cascade: f_1' = 1, f_i' = (f_{i-1}' f_{>=i} f_{i-1}')^{p^k},
// e_{lambda^(i)} = f_i' - f_{i+1}'.
inline IdempotentSet modular_idempotents(int n, uint32_t p) {
  GF field(p);
  IdempotentSet set;
  set.p = p;
  set.n = n;
  set.order = canonical_regular_order(n, static_cast<int>(p));
  size_t m = set.order.size();

  PhiPsi pp = phi_psi(n, p);
  std::vector<DescentVector<GF>> f;
  for (size_t i = 0; i < m; ++i) {
    DescentVector<GF> fi(n);
    for (size_t j = 0; j < m; ++j)
      fi.add_term(pp.psi.order[j].as_composition(), pp.psi.at(i, j));
    set.f.emplace(set.order[i], fi);
    f.push_back(std::move(fi));
  }

  long long exponent = lift_exponent(n, p);
  std::vector<DescentVector<GF>> fp(m + 2, DescentVector<GF>(n));
  fp[1] = DescentVector<GF>::unit(field, n);
  for (size_t i = 2; i <= m; ++i) {
    DescentVector<GF> tail(n);
    for (size_t j = i - 1; j < m; ++j) tail += f[j];  // f_{>= i} (1-based)
    DescentVector<GF> x = descent_multiply(field, descent_multiply(field, fp[i - 1], tail), fp[i - 1]);
    fp[i] = descent_power(field, x, exponent);
    if (!is_idempotent(field, fp[i]))
      throw std::logic_error("modular_idempotents: cascade stage is not idempotent");
  }
  set.f_prime.assign(fp.begin() + 1, fp.end());

  for (size_t i = 1; i <= m; ++i)
    set.e.emplace(set.order[i - 1], fp[i] - fp[i + 1]);
  return set;
}

// Structural verification: idempotency, orthogonality, sum = 1, image under
// the epimorphism, and the triangular leading term. Returns a diagnostic
// message on the first failure.
inline std::optional<std::string> verify_idempotent_set(const IdempotentSet& set) {
  GF field(set.p);
  auto fail = [&](const std::string& what) { return std::optional<std::string>(what); };

  DescentVector<GF> sum(set.n);
  for (auto& [la, el] : set.e) sum += el;
  if (!(sum == DescentVector<GF>::unit(field, set.n)))
    return fail("sum of idempotents is not the identity");

  for (auto& [la, el] : set.e) {
    if (!is_idempotent(field, el)) return fail("e_" + la.str() + " is not idempotent");
    for (auto& [mu, el2] : set.e) {
      if (la == mu) continue;
      if (!descent_multiply(field, el, el2).is_zero())
        return fail("e_" + la.str() + " e_" + mu.str() + " != 0");
    }
    if (!(solomon_epimorphism(field, el) == char_function(field, la)))
      return fail("image of e_" + la.str() + " is not char_" + la.str());
    // leading term 1/facmulti(la) at Xi^la, everything else strictly below
    Fp want = field.from_int(facmulti(la)).inv();
    for (auto& [xi, c] : el.coeff) {
      if (xi == la.as_composition()) {
        if (!(c == want)) return fail("leading coefficient of e_" + la.str() + " wrong");
      } else {
        Partition lx = sort_to_partition(xi);
        if (lx == la || !is_weak_refinement(xi, la.as_composition()))
          return fail("support of e_" + la.str() + " not strictly below lambda: " + xi.str());
      }
    }
    if (el.coeff.find(la.as_composition()) == el.coeff.end())
      return fail("e_" + la.str() + " lacks its leading term");
  }
  return std::nullopt;
}

}  // namespace descentlab
