#pragma once

// Higher Lie modules and powers: the Gamma tableau basis, dimensions,
// Witt/Brandt formulas, the dimension and power-sum character of L^q(V),
// multiplicities in tilting/projective decompositions, and the
// complexity/period arithmetic.

#include <optional>

#include "descentlab/characters.hpp"
#include "descentlab/descent.hpp"
#include "descentlab/echelon.hpp"

namespace descentlab {

inline int moebius(int d) {
  int r = 1;
  for (int f = 2; f * f <= d; ++f) {
    if (d % f == 0) {
      d /= f;
      if (d % f == 0) return 0;
      r = -r;
    }
  }
  if (d > 1) r = -r;
  return r;
}

inline std::vector<int> divisors(int n) {
  std::vector<int> out;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

// ---------------------------------------------------------------------------
// Gamma tableaux: sequences of blocks (largest size first) partitioning
// [1,n], each block starting with its minimum, blocks of equal size ordered
// by increasing minima. In bijection with the conjugacy class of lambda.

struct GammaTableau {
  Partition shape;
  std::vector<std::vector<uint8_t>> blocks;  // listed i = n..1, j = 1..m_i
};

inline std::vector<GammaTableau> enumerate_gamma(const Partition& la) {
  int n = la.n();
  auto mv = multiplicities(la);
  std::vector<int> sizes;  // block sizes in listed order
  for (auto it = mv.m.rbegin(); it != mv.m.rend(); ++it)
    for (int j = 0; j < it->second; ++j) sizes.push_back(it->first);

  std::vector<GammaTableau> out;
  std::vector<std::vector<uint8_t>> blocks;
  std::vector<bool> used(static_cast<size_t>(n) + 1, false);

  auto rec = [&](auto&& self, size_t bi, int prev_min) -> void {
    if (bi == sizes.size()) {
      out.push_back({la, blocks});
      return;
    }
    int size = sizes[bi];
    int same_prev = (bi > 0 && sizes[bi - 1] == size) ? prev_min : 0;
    // pick the minimum, then the rest of the support, then its arrangement
    for (int mn = same_prev + 1; mn <= n; ++mn) {
      if (used[static_cast<size_t>(mn)]) continue;
      used[static_cast<size_t>(mn)] = true;
      std::vector<uint8_t> pool;
      for (int x = mn + 1; x <= n; ++x)
        if (!used[static_cast<size_t>(x)]) pool.push_back(static_cast<uint8_t>(x));
      // choose size-1 elements from pool (indices ascending), all orders
      std::vector<uint8_t> chosen;
      auto pick = [&](auto&& pself, size_t from) -> void {
        if (static_cast<int>(chosen.size()) == size - 1) {
          std::vector<uint8_t> arrangement = chosen;
          std::sort(arrangement.begin(), arrangement.end());
          do {
            std::vector<uint8_t> block;
            block.push_back(static_cast<uint8_t>(mn));
            block.insert(block.end(), arrangement.begin(), arrangement.end());
            blocks.push_back(block);
            for (uint8_t x : arrangement) used[x] = true;
            self(self, bi + 1, mn);
            for (uint8_t x : arrangement) used[x] = false;
            blocks.pop_back();
          } while (std::next_permutation(arrangement.begin(), arrangement.end()));
          return;
        }
        for (size_t k = from; k < pool.size(); ++k) {
          chosen.push_back(pool[k]);
          pself(pself, k + 1);
          chosen.pop_back();
        }
      };
      pick(pick, 0);
      used[static_cast<size_t>(mn)] = false;
    }
  };
  rec(rec, 0, 0);
  return out;
}

// {omega_q Q_T : T in Gamma(lambda(q))}, a basis of the higher Lie module
// when q is coprime to p; linear independence is certified on construction.
template <class F>
std::vector<AlgebraElement<F>> lie_basis(const F& field, const Composition& q) {
  if (!is_coprime(q, field.p()))
    throw std::domain_error("basis theorem requires (q,p)=1");
  AlgebraElement<F> w = expand(field, omega_q(field, q));
  std::vector<AlgebraElement<F>> out;
  FieldEchelon<F> ech(field);
  for (const GammaTableau& t : enumerate_gamma(sort_to_partition(q))) {
    std::vector<std::vector<uint8_t>> words(t.blocks.begin(), t.blocks.end());
    AlgebraElement<F> el = w * q_product(field, words);
    if (!ech.insert(detail::to_row(el)))
      throw std::logic_error("lie_basis: dependent element");
    out.push_back(std::move(el));
  }
  return out;
}

// dim of omega_q F S_n by exact rank; no coprimality assumed.
inline int lie_dimension(const Composition& q, int p) {
  if (p == 0) {
    QQ field;
    return right_ideal_rank(field, expand(field, omega_q(field, q)));
  }
  GF field(static_cast<uint32_t>(p));
  return right_ideal_rank(field, expand(field, omega_q(field, q)));
}

// ---------------------------------------------------------------------------
// Witt / Brandt.

inline long long witt_dimension(int n, long long m) {
  Rational acc(0);
  for (int d : divisors(n)) {
    Rational pw(1);
    for (int i = 0; i < n / d; ++i) pw *= Rational(m);
    acc += Rational(moebius(d)) * pw;
  }
  acc *= Rational(1, n);
  return acc.to_ll();
}

// Polynomials in power sums with exact rational coefficients, indexed by
// the partition of subscripts.
struct PowerSumPolynomial {
  int degree = 0;
  std::map<Partition, Rational> coeff;

  void add_term(const Partition& la, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = coeff.emplace(la, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) coeff.erase(it);
    }
  }

  // substitute p_k -> m for every k
  Rational evaluate_all(long long m) const {
    Rational acc(0);
    for (auto& [la, c] : coeff) {
      Rational pw(1);
      for (int i = 0; i < la.length(); ++i) pw *= Rational(m);
      acc += c * pw;
    }
    return acc;
  }

  friend bool operator==(const PowerSumPolynomial& a, const PowerSumPolynomial& b) {
    return a.degree == b.degree && a.coeff == b.coeff;
  }
};

// (1/n) sum_{d|n} mu(d) p_d^{n/d}
inline PowerSumPolynomial brandt_character(int n) {
  PowerSumPolynomial out;
  out.degree = n;
  for (int d : divisors(n)) {
    Parts p(static_cast<size_t>(n / d), d);
    out.add_term(Partition(p), Rational(moebius(d), n));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Dimension of L^q(V), both closed forms.

// Coefficients of prod_{i=0}^{m-1} (x + i) = sum_j sigma_{j,m} x^j: the
// number of permutations of S_m with j cycles.
inline std::vector<long long> cycle_count_polynomial(int m) {
  std::vector<long long> c{1};  // constant polynomial 1
  for (int i = 0; i < m; ++i) {
    std::vector<long long> next(c.size() + 1, 0);
    for (size_t j = 0; j < c.size(); ++j) {
      next[j + 1] += c[j];
      next[j] += c[j] * i;
    }
    c = std::move(next);
  }
  return c;  // c[j] = sigma_{j,m}
}

namespace detail {
inline void require_higher_power_hypotheses(const Composition& q, int p) {
  if (!is_coprime(q, p)) throw std::domain_error("hypothesis violated: (q,p) != 1");
  if (!is_p_regular(sort_to_partition(q), p))
    throw std::domain_error("hypothesis violated: lambda(q) not p-regular");
}
}  // namespace detail

// dim L^q(V) with dim V = m. Evaluates the binomial product over the Witt
// dimensions and the cycle-count expansion, and insists they agree.
inline long long higher_power_dimension(const Composition& q, int p, long long m) {
  detail::require_higher_power_hypotheses(q, p);
  auto mv = multiplicities(q);

  Rational product(1);
  for (auto& [i, mi] : mv.m) {
    long long di = witt_dimension(i, m);
    product *= Rational(binomial_ll(mi + di - 1, mi));
  }

  // (1/q?) sum_{eta} sigma_{eta,rho} sum_{delta | gamma, m(gamma) = eta}
  //        mu(delta) m^{|gamma/delta|}
  std::vector<std::pair<int, int>> rho(mv.m.begin(), mv.m.end());  // (i, m_i)
  Rational sum(0);
  std::vector<int> eta(rho.size(), 1);
  auto eval_eta = [&]() {
    long long sigma_factor = 1;
    Rational inner(1);
    for (size_t k = 0; k < rho.size(); ++k) {
      auto [i, mi] = rho[k];
      auto sig = cycle_count_polynomial(mi);
      long long ipow = 1;
      for (int t = 0; t < mi - eta[k]; ++t) ipow *= i;
      sigma_factor *= ipow * sig[static_cast<size_t>(eta[k])];
      // eta[k] parts equal to i in gamma; each chooses a divisor d | i
      Rational block(0);
      std::vector<int> divs = divisors(i);
      std::vector<size_t> pick(static_cast<size_t>(eta[k]), 0);
      bool done = false;
      while (!done) {
        long long mu_prod = 1, expo = 0;
        for (size_t t = 0; t < pick.size(); ++t) {
          int d = divs[pick[t]];
          mu_prod *= moebius(d);
          expo += i / d;
        }
        if (mu_prod != 0) {
          Rational pw(1);
          for (long long t = 0; t < expo; ++t) pw *= Rational(m);
          block += Rational(mu_prod) * pw;
        }
        size_t pos = 0;
        while (pos < pick.size() && ++pick[pos] == divs.size()) pick[pos++] = 0;
        done = (pos == pick.size());
      }
      inner *= block;
    }
    sum += Rational(sigma_factor) * inner;
  };
  bool done = rho.empty();
  if (rho.empty()) sum = Rational(1);
  while (!done) {
    eval_eta();
    size_t pos = 0;
    while (pos < eta.size() && ++eta[pos] > rho[pos].second) eta[pos++] = 1;
    done = (pos == eta.size());
  }
  sum *= Rational(1, qquestion(q));

  if (!(product == sum))
    throw std::logic_error("higher_power_dimension: the two closed forms disagree");
  if (!product.is_integer()) throw std::logic_error("higher_power_dimension: non-integral");
  return product.to_ll();
}

// ---------------------------------------------------------------------------
// The power-sum character of L^q(V) and its decomposition multiplicities.

// One term of the plethysm expansion prod_i h_{m_i(q)} o l_i: a tuple of
// partitions (one per part size), a divisor tuple, the resulting subscript
// composition, and the rational weight.
struct PlethysmTerm {
  std::vector<std::pair<int, Partition>> lambdas;    // (i, partition of m_i(q))
  std::vector<std::pair<int, Composition>> deltas;   // (i, divisor tuple)
  Composition subscripts;                            // concatenated, i ascending
  Rational weight;                                   // mu(delta) / (lambda? I^x)
};

inline std::vector<PlethysmTerm> plethysm_terms(const Composition& q, int p) {
  detail::require_higher_power_hypotheses(q, p);
  auto mv = multiplicities(q);
  std::vector<std::pair<int, int>> rows(mv.m.begin(), mv.m.end());

  std::vector<PlethysmTerm> out;
  std::vector<std::pair<int, Partition>> lambdas(rows.size());
  auto rec_lambda = [&](auto&& self, size_t k) -> void {
    if (k == rows.size()) {
      long long denom = 1;  // lambda? * I^x
      for (auto& [i, la] : lambdas) {
        denom *= qquestion(la);
        for (int t = 0; t < la.length(); ++t) denom *= i;
      }
      // divisor tuples: for each i, one divisor of i per part of lambda_i
      std::vector<std::pair<int, Composition>> deltas(rows.size());
      auto rec_delta = [&](auto&& dself, size_t k2) -> void {
        if (k2 == rows.size()) {
          long long mu_prod = 1;
          Parts subs;
          for (size_t t = 0; t < rows.size(); ++t) {
            int i = lambdas[t].first;
            const Partition& la = lambdas[t].second;
            const Composition& de = deltas[t].second;
            for (int j = 1; j <= la.length(); ++j) {
              int d = de.part(j);
              mu_prod *= moebius(d);
              for (int rep = 0; rep < i / d; ++rep) subs.push_back(la.part(j) * d);
            }
          }
          if (mu_prod != 0)
            out.push_back({lambdas, deltas, Composition(subs), Rational(mu_prod, denom)});
          return;
        }
        int i = rows[k2].first;
        const Partition& la = lambdas[k2].second;
        std::vector<int> divs = divisors(i);
        Parts tuple(static_cast<size_t>(la.length()));
        auto fill = [&](auto&& fself, int j) -> void {
          if (j > la.length()) {
            deltas[k2] = {i, Composition(tuple)};
            dself(dself, k2 + 1);
            return;
          }
          for (int d : divs) {
            tuple[static_cast<size_t>(j - 1)] = d;
            fself(fself, j + 1);
          }
        };
        fill(fill, 1);
      };
      rec_delta(rec_delta, 0);
      return;
    }
    for (const Partition& la : enumerate_partitions(rows[k].second)) {
      lambdas[k] = {rows[k].first, la};
      self(self, k + 1);
    }
  };
  rec_lambda(rec_lambda, 0);
  return out;
}

// Formal character of L^q(V) in the power-sum basis.
inline PowerSumPolynomial formal_character_Lq(const Composition& q, int p) {
  PowerSumPolynomial ch;
  ch.degree = q.n();
  for (const PlethysmTerm& t : plethysm_terms(q, p))
    ch.add_term(sort_to_partition(t.subscripts), t.weight);
  return ch;
}

// ---------------------------------------------------------------------------
// Brauer character tables (shipped as data) and multiplicity formulas.

struct BrauerTable {
  uint32_t p = 0;
  int n = 0;
  std::vector<Partition> labels;
  std::vector<Partition> classes;
  std::vector<std::vector<long long>> values;  // labels x classes

  long long value(const Partition& label, const Partition& cls) const {
    auto li = std::find(labels.begin(), labels.end(), label);
    auto ci = std::find(classes.begin(), classes.end(), cls);
    if (li == labels.end()) throw std::out_of_range("unknown Brauer label " + label.str());
    if (ci == classes.end())
      throw std::out_of_range("class " + cls.str() + " absent from Brauer table");
    return values[static_cast<size_t>(li - labels.begin())]
                 [static_cast<size_t>(ci - classes.begin())];
  }

  void validate() const {
    if (labels.size() != classes.size() || values.size() != labels.size())
      throw std::invalid_argument("Brauer table must be square");
    for (auto& row : values)
      if (row.size() != classes.size()) throw std::invalid_argument("ragged Brauer table");
    for (auto& la : labels)
      if (la.n() != n || !is_p_regular(la, static_cast<int>(p)))
        throw std::invalid_argument("Brauer label not a p-regular partition of n");
    for (auto& c : classes)
      if (c.n() != n || !is_coprime(c, static_cast<int>(p)))
        throw std::invalid_argument("Brauer class not p-regular");
  }
};

// Dimensions of the projective indecomposables, recovered from the Brauer
// table by orthogonality: the projective characters are the unique class
// functions on p-regular classes with <Phi^nu, beta^mu>' = delta. Checked
// against sum_nu dim P^nu dim D^nu = n!.
inline std::map<Partition, long long> projective_dimensions(const BrauerTable& t) {
  size_t m = t.labels.size();
  // A = B * diag(|C_c|/n!), solve A x = e_nu, dimension = x at class (1^n)
  std::vector<std::vector<Rational>> a(m, std::vector<Rational>(m));
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j)
      a[i][j] = Rational(t.values[i][j]) *
                Rational(conjugacy_class_size(t.classes[j]), factorial_ll(t.n));
  // invert by Gauss-Jordan
  std::vector<std::vector<Rational>> inv(m, std::vector<Rational>(m, Rational(0)));
  for (size_t i = 0; i < m; ++i) inv[i][i] = Rational(1);
  for (size_t col = 0; col < m; ++col) {
    size_t piv = col;
    while (piv < m && a[piv][col].is_zero()) ++piv;
    if (piv == m) throw std::invalid_argument("singular Brauer table");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    Rational d = a[col][col].inv();
    for (size_t j = 0; j < m; ++j) {
      a[col][j] *= d;
      inv[col][j] *= d;
    }
    for (size_t i = 0; i < m; ++i) {
      if (i == col || a[i][col].is_zero()) continue;
      Rational f = a[i][col];
      for (size_t j = 0; j < m; ++j) {
        a[i][j] -= f * a[col][j];
        inv[i][j] -= f * inv[col][j];
      }
    }
  }
  // Phi^nu(c) = inv[c][nu]; dimension at the identity class
  Partition identity_class(Parts(static_cast<size_t>(t.n), 1));
  size_t id_idx = static_cast<size_t>(
      std::find(t.classes.begin(), t.classes.end(), identity_class) - t.classes.begin());
  if (id_idx == m) throw std::invalid_argument("Brauer table lacks the identity class");

  std::map<Partition, long long> dims;
  long long regular = 0;
  for (size_t nu = 0; nu < m; ++nu) {
    Rational d = inv[id_idx][nu];
    if (!d.is_integer() || d.to_ll() <= 0)
      throw std::invalid_argument("projective dimensions not positive integers");
    dims.emplace(t.labels[nu], d.to_ll());
    regular += d.to_ll() * t.values[nu][id_idx];
  }
  if (regular != factorial_ll(t.n))
    throw std::invalid_argument("projective dimensions fail the regular-module identity");
  return dims;
}

// Multiplicity of each tilting module T(gamma) in L^q(V) (equivalently of
// P^gamma in the higher Lie module): m_gamma = sum of term weights times
// the Brauer character at the term's class.
inline std::map<Partition, long long> tilting_multiplicities(const Composition& q, int p,
                                                             const BrauerTable& table) {
  if (table.p != static_cast<uint32_t>(p) || table.n != q.n())
    throw std::invalid_argument("Brauer table does not match (p, n)");
  std::map<Partition, Rational> acc;
  for (auto& ga : table.labels) acc.emplace(ga, Rational(0));
  for (const PlethysmTerm& t : plethysm_terms(q, p)) {
    Partition cls = sort_to_partition(t.subscripts);
    for (auto& ga : table.labels) acc.at(ga) += t.weight * Rational(table.value(ga, cls));
  }
  std::map<Partition, long long> out;
  long long dim_check = 0;
  auto proj = projective_dimensions(table);
  for (auto& [ga, c] : acc) {
    if (!c.is_integer() || c.to_ll() < 0)
      throw std::logic_error("tilting multiplicity not a nonnegative integer");
    out.emplace(ga, c.to_ll());
    dim_check += c.to_ll() * proj.at(ga);
  }
  if (dim_check != factorial_ll(q.n()) / qquestion(q))
    throw std::logic_error("tilting multiplicities fail the dimension identity");
  return out;
}

// Decomposition multiplicities of the Lie module for p not dividing n:
// n_nu = (1/n) sum_{d|n} mu(d) beta^nu(sigma_d). The class convention for
// sigma_d is fixed by a rank oracle; the survivor is recorded.
struct DEDecomposition {
  std::map<Partition, long long> n_nu;
  std::string convention;  // "sigma_d=(d^{n/d})" or "sigma_d=((n/d)^d)"
};

inline DEDecomposition de_multiplicities(int n, int p, const BrauerTable& table) {
  if (p == 0 || n % p == 0) throw std::domain_error("requires p not dividing n");
  if (table.p != static_cast<uint32_t>(p) || table.n != n)
    throw std::invalid_argument("Brauer table does not match (p, n)");
  auto proj = projective_dimensions(table);
  long long lie_dim = lie_dimension(Composition({n}), p);

  auto attempt = [&](bool transposed) -> std::optional<std::map<Partition, long long>> {
    std::map<Partition, long long> out;
    long long total = 0;
    for (auto& nu : table.labels) {
      Rational acc(0);
      for (int d : divisors(n)) {
        Parts sigma = transposed ? Parts(static_cast<size_t>(n / d), d)
                                 : Parts(static_cast<size_t>(d), n / d);
        acc += Rational(moebius(d), n) * Rational(table.value(nu, Partition(sigma)));
      }
      if (!acc.is_integer() || acc.to_ll() < 0) return std::nullopt;
      out.emplace(nu, acc.to_ll());
      total += acc.to_ll() * proj.at(nu);
    }
    if (total != lie_dim) return std::nullopt;
    return out;
  };

  if (auto r = attempt(true)) return {*r, "sigma_d=(d^{n/d})"};
  if (auto r = attempt(false)) return {*r, "sigma_d=((n/d)^d)"};
  throw std::logic_error(
      "de_multiplicities: both sigma_d conventions fail the nonnegativity/dimension oracle");
}

// ---------------------------------------------------------------------------
// Complexity and period of the higher Lie module.

inline int complexity(const Composition& q, int p) {
  if (!is_coprime(q, p)) throw std::domain_error("formula requires coprimality");
  if (p == 0) return 0;
  int acc = 0;
  for (auto& [i, mi] : multiplicities(q).m) acc += mi / p;
  return acc;
}

inline bool is_projective(const Composition& q, int p) { return complexity(q, p) == 0; }
inline bool is_periodic(const Composition& q, int p) { return complexity(q, p) == 1; }

inline std::optional<int> period(const Composition& q, int p) {
  if (!is_periodic(q, p)) return std::nullopt;
  return p == 2 ? 1 : 2 * p - 2;
}

}  // namespace descentlab
