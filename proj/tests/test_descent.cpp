#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "descentlab/descent.hpp"

using namespace descentlab;

namespace {
QQ qq;

// Oracle: count tabloids of shape q fixed by a permutation of type mu by
// enumerating ordered set partitions of [1,n] with block sizes q.
long long fixed_tabloids_oracle(const Composition& q, const Partition& mu) {
  int n = q.n();
  Permutation sigma = Permutation::identity(n);
  {  // one representative of cycle type mu: consecutive cycles
    int base = 0;
    for (int j = 1; j <= mu.length(); ++j) {
      int len = mu.part(j);
      for (int i = 1; i <= len; ++i)
        sigma.w[static_cast<size_t>(base + i - 1)] = static_cast<uint8_t>(base + (i % len) + 1);
      base += len;
    }
  }
  long long count = 0;
  std::vector<int> assignment(static_cast<size_t>(n));  // value -> block
  std::vector<int> room = q.parts;
  auto rec = [&](auto&& self, int v) -> void {
    if (v > n) {
      // fixed iff every block is sigma-invariant
      for (int x = 1; x <= n; ++x)
        if (assignment[static_cast<size_t>(x - 1)] !=
            assignment[static_cast<size_t>(sigma.image(x) - 1)])
          return;
      ++count;
      return;
    }
    for (int b = 0; b < q.length(); ++b) {
      if (room[static_cast<size_t>(b)] == 0) continue;
      --room[static_cast<size_t>(b)];
      assignment[static_cast<size_t>(v - 1)] = b;
      self(self, v + 1);
      ++room[static_cast<size_t>(b)];
    }
  };
  rec(rec, 1);
  return count;
}

template <class F>
DescentVector<F> random_descent_vector(const F& field, int n, std::mt19937& rng) {
  DescentVector<F> v(n);
  std::uniform_int_distribution<int> coin(-2, 2);
  for (auto& q : enumerate_compositions(n)) {
    int c = coin(rng);
    if (c) v.add_term(q, field.from_int(c));
  }
  return v;
}
}  // namespace

TEST_CASE("descent element expansion") {
  REQUIRE(xi_expand(qq, Composition({4})) == AlgebraElement<QQ>::unit(qq, 4));

  AlgebraElement<QQ> all(3);
  for (auto& s : all_permutations(3)) all.add_term(s, Rational(1));
  REQUIRE(xi_expand(qq, Composition({1, 1, 1})) == all);

  AlgebraElement<QQ> x22(4);
  for (auto w : {"1234", "1324", "1423", "2314", "2413", "3412"})
    x22.add_term(Permutation::parse(w), Rational(1));
  REQUIRE(xi_expand(qq, Composition({2, 2})) == x22);

  // support size is the multinomial coefficient
  for (int n = 1; n <= 6; ++n)
    for (auto& q : enumerate_compositions(n)) {
      long long multinomial = factorial_ll(n);
      for (int x : q.parts) multinomial /= factorial_ll(x);
      REQUIRE(static_cast<long long>(xi_expand(qq, q).support_size()) == multinomial);
    }
}

TEST_CASE("structure constants") {
  Composition q({2, 1}), r({1, 2}), s({1, 1, 1});
  REQUIRE(structure_constant(s, r, q) == 1);
  REQUIRE(structure_constant(q, q, r) == 1);
  REQUIRE(structure_constant(r, r, q) == 1);
  REQUIRE(structure_constant(s, q, r) == 1);
  REQUIRE(barred_constant(s, r, q) == 0);
  REQUIRE(barred_constant(s, q, r) == 0);
  REQUIRE(barred_constant(q, q, r) == 1);

  // |Nbar^r_{r,q}| = facmulti(r) when q is a rearrangement of r
  for (int n = 1; n <= 5; ++n)
    for (auto& a : enumerate_compositions(n))
      for (auto& b : enumerate_compositions(n)) {
        if (!(sort_to_partition(a) == sort_to_partition(b))) continue;
        REQUIRE(barred_constant(a, a, b) == facmulti(a));
      }
  // coefficient of Xi^r in (Xi^r)^2
  for (int n = 1; n <= 5; ++n)
    for (auto& a : enumerate_compositions(n)) REQUIRE(structure_constant(a, a, a) == facmulti(a));
}

TEST_CASE("descent multiplication against the group algebra") {
  for (int n = 1; n <= 4; ++n) {
    auto comps = enumerate_compositions(n);
    for (auto& r : comps) {
      REQUIRE(descent_multiply(qq, DescentVector<QQ>::unit(qq, n), DescentVector<QQ>::xi(qq, r)) ==
              DescentVector<QQ>::xi(qq, r));
      for (auto& q : comps) {
        DescentVector<QQ> prod =
            descent_multiply(qq, DescentVector<QQ>::xi(qq, r), DescentVector<QQ>::xi(qq, q));
        REQUIRE(expand(qq, prod) == xi_expand(qq, r) * xi_expand(qq, q));
        // support lands on strong refinements of r that weakly refine q
        for (auto& [s, c] : prod.coeff) {
          REQUIRE(is_strong_refinement(s, r));
          REQUIRE(is_weak_refinement(s, q));
        }
      }
    }
  }
}

TEST_CASE("higher Lie elements") {
  DescentVector<QQ> w21 = omega_q(qq, Composition({2, 1}));
  DescentVector<QQ> expect(3);
  expect.add_term(Composition({2, 1}), Rational(2));
  expect.add_term(Composition({1, 1, 1}), Rational(-1));
  REQUIRE(w21 == expect);

  GF f2(2);
  DescentVector<GF> w21_2 = omega_q(f2, Composition({2, 1}));
  REQUIRE(w21_2 == DescentVector<GF>::xi(f2, Composition({1, 1, 1})));

  DescentVector<GF> w3_2 = omega_q(f2, Composition({3}));
  DescentVector<GF> e3(3);
  e3.add_term(Composition({3}), f2.one());
  e3.add_term(Composition({2, 1}), f2.one());
  e3.add_term(Composition({1, 1, 1}), f2.one());
  REQUIRE(w3_2 == e3);

  // omega_q = omega^q Xi^q in the group algebra, n <= 5
  for (int n = 1; n <= 5; ++n)
    for (auto& q : enumerate_compositions(n))
      REQUIRE(expand(qq, omega_q(qq, q)) == omega_upper(qq, q) * xi_expand(qq, q));
}

TEST_CASE("products of higher Lie elements") {
  for (int n = 1; n <= 5; ++n) {
    auto comps = enumerate_compositions(n);
    for (auto& q : comps)
      for (auto& r : comps) {
        DescentVector<QQ> wq = omega_q(qq, q), wr = omega_q(qq, r);
        DescentVector<QQ> prod = descent_multiply(qq, wq, wr);
        if (sort_to_partition(q) == sort_to_partition(r)) {
          REQUIRE(prod == wq.scaled(Rational(qquestion(q))));
        } else if (!is_weak_refinement(r, q)) {
          // vanishing unless the right factor weakly refines the left
          REQUIRE(prod.is_zero());
        }
        // Xi^r omega_q = sum over rearrangements s of q strongly refining r
        DescentVector<QQ> lhs = descent_multiply(qq, DescentVector<QQ>::xi(qq, r), wq);
        DescentVector<QQ> rhs(n);
        auto barred = barred_products(r, q);
        for (auto& s : rearrangements(sort_to_partition(q))) {
          if (!is_strong_refinement(s, r)) continue;
          auto it = barred.find(s);
          if (it == barred.end() || it->second == 0) continue;
          rhs += omega_q(qq, s).scaled(Rational(it->second));
        }
        REQUIRE(lhs == rhs);
      }
  }
}

TEST_CASE("Young characters") {
  REQUIRE(young_character_value(Composition({1, 1, 1, 1}), Partition({1, 1, 1, 1})) == 24);

  // the matrix over the 3-regular labels of 4 in canonical order
  auto order = canonical_regular_order(4, 3);
  long long expect[4][4] = {{2, 0, 0, 0}, {2, 2, 0, 0}, {2, 0, 1, 0}, {1, 1, 1, 1}};
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = 0; j < 4; ++j) {
      long long v = young_character_value(order[i].as_composition(), order[j]) % 3;
      REQUIRE(v == expect[i][j]);
    }

  for (int n = 1; n <= 5; ++n)
    for (auto& q : enumerate_compositions(n)) {
      for (auto& mu : enumerate_partitions(n)) {
        long long v = young_character_value(q, mu);
        REQUIRE(v == fixed_tabloids_oracle(q, mu));
        if (v != 0) REQUIRE(is_weak_refinement(mu.as_composition(), q));
      }
      REQUIRE(young_character_value(q, sort_to_partition(q)) == facmulti(q));
    }
}

TEST_CASE("the epimorphism onto Young characters") {
  // Xi^(n) maps to the constant function 1
  for (int n = 1; n <= 5; ++n) {
    ClassFunction<QQ> c = solomon_epimorphism(qq, DescentVector<QQ>::unit(qq, n));
    for (auto& [mu, v] : c.values) REQUIRE(v == Rational(1));
  }

  // nu_q maps to the characteristic function of the class of lambda(q)
  for (int n = 1; n <= 5; ++n)
    for (auto& q : enumerate_compositions(n)) {
      DescentVector<QQ> nu = omega_q(qq, q).scaled(Rational(1, qquestion(q)));
      REQUIRE(solomon_epimorphism(qq, nu) == char_function(qq, sort_to_partition(q)));
    }

  // rearrangement differences die
  DescentVector<QQ> k = DescentVector<QQ>::xi(qq, Composition({2, 1}));
  k -= DescentVector<QQ>::xi(qq, Composition({1, 2}));
  for (auto& [mu, v] : solomon_epimorphism(qq, k).values) REQUIRE(v.is_zero());

  // multiplicativity on random pairs
  std::mt19937 rng(23);
  for (int n = 2; n <= 5; ++n) {
    for (int trial = 0; trial < 8; ++trial) {
      DescentVector<QQ> a = random_descent_vector(qq, n, rng);
      DescentVector<QQ> b = random_descent_vector(qq, n, rng);
      REQUIRE(solomon_epimorphism(qq, descent_multiply(qq, a, b)) ==
              solomon_epimorphism(qq, a) * solomon_epimorphism(qq, b));
      for (uint32_t p : {2u, 3u}) {
        GF f(p);
        DescentVector<GF> fa = random_descent_vector(f, n, rng);
        DescentVector<GF> fb = random_descent_vector(f, n, rng);
        REQUIRE(solomon_epimorphism(f, descent_multiply(f, fa, fb)) ==
                solomon_epimorphism(f, fa) * solomon_epimorphism(f, fb));
      }
    }
  }
}

TEST_CASE("ordinary idempotent machinery") {
  DescentVector<QQ> i211 = gr_I(qq, Composition({2, 1, 1}));
  DescentVector<QQ> expect(4);
  expect.add_term(Composition({2, 1, 1}), Rational(1));
  expect.add_term(Composition({1, 1, 1, 1}), Rational(-1, 2));
  REQUIRE(i211 == expect);

  // Xi^{(3,1)} I_{(1,1,2)} = 2 I_{(1,2,1)}
  DescentVector<QQ> lhs = descent_multiply(qq, DescentVector<QQ>::xi(qq, Composition({3, 1})),
                                           gr_I(qq, Composition({1, 1, 2})));
  REQUIRE(lhs == gr_I(qq, Composition({1, 2, 1})).scaled(Rational(2)));

  DescentVector<QQ> e211 = gr_E(qq, Partition({2, 1, 1}));
  DescentVector<QQ> expectE(4);
  expectE.add_term(Composition({2, 1, 1}), Rational(1, 6));
  expectE.add_term(Composition({1, 2, 1}), Rational(1, 6));
  expectE.add_term(Composition({1, 1, 2}), Rational(1, 6));
  expectE.add_term(Composition({1, 1, 1, 1}), Rational(-1, 4));
  REQUIRE(e211 == expectE);

  // Xi^q = sum_r (1/l!(r,q)) I_r
  for (int n = 1; n <= 5; ++n)
    for (auto& q : enumerate_compositions(n)) {
      DescentVector<QQ> acc(n);
      for (auto& [r, c] : xi_in_I_basis(qq, q).coeff) acc += gr_I(qq, r).scaled(c);
      REQUIRE(acc == DescentVector<QQ>::xi(qq, q));
    }

  // I and E identities
  for (int n = 1; n <= 5; ++n) {
    auto comps = enumerate_compositions(n);
    for (auto& q : comps)
      for (auto& r : comps) {
        DescentVector<QQ> iq = gr_I(qq, q), ir = gr_I(qq, r);
        if (!is_weak_refinement(r, q)) {
          REQUIRE(descent_multiply(qq, iq, ir).is_zero());
          REQUIRE(descent_multiply(qq, DescentVector<QQ>::xi(qq, q), ir).is_zero());
        }
        if (sort_to_partition(q) == sort_to_partition(r)) {
          long long fm = facmulti(q);
          REQUIRE(descent_multiply(qq, DescentVector<QQ>::xi(qq, q), ir) ==
                  iq.scaled(Rational(fm)));
          DescentVector<QQ> e = gr_E(qq, sort_to_partition(q));
          REQUIRE(descent_multiply(qq, e, iq) == e.scaled(Rational(fm)));
        }
      }
  }
}

TEST_CASE("orthogonalized Lie idempotents") {
  // degree 3: the set coincides with the inverse-matrix construction
  auto e3 = ordinary_idempotents(qq, 3);
  DescentVector<QQ> e21(3);
  e21.add_term(Composition({2, 1}), Rational(1));
  e21.add_term(Composition({1, 1, 1}), Rational(-1, 2));
  REQUIRE(e3.at(Partition({2, 1})) == e21);
  DescentVector<QQ> e111(3);
  e111.add_term(Composition({1, 1, 1}), Rational(1, 6));
  REQUIRE(e3.at(Partition({1, 1, 1})) == e111);
  DescentVector<QQ> etop(3);
  etop.add_term(Composition({3}), Rational(1));
  etop.add_term(Composition({2, 1}), Rational(-1));
  etop.add_term(Composition({1, 1, 1}), Rational(1, 3));
  REQUIRE(e3.at(Partition({3})) == etop);

  for (int n = 1; n <= 6; ++n) {
    auto es = ordinary_idempotents(qq, n);
    DescentVector<QQ> sum(n);
    for (auto& [la, e] : es) {
      REQUIRE(descent_multiply(qq, e, e) == e);
      sum += e;
      // triangularity: leading coefficient 1/facmulti at Xi^lambda, rest on
      // strong refinements
      REQUIRE(e.coeff.at(la.as_composition()) == Rational(1, facmulti(la)));
      for (auto& [xi, c] : e.coeff)
        REQUIRE(is_strong_refinement(xi, la.as_composition()));
    }
    REQUIRE(sum == DescentVector<QQ>::unit(qq, n));
    for (auto& [la, e] : es)
      for (auto& [mu, f] : es)
        if (!(la == mu)) REQUIRE(descent_multiply(qq, e, f).is_zero());
  }
}
