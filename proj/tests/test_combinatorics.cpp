#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "descentlab/combinatorics.hpp"
#include "descentlab/permutation.hpp"

using namespace descentlab;

namespace {

// Oracle: compositions of n via subsets of {1,...,n-1} (descent boundaries).
long long composition_count_oracle(int n) { return n == 0 ? 1 : (1LL << (n - 1)); }

// Oracle: count permutations of a given cycle type by enumeration.
long long class_size_oracle(const Partition& la) {
  long long cnt = 0;
  for (const Permutation& s : all_permutations(la.n()))
    if (s.cycle_type() == la) ++cnt;
  return cnt;
}

}  // namespace

TEST_CASE("composition enumeration") {
  auto c1 = enumerate_compositions(1);
  REQUIRE(c1.size() == 1);
  REQUIRE(c1[0] == Composition({1}));

  auto all3 = enumerate_compositions(3);
  std::set<Composition> c3(all3.begin(), all3.end());
  REQUIRE(c3 == std::set<Composition>{Composition({3}), Composition({2, 1}), Composition({1, 2}),
                                      Composition({1, 1, 1})});

  REQUIRE(enumerate_compositions(4).size() == 8);
  REQUIRE(enumerate_compositions(0).size() == 1);

  for (int n = 1; n <= 8; ++n) {
    auto all = enumerate_compositions(n);
    REQUIRE(static_cast<long long>(all.size()) == composition_count_oracle(n));
    std::set<Composition> dedup(all.begin(), all.end());
    REQUIRE(dedup.size() == all.size());
  }
}

TEST_CASE("partition enumeration and p-regularity") {
  auto p52 = enumerate_partitions(5, 2);
  REQUIRE(std::set<Partition>(p52.begin(), p52.end()) ==
          std::set<Partition>{Partition({5}), Partition({4, 1}), Partition({3, 2})});

  auto p43 = enumerate_partitions(4, 3);
  REQUIRE(std::set<Partition>(p43.begin(), p43.end()) ==
          std::set<Partition>{Partition({4}), Partition({3, 1}), Partition({2, 2}),
                              Partition({2, 1, 1})});

  auto p10 = enumerate_partitions(1, 0);
  REQUIRE(p10.size() == 1);
  REQUIRE(p10[0] == Partition({1}));
}

TEST_CASE("sorting a composition to its partition") {
  REQUIRE(sort_to_partition(Composition({1, 2, 1})) == Partition({2, 1, 1}));
  REQUIRE(sort_to_partition(Composition({2, 2})) == Partition({2, 2}));
  REQUIRE(sort_to_partition(Composition({1, 4})) == Partition({4, 1}));
}

TEST_CASE("strong and weak refinements") {
  REQUIRE(is_strong_refinement(Composition({2, 1, 1}), Composition({3, 1})));
  REQUIRE(is_weak_refinement(Composition({1, 1, 2}), Composition({3, 1})));
  REQUIRE_FALSE(is_strong_refinement(Composition({1, 2}), Composition({2, 1})));
  REQUIRE_THROWS(is_strong_refinement(Composition({2}), Composition({1})));

  // strong implies weak; weak is a preorder; strong a partial order (n <= 6)
  for (int n = 1; n <= 6; ++n) {
    auto comps = enumerate_compositions(n);
    for (auto& r : comps)
      for (auto& q : comps) {
        if (is_strong_refinement(r, q)) REQUIRE(is_weak_refinement(r, q));
        if (is_strong_refinement(r, q) && is_strong_refinement(q, r)) REQUIRE(r == q);
      }
    for (auto& r : comps) {
      REQUIRE(is_weak_refinement(r, r));
      REQUIRE(is_strong_refinement(r, r));
    }
  }
  // transitivity of weak refinement, n = 5
  auto comps = enumerate_compositions(5);
  for (auto& a : comps)
    for (auto& b : comps) {
      if (!is_weak_refinement(a, b)) continue;
      for (auto& c : comps)
        if (is_weak_refinement(b, c)) REQUIRE(is_weak_refinement(a, c));
    }
}

TEST_CASE("refinement statistics") {
  auto idstat = refinement_statistics(Composition({3, 2}), Composition({3, 2}));
  REQUIRE(idstat.ell == 1);
  REQUIRE(idstat.ellfact == 1);
  REQUIRE(idstat.F == 6);

  auto ones = refinement_statistics(Composition({1, 1, 1}), Composition({3}));
  REQUIRE(ones.ell == 3);
  REQUIRE(ones.ellfact == 6);
  REQUIRE(ones.F == 1);

  auto mixed = refinement_statistics(Composition({2, 1, 1}), Composition({3, 1}));
  REQUIRE(mixed.ell == 2);
  REQUIRE(mixed.ellfact == 2);
  REQUIRE(mixed.F == 1);

  REQUIRE_THROWS(refinement_statistics(Composition({1, 2}), Composition({2, 1})));
}

TEST_CASE("multiplicity statistics") {
  REQUIRE(facmulti(Composition({1, 1, 1, 1, 1})) == 120);
  REQUIRE(facmulti(Composition({5})) == 1);
  REQUIRE(facmulti(Composition({2, 2, 1})) == 2);
  REQUIRE(qquestion(Composition({2, 2, 1})) == 8);

  // invariance under rearrangement
  for (int n = 1; n <= 6; ++n)
    for (auto& q : enumerate_compositions(n)) {
      Partition la = sort_to_partition(q);
      REQUIRE(facmulti(q) == facmulti(la));
      REQUIRE(qquestion(q) == qquestion(la));
      REQUIRE(is_weak_refinement(la.as_composition(), q));
    }
}

TEST_CASE("conjugacy class sizes") {
  for (int n = 2; n <= 6; ++n)
    REQUIRE(conjugacy_class_size(Partition({n})) == factorial_ll(n - 1));
  REQUIRE(conjugacy_class_size(Partition({2, 2, 1})) == 15);
  REQUIRE(conjugacy_class_size(Partition(Parts(6, 1))) == 1);

  for (int n = 1; n <= 6; ++n)
    for (auto& la : enumerate_partitions(n)) REQUIRE(conjugacy_class_size(la) == class_size_oracle(la));

  for (int n = 1; n <= 8; ++n) {
    long long total = 0;
    for (auto& la : enumerate_partitions(n)) total += conjugacy_class_size(la);
    REQUIRE(total == factorial_ll(n));
  }
}

TEST_CASE("p-equivalence") {
  REQUIRE(p_prime_type(Partition({4, 1}), 2) == Partition({1, 1, 1, 1, 1}));
  for (int p : {2, 3, 5})
    for (int n = 1; n <= 7; ++n)
      for (auto& la : enumerate_partitions(n)) {
        REQUIRE(p_equivalent(la, la, p));
        Partition t = p_prime_type(la, p);
        REQUIRE(p_prime_type(t, p) == t);
      }

  REQUIRE(p_class_size(Partition({4, 1}), 2) == 56);
  REQUIRE(p_class_size(Partition({5}), 2) == 24);
  REQUIRE_THROWS(p_class_size(Partition({1, 1}), 2));

  // coprime p-regular partitions sit alone in their class
  for (int p : {2, 3})
    for (int n = 1; n <= 7; ++n)
      for (auto& la : enumerate_partitions(n, p))
        if (is_coprime(la, p)) REQUIRE(p_class_size(la, p) == conjugacy_class_size(la));

  // the classes partition S_n, one p-regular label each
  for (int p : {2, 3, 5})
    for (int n = 1; n <= 7; ++n) {
      long long total = 0;
      for (auto& la : enumerate_partitions(n, p)) total += p_class_size(la, p);
      REQUIRE(total == factorial_ll(n));
      for (auto& mu : enumerate_partitions(n)) {
        int regulars = 0;
        for (auto& la : enumerate_partitions(n, p))
          if (p_equivalent(mu, la, p)) ++regulars;
        REQUIRE(regulars == 1);
      }
    }
}

TEST_CASE("canonical order refines weak refinement") {
  for (int n = 1; n <= 7; ++n) {
    auto order = enumerate_partitions(n);
    std::sort(order.begin(), order.end(), canonical_less);
    for (size_t i = 0; i < order.size(); ++i)
      for (size_t j = 0; j < order.size(); ++j) {
        if (i == j) continue;
        bool i_refines_j = is_weak_refinement(order[i].as_composition(), order[j].as_composition());
        if (i_refines_j) REQUIRE(i < j);
      }
  }
  // the order used for the regular labels at p = 3, n = 4
  auto reg = canonical_regular_order(4, 3);
  REQUIRE(reg == std::vector<Partition>{Partition({2, 1, 1}), Partition({2, 2}),
                                        Partition({3, 1}), Partition({4})});
}
