#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "ppl/plactic.hpp"

using namespace ppl;

namespace {

Tableau tab(std::vector<std::vector<int>> rows) { return Tableau{std::move(rows)}; }

// Involution-number recurrence t(n) = t(n-1) + (n-1) t(n-2).
uint64_t involutions(int n) {
  uint64_t prev2 = 1, prev1 = 1;
  if (n <= 1)
    return 1;
  uint64_t cur = 0;
  for (int k = 2; k <= n; ++k) {
    cur = prev1 + static_cast<uint64_t>(k - 1) * prev2;
    prev2 = prev1;
    prev1 = cur;
  }
  return cur;
}

} // namespace

TEST_CASE("tableau validation") {
  CHECK(tab({{1, 2}, {3}}).is_standard());
  CHECK(tab({}).is_standard());
  CHECK(tab({{1, 3}, {2}}).is_standard());
  CHECK_FALSE(tab({{2, 1}}).is_standard());       // row not increasing
  CHECK_FALSE(tab({{1, 2}, {2}}).is_standard());  // repeated entry
  CHECK_FALSE(tab({{1}, {2, 3}}).is_standard());  // shape not a partition
}

TEST_CASE("insertion examples") {
  auto [p1, q1] = rs_insert(Permutation({1}));
  CHECK(p1 == tab({{1}}));
  CHECK(q1 == tab({{1}}));

  auto [p2, q2] = rs_insert(Permutation({3, 2, 1}));
  CHECK(p2 == tab({{1}, {2}, {3}}));
  CHECK(q2 == tab({{1}, {2}, {3}}));

  auto [p3, q3] = rs_insert(Permutation({1, 3, 2}));
  CHECK(p3 == tab({{1, 2}, {3}}));
  CHECK(q3 == tab({{1, 2}, {3}}));
}

TEST_CASE("knuth class examples") {
  auto names = [](const std::set<Permutation> &cls) {
    std::set<Word> out;
    for (const auto &p : cls)
      out.insert(p.word());
    return out;
  };
  CHECK(names(knuth_class(Permutation({1, 2, 3}))) ==
        std::set<Word>{{1, 2, 3}});
  CHECK(names(knuth_class(Permutation({1, 3, 2}))) ==
        std::set<Word>{{1, 3, 2}, {3, 1, 2}});
  CHECK(names(knuth_class(Permutation({2, 1, 3}))) ==
        std::set<Word>{{2, 1, 3}, {2, 3, 1}});
}

TEST_CASE("plactic class vectors") {
  LinComb c1 = plactic_class_vector(tab({{1, 2, 3}}));
  CHECK(c1.term_count() == 1);
  CHECK(c1.terms().count(Permutation({1, 2, 3})) == 1);

  LinComb c2 = plactic_class_vector(tab({{1, 2}, {3}}));
  CHECK(c2.term_count() == 2);
  CHECK(c2.terms().count(Permutation({1, 3, 2})) == 1);
  CHECK(c2.terms().count(Permutation({3, 1, 2})) == 1);

  LinComb c3 = plactic_class_vector(tab({{1}, {2}, {3}}));
  CHECK(c3.term_count() == 1);
  CHECK(c3.terms().count(Permutation({3, 2, 1})) == 1);

  CHECK_THROWS_AS(plactic_class_vector(tab({{2, 1}})), std::invalid_argument);
}

TEST_CASE("insertion tableau equality matches Knuth equivalence") {
  for (int n = 0; n <= 6; ++n) {
    std::map<Permutation, Tableau> p_of;
    for (const Permutation &p : symmetric_group(n))
      p_of.emplace(p, rs_insert(p).first);
    for (const Permutation &p : symmetric_group(n)) {
      const auto cls = knuth_class(p);
      for (const Permutation &q : cls)
        CHECK(p_of.at(q) == p_of.at(p));
      // the class is exactly the fiber of the insertion tableau
      size_t fiber = 0;
      for (const auto &[q, t] : p_of)
        if (t == p_of.at(p))
          ++fiber;
      CHECK(fiber == cls.size());
    }
  }
}

TEST_CASE("insertion is injective and sum of squares is n!") {
  for (int n = 0; n <= 6; ++n) {
    std::set<std::pair<Tableau, Tableau>> images;
    for (const Permutation &p : symmetric_group(n)) {
      auto [P, Q] = rs_insert(p);
      CHECK(P.shape() == Q.shape());
      CHECK(P.is_standard());
      CHECK(Q.is_standard());
      images.insert({P, Q});
    }
    CHECK(images.size() == factorial_u64(n)); // injective
    std::map<Partition, uint64_t> counts;
    for (const Tableau &t : standard_tableaux(n))
      ++counts[t.shape()];
    uint64_t sum_sq = 0;
    for (const auto &[shape, f] : counts)
      sum_sq += f * f;
    CHECK(sum_sq == factorial_u64(n));
  }
}

TEST_CASE("tab dimension against the involution recurrence") {
  const std::vector<uint64_t> expected{1, 1, 2, 4, 10, 26, 76};
  for (int n = 0; n <= 6; ++n) {
    CHECK(tab_dimension(n) == expected[static_cast<size_t>(n)]);
    CHECK(tab_dimension(n) == involutions(n));
  }
  CHECK(tab_dimension(7) == involutions(7));
}

TEST_CASE("knuth submodule dimensions") {
  for (int n = 0; n <= 5; ++n) {
    RowSpace k = knuth_submodule(n);
    CHECK(k.rank_certified().rank == factorial_u64(n) - tab_dimension(n));
    CHECK(k.row_count() == factorial_u64(n) - tab_dimension(n));
  }
}

TEST_CASE("ideal, coideal and shuffle-span checks at small degree") {
  for (int n = 3; n <= 5; ++n) {
    PrReport r = verify_pr_theorems(n);
    CHECK(r.ok());
    CHECK(r.product_checks > 0);
    CHECK(r.coproduct_checks > 0);
    CHECK(r.shuffle_checks > 0);
    if (!r.ok())
      for (const auto &f : r.failures)
        MESSAGE(f);
  }
}
