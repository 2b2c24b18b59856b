#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ppl/linalg.hpp"

using namespace ppl;

namespace {

// Independent oracle: dense Gaussian elimination over Q.
uint64_t dense_rational_rank(uint64_t ambient,
                             const std::vector<SparseVector> &rows) {
  std::vector<std::vector<Rat>> m;
  for (const auto &r : rows) {
    std::vector<Rat> dense(ambient, Rat(0));
    for (const auto &[c, v] : r.entries)
      dense[c] = Rat(v);
    m.push_back(std::move(dense));
  }
  uint64_t rank = 0;
  size_t row = 0;
  for (uint64_t col = 0; col < ambient && row < m.size(); ++col) {
    size_t pivot = row;
    while (pivot < m.size() && m[pivot][col] == 0)
      ++pivot;
    if (pivot == m.size())
      continue;
    std::swap(m[row], m[pivot]);
    for (size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][col] == 0)
        continue;
      const Rat f = m[i][col] / m[row][col];
      for (uint64_t j = col; j < ambient; ++j)
        m[i][j] -= f * m[row][j];
    }
    ++row;
    ++rank;
  }
  return rank;
}

SparseVector random_vector(std::mt19937_64 &rng, uint64_t ambient,
                           int max_entries) {
  std::vector<std::pair<uint32_t, int64_t>> entries;
  const int k = static_cast<int>(rng() % static_cast<uint64_t>(max_entries + 1));
  for (int i = 0; i < k; ++i)
    entries.emplace_back(static_cast<uint32_t>(rng() % ambient),
                         static_cast<int64_t>(rng() % 5) - 2);
  return SparseVector::from_entries(ambient, std::move(entries));
}

} // namespace

TEST_CASE("sparse vector merges duplicates and drops zeros") {
  SparseVector v = SparseVector::from_entries(5, {{3, 2}, {1, 1}, {3, -2}});
  CHECK(v.entries == decltype(v.entries){{1, 1}});
  CHECK(SparseVector::from_entries(4, {}).is_zero());
  CHECK_THROWS_AS(SparseVector::from_entries(2, {{2, 1}}),
                  std::invalid_argument);
}

TEST_CASE("prime field arithmetic") {
  PrimeField f(2147483647ull);
  CHECK(f.mul(2147483646ull, 2147483646ull) == 1); // (-1)^2
  CHECK(f.add(2147483646ull, 1) == 0);
  CHECK(f.from_int64(-3) == 2147483644ull);
  for (uint64_t a : {1ull, 2ull, 12345ull, 2147483646ull})
    CHECK(f.mul(a, f.inv(a)) == 1);
  CHECK_THROWS_AS(PrimeField(2147483646ull), std::invalid_argument); // even
  CHECK_THROWS_AS(PrimeField(3), std::invalid_argument);
}

TEST_CASE("rank_mod on elementary dependencies") {
  RowSpace space(3, {SparseVector::unit(3, 0), SparseVector::unit(3, 1),
                     SparseVector::from_entries(3, {{0, 1}, {1, 1}})});
  CHECK(space.rank_mod(2147483647ull) == 2);
  CHECK(RowSpace(4).rank_mod(2147483647ull) == 0);
}

TEST_CASE("rank_mod rejects composite moduli") {
  RowSpace space(2, {SparseVector::unit(2, 0)});
  CHECK_THROWS_AS(space.rank_mod(1000000ull), std::invalid_argument);
}

TEST_CASE("bareiss rank on identity and zero rows") {
  std::vector<SparseVector> rows;
  for (uint32_t i = 0; i < 5; ++i)
    rows.push_back(SparseVector::unit(5, i));
  rows.push_back(SparseVector(5)); // zero row
  CHECK(bareiss_rank(5, rows) == 5);
  CHECK(bareiss_rank(5, {}) == 0);
}

TEST_CASE("bareiss and modular ranks agree with the dense oracle") {
  std::mt19937_64 rng(987654321);
  const LinalgConfig cfg;
  for (int trial = 0; trial < 60; ++trial) {
    const uint64_t ambient = 1 + rng() % 12;
    const size_t nrows = rng() % 14;
    std::vector<SparseVector> rows;
    for (size_t i = 0; i < nrows; ++i)
      rows.push_back(random_vector(rng, ambient, 6));
    const uint64_t expected = dense_rational_rank(ambient, rows);
    CHECK(bareiss_rank(ambient, rows) == expected);
    RowSpace space(ambient, rows);
    for (uint64_t p : cfg.primes)
      CHECK(space.rank_mod(p) <= expected);
    CHECK(space.rank_certified(cfg).rank == expected);
  }
}

TEST_CASE("rank is invariant under row shuffles and scaling") {
  std::mt19937_64 rng(22222);
  for (int trial = 0; trial < 20; ++trial) {
    const uint64_t ambient = 2 + rng() % 10;
    std::vector<SparseVector> rows;
    const size_t nrows = 1 + rng() % 10;
    for (size_t i = 0; i < nrows; ++i)
      rows.push_back(random_vector(rng, ambient, 5));
    RowSpace base(ambient, rows);
    const uint64_t r = base.rank_certified().rank;

    std::shuffle(rows.begin(), rows.end(), rng);
    for (auto &row : rows) {
      const int64_t scale = 1 + static_cast<int64_t>(rng() % 3);
      for (auto &[c, v] : row.entries)
        v *= scale;
    }
    RowSpace shuffled(ambient, rows);
    CHECK(shuffled.rank_certified().rank == r);
  }
}

TEST_CASE("membership tri-state") {
  const LinalgConfig cfg;
  std::vector<SparseVector> rows{SparseVector::unit(4, 0),
                                 SparseVector::unit(4, 1)};
  RowSpace space(4, rows);
  CHECK(space.member(rows[0], cfg) == Membership::exact_dependent);
  CHECK(space.member(SparseVector::unit(4, 3), cfg) ==
        Membership::certainly_independent);
  CHECK(space.member(SparseVector(4), cfg) == Membership::exact_dependent);

  // above the exact threshold the verdict stays modular
  LinalgConfig coarse = cfg;
  coarse.exact_threshold = 0;
  CHECK(space.member(rows[0], coarse) == Membership::dependent_mod_all_primes);
  CHECK(space.member(SparseVector::unit(4, 2), coarse) ==
        Membership::certainly_independent);
}

TEST_CASE("sum rank and intersection dimension") {
  RowSpace u(3, {SparseVector::unit(3, 0)});
  RowSpace v(3, {SparseVector::from_entries(3, {{0, 1}, {1, 1}})});
  CHECK(sum_rank(u, v) == 2);
  CHECK(intersection_dim(u, v) == 0);
  CHECK(intersection_dim(u, u) == u.rank_certified().rank);
  CHECK(intersection_dim(v, u) == intersection_dim(u, v));
  RowSpace w(2, {SparseVector::unit(2, 0)});
  CHECK_THROWS_AS(sum_rank(u, w), std::invalid_argument);
}

TEST_CASE("intersection basis on coordinate spaces") {
  RowSpace u(4, {SparseVector::unit(4, 0), SparseVector::unit(4, 1)});
  RowSpace v(4, {SparseVector::unit(4, 1), SparseVector::unit(4, 2)});
  RowSpace w = intersection_basis(u, v);
  REQUIRE(w.row_count() == 1);
  CHECK(w.rows()[0] == SparseVector::unit(4, 1));

  RowSpace disjoint(4, {SparseVector::unit(4, 3)});
  CHECK(intersection_basis(u, disjoint).row_count() == 0);
}

TEST_CASE("intersection basis matches the rank identity on random spaces") {
  std::mt19937_64 rng(31415);
  for (int trial = 0; trial < 30; ++trial) {
    const uint64_t ambient = 2 + rng() % 8;
    std::vector<SparseVector> ur, vr;
    for (size_t i = 0; i < 1 + rng() % 5; ++i)
      ur.push_back(random_vector(rng, ambient, 4));
    for (size_t i = 0; i < 1 + rng() % 5; ++i)
      vr.push_back(random_vector(rng, ambient, 4));
    RowSpace u(ambient, ur), v(ambient, vr);
    const uint64_t dim = intersection_dim(u, v);
    RowSpace basis = intersection_basis(u, v);
    CHECK(basis.row_count() == dim);
    if (basis.row_count() > 0)
      CHECK(basis.rank_certified().rank == dim);
    // every basis row belongs to both spans
    for (const auto &row : basis.rows()) {
      CHECK(u.member(row) != Membership::certainly_independent);
      CHECK(v.member(row) != Membership::certainly_independent);
    }
  }
}

TEST_CASE("certified rank switches certificates at the threshold") {
  std::vector<SparseVector> rows{SparseVector::unit(6, 2),
                                 SparseVector::unit(6, 4)};
  RowSpace space(6, rows);
  LinalgConfig cfg;
  cfg.exact_threshold = 1000;
  CHECK(space.rank_certified(cfg).certificate == RankCertificate::exact);
  cfg.exact_threshold = 0;
  RowSpace fresh(6, rows);
  RankResult r = fresh.rank_certified(cfg);
  CHECK(r.certificate == RankCertificate::multi_prime);
  CHECK(r.rank == 2);
  CHECK(r.primes_agree);
  CHECK(r.per_prime.size() == cfg.primes.size());
}
