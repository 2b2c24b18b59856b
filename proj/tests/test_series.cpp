#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ppl/series.hpp"

using namespace ppl;

TEST_CASE("snake oracle and brute force") {
  const std::vector<Int> e = snake_oracle(10);
  const std::vector<long> expected{1, 1, 1, 2, 5, 16, 61, 272, 1385, 7936,
                                   50521};
  REQUIRE(e.size() == expected.size());
  for (size_t i = 0; i < e.size(); ++i)
    CHECK(e[i] == expected[i]);
  for (int n = 0; n <= 9; ++n)
    CHECK(snake_brute_force(n) == e[static_cast<size_t>(n)]);
}

TEST_CASE("snake partition formula") {
  CHECK(formula_BE(0) == 1);
  CHECK(formula_BE(3) == Rat(5, 6));
  CHECK(formula_BE(4) == Rat(2, 3));
  const std::vector<Int> e = snake_oracle(21);
  for (int n = 0; n <= 20; ++n)
    CHECK(formula_BE(n) * Rat(factorial(n)) ==
          Rat(e[static_cast<size_t>(n + 1)]));
}

TEST_CASE("exponential of x is all ones") {
  Series f(SeriesKind::egf, 10);
  f.set_coeff(1, 1);
  const Series g = f.exponential();
  for (int n = 0; n <= 10; ++n)
    CHECK(g.coeff(n) == 1);
}

TEST_CASE("derivative of the sine series is the cosine series") {
  Series sine(SeriesKind::egf, 12);
  Series cosine(SeriesKind::egf, 12);
  for (int n = 0; n <= 12; ++n) {
    if (n % 2 == 1)
      sine.set_coeff(n, (n / 2) % 2 == 0 ? 1 : -1);
    else
      cosine.set_coeff(n, (n / 2) % 2 == 0 ? 1 : -1);
  }
  const Series d = sine.derivative();
  for (int n = 0; n <= 11; ++n)
    CHECK(d.coeff(n) == cosine.coeff(n));
  // integral undoes the derivative up to the constant term
  const Series back = d.integral();
  for (int n = 1; n <= 11; ++n)
    CHECK(back.coeff(n) == sine.coeff(n));
}

TEST_CASE("exp(x + x^2/2) counts involutions") {
  Series f(SeriesKind::egf, 8);
  f.set_coeff(1, 1);
  f.set_coeff(2, 1);
  const Series g = f.exponential();
  const std::vector<long> involutions{1, 1, 2, 4, 10, 26, 76, 232, 764};
  for (int n = 0; n <= 8; ++n)
    CHECK(g.coeff(n) == involutions[static_cast<size_t>(n)]);
}

TEST_CASE("exponential rejects nonzero constant term") {
  Series f(SeriesKind::egf, 3);
  f.set_coeff(0, 1);
  CHECK_THROWS_AS(f.exponential(), std::invalid_argument);
}

TEST_CASE("series verifications at order 16") {
  CHECK(verify_andre_ode(16).ok);
  CHECK(verify_exp_identity(16).ok);
  CHECK(factorial_series_check(16).ok);
  CHECK(syt_series_check(16).ok);
}

TEST_CASE("ogf exponential matches the geometric series") {
  // 1/(1-x) = exp(sum x^k/k), the degenerate low orders included
  for (int order : {1, 3, 12})
    CHECK(factorial_series_check(order).ok);
}

TEST_CASE("hilbert series examples") {
  const Series h2 = hilbert_series(2, 8);
  const std::vector<long> expected{1, 2, 4, 6, 9, 12, 16, 20, 25};
  for (int n = 0; n <= 8; ++n)
    CHECK(h2.coeff(n) == expected[static_cast<size_t>(n)]);

  const Series h1 = hilbert_series(1, 5);
  for (int n = 0; n <= 5; ++n)
    CHECK(h1.coeff(n) == 1);

  const Series h3 = hilbert_series(3, 3);
  CHECK(h3.coeff(3) == 20); // (1-t)^-3 (1-t^2)^-3 (1-t^3)^-1
}

TEST_CASE("character expansion examples") {
  const MultiSeries ch = character_expand(2, 4);
  CHECK(ch.coeff({2, 1}) == 2);
  CHECK(ch.coeff({1, 0}) == 1);
  CHECK(ch.coeff({0, 0}) == 1);
  // specialization x_i -> t reproduces the Hilbert series
  const Series spec = ch.specialize_single_variable();
  const Series h = hilbert_series(2, 4);
  for (int n = 0; n <= 4; ++n)
    CHECK(spec.coeff(n) == h.coeff(n));
}

TEST_CASE("brute-force quotient dimensions for two letters") {
  const QuotientDims dims = pseudoplactic_bruteforce_dims(2, 6, true);
  const std::vector<uint64_t> expected{1, 2, 4, 6, 9, 12, 16};
  REQUIRE(dims.dims.size() == expected.size());
  for (size_t i = 0; i < expected.size(); ++i) {
    CHECK(dims.dims[i] == expected[i]);
    CHECK(dims.exact[i]);
  }
  CHECK(dims.dims_by_content.at({2, 1}) == 2);
  CHECK(dims.dims_by_content.at({0, 0}) == 1);
  // block dimensions refine the degree dimensions
  std::map<int, uint64_t> by_degree;
  for (const auto &[content, d] : dims.dims_by_content)
    by_degree[content[0] + content[1]] += d;
  for (int n = 0; n <= 6; ++n)
    CHECK(by_degree[n] == expected[static_cast<size_t>(n)]);
}

TEST_CASE("q specialization") {
  const QuotientDims q1 = pseudoplactic_q_dims(2, 5, Rat(1), false);
  const QuotientDims base = pseudoplactic_bruteforce_dims(2, 5, false);
  CHECK(q1.dims == base.dims);
  const QuotientDims q2 = pseudoplactic_q_dims(2, 5, Rat(2), false);
  CHECK(q2.dims[3] == 6); // deformed relation rows keep rank 2 at q = 2
  CHECK(q2.dims[4] == base.dims[4]);
  CHECK_THROWS_AS(pseudoplactic_q_dims(2, 4, Rat(0), false),
                  std::invalid_argument);
}

TEST_CASE("capacity guards") {
  CHECK_THROWS_AS(snake_oracle(61), std::invalid_argument);
  CHECK_THROWS_AS(pseudoplactic_bruteforce_dims(10, 10, false),
                  std::length_error);
}
