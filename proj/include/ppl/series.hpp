#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ppl/linalg.hpp"
#include "ppl/numeric.hpp"

namespace ppl {

enum class SeriesKind { egf, ogf };

// Truncated power series with exact rational coefficients. EGF coefficients
// are stored as a_n with f = sum a_n x^n / n!.
class Series {
public:
  Series(SeriesKind kind, int order);

  SeriesKind kind() const { return kind_; }
  int order() const { return order_; }
  const Rat &coeff(int n) const;
  void set_coeff(int n, const Rat &value);

  Series operator+(const Series &other) const;
  Series operator-(const Series &other) const;
  Series operator*(const Series &other) const;

  Series derivative() const; // order drops by one
  Series integral() const;   // constant term zero, same order
  Series exponential() const; // requires zero constant term

  bool is_zero() const;

private:
  SeriesKind kind_;
  int order_;
  std::vector<Rat> coeff_;
};

// Boustrophedon (Seidel-Entringer-Arnold) triangle; returns E_0..E_N.
std::vector<Int> snake_oracle(int N);

// Direct count of down-up permutations in S_n.
Int snake_brute_force(int n);

// Partition sum for E_{n+1}/n!: over all odd-part partitions of n,
// (-1)^((n-k)/2) k! / (prod parts! * prod multiplicities!).
Rat formula_BE(int n);

struct SeriesCheck {
  std::string name;
  bool ok = false;
  std::string detail;
};

// 2y' = y^2 + 1 for the snake EGF, coefficientwise to order N-1.
SeriesCheck verify_andre_ode(int N);
// sum E_{n+1} x^n/n! = exp(sum_{n>=1} E_{n-1} x^n/n!) to order N.
SeriesCheck verify_exp_identity(int N);
// 1/(1-x) = exp(sum x^k/k) to order N.
SeriesCheck factorial_series_check(int N);
// exp(x + x^2/2) coefficients equal involution counts; compared against the
// recurrence t(n) = t(n-1) + (n-1) t(n-2) for n <= N and against Knuth-class
// counts for n <= min(N, tableau_degree_cap).
SeriesCheck syt_series_check(int N, int tableau_degree_cap = 7);

// prod_{n>=1} (1 - t^n)^(-E_{n-1} C(D,n)), truncated at order N.
Series hilbert_series(int D, int N);

class MultiSeries {
public:
  MultiSeries(int vars, int order);
  static MultiSeries one(int vars, int order);

  int vars() const { return vars_; }
  int order() const { return order_; }
  const std::map<std::vector<int>, Rat> &terms() const { return terms_; }
  Rat coeff(const std::vector<int> &exponents) const;
  void add(const std::vector<int> &exponents, const Rat &c);

  MultiSeries operator*(const MultiSeries &other) const;
  Series specialize_single_variable() const; // x_i -> t, OGF

private:
  int vars_;
  int order_;
  std::map<std::vector<int>, Rat> terms_;
};

// prod_{n=1}^{D} prod_{i_1<...<i_n} (1 - x_{i_1}...x_{i_n})^(-E_{n-1}),
// truncated at total degree N.
MultiSeries character_expand(int D, int N);

struct QuotientDims {
  int letters = 0;
  int max_degree = 0;
  bool multigraded = false;
  std::vector<uint64_t> dims;            // indexed by total degree
  std::vector<bool> exact;               // all blocks of the degree exact
  std::map<std::vector<int>, uint64_t> dims_by_content;
};

// Graded dimensions of the cubic quotient of the free algebra on D letters:
// relation rows are embedded at every offset, ranks are computed per
// letter-content block (the relations are content-homogeneous).
QuotientDims
pseudoplactic_bruteforce_dims(int D, int N, bool multigraded,
                              const LinalgConfig &cfg = default_linalg_config());

// Same pipeline with the deformed relations at a fixed rational q.
QuotientDims
pseudoplactic_q_dims(int D, int N, const Rat &q, bool multigraded,
                     const LinalgConfig &cfg = default_linalg_config());

} // namespace ppl
