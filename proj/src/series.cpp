#include "ppl/series.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "ppl/perm.hpp"
#include "ppl/plactic.hpp"

namespace ppl {

Series::Series(SeriesKind kind, int order) : kind_(kind), order_(order) {
  if (order < 0)
    throw std::invalid_argument("Series: negative order");
  coeff_.resize(static_cast<size_t>(order) + 1, Rat(0));
}

const Rat &Series::coeff(int n) const {
  if (n < 0 || n > order_)
    throw std::out_of_range("Series::coeff");
  return coeff_[static_cast<size_t>(n)];
}

void Series::set_coeff(int n, const Rat &value) {
  if (n < 0 || n > order_)
    throw std::out_of_range("Series::set_coeff");
  coeff_[static_cast<size_t>(n)] = value;
}

namespace {

void check_kind(const Series &a, const Series &b) {
  if (a.kind() != b.kind())
    throw std::invalid_argument("Series: mixed EGF/OGF arithmetic");
}

} // namespace

Series Series::operator+(const Series &other) const {
  check_kind(*this, other);
  Series out(kind_, std::min(order_, other.order_));
  for (int n = 0; n <= out.order(); ++n)
    out.set_coeff(n, coeff(n) + other.coeff(n));
  return out;
}

Series Series::operator-(const Series &other) const {
  check_kind(*this, other);
  Series out(kind_, std::min(order_, other.order_));
  for (int n = 0; n <= out.order(); ++n)
    out.set_coeff(n, coeff(n) - other.coeff(n));
  return out;
}

Series Series::operator*(const Series &other) const {
  check_kind(*this, other);
  Series out(kind_, std::min(order_, other.order_));
  for (int n = 0; n <= out.order(); ++n) {
    Rat c = 0;
    for (int k = 0; k <= n; ++k) {
      Rat term = coeff(k) * other.coeff(n - k);
      if (kind_ == SeriesKind::egf)
        term *= Rat(binomial(n, k));
      c += term;
    }
    out.set_coeff(n, c);
  }
  return out;
}

Series Series::derivative() const {
  if (order_ == 0)
    throw std::invalid_argument("Series::derivative: order 0");
  Series out(kind_, order_ - 1);
  for (int n = 0; n < order_; ++n) {
    Rat c = coeff(n + 1);
    if (kind_ == SeriesKind::ogf)
      c *= (n + 1);
    out.set_coeff(n, c);
  }
  return out;
}

Series Series::integral() const {
  Series out(kind_, order_);
  for (int n = 1; n <= order_; ++n) {
    Rat c = coeff(n - 1);
    if (kind_ == SeriesKind::ogf)
      c /= n;
    out.set_coeff(n, c);
  }
  return out;
}

Series Series::exponential() const {
  if (coeff(0) != 0)
    throw std::invalid_argument("Series::exponential: nonzero constant term");
  Series out(kind_, order_);
  out.set_coeff(0, 1);
  // g' = f' g, expanded coefficientwise
  for (int n = 0; n < order_; ++n) {
    Rat c = 0;
    for (int k = 0; k <= n; ++k) {
      Rat fprime = coeff(k + 1);
      if (kind_ == SeriesKind::ogf)
        fprime *= (k + 1);
      Rat term = fprime * out.coeff(n - k);
      if (kind_ == SeriesKind::egf)
        term *= Rat(binomial(n, k));
      c += term;
    }
    if (kind_ == SeriesKind::ogf)
      c /= (n + 1);
    out.set_coeff(n + 1, c);
  }
  return out;
}

bool Series::is_zero() const {
  return std::all_of(coeff_.begin(), coeff_.end(),
                     [](const Rat &c) { return c == 0; });
}

std::vector<Int> snake_oracle(int N) {
  if (N < 0 || N > 60)
    throw std::invalid_argument("snake_oracle: N out of [0,60]");
  std::vector<Int> result;
  result.reserve(static_cast<size_t>(N) + 1);
  std::vector<Int> row{1};
  result.push_back(1);
  for (int n = 1; n <= N; ++n) {
    std::vector<Int> next(static_cast<size_t>(n) + 1);
    next[0] = 0;
    for (int k = 1; k <= n; ++k)
      next[static_cast<size_t>(k)] =
          next[static_cast<size_t>(k - 1)] + row[static_cast<size_t>(n - k)];
    result.push_back(next[static_cast<size_t>(n)]);
    row = std::move(next);
  }
  return result;
}

Int snake_brute_force(int n) {
  if (n < 0 || n > 12)
    throw std::invalid_argument("snake_brute_force: n out of [0,12]");
  Word w(static_cast<size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  Int count = 0;
  do {
    bool ok = true;
    for (int i = 0; ok && i + 1 < n; ++i) {
      if (i % 2 == 0)
        ok = w[static_cast<size_t>(i)] > w[static_cast<size_t>(i + 1)];
      else
        ok = w[static_cast<size_t>(i)] < w[static_cast<size_t>(i + 1)];
    }
    if (ok)
      ++count;
  } while (std::next_permutation(w.begin(), w.end()));
  return count;
}

Rat formula_BE(int n) {
  if (n < 0)
    throw std::invalid_argument("formula_BE: negative n");
  if (n == 0)
    return 1; // empty partition sum
  Rat total = 0;
  for (const Partition &lam : odd_part_partitions(n)) {
    const int k = lam.count();
    Rat term((n - k) / 2 % 2 == 0 ? 1 : -1);
    term *= Rat(factorial(k));
    for (int part : lam.parts)
      term /= Rat(factorial(part));
    for (int part = 1; part <= n; part += 2) {
      const int m = lam.multiplicity(part);
      if (m > 1)
        term /= Rat(factorial(m));
    }
    total += term;
  }
  return total;
}

namespace {

Series snake_egf(int order) {
  const std::vector<Int> e = snake_oracle(order);
  Series y(SeriesKind::egf, order);
  for (int n = 0; n <= order; ++n)
    y.set_coeff(n, Rat(e[static_cast<size_t>(n)]));
  return y;
}

std::string first_mismatch(const Series &a, const Series &b) {
  for (int n = 0; n <= std::min(a.order(), b.order()); ++n)
    if (a.coeff(n) != b.coeff(n))
      return "order " + std::to_string(n) + ": " + rat_to_string(a.coeff(n)) +
             " vs " + rat_to_string(b.coeff(n));
  return "";
}

} // namespace

SeriesCheck verify_andre_ode(int N) {
  if (N < 2)
    throw std::invalid_argument("verify_andre_ode: N >= 2 required");
  const Series y = snake_egf(N);
  Series two_yprime = y.derivative();
  for (int n = 0; n <= two_yprime.order(); ++n)
    two_yprime.set_coeff(n, two_yprime.coeff(n) * 2);
  Series rhs = y * y;
  rhs.set_coeff(0, rhs.coeff(0) + 1);
  const Series diff = two_yprime - rhs;
  SeriesCheck check{"andre_ode", diff.is_zero(), ""};
  if (!check.ok)
    check.detail = first_mismatch(two_yprime, rhs);
  return check;
}

SeriesCheck verify_exp_identity(int N) {
  if (N < 1)
    throw std::invalid_argument("verify_exp_identity: N >= 1 required");
  const std::vector<Int> e = snake_oracle(N + 1);
  Series lhs(SeriesKind::egf, N);
  for (int n = 0; n <= N; ++n)
    lhs.set_coeff(n, Rat(e[static_cast<size_t>(n + 1)]));
  Series inner(SeriesKind::egf, N);
  for (int n = 1; n <= N; ++n)
    inner.set_coeff(n, Rat(e[static_cast<size_t>(n - 1)]));
  const Series rhs = inner.exponential();
  SeriesCheck check{"exp_identity", (lhs - rhs).is_zero(), ""};
  if (!check.ok)
    check.detail = first_mismatch(lhs, rhs);
  return check;
}

SeriesCheck factorial_series_check(int N) {
  Series inner(SeriesKind::ogf, N);
  for (int k = 1; k <= N; ++k)
    inner.set_coeff(k, Rat(1, static_cast<unsigned long>(k)));
  const Series rhs = inner.exponential();
  Series geometric(SeriesKind::ogf, N);
  for (int n = 0; n <= N; ++n)
    geometric.set_coeff(n, 1);
  SeriesCheck check{"factorial_series", (geometric - rhs).is_zero(), ""};
  if (!check.ok)
    check.detail = first_mismatch(geometric, rhs);
  return check;
}

SeriesCheck syt_series_check(int N, int tableau_degree_cap) {
  Series inner(SeriesKind::egf, N);
  if (N >= 1)
    inner.set_coeff(1, 1);
  if (N >= 2)
    inner.set_coeff(2, 1); // x^2/2 = 1 * x^2/2!
  const Series g = inner.exponential();
  SeriesCheck check{"syt_series", true, ""};
  // involution recurrence t(n) = t(n-1) + (n-1) t(n-2)
  Int prev2 = 1, prev1 = 1;
  for (int n = 0; n <= N; ++n) {
    Int expected;
    if (n <= 1)
      expected = 1;
    else {
      expected = prev1 + (n - 1) * prev2;
      prev2 = prev1;
      prev1 = expected;
    }
    if (g.coeff(n) != Rat(expected)) {
      check.ok = false;
      check.detail = "recurrence mismatch at order " + std::to_string(n);
      return check;
    }
  }
  for (int n = 0; n <= std::min(N, tableau_degree_cap); ++n) {
    if (g.coeff(n) != Rat(Int(tab_dimension(n)))) {
      check.ok = false;
      check.detail = "Knuth class count mismatch at degree " + std::to_string(n);
      return check;
    }
  }
  return check;
}

namespace {

// Multiply into `acc` the factor (1 - t^step)^(-e), truncated.
void multiply_geometric_power(Series &acc, int step, const Int &e) {
  if (e == 0)
    return;
  const int order = acc.order();
  Series factor(SeriesKind::ogf, order);
  Rat binom = 1; // C(e-1+j, j), built incrementally
  factor.set_coeff(0, 1);
  for (int j = 1; j * step <= order; ++j) {
    binom *= Rat(e + j - 1);
    binom /= j;
    factor.set_coeff(j * step, binom);
  }
  acc = acc * factor;
}

} // namespace

Series hilbert_series(int D, int N) {
  if (D < 1)
    throw std::invalid_argument("hilbert_series: D >= 1 required");
  const std::vector<Int> e = snake_oracle(std::max(0, D - 1));
  Series acc(SeriesKind::ogf, N);
  acc.set_coeff(0, 1);
  for (int n = 1; n <= std::min(D, N); ++n)
    multiply_geometric_power(acc, n,
                             e[static_cast<size_t>(n - 1)] * binomial(D, n));
  return acc;
}

MultiSeries::MultiSeries(int vars, int order) : vars_(vars), order_(order) {
  if (vars < 1 || order < 0)
    throw std::invalid_argument("MultiSeries: bad dimensions");
}

MultiSeries MultiSeries::one(int vars, int order) {
  MultiSeries s(vars, order);
  s.terms_[std::vector<int>(static_cast<size_t>(vars), 0)] = 1;
  return s;
}

Rat MultiSeries::coeff(const std::vector<int> &exponents) const {
  auto it = terms_.find(exponents);
  return it == terms_.end() ? Rat(0) : it->second;
}

void MultiSeries::add(const std::vector<int> &exponents, const Rat &c) {
  if (static_cast<int>(exponents.size()) != vars_)
    throw std::invalid_argument("MultiSeries::add: arity mismatch");
  if (c == 0)
    return;
  int total = std::accumulate(exponents.begin(), exponents.end(), 0);
  if (total > order_)
    return;
  Rat &slot = terms_[exponents];
  slot += c;
  if (slot == 0)
    terms_.erase(exponents);
}

MultiSeries MultiSeries::operator*(const MultiSeries &other) const {
  if (vars_ != other.vars_)
    throw std::invalid_argument("MultiSeries: arity mismatch");
  MultiSeries out(vars_, std::min(order_, other.order_));
  for (const auto &[ea, ca] : terms_) {
    const int da = std::accumulate(ea.begin(), ea.end(), 0);
    for (const auto &[eb, cb] : other.terms_) {
      const int db = std::accumulate(eb.begin(), eb.end(), 0);
      if (da + db > out.order_)
        continue;
      std::vector<int> e(ea);
      for (size_t i = 0; i < e.size(); ++i)
        e[i] += eb[i];
      out.add(e, ca * cb);
    }
  }
  return out;
}

Series MultiSeries::specialize_single_variable() const {
  Series out(SeriesKind::ogf, order_);
  for (const auto &[e, c] : terms_) {
    const int total = std::accumulate(e.begin(), e.end(), 0);
    out.set_coeff(total, out.coeff(total) + c);
  }
  return out;
}

MultiSeries character_expand(int D, int N) {
  if (D < 1 || D > 6)
    throw std::length_error("character_expand: letter capacity exceeded");
  const std::vector<Int> e = snake_oracle(std::max(0, D - 1));
  MultiSeries acc = MultiSeries::one(D, N);
  for (int n = 1; n <= std::min(D, N); ++n) {
    const Int &exponent = e[static_cast<size_t>(n - 1)];
    // all n-subsets of the D variables
    std::vector<int> idx(static_cast<size_t>(n));
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      MultiSeries factor(D, N);
      std::vector<int> mono(static_cast<size_t>(D), 0);
      for (int i : idx)
        mono[static_cast<size_t>(i)] = 1;
      Rat binom = 1;
      factor.add(std::vector<int>(static_cast<size_t>(D), 0), 1);
      for (int j = 1; j * n <= N; ++j) {
        binom *= Rat(exponent + j - 1);
        binom /= j;
        std::vector<int> exps(static_cast<size_t>(D), 0);
        for (int i : idx)
          exps[static_cast<size_t>(i)] = j;
        factor.add(exps, binom);
      }
      acc = acc * factor;
      int i = n - 1;
      while (i >= 0 && idx[static_cast<size_t>(i)] == D - (n - i))
        --i;
      if (i < 0)
        break;
      ++idx[static_cast<size_t>(i)];
      for (int j = i + 1; j < n; ++j)
        idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    }
  }
  return acc;
}

namespace {

struct FreeRelation {
  std::vector<std::pair<std::array<int, 3>, int64_t>> terms;
  std::vector<int> content; // letter multiplicities, size D
};

std::vector<int> letters_content(int D, std::initializer_list<int> letters) {
  std::vector<int> c(static_cast<size_t>(D), 0);
  for (int l : letters)
    ++c[static_cast<size_t>(l - 1)];
  return c;
}

// Cubic relations at q = num/den, cleared of denominators:
//   [[a,c],b]            -> acb - cab - bac + bca
//   [[a,b],a]_{q^2}      -> (den^2+num^2) aba - den^2 baa - num^2 aab
//   [b,[a,b]]_{q^2}      -> (den^2+num^2) bab - den^2 bba - num^2 abb
std::vector<FreeRelation> free_relations(int D, const Rat &q) {
  const Int num2 = q.get_num() * q.get_num();
  const Int den2 = q.get_den() * q.get_den();
  const int64_t n2 = to_int64(num2);
  const int64_t d2 = to_int64(den2);
  std::vector<FreeRelation> out;
  for (int a = 1; a <= D; ++a)
    for (int b = a + 1; b <= D; ++b)
      for (int c = b + 1; c <= D; ++c) {
        FreeRelation r;
        r.terms = {{{a, c, b}, 1}, {{c, a, b}, -1}, {{b, a, c}, -1},
                   {{b, c, a}, 1}};
        r.content = letters_content(D, {a, b, c});
        out.push_back(std::move(r));
      }
  for (int a = 1; a <= D; ++a)
    for (int b = a + 1; b <= D; ++b) {
      FreeRelation r1;
      r1.terms = {{{a, b, a}, d2 + n2}, {{b, a, a}, -d2}, {{a, a, b}, -n2}};
      r1.content = letters_content(D, {a, a, b});
      out.push_back(std::move(r1));
      FreeRelation r2;
      r2.terms = {{{b, a, b}, d2 + n2}, {{b, b, a}, -d2}, {{a, b, b}, -n2}};
      r2.content = letters_content(D, {a, b, b});
      out.push_back(std::move(r2));
    }
  return out;
}

// All words of length `len` over {1..D} with the given content, lex order.
std::vector<Word> words_with_content(const std::vector<int> &content) {
  Word sorted;
  for (size_t l = 0; l < content.size(); ++l)
    for (int k = 0; k < content[l]; ++k)
      sorted.push_back(static_cast<int>(l) + 1);
  std::vector<Word> out;
  if (sorted.empty()) {
    out.push_back({});
    return out;
  }
  do {
    out.push_back(sorted);
  } while (std::next_permutation(sorted.begin(), sorted.end()));
  return out;
}

bool content_fits(const std::vector<int> &sub, const std::vector<int> &sup) {
  for (size_t i = 0; i < sub.size(); ++i)
    if (sub[i] > sup[i])
      return false;
  return true;
}

void all_contents(int D, int n, std::vector<int> &acc, size_t pos,
                  std::vector<std::vector<int>> &out) {
  if (pos + 1 == static_cast<size_t>(D)) {
    acc[pos] = n;
    out.push_back(acc);
    return;
  }
  for (int k = n; k >= 0; --k) {
    acc[pos] = k;
    all_contents(D, n - k, acc, pos + 1, out);
  }
}

QuotientDims quotient_dims(int D, int N, const Rat &q, bool multigraded,
                           const LinalgConfig &cfg) {
  if (D < 1)
    throw std::invalid_argument("quotient dims: D >= 1 required");
  double capacity = 1;
  for (int i = 0; i < N; ++i)
    capacity *= D;
  if (capacity > 1e6)
    throw std::length_error("quotient dims: D^N capacity exceeded");
  const auto relations = free_relations(D, q);
  QuotientDims table;
  table.letters = D;
  table.max_degree = N;
  table.multigraded = multigraded;
  for (int n = 0; n <= N; ++n) {
    std::vector<std::vector<int>> contents;
    std::vector<int> acc(static_cast<size_t>(D), 0);
    all_contents(D, n, acc, 0, contents);
    uint64_t total = 0;
    bool all_exact = true;
    for (const auto &content : contents) {
      const std::vector<Word> words = words_with_content(content);
      uint64_t block_dim = words.size();
      if (n >= 3) {
        std::map<Word, uint32_t> index;
        for (uint32_t i = 0; i < words.size(); ++i)
          index.emplace(words[i], i);
        std::vector<SparseVector> rows;
        for (int offset = 0; offset + 3 <= n; ++offset) {
          const int tail_len = n - 3 - offset;
          for (const auto &rel : relations) {
            if (!content_fits(rel.content, content))
              continue;
            std::vector<int> rem(content);
            for (size_t i = 0; i < rem.size(); ++i)
              rem[i] -= rel.content[i];
            // split the remaining content between prefix and suffix
            std::vector<std::vector<int>> prefix_contents;
            std::vector<int> acc2(static_cast<size_t>(D), 0);
            all_contents(D, offset, acc2, 0, prefix_contents);
            for (const auto &pc : prefix_contents) {
              if (!content_fits(pc, rem))
                continue;
              std::vector<int> sc(rem);
              for (size_t i = 0; i < sc.size(); ++i)
                sc[i] -= pc[i];
              int sc_total = std::accumulate(sc.begin(), sc.end(), 0);
              if (sc_total != tail_len)
                continue;
              for (const Word &w1 : words_with_content(pc)) {
                for (const Word &w2 : words_with_content(sc)) {
                  std::vector<std::pair<uint32_t, int64_t>> entries;
                  for (const auto &[mid, coeff] : rel.terms) {
                    Word w = w1;
                    w.insert(w.end(), mid.begin(), mid.end());
                    w.insert(w.end(), w2.begin(), w2.end());
                    entries.emplace_back(index.at(w), coeff);
                  }
                  rows.push_back(SparseVector::from_entries(
                      words.size(), std::move(entries)));
                }
              }
            }
          }
        }
        RowSpace block(words.size(), std::move(rows));
        RankResult r = block.rank_certified(cfg);
        block_dim -= r.rank;
        if (r.certificate != RankCertificate::exact)
          all_exact = false;
      }
      total += block_dim;
      if (multigraded)
        table.dims_by_content[content] = block_dim;
    }
    table.dims.push_back(total);
    table.exact.push_back(all_exact);
  }
  return table;
}

} // namespace

QuotientDims pseudoplactic_bruteforce_dims(int D, int N, bool multigraded,
                                           const LinalgConfig &cfg) {
  return quotient_dims(D, N, Rat(1), multigraded, cfg);
}

QuotientDims pseudoplactic_q_dims(int D, int N, const Rat &q, bool multigraded,
                                  const LinalgConfig &cfg) {
  if (q == 0)
    throw std::invalid_argument("pseudoplactic_q_dims: q must be nonzero");
  return quotient_dims(D, N, q, multigraded, cfg);
}

} // namespace ppl
