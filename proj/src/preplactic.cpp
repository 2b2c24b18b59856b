#include "ppl/preplactic.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace ppl {

LinComb generator_vector(const EmbeddedGenerator &g) {
  const auto [a, b, c] = g.triple;
  if (!(a < b && b < c))
    throw std::invalid_argument("generator_vector: triple must be increasing");
  if (g.offset < 0 || g.offset > g.degree - 3)
    throw std::invalid_argument("generator_vector: offset out of range");
  if (static_cast<int>(g.filler.size()) != g.degree - 3)
    throw std::invalid_argument("generator_vector: filler size mismatch");
  LinComb out(g.degree);
  const std::array<std::array<int, 3>, 4> patterns = {{
      {b, a, c}, {b, c, a}, {a, c, b}, {c, a, b}}};
  const std::array<int, 4> signs = {1, -1, -1, 1};
  for (int t = 0; t < 4; ++t) {
    Word w;
    w.reserve(static_cast<size_t>(g.degree));
    w.insert(w.end(), g.filler.begin(), g.filler.begin() + g.offset);
    w.insert(w.end(), patterns[static_cast<size_t>(t)].begin(),
             patterns[static_cast<size_t>(t)].end());
    w.insert(w.end(), g.filler.begin() + g.offset, g.filler.end());
    out.add(Permutation(std::move(w)), signs[static_cast<size_t>(t)]);
  }
  return out;
}

std::vector<EmbeddedGenerator> offset_generators(int n, int offset) {
  std::vector<EmbeddedGenerator> out;
  if (n < 3 || offset < 0 || offset > n - 3)
    return out;
  for (int c = 3; c <= n; ++c) {
    for (int b = 2; b < c; ++b) {
      for (int a = 1; a < b; ++a) {
        Word rest;
        rest.reserve(static_cast<size_t>(n - 3));
        for (int x = 1; x <= n; ++x)
          if (x != a && x != b && x != c)
            rest.push_back(x);
        do {
          EmbeddedGenerator g;
          g.degree = n;
          g.offset = offset;
          g.triple = {a, b, c};
          g.filler = rest;
          out.push_back(std::move(g));
        } while (std::next_permutation(rest.begin(), rest.end()));
      }
    }
  }
  return out;
}

std::vector<EmbeddedGenerator> ideal_generators(int n) {
  std::vector<EmbeddedGenerator> out;
  for (int i = 0; i + 3 <= n; ++i) {
    auto part = offset_generators(n, i);
    out.insert(out.end(), std::make_move_iterator(part.begin()),
               std::make_move_iterator(part.end()));
  }
  return out;
}

RowSpace elementary_subspace(int n, int offset) {
  const uint64_t ambient = factorial_u64(n);
  std::vector<SparseVector> rows;
  for (const EmbeddedGenerator &g : offset_generators(n, offset))
    rows.push_back(to_sparse(generator_vector(g)));
  return RowSpace(ambient, std::move(rows));
}

const RowSpace &ideal_space(int n) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<RowSpace>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end())
    return *it->second;
  const uint64_t ambient = factorial_u64(n);
  std::vector<SparseVector> rows;
  for (const EmbeddedGenerator &g : ideal_generators(n))
    rows.push_back(to_sparse(generator_vector(g)));
  auto space = std::make_unique<RowSpace>(ambient, std::move(rows));
  return *cache.emplace(n, std::move(space)).first->second;
}

DimResult ideal_dim(int n, const LinalgConfig &cfg) {
  if (n < 0 || n > 9)
    throw std::length_error("ideal_dim: degree capacity exceeded");
  if (n < 3)
    return {0, RankCertificate::exact, true};
  RankResult r = ideal_space(n).rank_certified(cfg);
  return {r.rank, r.certificate, r.primes_agree};
}

DimResult preplactic_dim(int n, const LinalgConfig &cfg) {
  DimResult d = ideal_dim(n, cfg);
  d.value = factorial_u64(n) - d.value;
  return d;
}

Int formula_my(int n) {
  Rat total = 0;
  for (const Partition &lam : odd_part_partitions(n)) {
    const int k = lam.count();
    if (k == n)
      continue; // the all-ones partition is excluded
    Rat term((n - k) / 2 % 2 == 0 ? -1 : 1); // (-1)^(1 + (n-k)/2)
    term *= Rat(factorial(k));
    for (int part = 1; part <= n; part += 2) {
      const int m = lam.multiplicity(part);
      if (m > 0)
        term /= Rat(factorial(m));
    }
    Rat multinomial{factorial(n)};
    for (int part : lam.parts)
      multinomial /= Rat(factorial(part));
    total += term * multinomial;
  }
  if (total.get_den() != 1)
    throw std::logic_error("formula_my: non-integral value");
  return total.get_num();
}

namespace {

// Decoded witness: list of (degree-m pattern, coefficient).
struct WitnessTerms {
  int degree = 0;
  std::vector<std::pair<Permutation, int64_t>> terms;
};

WitnessTerms decode_witness(int m, const SparseVector &v) {
  WitnessTerms w;
  w.degree = m;
  for (const auto &[col, coeff] : v.entries)
    w.terms.emplace_back(lehmer_unrank(m, col), coeff);
  return w;
}

void distribute_letters(const std::vector<int> &parts, size_t block,
                        std::vector<int> &available,
                        std::vector<std::vector<int>> &blocks,
                        const std::function<void()> &emit) {
  if (block == parts.size()) {
    emit();
    return;
  }
  const int need = parts[block];
  // choose `need` letters (as sorted index subsets) from `available`
  const int n = static_cast<int>(available.size());
  std::vector<int> idx(static_cast<size_t>(need));
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    std::vector<int> chosen, rest;
    size_t ii = 0;
    for (int i = 0; i < n; ++i) {
      if (ii < idx.size() && idx[ii] == i) {
        chosen.push_back(available[static_cast<size_t>(i)]);
        ++ii;
      } else {
        rest.push_back(available[static_cast<size_t>(i)]);
      }
    }
    blocks[block] = chosen;
    std::vector<int> saved = available;
    available = rest;
    distribute_letters(parts, block + 1, available, blocks, emit);
    available = saved;
    int i = need - 1;
    while (i >= 0 && idx[static_cast<size_t>(i)] == n - (need - i))
      --i;
    if (i < 0)
      break;
    ++idx[static_cast<size_t>(i)];
    for (int j = i + 1; j < need; ++j)
      idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
  }
}

} // namespace

RowSpace composition_space(const std::vector<int> &parts,
                           const LinalgConfig &cfg) {
  int n = 0;
  for (int p : parts) {
    if (p <= 0 || p % 2 == 0)
      throw std::invalid_argument("composition_space: parts must be odd");
    n += p;
  }
  const uint64_t ambient = factorial_u64(n);
  std::vector<WitnessTerms> witnesses;
  witnesses.reserve(parts.size());
  for (int p : parts) {
    WitnessTerms w = decode_witness(p, odd_witness(p, cfg));
    if (w.terms.empty())
      return RowSpace(ambient); // a zero witness annihilates the block space
    witnesses.push_back(std::move(w));
  }

  std::vector<SparseVector> rows;
  std::vector<int> available(static_cast<size_t>(n));
  std::iota(available.begin(), available.end(), 1);
  std::vector<std::vector<int>> blocks(parts.size());

  auto emit = [&]() {
    // expand the product of the block witnesses
    std::vector<std::pair<Word, int64_t>> partial{{Word{}, 1}};
    for (size_t t = 0; t < parts.size(); ++t) {
      std::vector<std::pair<Word, int64_t>> next;
      const auto &letters = blocks[t];
      for (const auto &[prefix, pc] : partial) {
        for (const auto &[pat, wc] : witnesses[t].terms) {
          Word w = prefix;
          for (int pos = 0; pos < pat.degree(); ++pos)
            w.push_back(letters[static_cast<size_t>(pat.letter(pos) - 1)]);
          next.emplace_back(std::move(w), pc * wc);
        }
      }
      partial = std::move(next);
    }
    std::vector<std::pair<uint32_t, int64_t>> entries;
    entries.reserve(partial.size());
    for (auto &[w, coeff] : partial)
      entries.emplace_back(static_cast<uint32_t>(lehmer_rank(Permutation(w))),
                           coeff);
    rows.push_back(SparseVector::from_entries(ambient, std::move(entries)));
  };
  distribute_letters(parts, 0, available, blocks, emit);
  return RowSpace(ambient, std::move(rows));
}

DimResult dim_A_lambda(const Partition &lambda, const LinalgConfig &cfg) {
  for (int p : lambda.parts)
    if (p % 2 == 0)
      throw std::invalid_argument("dim_A_lambda: even part");
  if (lambda.sum() > 8)
    throw std::length_error("dim_A_lambda: capacity exceeded");
  RowSpace space = composition_space(lambda.parts, cfg);
  RankResult r = space.rank_certified(cfg);
  return {r.rank, r.certificate, r.primes_agree};
}

ZeroIntersectionReport verify_zero_intersection(int n, const LinalgConfig &cfg,
                                                bool include_nonadjacent) {
  if (n < 4 || n > 7)
    throw std::length_error("verify_zero_intersection: degree out of range");
  ZeroIntersectionReport report;
  report.degree = n;
  std::vector<RowSpace> elem;
  for (int i = 0; i + 3 <= n; ++i)
    elem.push_back(elementary_subspace(n, i));
  for (size_t i = 0; i < elem.size(); ++i) {
    for (size_t j = i + 1; j < elem.size(); ++j) {
      const bool adjacent = (j == i + 1);
      if (!adjacent && !include_nonadjacent)
        continue;
      IntersectionPair pair;
      pair.left_offset = static_cast<int>(i);
      pair.right_offset = static_cast<int>(j);
      pair.adjacent = adjacent;
      pair.dim = intersection_dim(elem[i], elem[j], cfg);
      if (adjacent && pair.dim != 0)
        report.failures.push_back(
            "adjacent pair (" + std::to_string(i) + "," + std::to_string(j) +
            ") has intersection dimension " + std::to_string(pair.dim));
      report.pairs.push_back(pair);
    }
  }
  return report;
}

namespace {

RowSpace iterated_intersection(int m, const LinalgConfig &cfg) {
  RowSpace cur = elementary_subspace(m, 0);
  const int k = (m - 1) / 2;
  for (int j = 1; j < k; ++j)
    cur = intersection_basis(cur, elementary_subspace(m, 2 * j), cfg);
  return cur;
}

} // namespace

uint64_t verify_maximal_intersection(int m, const LinalgConfig &cfg) {
  if (m < 3 || m % 2 == 0 || m > 9)
    throw std::length_error("verify_maximal_intersection: degree out of range");
  if (m == 3)
    return elementary_subspace(3, 0).rank_certified(cfg).rank;
  return iterated_intersection(m, cfg).row_count();
}

// Returns the zero vector when the computed intersection is not a line, so
// downstream block-space dimensions report the honest value instead of
// aborting.
const SparseVector &odd_witness(int m, const LinalgConfig &cfg) {
  static std::mutex mutex;
  static std::map<int, SparseVector> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(m);
  if (it != cache.end())
    return it->second;
  if (m < 1 || m % 2 == 0 || m > 7)
    throw std::invalid_argument("odd_witness: degree must be odd and <= 7");
  SparseVector v;
  if (m == 1) {
    v = SparseVector::unit(1, 0);
  } else if (m == 3) {
    EmbeddedGenerator g;
    g.degree = 3;
    g.offset = 0;
    g.triple = {1, 2, 3};
    v = to_sparse(generator_vector(g));
  } else {
    RowSpace basis = iterated_intersection(m, cfg);
    if (basis.row_count() == 1)
      v = basis.rows().front();
    else
      v = SparseVector(factorial_u64(m));
  }
  return cache.emplace(m, std::move(v)).first->second;
}

WordSum word_term(const Word &w) { return {{w, Rat(1)}}; }

WordSum pair_bracket(int a, int b) {
  WordSum s;
  s[{a, b}] = 1;
  s[{b, a}] = -1;
  return s;
}

WordSum concat_sum(const WordSum &a, const WordSum &b) {
  WordSum out;
  for (const auto &[wa, ca] : a) {
    for (const auto &[wb, cb] : b) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      Rat &slot = out[w];
      slot += ca * cb;
      if (slot == 0)
        out.erase(w);
    }
  }
  return out;
}

WordSum commutator(const WordSum &a, const WordSum &b) {
  WordSum out = concat_sum(a, b);
  for (const auto &[w, c] : concat_sum(b, a)) {
    Rat &slot = out[w];
    slot -= c;
    if (slot == 0)
      out.erase(w);
  }
  return out;
}

namespace {

WordSum wedge_sum(const std::vector<WordSum> &factors) {
  const size_t k = factors.size();
  if (k == 0)
    throw std::invalid_argument("wedge_element: no factors");
  if (k == 1)
    return factors[0];
  if (k == 2)
    return commutator(factors[0], factors[1]);
  WordSum out;
  for (size_t i = 0; i < k; ++i) {
    std::vector<WordSum> rest;
    rest.reserve(k - 1);
    for (size_t j = 1; j < k; ++j)
      rest.push_back(factors[(i + j) % k]);
    for (const auto &[w, c] : concat_sum(factors[i], wedge_sum(rest))) {
      Rat &slot = out[w];
      slot += c;
      if (slot == 0)
        out.erase(w);
    }
  }
  return out;
}

} // namespace

LinComb wedge_element(const std::vector<WordSum> &factors) {
  std::set<int> letters;
  size_t total = 0;
  for (const auto &f : factors) {
    if (f.empty())
      throw std::invalid_argument("wedge_element: empty factor");
    const Word &first = f.begin()->first;
    std::set<int> support(first.begin(), first.end());
    for (const auto &[w, c] : f)
      if (std::set<int>(w.begin(), w.end()) != support)
        throw std::invalid_argument(
            "wedge_element: factor terms use different letters");
    total += support.size();
    letters.insert(support.begin(), support.end());
  }
  if (letters.size() != total)
    throw std::invalid_argument("wedge_element: letter sets overlap");
  WordSum sum = wedge_sum(factors);
  LinComb out(static_cast<int>(total));
  for (const auto &[w, c] : sum)
    out.add(Permutation(w), c);
  return out;
}

namespace {

// Rows spanning I(i) (x) Q[S_j] + Q[S_i] (x) I(j) in tensor coordinates.
RowSpace tensor_ideal_span(int i, int j) {
  const uint64_t jf = factorial_u64(j);
  const uint64_t ambient = factorial_u64(i) * jf;
  std::vector<SparseVector> rows;
  if (i >= 3)
    for (const EmbeddedGenerator &g : ideal_generators(i)) {
      const SparseVector gv = to_sparse(generator_vector(g));
      for (uint64_t b = 0; b < jf; ++b) {
        std::vector<std::pair<uint32_t, int64_t>> entries;
        for (const auto &[col, coeff] : gv.entries)
          entries.emplace_back(static_cast<uint32_t>(col * jf + b), coeff);
        rows.push_back(SparseVector::from_entries(ambient, std::move(entries)));
      }
    }
  if (j >= 3)
    for (const EmbeddedGenerator &g : ideal_generators(j)) {
      const SparseVector gv = to_sparse(generator_vector(g));
      for (uint64_t a = 0; a < factorial_u64(i); ++a) {
        std::vector<std::pair<uint32_t, int64_t>> entries;
        for (const auto &[col, coeff] : gv.entries)
          entries.emplace_back(static_cast<uint32_t>(a * jf + col), coeff);
        rows.push_back(SparseVector::from_entries(ambient, std::move(entries)));
      }
    }
  return RowSpace(ambient, std::move(rows));
}

} // namespace

HopfIdealReport verify_hopf_ideal(int n, const LinalgConfig &cfg) {
  if (n < 3 || n > 7)
    throw std::length_error("verify_hopf_ideal: degree capacity exceeded");
  HopfIdealReport report;
  report.degree = n;
  const RowSpace &target = ideal_space(n);

  for (int p = 3; p <= n; ++p) {
    const int r = n - p;
    const auto alphas = symmetric_group(r);
    for (const EmbeddedGenerator &g : ideal_generators(p)) {
      const LinComb x = generator_vector(g);
      for (const Permutation &alpha : alphas) {
        const LinComb a = LinComb::basis(alpha);
        for (const LinComb &prod : {conv_product(a, x), conv_product(x, a)}) {
          ++report.product_checks;
          if (target.member(to_sparse(prod), cfg) ==
              Membership::certainly_independent)
            report.failures.push_back(
                "product of a degree-" + std::to_string(p) +
                " generator escapes the ideal in degree " + std::to_string(n));
        }
      }
    }
  }

  std::map<std::pair<int, int>, RowSpace> spans;
  for (int i = 0; i <= n; ++i)
    spans.emplace(std::make_pair(i, n - i), tensor_ideal_span(i, n - i));
  for (const EmbeddedGenerator &g : ideal_generators(n)) {
    TensorElem t = mr_coproduct(generator_vector(g));
    for (int i = 0; i <= n; ++i) {
      const int j = n - i;
      SparseVector comp = tensor_component_sparse(t, i, j);
      ++report.coproduct_checks;
      if (spans.at({i, j}).member(comp, cfg) ==
          Membership::certainly_independent)
        report.failures.push_back("coproduct component (" + std::to_string(i) +
                                  "," + std::to_string(j) +
                                  ") escapes I(x)S + S(x)I");
    }
  }
  return report;
}

} // namespace ppl
