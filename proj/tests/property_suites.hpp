#pragma once

// Exhaustive algebraic property checks shared between the unit tests and the
// acceptance suite: (co)associativity, bialgebra compatibility, duality, and
// term counts for the two graded products.

#include <random>
#include <tuple>

#include "ppl/hopf.hpp"
#include "ppl/numeric.hpp"
#include "ppl/perm.hpp"

namespace ppl::props {

// (a (x) b (x) c) expansions used for the coassociativity check.
using Triple = std::map<std::tuple<Permutation, Permutation, Permutation>, Rat>;

inline Triple coproduct_left_then(const TensorElem &t, bool left) {
  Triple out;
  for (const auto &[bidegree, comp] : t.components()) {
    for (const auto &[pq, c] : comp) {
      const TensorElem inner =
          mr_coproduct(LinComb::basis(left ? pq.first : pq.second));
      for (const auto &[bid2, comp2] : inner.components()) {
        (void)bid2;
        for (const auto &[uv, c2] : comp2) {
          auto key = left ? std::make_tuple(uv.first, uv.second, pq.second)
                          : std::make_tuple(pq.first, uv.first, uv.second);
          Rat &slot = out[key];
          slot += c * c2;
          if (slot == 0)
            out.erase(key);
        }
      }
    }
  }
  return out;
}

inline Triple dual_coproduct_left_then(const TensorElem &t, bool left) {
  Triple out;
  for (const auto &[bidegree, comp] : t.components()) {
    for (const auto &[pq, c] : comp) {
      const TensorElem inner =
          dual_coproduct(LinComb::basis(left ? pq.first : pq.second));
      for (const auto &[bid2, comp2] : inner.components()) {
        (void)bid2;
        for (const auto &[uv, c2] : comp2) {
          auto key = left ? std::make_tuple(uv.first, uv.second, pq.second)
                          : std::make_tuple(pq.first, uv.first, uv.second);
          Rat &slot = out[key];
          slot += c * c2;
          if (slot == 0)
            out.erase(key);
        }
      }
    }
  }
  return out;
}

struct Violations {
  size_t checks = 0;
  size_t failures = 0;
};

// Associativity of both products over all basis triples with the given total
// degree.
inline Violations associativity_at(int total, bool shifted) {
  Violations v;
  for (int r = 0; r <= total; ++r) {
    for (int s = 0; r + s <= total; ++s) {
      const int t = total - r - s;
      for (const Permutation &a : symmetric_group(r))
        for (const Permutation &b : symmetric_group(s))
          for (const Permutation &c : symmetric_group(t)) {
            const LinComb la = LinComb::basis(a), lb = LinComb::basis(b),
                          lc = LinComb::basis(c);
            LinComb lhs, rhs;
            if (shifted) {
              lhs = shifted_shuffle(shifted_shuffle(la, lb), lc);
              rhs = shifted_shuffle(la, shifted_shuffle(lb, lc));
            } else {
              lhs = conv_product(conv_product(la, lb), lc);
              rhs = conv_product(la, conv_product(lb, lc));
            }
            ++v.checks;
            if (!(lhs == rhs))
              ++v.failures;
          }
    }
  }
  return v;
}

inline Violations coassociativity_at(int degree, bool dual) {
  Violations v;
  for (const Permutation &a : symmetric_group(degree)) {
    const TensorElem t = dual ? dual_coproduct(LinComb::basis(a))
                              : mr_coproduct(LinComb::basis(a));
    const Triple lhs = dual ? dual_coproduct_left_then(t, true)
                            : coproduct_left_then(t, true);
    const Triple rhs = dual ? dual_coproduct_left_then(t, false)
                            : coproduct_left_then(t, false);
    ++v.checks;
    if (!(lhs == rhs))
      ++v.failures;
  }
  return v;
}

// Delta(a * b) = Delta(a) * Delta(b) with componentwise convolution.
inline Violations bialgebra_at(int total) {
  Violations v;
  for (int r = 0; r <= total; ++r) {
    const int s = total - r;
    for (const Permutation &a : symmetric_group(r))
      for (const Permutation &b : symmetric_group(s)) {
        const TensorElem lhs =
            mr_coproduct(conv_product(LinComb::basis(a), LinComb::basis(b)));
        const TensorElem rhs = tensor_conv_product(
            mr_coproduct(LinComb::basis(a)), mr_coproduct(LinComb::basis(b)));
        ++v.checks;
        if (!(lhs == rhs))
          ++v.failures;
      }
  }
  return v;
}

// <a*b|c> = <a(x)b|Delta'(c)> and <a*'b|c> = <a(x)b|Delta(c)>.
inline Violations duality_at(int total) {
  Violations v;
  for (int r = 0; r <= total; ++r) {
    const int s = total - r;
    for (const Permutation &a : symmetric_group(r))
      for (const Permutation &b : symmetric_group(s)) {
        const LinComb la = LinComb::basis(a), lb = LinComb::basis(b);
        const LinComb conv = conv_product(la, lb);
        const LinComb shuf = shifted_shuffle(la, lb);
        const TensorElem ab = tensor_of(la, lb);
        for (const Permutation &c : symmetric_group(total)) {
          const LinComb lc = LinComb::basis(c);
          ++v.checks;
          if (pairing(conv, lc) != pairing2(ab, dual_coproduct(lc)))
            ++v.failures;
          if (pairing(shuf, lc) != pairing2(ab, mr_coproduct(lc)))
            ++v.failures;
        }
      }
  }
  return v;
}

// Both products of basis permutations have C(r+s, r) terms, coefficient 1.
inline Violations term_counts_at(int r, int s) {
  Violations v;
  const Int expected = binomial(r + s, r);
  for (const Permutation &a : symmetric_group(r))
    for (const Permutation &b : symmetric_group(s)) {
      const LinComb conv = conv_product(LinComb::basis(a), LinComb::basis(b));
      const LinComb shuf =
          shifted_shuffle(LinComb::basis(a), LinComb::basis(b));
      ++v.checks;
      bool ok = Int(static_cast<long>(conv.term_count())) == expected &&
                Int(static_cast<long>(shuf.term_count())) == expected;
      for (const auto &[p, c] : conv.terms())
        ok = ok && c == 1;
      for (const auto &[p, c] : shuf.terms())
        ok = ok && c == 1;
      if (!ok)
        ++v.failures;
    }
  return v;
}

// Sampled triples at a larger total degree, seeded for reproducibility.
inline Violations sampled_associativity(int total, int samples, uint64_t seed) {
  Violations v;
  std::mt19937_64 rng(seed);
  for (int i = 0; i < samples; ++i) {
    const int r = static_cast<int>(rng() % static_cast<uint64_t>(total + 1));
    const int s =
        static_cast<int>(rng() % static_cast<uint64_t>(total - r + 1));
    const int t = total - r - s;
    auto pick = [&rng](int n) {
      return lehmer_unrank(n, rng() % factorial_u64(n));
    };
    const LinComb a = LinComb::basis(pick(r));
    const LinComb b = LinComb::basis(pick(s));
    const LinComb c = LinComb::basis(pick(t));
    ++v.checks;
    if (!(conv_product(conv_product(a, b), c) ==
          conv_product(a, conv_product(b, c))))
      ++v.failures;
    if (!(shifted_shuffle(shifted_shuffle(a, b), c) ==
          shifted_shuffle(a, shifted_shuffle(b, c))))
      ++v.failures;
  }
  return v;
}

} // namespace ppl::props
