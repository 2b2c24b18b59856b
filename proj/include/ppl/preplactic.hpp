#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "ppl/hopf.hpp"
#include "ppl/linalg.hpp"
#include "ppl/perm.hpp"

namespace ppl {

// One embedded copy of the degree-3 relation inside S_n: the triple sits in
// three consecutive positions starting after `offset`, the remaining letters
// fill the other positions in order.
struct EmbeddedGenerator {
  int degree = 0;
  int offset = 0;              // 0 <= offset <= degree - 3
  std::array<int, 3> triple{}; // a < b < c
  Word filler;                 // letters outside the triple, in position order
};

// The four-term combination  u(bac - bca - acb + cab)v.
LinComb generator_vector(const EmbeddedGenerator &g);

// Deterministic enumeration: triples in colex order, fillers in lex order.
std::vector<EmbeddedGenerator> offset_generators(int n, int offset);
// All offsets ascending.
std::vector<EmbeddedGenerator> ideal_generators(int n);

// Span of the n!/6 generators at one offset.
RowSpace elementary_subspace(int n, int offset);

// Span of all generators of degree n (cached across calls).
const RowSpace &ideal_space(int n);

struct DimResult {
  uint64_t value = 0;
  RankCertificate certificate = RankCertificate::exact;
  bool primes_agree = true;
};

// Certified rank of the degree-n component of the ideal. Degrees up to 8 by
// default; 9 is an opt-in stretch.
DimResult ideal_dim(int n, const LinalgConfig &cfg = default_linalg_config());
// n! minus the ideal rank.
DimResult preplactic_dim(int n,
                         const LinalgConfig &cfg = default_linalg_config());

// Inclusion-exclusion over odd-part partitions (all parts odd, not 1^n):
// sum of (-1)^(1+(n-k)/2) * k!/prod m_i! * n!/prod parts_i!.
Int formula_my(int n);

// One-dimensional witness space basis for odd degrees 1, 3, 5, 7: degree 3 is
// the relation itself, degrees 5 and 7 come from the computed maximal
// intersections. Cached.
const SparseVector &odd_witness(int m,
                                const LinalgConfig &cfg = default_linalg_config());

// Embedded product of witness spaces over consecutive blocks of the given
// sizes (all odd); letters are distributed over the blocks in all ways.
RowSpace composition_space(const std::vector<int> &parts,
                           const LinalgConfig &cfg = default_linalg_config());

// Certified rank of the block space of an odd-part partition; the expected
// value is n!/prod(parts!).
DimResult dim_A_lambda(const Partition &lambda,
                       const LinalgConfig &cfg = default_linalg_config());

struct IntersectionPair {
  int left_offset = 0;
  int right_offset = 0;
  uint64_t dim = 0;
  bool adjacent = false;
};

struct ZeroIntersectionReport {
  int degree = 0;
  std::vector<IntersectionPair> pairs;
  std::vector<std::string> failures; // adjacent pairs with nonzero dim
  bool ok() const { return failures.empty(); }
};

// Adjacent elementary subspaces intersect trivially; optionally also report
// the non-adjacent pair dimensions (informational, they need not vanish).
ZeroIntersectionReport
verify_zero_intersection(int n, const LinalgConfig &cfg = default_linalg_config(),
                         bool include_nonadjacent = false);

// Dimension of the intersection of the k = (m-1)/2 subspaces at even offsets
// 0, 2, ..., m-3, computed by iterated explicit intersection bases.
uint64_t
verify_maximal_intersection(int m,
                            const LinalgConfig &cfg = default_linalg_config());

// Formal sums of words with pairwise-distinct letters (not necessarily
// permutations), used to expand bracket words.
using WordSum = std::map<Word, Rat>;

WordSum word_term(const Word &w);
WordSum pair_bracket(int a, int b); // ab - ba
WordSum concat_sum(const WordSum &a, const WordSum &b);
WordSum commutator(const WordSum &a, const WordSum &b);

// Cyclic alternating combination: one factor is itself, two factors give the
// commutator, k >= 3 gives sum_i x_i * wedge(x_{i+1}, ..., x_{i+k-1}).
// Letter sets must be disjoint and union to {1..n}.
LinComb wedge_element(const std::vector<WordSum> &factors);

struct HopfIdealReport {
  int degree = 0;
  size_t product_checks = 0;
  size_t coproduct_checks = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// Convolution products of generators with group algebra elements stay in the
// ideal, and coproduct components stay in I (x) S + S (x) I.
HopfIdealReport
verify_hopf_ideal(int n, const LinalgConfig &cfg = default_linalg_config());

} // namespace ppl
