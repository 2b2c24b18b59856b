#pragma once

#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace ppl {

// A word is a sequence of distinct positive integers; the empty word is the
// unit. Words whose letter set is exactly {1..n} are permutations of S_n.
using Word = std::vector<int>;

bool has_distinct_letters(const Word &w);

class Permutation {
public:
  Permutation() = default; // the empty permutation (degree 0)
  explicit Permutation(Word w);
  static Permutation identity(int n);

  int degree() const { return static_cast<int>(word_.size()); }
  const Word &word() const { return word_; }
  int letter(int pos) const { return word_[static_cast<size_t>(pos)]; }

  auto operator<=>(const Permutation &) const = default;

private:
  Word word_;
};

// Order-isomorphic relabeling of a distinct-letter word onto {1..n}.
Permutation standardize(const Word &w);

// Subword of p consisting of the letters in s, order preserved.
Word restrict_letters(const Permutation &p, const std::set<int> &s);

// Factorial-number-system rank: the identity maps to 0, the reversal to n!-1.
// Requires degree <= 20.
uint64_t lehmer_rank(const Permutation &p);
Permutation lehmer_unrank(int n, uint64_t r);

// Down-up condition p1 > p2 < p3 > ...; degrees 0 and 1 count as alternating.
bool is_alternating(const Permutation &p);

// All of S_n in lexicographic (= Lehmer rank) order.
std::vector<Permutation> symmetric_group(int n);

struct Partition {
  std::vector<int> parts; // weakly decreasing, positive

  Partition() = default;
  explicit Partition(std::vector<int> p);

  int sum() const;
  int count() const { return static_cast<int>(parts.size()); }
  int multiplicity(int part) const; // number of parts equal to `part`
  std::string to_string() const;

  auto operator<=>(const Partition &) const = default;
};

// Partitions of n with all parts odd, in lexicographically decreasing order.
std::vector<Partition> odd_part_partitions(int n);

std::string word_to_string(const Word &w);
Word parse_word(const std::string &s);

} // namespace ppl
