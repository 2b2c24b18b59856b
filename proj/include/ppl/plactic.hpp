#pragma once

#include <set>
#include <string>
#include <vector>

#include "ppl/hopf.hpp"
#include "ppl/linalg.hpp"
#include "ppl/perm.hpp"

namespace ppl {

// Standard Young tableau: strictly increasing rows and columns, row lengths
// weakly decreasing, entries exactly {1..n}.
struct Tableau {
  std::vector<std::vector<int>> rows;

  int size() const;
  Partition shape() const;
  bool is_standard() const;
  std::string to_string() const;

  auto operator<=>(const Tableau &) const = default;
};

// Schensted row insertion; P records content, Q records insertion order.
std::pair<Tableau, Tableau> rs_insert(const Permutation &p);

// Closure of {p} under the adjacent-factor Knuth rewrites
// bac ~ bca and acb ~ cab with a < b < c.
std::set<Permutation> knuth_class(const Permutation &p);

// Sum of all permutations whose insertion tableau is t.
LinComb plactic_class_vector(const Tableau &t);

// All insertion tableaux arising from S_n, in sorted order.
std::vector<Tableau> standard_tableaux(int n);

// Number of Knuth classes in S_n, computed by class enumeration and by
// counting distinct insertion tableaux; the two counts are checked to agree.
uint64_t tab_dimension(int n);

// Spanning rows of the Knuth submodule K(n): per class, differences against
// the class minimum.
RowSpace knuth_submodule(int n);

struct PrReport {
  int degree = 0;
  size_t product_checks = 0;
  size_t coproduct_checks = 0;
  size_t shuffle_checks = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// Checks, through degree n: the Knuth submodule is a two-sided ideal and a
// coideal for the convolution structure, and shifted shuffles of plactic
// class vectors stay inside the span of class vectors.
PrReport verify_pr_theorems(int n,
                            const LinalgConfig &cfg = default_linalg_config());

} // namespace ppl
