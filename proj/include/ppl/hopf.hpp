#pragma once

#include <map>
#include <utility>

#include "ppl/linalg.hpp"
#include "ppl/numeric.hpp"
#include "ppl/perm.hpp"

namespace ppl {

// Formal rational linear combination of same-degree permutations.
class LinComb {
public:
  LinComb() = default;
  explicit LinComb(int degree) : degree_(degree) {}
  static LinComb basis(const Permutation &p);

  int degree() const { return degree_; }
  const std::map<Permutation, Rat> &terms() const { return terms_; }
  size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  void add(const Permutation &p, const Rat &c);
  LinComb &operator+=(const LinComb &other);
  LinComb &operator-=(const LinComb &other);
  LinComb &operator*=(const Rat &c);
  bool operator==(const LinComb &other) const;

private:
  int degree_ = 0;
  std::map<Permutation, Rat> terms_;
};

// Coordinates of a LinComb in Q[S_n], columns indexed by Lehmer rank. The
// combination is scaled by the common denominator so entries are integers.
SparseVector to_sparse(const LinComb &a);

// Element of a direct sum of Q[S_r] (x) Q[S_s] components.
class TensorElem {
public:
  using Component = std::map<std::pair<Permutation, Permutation>, Rat>;

  void add(const Permutation &l, const Permutation &r, const Rat &c);
  const std::map<std::pair<int, int>, Component> &components() const {
    return comps_;
  }
  bool is_zero() const { return comps_.empty(); }
  bool operator==(const TensorElem &other) const { return comps_ == other.comps_; }

private:
  std::map<std::pair<int, int>, Component> comps_;
};

// Coordinates of the (r, s) component; column index is
// lehmer_rank(left) * s! + lehmer_rank(right).
SparseVector tensor_component_sparse(const TensorElem &t, int r, int s);

// Convolution product: sum over splittings of the target alphabet with
// prescribed standardizations of the two blocks.
LinComb conv_product(const LinComb &a, const LinComb &b);

// Coproduct dual to the shifted shuffle: restrict to {1..i} and standardize
// the complement.
TensorElem mr_coproduct(const LinComb &a);

// Shuffle of the first word with the second word shifted up by deg(a).
LinComb shifted_shuffle(const LinComb &a, const LinComb &b);

// Deconcatenation coproduct: standardized prefix (x) standardized suffix.
TensorElem dual_coproduct(const LinComb &a);

// Permutation words form an orthonormal basis.
Rat pairing(const LinComb &x, const LinComb &y);
Rat pairing2(const TensorElem &t, const TensorElem &u);

TensorElem tensor_of(const LinComb &l, const LinComb &r);
// Componentwise convolution on tensor factors.
TensorElem tensor_conv_product(const TensorElem &a, const TensorElem &b);

} // namespace ppl
