#include "ppl/hopf.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace ppl {

LinComb LinComb::basis(const Permutation &p) {
  LinComb c(p.degree());
  c.add(p, 1);
  return c;
}

void LinComb::add(const Permutation &p, const Rat &c) {
  if (p.degree() != degree_)
    throw std::invalid_argument("LinComb::add: degree mismatch");
  if (c == 0)
    return;
  auto [it, inserted] = terms_.emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0)
      terms_.erase(it);
  }
}

LinComb &LinComb::operator+=(const LinComb &other) {
  if (other.is_zero())
    return *this;
  if (is_zero() && terms_.empty())
    degree_ = other.degree_;
  for (const auto &[p, c] : other.terms_)
    add(p, c);
  return *this;
}

LinComb &LinComb::operator-=(const LinComb &other) {
  if (other.is_zero())
    return *this;
  if (is_zero() && terms_.empty())
    degree_ = other.degree_;
  for (const auto &[p, c] : other.terms_)
    add(p, -c);
  return *this;
}

LinComb &LinComb::operator*=(const Rat &c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto &[p, coeff] : terms_)
    coeff *= c;
  return *this;
}

bool LinComb::operator==(const LinComb &other) const {
  if (terms_.empty() && other.terms_.empty())
    return true;
  return degree_ == other.degree_ && terms_ == other.terms_;
}

SparseVector to_sparse(const LinComb &a) {
  const uint64_t ambient = factorial_u64(a.degree());
  Int lcm_den = 1;
  for (const auto &[p, c] : a.terms()) {
    Int den = c.get_den();
    Int g;
    mpz_gcd(g.get_mpz_t(), lcm_den.get_mpz_t(), den.get_mpz_t());
    lcm_den = lcm_den / g * den;
  }
  SparseVector v(ambient);
  std::vector<std::pair<uint32_t, int64_t>> entries;
  for (const auto &[p, c] : a.terms()) {
    Int num = c.get_num() * (lcm_den / c.get_den());
    entries.emplace_back(static_cast<uint32_t>(lehmer_rank(p)), to_int64(num));
  }
  return SparseVector::from_entries(ambient, std::move(entries));
}

void TensorElem::add(const Permutation &l, const Permutation &r,
                     const Rat &c) {
  if (c == 0)
    return;
  auto &comp = comps_[{l.degree(), r.degree()}];
  auto [it, inserted] = comp.emplace(std::make_pair(l, r), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0)
      comp.erase(it);
  }
  if (comp.empty())
    comps_.erase({l.degree(), r.degree()});
}

SparseVector tensor_component_sparse(const TensorElem &t, int r, int s) {
  const uint64_t ambient = factorial_u64(r) * factorial_u64(s);
  auto it = t.components().find({r, s});
  SparseVector v(ambient);
  if (it == t.components().end())
    return v;
  const uint64_t sfact = factorial_u64(s);
  Int lcm_den = 1;
  for (const auto &[pq, c] : it->second) {
    Int den = c.get_den();
    Int g;
    mpz_gcd(g.get_mpz_t(), lcm_den.get_mpz_t(), den.get_mpz_t());
    lcm_den = lcm_den / g * den;
  }
  std::vector<std::pair<uint32_t, int64_t>> entries;
  for (const auto &[pq, c] : it->second) {
    const uint64_t col =
        lehmer_rank(pq.first) * sfact + lehmer_rank(pq.second);
    Int num = c.get_num() * (lcm_den / c.get_den());
    entries.emplace_back(static_cast<uint32_t>(col), to_int64(num));
  }
  return SparseVector::from_entries(ambient, std::move(entries));
}

namespace {

// All k-subsets of {1..n} in lexicographic order.
void for_each_subset(int n, int k,
                     const std::function<void(const std::vector<int> &)> &fn) {
  std::vector<int> sub(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i)
    sub[static_cast<size_t>(i)] = i + 1;
  while (true) {
    fn(sub);
    int i = k - 1;
    while (i >= 0 && sub[static_cast<size_t>(i)] == n - (k - 1 - i))
      --i;
    if (i < 0)
      break;
    ++sub[static_cast<size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      sub[static_cast<size_t>(j)] = sub[static_cast<size_t>(j - 1)] + 1;
  }
}

// The unique word on the letter set `letters` (ascending) standardizing to p.
Word pattern_word(const std::vector<int> &letters, const Permutation &p) {
  Word w(letters.size());
  for (size_t i = 0; i < letters.size(); ++i)
    w[i] = letters[static_cast<size_t>(p.letter(static_cast<int>(i)) - 1)];
  return w;
}

} // namespace

LinComb conv_product(const LinComb &a, const LinComb &b) {
  const int r = a.degree();
  const int s = b.degree();
  LinComb out(r + s);
  if (a.is_zero() || b.is_zero())
    return out;
  for (const auto &[alpha, ca] : a.terms()) {
    for (const auto &[beta, cb] : b.terms()) {
      const Rat coeff = ca * cb;
      for_each_subset(r + s, r, [&](const std::vector<int> &sub) {
        std::vector<int> comp;
        comp.reserve(static_cast<size_t>(s));
        size_t si = 0;
        for (int x = 1; x <= r + s; ++x) {
          if (si < sub.size() && sub[si] == x)
            ++si;
          else
            comp.push_back(x);
        }
        Word w = pattern_word(sub, alpha);
        Word tail = pattern_word(comp, beta);
        w.insert(w.end(), tail.begin(), tail.end());
        out.add(Permutation(std::move(w)), coeff);
      });
    }
  }
  return out;
}

TensorElem mr_coproduct(const LinComb &a) {
  TensorElem out;
  for (const auto &[alpha, c] : a.terms()) {
    const int r = alpha.degree();
    for (int i = 0; i <= r; ++i) {
      std::set<int> low, high;
      for (int x = 1; x <= i; ++x)
        low.insert(x);
      for (int x = i + 1; x <= r; ++x)
        high.insert(x);
      Word left = restrict_letters(alpha, low);
      Word right = restrict_letters(alpha, high);
      out.add(Permutation(std::move(left)), standardize(right), c);
    }
  }
  return out;
}

LinComb shifted_shuffle(const LinComb &a, const LinComb &b) {
  const int r = a.degree();
  const int s = b.degree();
  LinComb out(r + s);
  if (a.is_zero() || b.is_zero())
    return out;
  for (const auto &[alpha, ca] : a.terms()) {
    for (const auto &[beta, cb] : b.terms()) {
      const Rat coeff = ca * cb;
      for_each_subset(r + s, r, [&](const std::vector<int> &positions) {
        Word w(static_cast<size_t>(r + s), 0);
        for (int i = 0; i < r; ++i)
          w[static_cast<size_t>(positions[static_cast<size_t>(i)] - 1)] =
              alpha.letter(i);
        size_t bi = 0;
        for (auto &slot : w)
          if (slot == 0)
            slot = beta.letter(static_cast<int>(bi++)) + r;
        out.add(Permutation(std::move(w)), coeff);
      });
    }
  }
  return out;
}

TensorElem dual_coproduct(const LinComb &a) {
  TensorElem out;
  for (const auto &[alpha, c] : a.terms()) {
    const int r = alpha.degree();
    for (int i = 0; i <= r; ++i) {
      Word prefix(alpha.word().begin(), alpha.word().begin() + i);
      Word suffix(alpha.word().begin() + i, alpha.word().end());
      out.add(standardize(prefix), standardize(suffix), c);
    }
  }
  return out;
}

Rat pairing(const LinComb &x, const LinComb &y) {
  Rat out = 0;
  const auto &xt = x.terms();
  const auto &yt = y.terms();
  if (xt.size() > yt.size())
    return pairing(y, x);
  for (const auto &[p, c] : xt) {
    auto it = yt.find(p);
    if (it != yt.end())
      out += c * it->second;
  }
  return out;
}

Rat pairing2(const TensorElem &t, const TensorElem &u) {
  Rat out = 0;
  for (const auto &[bidegree, comp] : t.components()) {
    auto it = u.components().find(bidegree);
    if (it == u.components().end())
      continue;
    for (const auto &[pq, c] : comp) {
      auto jt = it->second.find(pq);
      if (jt != it->second.end())
        out += c * jt->second;
    }
  }
  return out;
}

TensorElem tensor_of(const LinComb &l, const LinComb &r) {
  TensorElem out;
  for (const auto &[p, cp] : l.terms())
    for (const auto &[q, cq] : r.terms())
      out.add(p, q, cp * cq);
  return out;
}

TensorElem tensor_conv_product(const TensorElem &a, const TensorElem &b) {
  TensorElem out;
  for (const auto &[da, compa] : a.components()) {
    for (const auto &[db, compb] : b.components()) {
      for (const auto &[pa, ca] : compa) {
        for (const auto &[pb, cb] : compb) {
          LinComb left =
              conv_product(LinComb::basis(pa.first), LinComb::basis(pb.first));
          LinComb right = conv_product(LinComb::basis(pa.second),
                                       LinComb::basis(pb.second));
          const Rat coeff = ca * cb;
          for (const auto &[l, cl] : left.terms())
            for (const auto &[r, cr] : right.terms())
              out.add(l, r, coeff * cl * cr);
        }
      }
    }
  }
  return out;
}

} // namespace ppl
