#include "ppl/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ppl {

bool has_distinct_letters(const Word &w) {
  Word sorted = w;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

Permutation::Permutation(Word w) : word_(std::move(w)) {
  const int n = static_cast<int>(word_.size());
  std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
  for (int x : word_) {
    if (x < 1 || x > n || seen[static_cast<size_t>(x)])
      throw std::invalid_argument("Permutation: letters must be exactly {1..n}");
    seen[static_cast<size_t>(x)] = true;
  }
}

Permutation Permutation::identity(int n) {
  Word w(static_cast<size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

Permutation standardize(const Word &w) {
  if (!has_distinct_letters(w))
    throw std::invalid_argument("standardize: repeated letters");
  Word sorted = w;
  std::sort(sorted.begin(), sorted.end());
  Word out(w.size());
  for (size_t i = 0; i < w.size(); ++i) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), w[i]);
    out[i] = static_cast<int>(it - sorted.begin()) + 1;
  }
  return Permutation(std::move(out));
}

Word restrict_letters(const Permutation &p, const std::set<int> &s) {
  Word out;
  for (int x : p.word())
    if (s.count(x))
      out.push_back(x);
  return out;
}

uint64_t lehmer_rank(const Permutation &p) {
  const int n = p.degree();
  if (n > 20)
    throw std::invalid_argument("lehmer_rank: degree > 20");
  uint64_t r = 0;
  // code c_i = #{j > i : w_j < w_i}; rank = sum c_i * (n-1-i)!
  std::vector<uint64_t> suffix_fact(static_cast<size_t>(n) + 1, 1);
  for (int i = 1; i <= n; ++i)
    suffix_fact[static_cast<size_t>(i)] = suffix_fact[static_cast<size_t>(i - 1)] * static_cast<uint64_t>(i);
  for (int i = 0; i < n; ++i) {
    uint64_t c = 0;
    for (int j = i + 1; j < n; ++j)
      if (p.letter(j) < p.letter(i))
        ++c;
    r += c * suffix_fact[static_cast<size_t>(n - 1 - i)];
  }
  return r;
}

Permutation lehmer_unrank(int n, uint64_t r) {
  if (n < 0 || n > 20)
    throw std::invalid_argument("lehmer_unrank: degree out of range");
  uint64_t nf = 1;
  for (int i = 2; i <= n; ++i)
    nf *= static_cast<uint64_t>(i);
  if (r >= nf)
    throw std::invalid_argument("lehmer_unrank: rank out of range");
  std::vector<int> avail(static_cast<size_t>(n));
  std::iota(avail.begin(), avail.end(), 1);
  Word w;
  w.reserve(static_cast<size_t>(n));
  for (int i = n - 1; i >= 0; --i) {
    uint64_t f = 1;
    for (int k = 2; k <= i; ++k)
      f *= static_cast<uint64_t>(k);
    const uint64_t c = r / f;
    r %= f;
    w.push_back(avail[static_cast<size_t>(c)]);
    avail.erase(avail.begin() + static_cast<long>(c));
  }
  return Permutation(std::move(w));
}

bool is_alternating(const Permutation &p) {
  const int n = p.degree();
  for (int i = 0; i + 1 < n; ++i) {
    if (i % 2 == 0) {
      if (p.letter(i) < p.letter(i + 1))
        return false;
    } else {
      if (p.letter(i) > p.letter(i + 1))
        return false;
    }
  }
  return true;
}

std::vector<Permutation> symmetric_group(int n) {
  Word w(static_cast<size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation(w));
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0)
      throw std::invalid_argument("Partition: parts must be positive");
    if (i > 0 && parts[i] > parts[i - 1])
      throw std::invalid_argument("Partition: parts must be weakly decreasing");
  }
}

int Partition::sum() const {
  return std::accumulate(parts.begin(), parts.end(), 0);
}

int Partition::multiplicity(int part) const {
  return static_cast<int>(std::count(parts.begin(), parts.end(), part));
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i)
      os << ',';
    os << parts[i];
  }
  os << ']';
  return os.str();
}

namespace {

void odd_partitions_rec(int remaining, int max_part, std::vector<int> &acc,
                        std::vector<Partition> &out) {
  if (remaining == 0) {
    out.push_back(Partition(acc));
    return;
  }
  int start = std::min(max_part, remaining);
  if (start % 2 == 0)
    --start;
  for (int part = start; part >= 1; part -= 2) {
    acc.push_back(part);
    odd_partitions_rec(remaining - part, part, acc, out);
    acc.pop_back();
  }
}

} // namespace

std::vector<Partition> odd_part_partitions(int n) {
  if (n < 0)
    throw std::invalid_argument("odd_part_partitions: negative n");
  std::vector<Partition> out;
  std::vector<int> acc;
  odd_partitions_rec(n, n, acc, out);
  return out;
}

std::string word_to_string(const Word &w) {
  if (w.empty())
    return "e";
  bool compact = std::all_of(w.begin(), w.end(), [](int x) { return x <= 9; });
  std::ostringstream os;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i && !compact)
      os << ' ';
    os << w[i];
  }
  return os.str();
}

Word parse_word(const std::string &s) {
  Word w;
  const bool has_sep =
      s.find_first_of(", \t") != std::string::npos;
  if (has_sep) {
    std::string token;
    std::istringstream is(s);
    std::string piece;
    while (std::getline(is, piece, ',')) {
      std::istringstream ps(piece);
      int x;
      while (ps >> x)
        w.push_back(x);
    }
  } else {
    for (char c : s) {
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw std::invalid_argument("parse_word: unexpected character");
      w.push_back(c - '0');
    }
  }
  return w;
}

} // namespace ppl
