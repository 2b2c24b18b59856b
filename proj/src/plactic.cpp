#include "ppl/plactic.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>
#include <stdexcept>

namespace ppl {

int Tableau::size() const {
  int n = 0;
  for (const auto &r : rows)
    n += static_cast<int>(r.size());
  return n;
}

Partition Tableau::shape() const {
  std::vector<int> parts;
  parts.reserve(rows.size());
  for (const auto &r : rows)
    parts.push_back(static_cast<int>(r.size()));
  return Partition(parts);
}

bool Tableau::is_standard() const {
  const int n = size();
  std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].empty())
      return false;
    if (i > 0 && rows[i].size() > rows[i - 1].size())
      return false;
    for (size_t j = 0; j < rows[i].size(); ++j) {
      const int x = rows[i][j];
      if (x < 1 || x > n || seen[static_cast<size_t>(x)])
        return false;
      seen[static_cast<size_t>(x)] = true;
      if (j > 0 && rows[i][j - 1] >= x)
        return false;
      if (i > 0 && rows[i - 1][j] >= x)
        return false;
    }
  }
  return true;
}

std::string Tableau::to_string() const {
  std::ostringstream os;
  for (size_t i = 0; i < rows.size(); ++i) {
    if (i)
      os << '\n';
    for (size_t j = 0; j < rows[i].size(); ++j) {
      if (j)
        os << ' ';
      os << rows[i][j];
    }
  }
  return os.str();
}

std::pair<Tableau, Tableau> rs_insert(const Permutation &p) {
  Tableau P, Q;
  for (int step = 0; step < p.degree(); ++step) {
    int x = p.letter(step);
    size_t row = 0;
    while (true) {
      if (row == P.rows.size()) {
        P.rows.push_back({x});
        Q.rows.push_back({step + 1});
        break;
      }
      auto &r = P.rows[row];
      auto it = std::upper_bound(r.begin(), r.end(), x);
      if (it == r.end()) {
        r.push_back(x);
        Q.rows[row].push_back(step + 1);
        break;
      }
      std::swap(x, *it);
      ++row;
    }
  }
  return {P, Q};
}

namespace {

// Knuth rewrites applicable at the factor w[i..i+2]; letters are distinct.
void knuth_neighbors(const Word &w, std::vector<Word> &out) {
  out.clear();
  for (size_t i = 0; i + 2 < w.size(); ++i) {
    const int x = w[i], y = w[i + 1], z = w[i + 2];
    Word v = w;
    // bac ~ bca: middle letter smallest, outer letters ordered either way
    if (y < x && x < z) { // b a c -> b c a
      v[i + 1] = z;
      v[i + 2] = y;
      out.push_back(v);
      continue;
    }
    if (z < x && x < y) { // b c a -> b a c
      v[i + 1] = z;
      v[i + 2] = y;
      out.push_back(v);
      continue;
    }
    // acb ~ cab: largest letter in the middle
    if (x < z && z < y) { // a c b -> c a b
      v[i] = y;
      v[i + 1] = x;
      out.push_back(v);
      continue;
    }
    if (y < z && z < x) { // c a b -> a c b
      v[i] = y;
      v[i + 1] = x;
      out.push_back(v);
      continue;
    }
  }
}

} // namespace

std::set<Permutation> knuth_class(const Permutation &p) {
  std::set<Permutation> seen{p};
  std::deque<Permutation> queue{p};
  std::vector<Word> nbrs;
  while (!queue.empty()) {
    Permutation cur = queue.front();
    queue.pop_front();
    knuth_neighbors(cur.word(), nbrs);
    for (auto &w : nbrs) {
      Permutation q(std::move(w));
      if (seen.insert(q).second)
        queue.push_back(std::move(q));
    }
  }
  return seen;
}

LinComb plactic_class_vector(const Tableau &t) {
  if (!t.is_standard())
    throw std::invalid_argument("plactic_class_vector: non-standard tableau");
  const int n = t.size();
  LinComb out(n);
  for (const Permutation &p : symmetric_group(n))
    if (rs_insert(p).first == t)
      out.add(p, 1);
  return out;
}

std::vector<Tableau> standard_tableaux(int n) {
  std::set<Tableau> tabs;
  for (const Permutation &p : symmetric_group(n))
    tabs.insert(rs_insert(p).first);
  return {tabs.begin(), tabs.end()};
}

uint64_t tab_dimension(int n) {
  if (n > 9)
    throw std::length_error("tab_dimension: degree capacity exceeded");
  std::set<Tableau> tabs;
  std::set<Permutation> visited;
  uint64_t classes = 0;
  for (const Permutation &p : symmetric_group(n)) {
    tabs.insert(rs_insert(p).first);
    if (!visited.count(p)) {
      ++classes;
      for (const Permutation &q : knuth_class(p))
        visited.insert(q);
    }
  }
  if (classes != tabs.size())
    throw std::logic_error("tab_dimension: class count disagrees with "
                           "insertion-tableau count");
  return classes;
}

RowSpace knuth_submodule(int n) {
  const uint64_t ambient = factorial_u64(n);
  std::vector<SparseVector> rows;
  std::set<Permutation> visited;
  for (const Permutation &p : symmetric_group(n)) {
    if (visited.count(p))
      continue;
    auto cls = knuth_class(p);
    const Permutation &base = *cls.begin();
    for (const Permutation &q : cls) {
      visited.insert(q);
      if (q == base)
        continue;
      LinComb diff = LinComb::basis(q);
      diff -= LinComb::basis(base);
      rows.push_back(to_sparse(diff));
    }
  }
  return RowSpace(ambient, std::move(rows));
}

PrReport verify_pr_theorems(int n, const LinalgConfig &cfg) {
  if (n > 7)
    throw std::length_error("verify_pr_theorems: degree capacity exceeded");
  PrReport report;
  report.degree = n;

  std::vector<RowSpace> K; // K[m] spans the Knuth submodule of degree m
  K.reserve(static_cast<size_t>(n) + 1);
  for (int m = 0; m <= n; ++m)
    K.push_back(knuth_submodule(m));

  auto expect_dependent = [&](const RowSpace &space, const SparseVector &v,
                              const std::string &what) {
    ++report.product_checks;
    if (space.member(v, cfg) == Membership::certainly_independent)
      report.failures.push_back(what);
  };

  // ideal property: S_r * K(s) and K(s) * S_r land in K(n)
  for (int s = 3; s <= n; ++s) {
    const int r = n - s;
    if (K[static_cast<size_t>(s)].row_count() == 0)
      continue;
    for (const Permutation &alpha : symmetric_group(r)) {
      const LinComb a = LinComb::basis(alpha);
      for (const SparseVector &row : K[static_cast<size_t>(s)].rows()) {
        LinComb d(s);
        for (const auto &[col, coeff] : row.entries)
          d.add(lehmer_unrank(s, col), Rat(coeff));
        expect_dependent(K[static_cast<size_t>(n)], to_sparse(conv_product(a, d)),
                         "product a*k not in K(" + std::to_string(n) + ")");
        expect_dependent(K[static_cast<size_t>(n)], to_sparse(conv_product(d, a)),
                         "product k*a not in K(" + std::to_string(n) + ")");
      }
    }
  }

  // coideal property: components of the coproduct of K(n) lie in
  // K(i) (x) Q[S_j] + Q[S_i] (x) K(j)
  std::map<std::pair<int, int>, RowSpace> tensor_spans;
  for (int i = 0; i <= n; ++i) {
    const int j = n - i;
    const uint64_t ambient = factorial_u64(i) * factorial_u64(j);
    std::vector<SparseVector> rows;
    for (const SparseVector &k : K[static_cast<size_t>(i)].rows())
      for (uint64_t b = 0; b < factorial_u64(j); ++b) {
        std::vector<std::pair<uint32_t, int64_t>> entries;
        for (const auto &[col, coeff] : k.entries)
          entries.emplace_back(
              static_cast<uint32_t>(col * factorial_u64(j) + b), coeff);
        rows.push_back(SparseVector::from_entries(ambient, std::move(entries)));
      }
    for (uint64_t a = 0; a < factorial_u64(i); ++a)
      for (const SparseVector &k : K[static_cast<size_t>(j)].rows()) {
        std::vector<std::pair<uint32_t, int64_t>> entries;
        for (const auto &[col, coeff] : k.entries)
          entries.emplace_back(
              static_cast<uint32_t>(a * factorial_u64(j) + col), coeff);
        rows.push_back(SparseVector::from_entries(ambient, std::move(entries)));
      }
    tensor_spans.emplace(std::make_pair(i, j),
                         RowSpace(ambient, std::move(rows)));
  }
  for (const SparseVector &row : K[static_cast<size_t>(n)].rows()) {
    LinComb d(n);
    for (const auto &[col, coeff] : row.entries)
      d.add(lehmer_unrank(n, col), Rat(coeff));
    TensorElem t = mr_coproduct(d);
    for (int i = 0; i <= n; ++i) {
      const int j = n - i;
      SparseVector comp = tensor_component_sparse(t, i, j);
      ++report.coproduct_checks;
      if (tensor_spans.at({i, j}).member(comp, cfg) ==
          Membership::certainly_independent)
        report.failures.push_back("coproduct component (" + std::to_string(i) +
                                  "," + std::to_string(j) +
                                  ") escapes K(x)S + S(x)K");
    }
  }

  // shifted shuffles of class vectors stay in the span of class vectors
  std::map<int, std::vector<Tableau>> tabs;
  for (int m = 1; m < n; ++m)
    tabs[m] = standard_tableaux(m);
  RowSpace class_span(factorial_u64(n));
  for (const Tableau &t : standard_tableaux(n))
    class_span.add_row(to_sparse(plactic_class_vector(t)));
  for (int r = 1; r < n; ++r) {
    const int s = n - r;
    for (const Tableau &t1 : tabs[r]) {
      const LinComb c1 = plactic_class_vector(t1);
      for (const Tableau &t2 : tabs[s]) {
        const LinComb c2 = plactic_class_vector(t2);
        ++report.shuffle_checks;
        if (class_span.member(to_sparse(shifted_shuffle(c1, c2)), cfg) ==
            Membership::certainly_independent)
          report.failures.push_back("shuffle c(t1)*'c(t2) escapes the class "
                                    "span in degree " +
                                    std::to_string(n));
      }
    }
  }
  return report;
}

} // namespace ppl
