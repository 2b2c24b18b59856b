#include "ppl/linalg.hpp"

#include <algorithm>
#include <future>
#include <queue>
#include <stdexcept>

namespace ppl {

const LinalgConfig &default_linalg_config() {
  static const LinalgConfig cfg;
  return cfg;
}

std::string to_string(RankCertificate c) {
  return c == RankCertificate::exact ? "exact" : "multi-prime";
}

std::string to_string(Membership m) {
  switch (m) {
  case Membership::certainly_independent:
    return "certainly-independent";
  case Membership::dependent_mod_all_primes:
    return "dependent-mod-all-primes";
  case Membership::exact_dependent:
    return "exact-dependent";
  }
  return "?";
}

SparseVector SparseVector::unit(uint64_t ambient_dim, uint32_t col) {
  SparseVector v(ambient_dim);
  if (col >= ambient_dim)
    throw std::invalid_argument("SparseVector::unit: column out of range");
  v.entries.emplace_back(col, 1);
  return v;
}

SparseVector SparseVector::from_entries(
    uint64_t ambient_dim, std::vector<std::pair<uint32_t, int64_t>> unsorted) {
  std::sort(unsorted.begin(), unsorted.end(),
            [](const auto &a, const auto &b) { return a.first < b.first; });
  SparseVector v(ambient_dim);
  for (const auto &[c, x] : unsorted) {
    if (c >= ambient_dim)
      throw std::invalid_argument("SparseVector: column out of range");
    if (!v.entries.empty() && v.entries.back().first == c)
      v.entries.back().second += x;
    else
      v.entries.emplace_back(c, x);
    if (v.entries.back().second == 0)
      v.entries.pop_back();
  }
  return v;
}

PrimeField::PrimeField(uint64_t p) : p_(p) {
  if (p <= 3 || p >= (1ull << 31))
    throw std::invalid_argument("PrimeField: prime must satisfy 3 < p < 2^31");
  Int z(static_cast<unsigned long>(p));
  if (mpz_probab_prime_p(z.get_mpz_t(), 30) == 0)
    throw std::invalid_argument("PrimeField: modulus is not prime");
  // floor(2^64 / p); p does not divide 2^64, so this equals (2^64 - 1) / p
  magic_ = ~uint64_t(0) / p;
}

uint64_t PrimeField::from_int64(int64_t x) const {
  int64_t m = x % static_cast<int64_t>(p_);
  if (m < 0)
    m += static_cast<int64_t>(p_);
  return static_cast<uint64_t>(m);
}

uint64_t PrimeField::inv(uint64_t a) const {
  if (a == 0)
    throw std::invalid_argument("PrimeField::inv: zero");
  int64_t t = 0, new_t = 1;
  int64_t r = static_cast<int64_t>(p_), new_r = static_cast<int64_t>(a);
  while (new_r != 0) {
    const int64_t q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (t < 0)
    t += static_cast<int64_t>(p_);
  return static_cast<uint64_t>(t);
}

ModEchelon::ModEchelon(uint64_t ambient, uint64_t prime)
    : field_(prime), ambient_(ambient),
      pivot_row_(static_cast<size_t>(ambient), -1),
      acc_(static_cast<size_t>(ambient), 0) {}

namespace {

using MinHeap =
    std::priority_queue<uint32_t, std::vector<uint32_t>, std::greater<>>;

} // namespace

bool ModEchelon::insert(const SparseVector &v) {
  if (v.ambient != ambient_)
    throw std::invalid_argument("ModEchelon::insert: ambient mismatch");
  MinHeap heap;
  touched_.clear();
  for (const auto &[c, x] : v.entries) {
    const uint64_t r = field_.from_int64(x);
    if (r) {
      acc_[c] = r;
      touched_.push_back(c);
      heap.push(c);
    }
  }
  int64_t leading = -1;
  while (!heap.empty()) {
    const uint32_t c = heap.top();
    heap.pop();
    if (acc_[c] == 0)
      continue;
    const int32_t r = pivot_row_[c];
    if (r < 0) {
      leading = c;
      break;
    }
    const uint64_t coeff = acc_[c];
    acc_[c] = 0;
    const auto &prow = rows_[static_cast<size_t>(r)];
    for (size_t k = 1; k < prow.size(); ++k) {
      const auto [c2, v2] = prow[k];
      const uint64_t old = acc_[c2];
      const uint64_t nv = field_.sub(old, field_.mul(coeff, v2));
      acc_[c2] = nv;
      if (old == 0 && nv != 0) {
        heap.push(c2);
        touched_.push_back(c2);
      }
    }
  }
  if (leading < 0) {
    for (uint32_t c : touched_)
      acc_[c] = 0;
    return false;
  }
  std::sort(touched_.begin(), touched_.end());
  touched_.erase(std::unique(touched_.begin(), touched_.end()),
                 touched_.end());
  const uint64_t lead_inv = field_.inv(acc_[static_cast<size_t>(leading)]);
  std::vector<std::pair<uint32_t, uint32_t>> row;
  for (uint32_t c : touched_) {
    if (acc_[c])
      row.emplace_back(c, static_cast<uint32_t>(field_.mul(acc_[c], lead_inv)));
    acc_[c] = 0;
  }
  pivot_row_[static_cast<size_t>(leading)] = static_cast<int32_t>(rows_.size());
  rows_.push_back(std::move(row));
  return true;
}

bool ModEchelon::reduces_to_zero(const SparseVector &v) const {
  if (v.ambient != ambient_)
    throw std::invalid_argument("ModEchelon: ambient mismatch");
  std::vector<uint64_t> acc(static_cast<size_t>(ambient_), 0);
  MinHeap heap;
  for (const auto &[c, x] : v.entries) {
    const uint64_t r = field_.from_int64(x);
    if (r) {
      acc[c] = r;
      heap.push(c);
    }
  }
  while (!heap.empty()) {
    const uint32_t c = heap.top();
    heap.pop();
    if (acc[c] == 0)
      continue;
    const int32_t r = pivot_row_[c];
    if (r < 0)
      return false;
    const uint64_t coeff = acc[c];
    acc[c] = 0;
    const auto &prow = rows_[static_cast<size_t>(r)];
    for (size_t k = 1; k < prow.size(); ++k) {
      const auto [c2, v2] = prow[k];
      const uint64_t old = acc[c2];
      const uint64_t nv = field_.sub(old, field_.mul(coeff, v2));
      acc[c2] = nv;
      if (old == 0 && nv != 0)
        heap.push(c2);
    }
  }
  return true;
}

size_t ModEchelon::stored_entries() const {
  size_t n = 0;
  for (const auto &r : rows_)
    n += r.size();
  return n;
}

RatEchelon::RatEchelon(uint64_t main_cols, size_t tracking_cols)
    : main_cols_(main_cols), tracking_cols_(tracking_cols),
      pivot_row_(static_cast<size_t>(main_cols), -1) {}

RatEchelon::InsertResult
RatEchelon::insert(const SparseVector &v, std::optional<size_t> tracking_index) {
  if (v.ambient != main_cols_)
    throw std::invalid_argument("RatEchelon::insert: ambient mismatch");
  const uint64_t width = main_cols_ + tracking_cols_;
  std::map<uint32_t, Rat> acc;
  for (const auto &[c, x] : v.entries)
    acc[c] = Rat(x);
  if (tracking_index) {
    if (*tracking_index >= tracking_cols_)
      throw std::invalid_argument("RatEchelon::insert: tracking index");
    acc[static_cast<uint32_t>(main_cols_ + *tracking_index)] = 1;
  }
  (void)width;
  InsertResult result;
  int64_t leading = -1;
  while (!acc.empty()) {
    auto it = acc.begin();
    const uint32_t c = it->first;
    if (it->second == 0) {
      acc.erase(it);
      continue;
    }
    if (c >= main_cols_)
      break; // main part fully reduced; the rest is tracking
    const int32_t r = pivot_row_[c];
    if (r < 0) {
      leading = c;
      break;
    }
    const Rat coeff = it->second;
    acc.erase(it);
    const auto &prow = rows_[static_cast<size_t>(r)];
    for (size_t k = 1; k < prow.size(); ++k) {
      Rat &slot = acc[prow[k].first];
      slot -= coeff * prow[k].second;
      if (slot == 0)
        acc.erase(prow[k].first);
    }
  }
  if (leading < 0) {
    if (tracking_cols_) {
      std::vector<std::pair<uint32_t, Rat>> combo;
      for (const auto &[c, val] : acc)
        if (val != 0 && c >= main_cols_)
          combo.emplace_back(static_cast<uint32_t>(c - main_cols_), val);
      result.null_combination = std::move(combo);
    }
    return result;
  }
  std::vector<std::pair<uint32_t, Rat>> row;
  const Rat lead = acc[static_cast<uint32_t>(leading)];
  for (const auto &[c, val] : acc)
    if (val != 0)
      row.emplace_back(c, val / lead);
  pivot_row_[static_cast<size_t>(leading)] = static_cast<int32_t>(rows_.size());
  rows_.push_back(std::move(row));
  result.extended = true;
  return result;
}

bool RatEchelon::reduces_to_zero(const SparseVector &v) const {
  if (v.ambient != main_cols_)
    throw std::invalid_argument("RatEchelon: ambient mismatch");
  std::map<uint32_t, Rat> acc;
  for (const auto &[c, x] : v.entries)
    acc[c] = Rat(x);
  while (!acc.empty()) {
    auto it = acc.begin();
    const uint32_t c = it->first;
    if (it->second == 0) {
      acc.erase(it);
      continue;
    }
    if (c >= main_cols_)
      break;
    const int32_t r = pivot_row_[c];
    if (r < 0)
      return false;
    const Rat coeff = it->second;
    acc.erase(it);
    const auto &prow = rows_[static_cast<size_t>(r)];
    for (size_t k = 1; k < prow.size(); ++k) {
      Rat &slot = acc[prow[k].first];
      slot -= coeff * prow[k].second;
      if (slot == 0)
        acc.erase(prow[k].first);
    }
  }
  return true;
}

namespace {

struct BareissRow {
  std::vector<std::pair<uint32_t, Int>> entries;
  size_t epoch = 0;
  bool active = true;

  bool has(uint32_t col, size_t *pos = nullptr) const {
    auto it = std::lower_bound(
        entries.begin(), entries.end(), col,
        [](const auto &e, uint32_t c) { return e.first < c; });
    if (it == entries.end() || it->first != col)
      return false;
    if (pos)
      *pos = static_cast<size_t>(it - entries.begin());
    return true;
  }
};

// entries *= pivots[target] / pivots[row.epoch], exactly
void materialize(BareissRow &row, const std::vector<Int> &pivots,
                 size_t target) {
  if (row.epoch == target)
    return;
  const Int &num = pivots[target];
  const Int &den = pivots[row.epoch];
  for (auto &[c, x] : row.entries) {
    x *= num;
    mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), den.get_mpz_t());
  }
  row.epoch = target;
}

} // namespace

uint64_t bareiss_rank(uint64_t ambient, const std::vector<SparseVector> &rows_in) {
  std::vector<BareissRow> rows;
  std::vector<uint32_t> colcount(static_cast<size_t>(ambient), 0);
  for (const auto &v : rows_in) {
    if (v.is_zero())
      continue;
    BareissRow r;
    for (const auto &[c, x] : v.entries) {
      r.entries.emplace_back(c, Int(static_cast<long>(x)));
      ++colcount[c];
    }
    rows.push_back(std::move(r));
  }
  std::vector<Int> pivots;
  pivots.emplace_back(1);
  uint64_t rank = 0;
  size_t remaining = rows.size();
  while (remaining > 0) {
    // Markowitz-lite: pivot column with fewest nonzeros, lowest index on ties
    uint32_t pivot_col = 0;
    uint32_t best = UINT32_MAX;
    for (uint32_t c = 0; c < ambient; ++c) {
      if (colcount[c] > 0 && colcount[c] < best) {
        best = colcount[c];
        pivot_col = c;
      }
    }
    // pivot row: fewest entries among active rows containing the column
    size_t pivot_idx = SIZE_MAX;
    size_t best_nnz = SIZE_MAX;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (!rows[i].active)
        continue;
      if (rows[i].has(pivot_col) && rows[i].entries.size() < best_nnz) {
        best_nnz = rows[i].entries.size();
        pivot_idx = i;
      }
    }
    const size_t step = pivots.size(); // this is step k, previous pivot is k-1
    BareissRow &prow = rows[pivot_idx];
    materialize(prow, pivots, step - 1);
    size_t ppos = 0;
    prow.has(pivot_col, &ppos);
    const Int pivot_val = prow.entries[ppos].second;

    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == pivot_idx || !rows[i].active)
        continue;
      size_t pos = 0;
      if (!rows[i].has(pivot_col, &pos))
        continue;
      materialize(rows[i], pivots, step - 1);
      rows[i].has(pivot_col, &pos);
      const Int coeff = rows[i].entries[pos].second;
      // row_i <- (pivot_val * row_i - coeff * prow) / pivots[step-1]
      std::vector<std::pair<uint32_t, Int>> merged;
      merged.reserve(rows[i].entries.size() + prow.entries.size());
      size_t a = 0, b = 0;
      const Int &den = pivots[step - 1];
      auto emit = [&](uint32_t col, Int val) {
        if (val == 0) {
          --colcount[col];
          return;
        }
        mpz_divexact(val.get_mpz_t(), val.get_mpz_t(), den.get_mpz_t());
        merged.emplace_back(col, std::move(val));
      };
      while (a < rows[i].entries.size() || b < prow.entries.size()) {
        if (b == prow.entries.size() ||
            (a < rows[i].entries.size() &&
             rows[i].entries[a].first < prow.entries[b].first)) {
          emit(rows[i].entries[a].first,
               pivot_val * rows[i].entries[a].second);
          ++a;
        } else if (a == rows[i].entries.size() ||
                   prow.entries[b].first < rows[i].entries[a].first) {
          ++colcount[prow.entries[b].first];
          emit(prow.entries[b].first, -coeff * prow.entries[b].second);
          ++b;
        } else {
          emit(rows[i].entries[a].first,
               pivot_val * rows[i].entries[a].second -
                   coeff * prow.entries[b].second);
          ++a;
          ++b;
        }
      }
      rows[i].entries = std::move(merged);
      rows[i].epoch = step;
      if (rows[i].entries.empty()) {
        rows[i].active = false;
        --remaining;
      }
    }
    for (const auto &[c, x] : prow.entries)
      --colcount[c];
    prow.active = false;
    prow.entries.clear();
    --remaining;
    pivots.push_back(pivot_val);
    ++rank;
  }
  return rank;
}

RowSpace::RowSpace(uint64_t ambient, std::vector<SparseVector> rows)
    : ambient_(ambient), rows_(std::move(rows)) {
  for (const auto &r : rows_)
    if (r.ambient != ambient_)
      throw std::invalid_argument("RowSpace: row ambient mismatch");
}

RowSpace::RowSpace(RowSpace &&other) noexcept {
  std::lock_guard<std::mutex> lock(other.mutex_);
  ambient_ = other.ambient_;
  rows_ = std::move(other.rows_);
  mod_cache_ = std::move(other.mod_cache_);
  exact_cache_ = std::move(other.exact_cache_);
  bareiss_cache_ = other.bareiss_cache_;
}

RowSpace &RowSpace::operator=(RowSpace &&other) noexcept {
  if (this != &other) {
    std::scoped_lock lock(mutex_, other.mutex_);
    ambient_ = other.ambient_;
    rows_ = std::move(other.rows_);
    mod_cache_ = std::move(other.mod_cache_);
    exact_cache_ = std::move(other.exact_cache_);
    bareiss_cache_ = other.bareiss_cache_;
  }
  return *this;
}

RowSpace::RowSpace(const RowSpace &other)
    : ambient_(other.ambient_), rows_(other.rows_) {}

RowSpace &RowSpace::operator=(const RowSpace &other) {
  if (this != &other) {
    ambient_ = other.ambient_;
    rows_ = other.rows_;
    invalidate();
  }
  return *this;
}

void RowSpace::add_row(SparseVector v) {
  if (v.ambient != ambient_)
    throw std::invalid_argument("RowSpace::add_row: ambient mismatch");
  rows_.push_back(std::move(v));
  invalidate();
}

void RowSpace::invalidate() {
  std::lock_guard<std::mutex> lock(mutex_);
  mod_cache_.clear();
  exact_cache_.reset();
  bareiss_cache_.reset();
}

std::shared_ptr<const ModEchelon>
RowSpace::echelon_mod(uint64_t prime, const LinalgConfig &) const {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = mod_cache_.find(prime);
    if (it != mod_cache_.end())
      return it->second;
  }
  auto ech = std::make_shared<ModEchelon>(ambient_, prime);
  for (const auto &r : rows_)
    ech->insert(r);
  std::lock_guard<std::mutex> lock(mutex_);
  auto [it, inserted] = mod_cache_.emplace(prime, ech);
  return it->second;
}

std::shared_ptr<const RatEchelon> RowSpace::echelon_exact() const {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    if (exact_cache_)
      return exact_cache_;
  }
  auto ech = std::make_shared<RatEchelon>(ambient_);
  for (const auto &r : rows_)
    ech->insert(r);
  std::lock_guard<std::mutex> lock(mutex_);
  if (!exact_cache_)
    exact_cache_ = ech;
  return exact_cache_;
}

bool RowSpace::exact_feasible(const LinalgConfig &cfg) const {
  return static_cast<uint64_t>(rows_.size()) * ambient_ <= cfg.exact_threshold;
}

uint64_t RowSpace::rank_mod(uint64_t prime, const LinalgConfig &cfg) const {
  return echelon_mod(prime, cfg)->rank();
}

RankResult RowSpace::rank_certified(const LinalgConfig &cfg) const {
  RankResult res;
  if (rows_.empty())
    return res;
  if (exact_feasible(cfg)) {
    {
      std::lock_guard<std::mutex> lock(mutex_);
      if (bareiss_cache_) {
        res.rank = *bareiss_cache_;
        return res;
      }
    }
    const uint64_t r = bareiss_rank(ambient_, rows_);
    std::lock_guard<std::mutex> lock(mutex_);
    bareiss_cache_ = r;
    res.rank = r;
    res.certificate = RankCertificate::exact;
    return res;
  }
  res.certificate = RankCertificate::multi_prime;
  if (cfg.threads > 1 && cfg.primes.size() > 1) {
    std::vector<std::future<uint64_t>> futs;
    futs.reserve(cfg.primes.size());
    for (uint64_t p : cfg.primes)
      futs.push_back(std::async(std::launch::async,
                                [this, p, &cfg] { return rank_mod(p, cfg); }));
    for (size_t i = 0; i < cfg.primes.size(); ++i)
      res.per_prime[cfg.primes[i]] = futs[i].get();
  } else {
    for (uint64_t p : cfg.primes)
      res.per_prime[p] = rank_mod(p, cfg);
  }
  uint64_t best = 0;
  for (const auto &[p, r] : res.per_prime) {
    best = std::max(best, r);
    if (r != res.per_prime.begin()->second)
      res.primes_agree = false;
  }
  res.rank = best;
  return res;
}

Membership RowSpace::member(const SparseVector &v,
                            const LinalgConfig &cfg) const {
  if (v.ambient != ambient_)
    throw std::invalid_argument("RowSpace::member: ambient mismatch");
  if (v.is_zero())
    return Membership::exact_dependent;
  for (uint64_t p : cfg.primes)
    if (!echelon_mod(p, cfg)->reduces_to_zero(v))
      return Membership::certainly_independent;
  if (exact_feasible(cfg)) {
    if (echelon_exact()->reduces_to_zero(v))
      return Membership::exact_dependent;
    return Membership::certainly_independent;
  }
  return Membership::dependent_mod_all_primes;
}

uint64_t sum_rank(const RowSpace &u, const RowSpace &v,
                  const LinalgConfig &cfg) {
  if (u.ambient() != v.ambient())
    throw std::invalid_argument("sum_rank: ambient dimension mismatch");
  std::vector<SparseVector> rows = u.rows();
  rows.insert(rows.end(), v.rows().begin(), v.rows().end());
  RowSpace sum(u.ambient(), std::move(rows));
  return sum.rank_certified(cfg).rank;
}

uint64_t intersection_dim(const RowSpace &u, const RowSpace &v,
                          const LinalgConfig &cfg) {
  const uint64_t ru = u.rank_certified(cfg).rank;
  const uint64_t rv = v.rank_certified(cfg).rank;
  const uint64_t rs = sum_rank(u, v, cfg);
  return ru + rv - rs;
}

namespace {

SparseVector primitive_integer_vector(const std::map<uint32_t, Rat> &entries,
                                      uint64_t ambient) {
  Int lcm_den = 1;
  for (const auto &[c, val] : entries) {
    if (val == 0)
      continue;
    Int den = val.get_den();
    Int g;
    mpz_gcd(g.get_mpz_t(), lcm_den.get_mpz_t(), den.get_mpz_t());
    lcm_den = lcm_den / g * den;
  }
  Int content = 0;
  std::vector<std::pair<uint32_t, Int>> scaled;
  for (const auto &[c, val] : entries) {
    if (val == 0)
      continue;
    Int num = val.get_num() * (lcm_den / val.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), num.get_mpz_t());
    scaled.emplace_back(c, std::move(num));
  }
  SparseVector out(ambient);
  if (scaled.empty())
    return out;
  if (scaled.front().second < 0)
    content = -content;
  for (auto &[c, num] : scaled) {
    Int q = num / content;
    out.entries.emplace_back(c, to_int64(q));
  }
  return out;
}

} // namespace

RowSpace intersection_basis(const RowSpace &u, const RowSpace &v,
                            const LinalgConfig &cfg) {
  if (u.ambient() != v.ambient())
    throw std::invalid_argument("intersection_basis: ambient mismatch");
  const uint64_t ambient = u.ambient();
  const size_t total = u.row_count() + v.row_count();
  if (ambient * total > 200000000ull)
    throw std::length_error("intersection_basis: stacked system too large");
  RatEchelon ech(ambient, total);
  std::vector<SparseVector> found;
  size_t index = 0;
  auto feed = [&](const SparseVector &row, bool from_u) {
    auto ins = ech.insert(row, index++);
    if (!ins.null_combination)
      return;
    if (from_u)
      return; // dependency among the u-rows alone spans only zero
    std::map<uint32_t, Rat> w;
    for (const auto &[ri, coeff] : *ins.null_combination) {
      if (ri >= u.row_count())
        continue;
      for (const auto &[c, x] : u.rows()[ri].entries) {
        Rat &slot = w[c];
        slot += coeff * Rat(x);
      }
    }
    SparseVector vec = primitive_integer_vector(w, ambient);
    if (!vec.is_zero())
      found.push_back(std::move(vec));
  };
  for (const auto &row : u.rows())
    feed(row, true);
  for (const auto &row : v.rows())
    feed(row, false);
  // inter-reduce so the row count equals the intersection dimension
  RatEchelon dedup(ambient);
  std::vector<SparseVector> kept;
  for (auto &vec : found)
    if (dedup.insert(vec).extended)
      kept.push_back(std::move(vec));
  (void)cfg;
  return RowSpace(ambient, std::move(kept));
}

} // namespace ppl
