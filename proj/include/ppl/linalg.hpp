#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ppl/numeric.hpp"

namespace ppl {

struct LinalgConfig {
  // Three distinct primes just below 2^31; products fit in 64 bits.
  std::vector<uint64_t> primes{2147483647ull, 2147483629ull, 2147483587ull};
  // Fraction-free integer elimination runs when rows * columns <= this.
  uint64_t exact_threshold = 1000000;
  int threads = 1;
};

const LinalgConfig &default_linalg_config();

struct SparseVector {
  uint64_t ambient = 0;
  // sorted by column, columns in [0, ambient), no zero coefficients
  std::vector<std::pair<uint32_t, int64_t>> entries;

  SparseVector() = default;
  explicit SparseVector(uint64_t ambient_dim) : ambient(ambient_dim) {}

  static SparseVector unit(uint64_t ambient_dim, uint32_t col);
  // Sorts, merges duplicate columns, drops zeros, validates the range.
  static SparseVector
  from_entries(uint64_t ambient_dim,
               std::vector<std::pair<uint32_t, int64_t>> unsorted);

  bool is_zero() const { return entries.empty(); }
  bool operator==(const SparseVector &) const = default;
};

enum class RankCertificate { exact, multi_prime };
std::string to_string(RankCertificate c);

struct RankResult {
  uint64_t rank = 0;
  RankCertificate certificate = RankCertificate::exact;
  std::map<uint64_t, uint64_t> per_prime; // filled on the modular path
  bool primes_agree = true;
};

enum class Membership {
  certainly_independent,
  dependent_mod_all_primes,
  exact_dependent,
};
std::string to_string(Membership m);

// Word-sized prime field with Barrett reduction; requires 3 < p < 2^31.
class PrimeField {
public:
  explicit PrimeField(uint64_t p);
  uint64_t p() const { return p_; }
  uint64_t from_int64(int64_t x) const;
  uint64_t add(uint64_t a, uint64_t b) const {
    uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  uint64_t sub(uint64_t a, uint64_t b) const {
    return a >= b ? a - b : a + p_ - b;
  }
  uint64_t mul(uint64_t a, uint64_t b) const { return reduce(a * b); }
  uint64_t neg(uint64_t a) const { return a == 0 ? 0 : p_ - a; }
  uint64_t inv(uint64_t a) const;

private:
  uint64_t reduce(uint64_t a) const {
    const uint64_t q = static_cast<uint64_t>(
        (static_cast<unsigned __int128>(a) * magic_) >> 64);
    uint64_t r = a - q * p_;
    while (r >= p_)
      r -= p_;
    return r;
  }
  uint64_t p_ = 0;
  uint64_t magic_ = 0; // floor(2^64 / p)
};

// Row echelon form over F_p built by incremental insertion. Pivot rows are
// stored sparse with a normalized leading entry; reduction uses a dense
// scratch accumulator so each inserted row costs the fill it creates.
class ModEchelon {
public:
  ModEchelon(uint64_t ambient, uint64_t prime);

  // Returns true when the row extends the span.
  bool insert(const SparseVector &v);
  // Thread-safe full reduction; true iff v lies in the span.
  bool reduces_to_zero(const SparseVector &v) const;

  uint64_t rank() const { return rows_.size(); }
  uint64_t prime() const { return field_.p(); }
  size_t stored_entries() const;

private:
  PrimeField field_;
  uint64_t ambient_;
  std::vector<std::vector<std::pair<uint32_t, uint32_t>>> rows_;
  std::vector<int32_t> pivot_row_; // column -> row index, -1 if none
  // insert-side scratch (single writer)
  std::vector<uint64_t> acc_;
  std::vector<uint32_t> touched_;
};

// Exact echelon form over Q, optionally carrying tracking columns that
// record the combination of input rows producing each echelon row. Pivots
// are restricted to the main columns, so a row whose main part vanishes
// surfaces its tracking part as a left-nullspace combination.
class RatEchelon {
public:
  explicit RatEchelon(uint64_t main_cols, size_t tracking_cols = 0);

  struct InsertResult {
    bool extended = false;
    // set when the main part reduced to zero and tracking is enabled
    std::optional<std::vector<std::pair<uint32_t, Rat>>> null_combination;
  };
  InsertResult insert(const SparseVector &v,
                      std::optional<size_t> tracking_index = std::nullopt);
  bool reduces_to_zero(const SparseVector &v) const;

  uint64_t rank() const { return rows_.size(); }

private:
  uint64_t main_cols_;
  size_t tracking_cols_;
  std::vector<std::vector<std::pair<uint32_t, Rat>>> rows_;
  std::vector<int32_t> pivot_row_;
};

// Fraction-free (Bareiss) elimination on sparse integer rows; exact rank
// over Q. Intended for modest sizes, guarded by LinalgConfig::exact_threshold.
uint64_t bareiss_rank(uint64_t ambient, const std::vector<SparseVector> &rows);

class RowSpace {
public:
  RowSpace() = default;
  explicit RowSpace(uint64_t ambient) : ambient_(ambient) {}
  RowSpace(uint64_t ambient, std::vector<SparseVector> rows);
  RowSpace(RowSpace &&other) noexcept;
  RowSpace &operator=(RowSpace &&other) noexcept;
  RowSpace(const RowSpace &other); // copies rows, not caches
  RowSpace &operator=(const RowSpace &other);

  uint64_t ambient() const { return ambient_; }
  size_t row_count() const { return rows_.size(); }
  const std::vector<SparseVector> &rows() const { return rows_; }
  void add_row(SparseVector v);

  uint64_t rank_mod(uint64_t prime,
                    const LinalgConfig &cfg = default_linalg_config()) const;
  RankResult
  rank_certified(const LinalgConfig &cfg = default_linalg_config()) const;
  Membership member(const SparseVector &v,
                    const LinalgConfig &cfg = default_linalg_config()) const;

  // Cached echelon access (builds on demand).
  std::shared_ptr<const ModEchelon>
  echelon_mod(uint64_t prime,
              const LinalgConfig &cfg = default_linalg_config()) const;
  std::shared_ptr<const RatEchelon> echelon_exact() const;

  bool exact_feasible(const LinalgConfig &cfg) const;

private:
  void invalidate();

  uint64_t ambient_ = 0;
  std::vector<SparseVector> rows_;
  mutable std::mutex mutex_;
  mutable std::map<uint64_t, std::shared_ptr<const ModEchelon>> mod_cache_;
  mutable std::shared_ptr<const RatEchelon> exact_cache_;
  mutable std::optional<uint64_t> bareiss_cache_;
};

uint64_t sum_rank(const RowSpace &u, const RowSpace &v,
                  const LinalgConfig &cfg = default_linalg_config());
uint64_t intersection_dim(const RowSpace &u, const RowSpace &v,
                          const LinalgConfig &cfg = default_linalg_config());

// Explicit spanning rows of the intersection, computed exactly over Q via
// the left nullspace of the stacked rows; output rows are primitive integer
// vectors, inter-reduced so that row count equals the intersection dimension.
RowSpace intersection_basis(const RowSpace &u, const RowSpace &v,
                            const LinalgConfig &cfg = default_linalg_config());

} // namespace ppl
