#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ppl/linalg.hpp"
#include "ppl/numeric.hpp"
#include "ppl/perm.hpp"
#include "ppl/report.hpp"

namespace ppl {

int default_thread_count(); // PPL_THREADS environment variable, else cores

struct RunConfig {
  std::vector<uint64_t> primes{2147483647ull, 2147483629ull, 2147483587ull};
  int threads = 1;
  uint64_t exact_threshold = 1000000;
  std::string format = "plain";
  std::string cache_path; // empty disables the on-disk result cache
  uint64_t seed = 12345;

  void validate() const;
  LinalgConfig linalg() const;
  nlohmann::json to_json() const;
};

// Certified ideal ranks and quotient dimensions against both the partition
// formula and the snake numbers. Degrees above 9 report a capacity failure.
Report run_ideal_dims(int max_n, const RunConfig &cfg);

// Hopf-ideal membership checks plus the tableau-algebra ideal/coideal and
// class-vector span checks through the given total degree.
Report run_hopf_check(int max_n, const RunConfig &cfg);

// Snake numbers from the boustrophedon triangle; optionally check the
// partition formula and the brute-force counts.
Report run_snakes(int max_n, bool check_formulas, const RunConfig &cfg);

// The four exact series identities.
Report run_series_check(int order, const RunConfig &cfg);

// Hilbert coefficients, optionally compared against brute-force quotient
// dimensions, per-content character coefficients, and a q-specialization.
Report run_hilbert(int letters, int order, bool brute_force, bool multigraded,
                   const std::optional<Rat> &q, const RunConfig &cfg);

// Adjacent-pair and maximal intersections, and the block-space dimensions of
// odd-part partitions.
Report run_intersections(int max_n, const RunConfig &cfg);

std::string rs_printout(const Word &w);
std::string knuth_printout(const Word &w);

} // namespace ppl
