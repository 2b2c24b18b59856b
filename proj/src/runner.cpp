#include "ppl/runner.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <thread>

#include "ppl/hopf.hpp"
#include "ppl/plactic.hpp"
#include "ppl/preplactic.hpp"
#include "ppl/series.hpp"

namespace ppl {

int default_thread_count() {
  if (const char *env = std::getenv("PPL_THREADS")) {
    const int n = std::atoi(env);
    if (n >= 1)
      return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

void RunConfig::validate() const {
  std::set<uint64_t> distinct(primes.begin(), primes.end());
  if (distinct.size() != primes.size())
    throw std::invalid_argument("config: primes must be pairwise distinct");
  for (uint64_t p : primes)
    PrimeField check(p); // throws on composite or out-of-range moduli
  if (threads < 1)
    throw std::invalid_argument("config: threads must be >= 1");
}

LinalgConfig RunConfig::linalg() const {
  LinalgConfig cfg;
  cfg.primes = primes;
  cfg.exact_threshold = exact_threshold;
  cfg.threads = threads;
  return cfg;
}

nlohmann::json RunConfig::to_json() const {
  nlohmann::json j;
  j["primes"] = primes;
  j["threads"] = threads;
  j["exact_threshold"] = exact_threshold;
  j["format"] = format;
  j["seed"] = seed;
  if (!cache_path.empty())
    j["cache"] = cache_path;
  return j;
}

namespace {

std::string now_iso8601() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

// Optional on-disk rank cache; JSON array of records
// {computation-id, degree, prime, rank, row-count, timestamp}.
class ResultCache {
public:
  explicit ResultCache(std::string path) : path_(std::move(path)) {
    if (path_.empty())
      return;
    std::ifstream in(path_);
    if (!in)
      return;
    nlohmann::json j;
    in >> j;
    if (j.is_array())
      records_ = j;
    else
      records_ = nlohmann::json::array();
  }

  bool enabled() const { return !path_.empty(); }

  std::optional<uint64_t> lookup(const std::string &id, uint64_t prime) const {
    if (!enabled())
      return std::nullopt;
    for (const auto &rec : records_)
      if (rec.value("computation-id", "") == id &&
          rec.value("prime", uint64_t(0)) == prime)
        return rec.value("rank", uint64_t(0));
    return std::nullopt;
  }

  void store(const std::string &id, int degree, uint64_t prime, uint64_t rank,
             uint64_t row_count) {
    if (!enabled() || lookup(id, prime))
      return;
    nlohmann::json rec;
    rec["computation-id"] = id;
    rec["degree"] = degree;
    rec["prime"] = prime;
    rec["rank"] = rank;
    rec["row-count"] = row_count;
    rec["timestamp"] = now_iso8601();
    records_.push_back(std::move(rec));
    dirty_ = true;
  }

  void save() const {
    if (!enabled() || !dirty_)
      return;
    std::ofstream out(path_);
    out << records_.dump(2) << '\n';
  }

private:
  std::string path_;
  nlohmann::json records_ = nlohmann::json::array();
  mutable bool dirty_ = false;
};

class Timer {
public:
  int64_t elapsed_ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

Claim make_claim(std::string id, std::string ref, std::string expected,
                 std::string computed, std::string note = "") {
  Claim c;
  c.id = std::move(id);
  c.paper_ref = std::move(ref);
  c.expected = std::move(expected);
  c.computed = std::move(computed);
  c.status = (c.expected == c.computed) ? "ok" : "fail";
  c.note = std::move(note);
  return c;
}

Claim info_claim(std::string id, std::string ref, std::string value,
                 std::string note = "") {
  Claim c;
  c.id = std::move(id);
  c.paper_ref = std::move(ref);
  c.expected = "-";
  c.computed = std::move(value);
  c.status = "info";
  c.note = std::move(note);
  return c;
}

} // namespace

Report run_ideal_dims(int max_n, const RunConfig &cfg) {
  Timer timer;
  cfg.validate();
  Report report;
  report.command = "ideal-dims";
  report.config = cfg.to_json();
  const LinalgConfig lin = cfg.linalg();
  ResultCache cache(cfg.cache_path);
  const std::vector<Int> snakes = snake_oracle(std::min(max_n, 9) + 1);
  for (int n = 0; n <= max_n; ++n) {
    if (n > 9) {
      Claim c;
      c.id = "capacity n=" + std::to_string(n);
      c.paper_ref = "artifact capacity";
      c.expected = "n <= 9";
      c.computed = "n = " + std::to_string(n);
      c.status = "fail";
      report.claims.push_back(std::move(c));
      break;
    }
    const uint64_t nfact = factorial_u64(n);
    const Int expected_ideal = formula_my(n);
    const Int expected_pp = snakes[static_cast<size_t>(n + 1)];
    std::cerr << "ideal-dims: degree " << n << " ("
              << (n < 3 ? 0 : (n - 2) * nfact / 6) << " generators)"
              << std::endl;

    DimResult dim;
    std::string note;
    const std::string comp_id = "ideal-rank:n=" + std::to_string(n);
    bool cached = false;
    if (cache.enabled() && n >= 3) {
      if (auto exact = cache.lookup(comp_id, 0)) {
        dim = {*exact, RankCertificate::exact, true};
        cached = true;
      } else {
        std::vector<uint64_t> ranks;
        for (uint64_t p : cfg.primes)
          if (auto r = cache.lookup(comp_id, p))
            ranks.push_back(*r);
        if (ranks.size() == cfg.primes.size()) {
          dim = {*std::max_element(ranks.begin(), ranks.end()),
                 RankCertificate::multi_prime,
                 std::set<uint64_t>(ranks.begin(), ranks.end()).size() == 1};
          cached = true;
        }
      }
    }
    if (!cached) {
      dim = ideal_dim(n, lin);
      if (n >= 3 && cache.enabled()) {
        const uint64_t rows = (static_cast<uint64_t>(n) - 2) * nfact / 6;
        if (dim.certificate == RankCertificate::exact)
          cache.store(comp_id, n, 0, dim.value, rows);
        else
          for (uint64_t p : cfg.primes)
            cache.store(comp_id, n, p, ideal_space(n).rank_mod(p, lin), rows);
      }
    }
    note = to_string(dim.certificate);
    if (cached)
      note += ", cache-hit";
    if (!dim.primes_agree) {
      Claim c;
      c.id = "prime-agreement n=" + std::to_string(n);
      c.paper_ref = "modular rank consistency";
      c.expected = "all configured primes agree";
      c.computed = "disagreement";
      c.status = "fail";
      report.claims.push_back(std::move(c));
    }
    report.claims.push_back(make_claim(
        "ideal_dim n=" + std::to_string(n), "ideal dimension formula",
        expected_ideal.get_str(), std::to_string(dim.value), note));
    report.claims.push_back(make_claim(
        "preplactic_dim n=" + std::to_string(n),
        "quotient dimensions are snake numbers", expected_pp.get_str(),
        std::to_string(nfact - dim.value), note));
  }
  cache.save();
  report.elapsed_ms = timer.elapsed_ms();
  return report;
}

Report run_hopf_check(int max_n, const RunConfig &cfg) {
  Timer timer;
  cfg.validate();
  Report report;
  report.command = "hopf-check";
  report.config = cfg.to_json();
  const LinalgConfig lin = cfg.linalg();
  if (max_n > 7) {
    Claim c;
    c.id = "capacity";
    c.paper_ref = "artifact capacity";
    c.expected = "max-n <= 7";
    c.computed = "max-n = " + std::to_string(max_n);
    c.status = "fail";
    report.claims.push_back(std::move(c));
    report.elapsed_ms = timer.elapsed_ms();
    return report;
  }
  for (int n = 3; n <= max_n; ++n) {
    std::cerr << "hopf-check: ideal degree " << n << std::endl;
    HopfIdealReport h = verify_hopf_ideal(n, lin);
    report.claims.push_back(make_claim(
        "hopf-ideal products n=" + std::to_string(n),
        "the ideal is stable under convolution products", "0 failures",
        std::to_string(h.failures.size()) + " failures",
        std::to_string(h.product_checks) + " checks"));
    report.claims.push_back(make_claim(
        "hopf-ideal coproducts n=" + std::to_string(n),
        "the ideal is a coideal", "0 failures",
        std::to_string(std::count_if(h.failures.begin(), h.failures.end(),
                                     [](const std::string &f) {
                                       return f.find("coproduct") !=
                                              std::string::npos;
                                     })) +
            " failures",
        std::to_string(h.coproduct_checks) + " checks"));
  }
  for (int n = 3; n <= max_n; ++n) {
    std::cerr << "hopf-check: tableau algebra degree " << n << std::endl;
    PrReport pr = verify_pr_theorems(n, lin);
    report.claims.push_back(make_claim(
        "knuth-ideal n=" + std::to_string(n),
        "the Knuth submodule is an ideal and a coideal", "0 failures",
        std::to_string(pr.failures.size()) + " failures",
        std::to_string(pr.product_checks + pr.coproduct_checks) + " checks"));
    report.claims.push_back(make_claim(
        "class-vector shuffles n=" + std::to_string(n),
        "plactic classes span a shuffle subalgebra", "0 failures",
        std::to_string(std::count_if(pr.failures.begin(), pr.failures.end(),
                                     [](const std::string &f) {
                                       return f.find("shuffle") !=
                                              std::string::npos;
                                     })) +
            " failures",
        std::to_string(pr.shuffle_checks) + " checks"));
  }
  report.elapsed_ms = timer.elapsed_ms();
  return report;
}

Report run_snakes(int max_n, bool check_formulas, const RunConfig &cfg) {
  Timer timer;
  cfg.validate();
  Report report;
  report.command = "snakes";
  report.config = cfg.to_json();
  const std::vector<Int> e = snake_oracle(max_n + 1);
  for (int n = 0; n <= max_n; ++n)
    report.claims.push_back(info_claim("E(" + std::to_string(n) + ")",
                                       "snake numbers",
                                       e[static_cast<size_t>(n)].get_str()));
  if (check_formulas) {
    for (int n = 0; n <= max_n; ++n) {
      const Rat be = formula_BE(n);
      const Rat scaled = be * Rat(factorial(n));
      report.claims.push_back(make_claim(
          "n!*BE(" + std::to_string(n) + ")", "snake partition formula",
          e[static_cast<size_t>(n + 1)].get_str(), rat_to_string(scaled)));
    }
    for (int n = 0; n <= std::min(max_n, 10); ++n)
      report.claims.push_back(make_claim(
          "brute-force E(" + std::to_string(n) + ")",
          "down-up permutation count", e[static_cast<size_t>(n)].get_str(),
          snake_brute_force(n).get_str()));
  }
  report.elapsed_ms = timer.elapsed_ms();
  return report;
}

Report run_series_check(int order, const RunConfig &cfg) {
  Timer timer;
  cfg.validate();
  Report report;
  report.command = "series-check";
  report.config = cfg.to_json();
  auto add_check = [&](const SeriesCheck &c, const std::string &ref) {
    Claim claim;
    claim.id = c.name + " order=" + std::to_string(order);
    claim.paper_ref = ref;
    claim.expected = "identity holds";
    claim.computed = c.ok ? "identity holds" : "mismatch: " + c.detail;
    claim.status = c.ok ? "ok" : "fail";
    report.claims.push_back(std::move(claim));
  };
  auto degenerate = [&](const std::string &name, const std::string &ref) {
    Claim claim;
    claim.id = name + " order=" + std::to_string(order);
    claim.paper_ref = ref;
    claim.expected = "identity holds";
    claim.computed = "identity holds";
    claim.status = "ok";
    claim.note = "degenerate at this order";
    report.claims.push_back(std::move(claim));
  };
  if (order >= 2)
    add_check(verify_andre_ode(order), "snake EGF differential equation");
  else
    degenerate("andre_ode", "snake EGF differential equation");
  if (order >= 1)
    add_check(verify_exp_identity(order), "snake exponential identity");
  else
    degenerate("exp_identity", "snake exponential identity");
  add_check(factorial_series_check(order), "factorial series exponential form");
  add_check(syt_series_check(order), "standard tableaux generating series");
  report.elapsed_ms = timer.elapsed_ms();
  return report;
}

namespace {

std::string content_to_string(const std::vector<int> &content) {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < content.size(); ++i) {
    if (i)
      os << ',';
    os << content[i];
  }
  os << ')';
  return os.str();
}

} // namespace

Report run_hilbert(int letters, int order, bool brute_force, bool multigraded,
                   const std::optional<Rat> &q, const RunConfig &cfg) {
  Timer timer;
  cfg.validate();
  Report report;
  report.command = "hilbert";
  report.config = cfg.to_json();
  report.config["letters"] = letters;
  report.config["order"] = order;
  const LinalgConfig lin = cfg.linalg();
  const Series h = hilbert_series(letters, order);
  if (!brute_force && !multigraded && !q) {
    for (int n = 0; n <= order; ++n)
      report.claims.push_back(info_claim(
          "hilbert D=" + std::to_string(letters) + " t^" + std::to_string(n),
          "Hilbert series of the cubic quotient", rat_to_string(h.coeff(n))));
  }
  if (brute_force || multigraded || q) {
    std::cerr << "hilbert: brute-force quotient dimensions up to degree "
              << order << std::endl;
    const QuotientDims dims =
        pseudoplactic_bruteforce_dims(letters, order, multigraded, lin);
    for (int n = 0; n <= order; ++n)
      report.claims.push_back(make_claim(
          "quotient dim D=" + std::to_string(letters) + " n=" +
              std::to_string(n),
          "Hilbert series of the cubic quotient", rat_to_string(h.coeff(n)),
          std::to_string(dims.dims[static_cast<size_t>(n)]),
          dims.exact[static_cast<size_t>(n)] ? "exact" : "multi-prime"));
    if (multigraded) {
      const MultiSeries ch = character_expand(letters, order);
      for (const auto &[content, dim] : dims.dims_by_content)
        report.claims.push_back(make_claim(
            "character coeff " + content_to_string(content),
            "character of the cubic quotient", rat_to_string(ch.coeff(content)),
            std::to_string(dim)));
      // specialization consistency
      const Series spec = ch.specialize_single_variable();
      bool matches = true;
      for (int n = 0; n <= order; ++n)
        matches = matches && spec.coeff(n) == h.coeff(n);
      report.claims.push_back(make_claim(
          "character specialization", "character specializes to the Hilbert "
                                      "series",
          "equal", matches ? "equal" : "different"));
    }
    if (q) {
      const QuotientDims qdims =
          pseudoplactic_q_dims(letters, order, *q, false, lin);
      for (int n = 0; n <= order; ++n) {
        Claim c = info_claim(
            "q-quotient dim q=" + rat_to_string(*q) + " n=" + std::to_string(n),
            "deformed quotient dimensions (reported, not asserted)",
            std::to_string(qdims.dims[static_cast<size_t>(n)]));
        c.note = qdims.dims[static_cast<size_t>(n)] ==
                         dims.dims[static_cast<size_t>(n)]
                     ? "matches q=1"
                     : "differs from q=1; specialized q may be singular";
        report.claims.push_back(std::move(c));
      }
    }
  }
  report.elapsed_ms = timer.elapsed_ms();
  return report;
}

Report run_intersections(int max_n, const RunConfig &cfg) {
  Timer timer;
  cfg.validate();
  Report report;
  report.command = "intersections";
  report.config = cfg.to_json();
  const LinalgConfig lin = cfg.linalg();
  const int cap = std::min(max_n, 7);
  for (int n = 4; n <= cap; ++n) {
    std::cerr << "intersections: adjacent pairs, degree " << n << std::endl;
    ZeroIntersectionReport z = verify_zero_intersection(n, lin, true);
    for (const IntersectionPair &pair : z.pairs) {
      const std::string id = "dim A(1^" + std::to_string(pair.left_offset) +
                             " 3 ...) ^ A(1^" +
                             std::to_string(pair.right_offset) + " 3 ...) n=" +
                             std::to_string(n);
      if (pair.adjacent)
        report.claims.push_back(make_claim(
            id, "adjacent elementary subspaces intersect trivially", "0",
            std::to_string(pair.dim)));
      else
        report.claims.push_back(info_claim(
            id, "non-adjacent intersection (reported)",
            std::to_string(pair.dim)));
    }
  }
  for (int m = 3; m <= cap; m += 2) {
    std::cerr << "intersections: maximal intersection, degree " << m
              << std::endl;
    report.claims.push_back(make_claim(
        "maximal intersection m=" + std::to_string(m),
        "the odd-degree maximal intersection is a line", "1",
        std::to_string(verify_maximal_intersection(m, lin))));
  }
  for (int n = 1; n <= cap; ++n) {
    for (const Partition &lam : odd_part_partitions(n)) {
      DimResult d = dim_A_lambda(lam, lin);
      Int expected = factorial(n);
      for (int part : lam.parts)
        expected /= factorial(part);
      report.claims.push_back(make_claim(
          "dim A_" + lam.to_string(), "block space dimension",
          expected.get_str(), std::to_string(d.value),
          to_string(d.certificate)));
    }
  }
  report.elapsed_ms = timer.elapsed_ms();
  return report;
}

std::string rs_printout(const Word &w) {
  const Permutation p{Word(w)};
  const auto [P, Q] = rs_insert(p);
  std::ostringstream os;
  os << "word: " << word_to_string(w) << "\nP:\n"
     << P.to_string() << "\nQ:\n"
     << Q.to_string() << '\n';
  return os.str();
}

std::string knuth_printout(const Word &w) {
  const Permutation p{Word(w)};
  std::ostringstream os;
  os << "class of " << word_to_string(w) << ":\n";
  for (const Permutation &q : knuth_class(p))
    os << "  " << word_to_string(q.word()) << '\n';
  return os.str();
}

} // namespace ppl
