#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ppl/perm.hpp"
#include "ppl/report.hpp"
#include "ppl/runner.hpp"

namespace {

ppl::Rat parse_rational(const std::string &s) {
  ppl::Rat q;
  if (q.set_str(s, 10) != 0)
    throw CLI::ValidationError("--q", "not a rational number: " + s);
  q.canonicalize();
  return q;
}

int emit(const ppl::Report &report, const ppl::RunConfig &cfg) {
  std::cout << report.render(cfg.format);
  return report.all_ok() ? 0 : 1;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"pre-plactic quotient verification toolkit"};
  app.require_subcommand(1);
  app.fallthrough(); // global flags may follow the subcommand

  ppl::RunConfig cfg;
  cfg.threads = ppl::default_thread_count();
  app.add_option("--primes", cfg.primes,
                 "moduli for the modular rank path (distinct primes > 3)");
  app.add_option("--threads", cfg.threads, "worker threads");
  app.add_option("--exact-threshold", cfg.exact_threshold,
                 "run fraction-free elimination when rows*columns is below");
  app.add_option("--format", cfg.format, "plain | json | csv")
      ->check(CLI::IsMember({"plain", "json", "csv"}));
  app.add_option("--cache", cfg.cache_path, "on-disk rank cache (opt-in)");
  app.add_option("--seed", cfg.seed, "seed for sampled checks");

  int max_n = 6;
  int order = 16;
  int letters = 2;
  bool check_formulas = false;
  bool brute_force = false;
  bool multigraded = false;
  std::string q_text;
  std::string word_text;

  auto *ideal = app.add_subcommand("ideal-dims",
                                   "certified ideal and quotient dimensions");
  ideal->add_option("--max-n", max_n, "largest degree (up to 8; 9 is slow)")
      ->required();

  auto *hopf = app.add_subcommand("hopf-check",
                                  "ideal/coideal membership verification");
  hopf->add_option("--max-n", max_n)->required();

  auto *snakes = app.add_subcommand("snakes", "snake numbers and formulas");
  snakes->add_option("--max-n", max_n)->required();
  snakes->add_flag("--check-formulas", check_formulas,
                   "verify the partition formula and brute-force counts");

  auto *series = app.add_subcommand("series-check", "exact series identities");
  series->add_option("--order", order)->required();

  auto *hilbert = app.add_subcommand("hilbert", "Hilbert series and "
                                                "brute-force comparison");
  hilbert->add_option("--letters", letters)->required();
  hilbert->add_option("--order", order)->required();
  hilbert->add_flag("--brute-force", brute_force,
                    "compare against quotient dimensions");
  hilbert->add_flag("--multigraded", multigraded,
                    "compare per-content dimensions against the character");
  hilbert->add_option("--q", q_text,
                      "also report dimensions of the q-deformed quotient");

  auto *inter = app.add_subcommand("intersections",
                                   "subspace intersection dimensions");
  inter->add_option("--max-n", max_n)->required();

  auto *rs = app.add_subcommand("rs", "insertion tableaux of a permutation");
  rs->add_option("word", word_text)->required();

  auto *knuth = app.add_subcommand("knuth", "Knuth class of a permutation");
  knuth->add_option("word", word_text)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (ideal->parsed())
      return emit(ppl::run_ideal_dims(max_n, cfg), cfg);
    if (hopf->parsed())
      return emit(ppl::run_hopf_check(max_n, cfg), cfg);
    if (snakes->parsed())
      return emit(ppl::run_snakes(max_n, check_formulas, cfg), cfg);
    if (series->parsed())
      return emit(ppl::run_series_check(order, cfg), cfg);
    if (hilbert->parsed()) {
      std::optional<ppl::Rat> q;
      if (!q_text.empty())
        q = parse_rational(q_text);
      return emit(
          ppl::run_hilbert(letters, order, brute_force, multigraded, q, cfg),
          cfg);
    }
    if (inter->parsed())
      return emit(ppl::run_intersections(max_n, cfg), cfg);
    if (rs->parsed()) {
      std::cout << ppl::rs_printout(ppl::parse_word(word_text));
      return 0;
    }
    if (knuth->parsed()) {
      std::cout << ppl::knuth_printout(ppl::parse_word(word_text));
      return 0;
    }
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 2;
  }
  return 2;
}
