#pragma once

// Machine checks of the finite arithmetic behind the vanishing theorems.
//
// Every check is a pure function of its root system and parameters.  A check
// that finds a violation records the concrete assignment as a counterexample
// and marks whether that assignment lies inside the prime hypotheses of the
// statement it tests.  Only violations inside the hypotheses fail a check;
// the others are kept as informational witnesses that the guard matters.

#include "chevh1/fixtures.hpp"
#include "chevh1/rootsys.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace chevh1 {

enum class CheckStatus { Pass, Fail, Informational };

std::string to_string(CheckStatus s);

struct Counterexample {
  /// Ordered (name, value) assignment, e.g. {"lambda", "w1"}, {"q", "5"}.
  std::vector<std::pair<std::string, std::string>> fields;
  bool within_hypotheses = true;
};

struct CheckScope {
  std::string system;          // "E8", "C12", "*" for sweeps over many systems
  std::optional<long> p;
  std::optional<int> r;
  std::string weights;         // which lambda were swept, e.g. "below-fundamental"
  friend bool operator==(const CheckScope&, const CheckScope&) = default;
};

struct CheckEntry {
  std::string id;
  CheckScope scope;
  /// Whether the parameters of the entry meet the hypotheses of the statement.
  bool within_hypotheses = true;
  CheckStatus status = CheckStatus::Pass;
  std::vector<Counterexample> counterexamples;
  /// Recorded statistics such as observed maxima; ordered, deterministic.
  std::vector<std::pair<std::string, std::string>> observations;
  double elapsed_seconds = 0;

  /// Sets status from the counterexamples: Fail if any lies within hypotheses.
  void settle();
  void observe(std::string key, std::string value) { observations.emplace_back(std::move(key), std::move(value)); }
};

struct VerificationReport {
  std::vector<CheckEntry> checks;
  /// No entry has status Fail.
  bool passed() const;
};

/// Ordered suite names accepted by run_all.
const std::vector<std::string>& suite_names();

// Individual checks.

CheckEntry check_gamma_divisibility(const RootSystem& rs);
CheckEntry check_restriction_nondivisible(const RootSystem& rs, long p, int r);
CheckEntry check_socle_hypothesis(const RootSystem& rs, long p);

enum class SupportMode {
  Levi,         // theta in the Levi-induced module drops for J = {alpha, gamma}
  FullSupport,  // lambda - theta any weight of H0(lambda)
};
CheckEntry check_qkos(const RootSystem& rs, long p, SupportMode mode = SupportMode::Levi);
CheckEntry check_qkl(const RootSystem& rs, long p);

CheckEntry check_g2_p5(const RootSystem& rs);
CheckEntry check_e8_translation(const RootSystem& rs);
/// Runs the three (type, p, expected) identities s_0 . 0 = 2 omega_j.
CheckEntry check_s0_identities();
CheckEntry check_linkage_annotations(const RootSystem& rs, const HasseFixture& fixture, const std::vector<long>& primes);
CheckEntry check_lemma_largeprime(const RootSystem& rs);
/// Global maximum of the large-prime threshold over the exceptional types is 35.
CheckEntry check_largeprime_global();
CheckEntry check_ks_equivalence(long n_max, const std::vector<long>& primes);
CheckEntry check_t3_remark();
CheckEntry check_tables(const FixtureStore& store);

/// Threshold max(h + h_lambda - 1, h_lambda + 4) with h_lambda = (lambda, alpha0^vee).
long largeprime_threshold(const RootSystem& rs, const Weight& lambda);

/// |lambda + rho|^2 - |rho|^2.  Linkage to 0 under W_p forces this into 2p Z.
Rational norm_shift(const RootSystem& rs, const Weight& lambda);

struct RunConfig {
  std::vector<std::string> suites;  // empty selects nothing
  std::vector<RootSystemId> systems;
  std::vector<long> primes;
  std::vector<int> powers{1};
  long ks_n_max = 200;
  std::vector<long> ks_primes{3, 5, 7, 11, 13, 17};
  std::filesystem::path fixture_dir = default_fixture_dir();
  unsigned jobs = 1;

  /// Every suite; exceptional types and A-D up to rank max_rank; primes 2..31.
  static RunConfig defaults(int max_rank = 8);
};

/// Entries in fixed suite order, then system order, then prime order.
VerificationReport run_all(const RunConfig& config);

}  // namespace chevh1
