#ifndef G1K_VERIFY_HPP
#define G1K_VERIFY_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "g1k/alexform.hpp"
#include "g1k/invariants.hpp"

namespace g1k {

/// Deterministic source of small test values. Only the raw mt19937_64
/// stream is consumed (standard distributions are not portable).
class TestRng {
 public:
  explicit TestRng(std::uint64_t seed) : engine_(seed) {}

  long long next_int(long long lo, long long hi);
  long long odd_int(long long lo, long long hi);
  /// num/den with |num| <= 20 and den in {1,2,3,4,6,8,12,24}.
  Rational small_rational();
  /// A nonzero exponent vector on the half-integer lattice.
  ExpVec lattice_vector();

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

/// A random full data record at the given cap, with ell in {-2..2}.
AlexFormData random_alexform_data(TestRng& rng, int cap);

struct CheckResult {
  std::string name;
  long long cases = 0;
  bool passed = true;
  std::string failure;  // first counterexample, when !passed
};

struct VerifyOptions {
  std::uint64_t seed = 0;
  int trials = 50;
  int degree = 8;
  int range = 5;
  bool inject_fault = false;
};

// Identity suites. Each returns the number of cases checked and the first
// counterexample on failure; none of them throws on identity failure.
CheckResult check_paper_golden_values();
CheckResult check_ring_axioms(std::uint64_t seed, int trials);
CheckResult check_series_properties(std::uint64_t seed, int trials, int cap);
CheckResult check_triple_symmetries(int range);
CheckResult check_seifert_bridge(std::uint64_t seed, int n_matrices);
CheckResult check_sih_product_identity(int range, int cap);
CheckResult check_degree_two_closed_form(int range, int cap, bool inject_fault = false);
CheckResult check_ws_ledger(int range, std::uint64_t seed, int lambda_vectors);
CheckResult check_structure_round_trip(std::uint64_t seed, int trials, int cap);
CheckResult check_full_pipeline(std::uint64_t seed, int trials, int cap, int triple_range);
CheckResult check_dehn_twist_laws(std::uint64_t seed, int trials, int cap, int range);
CheckResult check_scalar_decomposition(std::uint64_t seed, int range);

/// Every suite, with the options' seed/trials/degree/range.
std::vector<CheckResult> run_all_checks(const VerifyOptions& options);

}  // namespace g1k

#endif  // G1K_VERIFY_HPP
