// Acceptance suite: runs every gate criterion at full scale and prints one
// pass/fail line per criterion. All comparisons are exact (rational
// arithmetic); there are no tolerances anywhere.

#include <chrono>
#include <iostream>
#include <vector>

#include "g1k/verify.hpp"

namespace {

struct Criterion {
  int number;
  const char* title;
  std::vector<g1k::CheckResult> results;
};

bool report(const Criterion& c) {
  bool passed = true;
  long long cases = 0;
  std::string failure;
  for (const auto& r : c.results) {
    cases += r.cases;
    if (!r.passed && passed) {
      passed = false;
      failure = r.name + ": " + r.failure;
    }
  }
  if (passed) {
    std::cout << "[PASS] criterion " << c.number << ": " << c.title << " (" << cases
              << " exact checks)\n";
  } else {
    std::cout << "[FAIL] criterion " << c.number << ": " << c.title << " -- " << failure << "\n";
  }
  return passed;
}

}  // namespace

int main() {
  using namespace g1k;
  const auto t0 = std::chrono::steady_clock::now();
  const std::uint64_t seed = 0;
  const int cap = 8;
  const int trials = 50;

  std::vector<Criterion> criteria;
  criteria.push_back({1, "golden values of the pretzel family", {check_paper_golden_values()}});
  criteria.push_back({2,
                      "Seifert bridge: lambda' = det V and the Alexander polynomial",
                      {check_seifert_bridge(seed, 200)}});
  criteria.push_back({3,
                      "sih(ua) sih(ub) sih(uc) D(a,b,c) = E - bar(E) to degree 8, odd "
                      "triples in [-5,5]^3",
                      {check_sih_product_identity(5, cap)}});
  criteria.push_back({4,
                      "degree-two closed form of D(a,b,c) and its P/delta_2 decomposition",
                      {check_degree_two_closed_form(5, cap)}});
  criteria.push_back({5,
                      "W_s ledger: delta_2, delta_Delta and P",
                      {check_ws_ledger(5, seed, 20)}});
  criteria.push_back({6,
                      "structure round trip: normalize(build(d) * unit) recovers the data",
                      {check_structure_round_trip(seed, trials, cap)}});
  criteria.push_back({7,
                      "full pipeline: degree 0/2 of D(Sigma) and W_s(D_2(Sigma))",
                      {check_full_pipeline(seed, trials, cap, 3)}});
  criteria.push_back({8,
                      "Dehn twist laws: triples and the series transform",
                      {check_dehn_twist_laws(seed, trials, cap, 5)}});
  criteria.push_back({9,
                      "scalar decomposition: w_3 = (3/2) w_SL - (1/8) w_delta(Sigma) and "
                      "recovery",
                      {check_scalar_decomposition(seed, 5)}});

  bool all_passed = true;
  for (const Criterion& c : criteria) all_passed = report(c) && all_passed;

  const auto elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);
  std::cout << (all_passed ? "acceptance: all criteria passed" : "acceptance: FAILURES above")
            << " (" << elapsed.count() << " ms)\n";
  return all_passed ? 0 : 1;
}
