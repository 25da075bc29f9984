#include <doctest.h>

#include "g1k/verify.hpp"

using namespace g1k;

TEST_CASE("every identity suite passes at small size") {
  VerifyOptions options;
  options.seed = 7;
  options.trials = 3;
  options.degree = 6;
  options.range = 1;
  for (const CheckResult& r : run_all_checks(options)) {
    INFO(r.name, ": ", r.failure);
    CHECK(r.passed);
    CHECK(r.cases > 0);
  }
}

TEST_CASE("the fault-injection hook is detected") {
  const CheckResult r = check_degree_two_closed_form(1, 4, /*inject_fault=*/true);
  CHECK_FALSE(r.passed);
  CHECK_FALSE(r.failure.empty());
}

TEST_CASE("the data generator is deterministic") {
  TestRng a(42), b(42);
  for (int i = 0; i < 5; ++i) {
    const AlexFormData da = random_alexform_data(a, 8);
    const AlexFormData db = random_alexform_data(b, 8);
    CHECK(da.h1 == db.h1);
    CHECK(da.ell == db.ell);
    CHECK(da.lA == db.lA);
    CHECK(da.lE == db.lE);
    CHECK(da.even_tail == db.even_tail);
    CHECK(da.gamma_tail == db.gamma_tail);
  }
  TestRng c(43);
  bool any_different = false;
  for (int i = 0; i < 5 && !any_different; ++i) {
    TestRng fresh(42);
    any_different = random_alexform_data(c, 8).lA != random_alexform_data(fresh, 8).lA;
  }
  CHECK(any_different);
}

TEST_CASE("random data records are structurally valid") {
  TestRng rng(1);
  for (int i = 0; i < 10; ++i) {
    const AlexFormData d = random_alexform_data(rng, 8);
    CHECK_NOTHROW(d.validate());
    CHECK_NOTHROW(build_alexander_series(d));
  }
}
