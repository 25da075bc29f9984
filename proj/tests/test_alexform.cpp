#include <doctest.h>

#include "g1k/alexform.hpp"
#include "oracles.hpp"

using namespace g1k;

namespace {

AlexFormData trivial_data(int cap = 8) {
  AlexFormData d;
  d.cap = cap;
  return d;
}

}  // namespace

TEST_CASE("building the trivial Alexander series") {
  const AlexSeries a = build_alexander_series(trivial_data());
  CHECK(agree_on_common(a.series, TruncSeries::constant(Rational(1), 8)));
}

TEST_CASE("lambda'(E) shows up in degree three") {
  AlexFormData d = trivial_data();
  d.lE = 1;
  const AlexSeries a = build_alexander_series(d);
  // degree-3 part is (1/2) ua*ub*uc = -(1/2)(ua^2 ub + ua ub^2)
  CHECK(a.series.coeff(2, 1) == Rational(-1, 2));
  CHECK(a.series.coeff(1, 2) == Rational(-1, 2));
  CHECK(a.series.coeff(3, 0) == 0);
  CHECK(a.series.coeff(0, 3) == 0);
}

TEST_CASE("lambda'(A) shows up in degree two") {
  AlexFormData d = trivial_data();
  d.lA = 1;
  const AlexSeries a = build_alexander_series(d);
  // -ub*uc = ua*ub + ub^2
  CHECK(a.series.coeff(1, 1) == 1);
  CHECK(a.series.coeff(0, 2) == 1);
  CHECK(a.series.coeff(2, 0) == 0);
}

TEST_CASE("normalization of a pure unit") {
  const TruncSeries raw = embed(GroupRingElem::exponential(ua_vec()), 8);
  const NormalizeResult res = normalize_alexander_series(raw, 1);
  CHECK(res.unit_exponent == -ua_vec());
  CHECK(agree_on_common(res.series.series, TruncSeries::constant(Rational(1), 8)));
  CHECK(res.lA == 0);
  CHECK(res.lB == 0);
  CHECK(res.lC == 0);
  CHECK(res.lE == 0);
}

TEST_CASE("normalization rejections") {
  TruncSeries cubed = TruncSeries::constant(Rational(1), 8);
  cubed.set_coeff(3, 0, Rational(1));  // 1 + ua^3
  CHECK_THROWS_AS(normalize_alexander_series(cubed, 1), not_alexander_form);

  CHECK_THROWS_AS(normalize_alexander_series(TruncSeries::constant(Rational(2), 8), 1),
                  wrong_constant_term);

  // odd part with the right degree-3 shape but no sih(ua) factor
  TruncSeries bad = TruncSeries::constant(Rational(1), 8);
  bad.set_coeff(2, 1, Rational(-1, 2));
  bad.set_coeff(1, 2, Rational(-1, 2));
  bad.set_coeff(0, 5, Rational(1));  // ub^5 alone cannot be sih-divisible
  CHECK_THROWS_AS(normalize_alexander_series(bad, 1), not_alexander_form);

  // the sign of the constant term is fixed up rather than rejected
  const TruncSeries negated = TruncSeries::constant(Rational(-3), 8);
  const NormalizeResult res = normalize_alexander_series(negated, 3);
  CHECK(res.series.series.coeff(0, 0) == 3);
}

TEST_CASE("Gamma of the trivial series vanishes") {
  const AlexSeries a = build_alexander_series(trivial_data());
  const TruncSeries g = gamma_from_series(a);
  CHECK(g.is_zero());
  CHECK(g.valid_to() == 5);  // three sih divisions from cap 8
}

TEST_CASE("Delta(A,B) of a split pair vanishes") {
  const AlexSeries a = build_alexander_series(trivial_data());
  CHECK(delta_ab(a).is_zero());
  CHECK(ub_wedge_curve_a(a).is_zero());
}

TEST_CASE("E(a,b,c) has degree-2 part -P") {
  for (const SurfaceTriple t :
       {SurfaceTriple(1, 1, 1), SurfaceTriple(-1, -1, 1), SurfaceTriple(3, -5, 1)}) {
    const TruncSeries e = e_abc(t, 6);
    CHECK(e.coeff(0, 0) == 0);
    CHECK(e.coeff(1, 0) == 0);
    CHECK(e.coeff(0, 1) == 0);
    const QuadForm p = p_star(t);
    CHECK(quadform_from_series(e) == Rational(-1) * p);
  }
}

TEST_CASE("E - bar(E) = sih^3 D for the standard trefoil surface") {
  const GroupRingElem e = e_abc_elem(SurfaceTriple(1, 1, 1));
  const GroupRingElem sih3 =
      sih_elem(ua_vec(), 2) * sih_elem(ub_vec(), 2) * sih_elem(uc_vec(), 2);
  // D(1,1,1) = 1
  CHECK(e.rescaled(2) - grg_bar(e).rescaled(2) == sih3);
}

TEST_CASE("rational framings are accepted by E and D") {
  const SurfaceTriple t(Rational(1, 3), Rational(-5, 2), Rational(1), false);
  const TruncSeries e = e_abc(t, 6);
  CHECK(quadform_from_series(e) == Rational(-1) * p_star(t));
  const TruncSeries d = d_abc(t, 6);
  CHECK(d.coeff(0, 0) == lambda_prime_triple(t));
}

TEST_CASE("the Alexander series D(a,b,c)") {
  const TruncSeries d111 = d_abc(SurfaceTriple(1, 1, 1), 8);
  CHECK(d111.coeff(0, 0) == 1);
  CHECK(quadform_from_series(d111) == QuadForm{0, 0, 0});

  const TruncSeries d131 = d_abc(SurfaceTriple(1, 3, 1), 8);
  CHECK(d131.coeff(0, 0) == 2);
  CHECK(quadform_from_series(d131) == QuadForm{0, 0, Rational(1, 4)});

  // two-route check against the Laurent materialization
  for (long long b : {-3, -1, 1, 3, 5}) {
    const TruncSeries series_route = d_abc(SurfaceTriple(3, Rational(b), -1), 8);
    const TruncSeries laurent_route = embed(test_oracles::d_abc_laurent(3, b, -1), 8);
    CHECK(agree_on_common(series_route, laurent_route));
  }
}

TEST_CASE("D(Sigma) for the trivial embedding is D(a,b,c)") {
  const AlexSeries a = build_alexander_series(trivial_data());
  for (const SurfaceTriple t : {SurfaceTriple(1, 1, 1), SurfaceTriple(-1, 3, -1)}) {
    const TruncSeries ds = d_sigma(a, t);
    CHECK(agree_on_common(ds, d_abc(t, 8)));
  }
}

TEST_CASE("D_2(Sigma) of the trefoil with lambda'(E) = 1") {
  AlexFormData d = trivial_data();
  d.lE = 1;
  const AlexSeries a = build_alexander_series(d);
  const TruncSeries ds = d_sigma(a, SurfaceTriple(1, 1, 1));
  CHECK(ds.coeff(0, 0) == 1);
  // w_SL = 1 + 1/6 = 7/6; D_2 = w_SL P + (1/4) delta_E = P - (1/6) P * ... = P
  CHECK(quadform_from_series(ds) == QuadForm{1, 1, 1});
}

TEST_CASE("Dehn twist transform fixes the trivial series at b = +-1") {
  const AlexSeries one = build_alexander_series(trivial_data());
  for (const SurfaceTriple t : {SurfaceTriple(1, 1, 1), SurfaceTriple(3, -1, 5)}) {
    const AlexSeries moved = dehn_twist_transform(one, t);
    CHECK(moved.series.valid_to() == 7);
    CHECK(agree_on_common(moved.series, TruncSeries::constant(Rational(1), 7)));
  }
}

TEST_CASE("Dehn twist transform keeps the series structurally valid") {
  AlexFormData d = trivial_data();
  d.lA = Rational(1, 2);
  d.lB = -2;
  d.lC = Rational(5, 3);
  d.lE = Rational(-7, 12);
  d.gamma_tail.emplace_back(2, std::vector<Rational>{Rational(1, 2), Rational(0), Rational(3)});
  const AlexSeries a = build_alexander_series(d);
  const AlexSeries moved = dehn_twist_transform(a, SurfaceTriple(1, 3, 1));
  const NormalizeResult res = normalize_alexander_series(moved.series, 1);
  CHECK(res.unit_exponent == ExpVec{});
  // alpha is fixed by the twist about alpha, so lambda'(A) is unchanged
  CHECK(res.lA == d.lA);
}

TEST_CASE("data validation") {
  AlexFormData d = trivial_data();
  d.cap = 4;
  CHECK_THROWS_AS(build_alexander_series(d), not_alexander_form);

  d = trivial_data();
  d.even_tail.emplace_back(3, std::vector<Rational>(4, Rational(1)));
  CHECK_THROWS_AS(build_alexander_series(d), not_alexander_form);

  d = trivial_data();
  d.gamma_tail.emplace_back(6, std::vector<Rational>(7, Rational(1)));  // above cap - 3
  CHECK_THROWS_AS(build_alexander_series(d), not_alexander_form);

  d = trivial_data();
  d.h1 = 0;
  CHECK_THROWS_AS(build_alexander_series(d), not_alexander_form);
}
