#include <doctest.h>

#include "g1k/invariants.hpp"

using namespace g1k;

namespace {
const CurveLambdas kTrivial{0, 0, 0, 0, 0};
}

TEST_CASE("lambda' of framing triples") {
  CHECK(lambda_prime_triple(SurfaceTriple(1, 1, 1)) == 1);
  CHECK(lambda_prime_triple(SurfaceTriple(-1, -1, 1)) == 0);
  // independent of the first entry along the Hedden-Watson family
  for (int a = -5; a <= 5; a += 2) {
    CHECK(lambda_prime_triple(SurfaceTriple(a, 5, -5)) == -6);
  }
}

TEST_CASE("w_delta of framing triples") {
  CHECK(w_del_triple(SurfaceTriple(1, 1, 1)) == -2);
  CHECK(w_del_triple(SurfaceTriple(-1, -1, -1)) == 2);
  CHECK(w_del_triple(SurfaceTriple(3, 5, -5)) == 18);
}

TEST_CASE("w_delta of a surface with curve inputs") {
  const SurfaceTriple t(-1, 3, -1);
  CHECK(w_del_surface(t, kTrivial) == w_del_triple(t));

  // modifying the band so that beta becomes a knot J moves the 4b slot
  const CurveLambdas beta_j{0, -1, 0, 0, 0};
  CHECK(w_del_surface(t, beta_j) == -12);
  CHECK(w_del_surface(t, beta_j) - w_del_triple(t) == 4 * t.b * Rational(-1));
  // with both curves through the modified band, the variation is 4(b+c) lambda'(J)
  const CurveLambdas both_j{0, -1, -1, 0, 0};
  CHECK(w_del_surface(t, both_j) - w_del_triple(t) == 4 * (t.b + t.c) * Rational(-1));

  CHECK(w_del_surface(SurfaceTriple(1, 1, 1), CurveLambdas{1, 0, 0, 0, 0}) == 2);
}

TEST_CASE("triple from a Seifert matrix") {
  const SurfaceTriple t1 = triple_from_seifert({1, 0, -1, 1});
  CHECK((t1.a == 1 && t1.b == 1 && t1.c == 1));
  const SurfaceTriple t2 = triple_from_seifert({1, 1, 0, -1});
  CHECK((t2.a == -1 && t2.b == 3 && t2.c == -1));
  CHECK(lambda_prime_triple(t2) == -1);
  // mirror of the trivial-knot triple (-1,-1,1); same lambda' = det = 0
  const SurfaceTriple t3 = triple_from_seifert({0, 1, 0, 0});
  CHECK((t3.a == 1 && t3.b == 1 && t3.c == -1));
  CHECK(lambda_prime_triple(t3) == 0);

  CHECK_THROWS_AS(triple_from_seifert({1, 1, 1, 1}), bad_symplectic);
}

TEST_CASE("Alexander polynomial from a Seifert matrix") {
  const AlexanderPoly d1 = alexander_from_seifert({{1, 0}, {-1, 1}}, 1);
  CHECK(d1.to_string() == "t - 1 + t^-1");
  const AlexanderPoly d2 = alexander_from_seifert({{1, 1}, {0, -1}}, 1);
  CHECK(d2.to_string() == "-t + 3 - t^-1");
  const AlexanderPoly d3 = alexander_from_seifert({{0, 1}, {0, 0}}, 1);
  CHECK(d3 == AlexanderPoly::constant(Rational(1)));

  CHECK_THROWS_AS(alexander_from_seifert({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 1), odd_dimension);
}

TEST_CASE("the canonical quadratic element P") {
  const QuadForm p111 = p_star(SurfaceTriple(1, 1, 1));
  CHECK(p111 == QuadForm{1, 1, 1});
  const QuadForm p131 = p_star(SurfaceTriple(1, 3, 1));
  CHECK(p131 == QuadForm{1, 1, 2});
  const QuadForm p = p_star(SurfaceTriple(-1, -1, 1));
  CHECK(p == QuadForm{0, 1, 0});  // ua*ub
}

TEST_CASE("the degree-two structure polynomial delta_2") {
  CHECK(delta2(SurfaceTriple(1, 1, 1)) ==
        Rational(-2, 3) * QuadForm{1, 1, 1});
  CHECK(delta2(SurfaceTriple(1, 3, 1)) == QuadForm{-1, -1, Rational(-3, 2)});
  CHECK(w_s_eval(delta2(SurfaceTriple(1, 1, 1)), SurfaceTriple(1, 1, 1)) == -2);
}

TEST_CASE("delta_Delta from curve inputs") {
  CHECK(delta_delta(kTrivial) == QuadForm{0, 0, 0});
  CHECK(delta_delta(CurveLambdas{1, 0, 0, 0, 0}) == QuadForm{0, 1, 1});  // ua*ub + ub^2
}

TEST_CASE("the linear functional W_s") {
  const SurfaceTriple t(1, 1, 1);
  CHECK(w_s_eval(p_star(t), t) == 3);  // 4 lambda' - 1
  CHECK(w_s_eval(QuadForm{0, 0, 0}, t) == 0);
  CHECK(w_s_eval(QuadForm{1, 0, 0}, SurfaceTriple(1, 3, 1)) == 4);  // b + c
}

TEST_CASE("the pairing functionals W_s_2k") {
  const SurfaceTriple t(1, 1, 1);
  const int cap = 6;

  // k = 1 collapses to W_s on the quadratic form
  const QuadForm q{Rational(2), Rational(-1, 3), Rational(5, 2)};
  CHECK(w_s_2k(quadform_to_series(q, cap), t, 1) == w_s_eval(q, t));

  CHECK(w_s_2k(TruncSeries::monomial(Rational(1), 4, 0, cap), t, 2) == 12);
  CHECK(w_s_2k(TruncSeries::monomial(Rational(1), 2, 2, cap), t, 2) == 6);
  CHECK(w_s_2k(TruncSeries::zero(cap), t, 2) == 0);

  TruncSeries mixed(cap);
  mixed.set_coeff(2, 0, Rational(1));
  mixed.set_coeff(4, 0, Rational(1));
  CHECK_THROWS_AS(w_s_2k(mixed, t, 2), not_homogeneous);
  CHECK_THROWS_AS(w_s_2k(TruncSeries::monomial(Rational(1), 3, 0, cap), t, 2), wrong_degree);
  CHECK_THROWS_AS(w_s_2k(TruncSeries::monomial(Rational(1), 2, 0, cap), t, 5), wrong_degree);
}

TEST_CASE("w_SL and w_3") {
  const SurfaceTriple trefoil(1, 1, 1);
  CHECK(w_sl(trefoil, kTrivial) == Rational(1, 6));
  CHECK(w_sl(SurfaceTriple(-1, 3, -1), kTrivial) == 0);
  CHECK(w_sl(SurfaceTriple(3, 5, -5), kTrivial) == Rational(-18, 12));

  CHECK(w3(trefoil, kTrivial) == Rational(1, 2));
  CHECK(w3(SurfaceTriple(-1, -1, 1), kTrivial) == 0);
}

TEST_CASE("recovery from w_3 and W_s(D_2)") {
  const auto [wsl_value, wdel_value] = recover_from_w3(Rational(1, 2), 0, 1, 1);
  CHECK(wsl_value == Rational(1, 6));
  CHECK(wdel_value == -2);

  const auto [w2, d2] = recover_from_w3(0, 0, 1, -1);
  CHECK(w2 == 0);
  CHECK(d2 == 0);

  CHECK_THROWS_AS(recover_from_w3(1, 1, 1, Rational(1, 7)), degenerate_lambda);
}

TEST_CASE("Dehn twist, cyclic and mirror actions on triples") {
  const SurfaceTriple t = dehn_twist_triple(SurfaceTriple(1, 1, 1));
  CHECK((t.a == 3 && t.b == 3 && t.c == -1));
  CHECK(w_del_triple(t) == w_del_triple(SurfaceTriple(1, 1, 1)));  // b(b^2-1)/2 = 0

  const SurfaceTriple u = dehn_twist_triple(SurfaceTriple(1, 3, 1));
  CHECK((u.a == 7 && u.b == 7 && u.c == -3));
  CHECK(w_del_triple(u) - w_del_triple(SurfaceTriple(1, 3, 1)) == 12);

  const SurfaceTriple m = mirror_triple(SurfaceTriple(1, 1, 1));
  CHECK((m.a == -1 && m.b == -1 && m.c == -1));
  CHECK(w_del_triple(m) == 2);

  const SurfaceTriple cy = cyclic_triple(SurfaceTriple(1, 3, 5));
  CHECK((cy.a == 3 && cy.b == 5 && cy.c == 1));
}

TEST_CASE("strict mode rejects non-odd framings") {
  CHECK_THROWS_AS(SurfaceTriple(2, 1, 1, true), parity_error);
  CHECK_THROWS_AS(SurfaceTriple(Rational(1, 2), 1, 1, true), parity_error);
  CHECK_NOTHROW(SurfaceTriple(Rational(1, 2), 1, 1, false));
}
