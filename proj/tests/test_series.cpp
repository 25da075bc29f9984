#include <doctest.h>

#include "g1k/series.hpp"

using namespace g1k;

TEST_CASE("embedding constants and exponentials") {
  CHECK(embed(GroupRingElem::constant(Rational(1)), 4).to_string() == "1");

  const TruncSeries e = embed(GroupRingElem::exponential(ua_vec()), 2);
  CHECK(e.coeff(0, 0) == 1);
  CHECK(e.coeff(1, 0) == 1);
  CHECK(e.coeff(2, 0) == Rational(1, 2));

  const TruncSeries s = embed(sih_elem(ua_vec()), 3);
  CHECK(s.coeff(1, 0) == 1);
  CHECK(s.coeff(3, 0) == Rational(1, 24));
}

TEST_CASE("bar_series flips odd degrees") {
  TruncSeries s(3);
  s.set_coeff(0, 0, Rational(1));
  s.set_coeff(2, 0, Rational(1));
  CHECK(agree_on_common(bar_series(s), s));

  const TruncSeries lin = TruncSeries::linear(ua_vec(), 3);
  CHECK(agree_on_common(bar_series(lin), scale(lin, Rational(-1))));

  const int n = 6;
  CHECK(agree_on_common(bar_series(embed(GroupRingElem::exponential(ua_vec()), n)),
                        embed(GroupRingElem::exponential(-ua_vec()), n)));
}

TEST_CASE("even part of exp(ua)") {
  const TruncSeries e = even_part(embed(GroupRingElem::exponential(ua_vec()), 4));
  CHECK(e.coeff(0, 0) == 1);
  CHECK(e.coeff(1, 0) == 0);
  CHECK(e.coeff(2, 0) == Rational(1, 2));
  CHECK(e.coeff(3, 0) == 0);
  CHECK(e.coeff(4, 0) == Rational(1, 24));
}

TEST_CASE("degree 3 part of sih(ua) sih(ub) sih(uc) is ua*ub*uc") {
  const GroupRingElem p = sih_elem(ua_vec()) * sih_elem(ub_vec()) * sih_elem(uc_vec());
  const TruncSeries part = degree_part(embed(p, 5), 3);
  // ua*ub*uc = -ua^2 ub - ua ub^2
  CHECK(part.coeff(2, 1) == Rational(-1));
  CHECK(part.coeff(1, 2) == Rational(-1));
  CHECK(part.coeff(3, 0) == 0);
  CHECK(part.coeff(0, 3) == 0);
  CHECK(part.coeff(2, 0) == 0);
}

TEST_CASE("exact division by a linear form") {
  TruncSeries s(4);
  s.set_coeff(2, 0, Rational(1));  // ua^2
  s.set_coeff(1, 1, Rational(1));  // ua*ub
  const TruncSeries q = divide_by_linear(s, ua_vec());
  CHECK(q.coeff(1, 0) == 1);
  CHECK(q.coeff(0, 1) == 1);
  CHECK(q.valid_to() == 3);

  CHECK_THROWS_AS(divide_by_linear(TruncSeries::linear(ua_vec(), 4), ub_vec()), not_divisible);
}

TEST_CASE("multiply-then-divide by sih(uc) round trip") {
  const int n = 8;
  TruncSeries s(n);
  int v = 1;
  for (int d = 0; d <= n; ++d) {
    for (int i = 0; i <= d; ++i) {
      s.set_coeff(i, d - i, Rational((v % 7) - 3, 1 + (v % 4)));
      v = v * 31 % 1000;
    }
  }
  const TruncSeries product = mul(embed(sih_elem(uc_vec()), n), s);
  const TruncSeries back = divide_by_sih(product, uc_vec());
  CHECK(back.valid_to() == n - 1);
  CHECK(agree_on_common(back, s));
}

TEST_CASE("division by a unit") {
  TruncSeries u(5);
  u.set_coeff(0, 0, Rational(1));
  u.set_coeff(1, 0, Rational(1));  // 1 + ua
  const TruncSeries inv = divide_by_unit(TruncSeries::constant(Rational(1), 5), u);
  for (int d = 0; d <= 5; ++d) {
    CHECK(inv.coeff(d, 0) == Rational(d % 2 == 0 ? 1 : -1));
  }

  CHECK_THROWS_AS(divide_by_unit(u, TruncSeries::linear(ua_vec(), 5)), zero_constant_term);
}

TEST_CASE("linear substitution") {
  const TruncSeries s = TruncSeries::linear(ub_vec(), 3);
  const TruncSeries t = subst_linear(s, 1, 0, -1, 1);  // ub -> ub - ua
  CHECK(t.coeff(0, 1) == 1);
  CHECK(t.coeff(1, 0) == -1);

  const TruncSeries id = subst_linear(s, 1, 0, 0, 1);
  CHECK(agree_on_common(id, s));

  CHECK_THROWS_AS(subst_linear(s, 1, 1, 1, 1), singular_matrix);
}

TEST_CASE("reading above valid_to is an error, not a silent zero") {
  TruncSeries s(4);
  s.set_coeff(1, 0, Rational(1));
  const TruncSeries q = divide_by_linear(s, ua_vec());
  CHECK(q.valid_to() == 3);
  CHECK_NOTHROW(q.coeff(3, 0));
  CHECK_THROWS_AS(q.coeff(4, 0), degree_out_of_range);
  CHECK_THROWS_AS(degree_part(q, 4), degree_out_of_range);
}

TEST_CASE("arithmetic propagates the validity frontier") {
  TruncSeries a(6);
  const TruncSeries b = divide_by_linear(TruncSeries::monomial(Rational(1), 1, 0, 6), ua_vec());
  CHECK(b.valid_to() == 5);
  CHECK(add(a, b).valid_to() == 5);
  CHECK(mul(a, b).valid_to() == 5);
}

TEST_CASE("canonical rendering") {
  TruncSeries s(3);
  s.set_coeff(0, 0, Rational(1));
  s.set_coeff(2, 0, Rational(-2, 3));
  s.set_coeff(1, 1, Rational(1, 4));
  CHECK(s.to_string() == "1 - 2/3*ua^2 + 1/4*ua*ub");
  CHECK(TruncSeries(4).to_string() == "0");
}

TEST_CASE("sih ratio series at small arguments") {
  // sih(2 ub)/sih(ub) = 2 cosh(ub) = e^{ub/2} + e^{-ub/2}
  const TruncSeries r = sih_ratio_series(Rational(2), ub_vec(), 4);
  CHECK(r.coeff(0, 0) == 2);
  CHECK(r.coeff(0, 1) == 0);
  CHECK(r.coeff(0, 2) == Rational(1, 4));
  CHECK(sih_ratio_series(Rational(0), ua_vec(), 4).is_zero());
  CHECK(agree_on_common(sih_ratio_series(Rational(1), ua_vec(), 4),
                        TruncSeries::constant(Rational(1), 4)));
}
