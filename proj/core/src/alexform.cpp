#include "g1k/alexform.hpp"

#include <algorithm>

namespace g1k {

namespace {

long long context_denom_for(const Rational& x) {
  const Integer d = den(x);
  return static_cast<long long>(d);
}

}  // namespace

long long AlexFormData::context_denom() const {
  long long d = lcm_ll(lcm_ll(orders[0], orders[1]), orders[2]);
  d = lcm_ll(d, context_denom_for(ell));
  return d;
}

void AlexFormData::validate() const {
  if (h1 < 1) throw not_alexander_form("|H1| must be a positive integer");
  if (cap < 6) throw not_alexander_form("cap must be at least 6");
  for (long long o : orders) {
    if (o < 1) throw not_alexander_form("orders must be positive integers");
  }
  auto check_tail = [this](const std::vector<std::pair<int, std::vector<Rational>>>& tail,
                           int min_degree, int max_degree, const char* which) {
    std::vector<int> seen;
    for (const auto& [degree, coeffs] : tail) {
      if (degree % 2 != 0 || degree < min_degree || degree > max_degree) {
        throw not_alexander_form(std::string(which) + " has a part of invalid degree " +
                                 std::to_string(degree));
      }
      if (static_cast<int>(coeffs.size()) != degree + 1) {
        throw not_alexander_form(std::string(which) + " part of degree " +
                                 std::to_string(degree) + " has wrong coefficient count");
      }
      if (std::find(seen.begin(), seen.end(), degree) != seen.end()) {
        throw not_alexander_form(std::string(which) + " has duplicate degree " +
                                 std::to_string(degree));
      }
      seen.push_back(degree);
    }
  };
  check_tail(even_tail, 4, cap, "even_tail");
  check_tail(gamma_tail, 2, cap - 3, "gamma_tail");
}

long long context_denom_for_triple(const SurfaceTriple& t) {
  long long d = lcm_ll(context_denom_for(t.a), lcm_ll(context_denom_for(t.b), context_denom_for(t.c)));
  return 2 * d;
}

namespace {

TruncSeries tail_to_series(const std::vector<std::pair<int, std::vector<Rational>>>& tail,
                           int cap) {
  TruncSeries out(cap);
  for (const auto& [degree, coeffs] : tail) {
    for (int i = 0; i <= degree; ++i) out.set_coeff(i, degree - i, coeffs[i]);
  }
  return out;
}

TruncSeries sih3_series(long long context_denom, int cap) {
  GroupRingElem s = sih_elem(ua_vec(), context_denom);
  s *= sih_elem(ub_vec(), context_denom);
  s *= sih_elem(uc_vec(), context_denom);
  return embed(s, cap);
}

}  // namespace

AlexSeries build_alexander_series(const AlexFormData& d) {
  d.validate();
  const int cap = d.cap;
  const long long ctx = d.context_denom();

  TruncSeries even = TruncSeries::constant(Rational(d.h1), cap);
  const QuadForm dd = delta_delta(CurveLambdas{d.lA, d.lB, d.lC, Rational(0), Rational(0)});
  even = add(even, scale(quadform_to_series(dd, cap), Rational(d.h1)));
  even = add(even, tail_to_series(d.even_tail, cap));

  TruncSeries gamma = TruncSeries::constant(-Rational(d.h1) * d.lE, cap);
  gamma = add(gamma, tail_to_series(d.gamma_tail, cap));

  const TruncSeries odd = scale(mul(sih3_series(ctx, cap), gamma), Rational(-1, 2));
  return AlexSeries{add(even, odd), d.h1, d.ell, cap};
}

NormalizeResult normalize_alexander_series(const TruncSeries& raw, long long h1,
                                           const Rational& ell) {
  if (h1 < 1) throw not_alexander_form("|H1| must be a positive integer");
  if (raw.valid_to() < 3) {
    throw not_alexander_form("series must be valid at least to degree 3");
  }
  const Rational c0 = raw.coeff(0, 0);
  TruncSeries s = raw;
  if (c0 == Rational(-h1)) {
    s = scale(raw, Rational(-1));
  } else if (c0 != Rational(h1)) {
    throw wrong_constant_term("constant term " + to_string(c0) + " does not match +-" +
                              std::to_string(h1));
  }

  const ExpVec v{-s.coeff(1, 0) / h1, -s.coeff(0, 1) / h1};
  const long long dv = lcm_ll(context_denom_for(v.p), context_denom_for(v.q));
  const TruncSeries unit = embed(GroupRingElem::exponential(v, dv), s.valid_to());
  const TruncSeries norm = mul(unit, s);

  const Rational lB = norm.coeff(2, 0) / h1;
  const Rational lA = norm.coeff(0, 2) / h1;
  const Rational lC = lA + lB - norm.coeff(1, 1) / h1;

  if (norm.coeff(3, 0) != 0 || norm.coeff(0, 3) != 0 || norm.coeff(2, 1) != norm.coeff(1, 2)) {
    throw not_alexander_form("degree-3 part is not proportional to ua*ub*uc");
  }
  const Rational lE = Rational(-2) * norm.coeff(2, 1) / h1;

  // the odd part must factor through sih(ua) sih(ub) sih(uc)
  try {
    TruncSeries g = divide_by_sih(odd_part(norm), ua_vec());
    g = divide_by_sih(g, ub_vec());
    g = divide_by_sih(g, uc_vec());
  } catch (const not_divisible& e) {
    throw not_alexander_form(std::string("odd part is not sih-divisible: ") + e.what());
  }

  return NormalizeResult{v, AlexSeries{norm, h1, ell, norm.valid_to()}, lA, lB, lC, lE};
}

TruncSeries gamma_from_series(const AlexSeries& a) {
  const TruncSeries diff = sub(bar_series(a.series), a.series);
  TruncSeries g = divide_by_sih(diff, ua_vec());
  g = divide_by_sih(g, ub_vec());
  return divide_by_sih(g, uc_vec());
}

TruncSeries delta_ab(const AlexSeries& a) {
  const int cap = a.series.valid_to();
  const long long ctx = context_denom_for(a.ell);
  // exp(-(ell/2) uc) and exp((ell/2) uc)
  const ExpVec half_uc = (a.ell / 2) * uc_vec();
  const TruncSeries e_minus = embed(GroupRingElem::exponential(-half_uc, ctx), cap);
  const TruncSeries e_plus = embed(GroupRingElem::exponential(half_uc, ctx), cap);
  const TruncSeries rhs =
      sub(mul(e_minus, bar_series(a.series)), mul(e_plus, a.series));
  return divide_by_sih(rhs, uc_vec());
}

TruncSeries ub_wedge_curve_a(const AlexSeries& a) {
  const int cap = a.series.valid_to();
  const long long ctx = lcm_ll(2, context_denom_for(a.ell));
  const ExpVec first = ((1 - 2 * a.ell) / 2) * uc_vec();
  const ExpVec second = Rational(1, 2) * uc_vec();
  const TruncSeries e_first = embed(GroupRingElem::exponential(first, ctx), cap);
  const TruncSeries e_second = embed(GroupRingElem::exponential(second, ctx), cap);
  const TruncSeries rhs =
      sub(mul(e_first, bar_series(a.series)), mul(e_second, a.series));
  return divide_by_sih(rhs, uc_vec());
}

GroupRingElem e_abc_elem(const SurfaceTriple& t) {
  const long long ctx = context_denom_for_triple(t);
  const Rational am = (t.a - 1) / 2, ap = (t.a + 1) / 2;
  const Rational bm = (t.b - 1) / 2, bp = (t.b + 1) / 2;
  const Rational cm = (t.c - 1) / 2, cp = (t.c + 1) / 2;

  const ExpVec alpha = cm * uc_vec() - bp * ub_vec();
  const ExpVec beta = am * ua_vec() - cp * uc_vec();

  GroupRingElem defining = GroupRingElem::exponential((am / 2) * ua_vec(), ctx) *
                           sih_elem(ub_vec(), ctx) * sih_elem(alpha, ctx);
  defining -= GroupRingElem::exponential((bp / 2) * ub_vec(), ctx) * sih_elem(ua_vec(), ctx) *
              sih_elem(beta, ctx);

  auto half_combo = [&](const Rational& xa, const Rational& xb, const Rational& xc) {
    return GroupRingElem::exponential(
        Rational(1, 2) * (xa * ua_vec() + xb * ub_vec() + xc * uc_vec()), ctx);
  };
  GroupRingElem six = half_combo(am, bm, -cm);
  six -= half_combo(ap, bp, -cp);
  six += half_combo(-am, bm, cm);
  six -= half_combo(-ap, bp, cp);
  six += half_combo(am, -bm, cm);
  six -= half_combo(ap, -bp, cp);

  if (!(defining == six)) {
    throw error("internal: the two expressions of E(a,b,c) disagree");
  }
  return defining;
}

TruncSeries e_abc(const SurfaceTriple& t, int cap) { return embed(e_abc_elem(t), cap); }

namespace {

/// sih(k*L)/sih(L): the numerator, embedded one degree above cap so that the
/// exact division by the linear form L keeps full validity at cap.
TruncSeries sih_ratio_via_division(const Rational& k, const ExpVec& L, long long ctx, int cap) {
  if (k == 0) return TruncSeries::zero(cap);
  const TruncSeries numerator = embed(sih_elem(k * L, ctx), cap + 1);
  const TruncSeries by_linear = divide_by_linear(numerator, L);
  return divide_by_unit(by_linear, sih_over_linear(L, cap));
}

}  // namespace

TruncSeries d_abc(const SurfaceTriple& t, int cap) {
  const long long ctx = context_denom_for_triple(t);
  const Rational am = (t.a - 1) / 2;
  const Rational bp = (t.b + 1) / 2;
  const Rational cm = (t.c - 1) / 2, cp = (t.c + 1) / 2;

  const TruncSeries ratio_a = sih_ratio_via_division(am, ua_vec(), ctx, cap);
  const TruncSeries ratio_b = sih_ratio_via_division(bp, ub_vec(), ctx, cap);
  const TruncSeries ratio_cp = sih_ratio_via_division(cp, uc_vec(), ctx, cap);
  const TruncSeries ratio_cm = sih_ratio_via_division(cm, uc_vec(), ctx, cap);

  const TruncSeries term1 =
      mul(embed(GroupRingElem::exponential((am / 2) * ua_vec(), ctx), cap), mul(ratio_b, ratio_cp));
  const TruncSeries term2 =
      mul(embed(GroupRingElem::exponential((bp / 2) * ub_vec(), ctx), cap), mul(ratio_cm, ratio_a));
  const ExpVec third = (cp / 2) * uc_vec() + Rational(1, 2) * ub_vec();
  const TruncSeries term3 =
      mul(embed(GroupRingElem::exponential(third, ctx), cap), mul(ratio_a, ratio_b));

  return add(add(term1, term2), term3);
}

TruncSeries d_sigma(const AlexSeries& a, const SurfaceTriple& t) {
  const TruncSeries gamma = gamma_from_series(a);
  if (gamma.valid_to() < 2) {
    throw error("cap too small: Gamma is only valid to degree " +
                std::to_string(gamma.valid_to()));
  }
  const TruncSeries dabc = d_abc(t, a.series.valid_to());
  const TruncSeries eabc = e_abc(t, a.series.valid_to());
  return add(mul(dabc, a.series), mul(eabc, gamma));
}

AlexSeries dehn_twist_transform(const AlexSeries& a, const SurfaceTriple& t) {
  const int cap = a.series.valid_to();
  const long long ctx = context_denom_for(t.b);
  const ExpVec half_b_ua = (t.b / 2) * ua_vec();
  const ExpVec minus_half_b_uc = -(t.b / 2) * uc_vec();

  TruncSeries rhs = scale(
      mul(embed(sih_elem(uc_vec(), ctx) * GroupRingElem::exponential(half_b_ua, ctx), cap),
          a.series),
      Rational(-1));
  rhs = sub(rhs, mul(embed(sih_elem(ua_vec(), ctx) *
                               GroupRingElem::exponential(minus_half_b_uc, ctx),
                           cap),
                     bar_series(a.series)));

  const TruncSeries in_old_basis = divide_by_sih(rhs, ub_vec());
  // primed coordinates: ua' = ua, ub' = ua + ub, so substitute ub -> ub - ua
  const TruncSeries in_primed_basis =
      subst_linear(in_old_basis, Rational(1), Rational(0), Rational(-1), Rational(1));
  return AlexSeries{in_primed_basis, a.h1, a.ell, in_primed_basis.valid_to()};
}

}  // namespace g1k
