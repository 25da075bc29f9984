#ifndef G1K_TESTS_ORACLES_HPP
#define G1K_TESTS_ORACLES_HPP

// Independent oracles used by the tests. These compute expected values along
// routes that do not share code with the implementations they check.

#include "g1k/group_ring.hpp"
#include "g1k/invariants.hpp"

namespace g1k::test_oracles {

/// sih(ua) sih(ub) sih(uc) by direct expansion of the eight products of
/// exp(+-ua/2) exp(+-ub/2) exp(+-uc/2), with uc = -ua - ub folded in by hand.
inline GroupRingElem sih3_expanded() {
  GroupRingElem out(1);
  // (e^{a/2}-e^{-a/2})(e^{b/2}-e^{-b/2})(e^{c/2}-e^{-c/2}), c = -a-b:
  // sign = product of the three +-1 choices; exponent = (sa*a + sb*b + sc*c)/2
  for (int sa : {1, -1}) {
    for (int sb : {1, -1}) {
      for (int sc : {1, -1}) {
        const Rational p = Rational(sa - sc, 2);  // coefficient of ua
        const Rational q = Rational(sb - sc, 2);  // coefficient of ub
        out.add_term(ExpVec{p, q}, Rational(sa * sb * sc));
      }
    }
  }
  return out;
}

/// D(a,b,c) materialized as a Laurent element for an odd integer triple,
/// through the geometric-sum form of each sih ratio.
inline GroupRingElem d_abc_laurent(long long a, long long b, long long c) {
  const long long am = (a - 1) / 2, bp = (b + 1) / 2;
  const long long cm = (c - 1) / 2, cp = (c + 1) / 2;
  const long long ctx = 2;
  GroupRingElem out = GroupRingElem::exponential(Rational(am, 2) * ua_vec(), ctx) *
                      sih_ratio_elem(bp, ub_vec(), ctx) * sih_ratio_elem(cp, uc_vec(), ctx);
  out += GroupRingElem::exponential(Rational(bp, 2) * ub_vec(), ctx) *
         sih_ratio_elem(cm, uc_vec(), ctx) * sih_ratio_elem(am, ua_vec(), ctx);
  out += GroupRingElem::exponential(Rational(cp, 2) * uc_vec() + Rational(1, 2) * ub_vec(), ctx) *
         sih_ratio_elem(am, ua_vec(), ctx) * sih_ratio_elem(bp, ub_vec(), ctx);
  return out;
}

}  // namespace g1k::test_oracles

#endif  // G1K_TESTS_ORACLES_HPP
