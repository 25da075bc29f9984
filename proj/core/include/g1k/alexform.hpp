#ifndef G1K_ALEXFORM_HPP
#define G1K_ALEXFORM_HPP

#include <array>
#include <utility>
#include <vector>

#include "g1k/invariants.hpp"
#include "g1k/series.hpp"

namespace g1k {

/// Full input record for the exterior of a genus one Seifert surface in a
/// rational homology sphere. The Alexander series of the exterior is not
/// computed from topology here; this record is the data boundary, and
/// build_alexander_series materializes the series it determines.
struct AlexFormData {
  long long h1 = 1;            // |H1| of the ambient manifold, positive
  Rational ell;                // lk(A, B)
  Rational lA, lB, lC;         // lambda' of the three boundary curves
  Rational lE;                 // lambda'(E; ua, ub, uc)
  /// Homogeneous tails, one entry per degree: (degree, coefficients of
  /// ua^i ub^(d-i) for i = 0..d). even_tail holds even degrees 4..cap of the
  /// even part; gamma_tail holds even degrees 2..cap-3 of Gamma.
  std::vector<std::pair<int, std::vector<Rational>>> even_tail;
  std::vector<std::pair<int, std::vector<Rational>>> gamma_tail;
  int cap = 8;
  std::array<long long, 3> orders{1, 1, 1};  // O(A), O(B), O(C)

  /// Context denominator accommodating the orders and ell.
  long long context_denom() const;

  /// Throws not_alexander_form on structural violations (odd-degree tails,
  /// cap < 6, non-positive h1 or orders).
  void validate() const;
};

/// A normalized Alexander series of a genus two rational homology
/// handlebody exterior: degree 0 equals h1, degree 1 vanishes, degree 3 is
/// proportional to ua*ub*uc and the odd part is divisible by
/// sih(ua) sih(ub) sih(uc).
struct AlexSeries {
  TruncSeries series;
  long long h1 = 1;
  Rational ell;
  int cap = 8;
};

/// Materializes the series determined by the data: the even part is
/// h1 * (1 + delta_Delta) + even_tail, the odd part is
/// -1/2 sih(ua) sih(ub) sih(uc) * Gamma with Gamma = -h1*lE + gamma_tail.
AlexSeries build_alexander_series(const AlexFormData& d);

struct NormalizeResult {
  ExpVec unit_exponent;  // v with embed(exp(v)) * raw normalized
  AlexSeries series;
  Rational lA, lB, lC, lE;
};

/// Normalizes a raw series by the unique exponential unit killing its
/// degree-1 part, then reads lambda' of the curves off degrees 2 and 3 and
/// checks the structural constraints.
/// Throws wrong_constant_term when |degree-0| != h1, and not_alexander_form
/// when degree 3 is not proportional to ua*ub*uc or the odd part is not
/// divisible by the three sih factors.
NormalizeResult normalize_alexander_series(const TruncSeries& raw, long long h1,
                                           const Rational& ell = Rational(0));

/// Gamma with sih(ua) sih(ub) sih(uc) * Gamma = bar(A) - A; even, constant
/// term -h1 * lambda'(E), valid to cap - 3.
TruncSeries gamma_from_series(const AlexSeries& a);

/// The two-variable Alexander polynomial Delta(A, B):
/// sih(uc) Delta(A,B) = exp(-(ell/2) uc) bar(A) - exp((ell/2) uc) A.
TruncSeries delta_ab(const AlexSeries& a);

/// The pairing series of ub with the lift of the curve A:
/// sih(uc) * result = exp(((1-2 ell)/2) uc) bar(A) - exp((1/2) uc) A.
/// Satisfies exp(((ell-1)/2) uc) * result = Delta(A, B).
TruncSeries ub_wedge_curve_a(const AlexSeries& a);

/// E(a,b,c) as an exact Laurent element; both defining expressions (the
/// sih-product form and the six-exponential form) are computed and asserted
/// equal.
GroupRingElem e_abc_elem(const SurfaceTriple& t);

/// E(a,b,c) embedded as a series; degree 2 equals -P.
TruncSeries e_abc(const SurfaceTriple& t, int cap);

/// The Alexander series D(a,b,c) of the standard surface: three-term
/// product of sih ratios. Even; degree 0 is lambda'(a,b,c).
TruncSeries d_abc(const SurfaceTriple& t, int cap);

/// D(Sigma) = D(a,b,c) * A + E(a,b,c) * Gamma. Even series with degree 0
/// h1 * lambda'(a,b,c); valid to cap - 3.
TruncSeries d_sigma(const AlexSeries& a, const SurfaceTriple& t);

/// Image of the Alexander series under the Dehn twist that maps the triple
/// to (a+2b, 2b+c, -b) and the variables to (ua' = ua, ub' = -uc):
/// sih(ub) A'(in old variables) = -sih(uc) exp((b/2) ua) A
///                                - sih(ua) exp(-(b/2) uc) bar(A),
/// re-expressed in the primed basis. The result is valid to cap - 1.
AlexSeries dehn_twist_transform(const AlexSeries& a, const SurfaceTriple& t);

/// Context denominator large enough for all exponents of E(a,b,c)/D(a,b,c).
long long context_denom_for_triple(const SurfaceTriple& t);

}  // namespace g1k

#endif  // G1K_ALEXFORM_HPP
