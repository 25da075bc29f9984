#ifndef G1K_INVARIANTS_HPP
#define G1K_INVARIANTS_HPP

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "g1k/rational.hpp"
#include "g1k/series.hpp"

namespace g1k {

/// The framing triple (a, b, c) of a genus one Seifert surface:
/// lk(alpha, alpha_-) = (b+c)/2, lk(beta, beta_-) = (c+a)/2,
/// lk(gamma, gamma_-) = (a+b)/2 for the symplectic curves alpha, beta and
/// gamma = -alpha - beta. In strict mode the entries are odd integers
/// (the null-homologous case).
struct SurfaceTriple {
  Rational a, b, c;
  bool strict_odd = false;

  SurfaceTriple(Rational a_, Rational b_, Rational c_, bool strict = false);
};

/// Genus one Seifert matrix [[v11, v12], [v21, v22]] with v12 - v21 = 1.
struct SeifertMatrix {
  Rational v11, v12, v21, v22;
};

/// The lambda' inputs attached to the curves of a surface: lA, lB, lC for
/// the three boundary curves, lAB for the Sato-Levine pairing
/// lambda'(A, B) = lambda'(E; ua, ub, uc), and ell = lk(A, B).
struct CurveLambdas {
  Rational lA, lB, lC;
  Rational lAB;
  Rational ell;
};

/// Quadratic form x*ua^2 + y*ua*ub + z*ub^2 (uc already eliminated).
struct QuadForm {
  Rational ua2, uaub, ub2;

  friend QuadForm operator+(const QuadForm& l, const QuadForm& r) {
    return {l.ua2 + r.ua2, l.uaub + r.uaub, l.ub2 + r.ub2};
  }
  friend QuadForm operator-(const QuadForm& l, const QuadForm& r) {
    return {l.ua2 - r.ua2, l.uaub - r.uaub, l.ub2 - r.ub2};
  }
  friend QuadForm operator*(const Rational& s, const QuadForm& q) {
    return {s * q.ua2, s * q.uaub, s * q.ub2};
  }
  friend bool operator==(const QuadForm& l, const QuadForm& r) = default;

  std::string to_string() const;
};

/// Lossless conversions to/from the degree-2 part of a series.
QuadForm quadform_from_series(const TruncSeries& s);
TruncSeries quadform_to_series(const QuadForm& q, int cap);

/// Expands x_a ua^2 + x_b ub^2 + x_c uc^2 + x_ab ua*ub + x_bc ub*uc +
/// x_ca uc*ua through uc = -ua - ub.
QuadForm quad_from_uc_basis(const Rational& xa, const Rational& xb, const Rational& xc,
                            const Rational& xab, const Rational& xbc, const Rational& xca);

/// Substitutes ua -> m00*ua + m01*ub, ub -> m10*ua + m11*ub in a quadratic form.
QuadForm quad_subst(const QuadForm& q, const Rational& m00, const Rational& m01,
                    const Rational& m10, const Rational& m11);

/// Laurent polynomial in t^(1/2): exponents stored in half-integer steps.
class AlexanderPoly {
 public:
  AlexanderPoly() = default;
  static AlexanderPoly constant(const Rational& c);
  /// c * t^(half/2).
  static AlexanderPoly half_power(const Rational& c, long long half);

  using TermMap = std::map<long long, Rational, std::greater<long long>>;

  void add_term(long long half_exponent, const Rational& c);
  Rational coeff_half(long long half_exponent) const;
  const TermMap& terms() const { return terms_; }

  friend AlexanderPoly operator+(const AlexanderPoly& l, const AlexanderPoly& r);
  friend AlexanderPoly operator-(const AlexanderPoly& l, const AlexanderPoly& r);
  friend AlexanderPoly operator*(const AlexanderPoly& l, const AlexanderPoly& r);
  friend AlexanderPoly operator*(const Rational& s, const AlexanderPoly& p);
  friend bool operator==(const AlexanderPoly& l, const AlexanderPoly& r) = default;

  Rational eval_one() const;       // value at t = 1
  bool is_palindromic() const;     // invariant under t -> 1/t
  std::string to_string() const;   // descending powers of t

 private:
  TermMap terms_;
};

// ---- scalar invariants -----------------------------------------------------

/// lambda'(a,b,c) = (ab + ac + bc + 1) / 4; the determinant of a Seifert
/// matrix realizing the triple.
Rational lambda_prime_triple(const SurfaceTriple& t);

/// w_delta(a,b,c), computed through both closed forms (the product form and
/// the symmetric-function form), which are asserted equal.
Rational w_del_triple(const SurfaceTriple& t);

/// w_delta(Sigma) = 4a*lambda'(alpha) + 4b*lambda'(beta) + 4c*lambda'(gamma)
///                + w_delta(a,b,c).
Rational w_del_surface(const SurfaceTriple& t, const CurveLambdas& l);

/// Reads the framing triple off a Seifert matrix; throws bad_symplectic
/// unless v12 - v21 = 1. Satisfies lambda_prime_triple(result) = det(V).
SurfaceTriple triple_from_seifert(const SeifertMatrix& v);

/// The canonical Seifert matrix of the triple (the one printed by the CLI):
/// [[(b+c)/2, -(c-1)/2], [-(c+1)/2, (c+a)/2]].
SeifertMatrix seifert_from_triple(const SurfaceTriple& t);

/// Delta(K)(t) = h1 * det(t^(1/2) V - t^(-1/2) V^T) for a square matrix of
/// even size 2g; throws odd_dimension otherwise. Palindromic, value h1 at 1.
AlexanderPoly alexander_from_seifert(const std::vector<std::vector<Rational>>& v, long long h1);

/// P = (a/2) ua^2 + (b/2) ub^2 + (c/2) uc^2, expanded through
/// uc = -ua - ub; also computed as ua (x)s beta - ub (x)s alpha and asserted
/// equal.
QuadForm p_star(const SurfaceTriple& t);

/// The degree-two structure polynomial delta_2; all three closed forms are
/// computed and asserted equal.
QuadForm delta2(const SurfaceTriple& t);

/// delta_Delta = -lA ub*uc - lB uc*ua - lC ua*ub, expanded through
/// uc = -ua - ub.
QuadForm delta_delta(const CurveLambdas& l);

/// The linear functional with W_s(ua^2) = b+c, W_s(ub^2) = c+a,
/// W_s(ua*ub) = -c.
Rational w_s_eval(const QuadForm& q, const SurfaceTriple& t);

/// Degree-2k pairing functional: sums, over the perfect pairings of the 2k
/// basis vectors of each monomial, the products of the symmetrized Seifert
/// pair values (ua,ua) -> b+c, (ub,ub) -> c+a, (ua,ub) -> -c.
/// h must be homogeneous of degree 2k, with 1 <= k <= 4.
Rational w_s_2k(const TruncSeries& h, const SurfaceTriple& t, int k);

/// w_SL(Sigma) = lambda'(A,B) - w_delta(a,b,c)/12.
Rational w_sl(const SurfaceTriple& t, const CurveLambdas& l);

/// w_3 = (3/2) lambda'(A,B) - (1/4) w_delta(a,b,c)
///       - (a/2) lA - (b/2) lB - (c/2) lC.
Rational w3(const SurfaceTriple& t, const CurveLambdas& l);

/// Recovers (w_SL, w_delta(Sigma)) from w_3, W_s(D_2), |H1| and
/// lambda'(boundary); throws degenerate_lambda when 7*lambda' = 1.
std::pair<Rational, Rational> recover_from_w3(const Rational& w3_value, const Rational& ws_d2,
                                              long long h1, const Rational& lambda_k);

/// Action of a Dehn twist on the framing triple: (a+2b, 2b+c, -b).
SurfaceTriple dehn_twist_triple(const SurfaceTriple& t);

/// Cyclic permutation (a,b,c) -> (b,c,a).
SurfaceTriple cyclic_triple(const SurfaceTriple& t);

/// Mirror image: (a,b,c) -> (-a,-b,-c).
SurfaceTriple mirror_triple(const SurfaceTriple& t);

}  // namespace g1k

#endif  // G1K_INVARIANTS_HPP
