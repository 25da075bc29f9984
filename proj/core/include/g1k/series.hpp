#ifndef G1K_SERIES_HPP
#define G1K_SERIES_HPP

#include <string>
#include <vector>

#include "g1k/group_ring.hpp"
#include "g1k/rational.hpp"

namespace g1k {

/// Truncated formal power series in Q[[ua, ub]] (uc eliminated through
/// uc = -ua - ub), stored by homogeneous degree.
///
/// `cap` is the construction truncation; `valid_to` <= cap is the highest
/// degree whose coefficients are guaranteed exact. Exact divisions lower
/// `valid_to`; reading a coefficient above it throws degree_out_of_range
/// instead of returning a silent zero.
class TruncSeries {
 public:
  explicit TruncSeries(int cap);

  static TruncSeries zero(int cap) { return TruncSeries(cap); }
  static TruncSeries constant(const Rational& c, int cap);
  /// The linear form p*ua + q*ub as a series.
  static TruncSeries linear(const ExpVec& L, int cap);
  /// c * ua^i * ub^j.
  static TruncSeries monomial(const Rational& c, int i, int j, int cap);

  int cap() const { return cap_; }
  int valid_to() const { return valid_to_; }

  /// Coefficient of ua^i * ub^j; i, j >= 0 and i + j <= valid_to.
  const Rational& coeff(int i, int j) const;
  void set_coeff(int i, int j, const Rational& c);

  bool is_zero() const;  // up to valid_to

  /// Copy truncated/marked valid to the given degree (must be <= valid_to).
  TruncSeries truncated(int new_valid_to) const;

  std::string to_string() const;

 private:
  void check_degree(int d) const;

  int cap_;
  int valid_to_;
  std::vector<std::vector<Rational>> parts_;  // parts_[d][i] = coeff of ua^i ub^(d-i)
  friend TruncSeries add(const TruncSeries&, const TruncSeries&);
  friend TruncSeries sub(const TruncSeries&, const TruncSeries&);
  friend TruncSeries mul(const TruncSeries&, const TruncSeries&);
  friend TruncSeries scale(const TruncSeries&, const Rational&);
  friend TruncSeries bar_series(const TruncSeries&);
  friend TruncSeries even_part(const TruncSeries&);
  friend TruncSeries odd_part(const TruncSeries&);
  friend TruncSeries degree_part(const TruncSeries&, int);
  friend TruncSeries divide_by_linear(const TruncSeries&, const ExpVec&);
  friend TruncSeries divide_by_unit(const TruncSeries&, const TruncSeries&);
  friend TruncSeries subst_linear(const TruncSeries&, const Rational&, const Rational&,
                                  const Rational&, const Rational&);
  friend TruncSeries restrict_ua_zero(const TruncSeries&);
  friend TruncSeries embed(const GroupRingElem&, int);
};

TruncSeries add(const TruncSeries& s, const TruncSeries& t);
TruncSeries sub(const TruncSeries& s, const TruncSeries& t);
TruncSeries mul(const TruncSeries& s, const TruncSeries& t);
TruncSeries scale(const TruncSeries& s, const Rational& c);

inline TruncSeries operator+(const TruncSeries& s, const TruncSeries& t) { return add(s, t); }
inline TruncSeries operator-(const TruncSeries& s, const TruncSeries& t) { return sub(s, t); }
inline TruncSeries operator*(const TruncSeries& s, const TruncSeries& t) { return mul(s, t); }
inline TruncSeries operator*(const Rational& c, const TruncSeries& s) { return scale(s, c); }
inline TruncSeries operator-(const TruncSeries& s) { return scale(s, Rational(-1)); }

/// exp(x) |-> sum x^n / n!, extended linearly; exact to `cap`.
TruncSeries embed(const GroupRingElem& x, int cap);

/// Degree-d part multiplied by (-1)^d; the series image of the bar involution.
TruncSeries bar_series(const TruncSeries& s);

TruncSeries even_part(const TruncSeries& s);
TruncSeries odd_part(const TruncSeries& s);

/// The homogeneous degree-d part (d <= valid_to) as a series.
TruncSeries degree_part(const TruncSeries& s, int d);

/// Exact division by the linear form L != 0; the result q satisfies
/// q * L = s up to valid_to(s) and has valid_to = valid_to(s) - 1.
/// Throws not_divisible when any homogeneous part leaves a remainder.
TruncSeries divide_by_linear(const TruncSeries& s, const ExpVec& L);

/// s * u^-1 for a unit u (nonzero constant term); valid_to = min of operands.
TruncSeries divide_by_unit(const TruncSeries& s, const TruncSeries& u);

/// Substitutes ua -> m00*ua + m01*ub, ub -> m10*ua + m11*ub; the matrix must
/// be invertible. Degree-preserving algebra morphism.
TruncSeries subst_linear(const TruncSeries& s, const Rational& m00, const Rational& m01,
                         const Rational& m10, const Rational& m11);

/// Evaluation at ua = 0, leaving a series in ub only.
TruncSeries restrict_ua_zero(const TruncSeries& s);

/// True when coefficients agree for every degree <= d (requires d <= both valid_to).
bool agree_to(const TruncSeries& s, const TruncSeries& t, int d);

/// Agreement up to min(valid_to of both).
bool agree_on_common(const TruncSeries& s, const TruncSeries& t);

/// sih(L)/L = 1 + L^2/24 + L^4/1920 + ..., a unit series exact to cap.
TruncSeries sih_over_linear(const ExpVec& L, int cap);

/// sih(k*L)/sih(L) as a series, exact to cap, for any rational k.
TruncSeries sih_ratio_series(const Rational& k, const ExpVec& L, int cap);

/// Exact division by sih(L): divide by the linear form L, then by the unit
/// sih(L)/L. Lowers valid_to by one.
TruncSeries divide_by_sih(const TruncSeries& s, const ExpVec& L);

}  // namespace g1k

#endif  // G1K_SERIES_HPP
