#ifndef G1K_GROUP_RING_HPP
#define G1K_GROUP_RING_HPP

#include <compare>
#include <map>
#include <string>

#include "g1k/rational.hpp"

namespace g1k {

/// Exponent vector p*ua + q*ub of a Laurent monomial exp(p*ua + q*ub).
/// The third boundary variable uc is never stored: uc = -ua - ub.
struct ExpVec {
  Rational p;  // coefficient of ua
  Rational q;  // coefficient of ub

  ExpVec() = default;
  ExpVec(Rational p_, Rational q_) : p(std::move(p_)), q(std::move(q_)) {}

  friend ExpVec operator+(const ExpVec& x, const ExpVec& y) { return {x.p + y.p, x.q + y.q}; }
  friend ExpVec operator-(const ExpVec& x, const ExpVec& y) { return {x.p - y.p, x.q - y.q}; }
  friend ExpVec operator-(const ExpVec& x) { return {-x.p, -x.q}; }
  friend ExpVec operator*(const Rational& s, const ExpVec& x) { return {s * x.p, s * x.q}; }
  friend bool operator==(const ExpVec& x, const ExpVec& y) = default;

  bool is_zero() const { return p == 0 && q == 0; }
};

inline ExpVec ua_vec() { return {Rational(1), Rational(0)}; }
inline ExpVec ub_vec() { return {Rational(0), Rational(1)}; }
inline ExpVec uc_vec() { return {Rational(-1), Rational(-1)}; }

/// Element of the group ring of Laurent monomials exp(p*ua + q*ub) with
/// rational coefficients. Every element carries the context denominator D
/// of its exponent lattice (1/(2D)) Z^2; mixing lattices is an error.
class GroupRingElem {
 public:
  /// Exponent key scaled to integers: exponent = (np*ua + nq*ub) / (2D).
  struct Key {
    long long np = 0;
    long long nq = 0;

    // graded lexicographic on the scaled exponents, for deterministic output
    friend std::strong_ordering operator<=>(const Key& a, const Key& b) {
      if (auto c = (a.np + a.nq) <=> (b.np + b.nq); c != 0) return c;
      return a.np <=> b.np;
    }
    friend bool operator==(const Key& a, const Key& b) {
      return a.np == b.np && a.nq == b.nq;
    }
  };

  using TermMap = std::map<Key, Rational>;

  explicit GroupRingElem(long long context_denom = 1);

  static GroupRingElem zero(long long context_denom = 1);
  static GroupRingElem constant(const Rational& c, long long context_denom = 1);
  /// exp(x); throws lattice_mismatch if x is not on the (1/(2D)) lattice.
  static GroupRingElem exponential(const ExpVec& x, long long context_denom = 1);

  long long context_denom() const { return denom_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Coefficient of exp(x); zero if x is absent or off-lattice.
  Rational coeff(const ExpVec& x) const;

  void add_term(const ExpVec& x, const Rational& c);

  GroupRingElem& operator+=(const GroupRingElem& rhs);
  GroupRingElem& operator-=(const GroupRingElem& rhs);
  GroupRingElem& operator*=(const GroupRingElem& rhs);
  GroupRingElem& operator*=(const Rational& scalar);

  friend GroupRingElem operator+(GroupRingElem a, const GroupRingElem& b) { return a += b; }
  friend GroupRingElem operator-(GroupRingElem a, const GroupRingElem& b) { return a -= b; }
  friend GroupRingElem operator*(GroupRingElem a, const GroupRingElem& b) { return a *= b; }
  friend GroupRingElem operator*(const Rational& s, GroupRingElem a) { return a *= s; }
  friend GroupRingElem operator-(const GroupRingElem& a);

  friend bool operator==(const GroupRingElem& a, const GroupRingElem& b);

  /// Re-expresses the element on a finer lattice (new D a multiple of D).
  GroupRingElem rescaled(long long new_context_denom) const;

  std::string to_string() const;

 private:
  void check_same_lattice(const GroupRingElem& rhs) const;
  Key key_for(const ExpVec& x) const;  // throws lattice_mismatch when off-lattice

  long long denom_;  // context denominator D; exponents lie in (1/(2D)) Z^2
  TermMap terms_;    // no zero coefficients stored
};

/// The bar involution exp(x) -> exp(-x), extended linearly.
GroupRingElem grg_bar(const GroupRingElem& x);

/// sih(L) = exp(L/2) - exp(-L/2).
GroupRingElem sih_elem(const ExpVec& L, long long context_denom = 1);

/// cosh(L) = (exp(L/2) + exp(-L/2)) / 2.
GroupRingElem cosh_elem(const ExpVec& L, long long context_denom = 1);

/// sih(k*L)/sih(L) for integer k, as the Laurent element
/// sign(k) * sum_{j=0..|k|-1} exp((j - (|k|-1)/2) * L).
GroupRingElem sih_ratio_elem(long long k, const ExpVec& L, long long context_denom = 1);

}  // namespace g1k

#endif  // G1K_GROUP_RING_HPP
