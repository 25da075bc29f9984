#include "g1k/invariants.hpp"

#include <sstream>

namespace g1k {

SurfaceTriple::SurfaceTriple(Rational a_, Rational b_, Rational c_, bool strict)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), strict_odd(strict) {
  if (strict_odd && !(is_odd_integer(a) && is_odd_integer(b) && is_odd_integer(c))) {
    throw parity_error("strict mode requires odd integer framings, got (" + to_string(a) + ", " +
                       to_string(b) + ", " + to_string(c) + ")");
  }
}

QuadForm quad_from_uc_basis(const Rational& xa, const Rational& xb, const Rational& xc,
                            const Rational& xab, const Rational& xbc, const Rational& xca) {
  return QuadForm{xa + xc - xca, 2 * xc + xab - xbc - xca, xb + xc - xbc};
}

std::string QuadForm::to_string() const {
  return quadform_to_series(*this, 2).to_string();
}

QuadForm quadform_from_series(const TruncSeries& s) {
  return QuadForm{s.coeff(2, 0), s.coeff(1, 1), s.coeff(0, 2)};
}

TruncSeries quadform_to_series(const QuadForm& q, int cap) {
  if (cap < 2) throw error("cap too small for a quadratic form");
  TruncSeries s(cap);
  s.set_coeff(2, 0, q.ua2);
  s.set_coeff(1, 1, q.uaub);
  s.set_coeff(0, 2, q.ub2);
  return s;
}

QuadForm quad_subst(const QuadForm& q, const Rational& m00, const Rational& m01,
                    const Rational& m10, const Rational& m11) {
  // ua^2 -> (m00 ua + m01 ub)^2, etc.
  return QuadForm{q.ua2 * m00 * m00 + q.uaub * m00 * m10 + q.ub2 * m10 * m10,
                  2 * q.ua2 * m00 * m01 + q.uaub * (m00 * m11 + m01 * m10) + 2 * q.ub2 * m10 * m11,
                  q.ua2 * m01 * m01 + q.uaub * m01 * m11 + q.ub2 * m11 * m11};
}

// ---- AlexanderPoly ----------------------------------------------------------

AlexanderPoly AlexanderPoly::constant(const Rational& c) {
  AlexanderPoly p;
  p.add_term(0, c);
  return p;
}

AlexanderPoly AlexanderPoly::half_power(const Rational& c, long long half) {
  AlexanderPoly p;
  p.add_term(half, c);
  return p;
}

void AlexanderPoly::add_term(long long half_exponent, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(half_exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational AlexanderPoly::coeff_half(long long half_exponent) const {
  auto it = terms_.find(half_exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

AlexanderPoly operator+(const AlexanderPoly& l, const AlexanderPoly& r) {
  AlexanderPoly out = l;
  for (const auto& [h, c] : r.terms_) out.add_term(h, c);
  return out;
}

AlexanderPoly operator-(const AlexanderPoly& l, const AlexanderPoly& r) {
  AlexanderPoly out = l;
  for (const auto& [h, c] : r.terms_) out.add_term(h, -c);
  return out;
}

AlexanderPoly operator*(const AlexanderPoly& l, const AlexanderPoly& r) {
  AlexanderPoly out;
  for (const auto& [ha, ca] : l.terms_) {
    for (const auto& [hb, cb] : r.terms_) out.add_term(ha + hb, ca * cb);
  }
  return out;
}

AlexanderPoly operator*(const Rational& s, const AlexanderPoly& p) {
  AlexanderPoly out;
  for (const auto& [h, c] : p.terms_) out.add_term(h, s * c);
  return out;
}

Rational AlexanderPoly::eval_one() const {
  Rational out(0);
  for (const auto& [h, c] : terms_) out += c;
  return out;
}

bool AlexanderPoly::is_palindromic() const {
  for (const auto& [h, c] : terms_) {
    if (coeff_half(-h) != c) return false;
  }
  return true;
}

std::string AlexanderPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [h, c] : terms_) {
    const Rational c_abs = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    std::string mono;
    if (h == 2) {
      mono = "t";
    } else if (h != 0) {
      if (h % 2 == 0) {
        mono = "t^" + std::to_string(h / 2);
      } else {
        mono = "t^{" + std::to_string(h) + "/2}";
      }
    }
    if (mono.empty()) {
      os << g1k::to_string(c_abs);
    } else if (c_abs == 1) {
      os << mono;
    } else {
      os << g1k::to_string(c_abs) << "*" << mono;
    }
  }
  return os.str();
}

// ---- scalar invariants ------------------------------------------------------

Rational lambda_prime_triple(const SurfaceTriple& t) {
  return (t.a * t.b + t.a * t.c + t.b * t.c + 1) / 4;
}

Rational w_del_triple(const SurfaceTriple& t) {
  const Rational lp = lambda_prime_triple(t);
  const Rational product_form =
      (t.a + t.b) / 2 * ((t.b + t.c) / 2) * ((t.c + t.a) / 2) - lp * (t.a + t.b + t.c);
  const Rational symmetric_form =
      -(t.a * t.a * (t.b + t.c) + t.b * t.b * (t.c + t.a) + t.c * t.c * (t.a + t.b)) / 8 -
      t.a * t.b * t.c / 2 - (t.a + t.b + t.c) / 4;
  if (product_form != symmetric_form) {
    throw error("internal: the two closed forms of w_delta disagree");
  }
  return product_form;
}

Rational w_del_surface(const SurfaceTriple& t, const CurveLambdas& l) {
  return 4 * t.a * l.lA + 4 * t.b * l.lB + 4 * t.c * l.lC + w_del_triple(t);
}

SurfaceTriple triple_from_seifert(const SeifertMatrix& v) {
  if (v.v12 - v.v21 != 1) {
    throw bad_symplectic("Seifert matrix must satisfy v12 - v21 = 1, got v12 - v21 = " +
                         to_string(v.v12 - v.v21));
  }
  const Rational c = -v.v12 - v.v21;
  return SurfaceTriple(2 * v.v22 - c, 2 * v.v11 - c, c);
}

SeifertMatrix seifert_from_triple(const SurfaceTriple& t) {
  return SeifertMatrix{(t.b + t.c) / 2, -(t.c - 1) / 2, -(t.c + 1) / 2, (t.c + t.a) / 2};
}

namespace {

AlexanderPoly alexander_det(const std::vector<std::vector<AlexanderPoly>>& m,
                            std::vector<int>& cols, int row) {
  const int n = static_cast<int>(m.size());
  if (row == n) return AlexanderPoly::constant(Rational(1));
  AlexanderPoly out;
  int sign = 1;
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const int col = cols[k];
    cols.erase(cols.begin() + static_cast<long>(k));
    AlexanderPoly minor_det = alexander_det(m, cols, row + 1);
    cols.insert(cols.begin() + static_cast<long>(k), col);
    AlexanderPoly contribution = m[row][col] * minor_det;
    if (sign < 0) contribution = Rational(-1) * contribution;
    out = out + contribution;
    sign = -sign;
  }
  return out;
}

}  // namespace

AlexanderPoly alexander_from_seifert(const std::vector<std::vector<Rational>>& v, long long h1) {
  const int n = static_cast<int>(v.size());
  if (n == 0 || n % 2 != 0) {
    throw odd_dimension("Seifert matrix must have even positive size, got " + std::to_string(n));
  }
  for (const auto& row : v) {
    if (static_cast<int>(row.size()) != n) throw error("Seifert matrix must be square");
  }
  std::vector<std::vector<AlexanderPoly>> m(n, std::vector<AlexanderPoly>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      // t^(1/2) v_ij - t^(-1/2) v_ji
      m[i][j].add_term(1, v[i][j]);
      m[i][j].add_term(-1, -v[j][i]);
    }
  }
  std::vector<int> cols(n);
  for (int i = 0; i < n; ++i) cols[i] = i;
  return Rational(h1) * alexander_det(m, cols, 0);
}

QuadForm p_star(const SurfaceTriple& t) {
  const QuadForm direct = quad_from_uc_basis(t.a / 2, t.b / 2, t.c / 2, 0, 0, 0);

  // alpha = c_- uc - b_+ ub and beta = a_- ua - c_+ uc in the boundary basis
  const Rational am = (t.a - 1) / 2, bp = (t.b + 1) / 2;
  const Rational cm = (t.c - 1) / 2, cp = (t.c + 1) / 2;
  const Rational alpha_ua = -cm, alpha_ub = -cm - bp;
  const Rational beta_ua = am + cp, beta_ub = cp;
  const QuadForm tensor_route{beta_ua, beta_ub - alpha_ua, -alpha_ub};
  if (!(direct == tensor_route)) {
    throw error("internal: the two expressions of P disagree");
  }
  return direct;
}

QuadForm delta2(const SurfaceTriple& t) {
  const Rational &a = t.a, &b = t.b, &c = t.c;
  const Rational lp = lambda_prime_triple(t);

  const QuadForm e1 = quad_from_uc_basis(-(a * a + 2 * a * b + 2 * a * c + 3) / 24,
                                  -(b * b + 2 * b * c + 2 * b * a + 3) / 24,
                                  -(c * c + 2 * c * a + 2 * c * b + 3) / 24, 0, 0, 0);

  const QuadForm p = p_star(t);
  const QuadForm e2 =
      quad_from_uc_basis(a * a / 24, b * b / 24, c * c / 24, 0, 0, 0) - ((a + b + c) / 6) * p -
      quad_from_uc_basis(Rational(1, 8), Rational(1, 8), Rational(1, 8), 0, 0, 0);

  const Rational k = 8 * lp + 4;
  const QuadForm e3 = quad_from_uc_basis(0, 0, 0, ((a + b) * (a + b) + k) / 24,
                                  ((b + c) * (b + c) + k) / 24, ((c + a) * (c + a) + k) / 24);

  if (!(e1 == e2) || !(e1 == e3)) {
    throw error("internal: the closed forms of delta_2 disagree");
  }
  return e1;
}

QuadForm delta_delta(const CurveLambdas& l) {
  return quad_from_uc_basis(0, 0, 0, -l.lC, -l.lA, -l.lB);
}

Rational w_s_eval(const QuadForm& q, const SurfaceTriple& t) {
  return q.ua2 * (t.b + t.c) + q.uaub * (-t.c) + q.ub2 * (t.c + t.a);
}

namespace {

// sum over perfect pairings of the tail [pos..) of `kinds` (false = ua, true = ub)
Rational pairing_sum(std::vector<bool>& kinds, std::vector<bool>& used, std::size_t n_used,
                     const Rational& vaa, const Rational& vbb, const Rational& vab) {
  const std::size_t n = kinds.size();
  if (n_used == n) return Rational(1);
  std::size_t first = 0;
  while (used[first]) ++first;
  used[first] = true;
  Rational out(0);
  for (std::size_t m = first + 1; m < n; ++m) {
    if (used[m]) continue;
    used[m] = true;
    const Rational& pair_value =
        (kinds[first] == kinds[m]) ? (kinds[first] ? vbb : vaa) : vab;
    out += pair_value * pairing_sum(kinds, used, n_used + 2, vaa, vbb, vab);
    used[m] = false;
  }
  used[first] = false;
  return out;
}

}  // namespace

Rational w_s_2k(const TruncSeries& h, const SurfaceTriple& t, int k) {
  if (k < 1 || k > 4) {
    throw wrong_degree("pairing functional supports 1 <= k <= 4, got k = " + std::to_string(k));
  }
  const int target = 2 * k;
  if (h.valid_to() < target) {
    throw wrong_degree("input series is only valid to degree " + std::to_string(h.valid_to()) +
                       ", need " + std::to_string(target));
  }
  int nonzero_degree = -1;
  for (int d = 0; d <= h.valid_to(); ++d) {
    bool any = false;
    for (int i = 0; i <= d; ++i) {
      if (h.coeff(i, d - i) != 0) {
        any = true;
        break;
      }
    }
    if (!any) continue;
    if (nonzero_degree >= 0) throw not_homogeneous("input has parts in several degrees");
    nonzero_degree = d;
  }
  if (nonzero_degree >= 0 && nonzero_degree != target) {
    throw wrong_degree("homogeneous part has degree " + std::to_string(nonzero_degree) +
                       ", expected " + std::to_string(target));
  }

  const Rational vaa = t.b + t.c, vbb = t.c + t.a, vab = -t.c;
  Rational out(0);
  for (int i = 0; i <= target; ++i) {
    const Rational& c = h.coeff(i, target - i);
    if (c == 0) continue;
    std::vector<bool> kinds(static_cast<std::size_t>(target));
    for (int m = 0; m < target; ++m) kinds[static_cast<std::size_t>(m)] = (m >= i);
    std::vector<bool> used(kinds.size(), false);
    out += c * pairing_sum(kinds, used, 0, vaa, vbb, vab);
  }
  return out;
}

Rational w_sl(const SurfaceTriple& t, const CurveLambdas& l) {
  return l.lAB - w_del_triple(t) / 12;
}

Rational w3(const SurfaceTriple& t, const CurveLambdas& l) {
  return Rational(3, 2) * l.lAB - w_del_triple(t) / 4 - t.a / 2 * l.lA - t.b / 2 * l.lB -
         t.c / 2 * l.lC;
}

std::pair<Rational, Rational> recover_from_w3(const Rational& w3_value, const Rational& ws_d2,
                                              long long h1, const Rational& lambda_k) {
  const Rational d = 7 * lambda_k - 1;
  if (d == 0) throw degenerate_lambda("recovery degenerates at lambda' = 1/7");
  const Rational ws_norm = ws_d2 / h1;
  const Rational wsl_value = (2 * lambda_k * w3_value + ws_norm) / d;
  const Rational wdel_surface = 4 * ((2 - 8 * lambda_k) * w3_value + 3 * ws_norm) / d;
  return {wsl_value, wdel_surface};
}

SurfaceTriple dehn_twist_triple(const SurfaceTriple& t) {
  return SurfaceTriple(t.a + 2 * t.b, 2 * t.b + t.c, -t.b, t.strict_odd);
}

SurfaceTriple cyclic_triple(const SurfaceTriple& t) {
  return SurfaceTriple(t.b, t.c, t.a, t.strict_odd);
}

SurfaceTriple mirror_triple(const SurfaceTriple& t) {
  return SurfaceTriple(-t.a, -t.b, -t.c, t.strict_odd);
}

}  // namespace g1k
