#include "g1k/series.hpp"

#include <algorithm>
#include <sstream>

namespace g1k {

TruncSeries::TruncSeries(int cap) : cap_(cap), valid_to_(cap) {
  if (cap < 0) throw error("series cap must be >= 0");
  parts_.resize(cap + 1);
  for (int d = 0; d <= cap; ++d) parts_[d].assign(d + 1, Rational(0));
}

TruncSeries TruncSeries::constant(const Rational& c, int cap) {
  TruncSeries s(cap);
  s.parts_[0][0] = c;
  return s;
}

TruncSeries TruncSeries::linear(const ExpVec& L, int cap) {
  TruncSeries s(cap);
  if (cap >= 1) {
    s.parts_[1][1] = L.p;
    s.parts_[1][0] = L.q;
  }
  return s;
}

TruncSeries TruncSeries::monomial(const Rational& c, int i, int j, int cap) {
  if (i < 0 || j < 0 || i + j > cap) throw error("monomial degree exceeds cap");
  TruncSeries s(cap);
  s.parts_[i + j][i] = c;
  return s;
}

void TruncSeries::check_degree(int d) const {
  if (d < 0 || d > valid_to_) {
    throw degree_out_of_range("degree " + std::to_string(d) + " read above valid_to " +
                              std::to_string(valid_to_));
  }
}

const Rational& TruncSeries::coeff(int i, int j) const {
  check_degree(i + j);
  return parts_[i + j][i];
}

void TruncSeries::set_coeff(int i, int j, const Rational& c) {
  check_degree(i + j);
  parts_[i + j][i] = c;
}

bool TruncSeries::is_zero() const {
  for (int d = 0; d <= valid_to_; ++d) {
    for (const auto& c : parts_[d]) {
      if (c != 0) return false;
    }
  }
  return true;
}

TruncSeries TruncSeries::truncated(int new_valid_to) const {
  check_degree(new_valid_to < 0 ? 0 : new_valid_to);
  TruncSeries out(new_valid_to);
  for (int d = 0; d <= new_valid_to; ++d) out.parts_[d] = parts_[d];
  return out;
}

TruncSeries add(const TruncSeries& s, const TruncSeries& t) {
  const int v = std::min(s.valid_to_, t.valid_to_);
  TruncSeries out(std::min(s.cap_, t.cap_));
  out.valid_to_ = v;
  for (int d = 0; d <= v; ++d) {
    for (int i = 0; i <= d; ++i) out.parts_[d][i] = s.parts_[d][i] + t.parts_[d][i];
  }
  return out;
}

TruncSeries sub(const TruncSeries& s, const TruncSeries& t) {
  const int v = std::min(s.valid_to_, t.valid_to_);
  TruncSeries out(std::min(s.cap_, t.cap_));
  out.valid_to_ = v;
  for (int d = 0; d <= v; ++d) {
    for (int i = 0; i <= d; ++i) out.parts_[d][i] = s.parts_[d][i] - t.parts_[d][i];
  }
  return out;
}

TruncSeries mul(const TruncSeries& s, const TruncSeries& t) {
  const int v = std::min(s.valid_to_, t.valid_to_);
  TruncSeries out(std::min(s.cap_, t.cap_));
  out.valid_to_ = v;
  for (int ds = 0; ds <= v; ++ds) {
    for (int i = 0; i <= ds; ++i) {
      const Rational& a = s.parts_[ds][i];
      if (a == 0) continue;
      for (int dt = 0; ds + dt <= v; ++dt) {
        for (int k = 0; k <= dt; ++k) {
          const Rational& b = t.parts_[dt][k];
          if (b == 0) continue;
          out.parts_[ds + dt][i + k] += a * b;
        }
      }
    }
  }
  return out;
}

TruncSeries scale(const TruncSeries& s, const Rational& c) {
  TruncSeries out = s;
  for (int d = 0; d <= out.valid_to_; ++d) {
    for (auto& x : out.parts_[d]) x *= c;
  }
  return out;
}

TruncSeries embed(const GroupRingElem& x, int cap) {
  TruncSeries out(cap);
  const long long d2 = 2 * x.context_denom();
  for (const auto& [key, c] : x.terms()) {
    const Rational p(key.np, d2);
    const Rational q(key.nq, d2);
    // (p*ua + q*ub)^n / n! = sum_i C(n,i) p^i q^(n-i) ua^i ub^(n-i) / n!
    for (int n = 0; n <= cap; ++n) {
      const Rational inv_fact(Integer(1), factorial(n));
      for (int i = 0; i <= n; ++i) {
        if (p == 0 && i > 0) continue;
        if (q == 0 && i < n) continue;
        out.parts_[n][i] +=
            c * inv_fact * Rational(binomial(n, i)) * rational_pow(p, i) * rational_pow(q, n - i);
      }
    }
  }
  return out;
}

TruncSeries bar_series(const TruncSeries& s) {
  TruncSeries out = s;
  for (int d = 1; d <= out.valid_to_; d += 2) {
    for (auto& x : out.parts_[d]) x = -x;
  }
  return out;
}

TruncSeries even_part(const TruncSeries& s) {
  TruncSeries out = s;
  for (int d = 1; d <= out.valid_to_; d += 2) out.parts_[d].assign(d + 1, Rational(0));
  return out;
}

TruncSeries odd_part(const TruncSeries& s) {
  TruncSeries out = s;
  for (int d = 0; d <= out.valid_to_; d += 2) out.parts_[d].assign(d + 1, Rational(0));
  return out;
}

TruncSeries degree_part(const TruncSeries& s, int d) {
  s.check_degree(d);
  TruncSeries out(s.cap_);
  out.valid_to_ = s.valid_to_;
  out.parts_[d] = s.parts_[d];
  return out;
}

TruncSeries divide_by_linear(const TruncSeries& s, const ExpVec& L) {
  if (L.is_zero()) throw error("division by the zero linear form");
  const int v = s.valid_to_;
  if (v >= 0 && s.parts_[0][0] != 0) {
    throw not_divisible("constant term is not divisible by a linear form");
  }
  TruncSeries out(std::max(s.cap_ - 1, 0));
  out.valid_to_ = v - 1;  // may reach -1: no coefficient of the quotient is known
  const Rational& p = L.p;
  const Rational& q = L.q;
  for (int d = 1; d <= v; ++d) {
    // solve g * (p*ua + q*ub) = h for homogeneous h of degree d
    const auto& h = s.parts_[d];
    auto& g = out.parts_[d - 1];
    if (p != 0) {
      g[d - 1] = h[d] / p;
      for (int i = d - 1; i >= 1; --i) g[i - 1] = (h[i] - q * g[i]) / p;
      if (q * g[0] != h[0]) {
        throw not_divisible("remainder in homogeneous degree " + std::to_string(d));
      }
    } else {
      if (h[d] != 0) {
        throw not_divisible("remainder in homogeneous degree " + std::to_string(d));
      }
      for (int i = 0; i <= d - 1; ++i) g[i] = h[i] / q;
    }
  }
  return out;
}

TruncSeries divide_by_unit(const TruncSeries& s, const TruncSeries& u) {
  if (u.valid_to() < 0 || u.coeff(0, 0) == 0) {
    throw zero_constant_term("series divisor has zero constant term");
  }
  const int v = std::min(s.valid_to_, u.valid_to_);
  const Rational u0 = u.coeff(0, 0);
  TruncSeries out(std::min(s.cap_, u.cap_));
  out.valid_to_ = v;
  for (int d = 0; d <= v; ++d) {
    // w_d = (s_d - sum_{k=1..d} u_k * w_{d-k}) / u0, per homogeneous degree
    std::vector<Rational> acc = s.parts_[d];
    for (int k = 1; k <= d; ++k) {
      const auto& uk = u.parts_[k];
      const auto& w = out.parts_[d - k];
      for (int i = 0; i <= k; ++i) {
        if (uk[i] == 0) continue;
        for (int j = 0; j <= d - k; ++j) {
          if (w[j] == 0) continue;
          acc[i + j] -= uk[i] * w[j];
        }
      }
    }
    for (int i = 0; i <= d; ++i) out.parts_[d][i] = acc[i] / u0;
  }
  return out;
}

TruncSeries subst_linear(const TruncSeries& s, const Rational& m00, const Rational& m01,
                         const Rational& m10, const Rational& m11) {
  if (m00 * m11 - m01 * m10 == 0) throw singular_matrix("substitution matrix is singular");
  const int v = s.valid_to_;
  TruncSeries out(s.cap_);
  out.valid_to_ = v;
  for (auto& part : out.parts_) std::fill(part.begin(), part.end(), Rational(0));
  // powers of the images of ua and ub, as homogeneous coefficient rows
  // img_a = m00*ua + m01*ub, img_b = m10*ua + m11*ub
  std::vector<std::vector<Rational>> pow_a(v + 1), pow_b(v + 1);
  pow_a[0] = {Rational(1)};
  pow_b[0] = {Rational(1)};
  auto mul_lin = [](const std::vector<Rational>& h, const Rational& ca, const Rational& cb) {
    std::vector<Rational> out_h(h.size() + 1, Rational(0));
    for (std::size_t i = 0; i < h.size(); ++i) {
      out_h[i + 1] += h[i] * ca;
      out_h[i] += h[i] * cb;
    }
    return out_h;
  };
  for (int n = 1; n <= v; ++n) {
    pow_a[n] = mul_lin(pow_a[n - 1], m00, m01);
    pow_b[n] = mul_lin(pow_b[n - 1], m10, m11);
  }
  for (int d = 0; d <= v; ++d) {
    for (int i = 0; i <= d; ++i) {
      const Rational& c = s.parts_[d][i];
      if (c == 0) continue;
      const auto& pa = pow_a[i];
      const auto& pb = pow_b[d - i];
      for (std::size_t x = 0; x < pa.size(); ++x) {
        if (pa[x] == 0) continue;
        for (std::size_t y = 0; y < pb.size(); ++y) {
          if (pb[y] == 0) continue;
          out.parts_[d][x + y] += c * pa[x] * pb[y];
        }
      }
    }
  }
  return out;
}

TruncSeries restrict_ua_zero(const TruncSeries& s) {
  TruncSeries out(s.cap_);
  out.valid_to_ = s.valid_to_;
  for (int d = 0; d <= s.valid_to_; ++d) out.parts_[d][0] = s.parts_[d][0];
  return out;
}

bool agree_to(const TruncSeries& s, const TruncSeries& t, int d) {
  for (int k = 0; k <= d; ++k) {
    for (int i = 0; i <= k; ++i) {
      if (s.coeff(i, k - i) != t.coeff(i, k - i)) return false;
    }
  }
  return true;
}

bool agree_on_common(const TruncSeries& s, const TruncSeries& t) {
  return agree_to(s, t, std::min(s.valid_to(), t.valid_to()));
}

TruncSeries sih_over_linear(const ExpVec& L, int cap) {
  // sih(x)/x = sum_{k odd} x^(k-1) / (2^(k-1) k!)
  TruncSeries out(cap);
  TruncSeries lin = TruncSeries::linear(L, cap);
  TruncSeries power = TruncSeries::constant(Rational(1), cap);
  for (int k = 1; k - 1 <= cap; k += 2) {
    if (k > 1) {
      power = mul(power, lin);
      power = mul(power, lin);
    }
    const Rational coeff(Integer(1), Integer(1) << (k - 1));
    out = add(out, scale(power, coeff / Rational(factorial(k))));
  }
  return out;
}

TruncSeries divide_by_sih(const TruncSeries& s, const ExpVec& L) {
  TruncSeries by_linear = divide_by_linear(s, L);
  return divide_by_unit(by_linear, sih_over_linear(L, by_linear.cap()));
}

TruncSeries sih_ratio_series(const Rational& k, const ExpVec& L, int cap) {
  if (k == 0) return TruncSeries::zero(cap);
  // sih(kL)/sih(L) = k * (sih(kL)/(kL)) / (sih(L)/L)
  return scale(divide_by_unit(sih_over_linear(k * L, cap), sih_over_linear(L, cap)), k);
}

std::string TruncSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int d = 0; d <= valid_to_; ++d) {
    // within one degree: power of ua descending
    for (int i = d; i >= 0; --i) {
      const Rational& c = parts_[d][i];
      if (c == 0) continue;
      const Rational c_abs = c < 0 ? Rational(-c) : c;
      if (first) {
        if (c < 0) os << "-";
        first = false;
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      const int j = d - i;
      std::string mono;
      if (i > 0) mono += (i == 1) ? "ua" : "ua^" + std::to_string(i);
      if (j > 0) {
        if (!mono.empty()) mono += "*";
        mono += (j == 1) ? "ub" : "ub^" + std::to_string(j);
      }
      if (mono.empty()) {
        os << g1k::to_string(c_abs);
      } else if (c_abs == 1) {
        os << mono;
      } else {
        os << g1k::to_string(c_abs) << "*" << mono;
      }
    }
  }
  if (first) return "0";
  return os.str();
}

}  // namespace g1k
