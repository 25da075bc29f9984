#include "g1k/group_ring.hpp"

#include <sstream>

namespace g1k {

GroupRingElem::GroupRingElem(long long context_denom) : denom_(context_denom) {
  if (context_denom <= 0) throw error("context denominator must be positive");
}

GroupRingElem GroupRingElem::zero(long long context_denom) {
  return GroupRingElem(context_denom);
}

GroupRingElem GroupRingElem::constant(const Rational& c, long long context_denom) {
  GroupRingElem out(context_denom);
  out.add_term(ExpVec{}, c);
  return out;
}

GroupRingElem GroupRingElem::exponential(const ExpVec& x, long long context_denom) {
  GroupRingElem out(context_denom);
  out.add_term(x, Rational(1));
  return out;
}

GroupRingElem::Key GroupRingElem::key_for(const ExpVec& x) const {
  const Rational sp = x.p * (2 * denom_);
  const Rational sq = x.q * (2 * denom_);
  if (!is_integer(sp) || !is_integer(sq)) {
    throw lattice_mismatch("exponent " + g1k::to_string(x.p) + "*ua + " + g1k::to_string(x.q) +
                           "*ub is not on the 1/(2*" + std::to_string(denom_) + ") lattice");
  }
  return Key{static_cast<long long>(num(sp)), static_cast<long long>(num(sq))};
}

Rational GroupRingElem::coeff(const ExpVec& x) const {
  const Rational sp = x.p * (2 * denom_);
  const Rational sq = x.q * (2 * denom_);
  if (!is_integer(sp) || !is_integer(sq)) return Rational(0);
  auto it = terms_.find(Key{static_cast<long long>(num(sp)), static_cast<long long>(num(sq))});
  return it == terms_.end() ? Rational(0) : it->second;
}

void GroupRingElem::add_term(const ExpVec& x, const Rational& c) {
  if (c == 0) return;
  const Key k = key_for(x);
  auto [it, inserted] = terms_.emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void GroupRingElem::check_same_lattice(const GroupRingElem& rhs) const {
  if (denom_ != rhs.denom_) {
    throw lattice_mismatch("context denominators differ: " + std::to_string(denom_) + " vs " +
                           std::to_string(rhs.denom_));
  }
}

GroupRingElem& GroupRingElem::operator+=(const GroupRingElem& rhs) {
  check_same_lattice(rhs);
  for (const auto& [k, c] : rhs.terms_) {
    auto [it, inserted] = terms_.emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

GroupRingElem& GroupRingElem::operator-=(const GroupRingElem& rhs) {
  check_same_lattice(rhs);
  for (const auto& [k, c] : rhs.terms_) {
    auto [it, inserted] = terms_.emplace(k, -c);
    if (!inserted) {
      it->second -= c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

GroupRingElem& GroupRingElem::operator*=(const GroupRingElem& rhs) {
  check_same_lattice(rhs);
  TermMap product;
  for (const auto& [ka, ca] : terms_) {
    for (const auto& [kb, cb] : rhs.terms_) {
      const Key k{ka.np + kb.np, ka.nq + kb.nq};
      auto [it, inserted] = product.emplace(k, ca * cb);
      if (!inserted) {
        it->second += ca * cb;
        if (it->second == 0) product.erase(it);
      }
    }
  }
  terms_ = std::move(product);
  return *this;
}

GroupRingElem& GroupRingElem::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, c] : terms_) c *= scalar;
  return *this;
}

GroupRingElem operator-(const GroupRingElem& a) {
  GroupRingElem out(a.denom_);
  for (const auto& [k, c] : a.terms_) out.terms_.emplace(k, -c);
  return out;
}

bool operator==(const GroupRingElem& a, const GroupRingElem& b) {
  if (a.denom_ == b.denom_) return a.terms_ == b.terms_;
  // allow comparison across lattices by rescaling to the common refinement
  const long long d = lcm_ll(a.denom_, b.denom_);
  return a.rescaled(d).terms_ == b.rescaled(d).terms_;
}

GroupRingElem GroupRingElem::rescaled(long long new_context_denom) const {
  if (new_context_denom == denom_) return *this;
  if (new_context_denom <= 0 || new_context_denom % denom_ != 0) {
    throw lattice_mismatch("cannot rescale lattice 1/(2*" + std::to_string(denom_) + ") to 1/(2*" +
                           std::to_string(new_context_denom) + ")");
  }
  const long long f = new_context_denom / denom_;
  GroupRingElem out(new_context_denom);
  for (const auto& [k, c] : terms_) out.terms_.emplace(Key{k.np * f, k.nq * f}, c);
  return out;
}

GroupRingElem grg_bar(const GroupRingElem& x) {
  GroupRingElem out(x.context_denom());
  for (const auto& [k, c] : x.terms()) {
    const Rational scale(1, 2 * x.context_denom());
    out.add_term(ExpVec{Rational(-k.np) * scale, Rational(-k.nq) * scale}, c);
  }
  return out;
}

GroupRingElem sih_elem(const ExpVec& L, long long context_denom) {
  const ExpVec half = Rational(1, 2) * L;
  GroupRingElem out(context_denom);
  out.add_term(half, Rational(1));
  out.add_term(-half, Rational(-1));
  return out;
}

GroupRingElem cosh_elem(const ExpVec& L, long long context_denom) {
  const ExpVec half = Rational(1, 2) * L;
  GroupRingElem out(context_denom);
  out.add_term(half, Rational(1, 2));
  out.add_term(-half, Rational(1, 2));
  return out;
}

GroupRingElem sih_ratio_elem(long long k, const ExpVec& L, long long context_denom) {
  GroupRingElem out(context_denom);
  if (k == 0) return out;
  const long long n = k > 0 ? k : -k;
  const Rational sign = k > 0 ? 1 : -1;
  for (long long j = 0; j < n; ++j) {
    out.add_term(Rational(2 * j - (n - 1), 2) * L, sign);
  }
  return out;
}

std::string GroupRingElem::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    const Rational coeff_abs = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    const Rational p(k.np, 2 * denom_);
    const Rational q(k.nq, 2 * denom_);
    if (k.np == 0 && k.nq == 0) {
      os << g1k::to_string(coeff_abs);
      continue;
    }
    if (coeff_abs != 1) os << g1k::to_string(coeff_abs) << "*";
    os << "exp(";
    bool inner_first = true;
    if (p != 0) {
      if (p != 1) os << (p == -1 ? "-" : g1k::to_string(p) + "*");
      os << "ua";
      inner_first = false;
    }
    if (q != 0) {
      if (!inner_first) os << (q < 0 ? " - " : " + ");
      else if (q < 0) os << "-";
      const Rational qa = q < 0 ? Rational(-q) : q;
      if (qa != 1) os << g1k::to_string(qa) << "*";
      os << "ub";
    }
    os << ")";
  }
  return os.str();
}

}  // namespace g1k
