#include "twobridge/poly.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <vector>

namespace twobridge {

MultiPoly MultiPoly::constant(BigInt c) {
  MultiPoly p;
  if (c != 0) p.terms_.emplace(Exponents{}, std::move(c));
  return p;
}

MultiPoly MultiPoly::monomial(BigInt c, Exponents e) {
  if (e.e3 < 0) raise(ErrorCode::invalid_argument, "t3/u exponent must be non-negative");
  MultiPoly p;
  if (c != 0) p.terms_.emplace(e, std::move(c));
  return p;
}

MultiPoly MultiPoly::variable(Var v, int power) {
  Exponents e;
  switch (v) {
    case Var::t1: e.e1 = power; break;
    case Var::t2: e.e2 = power; break;
    case Var::t3: e.e3 = power; break;
  }
  return monomial(BigInt(1), e);
}

MultiPoly MultiPoly::from_terms(TermMap terms) {
  MultiPoly p;
  for (auto& [e, c] : terms) {
    if (e.e3 < 0) raise(ErrorCode::invalid_argument, "t3/u exponent must be non-negative");
    if (c != 0) p.terms_.emplace(e, std::move(c));
  }
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents{});
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly p;
  for (const auto& [e, c] : terms_) p.terms_.emplace(e, -c);
  return p;
}

MultiPoly MultiPoly::operator+(const MultiPoly& rhs) const {
  MultiPoly p = *this;
  for (const auto& [e, c] : rhs.terms_) {
    auto [it, inserted] = p.terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) p.terms_.erase(it);
    }
  }
  return p;
}

MultiPoly MultiPoly::operator-(const MultiPoly& rhs) const { return *this + (-rhs); }

MultiPoly MultiPoly::operator*(const MultiPoly& rhs) const {
  MultiPoly p;
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : rhs.terms_) {
      Exponents e{ea.e1 + eb.e1, ea.e2 + eb.e2, ea.e3 + eb.e3};
      auto [it, inserted] = p.terms_.try_emplace(e, BigInt(ca * cb));
      if (!inserted) {
        it->second += ca * cb;
        if (it->second == 0) p.terms_.erase(it);
      }
    }
  }
  return p;
}

MultiPoly MultiPoly::scaled(const BigInt& c) const {
  MultiPoly p;
  if (c == 0) return p;
  for (const auto& [e, coeff] : terms_) p.terms_.emplace(e, BigInt(coeff * c));
  return p;
}

MultiPoly MultiPoly::partial(Var v) const {
  MultiPoly p;
  for (const auto& [e, c] : terms_) {
    Exponents d = e;
    int power = 0;
    switch (v) {
      case Var::t1: power = e.e1; d.e1 -= 1; break;
      case Var::t2: power = e.e2; d.e2 -= 1; break;
      case Var::t3: power = e.e3; d.e3 -= 1; break;
    }
    if (power == 0) continue;
    p.terms_.emplace(d, BigInt(c * power));
  }
  return p;
}

MultiPoly MultiPoly::specialize_symbolic() const {
  MultiPoly p;
  for (const auto& [e, c] : terms_) {
    Exponents merged{e.e1 + e.e2, 0, e.e3};
    auto [it, inserted] = p.terms_.try_emplace(merged, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) p.terms_.erase(it);
    }
  }
  return p;
}

int MultiPoly::degree_u() const {
  int deg = -1;
  for (const auto& [e, c] : terms_) deg = std::max(deg, e.e3);
  return deg;
}

MultiPoly MultiPoly::coeff_of_u(int degree) const {
  MultiPoly p;
  for (const auto& [e, c] : terms_)
    if (e.e3 == degree) p.terms_.emplace(Exponents{e.e1, e.e2, 0}, c);
  return p;
}

std::pair<Exponents, BigInt> MultiPoly::single_term() const {
  if (terms_.size() != 1) raise(ErrorCode::internal, "expected a monomial");
  return *terms_.begin();
}

void MultiPoly::check_zero_bases(bool t1_zero, bool t2_zero, bool t3_zero) const {
  if (!t1_zero && !t2_zero && !t3_zero) return;
  for (const auto& [e, c] : terms_) {
    if ((t1_zero && e.e1 < 0) || (t2_zero && e.e2 < 0))
      raise(ErrorCode::zero_base, "negative exponent evaluated at zero");
    (void)t3_zero;  // e3 >= 0 always
  }
}

void MultiPoly::require_specialized() const {
  for (const auto& [e, c] : terms_)
    if (e.e2 != 0)
      raise(ErrorCode::invalid_argument, "polynomial is not in the specialized m,u ring");
}

namespace {

struct RenderOrder {
  // u-degree ascending, then |m-exponent| descending with positive before
  // negative; matches the conventional way these polynomials are written,
  // e.g. "m^2 + m^-2 - 1 - u" for the (3,1) Riley polynomial.
  bool operator()(const Exponents& a, const Exponents& b) const {
    if (a.e3 != b.e3) return a.e3 < b.e3;
    if (std::abs(a.e1) != std::abs(b.e1)) return std::abs(a.e1) > std::abs(b.e1);
    if (a.e1 != b.e1) return a.e1 > b.e1;
    if (std::abs(a.e2) != std::abs(b.e2)) return std::abs(a.e2) > std::abs(b.e2);
    return a.e2 > b.e2;
  }
};

void append_power(std::string& out, const char* name, int e) {
  if (e == 0) return;
  if (!out.empty()) out += ' ';
  out += name;
  if (e != 1) {
    out += '^';
    out += std::to_string(e);
  }
}

}  // namespace

std::string MultiPoly::to_string(PolyStyle style) const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Exponents, BigInt>> ordered(terms_.begin(), terms_.end());
  std::sort(ordered.begin(), ordered.end(),
            [](const auto& a, const auto& b) { return RenderOrder{}(a.first, b.first); });

  std::string out;
  bool first = true;
  for (const auto& [e, c] : ordered) {
    const bool negative = c < 0;
    BigInt mag = negative ? BigInt(-c) : c;
    if (first) {
      if (negative) out += '-';
      first = false;
    } else {
      out += negative ? " - " : " + ";
    }
    std::string vars;
    if (style == PolyStyle::t_vars) {
      append_power(vars, "t1", e.e1);
      append_power(vars, "t2", e.e2);
      append_power(vars, "t3", e.e3);
    } else {
      append_power(vars, "m", e.e1 + e.e2);
      append_power(vars, "u", e.e3);
    }
    if (vars.empty()) {
      out += mag.str();
    } else {
      if (mag != 1) {
        out += mag.str();
        out += ' ';
      }
      out += vars;
    }
  }
  return out;
}

MultiPoly m_minus_m_inverse() {
  return MultiPoly::var_m(1) - MultiPoly::var_m(-1);
}

}  // namespace twobridge
