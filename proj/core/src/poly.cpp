#include "pfaff/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace pfaff {

namespace checked {

BiLaurentPoly::Coeff add(BiLaurentPoly::Coeff a, BiLaurentPoly::Coeff b) {
  BiLaurentPoly::Coeff r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw std::overflow_error("coefficient overflow in addition");
  }
  return r;
}

BiLaurentPoly::Coeff mul(BiLaurentPoly::Coeff a, BiLaurentPoly::Coeff b) {
  BiLaurentPoly::Coeff r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw std::overflow_error("coefficient overflow in multiplication");
  }
  return r;
}

int add_exp(int a, int b) {
  int r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw std::overflow_error("exponent overflow");
  }
  return r;
}

int mul_exp(int a, int b) {
  int r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw std::overflow_error("exponent overflow");
  }
  return r;
}

}  // namespace checked

BiLaurentPoly::BiLaurentPoly(Coeff constant) {
  if (constant != 0) terms_.emplace(Exponent{0, 0}, constant);
}

BiLaurentPoly::BiLaurentPoly(std::initializer_list<Term> terms) {
  for (const Term& t : terms) add_term(t.c, t.q, t.w);
}

BiLaurentPoly BiLaurentPoly::monomial(Coeff c, int q_exp, int w_exp) {
  BiLaurentPoly p;
  p.add_term(c, q_exp, w_exp);
  return p;
}

bool BiLaurentPoly::involves_w() const noexcept {
  for (const auto& [e, c] : terms_) {
    if (e.w != 0) return true;
  }
  return false;
}

BiLaurentPoly::Coeff BiLaurentPoly::coeff(int q_exp, int w_exp) const {
  auto it = terms_.find(Exponent{q_exp, w_exp});
  return it == terms_.end() ? 0 : it->second;
}

void BiLaurentPoly::add_term(Coeff c, int q_exp, int w_exp) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(Exponent{q_exp, w_exp}, c);
  if (inserted) return;
  it->second = checked::add(it->second, c);
  if (it->second == 0) terms_.erase(it);
}

BiLaurentPoly& BiLaurentPoly::operator+=(const BiLaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(c, e.q, e.w);
  return *this;
}

BiLaurentPoly& BiLaurentPoly::operator-=(const BiLaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(checked::mul(c, -1), e.q, e.w);
  return *this;
}

BiLaurentPoly& BiLaurentPoly::operator*=(const BiLaurentPoly& other) {
  *this = *this * other;
  return *this;
}

BiLaurentPoly operator*(const BiLaurentPoly& a, const BiLaurentPoly& b) {
  BiLaurentPoly r;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      r.add_term(checked::mul(ca, cb), checked::add_exp(ea.q, eb.q),
                 checked::add_exp(ea.w, eb.w));
    }
  }
  return r;
}

BiLaurentPoly operator-(const BiLaurentPoly& a) {
  BiLaurentPoly r;
  for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, checked::mul(c, -1));
  return r;
}

std::string BiLaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Coeff mag = c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (c < 0) mag = -c;
    first = false;

    const bool unit = e.q == 0 && e.w == 0;
    if (mag != 1 || unit) {
      os << mag;
      if (!unit) os << "*";
    }
    if (e.q != 0) {
      os << "q";
      if (e.q != 1) os << "^" << e.q;
    }
    if (e.w != 0) {
      if (e.q != 0) os << "*";
      os << "w";
      if (e.w != 1) os << "^" << e.w;
    }
  }
  return os.str();
}

BiLaurentPoly add(const BiLaurentPoly& a, const BiLaurentPoly& b) { return a + b; }
BiLaurentPoly mul(const BiLaurentPoly& a, const BiLaurentPoly& b) { return a * b; }
BiLaurentPoly negate(const BiLaurentPoly& p) { return -p; }

BiLaurentPoly::Coeff coeff(const BiLaurentPoly& p, int q_exp, int w_exp) {
  return p.coeff(q_exp, w_exp);
}

BiLaurentPoly shift(const BiLaurentPoly& p, int dq, int dw) {
  BiLaurentPoly r;
  for (const auto& [e, c] : p.terms()) {
    r.add_term(c, checked::add_exp(e.q, dq), checked::add_exp(e.w, dw));
  }
  return r;
}

namespace {

void require_q_only(const BiLaurentPoly& p, const char* op) {
  if (p.involves_w()) {
    throw std::invalid_argument(std::string(op) + ": polynomial involves w");
  }
}

}  // namespace

BiLaurentPoly substitute_power(const BiLaurentPoly& p, int k) {
  require_q_only(p, "substitute_power");
  if (k <= 0) throw std::invalid_argument("substitute_power: power must be positive");
  BiLaurentPoly r;
  for (const auto& [e, c] : p.terms()) r.add_term(c, checked::mul_exp(e.q, k), 0);
  return r;
}

BiLaurentPoly reverse(const BiLaurentPoly& p, int d) {
  require_q_only(p, "reverse");
  BiLaurentPoly r;
  for (const auto& [e, c] : p.terms()) {
    r.add_term(c, checked::add_exp(d, checked::mul_exp(e.q, -1)), 0);
  }
  return r;
}

BiLaurentPoly rename_q_to_w(const BiLaurentPoly& p) {
  require_q_only(p, "rename_q_to_w");
  BiLaurentPoly r;
  for (const auto& [e, c] : p.terms()) r.add_term(c, 0, e.q);
  return r;
}

int min_q_degree(const BiLaurentPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("min_q_degree of zero polynomial");
  return p.terms().begin()->first.q;
}

int max_q_degree(const BiLaurentPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("max_q_degree of zero polynomial");
  return p.terms().rbegin()->first.q;
}

bool has_nonnegative_coefficients(const BiLaurentPoly& p) noexcept {
  for (const auto& [e, c] : p.terms()) {
    if (c < 0) return false;
  }
  return true;
}

}  // namespace pfaff
