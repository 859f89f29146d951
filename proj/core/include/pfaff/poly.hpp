#ifndef PFAFF_POLY_HPP
#define PFAFF_POLY_HPP

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>

namespace pfaff {

/// Exponent pair of a monomial q^q * w^w. Ordered lexicographically by (q, w).
struct Exponent {
  int q = 0;
  int w = 0;

  friend auto operator<=>(const Exponent&, const Exponent&) = default;
};

/// Sparse Laurent polynomial in two formal variables q and w with exact
/// integer coefficients.
///
/// The term map never stores a zero coefficient, so two polynomials are
/// equal exactly when their term maps are equal. Every arithmetic operation
/// checks for 64-bit overflow and throws std::overflow_error instead of
/// wrapping.
class BiLaurentPoly {
 public:
  using Coeff = std::int64_t;
  using TermMap = std::map<Exponent, Coeff>;

  struct Term {
    int q;
    int w;
    Coeff c;
  };

  BiLaurentPoly() = default;
  explicit BiLaurentPoly(Coeff constant);
  BiLaurentPoly(std::initializer_list<Term> terms);

  static BiLaurentPoly monomial(Coeff c, int q_exp, int w_exp = 0);
  static BiLaurentPoly q_power(int q_exp) { return monomial(1, q_exp, 0); }
  static BiLaurentPoly w_power(int w_exp) { return monomial(1, 0, w_exp); }

  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }
  bool involves_w() const noexcept;

  Coeff coeff(int q_exp, int w_exp = 0) const;

  /// Adds c * q^q_exp * w^w_exp in place.
  void add_term(Coeff c, int q_exp, int w_exp = 0);

  BiLaurentPoly& operator+=(const BiLaurentPoly& other);
  BiLaurentPoly& operator-=(const BiLaurentPoly& other);
  BiLaurentPoly& operator*=(const BiLaurentPoly& other);

  friend BiLaurentPoly operator+(BiLaurentPoly a, const BiLaurentPoly& b) { return a += b; }
  friend BiLaurentPoly operator-(BiLaurentPoly a, const BiLaurentPoly& b) { return a -= b; }
  friend BiLaurentPoly operator*(const BiLaurentPoly& a, const BiLaurentPoly& b);
  friend BiLaurentPoly operator-(const BiLaurentPoly& a);

  friend bool operator==(const BiLaurentPoly&, const BiLaurentPoly&) = default;

  /// Human-readable form, e.g. "w^5 + q^5*w^9 + q^9*w^9". Terms appear in
  /// ascending (q, w) order.
  std::string to_string() const;

 private:
  TermMap terms_;
};

BiLaurentPoly add(const BiLaurentPoly& a, const BiLaurentPoly& b);
BiLaurentPoly mul(const BiLaurentPoly& a, const BiLaurentPoly& b);
BiLaurentPoly negate(const BiLaurentPoly& p);

/// The stored coefficient of q^q_exp w^w_exp, or zero.
BiLaurentPoly::Coeff coeff(const BiLaurentPoly& p, int q_exp, int w_exp = 0);

/// Multiplies by the monomial q^dq w^dw.
BiLaurentPoly shift(const BiLaurentPoly& p, int dq, int dw = 0);

/// p(q^k) for a q-only polynomial p. Throws std::invalid_argument if p
/// involves w or k is not positive.
BiLaurentPoly substitute_power(const BiLaurentPoly& p, int k);

/// q^d * p(q^{-1}) for a q-only polynomial p: each exponent e becomes d - e.
BiLaurentPoly reverse(const BiLaurentPoly& p, int d);

/// Moves every q exponent onto w (p must be q-only).
BiLaurentPoly rename_q_to_w(const BiLaurentPoly& p);

/// Smallest / largest q exponent. Throws std::invalid_argument on zero.
int min_q_degree(const BiLaurentPoly& p);
int max_q_degree(const BiLaurentPoly& p);

bool has_nonnegative_coefficients(const BiLaurentPoly& p) noexcept;

namespace checked {
BiLaurentPoly::Coeff add(BiLaurentPoly::Coeff a, BiLaurentPoly::Coeff b);
BiLaurentPoly::Coeff mul(BiLaurentPoly::Coeff a, BiLaurentPoly::Coeff b);
int add_exp(int a, int b);
int mul_exp(int a, int b);
}  // namespace checked

}  // namespace pfaff

#endif  // PFAFF_POLY_HPP
