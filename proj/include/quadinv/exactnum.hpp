#pragma once

/**
 * @file exactnum.hpp
 * @brief Exact rational scalars and dense univariate polynomials over Q.
 *
 * Rational is always stored reduced with a positive denominator, and zero is
 * 0/1. Poly1 keeps its coefficient list trimmed so the last entry is nonzero;
 * the zero polynomial is the empty list and has degree -1.
 *
 * Every value is immutable once built and every free function is pure.
 */

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace quadinv {

using BigInt = mpz_class;

/// Raised by exact arithmetic that has no defined result (division by zero,
/// gcd of two zero polynomials, inexact polynomial division).
class arithmetic_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when a textual rational cannot be parsed.
class parse_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Rational {
 public:
  Rational() = default;
  Rational(int v) : v_(v) {}
  Rational(long v) : v_(v) {}
  Rational(long long v);
  Rational(const BigInt& n) : v_(n) {}
  Rational(const BigInt& n, const BigInt& d);

  /// Accepts "n" or "n/d" with an optional sign on n; d must be nonzero.
  static Rational parse(std::string_view text);
  /// Exact value of a finite binary64 number.
  static Rational from_double(double d);

  std::string str() const { return v_.get_str(); }
  double to_double() const { return v_.get_d(); }

  BigInt num() const { return v_.get_num(); }
  BigInt den() const { return v_.get_den(); }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  Rational abs() const;
  Rational reciprocal() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

  const mpq_class& raw() const { return v_; }

 private:
  mpq_class v_;
};

Rational pow(const Rational& base, unsigned exponent);

/// floor and ceiling toward -inf / +inf.
BigInt floor(const Rational& r);
BigInt ceil(const Rational& r);

/// The rational square root of r when r is the square of a rational.
std::optional<Rational> exact_sqrt(const Rational& r);

enum class ArithOp { add, sub, mul, div };

/// Field arithmetic selected at run time; div by zero raises arithmetic_error.
Rational rat_arith(const Rational& lhs, const Rational& rhs, ArithOp kind);

class Poly1 {
 public:
  Poly1() = default;
  explicit Poly1(std::vector<Rational> coeffs);
  Poly1(std::initializer_list<Rational> coeffs);
  explicit Poly1(const Rational& c);

  static Poly1 constant(const Rational& c);
  static Poly1 monomial(const Rational& c, std::size_t k);
  /// The polynomial x - r.
  static Poly1 linear_root(const Rational& r);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const Rational& lead() const;
  Rational coeff(std::size_t k) const;
  std::span<const Rational> coeffs() const { return c_; }

  /// Horner evaluation.
  Rational operator()(const Rational& x) const;
  double eval_double(double x) const;

  Poly1 operator-() const;
  Poly1& operator+=(const Poly1& rhs);
  Poly1& operator-=(const Poly1& rhs);
  Poly1& operator*=(const Poly1& rhs);
  Poly1& operator*=(const Rational& s);

  friend Poly1 operator+(Poly1 a, const Poly1& b) { return a += b; }
  friend Poly1 operator-(Poly1 a, const Poly1& b) { return a -= b; }
  friend Poly1 operator*(Poly1 a, const Poly1& b) { return a *= b; }
  friend Poly1 operator*(Poly1 a, const Rational& s) { return a *= s; }
  friend Poly1 operator*(const Rational& s, Poly1 a) { return a *= s; }

  friend bool operator==(const Poly1&, const Poly1&) = default;

  std::string str(char var = 'x') const;

 private:
  void trim();
  std::vector<Rational> c_;
};

std::ostream& operator<<(std::ostream& os, const Poly1& p);

Poly1 monic(const Poly1& p);
Poly1 derivative(const Poly1& p);
Poly1 pow(const Poly1& p, unsigned exponent);
/// Substitutes q for the variable: p(q(x)).
Poly1 compose(const Poly1& p, const Poly1& q);

struct DivMod {
  Poly1 quotient;
  Poly1 remainder;
};
DivMod divmod(const Poly1& a, const Poly1& b);
/// a / b when b divides a; otherwise arithmetic_error.
Poly1 exact_div(const Poly1& a, const Poly1& b);

/// Monic greatest common divisor. gcd(0, 0) raises arithmetic_error.
Poly1 gcd(const Poly1& a, const Poly1& b);

struct XGcd {
  Poly1 g;  // monic
  Poly1 s;
  Poly1 t;  // s*a + t*b == g
};
XGcd xgcd(const Poly1& a, const Poly1& b);

/// p / gcd(p, p') made monic. The zero polynomial has no square-free part.
Poly1 squarefree_part(const Poly1& p);

/// Yun decomposition: result[i] is the monic product of the roots of
/// multiplicity exactly i + 1, so p = lead(p) * prod result[i]^(i+1).
std::vector<Poly1> squarefree_decomposition(const Poly1& p);

/// Res(a, b) from the Sylvester determinant. Zero if either input is zero.
Rational resultant(const Poly1& a, const Poly1& b);

/// Polynomial in an outer variable y whose coefficients are polynomials in
/// an inner variable x; coeffs[k] multiplies y^k.
struct BiPoly {
  std::vector<Poly1> coeffs;

  int degree() const;  // degree in y, -1 for zero
  Poly1 eval_outer(const Rational& y) const;
  void trim();
};

/// Eliminates the outer variable: Res_y(f, g) as a polynomial in x.
Poly1 resultant_in_one_var(const BiPoly& f, const BiPoly& g);

/// Fraction-free (Bareiss) determinant. T needs ring operations, equality
/// with T(0) and an exact_quotient(T, T) found by ADL.
template <class T>
T bareiss_determinant(std::vector<std::vector<T>> m);

Rational exact_quotient(const Rational& a, const Rational& b);
Poly1 exact_quotient(const Poly1& a, const Poly1& b);

template <class T>
T bareiss_determinant(std::vector<std::vector<T>> m) {
  const std::size_t n = m.size();
  if (n == 0) return T(Rational(1));
  const T zero{};
  bool negate = false;
  T prev = T(Rational(1));
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == zero) {
      std::size_t pivot = k + 1;
      while (pivot < n && m[pivot][k] == zero) ++pivot;
      if (pivot == n) return zero;
      std::swap(m[k], m[pivot]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = exact_quotient(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
      }
      m[i][k] = zero;
    }
    prev = m[k][k];
  }
  T det = m[n - 1][n - 1];
  return negate ? -det : det;
}

}  // namespace quadinv
