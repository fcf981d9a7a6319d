#include "quadinv/exactnum.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

namespace quadinv {

// ---------------------------------------------------------------------------
// Rational

Rational::Rational(long long v) : v_(static_cast<long>(v)) {
  static_assert(sizeof(long) == sizeof(long long), "LP64 platform expected");
}

Rational::Rational(const BigInt& n, const BigInt& d) {
  if (d == 0) throw arithmetic_error("rational with zero denominator");
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  std::string_view num = text;
  std::string_view den;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
    if (!all_digits(den)) throw parse_error("malformed rational denominator: '" + std::string(text) + "'");
  }
  bool negative = false;
  if (!num.empty() && (num.front() == '-' || num.front() == '+')) {
    negative = num.front() == '-';
    num.remove_prefix(1);
  }
  if (!all_digits(num)) throw parse_error("malformed rational: '" + std::string(text) + "'");

  BigInt n(std::string(num), 10);
  if (negative) n = -n;
  if (den.empty()) return Rational(n);
  BigInt d(std::string(den), 10);
  if (d == 0) throw parse_error("rational with zero denominator: '" + std::string(text) + "'");
  return Rational(n, d);
}

Rational Rational::from_double(double d) {
  if (!std::isfinite(d)) throw arithmetic_error("non-finite double has no rational value");
  Rational r;
  r.v_ = mpq_class(d);
  return r;
}

Rational Rational::abs() const {
  Rational r;
  r.v_ = ::abs(v_);
  return r;
}

Rational Rational::reciprocal() const {
  if (is_zero()) throw arithmetic_error("reciprocal of zero");
  Rational r;
  r.v_ = 1 / v_;
  return r;
}

Rational Rational::operator-() const {
  Rational r;
  r.v_ = -v_;
  return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
  v_ += rhs.v_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  v_ -= rhs.v_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  v_ *= rhs.v_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw arithmetic_error("division by zero");
  v_ /= rhs.v_;
  return *this;
}

Rational pow(const Rational& base, unsigned exponent) {
  Rational result(1);
  Rational b = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent != 0) b *= b;
  }
  return result;
}

BigInt floor(const Rational& r) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), r.raw().get_num_mpz_t(), r.raw().get_den_mpz_t());
  return q;
}

BigInt ceil(const Rational& r) {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), r.raw().get_num_mpz_t(), r.raw().get_den_mpz_t());
  return q;
}

std::optional<Rational> exact_sqrt(const Rational& r) {
  if (r.sign() < 0) return std::nullopt;
  const BigInt n = r.num(), d = r.den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  return Rational(BigInt(sqrt(n)), BigInt(sqrt(d)));
}

Rational rat_arith(const Rational& lhs, const Rational& rhs, ArithOp kind) {
  switch (kind) {
    case ArithOp::add: return lhs + rhs;
    case ArithOp::sub: return lhs - rhs;
    case ArithOp::mul: return lhs * rhs;
    case ArithOp::div: return lhs / rhs;
  }
  throw std::logic_error("unknown arithmetic operation");
}

Rational exact_quotient(const Rational& a, const Rational& b) { return a / b; }

// ---------------------------------------------------------------------------
// Poly1

Poly1::Poly1(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly1::Poly1(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

Poly1::Poly1(const Rational& c) : c_{c} { trim(); }

Poly1 Poly1::constant(const Rational& c) { return Poly1(c); }

Poly1 Poly1::monomial(const Rational& c, std::size_t k) {
  std::vector<Rational> v(k + 1);
  v[k] = c;
  return Poly1(std::move(v));
}

Poly1 Poly1::linear_root(const Rational& r) { return Poly1{-r, Rational(1)}; }

void Poly1::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Rational& Poly1::lead() const {
  if (c_.empty()) throw arithmetic_error("zero polynomial has no leading coefficient");
  return c_.back();
}

Rational Poly1::coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(); }

Rational Poly1::operator()(const Rational& x) const {
  Rational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

double Poly1::eval_double(double x) const {
  double acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->to_double();
  return acc;
}

Poly1 Poly1::operator-() const {
  Poly1 r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Poly1& Poly1::operator+=(const Poly1& rhs) {
  if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size());
  for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] += rhs.c_[i];
  trim();
  return *this;
}

Poly1& Poly1::operator-=(const Poly1& rhs) {
  if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size());
  for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] -= rhs.c_[i];
  trim();
  return *this;
}

Poly1& Poly1::operator*=(const Poly1& rhs) {
  if (c_.empty() || rhs.c_.empty()) {
    c_.clear();
    return *this;
  }
  std::vector<Rational> out(c_.size() + rhs.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < rhs.c_.size(); ++j) out[i + j] += c_[i] * rhs.c_[j];
  }
  c_ = std::move(out);
  trim();
  return *this;
}

Poly1& Poly1::operator*=(const Rational& s) {
  for (auto& c : c_) c *= s;
  trim();
  return *this;
}

std::string Poly1::str(char var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = c_[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << '-';
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = mag == Rational(1);
    if (!unit || k == 0) os << mag;
    if (k > 0) {
      if (!unit) os << '*';
      os << var;
      if (k > 1) os << '^' << k;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly1& p) { return os << p.str(); }

Poly1 monic(const Poly1& p) {
  if (p.is_zero()) return p;
  return p * p.lead().reciprocal();
}

Poly1 derivative(const Poly1& p) {
  if (p.degree() < 1) return Poly1();
  std::vector<Rational> d(static_cast<std::size_t>(p.degree()));
  for (std::size_t k = 1; k < p.coeffs().size(); ++k) d[k - 1] = p.coeffs()[k] * Rational(static_cast<long>(k));
  return Poly1(std::move(d));
}

Poly1 pow(const Poly1& p, unsigned exponent) {
  Poly1 result(Rational(1));
  for (unsigned i = 0; i < exponent; ++i) result *= p;
  return result;
}

Poly1 compose(const Poly1& p, const Poly1& q) {
  Poly1 acc;
  auto c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc *= q;
    acc += Poly1(*it);
  }
  return acc;
}

DivMod divmod(const Poly1& a, const Poly1& b) {
  if (b.is_zero()) throw arithmetic_error("polynomial division by zero");
  std::vector<Rational> rem(a.coeffs().begin(), a.coeffs().end());
  const int db = b.degree();
  if (a.degree() < db) return {Poly1(), a};
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db + 1));
  const Rational inv_lead = b.lead().reciprocal();
  for (int k = a.degree(); k >= db; --k) {
    const Rational& top = rem[static_cast<std::size_t>(k)];
    if (top.is_zero()) continue;
    Rational factor = top * inv_lead;
    quot[static_cast<std::size_t>(k - db)] = factor;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k - db + j)] -= factor * b.coeffs()[static_cast<std::size_t>(j)];
  }
  return {Poly1(std::move(quot)), Poly1(std::move(rem))};
}

Poly1 exact_div(const Poly1& a, const Poly1& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw arithmetic_error("inexact polynomial division");
  return q;
}

Poly1 exact_quotient(const Poly1& a, const Poly1& b) { return exact_div(a, b); }

Poly1 gcd(const Poly1& a, const Poly1& b) {
  if (a.is_zero() && b.is_zero()) throw arithmetic_error("gcd(0, 0) is undefined");
  Poly1 x = a;
  Poly1 y = b;
  while (!y.is_zero()) {
    Poly1 r = divmod(x, y).remainder;
    x = std::move(y);
    y = monic(r);
  }
  return monic(x);
}

XGcd xgcd(const Poly1& a, const Poly1& b) {
  if (a.is_zero() && b.is_zero()) throw arithmetic_error("gcd(0, 0) is undefined");
  Poly1 r0 = a, r1 = b;
  Poly1 s0(Rational(1)), s1;
  Poly1 t0, t1(Rational(1));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    Poly1 s2 = s0 - q * s1;
    Poly1 t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  Rational inv = r0.lead().reciprocal();
  return {r0 * inv, s0 * inv, t0 * inv};
}

Poly1 squarefree_part(const Poly1& p) {
  if (p.is_zero()) throw arithmetic_error("zero polynomial has no square-free part");
  return monic(exact_div(p, gcd(p, derivative(p))));
}

std::vector<Poly1> squarefree_decomposition(const Poly1& p) {
  if (p.is_zero()) throw arithmetic_error("zero polynomial has no square-free decomposition");
  std::vector<Poly1> out;
  if (p.degree() == 0) return out;
  Poly1 f = monic(p);
  Poly1 df = derivative(f);
  Poly1 a = gcd(f, df);
  Poly1 b = exact_div(f, a);
  Poly1 c = exact_div(df, a);
  Poly1 d = c - derivative(b);
  while (b.degree() > 0) {
    Poly1 g = gcd(b, d);
    out.push_back(g);
    b = exact_div(b, g);
    c = exact_div(d, g);
    d = c - derivative(b);
  }
  while (!out.empty() && out.back().degree() == 0) out.pop_back();
  return out;
}

namespace {

template <class T>
std::vector<std::vector<T>> sylvester(std::span<const T> f, std::span<const T> g) {
  // f, g: coefficient lists, index k multiplies y^k, leading entries nonzero.
  const std::size_t m = f.size() - 1;
  const std::size_t n = g.size() - 1;
  const std::size_t size = m + n;
  std::vector<std::vector<T>> s(size, std::vector<T>(size));
  for (std::size_t row = 0; row < n; ++row)
    for (std::size_t k = 0; k <= m; ++k) s[row][row + (m - k)] = f[k];
  for (std::size_t row = 0; row < m; ++row)
    for (std::size_t k = 0; k <= n; ++k) s[n + row][row + (n - k)] = g[k];
  return s;
}

}  // namespace

Rational resultant(const Poly1& a, const Poly1& b) {
  if (a.is_zero() || b.is_zero()) return Rational();
  return bareiss_determinant(sylvester<Rational>(a.coeffs(), b.coeffs()));
}

int BiPoly::degree() const {
  for (int k = static_cast<int>(coeffs.size()) - 1; k >= 0; --k)
    if (!coeffs[static_cast<std::size_t>(k)].is_zero()) return k;
  return -1;
}

Poly1 BiPoly::eval_outer(const Rational& y) const {
  Poly1 acc;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc *= y;
    acc += *it;
  }
  return acc;
}

void BiPoly::trim() {
  while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
}

Poly1 resultant_in_one_var(const BiPoly& f, const BiPoly& g) {
  BiPoly ft = f, gt = g;
  ft.trim();
  gt.trim();
  if (ft.coeffs.empty() || gt.coeffs.empty()) return Poly1();
  return bareiss_determinant(sylvester<Poly1>(ft.coeffs, gt.coeffs));
}

}  // namespace quadinv
