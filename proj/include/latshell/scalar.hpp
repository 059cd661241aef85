#pragma once

// Exact scalar arithmetic: arbitrary-precision rationals and elements of
// real quadratic fields Q(sqrt(d)). Every geometric computation in this
// library runs on these types; there is no floating-point fallback in any
// correctness path.

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace latshell {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Int rat_num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline int sign_of(const Rational& r) { return r.sign(); }
inline int sign_of(const Int& n) { return n.sign(); }

/// Largest integer k with k <= r.
inline Int rfloor(const Rational& r) {
  Int n = rat_num(r), d = rat_den(r);
  Int q = n / d;  // truncates toward zero
  if (n % d != 0 && n < 0) --q;
  return q;
}

/// Smallest integer k with k >= r.
inline Int rceil(const Rational& r) {
  Int n = rat_num(r), d = rat_den(r);
  Int q = n / d;
  if (n % d != 0 && n > 0) ++q;
  return q;
}

/// Floor of the square root of a non-negative integer.
inline Int isqrt_floor(const Int& n) {
  if (n < 0) throw error("isqrt of negative integer");
  return boost::multiprecision::sqrt(n);
}

/// Largest integer k with k^2 <= x, decided exactly (boundaries verified by
/// integer arithmetic, never by floating approximation).
inline Int rational_isqrt_floor(const Rational& x) {
  if (x < 0) throw error("isqrt of negative rational");
  Int k = isqrt_floor(rat_num(x) / rat_den(x));
  while (Rational((k + 1) * (k + 1)) <= x) ++k;
  while (Rational(k * k) > x) --k;  // unreachable for a correct estimate
  return k;
}

inline bool is_perfect_square(const Int& n) {
  if (n < 0) return false;
  Int s = isqrt_floor(n);
  return s * s == n;
}

/// If r = s^2 for a rational s >= 0, returns s; errors otherwise.
inline Rational rational_sqrt_exact(const Rational& r) {
  if (r < 0 || !is_perfect_square(rat_num(r)) || !is_perfect_square(rat_den(r)))
    throw error("rational is not a perfect square");
  return Rational(isqrt_floor(rat_num(r)), isqrt_floor(rat_den(r)));
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

// ---------------------------------------------------------------------------
// QuadScalar: a + b*sqrt(d) with a, b rational and d a small positive
// square-free integer. d == 1 denotes a pure rational (then b == 0).
// Values with different non-trivial discriminants cannot be combined.
// ---------------------------------------------------------------------------

class QuadScalar {
 public:
  QuadScalar() : a_(0), b_(0), d_(1) {}
  QuadScalar(const Rational& a) : a_(a), b_(0), d_(1) {}
  QuadScalar(long long a) : a_(a), b_(0), d_(1) {}
  QuadScalar(const Rational& a, const Rational& b, int d) : a_(a), b_(b), d_(d) {
    if (d_ <= 0) throw error("discriminant must be positive");
    // pull square factors out of d so the representation is canonical
    for (int s = 2; s * s <= d_;) {
      if (d_ % (s * s) == 0) {
        d_ /= s * s;
        b_ *= s;
      } else {
        ++s;
      }
    }
    if (d_ == 1) {
      a_ += b_;
      b_ = 0;
    }
    if (b_ == 0) d_ = 1;
  }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  int d() const { return d_; }

  bool is_rational() const { return d_ == 1; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }

  /// The rational value; errors when the surd part is non-zero.
  const Rational& rational() const {
    if (!is_rational()) throw error("scalar is not rational");
    return a_;
  }

  /// Exact sign of a + b*sqrt(d), via comparison of a^2 with d*b^2.
  int sign() const {
    int sa = sign_of(a_), sb = sign_of(b_);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // opposite signs: compare |a| with |b|*sqrt(d)
    Rational a2 = a_ * a_, db2 = Rational(d_) * b_ * b_;
    if (a2 == db2) return 0;
    return (a2 > db2) ? sa : sb;
  }

  friend QuadScalar operator-(const QuadScalar& x) {
    QuadScalar r;
    r.a_ = -x.a_;
    r.b_ = -x.b_;
    r.d_ = x.d_;
    return r;
  }

  friend QuadScalar operator+(const QuadScalar& x, const QuadScalar& y) {
    int d = joint_disc(x, y);
    QuadScalar r;
    r.a_ = x.a_ + y.a_;
    r.b_ = x.b_ + y.b_;
    r.d_ = (r.b_ == 0) ? 1 : d;
    return r;
  }

  friend QuadScalar operator-(const QuadScalar& x, const QuadScalar& y) { return x + (-y); }

  friend QuadScalar operator*(const QuadScalar& x, const QuadScalar& y) {
    int d = joint_disc(x, y);
    QuadScalar r;
    r.a_ = x.a_ * y.a_ + Rational(d) * x.b_ * y.b_;
    r.b_ = x.a_ * y.b_ + x.b_ * y.a_;
    r.d_ = (r.b_ == 0) ? 1 : d;
    return r;
  }

  friend QuadScalar operator/(const QuadScalar& x, const QuadScalar& y) {
    if (y.is_zero()) throw error("division by zero");
    int d = joint_disc(x, y);
    // 1/(a+b*sqrt(d)) = (a-b*sqrt(d)) / (a^2-d*b^2); the denominator cannot
    // vanish for non-zero y since d is square-free
    Rational nrm = y.a_ * y.a_ - Rational(d) * y.b_ * y.b_;
    QuadScalar conj;
    conj.a_ = y.a_ / nrm;
    conj.b_ = -y.b_ / nrm;
    conj.d_ = (conj.b_ == 0) ? 1 : d;
    return x * conj;
  }

  QuadScalar& operator+=(const QuadScalar& y) { return *this = *this + y; }
  QuadScalar& operator-=(const QuadScalar& y) { return *this = *this - y; }
  QuadScalar& operator*=(const QuadScalar& y) { return *this = *this * y; }

  friend bool operator==(const QuadScalar& x, const QuadScalar& y) {
    if (x.d_ == y.d_) return x.a_ == y.a_ && x.b_ == y.b_;
    return x.is_rational() && y.is_rational() && x.a_ == y.a_;
  }
  friend bool operator!=(const QuadScalar& x, const QuadScalar& y) { return !(x == y); }

  double approx() const {
    double s = std::sqrt(static_cast<double>(d_));
    return to_double(a_) + to_double(b_) * s;
  }

 private:
  static int joint_disc(const QuadScalar& x, const QuadScalar& y) {
    if (x.d_ == y.d_) return x.d_;
    if (x.d_ == 1) return y.d_;
    if (y.d_ == 1) return x.d_;
    throw error("mixed surds");
  }

  Rational a_, b_;
  int d_;
};

inline int quad_sign(const QuadScalar& x) { return x.sign(); }

/// Exact comparison; errors on incompatible discriminants.
inline int quad_cmp(const QuadScalar& x, const QuadScalar& y) { return (x - y).sign(); }

inline QuadScalar quad_abs(const QuadScalar& x) { return x.sign() < 0 ? -x : x; }

// ---------------------------------------------------------------------------
// Text encoding: "p/q" for rationals ("p" accepted as "p/1"),
// "p/q+r/s*sqrt(d)" for quadratic elements. Whitespace-insensitive.
// ---------------------------------------------------------------------------

inline std::string to_string(const Rational& r) {
  std::string s = rat_num(r).str();
  if (rat_den(r) != 1) s += "/" + rat_den(r).str();
  return s;
}

inline std::string to_string(const QuadScalar& x) {
  if (x.is_rational()) return to_string(x.a());
  std::string surd;
  Rational babs = x.b() < 0 ? Rational(-x.b()) : x.b();
  if (babs != 1) surd = to_string(babs) + "*";
  surd += "sqrt(" + std::to_string(x.d()) + ")";
  if (x.a() == 0) return (x.b() < 0 ? "-" : "") + surd;
  return to_string(x.a()) + (x.b() < 0 ? "-" : "+") + surd;
}

namespace detail {

inline std::string strip_ws(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

// parses [sign] digits [/ digits] starting at pos; advances pos
inline Rational parse_rational_at(const std::string& s, size_t& pos) {
  size_t start = pos;
  bool neg = false;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
    neg = s[pos] == '-';
    ++pos;
  }
  size_t dig = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  if (pos == dig) throw error("bad scalar '" + s + "' at position " + std::to_string(start));
  Int num(s.substr(dig, pos - dig));
  Int den = 1;
  if (pos < s.size() && s[pos] == '/') {
    ++pos;
    size_t ddig = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == ddig) throw error("bad scalar '" + s + "': missing denominator");
    den = Int(s.substr(ddig, pos - ddig));
    if (den == 0) throw error("bad scalar '" + s + "': zero denominator");
  }
  Rational r(num, den);
  return neg ? Rational(-r) : r;
}

// parses "sqrt(" digits ")" at pos; advances pos; returns d
inline int parse_sqrt_at(const std::string& s, size_t& pos) {
  if (s.compare(pos, 5, "sqrt(") != 0) throw error("bad scalar '" + s + "': expected sqrt(");
  pos += 5;
  size_t dig = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  if (pos == dig || pos >= s.size() || s[pos] != ')')
    throw error("bad scalar '" + s + "': malformed sqrt");
  int d = std::stoi(s.substr(dig, pos - dig));
  ++pos;
  return d;
}

}  // namespace detail

inline Rational parse_rational(std::string_view text) {
  std::string s = detail::strip_ws(text);
  size_t pos = 0;
  Rational r = detail::parse_rational_at(s, pos);
  if (pos != s.size()) throw error("bad rational '" + s + "'");
  return r;
}

inline QuadScalar parse_quad(std::string_view text) {
  std::string s = detail::strip_ws(text);
  if (s.empty()) throw error("empty scalar");
  size_t pos = 0;

  // leading surd with optional sign: [-]sqrt(d) or we fall through to a
  // leading rational below
  auto leading_surd = [&](bool neg) -> QuadScalar {
    int d = detail::parse_sqrt_at(s, pos);
    if (pos != s.size()) throw error("bad scalar '" + s + "'");
    return QuadScalar(0, neg ? -1 : 1, d);
  };
  if (s.rfind("sqrt(", 0) == 0) return leading_surd(false);
  if (s.rfind("-sqrt(", 0) == 0) {
    pos = 1;
    return leading_surd(true);
  }

  Rational first = detail::parse_rational_at(s, pos);
  if (pos == s.size()) return QuadScalar(first);

  if (s[pos] == '*') {
    ++pos;
    int d = detail::parse_sqrt_at(s, pos);
    if (pos != s.size()) throw error("bad scalar '" + s + "'");
    return QuadScalar(0, first, d);
  }

  if (s[pos] != '+' && s[pos] != '-') throw error("bad scalar '" + s + "'");
  bool neg = s[pos] == '-';
  ++pos;
  Rational coef = 1;
  if (s.compare(pos, 5, "sqrt(") != 0) {
    coef = detail::parse_rational_at(s, pos);
    if (coef < 0) throw error("bad scalar '" + s + "': sign must precede the term");
    if (pos >= s.size() || s[pos] != '*') throw error("bad scalar '" + s + "': expected *sqrt(d)");
    ++pos;
  }
  int d = detail::parse_sqrt_at(s, pos);
  if (pos != s.size()) throw error("bad scalar '" + s + "'");
  return QuadScalar(first, neg ? Rational(-coef) : coef, d);
}

}  // namespace latshell
