#ifndef ROOTCOUNT_RAT_HPP
#define ROOTCOUNT_RAT_HPP

#include <gmpxx.h>

#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>

#include "rootcount/errors.hpp"

namespace rootcount {

// Arbitrary-precision rational. mpq_class keeps values canonical (reduced,
// positive denominator) as long as they are built through arithmetic; string
// input goes through parse_rat below which canonicalizes explicitly.
using Rat = mpq_class;

inline int sign(const Rat& q) { return sgn(q); }

inline bool is_zero(const Rat& q) { return sgn(q) == 0; }

/// Parse "n" or "n/d" with integer n and positive integer d.
/// Rejects anything else, including d <= 0.
inline Rat parse_rat(std::string_view text) {
  const std::string s(text);
  const auto slash = s.find('/');
  const std::string num = s.substr(0, slash);
  auto is_int = [](const std::string& t, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && i < t.size() && (t[i] == '-' || t[i] == '+')) ++i;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  if (!is_int(num, true)) throw ParseError("bad rational: '" + s + "'");
  mpz_class n(num);
  mpz_class d(1);
  if (slash != std::string::npos) {
    const std::string den = s.substr(slash + 1);
    if (!is_int(den, false)) throw ParseError("bad rational denominator: '" + s + "'");
    d = mpz_class(den);
    if (sgn(d) <= 0) throw ParseError("denominator must be positive: '" + s + "'");
  }
  Rat q(n, d);
  q.canonicalize();
  return q;
}

/// Canonical fraction from machine integers.
inline Rat frac(long num, long den) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

/// Canonical "n" or "n/d" rendering.
inline std::string rat_str(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// Gaussian rational a + b*i. A field: every nonzero element is invertible.
struct GaussRat {
  Rat re;
  Rat im;

  GaussRat() : re(0), im(0) {}
  GaussRat(int n) : re(n), im(0) {}  // NOLINT: implicit by design, 0/1 literals
  GaussRat(Rat r) : re(std::move(r)), im(0) {}
  GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

  static GaussRat i() { return GaussRat(Rat(0), Rat(1)); }

  friend bool operator==(const GaussRat& a, const GaussRat& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }

  friend GaussRat operator+(const GaussRat& a, const GaussRat& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussRat operator-(const GaussRat& a, const GaussRat& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussRat operator-(const GaussRat& a) { return {-a.re, -a.im}; }
  friend GaussRat operator*(const GaussRat& a, const GaussRat& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussRat operator/(const GaussRat& a, const GaussRat& b) {
    Rat n = b.re * b.re + b.im * b.im;
    if (is_zero(n)) throw Error("GaussRat division by zero");
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
  }
  GaussRat& operator+=(const GaussRat& o) { return *this = *this + o; }
  GaussRat& operator-=(const GaussRat& o) { return *this = *this - o; }
  GaussRat& operator*=(const GaussRat& o) { return *this = *this * o; }
  GaussRat& operator/=(const GaussRat& o) { return *this = *this / o; }

  friend std::ostream& operator<<(std::ostream& os, const GaussRat& z) {
    return os << rat_str(z.re) << (sgn(z.im) < 0 ? "" : "+") << rat_str(z.im) << "i";
  }
};

inline GaussRat conj(const GaussRat& z) { return {z.re, -z.im}; }

inline bool is_zero(const GaussRat& z) { return is_zero(z.re) && is_zero(z.im); }

/// Squared modulus |z|^2, exact.
inline Rat norm2(const GaussRat& z) { return z.re * z.re + z.im * z.im; }

}  // namespace rootcount

#endif
