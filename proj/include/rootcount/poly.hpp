#ifndef ROOTCOUNT_POLY_HPP
#define ROOTCOUNT_POLY_HPP

#include <cassert>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <utility>
#include <vector>

#include "rootcount/errors.hpp"
#include "rootcount/rat.hpp"

namespace rootcount {

// Dense univariate polynomial over an exact field T (Rat or GaussRat).
// coeffs()[k] is the coefficient of x^k; the list never ends in a zero.
// The zero polynomial is the empty list and has no degree.
template <class T>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<T> cs) : coeffs_(std::move(cs)) { normalize(); }
  Poly(std::initializer_list<T> cs) : coeffs_(cs) { normalize(); }

  static Poly constant(T c) { return Poly(std::vector<T>{std::move(c)}); }
  /// The monomial x.
  static Poly x() { return Poly{T(0), T(1)}; }

  bool is_zero() const { return coeffs_.empty(); }

  int degree() const {
    if (is_zero()) throw ZeroPolyError();
    return static_cast<int>(coeffs_.size()) - 1;
  }

  const T& lead_coeff() const {
    if (is_zero()) throw ZeroPolyError();
    return coeffs_.back();
  }

  const std::vector<T>& coeffs() const { return coeffs_; }

  /// Coefficient of x^k, zero beyond the degree.
  T coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : T(0); }

  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<T> cs(std::max(a.coeffs_.size(), b.coeffs_.size()), T(0));
    for (std::size_t k = 0; k < cs.size(); ++k) cs[k] = a.coeff(k) + b.coeff(k);
    return Poly(std::move(cs));
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
  friend Poly operator-(const Poly& a) {
    std::vector<T> cs = a.coeffs_;
    for (auto& c : cs) c = -c;
    return Poly(std::move(cs));
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<T> cs(a.coeffs_.size() + b.coeffs_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        cs[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Poly(std::move(cs));
  }
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend std::ostream& operator<<(std::ostream& os, const Poly& p) {
    os << "[";
    for (std::size_t k = 0; k < p.coeffs_.size(); ++k) {
      if (k) os << ", ";
      os << p.coeffs_[k];
    }
    return os << "]";
  }

 private:
  void normalize() {
    while (!coeffs_.empty() && rootcount::is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  std::vector<T> coeffs_;
};

using RPoly = Poly<Rat>;
using CPoly = Poly<GaussRat>;

template <class T>
Poly<T> scale(const T& c, const Poly<T>& p) {
  if (is_zero(c)) return Poly<T>();
  std::vector<T> cs = p.coeffs();
  for (auto& a : cs) a = c * a;
  return Poly<T>(std::move(cs));
}

/// Horner evaluation.
template <class T>
T eval(const Poly<T>& p, const T& x) {
  T acc(0);
  const auto& cs = p.coeffs();
  for (std::size_t k = cs.size(); k-- > 0;) acc = acc * x + cs[k];
  return acc;
}

inline Rat eval(const RPoly& p, const Rat& x) { return eval<Rat>(p, x); }

/// Formal derivative.
template <class T>
Poly<T> pderiv(const Poly<T>& p) {
  const auto& cs = p.coeffs();
  if (cs.size() <= 1) return Poly<T>();
  std::vector<T> ds(cs.size() - 1, T(0));
  for (std::size_t k = 1; k < cs.size(); ++k) ds[k - 1] = T(static_cast<int>(k)) * cs[k];
  return Poly<T>(std::move(ds));
}

/// Exact field division with remainder: p = quot*q + rem, deg rem < deg q.
template <class T>
std::pair<Poly<T>, Poly<T>> divmod(const Poly<T>& p, const Poly<T>& q) {
  if (q.is_zero()) throw DivisionByZeroPolyError();
  std::vector<T> rem = p.coeffs();
  const int dq = q.degree();
  std::vector<T> quot;
  if (static_cast<int>(rem.size()) - 1 >= dq)
    quot.assign(rem.size() - static_cast<std::size_t>(dq), T(0));
  while (static_cast<int>(rem.size()) - 1 >= dq && !rem.empty()) {
    const T c = rem.back() / q.lead_coeff();
    const std::size_t shift = rem.size() - 1 - static_cast<std::size_t>(dq);
    quot[shift] = c;
    for (int k = 0; k <= dq; ++k)
      rem[shift + static_cast<std::size_t>(k)] -= c * q.coeffs()[static_cast<std::size_t>(k)];
    // the leading term cancels exactly
    assert(is_zero(rem.back()));
    rem.pop_back();
    while (!rem.empty() && is_zero(rem.back())) rem.pop_back();
  }
  return {Poly<T>(std::move(quot)), Poly<T>(std::move(rem))};
}

template <class T>
Poly<T> pmod(const Poly<T>& p, const Poly<T>& q) {
  return divmod(p, q).second;
}

/// p scaled to leading coefficient 1.
template <class T>
Poly<T> monic(const Poly<T>& p) {
  if (p.is_zero()) throw ZeroPolyError();
  return scale(T(T(1) / p.lead_coeff()), p);
}

/// Monic greatest common divisor; gcd(p, 0) = monic(p).
template <class T>
Poly<T> gcd_poly(Poly<T> p, Poly<T> q) {
  if (p.is_zero() && q.is_zero()) throw BothZeroError();
  while (!q.is_zero()) {
    Poly<T> r = pmod(p, q);
    p = std::move(q);
    q = std::move(r);
  }
  return monic(p);
}

/// Multiplicity of a as a root of p: largest k with (x-a)^k | p.
template <class T>
unsigned order(const T& a, const Poly<T>& p) {
  if (p.is_zero()) throw ZeroPolyError();
  const Poly<T> lin{-a, T(1)};
  Poly<T> cur = p;
  unsigned k = 0;
  for (;;) {
    auto [quot, rem] = divmod(cur, lin);
    if (!rem.is_zero()) return k;
    ++k;
    cur = std::move(quot);
  }
}

/// Polynomial composition: x |-> p(q(x)).
template <class T>
Poly<T> pcompose(const Poly<T>& p, const Poly<T>& q) {
  Poly<T> acc;
  const auto& cs = p.coeffs();
  for (std::size_t k = cs.size(); k-- > 0;) acc = acc * q + Poly<T>::constant(cs[k]);
  return acc;
}

// Rational-function composition: the polynomial q2^deg(p) * p(q1/q2),
// computed as a fold over the coefficients of p from the highest degree
// down to the constant term. The consumption order is normative; the
// reverse fold produces a different polynomial.
//
// Contract: for every x with q2(x) != 0,
//   eval(fcompose(p,q1,q2), x) = eval(p, eval(q1,x)/eval(q2,x)) * eval(q2,x)^deg(p).
template <class T>
Poly<T> fcompose(const Poly<T>& p, const Poly<T>& q1, const Poly<T>& q2) {
  Poly<T> r1;                        // accumulates the numerator
  Poly<T> r2 = Poly<T>::constant(T(1));  // accumulates powers of q2
  const auto& cs = p.coeffs();
  for (std::size_t k = cs.size(); k-- > 0;) {
    r1 = r2 * Poly<T>::constant(cs[k]) + q1 * r1;
    r2 = q2 * r2;
  }
  return r1;
}

/// Coefficient-wise real part.
inline RPoly re_poly(const CPoly& p) {
  std::vector<Rat> cs;
  cs.reserve(p.coeffs().size());
  for (const auto& z : p.coeffs()) cs.push_back(z.re);
  return RPoly(std::move(cs));
}

/// Coefficient-wise imaginary part.
inline RPoly im_poly(const CPoly& p) {
  std::vector<Rat> cs;
  cs.reserve(p.coeffs().size());
  for (const auto& z : p.coeffs()) cs.push_back(z.im);
  return RPoly(std::move(cs));
}

/// Lift a real polynomial to complex coefficients.
inline CPoly to_cpoly(const RPoly& p) {
  std::vector<GaussRat> cs;
  cs.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) cs.emplace_back(c);
  return CPoly(std::move(cs));
}

}  // namespace rootcount

#endif
