#ifndef ROOTCOUNT_STURM_HPP
#define ROOTCOUNT_STURM_HPP

#include <cassert>
#include <utility>
#include <vector>

#include "rootcount/budan_fourier.hpp"
#include "rootcount/errors.hpp"
#include "rootcount/ext_real.hpp"
#include "rootcount/poly.hpp"
#include "rootcount/sign_var.hpp"

namespace rootcount {

namespace detail {
// Remainder with the "mod 0 = identity" convention the recurrences assume.
inline RPoly mod0(const RPoly& p, const RPoly& q) {
  return q.is_zero() ? p : pmod(p, q);
}

inline int degree_or_neg(const RPoly& p) { return p.is_zero() ? -1 : p.degree(); }
}  // namespace detail

// Signed remainder sequence: [p, q, -(p mod q), ...] until the next
// element would start from zero. Empty when p = 0.
inline std::vector<RPoly> smods(RPoly p, RPoly q) {
  std::vector<RPoly> seq;
  while (!p.is_zero()) {
    seq.push_back(p);
    RPoly next = -detail::mod0(p, q);
    // decreasing measure: deg(next) < deg(q) whenever q != 0
    assert(q.is_zero() || detail::degree_or_neg(next) < detail::degree_or_neg(q));
    p = std::move(q);
    q = std::move(next);
  }
  return seq;
}

// Extended signed remainder sequence: like smods, but when the division is
// exact the sequence continues with the derivative of the divisor instead
// of stopping at the gcd. Terminates: the degree strictly decreases in
// both branches.
inline std::vector<RPoly> smods_ext(RPoly p, RPoly q) {
  std::vector<RPoly> seq;
  while (!p.is_zero()) {
    seq.push_back(p);
    RPoly m = detail::mod0(p, q);
    RPoly next = m.is_zero() ? pderiv(q) : -m;
    // decreasing measure: deg(next) < deg(q) whenever q != 0
    assert(q.is_zero() || detail::degree_or_neg(next) < detail::degree_or_neg(q));
    p = std::move(q);
    q = std::move(next);
  }
  return seq;
}

/// Var(SRemS(p,q); a, b) for finite a < b.
inline long changes_itv_smods(const Rat& a, const Rat& b, const RPoly& p, const RPoly& q) {
  if (!(a < b)) throw BadIntervalError();
  return var_diff(smods(p, q), ExtReal(a), ExtReal(b));
}

/// Var(SRemS(p,q); -inf, +inf).
inline long changes_R_smods(const RPoly& p, const RPoly& q) {
  return var_diff(smods(p, q), ExtReal::neg_inf(), ExtReal::pos_inf());
}

/// Var(SRemSE(p,q); a, b).
inline long changes_itv_smods_ext(const ExtReal& a, const ExtReal& b, const RPoly& p,
                                  const RPoly& q) {
  return var_diff(smods_ext(p, q), a, b);
}

/// Var(SRemSE(p,q); -inf, +inf).
inline long changes_R_smods_ext(const RPoly& p, const RPoly& q) {
  return var_diff(smods_ext(p, q), ExtReal::neg_inf(), ExtReal::pos_inf());
}

namespace detail {
inline void check_endpoints(const RPoly& p, const ExtReal& a, const ExtReal& b) {
  if (p.is_zero()) throw ZeroPolyError();
  if (!(a < b)) throw BadIntervalError();
  if (a.is_finite() && is_zero(eval(p, a.value()))) throw RootAtEndpointError();
  if (b.is_finite() && is_zero(eval(p, b.value()))) throw RootAtEndpointError();
}
}  // namespace detail

// Sturm's theorem: number of DISTINCT real roots of p in the open
// interval (a, b). Finite endpoints must not be roots.
inline unsigned long count_distinct_real(const RPoly& p, const ExtReal& a, const ExtReal& b) {
  detail::check_endpoints(p, a, b);
  const long v = var_diff(smods(p, pderiv(p)), a, b);
  return checked_nat(v, "Sturm variation difference");
}

// Extended Sturm: number of real roots of p in (a, b) COUNTING
// MULTIPLICITY, via the extended signed remainder sequence of (p, p').
inline unsigned long count_real_mult(const RPoly& p, const ExtReal& a, const ExtReal& b) {
  detail::check_endpoints(p, a, b);
  const long v = changes_itv_smods_ext(a, b, p, pderiv(p));
  return checked_nat(v, "extended Sturm variation difference");
}

}  // namespace rootcount

#endif
