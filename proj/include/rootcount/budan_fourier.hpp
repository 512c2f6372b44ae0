#ifndef ROOTCOUNT_BUDAN_FOURIER_HPP
#define ROOTCOUNT_BUDAN_FOURIER_HPP

#include <vector>

#include "rootcount/errors.hpp"
#include "rootcount/ext_real.hpp"
#include "rootcount/poly.hpp"
#include "rootcount/sign_var.hpp"

namespace rootcount {

// An even-parity over-approximation: the true count is <= bound and
// bound - count is even. When bound <= 1 the bound IS the count.
struct ParityBound {
  unsigned long bound = 0;

  bool exact() const { return bound <= 1; }
};

/// Fourier sequence [p, p', p'', ..., p^(deg p)], final entry a nonzero
/// constant. Dropping the constant would corrupt variations at -inf.
inline std::vector<RPoly> pders(const RPoly& p) {
  if (p.is_zero()) throw ZeroPolyError();
  std::vector<RPoly> seq{p};
  while (!(seq.back().degree() == 0)) seq.push_back(pderiv(seq.back()));
  return seq;
}

/// Var(Der(p); a, b) for finite a < b.
inline long changes_itv_der(const Rat& a, const Rat& b, const RPoly& p) {
  if (!(a < b)) throw BadIntervalError();
  return var_diff(pders(p), ExtReal(a), ExtReal(b));
}

/// Var(Der(p); -inf, a).
inline long changes_le_der(const Rat& a, const RPoly& p) {
  return var_diff(pders(p), ExtReal::neg_inf(), ExtReal(a));
}

/// Var(Der(p); b, +inf).
inline long changes_gt_der(const Rat& b, const RPoly& p) {
  return var_diff(pders(p), ExtReal(b), ExtReal::pos_inf());
}

/// Var(Der(p); -inf, +inf); always deg p.
inline long changes_R_der(const RPoly& p) {
  return var_diff(pders(p), ExtReal::neg_inf(), ExtReal::pos_inf());
}

inline unsigned long checked_nat(long v, const char* what) {
  if (v < 0) throw InternalNegativeError(what);
  return static_cast<unsigned long>(v);
}

// Budan-Fourier bound for the number of roots of p, counting multiplicity,
// in (a, b] (open at an infinite endpoint). The bound exceeds the true
// count by an even number.
inline ParityBound budan_fourier_bound(const RPoly& p, const ExtReal& a, const ExtReal& b) {
  if (!(a < b)) throw BadIntervalError();
  const long v = var_diff(pders(p), a, b);
  return {checked_nat(v, "Budan-Fourier variation difference")};
}

/// Descartes' rule of signs: bound on roots in (0, +inf), counting
/// multiplicity, from the coefficient sequence alone.
inline ParityBound descartes_sign(const RPoly& p) {
  if (p.is_zero()) throw ZeroPolyError();
  return {var(p.coeffs())};
}

// Descartes roots test for the OPEN interval (a, b): Var of the
// coefficients of the base-transformed polynomial
//   (x+1)^n * p((a x + b) / (x + 1)).
// Roots of p in (a,b) map to positive roots of the transform. Exact when
// the bound is 0 or 1, and whenever all roots of p are real.
inline ParityBound descartes_roots_test(const Rat& a, const Rat& b, const RPoly& p) {
  if (p.is_zero()) throw ZeroPolyError();
  if (!(a < b)) throw BadIntervalError();
  const RPoly shifted = fcompose(p, RPoly{b, a}, RPoly{Rat(1), Rat(1)});
  return {var(shifted.coeffs())};
}

}  // namespace rootcount

#endif
