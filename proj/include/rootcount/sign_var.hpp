#ifndef ROOTCOUNT_SIGN_VAR_HPP
#define ROOTCOUNT_SIGN_VAR_HPP

#include <vector>

#include "rootcount/errors.hpp"
#include "rootcount/ext_real.hpp"
#include "rootcount/poly.hpp"
#include "rootcount/rat.hpp"

namespace rootcount {

/// Sign variations of a list of signs (-1/0/+1): drop zeros, count
/// adjacent pairs with strictly opposite signs.
inline unsigned var_signs(const std::vector<int>& signs) {
  unsigned count = 0;
  int prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

/// Sign variations of a list of rationals.
inline unsigned var(const std::vector<Rat>& xs) {
  std::vector<int> signs;
  signs.reserve(xs.size());
  for (const auto& q : xs) signs.push_back(sign(q));
  return var_signs(signs);
}

// Sign of p at a point of the extended real line. At +inf the sign is that
// of the leading coefficient; at -inf it flips with odd degree. No sample
// points: this is exact without any root bound.
inline int sign_at(const RPoly& p, const ExtReal& x) {
  if (p.is_zero()) return 0;
  switch (x.kind()) {
    case ExtReal::Kind::Finite:
      return sign(eval(p, x.value()));
    case ExtReal::Kind::PosInf:
      return sign(p.lead_coeff());
    default:  // NegInf
      return p.degree() % 2 == 0 ? sign(p.lead_coeff()) : -sign(p.lead_coeff());
  }
}

/// Sign variations of a polynomial sequence evaluated at x.
inline unsigned var_at(const std::vector<RPoly>& ps, const ExtReal& x) {
  std::vector<int> signs;
  signs.reserve(ps.size());
  for (const auto& p : ps) signs.push_back(sign_at(p, x));
  return var_signs(signs);
}

/// var_at(ps, a) - var_at(ps, b); may be negative. Requires a < b.
inline long var_diff(const std::vector<RPoly>& ps, const ExtReal& a, const ExtReal& b) {
  if (!(a < b)) throw BadIntervalError();
  return static_cast<long>(var_at(ps, a)) - static_cast<long>(var_at(ps, b));
}

}  // namespace rootcount

#endif
