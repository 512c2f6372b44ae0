#ifndef ROOTCOUNT_COMPLEX_COUNT_HPP
#define ROOTCOUNT_COMPLEX_COUNT_HPP

#include "rootcount/errors.hpp"
#include "rootcount/poly.hpp"
#include "rootcount/rat.hpp"
#include "rootcount/sturm.hpp"

namespace rootcount {

/// Open ball { z : |z - center| < radius }. Counting returns 0 when
/// radius <= 0.
struct Ball {
  GaussRat center;
  Rat radius;
};

// Half-plane { z : Im((z - anchor) / direction) > 0 }. The affine map
// z = direction * w + anchor carries the upper half-plane onto the region,
// so anchor 0 / direction 1 is the upper half-plane itself and anchor 0 /
// direction i is the left half-plane { Re z < 0 }.
struct HalfPlane {
  GaussRat anchor;
  GaussRat direction;
};

// Number of roots of p, counting multiplicity, strictly above the real
// axis. Roots ON the axis are allowed; their total multiplicity equals the
// real-root count of gcd(Re p, Im p) and is subtracted out:
//
//   ( deg p - Var(SRemSE(g,g'); -inf,+inf) - Var(SRemS(pR,pI); -inf,+inf) ) / 2
//
// with p made monic first, pR/pI its real/imaginary coefficient parts and
// g = gcd(pI, pR). The intermediate value is provably nonnegative and
// even; a violation raises an internal error instead of truncating.
inline unsigned long proots_upper(const CPoly& p) {
  if (p.is_zero()) throw ZeroPolyError();
  const CPoly pm = monic(p);
  const RPoly p_re = re_poly(pm);
  const RPoly p_im = im_poly(pm);
  const RPoly g = gcd_poly(p_im, p_re);
  const long border = changes_R_smods_ext(g, pderiv(g));
  const long cindex = changes_R_smods(p_re, p_im);
  const long t = static_cast<long>(p.degree()) - border - cindex;
  if (t < 0) throw InternalNegativeError("upper half-plane root count");
  if (t % 2 != 0) throw InternalParityError("upper half-plane root count");
  return static_cast<unsigned long>(t) / 2;
}

// Number of roots of p in the OPEN ball |z - z0| < r, counting
// multiplicity; boundary roots excluded. Composing with z0 + r*x moves the
// ball to the unit ball, then (i-x)/(i+x) maps the upper half-plane onto
// it.
inline unsigned long proots_ball(const CPoly& p, const GaussRat& z0, const Rat& r) {
  if (sign(r) <= 0) return 0;
  if (p.is_zero()) throw ZeroPolyError();
  const CPoly recentred = pcompose(p, CPoly{z0, GaussRat(r)});
  const CPoly q1{GaussRat::i(), GaussRat(-1)};
  const CPoly q2{GaussRat::i(), GaussRat(1)};
  return proots_upper(fcompose(recentred, q1, q2));
}

inline unsigned long proots_ball(const CPoly& p, const Ball& ball) {
  return proots_ball(p, ball.center, ball.radius);
}

/// Roots of p strictly inside h, counting multiplicity; border roots
/// excluded. Pulls h back to the upper half-plane via z = d*w + z0.
inline unsigned long proots_half_plane(const CPoly& p, const HalfPlane& h) {
  if (is_zero(h.direction)) throw ZeroDirectionError();
  if (p.is_zero()) throw ZeroPolyError();
  return proots_upper(pcompose(p, CPoly{h.anchor, h.direction}));
}

}  // namespace rootcount

#endif
