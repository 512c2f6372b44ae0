#ifndef ROOTCOUNT_ORACLE_HPP
#define ROOTCOUNT_ORACLE_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "rootcount/complex_count.hpp"
#include "rootcount/errors.hpp"
#include "rootcount/ext_real.hpp"
#include "rootcount/poly.hpp"
#include "rootcount/rat.hpp"

namespace rootcount {

// Constructive ground truth for property tests: polynomials are built from
// explicit (root, multiplicity) lists, so every count is known exactly and
// no numeric root-finding (or tolerance) is ever involved.
struct RootSpec {
  struct RealRoot {
    Rat value;
    unsigned mult = 1;
  };
  /// Irreducible real quadratic x^2 + b x + c with b^2 - 4c < 0; its two
  /// roots are a conjugate pair off the real axis.
  struct QuadFactor {
    Rat b;
    Rat c;
    unsigned mult = 1;
  };
  struct ComplexRoot {
    GaussRat value;
    unsigned mult = 1;
  };

  std::vector<RealRoot> real_roots;
  std::vector<QuadFactor> quad_factors;
  std::vector<ComplexRoot> complex_roots;
  GaussRat lead = GaussRat(1);

  unsigned real_degree() const {
    unsigned d = 0;
    for (const auto& r : real_roots) d += r.mult;
    for (const auto& q : quad_factors) d += 2 * q.mult;
    return d;
  }
  bool all_roots_real() const { return quad_factors.empty() && complex_roots.empty(); }
};

/// lead * prod (x - r)^m * prod (x^2 + b x + c)^m. Requires a
/// real-coefficient result: no complex roots, real nonzero lead.
inline RPoly build_rpoly(const RootSpec& spec) {
  if (!spec.complex_roots.empty()) throw Error("build_rpoly: spec lists complex roots");
  if (!is_zero(spec.lead.im) || is_zero(spec.lead.re))
    throw Error("build_rpoly: lead scalar must be real and nonzero");
  RPoly p = RPoly::constant(spec.lead.re);
  for (const auto& r : spec.real_roots) {
    const RPoly lin{-r.value, Rat(1)};
    for (unsigned k = 0; k < r.mult; ++k) p *= lin;
  }
  for (const auto& q : spec.quad_factors) {
    if (!(q.b * q.b - 4 * q.c < 0)) throw Error("build_rpoly: quadratic factor not irreducible");
    const RPoly quad{q.c, q.b, Rat(1)};
    for (unsigned k = 0; k < q.mult; ++k) p *= quad;
  }
  return p;
}

/// lead * prod over real and complex roots as Gaussian-rational linear
/// factors, times any quadratic factors.
inline CPoly build_cpoly(const RootSpec& spec) {
  if (is_zero(spec.lead)) throw Error("build_cpoly: lead scalar must be nonzero");
  CPoly p = CPoly::constant(spec.lead);
  auto mul_linear = [&p](const GaussRat& root, unsigned mult) {
    const CPoly lin{-root, GaussRat(1)};
    for (unsigned k = 0; k < mult; ++k) p *= lin;
  };
  for (const auto& r : spec.real_roots) mul_linear(GaussRat(r.value), r.mult);
  for (const auto& z : spec.complex_roots) mul_linear(z.value, z.mult);
  for (const auto& q : spec.quad_factors) {
    const CPoly quad{GaussRat(q.c), GaussRat(q.b), GaussRat(1)};
    for (unsigned k = 0; k < q.mult; ++k) p *= quad;
  }
  return p;
}

/// Real roots in the interval from a to b, open on the left, closed on the
/// right iff closed_right (an infinite right endpoint is always open).
inline unsigned long true_count_real(const RootSpec& spec, const ExtReal& a, const ExtReal& b,
                                     bool closed_right, bool with_multiplicity) {
  unsigned long total = 0;
  for (const auto& r : spec.real_roots) {
    const ExtReal x(r.value);
    const bool above = a < x;
    const bool below = closed_right ? !(b < x) : x < b;
    if (above && below) total += with_multiplicity ? r.mult : 1;
  }
  return total;
}

namespace detail {
inline void require_linear_only(const RootSpec& spec, const char* what) {
  if (!spec.quad_factors.empty())
    throw Error(std::string(what) + ": quadratic factors have irrational roots");
}
}  // namespace detail

/// Roots with Im > 0, with multiplicity. Each irreducible quadratic
/// contributes exactly one conjugate root above the axis.
inline unsigned long true_count_upper(const RootSpec& spec) {
  unsigned long total = 0;
  for (const auto& z : spec.complex_roots)
    if (sign(z.value.im) > 0) total += z.mult;
  for (const auto& q : spec.quad_factors) total += q.mult;
  return total;
}

/// Roots exactly on the real axis, with multiplicity.
inline unsigned long true_count_real_axis(const RootSpec& spec) {
  unsigned long total = 0;
  for (const auto& r : spec.real_roots) total += r.mult;
  for (const auto& z : spec.complex_roots)
    if (sign(z.value.im) == 0) total += z.mult;
  return total;
}

/// Roots strictly inside the open ball, with multiplicity; boundary
/// membership is decided exactly via |z - c|^2 < r^2.
inline unsigned long true_count_ball(const RootSpec& spec, const Ball& ball) {
  detail::require_linear_only(spec, "true_count_ball");
  if (sign(ball.radius) <= 0) return 0;
  const Rat r2 = ball.radius * ball.radius;
  unsigned long total = 0;
  auto inside = [&](const GaussRat& z) { return norm2(z - ball.center) < r2; };
  for (const auto& r : spec.real_roots)
    if (inside(GaussRat(r.value))) total += r.mult;
  for (const auto& z : spec.complex_roots)
    if (inside(z.value)) total += z.mult;
  return total;
}

/// Roots with Im((z - anchor) / direction) > 0, with multiplicity.
inline unsigned long true_count_half_plane(const RootSpec& spec, const HalfPlane& h) {
  detail::require_linear_only(spec, "true_count_half_plane");
  if (is_zero(h.direction)) throw ZeroDirectionError();
  unsigned long total = 0;
  auto inside = [&](const GaussRat& z) { return sign(((z - h.anchor) / h.direction).im) > 0; };
  for (const auto& r : spec.real_roots)
    if (inside(GaussRat(r.value))) total += r.mult;
  for (const auto& z : spec.complex_roots)
    if (inside(z.value)) total += z.mult;
  return total;
}

namespace detail {

// Hand-rolled draws so that a seed replays identically everywhere
// (uniform_int_distribution is implementation-defined).
inline std::uint64_t draw(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

inline Rat draw_rat(std::mt19937_64& rng, int coeff_bits) {
  const std::uint64_t bound = (std::uint64_t{1} << coeff_bits) - 1;  // 2^bits - 1
  const long num = static_cast<long>(draw(rng, 2 * bound + 1)) - static_cast<long>(bound);
  const long den = static_cast<long>(draw(rng, bound)) + 1;
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline Rat draw_nonzero_rat(std::mt19937_64& rng, int coeff_bits) {
  for (;;) {
    Rat q = draw_rat(rng, coeff_bits);
    if (!is_zero(q)) return q;
  }
}

template <class Seen>
bool contains(const Seen& seen, const typename Seen::value_type& v) {
  for (const auto& s : seen)
    if (s == v) return true;
  return false;
}

}  // namespace detail

struct RandomSpecOptions {
  unsigned max_mult = 4;
  bool allow_quadratics = true;  // false forces an all-real-roots spec
};

/// Deterministic pseudo-random real RootSpec: root numerators/denominators
/// fit in coeff_bits bits, total degree <= max_degree.
inline RootSpec random_spec(std::uint64_t seed, int max_degree, int coeff_bits,
                            const RandomSpecOptions& opts = {}) {
  if (max_degree < 1) throw Error("random_spec: max_degree must be >= 1");
  std::mt19937_64 rng(seed);
  RootSpec spec;
  spec.lead = GaussRat(detail::draw_nonzero_rat(rng, coeff_bits));
  int budget = max_degree;
  std::vector<Rat> used;
  while (budget > 0) {
    if (!spec.real_roots.empty() && detail::draw(rng, 4) == 0) break;
    if (opts.allow_quadratics && budget >= 2 && detail::draw(rng, 4) == 0) {
      const Rat b = detail::draw_rat(rng, coeff_bits);
      const Rat c = b * b / 4 + abs(detail::draw_nonzero_rat(rng, coeff_bits));
      const unsigned mult =
          1 + static_cast<unsigned>(detail::draw(rng, std::min<std::uint64_t>(2, budget / 2)));
      spec.quad_factors.push_back({b, c, mult});
      budget -= 2 * static_cast<int>(mult);
      continue;
    }
    Rat root = detail::draw_rat(rng, coeff_bits);
    if (detail::contains(used, root)) continue;
    used.push_back(root);
    const unsigned mult = 1 + static_cast<unsigned>(detail::draw(
                                  rng, std::min<std::uint64_t>(opts.max_mult, budget)));
    spec.real_roots.push_back({root, mult});
    budget -= static_cast<int>(mult);
  }
  return spec;
}

/// Deterministic pseudo-random complex RootSpec with Gaussian-rational
/// roots; roughly border_percent of the roots land exactly on the real
/// axis to exercise border handling.
inline RootSpec random_complex_spec(std::uint64_t seed, int max_degree, int coeff_bits,
                                    unsigned border_percent = 30) {
  if (max_degree < 1) throw Error("random_complex_spec: max_degree must be >= 1");
  std::mt19937_64 rng(seed);
  RootSpec spec;
  spec.lead = GaussRat(detail::draw_nonzero_rat(rng, coeff_bits),
                       detail::draw_rat(rng, coeff_bits));
  int budget = max_degree;
  std::vector<GaussRat> used;
  while (budget > 0) {
    if (!spec.complex_roots.empty() && detail::draw(rng, 4) == 0) break;
    GaussRat root(detail::draw_rat(rng, coeff_bits), detail::draw_rat(rng, coeff_bits));
    if (detail::draw(rng, 100) < border_percent) root.im = 0;
    if (detail::contains(used, root)) continue;
    used.push_back(root);
    const unsigned mult =
        1 + static_cast<unsigned>(detail::draw(rng, std::min<std::uint64_t>(3, budget)));
    spec.complex_roots.push_back({root, mult});
    budget -= static_cast<int>(mult);
  }
  return spec;
}

}  // namespace rootcount

#endif
