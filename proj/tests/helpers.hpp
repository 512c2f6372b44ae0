// Shared test utilities: terse polynomial literals and deterministic
// random generators that stay independent of the library's oracle module.
#ifndef ROOTCOUNT_TESTS_HELPERS_HPP
#define ROOTCOUNT_TESTS_HELPERS_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "rootcount/poly.hpp"
#include "rootcount/rat.hpp"

namespace rctest {

using rootcount::CPoly;
using rootcount::GaussRat;
using rootcount::Rat;
using rootcount::RPoly;
using rootcount::frac;

inline RPoly rp(std::vector<long> cs) {
  std::vector<Rat> qs(cs.begin(), cs.end());
  return RPoly(std::move(qs));
}

inline GaussRat gr(long re, long im) { return {Rat(re), Rat(im)}; }

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}

  std::uint64_t below(std::uint64_t n) { return gen() % n; }

  Rat rat(long bound = 10) {
    const long num = static_cast<long>(below(2 * bound + 1)) - bound;
    const long den = static_cast<long>(below(bound)) + 1;
    return frac(num, den);
  }

  Rat nonzero_rat(long bound = 10) {
    for (;;) {
      Rat q = rat(bound);
      if (sgn(q) != 0) return q;
    }
  }

  RPoly rpoly(int max_degree, long bound = 10) {
    std::vector<Rat> cs;
    const std::uint64_t len = below(static_cast<std::uint64_t>(max_degree) + 2);
    for (std::uint64_t k = 0; k < len; ++k) cs.push_back(rat(bound));
    return RPoly(std::move(cs));
  }

  RPoly nonzero_rpoly(int max_degree, long bound = 10) {
    for (;;) {
      RPoly p = rpoly(max_degree, bound);
      if (!p.is_zero()) return p;
    }
  }

  CPoly cpoly(int max_degree, long bound = 10) {
    std::vector<GaussRat> cs;
    const std::uint64_t len = below(static_cast<std::uint64_t>(max_degree) + 2);
    for (std::uint64_t k = 0; k < len; ++k) cs.emplace_back(rat(bound), rat(bound));
    return CPoly(std::move(cs));
  }
};

}  // namespace rctest

#endif
