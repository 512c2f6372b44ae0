// Acceptance gate: runs the eleven release criteria end to end and prints
// one PASS/FAIL line each. Exits nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "rootcount/poly_io.hpp"
#include "rootcount/rootcount.hpp"

using namespace rootcount;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void report(int criterion, const std::string& name, bool ok, double secs,
            const std::string& detail = "") {
  if (!ok) ++failures;
  std::printf("%s  criterion %2d  %-38s  %7.3fs%s%s\n", ok ? "PASS" : "FAIL", criterion,
              name.c_str(), secs, detail.empty() ? "" : "  ", detail.c_str());
  std::fflush(stdout);
}

RPoly rp(std::vector<long> cs) {
  std::vector<Rat> qs(cs.begin(), cs.end());
  return RPoly(std::move(qs));
}

// deterministic finite interval with endpoints off the RootSpec's root list
std::pair<Rat, Rat> safe_finite_interval(const RootSpec& spec, std::mt19937_64& rng) {
  auto pick = [&]() -> Rat {
    for (;;) {
      const Rat c = detail::draw_rat(rng, 5) * 8;
      bool hits = false;
      for (const auto& r : spec.real_roots)
        if (r.value == c) hits = true;
      if (!hits) return c;
    }
  };
  for (;;) {
    Rat a = pick();
    Rat b = pick();
    if (b < a) swap(a, b);
    if (a < b) return {a, b};
  }
}

void criterion_1() {
  const auto t0 = Clock::now();
  bool ok = true;
  ok &= var({Rat(1), Rat(-2), Rat(0), Rat(3)}) == 2;
  ok &= var_diff({rp({0, 0, 1}), rp({-2, 1})}, ExtReal(0), ExtReal(1)) == -1;
  ok &= descartes_sign(rp({1, 0, -1, 2})).bound == 2;
  const double secs = seconds_since(t0);
  report(1, "sign-variation worked examples", ok && secs < 0.001, secs);
}

void criterion_2() {
  const auto t0 = Clock::now();
  const CPoly upper_example{GaussRat(Rat(1), Rat(1)), GaussRat(Rat(-2), Rat(-1)), GaussRat(1)};
  const bool upper_ok = proots_upper(upper_example) == 1;
  const double t_upper = seconds_since(t0);
  const auto t1 = Clock::now();
  const CPoly ball_example{GaussRat(Rat(0), Rat(1)), GaussRat(Rat(-1), Rat(-1)), GaussRat(1)};
  const bool ball_ok = proots_ball(ball_example, GaussRat(0), Rat(1)) == 0;
  const double t_ball = seconds_since(t1);
  report(2, "complex worked examples",
         upper_ok && ball_ok && t_upper < 0.010 && t_ball < 0.010, t_upper + t_ball);
}

void criterion_3() {
  const auto t0 = Clock::now();
  unsigned long violations = 0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const RootSpec spec = random_spec(seed, 8, 8);
    const RPoly p = build_rpoly(spec);
    std::mt19937_64 rng(seed ^ 0xacce9703);
    const auto [a, b] = safe_finite_interval(spec, rng);
    const unsigned long bound = budan_fourier_bound(p, ExtReal(a), ExtReal(b)).bound;
    const unsigned long truth = true_count_real(spec, ExtReal(a), ExtReal(b), true, true);
    if (bound < truth || (bound - truth) % 2 != 0) ++violations;
  }
  const double secs = seconds_since(t0);
  report(3, "Budan-Fourier parity bound x1000", violations == 0 && secs < 60.0, secs,
         violations ? std::to_string(violations) + " violations" : "");
}

void criterion_4() {
  const auto t0 = Clock::now();
  unsigned long violations = 0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const RootSpec spec = random_spec(seed, 8, 8);
    const RPoly p = build_rpoly(spec);
    std::mt19937_64 rng(seed ^ 0xacce9704);
    const auto [a, b] = safe_finite_interval(spec, rng);
    const unsigned long bound = descartes_roots_test(a, b, p).bound;
    const unsigned long truth = true_count_real(spec, ExtReal(a), ExtReal(b), false, true);
    if (bound < truth || (bound - truth) % 2 != 0) ++violations;
    if (bound <= 1 && bound != truth) ++violations;
  }
  report(4, "Descartes roots test x1000", violations == 0, seconds_since(t0),
         violations ? std::to_string(violations) + " violations" : "");
}

void criterion_5() {
  const auto t0 = Clock::now();
  unsigned long violations = 0;
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const RootSpec spec = random_spec(seed, 8, 8, {.allow_quadratics = false});
    const RPoly p = build_rpoly(spec);
    std::mt19937_64 rng(seed ^ 0xacce9705);
    const auto [a, b] = safe_finite_interval(spec, rng);
    if (budan_fourier_bound(p, ExtReal(a), ExtReal(b)).bound !=
        true_count_real(spec, ExtReal(a), ExtReal(b), true, true))
      ++violations;
    if (descartes_roots_test(a, b, p).bound !=
        true_count_real(spec, ExtReal(a), ExtReal(b), false, true))
      ++violations;
  }
  report(5, "all-real-roots exactness x500", violations == 0, seconds_since(t0),
         violations ? std::to_string(violations) + " violations" : "");
}

void criterion_6() {
  const auto t0 = Clock::now();
  unsigned long violations = 0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const RootSpec spec = random_spec(seed, 8, 8, {.max_mult = 4});
    const RPoly p = build_rpoly(spec);
    std::mt19937_64 rng(seed ^ 0xacce9706);
    const auto [a, b] = safe_finite_interval(spec, rng);
    if (count_real_mult(p, ExtReal(a), ExtReal(b)) !=
        true_count_real(spec, ExtReal(a), ExtReal(b), false, true))
      ++violations;
    if (count_distinct_real(p, ExtReal(a), ExtReal(b)) !=
        true_count_real(spec, ExtReal(a), ExtReal(b), false, false))
      ++violations;
  }
  report(6, "Sturm and extended Sturm x1000", violations == 0, seconds_since(t0),
         violations ? std::to_string(violations) + " violations" : "");
}

void criterion_7() {
  const auto t0 = Clock::now();
  unsigned long violations = 0;
  std::mt19937_64 rng(0xacce9707);
  auto rand_poly = [&](int max_deg) {
    std::vector<Rat> cs;
    const auto len = 1 + detail::draw(rng, max_deg + 1);
    for (std::uint64_t k = 0; k < len; ++k) cs.push_back(detail::draw_rat(rng, 5));
    return RPoly(std::move(cs));
  };
  for (int it = 0; it < 500; ++it) {
    RPoly p = rand_poly(6);
    RPoly q = rand_poly(5);
    while (p.is_zero()) p = rand_poly(6);
    while (q.is_zero()) q = rand_poly(5);
    const auto base = smods(p, q);
    if (base.empty() || monic(base.back()) != gcd_poly(p, q)) {
      ++violations;
      continue;
    }
    const auto ext = smods_ext(p, q);
    const RPoly r = base.back();
    const auto tail = smods_ext(r, pderiv(r));
    bool ok = ext.size() == base.size() + tail.size() - 1;
    for (std::size_t k = 0; ok && k < base.size(); ++k) ok = ext[k] == base[k];
    for (std::size_t k = 1; ok && k < tail.size(); ++k)
      ok = ext[base.size() + k - 1] == tail[k];
    if (!ok) ++violations;
  }
  report(7, "remainder-sequence lemmas x500", violations == 0, seconds_since(t0),
         violations ? std::to_string(violations) + " violations" : "");
}

void criterion_8() {
  const auto t0 = Clock::now();
  unsigned long violations = 0;
  std::mt19937_64 rng(0xacce9708);
  auto rand_poly = [&](int max_deg, bool nonzero) {
    for (;;) {
      std::vector<Rat> cs;
      const auto len = 1 + detail::draw(rng, max_deg + 1);
      for (std::uint64_t k = 0; k < len; ++k) cs.push_back(detail::draw_rat(rng, 5));
      RPoly p(std::move(cs));
      if (!nonzero || !p.is_zero()) return p;
    }
  };
  for (int it = 0; it < 500; ++it) {
    const RPoly p = rand_poly(5, true);
    const RPoly q1 = rand_poly(3, false);
    const RPoly q2 = rand_poly(3, true);
    const RPoly composed = fcompose(p, q1, q2);
    int samples = 0;
    for (long k = -40; samples < 10 && k <= 40; ++k) {
      const Rat x(k);
      const Rat denom = eval(q2, x);
      if (sign(denom) == 0) continue;
      ++samples;
      Rat pw(1);
      for (int j = 0; j < p.degree(); ++j) pw *= denom;
      if (eval(composed, x) != eval(p, Rat(eval(q1, x) / denom)) * pw) ++violations;
    }
    if (samples != 10) ++violations;
  }
  report(8, "fractional composition x500x10", violations == 0, seconds_since(t0),
         violations ? std::to_string(violations) + " violations" : "");
}

void criterion_9() {
  const auto t0 = Clock::now();
  unsigned long violations = 0;
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const RootSpec spec = random_complex_spec(seed, 7, 5, 40);
    const CPoly p = build_cpoly(spec);
    if (proots_upper(p) != true_count_upper(spec)) ++violations;
    std::mt19937_64 rng(seed ^ 0xacce9709);
    const Ball ball{GaussRat(detail::draw_rat(rng, 4), detail::draw_rat(rng, 4)),
                    abs(detail::draw_nonzero_rat(rng, 4))};
    if (proots_ball(p, ball) != true_count_ball(spec, ball)) ++violations;
    GaussRat dir(detail::draw_rat(rng, 4), detail::draw_rat(rng, 4));
    if (is_zero(dir)) dir = GaussRat(1);
    const HalfPlane h{GaussRat(detail::draw_rat(rng, 4), detail::draw_rat(rng, 4)), dir};
    if (proots_half_plane(p, h) != true_count_half_plane(spec, h)) ++violations;
  }
  report(9, "complex regions vs oracle x500", violations == 0, seconds_since(t0),
         violations ? std::to_string(violations) + " violations" : "");
}

void criterion_10() {
  const auto t0 = Clock::now();
  unsigned long violations = 0;
  std::mt19937_64 rng(0xacce9710);
  for (int it = 0; it < 500; ++it) {
    std::vector<Rat> cs;
    const auto len = 1 + detail::draw(rng, 9);
    for (std::uint64_t k = 0; k < len; ++k) cs.push_back(detail::draw_rat(rng, 6));
    const RPoly p(std::move(cs));
    if (p.is_zero()) continue;
    Rat a = detail::draw_rat(rng, 5);
    Rat b = detail::draw_rat(rng, 5);
    if (a == b) b = a + 1;
    if (b < a) swap(a, b);
    if (changes_le_der(a, p) + changes_itv_der(a, b, p) + changes_gt_der(b, p) != p.degree())
      ++violations;
  }
  report(10, "variation telescoping x500", violations == 0, seconds_since(t0),
         violations ? std::to_string(violations) + " violations" : "");
}

void criterion_11() {
  const auto t0 = Clock::now();
  bool ok = true;
  std::string detail_msg;
  double slowest_remainder = 0, fastest_variation = 1e9;
  std::vector<std::string> notes;
  for (const char* name : {"p1", "p2", "p3", "p4"}) {
    std::ifstream in(std::string(CORPUS_DIR) + "/" + name + ".json");
    if (!in) {
      ok = false;
      detail_msg = std::string("missing corpus file ") + name;
      break;
    }
    const RPoly p = parse_rpoly(json::parse(in));
    const ExtReal a(0), b(1);

    auto t = Clock::now();
    const unsigned long distinct = count_distinct_real(p, a, b);
    const double t_sturm = seconds_since(t);
    t = Clock::now();
    const unsigned long mult = count_real_mult(p, a, b);
    const double t_ext = seconds_since(t);
    t = Clock::now();
    const unsigned long fourier = budan_fourier_bound(p, a, b).bound;
    const double t_fourier = seconds_since(t);
    t = Clock::now();
    const unsigned long descartes = descartes_roots_test(Rat(0), Rat(1), p).bound;
    const double t_descartes = seconds_since(t);

    if (mult < distinct) ok = false;
    if (fourier < mult || (fourier - mult) % 2 != 0) ok = false;
    if (descartes < mult || (descartes - mult) % 2 != 0) ok = false;

    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "  %s: sturm=%lu (%.2fs) sturm-ext=%lu (%.2fs) fourier=%lu (%.2fs) "
                  "descartes=%lu (%.2fs)",
                  name, distinct, t_sturm, mult, t_ext, fourier, t_fourier, descartes,
                  t_descartes);
    notes.emplace_back(buf);
    if (std::string(name) != "p2") {  // qualitative ordering reported for p1, p3, p4
      slowest_remainder = std::max({slowest_remainder, t_sturm, t_ext});
      fastest_variation = std::min({fastest_variation, t_fourier, t_descartes});
    }
  }
  const double secs = seconds_since(t0);
  report(11, "corpus cross-consistency", ok && secs < 600.0, secs, detail_msg);
  for (const auto& n : notes) std::puts(n.c_str());
  std::printf("  note: remainder-sequence methods vs variation methods on p1/p3/p4: "
              "max remainder %.2fs, min variation %.2fs (reported, not asserted)\n",
              slowest_remainder, fastest_variation);
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  criterion_11();
  if (failures) {
    std::printf("%d criterion(s) FAILED\n", failures);
    return 1;
  }
  std::puts("all 11 criteria passed");
  return 0;
}
