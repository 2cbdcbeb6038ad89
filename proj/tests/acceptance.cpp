// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails. All checks are exact unless a time limit is stated.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "plmaps/commute.hpp"
#include "plmaps/conjugacy.hpp"
#include "plmaps/unimodal.hpp"
#include "support.hpp"

using namespace plm;
using plm::testing::R;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;
  void fail(std::string why) {
    if (passed) detail = std::move(why);
    passed = false;
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Fixture {
  UnimodalMap g;
  PLMap h;
  unsigned t;
  PLMap psi;
};

// Commutators of the tent map and of ten random PL conjugates of it.
std::vector<Fixture> commutator_fixtures() {
  std::vector<Fixture> out;
  for (unsigned t = 1; t <= 12; ++t) out.push_back({tent(), PLMap::identity(), t, xi(t)});
  plm::testing::Rng rng(20240601);
  for (int i = 0; i < 10; ++i) {
    const PLMap h = rng.homeomorphism(6, 24);
    const UnimodalMap g = conjugate_map(tent(), h);
    for (unsigned t = 1; t <= 8; ++t) out.push_back({g, h, t, build_commutator(g, h, t)});
  }
  return out;
}

const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> f = commutator_fixtures();
  return f;
}

Outcome xi_commutation() {
  Outcome o;
  for (unsigned t = 1; t <= 12; ++t)
    if (!commutes(tent(), xi(t))) o.fail("xi(" + std::to_string(t) + ") does not commute");
  return o;
}

Outcome xi_semigroup() {
  Outcome o;
  for (unsigned s = 1; s <= 6; ++s)
    for (unsigned t = 1; t <= 6; ++t)
      if (compose(xi(s), xi(t)) != xi(s * t))
        o.fail("xi(" + std::to_string(s) + ") o xi(" + std::to_string(t) + ")");
  return o;
}

Outcome grid_formula() {
  Outcome o;
  const auto start = Clock::now();
  for (unsigned n = 1; n <= 12; ++n)
    if (mu_grid(tent(), n).points != plm::testing::dyadic_grid(n)) o.fail("depth " + std::to_string(n));
  const double secs = seconds_since(start);
  if (secs >= 5.0) o.fail("took " + std::to_string(secs) + " s");
  o.detail = o.passed ? "n <= 12 in " + std::to_string(secs) + " s" : o.detail;
  return o;
}

Outcome grid_transport() {
  Outcome o;
  for (unsigned n = 1; n <= 10; ++n) {
    const auto mu = mu_grid(tent(), n).points;
    for (unsigned t = 1; t <= 5; ++t) {
      const PLMap x = xi(t);
      for (std::size_t k = 0; k * t < mu.size(); ++k)
        if (x(mu[k]) != mu[k * t])
          o.fail("t=" + std::to_string(t) + " n=" + std::to_string(n) + " k=" + std::to_string(k));
    }
  }
  return o;
}

Outcome mu_identities() {
  Outcome o;
  std::vector<UnimodalMap> maps{tent()};
  plm::testing::Rng rng(777);
  for (int i = 0; i < 10; ++i) maps.push_back(conjugate_map(tent(), rng.homeomorphism(6, 24)));
  for (std::size_t i = 0; i < maps.size(); ++i)
    for (unsigned n = 2; n <= 10; ++n)
      if (!check_mu_identities(maps[i], n)) o.fail("map " + std::to_string(i) + " n=" + std::to_string(n));
  o.detail = o.passed ? "tent + 10 conjugates, 2 <= n <= 10" : o.detail;
  return o;
}

Outcome conjugacy_transport() {
  Outcome o;
  plm::testing::Rng rng(4242);
  for (int i = 0; i < 10; ++i) {
    const PLMap h = rng.homeomorphism(6, 30);
    const UnimodalMap g = conjugate_map(tent(), h);
    for (unsigned depth = 2; depth <= 9; ++depth) {
      const ConjugacyFit fit = fit_conjugacy(g, depth);
      for (const auto& x : plm::testing::dyadic_grid(depth))
        if (fit.interpolant(x) != h(x)) o.fail("random h " + std::to_string(i) + " at " + x.str());
    }
  }
  for (int i = 0; i < 10; ++i) {
    const unsigned exp = 1 + static_cast<unsigned>(i % 7);
    const PLMap h = rng.dyadic_homeomorphism(6, exp);
    const UnimodalMap g = conjugate_map(tent(), h);
    // First depth whose tent grid contains every kink of h.
    unsigned kink_depth = 2;
    for (const auto& p : h.points()) {
      unsigned e = 0;
      while ((mpz_class(1) << e) < p.x.denominator()) ++e;
      kink_depth = std::max(kink_depth, e + 1);
    }
    for (unsigned depth = 2; depth <= kink_depth + 1; ++depth) {
      const ConjugacyFit fit = fit_conjugacy(g, depth);
      if (depth < kink_depth && fit.interpolant == h) o.fail("fit matched h before its kinks appeared");
      if (depth >= kink_depth && fit.interpolant != h) o.fail("dyadic h " + std::to_string(i) + " not recovered");
      if (depth == kink_depth + 1 && !fit.stabilized) o.fail("dyadic h " + std::to_string(i) + " not stabilized");
    }
  }
  return o;
}

Outcome halving() {
  Outcome o;
  for (unsigned m = 1; m <= 6; ++m)
    if (halve(tent(), xi(2 * m)) != xi(m)) o.fail("halve(xi(" + std::to_string(2 * m) + "))");
  std::size_t count = 0;
  for (const auto& f : fixtures()) {
    if (f.t % 2 != 0) continue;
    const PLMap half = halve(f.g, f.psi);
    if (compose(f.g.map(), half) != f.psi) o.fail("g o halve(psi) != psi");
    if (!commutes(f.g, half)) o.fail("halved map does not commute");
    if (laps(half) != f.t / 2) o.fail("halved lap count");
    ++count;
  }
  o.detail = o.passed ? std::to_string(count) + " even-lap fixtures" : o.detail;
  return o;
}

Outcome boundary_suite() {
  Outcome o;
  for (const auto& f : fixtures()) {
    const BoundaryReport r = boundary_checks(f.g, f.psi);
    for (const auto& c : r.checks)
      if (!c.passed) o.fail(c.label + " failed for t=" + std::to_string(f.t));
  }
  for (unsigned t = 1; t <= 12; ++t) {
    const Rational at_v = xi(t)(R(1, 2));
    const Rational expected = t % 2 == 1 ? R(1, 2) : Rational((t / 2) % 2 == 0 ? 0 : 1);
    if (at_v != expected) o.fail("psi(v) table at t=" + std::to_string(t));
  }
  o.detail = o.passed ? std::to_string(fixtures().size()) + " fixtures" : o.detail;
  return o;
}

Outcome first_kink_law() {
  Outcome o;
  for (unsigned t : {3u, 5u, 7u})
    if (predicted_first_kink(tent(), xi(t)) != first_kink(xi(t))) o.fail("xi(" + std::to_string(t) + ")");
  std::size_t conjugated = 0;
  for (const auto& f : fixtures()) {
    if (f.h == PLMap::identity()) continue;
    if (!(slope_at_zero(f.psi) > slope_at_zero(f.g.map()))) continue;
    if (predicted_first_kink(f.g, f.psi) != first_kink(f.psi)) o.fail("conjugated fixture t=" + std::to_string(f.t));
    ++conjugated;
  }
  if (conjugated < 10) o.fail("only " + std::to_string(conjugated) + " conjugated fixtures");
  o.detail = o.passed ? std::to_string(conjugated) + " conjugated fixtures" : o.detail;
  return o;
}

Outcome slope_law() {
  Outcome o;
  for (const auto& f : fixtures()) {
    if (slope_law_residual(f.g, f.psi, f.t) != 0.0) o.fail("nonzero residual at t=" + std::to_string(f.t));
    if (!scaling_law_check(f.g, f.psi, f.t, 9).passed()) o.fail("scaling law at t=" + std::to_string(f.t));
  }
  return o;
}

// Largest sub-interval J with g(J) inside J and 0 outside J gives a lower
// bound for every gap. The image of J is bracketed by g at J's endpoints and
// the breakpoints of g inside J.
Rational trapping_bound(const UnimodalMap& g, const Rational& lo, const Rational& hi) {
  Rational img_lo = g(lo), img_hi = g(lo);
  std::vector<Rational> probes{hi};
  for (const auto& p : g.map().points())
    if (lo < p.x && p.x < hi) probes.push_back(p.x);
  for (const auto& x : probes) {
    img_lo = min(img_lo, g(x));
    img_hi = max(img_hi, g(x));
  }
  if (lo <= 0 || img_lo < lo || img_hi > hi) return 0;
  return hi - lo;
}

Outcome density_contrast() {
  Outcome o;
  const auto gaps = density_report(tent(), 12);
  for (unsigned n = 1; n <= 12; ++n)
    if (gaps[n - 1] != Rational(mpz_class(1), mpz_class(1) << (n - 1))) o.fail("tent gap at n=" + std::to_string(n));
  const UnimodalMap g = attracting_fixed_point_example();
  const Rational bound = trapping_bound(g, R(1, 8), R(5, 8));
  if (bound != R(1, 2)) o.fail("trapping interval oracle gave " + bound.str());
  const auto trapped = density_report(g, 12);
  for (std::size_t n = 0; n < trapped.size(); ++n)
    if (trapped[n] < bound) o.fail("attracting gap below bound at n=" + std::to_string(n + 1));
  o.detail = o.passed ? "attracting example gap >= " + bound.str() + ", depth 12 gap " + trapped.back().str() : o.detail;
  return o;
}

Outcome composition_oracle() {
  Outcome o;
  plm::testing::Rng rng(1000);
  for (int i = 0; i < 1000; ++i) {
    const PLMap a = rng.plmap(), b = rng.plmap();
    const Rational x = rng.unit(10007);
    if (compose(a, b)(x) != a(b(x))) o.fail("triple " + std::to_string(i));
  }
  return o;
}

Outcome dyadic_density() {
  Outcome o;
  const auto start = Clock::now();
  const auto gaps = dyadic_density_demo(1, 1, 3, 200);
  const double secs = seconds_since(start);
  const Rational window = R(1, 2);
  for (std::size_t i = 1; i < gaps.size(); ++i)
    if (gaps[i] > gaps[i - 1]) o.fail("gap increased at p=" + std::to_string(i + 1));
  if (!(gaps.back() < window / 50)) o.fail("final gap " + std::to_string((gaps.back() / window).to_double()) + " of window");
  if (secs >= 1.0) o.fail("took " + std::to_string(secs) + " s");
  o.detail = o.passed ? "final gap " + std::to_string((gaps.back() / window).to_double()) + " of window in " +
                            std::to_string(secs) + " s"
                      : o.detail;
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"01 xi-family commutes with tent, t <= 12", xi_commutation},
      {"02 xi semigroup, s,t <= 6", xi_semigroup},
      {"03 tent grid is k/2^(n-1), n <= 12, < 5 s", grid_formula},
      {"04 xi_t transports tent grid, t <= 5, n <= 10", grid_transport},
      {"05 mu identities, tent + 10 conjugates, n <= 10", mu_identities},
      {"06 fitted conjugacy reproduces h on dyadics and stabilizes", conjugacy_transport},
      {"07 halving", halving},
      {"08 boundary lemma suite and psi(v) table", boundary_suite},
      {"09 first-kink law", first_kink_law},
      {"10 slope law and scaling laws", slope_law},
      {"11 density contrast", density_contrast},
      {"12 composition oracle, 1000 triples", composition_oracle},
      {"13 dyadic density demo (1,1,3,200), < 1 s", dyadic_density},
  };
  int failures = 0;
  for (const auto& [name, fn] : criteria) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::printf("%s  %s%s%s\n", o.passed ? "PASS" : "FAIL", name.c_str(), o.detail.empty() ? "" : "  -- ",
                o.detail.c_str());
    std::fflush(stdout);
    if (!o.passed) ++failures;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
