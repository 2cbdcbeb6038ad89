#include "plmaps/conjugacy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "plmaps/errors.hpp"

namespace plm {

namespace {

bool is_power_of_two(unsigned t) { return t != 0 && (t & (t - 1)) == 0; }

unsigned log2_exact(unsigned t) {
  unsigned m = 0;
  while ((1u << m) < t) ++m;
  return m;
}

// j with r = 2^j, if r is a positive integral power of two.
std::optional<unsigned> power_of_two_exponent(const Rational& r) {
  if (!r.is_integer() || r.sign() <= 0) return std::nullopt;
  const mpz_class n = r.numerator();
  if (mpz_popcount(n.get_mpz_t()) != 1) return std::nullopt;
  return static_cast<unsigned>(mpz_scan1(n.get_mpz_t(), 0));
}

PLMap interpolant_at(const std::vector<Rational>& grid, unsigned depth) {
  const Rational step = Rational(mpz_class(1), mpz_class(1) << (depth - 1));
  std::vector<Point> pts;
  pts.reserve(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k)
    pts.push_back({step * Rational(static_cast<std::int64_t>(k)), grid[k]});
  return PLMap::from_points(std::move(pts));
}

const long double kLn2 = std::log(2.0L);

}  // namespace

bool is_increasing_homeomorphism(const PLMap& h) {
  const auto pts = h.points();
  if (pts.front().y != 0 || pts.back().y != 1) return false;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i)
    if (!(pts[i].y < pts[i + 1].y)) return false;
  return true;
}

void require_homeomorphism(const PLMap& h) {
  if (!is_increasing_homeomorphism(h))
    throw ValidationError("h must satisfy h(0) = 0, h(1) = 1 and be strictly increasing");
}

UnimodalMap conjugate_map(const UnimodalMap& g, const PLMap& h) {
  require_homeomorphism(h);
  const PLMap h_inv = PLMap::from_partial(inverse(h.as_partial()));
  return UnimodalMap::make(compose(h, compose(g.map(), h_inv)), h(g.turning_point()));
}

PLMap build_commutator(const UnimodalMap& g, const PLMap& h, unsigned t) {
  if (t == 0) throw PreconditionError("commutator index t must be >= 1");
  if (conjugate_map(tent(), h).map() != g.map())
    throw PreconditionError("g is not h o tent o h^{-1}");
  const PLMap h_inv = PLMap::from_partial(inverse(h.as_partial()));
  return compose(h, compose(xi(t), h_inv));
}

ConjugacyFit fit_conjugacy(const UnimodalMap& g, unsigned depth) {
  if (depth < 2) throw PreconditionError("fit depth must be >= 2");
  const auto grid = mu_grid(g, depth).points;
  std::vector<Rational> coarse;
  coarse.reserve(grid.size() / 2 + 1);
  for (std::size_t k = 0; k < grid.size(); k += 2) coarse.push_back(grid[k]);

  ConjugacyFit fit;
  fit.depth = depth;
  fit.interpolant = interpolant_at(grid, depth);
  fit.stabilized = interpolant_at(coarse, depth - 1) == fit.interpolant;
  const long double alpha = slope_at_zero(g.map()).log() / kLn2;
  fit.alpha = static_cast<double>(alpha);
  if (fit.stabilized) {
    const long double x1 = std::ldexp(1.0L, -static_cast<int>(depth - 1));
    fit.omega = static_cast<double>(std::exp(grid[1].log() - alpha * std::log(x1)));
  }
  return fit;
}

double slope_law_residual(const UnimodalMap& g, const PLMap& psi, unsigned t) {
  if (t == 0) throw PreconditionError("t must be >= 1");
  if (psi.is_constant() || laps(psi) != t)
    throw PreconditionError("psi must be a commutator with " + std::to_string(t) + " laps");
  const Rational gs = slope_at_zero(g.map());
  const Rational ps = slope_at_zero(psi);
  if (gs.sign() <= 0 || ps.sign() <= 0) throw PreconditionError("slopes at 0 must be positive");
  if (is_power_of_two(t) && ps == pow(gs, log2_exact(t))) return 0.0;
  if (gs == 2 && ps == Rational(static_cast<std::int64_t>(t))) return 0.0;
  const long double log2t = std::log2(static_cast<long double>(t));
  return static_cast<double>(std::fabs(ps.log() - log2t * gs.log()));
}

PowerLawReport power_law_check(const UnimodalMap& g, unsigned depth, double tolerance) {
  if (depth < 3) throw PreconditionError("power-law check needs depth >= 3");
  if (!(tolerance > 0)) throw PreconditionError("tolerance must be positive");
  PowerLawReport r;
  r.depth = depth;
  r.tolerance = tolerance;
  const ConjugacyFit fit = fit_conjugacy(g, depth);
  r.alpha = fit.alpha;
  if (!fit.stabilized) {
    r.reason = "conjugacy fit did not stabilize by depth " + std::to_string(depth);
    return r;
  }
  const auto grid = mu_grid(g, depth).points;
  const Rational bound = first_kink(g.map()) / 2;
  const Rational gs = slope_at_zero(g.map());
  const auto exact_alpha = power_of_two_exponent(gs);
  const Rational step = Rational(mpz_class(1), mpz_class(1) << (depth - 1));

  std::vector<long double> omegas;
  for (std::size_t k = 1; k < grid.size() && grid[k] <= bound; ++k) {
    const Rational x = step * Rational(static_cast<std::int64_t>(k));
    if (exact_alpha) {
      omegas.push_back(static_cast<long double>((grid[k] / pow(x, *exact_alpha)).to_double()));
    } else {
      omegas.push_back(std::exp(grid[k].log() - static_cast<long double>(fit.alpha) * x.log()));
    }
  }
  if (omegas.empty())
    throw Error("no grid point of depth " + std::to_string(depth) + " lies below first_kink(g)/2");

  const auto [lo, hi] = std::minmax_element(omegas.begin(), omegas.end());
  long double sum = 0;
  for (long double w : omegas) sum += w;
  r.applicable = true;
  r.window_points = omegas.size();
  r.omega = static_cast<double>(sum / static_cast<long double>(omegas.size()));
  r.omega_min = static_cast<double>(*lo);
  r.omega_max = static_cast<double>(*hi);
  const long double scale = std::max(std::fabs(*lo), std::fabs(*hi));
  r.max_omega_spread = scale == 0 ? 0.0 : static_cast<double>((*hi - *lo) / scale);
  r.within_tolerance = r.max_omega_spread <= tolerance;
  return r;
}

ScalingLawReport scaling_law_check(const UnimodalMap& g, const PLMap& psi, unsigned t, unsigned n) {
  if (t == 0) throw PreconditionError("t must be >= 1");
  const auto mu = mu_grid(g, n).points;
  const std::size_t last = mu.size() - 1;
  const Rational a = first_kink(g.map());
  const Rational gs = slope_at_zero(g.map());
  const Rational ps = slope_at_zero(psi);
  // A linear psi (t = 1) is linear on the whole window.
  const Rational p = psi.piece_count() > 1 ? first_kink(psi) : Rational(1);

  ScalingLawReport r;
  for (std::size_t k = 0; 2 * k <= last; ++k) {
    if (!(mu[k] < a)) break;
    ++r.doubling_checked;
    if (mu[2 * k] != gs * mu[k]) ++r.doubling_failed;
  }
  for (std::size_t k = 0; t * k <= last; ++k) {
    ++r.tscale_checked;
    if (psi(mu[k]) != mu[t * k]) ++r.tscale_failed;
    if (mu[k] < p && mu[t * k] != ps * mu[k]) ++r.tscale_failed;
  }
  return r;
}

std::vector<Rational> dyadic_density_demo(unsigned k, unsigned n, unsigned t, unsigned pmax) {
  if (is_power_of_two(t)) throw PreconditionError("t = " + std::to_string(t) + " is a power of two");
  if (k == 0 || n == 0 || pmax == 0) throw PreconditionError("k, n and pmax must be >= 1");
  const Rational lo(mpz_class(1), mpz_class(1) << n);
  const Rational hi = lo * 2;

  std::vector<Rational> pts;
  std::vector<Rational> gaps;
  Rational power(static_cast<std::int64_t>(k));
  for (unsigned p = 1; p <= pmax; ++p) {
    power *= Rational(static_cast<std::int64_t>(t));
    Rational x = power;
    while (x >= hi) x /= 2;
    while (x < lo) x *= 2;
    pts.insert(std::upper_bound(pts.begin(), pts.end(), x), x);
    Rational gap = (hi - pts.back()) + (pts.front() - lo);
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) gap = max(gap, pts[i + 1] - pts[i]);
    gaps.push_back(gap);
  }
  return gaps;
}

}  // namespace plm
