#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "plmaps/plmap.hpp"
#include "plmaps/unimodal.hpp"

namespace plm {

// Throws ValidationError unless h(0) = 0, h(1) = 1 and h is strictly increasing.
void require_homeomorphism(const PLMap& h);
bool is_increasing_homeomorphism(const PLMap& h);

// h o g o h^{-1}, with turning point h(v).
UnimodalMap conjugate_map(const UnimodalMap& g, const PLMap& h);

// h o xi(t) o h^{-1}, the t-lap commutator of g = h o tent o h^{-1}.
// Throws PreconditionError if g is not that conjugate.
PLMap build_commutator(const UnimodalMap& g, const PLMap& h, unsigned t);

struct ConjugacyFit {
  unsigned depth = 0;
  // PL interpolant through (k / 2^{depth-1}, mu_{depth,k}(g)).
  PLMap interpolant = PLMap::identity();
  // Canonical interpolants at depth-1 and depth coincide.
  bool stabilized = false;
  // interpolant(x) / x^alpha at the first positive grid point; set only
  // when stabilized.
  std::optional<double> omega;
  double alpha = 0.0;  // log2 g'(0)
};

// Throws PreconditionError for depth < 2.
ConjugacyFit fit_conjugacy(const UnimodalMap& g, unsigned depth);

// |ln psi'(0) - log2(t) ln g'(0)|. Exactly 0 when t is a power of two or
// g'(0) = 2 and the identity holds over the rationals. Throws
// PreconditionError if psi does not have t laps or a slope at 0 is not
// positive.
double slope_law_residual(const UnimodalMap& g, const PLMap& psi, unsigned t);

struct PowerLawReport {
  bool applicable = false;
  std::string reason;  // why not applicable
  unsigned depth = 0;
  double alpha = 0.0;
  std::size_t window_points = 0;
  double omega = 0.0;  // mean of omega_k
  double omega_min = 0.0;
  double omega_max = 0.0;
  double max_omega_spread = 0.0;  // (max - min) / max |omega_k|
  double tolerance = 0.0;
  bool within_tolerance = false;
};

// omega_k = h(x_k) / x_k^alpha over tent-grid points x_k > 0 whose image
// h(x_k) = mu_{depth,k}(g) is at most first_kink(g) / 2, with h the fitted
// interpolant. Not applicable when the fit has not stabilized. Throws
// PreconditionError for depth < 3 and Error when the window is empty.
PowerLawReport power_law_check(const UnimodalMap& g, unsigned depth, double tolerance = 1e-9);

struct ScalingLawReport {
  std::size_t doubling_checked = 0;
  std::size_t doubling_failed = 0;
  std::size_t tscale_checked = 0;
  std::size_t tscale_failed = 0;
  [[nodiscard]] bool passed() const { return doubling_failed == 0 && tscale_failed == 0; }
};

// Exact pointwise checks at depth n:
//   mu_{n,2k}(g) = g'(0)   mu_{n,k}(g)  whenever mu_{n,k}(g) < first_kink(g),
//   mu_{n,tk}(g) = psi'(0) mu_{n,k}(g)  whenever mu_{n,k}(g) < first_kink(psi),
//   psi(mu_{n,k}(g)) = mu_{n,tk}(g)     for tk <= 2^{n-1} (counted with t-scaling).
ScalingLawReport scaling_law_check(const UnimodalMap& g, const PLMap& psi, unsigned t, unsigned n);

// Points k t^p / 2^{n+m_p} folded into the window [1/2^n, 1/2^{n-1}) for
// p = 1..P. Entry P-1 of the result is the largest gap between them with the
// window read as a circle, so a single point leaves a gap of the full window.
// Throws PreconditionError when t is a power of two.
std::vector<Rational> dyadic_density_demo(unsigned k, unsigned n, unsigned t, unsigned pmax);

}  // namespace plm
