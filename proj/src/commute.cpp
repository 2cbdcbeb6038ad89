#include "plmaps/commute.hpp"

#include <string>

#include "plmaps/errors.hpp"

namespace plm {

namespace {

void require_commutes(const UnimodalMap& g, const PLMap& psi) {
  if (!commutes(g, psi)) throw PreconditionError("psi does not commute with g");
}

void require_nonconstant(const PLMap& psi) {
  if (psi.is_constant()) throw PreconditionError("psi is constant");
}

}  // namespace

bool commutes(const UnimodalMap& g, const PLMap& psi) {
  return compose(psi, g.map()) == compose(g.map(), psi);
}

std::string to_string(const Triviality& t) {
  switch (t.kind) {
    case TrivialityKind::Constant:
      return "constant";
    case TrivialityKind::IterateOf:
      return "iterate(" + std::to_string(t.iterate) + ")";
    case TrivialityKind::NonTrivial:
      return "non-trivial";
  }
  return "unknown";
}

Triviality classify_triviality(const UnimodalMap& g, const PLMap& psi) {
  require_commutes(g, psi);
  if (psi.is_constant()) return {TrivialityKind::Constant, 0};
  const std::size_t n = laps(psi);
  if ((n & (n - 1)) != 0) return {TrivialityKind::NonTrivial, 0};
  unsigned m = 0;
  while ((std::size_t{1} << m) < n) ++m;
  // g^0 is the identity, which has one lap.
  const PLMap candidate = m == 0 ? PLMap::identity() : iterate(g.map(), m);
  if (candidate == psi) return {TrivialityKind::IterateOf, m};
  return {TrivialityKind::NonTrivial, 0};
}

bool BoundaryReport::all_passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

BoundaryReport boundary_checks(const UnimodalMap& g, const PLMap& psi) {
  require_nonconstant(psi);
  require_commutes(g, psi);
  const Rational& v = g.turning_point();
  BoundaryReport report;

  const Rational at0 = psi(0);
  report.checks.push_back({"origin-fixed", "psi(0) = 0", at0 == 0,
                           at0 == 0 ? std::nullopt : std::optional<Rational>(Rational(0))});
  const Rational at1 = psi(1);
  const bool binary = at1 == 0 || at1 == 1;
  report.checks.push_back({"endpoint-binary", "psi(1) in {0, 1}", binary,
                           binary ? std::nullopt : std::optional<Rational>(Rational(1))});

  const auto bounds = lap_boundaries(psi);
  report.lap_count = bounds.size() - 1;
  BoundaryCheck onto{"laps-surjective", "psi(I) = [0, 1] for every lap I", true, std::nullopt};
  for (std::size_t k = 0; k + 1 < bounds.size(); ++k) {
    const Rational a = psi(bounds[k]);
    const Rational b = psi(bounds[k + 1]);
    if (!((a == 0 && b == 1) || (a == 1 && b == 0))) {
      onto.passed = false;
      onto.witness = bounds[k];
      break;
    }
  }
  report.checks.push_back(onto);

  const std::size_t n = report.lap_count;
  const Rational at_v = psi(v);
  if (n % 2 == 1) {
    report.checks.push_back({"turning-point-odd", "laps odd: psi(v) = v", at_v == v,
                             at_v == v ? std::nullopt : std::optional<Rational>(v)});
  } else {
    const std::size_t s = n / 2;
    const bool mid = bounds[s] == v;
    report.checks.push_back({"turning-point-endpoint", "laps = 2s: lap endpoint s equals v", mid,
                             mid ? std::nullopt : std::optional<Rational>(bounds[s])});
    const Rational expected = s % 2 == 0 ? 0 : 1;
    report.checks.push_back(
        {"turning-point-even",
         s % 2 == 0 ? "laps = 2s, s even: psi(v) = 0" : "laps = 2s, s odd: psi(v) = 1",
         at_v == expected, at_v == expected ? std::nullopt : std::optional<Rational>(v)});
    if (s % 2 == 1)
      report.note = "lap count is 2 mod 4, so psi(v) = 1 rather than 0";
  }
  return report;
}

LapDecomposition lap_decomposition(const UnimodalMap& g, const PLMap& psi) {
  require_nonconstant(psi);
  require_commutes(g, psi);
  const Rational& v = g.turning_point();
  LapDecomposition d;
  d.endpoints = lap_boundaries(psi);
  d.lapcount = d.endpoints.size() - 1;
  for (std::size_t k = 0; k < d.lapcount; ++k) {
    const Rational& a = d.endpoints[k];
    const Rational& b = d.endpoints[k + 1];
    const Rational expect_a = k % 2 == 0 ? 0 : 1;
    if (psi(a) != expect_a || psi(b) != 1 - expect_a)
      throw StructureError("lap " + std::to_string(k) + " [" + a.str() + ", " + b.str() +
                           "] does not run between 0 and 1 in alternation");
    d.splits.push_back(inverse_branch(psi, a, b)(v));
  }
  return d;
}

PLMap halve(const UnimodalMap& g, const PLMap& psi) {
  require_nonconstant(psi);
  if (laps(psi) % 2 != 0)
    throw ParityError("psi has " + std::to_string(laps(psi)) + " laps; halving needs an even count");
  const LapDecomposition d = lap_decomposition(g, psi);
  const std::size_t n = d.lapcount;
  const std::size_t t = n / 2;

  // Each half-lap is carried by g onto a whole lap: I_{k,s} -> I_{2k+s} on the
  // increasing side, I_{k,s} -> I_{4t-1-2k-s} on the decreasing side.
  for (std::size_t k = 0; k < n; ++k) {
    for (unsigned s = 0; s < 2; ++s) {
      const std::size_t target = k < t ? 2 * k + s : 4 * t - 1 - 2 * k - s;
      const Rational ga = g(d.sub_lo(k, s));
      const Rational gb = g(d.sub_hi(k, s));
      const Rational lo = min(ga, gb);
      const Rational hi = max(ga, gb);
      if (lo != d.endpoints[target] || hi != d.endpoints[target + 1])
        throw StructureError("g(I_" + std::to_string(k) + "," + std::to_string(s) + ") = [" +
                             lo.str() + ", " + hi.str() + "] is not lap " + std::to_string(target));
    }
  }

  std::vector<Point> pts;
  for (std::size_t k = 0; k < n; ++k) {
    const bool via_left = k % 4 == 0 || k % 4 == 3;
    const PartialMap& branch = via_left ? g.left_inverse() : g.right_inverse();
    const PartialMap piece = compose(branch, restrict_to(psi, d.endpoints[k], d.endpoints[k + 1]));
    auto piece_pts = piece.points();
    if (!pts.empty()) {
      if (pts.back() != piece_pts.front())
        throw StructureError("halved map is discontinuous at " + d.endpoints[k].str());
      pts.pop_back();
    }
    pts.insert(pts.end(), piece_pts.begin(), piece_pts.end());
  }
  PLMap result = PLMap::from_points(std::move(pts));
  if (compose(g.map(), result) != psi)
    throw StructureError("g o halve(psi) differs from psi");
  return result;
}

PLMap reduce_fully(const UnimodalMap& g, const PLMap& psi) {
  require_nonconstant(psi);
  PLMap cur = psi;
  while (laps(cur) % 2 == 0) cur = halve(g, cur);
  return cur;
}

Rational predicted_first_kink(const UnimodalMap& g, const PLMap& psi) {
  const Rational gs = slope_at_zero(g.map());
  const Rational ps = slope_at_zero(psi);
  if (!(ps > gs))
    throw PreconditionError("needs psi'(0) > g'(0); got psi'(0) = " + ps.str() +
                            ", g'(0) = " + gs.str());
  return first_kink(g.map()) * gs / ps;
}

}  // namespace plm
