#include "plmaps/plmap.hpp"

#include <algorithm>
#include <string>

#include "plmaps/errors.hpp"

namespace plm {

namespace {

bool collinear(const Point& a, const Point& b, const Point& c) {
  return (b.y - a.y) * (c.x - b.x) == (c.y - b.y) * (b.x - a.x);
}

void check_budget(std::size_t n) {
  if (n > kMaxBreakpoints)
    throw BudgetError("map would need " + std::to_string(n) + " breakpoints (cap " +
                      std::to_string(kMaxBreakpoints) + ")");
}

void check_abscissae(const std::vector<Point>& pts) {
  if (pts.size() < 2) throw ValidationError("a map needs at least two breakpoints");
  for (std::size_t i = 1; i < pts.size(); ++i)
    if (!(pts[i - 1].x < pts[i].x))
      throw ValidationError("breakpoint " + std::to_string(i) +
                            ": abscissae must be strictly increasing (" + pts[i - 1].x.str() +
                            " then " + pts[i].x.str() + ")");
}

std::vector<Point> drop_collinear(const std::vector<Point>& pts) {
  std::vector<Point> out;
  out.reserve(pts.size());
  for (const Point& p : pts) {
    while (out.size() >= 2 && collinear(out[out.size() - 2], out.back(), p)) out.pop_back();
    out.push_back(p);
  }
  return out;
}

// Index of the piece [pts[i], pts[i+1]] containing x; x must be in range.
std::size_t piece_index(std::span<const Point> pts, const Rational& x) {
  auto it = std::upper_bound(pts.begin(), pts.end(), x,
                             [](const Rational& v, const Point& p) { return v < p.x; });
  auto i = static_cast<std::size_t>(it - pts.begin());
  if (i == 0) return 0;
  return std::min(i - 1, pts.size() - 2);
}

Rational interpolate(const Point& a, const Point& b, const Rational& x) {
  return a.y + (b.y - a.y) * (x - a.x) / (b.x - a.x);
}

void validate_unit_square(std::span<const Point> pts) {
  if (pts.front().x != 0 || pts.back().x != 1)
    throw ValidationError("a self-map of [0,1] must have first x = 0 and last x = 1");
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (pts[i].y < 0 || pts[i].y > 1)
      throw ValidationError("breakpoint " + std::to_string(i) + ": value " + pts[i].y.str() +
                            " outside [0,1]");
}

}  // namespace

PartialMap PartialMap::from_points(std::vector<Point> pts) {
  check_abscissae(pts);
  check_budget(pts.size());
  return PartialMap(drop_collinear(pts));
}

Rational PartialMap::eval(const Rational& x) const {
  if (x < lo() || x > hi())
    throw DomainError("argument " + x.str() + " outside [" + lo().str() + ", " + hi().str() + "]");
  const std::size_t i = piece_index(pts_, x);
  if (x == pts_[i].x) return pts_[i].y;
  if (x == pts_[i + 1].x) return pts_[i + 1].y;
  return interpolate(pts_[i], pts_[i + 1], x);
}

Rational PartialMap::min_value() const {
  return std::min_element(pts_.begin(), pts_.end(), [](auto& a, auto& b) { return a.y < b.y; })->y;
}

Rational PartialMap::max_value() const {
  return std::max_element(pts_.begin(), pts_.end(), [](auto& a, auto& b) { return a.y < b.y; })->y;
}

bool PartialMap::is_identity() const {
  return pts_.size() == 2 && pts_[0].x == pts_[0].y && pts_[1].x == pts_[1].y;
}

PartialMap compose(const PartialMap& outer, const PartialMap& inner) {
  if (inner.min_value() < outer.lo() || inner.max_value() > outer.hi())
    throw DomainError("inner range [" + inner.min_value().str() + ", " + inner.max_value().str() +
                      "] not inside outer domain [" + outer.lo().str() + ", " + outer.hi().str() +
                      "]");
  const auto in = inner.points();
  const auto out = outer.points();
  std::vector<Point> pts;
  pts.reserve(in.size() + out.size());

  auto push = [&](Point p) {
    pts.push_back(std::move(p));
    check_budget(pts.size());
  };

  for (std::size_t i = 0; i + 1 < in.size(); ++i) {
    const Point& a = in[i];
    const Point& b = in[i + 1];
    push({a.x, outer.eval(a.y)});
    if (a.y == b.y) continue;
    // Outer breakpoints strictly between a.y and b.y, in the direction of travel.
    const Rational& ylo = a.y < b.y ? a.y : b.y;
    const Rational& yhi = a.y < b.y ? b.y : a.y;
    auto first = std::upper_bound(out.begin(), out.end(), ylo,
                                  [](const Rational& v, const Point& p) { return v < p.x; });
    auto last = std::lower_bound(out.begin(), out.end(), yhi,
                                 [](const Point& p, const Rational& v) { return p.x < v; });
    if (first >= last) continue;
    const Rational dxdy = (b.x - a.x) / (b.y - a.y);
    auto emit = [&](const Point& o) { push({a.x + (o.x - a.y) * dxdy, o.y}); };
    if (a.y < b.y) {
      for (auto it = first; it != last; ++it) emit(*it);
    } else {
      for (auto it = last; it != first;) emit(*--it);
    }
  }
  push({in.back().x, outer.eval(in.back().y)});
  return PartialMap::from_points(std::move(pts));
}

PLMap PLMap::from_points(std::vector<Point> pts) {
  return from_partial(PartialMap::from_points(std::move(pts)));
}

PLMap PLMap::from_canonical_points(std::vector<Point> pts) {
  check_abscissae(pts);
  for (std::size_t i = 1; i + 1 < pts.size(); ++i)
    if (collinear(pts[i - 1], pts[i], pts[i + 1]))
      throw ValidationError("breakpoint " + std::to_string(i) +
                            " is collinear with its neighbours (non-canonical)");
  return from_points(std::move(pts));
}

PLMap PLMap::from_partial(PartialMap f) {
  validate_unit_square(f.points());
  return PLMap(std::move(f));
}

PLMap PLMap::identity() { return from_points({{0, 0}, {1, 1}}); }

PLMap PLMap::constant(const Rational& c) { return from_points({{0, c}, {1, c}}); }

Rational eval(const PLMap& m, const Rational& x) { return m.eval(x); }

PLMap compose(const PLMap& outer, const PLMap& inner) {
  return PLMap::from_partial(compose(outer.as_partial(), inner.as_partial()));
}

PLMap iterate(const PLMap& m, unsigned n) {
  if (n == 0) throw PreconditionError("iterate needs n >= 1");
  PLMap acc = m;
  for (unsigned i = 1; i < n; ++i) acc = compose(m, acc);
  return acc;
}

bool equals(const PLMap& a, const PLMap& b) { return a == b; }

std::vector<Rational> slopes(const PartialMap& f) {
  const auto pts = f.points();
  std::vector<Rational> s;
  s.reserve(pts.size() - 1);
  for (std::size_t i = 0; i + 1 < pts.size(); ++i)
    s.push_back((pts[i + 1].y - pts[i].y) / (pts[i + 1].x - pts[i].x));
  return s;
}

std::vector<Rational> lap_boundaries(const PLMap& m) {
  const auto pts = m.points();
  std::vector<Rational> bounds{pts.front().x};
  int prev = 0;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const int dir = (pts[i + 1].y - pts[i].y).sign();
    if (dir == 0)
      throw FlatSegmentError("constant piece on [" + pts[i].x.str() + ", " + pts[i + 1].x.str() +
                             "]; lap structure is ambiguous");
    if (prev != 0 && dir != prev) bounds.push_back(pts[i].x);
    prev = dir;
  }
  bounds.push_back(pts.back().x);
  return bounds;
}

std::size_t laps(const PLMap& m) { return lap_boundaries(m).size() - 1; }

std::vector<Rational> preimage(const PLMap& m, const Rational& y) {
  if (y < 0 || y > 1) throw DomainError("level " + y.str() + " outside [0,1]");
  const auto pts = m.points();
  std::vector<Rational> xs;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const Point& a = pts[i];
    const Point& b = pts[i + 1];
    if (a.y == y && b.y == y)
      throw FlatSegmentError("map is constant at level " + y.str() + " on [" + a.x.str() + ", " +
                             b.x.str() + "]");
    if (a.y == y) {
      if (xs.empty() || xs.back() != a.x) xs.push_back(a.x);
    } else if ((a.y < y && y < b.y) || (b.y < y && y < a.y)) {
      xs.push_back(a.x + (y - a.y) * (b.x - a.x) / (b.y - a.y));
    }
  }
  if (pts.back().y == y) xs.push_back(pts.back().x);
  return xs;
}

PartialMap restrict_to(const PLMap& m, const Rational& lo, const Rational& hi) {
  if (!(0 <= lo && lo < hi && hi <= 1))
    throw DomainError("restriction interval [" + lo.str() + ", " + hi.str() + "] invalid");
  std::vector<Point> pts{{lo, m(lo)}};
  for (const Point& p : m.points())
    if (lo < p.x && p.x < hi) pts.push_back(p);
  pts.push_back({hi, m(hi)});
  return PartialMap::from_points(std::move(pts));
}

PartialMap inverse(const PartialMap& f) {
  const auto pts = f.points();
  int dir = 0;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const int d = (pts[i + 1].y - pts[i].y).sign();
    if (d == 0 || (dir != 0 && d != dir))
      throw MonotonicityError("map is not strictly monotone on [" + f.lo().str() + ", " +
                              f.hi().str() + "]");
    dir = d;
  }
  std::vector<Point> inv;
  inv.reserve(pts.size());
  for (const Point& p : pts) inv.push_back({p.y, p.x});
  if (dir < 0) std::reverse(inv.begin(), inv.end());
  return PartialMap::from_points(std::move(inv));
}

PartialMap inverse_branch(const PLMap& m, const Rational& lo, const Rational& hi) {
  return inverse(restrict_to(m, lo, hi));
}

Rational slope_at_zero(const PLMap& m) {
  const auto pts = m.points();
  return (pts[1].y - pts[0].y) / (pts[1].x - pts[0].x);
}

Rational first_kink(const PLMap& m) {
  const auto pts = m.points();
  if (pts.size() < 3) throw PreconditionError("map is linear; it has no kink");
  return pts[1].x;
}

}  // namespace plm
