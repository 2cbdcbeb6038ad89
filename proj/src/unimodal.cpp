#include "plmaps/unimodal.hpp"

#include <algorithm>
#include <string>
#include <thread>

#include "plmaps/errors.hpp"

namespace plm {

UnimodalMap UnimodalMap::make(PLMap map, std::optional<Rational> v) {
  const auto pts = map.points();
  if (pts.front().y != 0 || pts.back().y != 0)
    throw ValidationError("unimodal map must satisfy g(0) = g(1) = 0");
  if (!v) {
    std::vector<Rational> peaks;
    for (const Point& p : pts)
      if (p.y == 1) peaks.push_back(p.x);
    if (peaks.size() != 1)
      throw ValidationError("unimodal map must attain 1 at exactly one breakpoint");
    v = peaks.front();
  }
  if (!(0 < *v && *v < 1)) throw ValidationError("turning point must lie in (0,1)");
  if (map(*v) != 1) throw ValidationError("g(v) must equal 1 at v = " + v->str());
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const int dir = (pts[i + 1].y - pts[i].y).sign();
    const bool left = pts[i + 1].x <= *v;
    if ((left && dir <= 0) || (!left && dir >= 0))
      throw ValidationError("piece [" + pts[i].x.str() + ", " + pts[i + 1].x.str() +
                            "] breaks strict " + (left ? "increase" : "decrease") +
                            " around v = " + v->str());
  }
  // A strict peak at v is always a kink, so v is already a breakpoint here.
  auto left_inv = inverse_branch(map, 0, *v);
  auto right_inv = inverse_branch(map, *v, 1);
  return UnimodalMap(std::move(map), std::move(*v), std::move(left_inv), std::move(right_inv));
}

UnimodalMap tent() { return UnimodalMap::make(PLMap::from_points({{0, 0}, {Rational(1, 2), 1}, {1, 0}})); }

PLMap xi(unsigned t) {
  if (t == 0) throw PreconditionError("xi needs t >= 1");
  std::vector<Point> pts;
  pts.reserve(t + 1);
  for (unsigned k = 0; k <= t; ++k)
    pts.push_back({Rational(k, t), Rational(k % 2)});
  return PLMap::from_points(std::move(pts));
}

UnimodalMap attracting_fixed_point_example() {
  return UnimodalMap::make(PLMap::from_points({{0, 0},
                                               {Rational(1, 8), Rational(3, 8)},
                                               {Rational(5, 8), Rational(1, 2)},
                                               {Rational(3, 4), 1},
                                               {1, 0}}));
}

namespace {

template <class Fn>
void parallel_for(std::size_t n, unsigned threads, Fn&& fn) {
  if (threads <= 1 || n < 4096) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::jthread> workers;
  const std::size_t chunk = (n + threads - 1) / threads;
  for (std::size_t begin = 0; begin < n; begin += chunk) {
    const std::size_t end = std::min(n, begin + chunk);
    workers.emplace_back([&fn, begin, end] {
      for (std::size_t i = begin; i < end; ++i) fn(i);
    });
  }
}

}  // namespace

PreimageGrid mu_grid(const UnimodalMap& g, unsigned n, unsigned threads) {
  if (n == 0) throw PreconditionError("grid depth must be >= 1");
  if (n - 1 > 20) throw BudgetError("grid of depth " + std::to_string(n) + " exceeds the breakpoint cap");
  std::vector<Rational> level{0, 1};
  for (unsigned m = 1; m < n; ++m) {
    // Left branch preserves order and ends at v; right branch reverses it and
    // starts at v. Both hit v exactly once, for the level point 1.
    const std::size_t sz = level.size();
    std::vector<Rational> next(2 * sz - 1);
    parallel_for(sz, threads, [&](std::size_t i) {
      next[i] = g.left_inverse()(level[i]);
      if (i + 1 < sz) next[2 * sz - 2 - i] = g.right_inverse()(level[i]);
    });
    level = std::move(next);
  }
  return PreimageGrid{n, std::move(level)};
}

std::vector<Rational> density_report(const UnimodalMap& g, unsigned depth) {
  std::vector<Rational> gaps;
  for (unsigned n = 1; n <= depth; ++n) {
    // g(0) = 0, so the union over levels up to n is the level-n grid itself.
    const auto grid = mu_grid(g, n);
    Rational gap = 0;
    for (std::size_t i = 0; i + 1 < grid.points.size(); ++i)
      gap = max(gap, grid.points[i + 1] - grid.points[i]);
    gaps.push_back(gap);
  }
  return gaps;
}

bool check_mu_identities(const UnimodalMap& g, unsigned n) {
  if (n < 2) throw PreconditionError("identities are stated for n >= 2");
  const auto coarse = mu_grid(g, n - 1).points;
  const auto fine = mu_grid(g, n).points;
  const std::size_t half = std::size_t{1} << (n - 2);
  const std::size_t full = 2 * half;
  for (std::size_t k = 0; k <= half; ++k) {
    if (g(fine[k]) != coarse[k]) return false;
    if (coarse[k] != fine[2 * k]) return false;
  }
  for (std::size_t k = 0; k <= full; ++k)
    if (g(fine[k]) != g(fine[full - k])) return false;
  return true;
}

}  // namespace plm
