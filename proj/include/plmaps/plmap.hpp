#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "plmaps/rational.hpp"

namespace plm {

// Hard cap on breakpoints of any map the library produces.
inline constexpr std::size_t kMaxBreakpoints = std::size_t{1} << 20;

struct Point {
  Rational x;
  Rational y;
  friend bool operator==(const Point&, const Point&) = default;
};

// Continuous piecewise-linear function on [lo, hi] given by its breakpoints.
// Values are unrestricted. Breakpoints are kept canonical: abscissae strictly
// increasing and no interior point collinear with its neighbours.
class PartialMap {
 public:
  // Canonicalizes. Throws ValidationError on fewer than two points or
  // non-increasing abscissae, BudgetError past kMaxBreakpoints.
  static PartialMap from_points(std::vector<Point> pts);

  [[nodiscard]] const Rational& lo() const { return pts_.front().x; }
  [[nodiscard]] const Rational& hi() const { return pts_.back().x; }
  [[nodiscard]] std::span<const Point> points() const { return pts_; }
  [[nodiscard]] std::size_t piece_count() const { return pts_.size() - 1; }

  // Throws DomainError outside [lo, hi].
  [[nodiscard]] Rational eval(const Rational& x) const;
  [[nodiscard]] Rational operator()(const Rational& x) const { return eval(x); }

  // Smallest and largest value taken on the domain.
  [[nodiscard]] Rational min_value() const;
  [[nodiscard]] Rational max_value() const;
  [[nodiscard]] bool is_identity() const;

  friend bool operator==(const PartialMap&, const PartialMap&) = default;

 private:
  explicit PartialMap(std::vector<Point> pts) : pts_(std::move(pts)) {}
  std::vector<Point> pts_;
};

// outer(inner(x)) on inner's domain. Throws DomainError if inner's range is
// not inside outer's domain.
PartialMap compose(const PartialMap& outer, const PartialMap& inner);

// Continuous piecewise-linear self-map of [0,1].
class PLMap {
 public:
  // Canonicalizes, then validates the [0,1] -> [0,1] shape.
  static PLMap from_points(std::vector<Point> pts);
  // As from_points but rejects collinear interior breakpoints instead of
  // dropping them. Used by the file reader.
  static PLMap from_canonical_points(std::vector<Point> pts);
  static PLMap from_partial(PartialMap f);

  static PLMap identity();
  static PLMap constant(const Rational& c);

  [[nodiscard]] std::span<const Point> points() const { return f_.points(); }
  [[nodiscard]] std::size_t piece_count() const { return f_.piece_count(); }
  [[nodiscard]] const PartialMap& as_partial() const { return f_; }

  [[nodiscard]] Rational eval(const Rational& x) const { return f_.eval(x); }
  [[nodiscard]] Rational operator()(const Rational& x) const { return f_.eval(x); }
  [[nodiscard]] bool is_constant() const { return f_.piece_count() == 1 && f_.points()[0].y == f_.points()[1].y; }

  friend bool operator==(const PLMap&, const PLMap&) = default;

 private:
  explicit PLMap(PartialMap f) : f_(std::move(f)) {}
  PartialMap f_;
};

Rational eval(const PLMap& m, const Rational& x);
PLMap compose(const PLMap& outer, const PLMap& inner);
// n-fold self-composition, n >= 1.
PLMap iterate(const PLMap& m, unsigned n);
bool equals(const PLMap& a, const PLMap& b);

// Slope of each piece, left to right.
std::vector<Rational> slopes(const PartialMap& f);

// Number of maximal monotone intervals. Throws FlatSegmentError if any piece
// is constant.
std::size_t laps(const PLMap& m);
// 0, the abscissae where the slope changes sign, and 1.
std::vector<Rational> lap_boundaries(const PLMap& m);

// Sorted solutions of m(x) = y. Throws FlatSegmentError if a piece is
// constant at level y.
std::vector<Rational> preimage(const PLMap& m, const Rational& y);

// m restricted to [lo, hi], 0 <= lo < hi <= 1.
PartialMap restrict_to(const PLMap& m, const Rational& lo, const Rational& hi);
// Inverse of m on [lo, hi], defined on m([lo, hi]). Throws MonotonicityError
// unless m is strictly monotone there.
PartialMap inverse_branch(const PLMap& m, const Rational& lo, const Rational& hi);
PartialMap inverse(const PartialMap& f);

Rational slope_at_zero(const PLMap& m);
// Smallest interior breakpoint. Throws PreconditionError for a linear map.
Rational first_kink(const PLMap& m);

}  // namespace plm
