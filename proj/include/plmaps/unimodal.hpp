#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "plmaps/plmap.hpp"

namespace plm {

// Piecewise-linear map with g(0) = g(1) = 0 and g(v) = 1, strictly increasing
// on [0, v] and strictly decreasing on [v, 1].
class UnimodalMap {
 public:
  // Validates the shape. When v is absent it is taken to be the unique point
  // where the map attains 1. Throws ValidationError.
  static UnimodalMap make(PLMap map, std::optional<Rational> v = std::nullopt);

  [[nodiscard]] const PLMap& map() const { return map_; }
  [[nodiscard]] const Rational& turning_point() const { return v_; }
  [[nodiscard]] Rational operator()(const Rational& x) const { return map_(x); }

  // Inverses of the increasing and decreasing branches, both defined on [0,1].
  [[nodiscard]] const PartialMap& left_inverse() const { return left_inv_; }
  [[nodiscard]] const PartialMap& right_inverse() const { return right_inv_; }

  friend bool operator==(const UnimodalMap& a, const UnimodalMap& b) {
    return a.map_ == b.map_ && a.v_ == b.v_;
  }

 private:
  UnimodalMap(PLMap map, Rational v, PartialMap left_inv, PartialMap right_inv)
      : map_(std::move(map)), v_(std::move(v)), left_inv_(std::move(left_inv)),
        right_inv_(std::move(right_inv)) {}

  PLMap map_;
  Rational v_;
  PartialMap left_inv_;
  PartialMap right_inv_;
};

// x -> 1 - |1 - 2x|.
UnimodalMap tent();

// The t-lap sawtooth through (k/t, k mod 2), slopes +-t. xi(1) is the identity
// and xi(2) the tent map.
PLMap xi(unsigned t);

// PL unimodal map whose increasing branch crosses the diagonal with slope 1/4
// at 11/24. The interval [1/8, 5/8] is mapped into [3/8, 1/2], so no point of
// (1/8, 5/8) ever reaches 0 and the pre-image grids keep a gap of at least 1/2.
UnimodalMap attracting_fixed_point_example();

// Sorted solutions of g^n(x) = 0: 2^{n-1} + 1 points.
struct PreimageGrid {
  unsigned depth = 0;
  std::vector<Rational> points;
};

// Builds the grid level by level, S_1 = {0, 1}, S_{m+1} = g^{-1}(S_m).
// threads > 1 splits each level's branch inversions across worker threads.
// Throws BudgetError when 2^{n-1} exceeds kMaxBreakpoints.
PreimageGrid mu_grid(const UnimodalMap& g, unsigned n, unsigned threads = 1);

// Largest gap between consecutive points of g^{-1}(0) u ... u g^{-n}(0) for
// n = 1..depth. Finite-depth evidence only.
std::vector<Rational> density_report(const UnimodalMap& g, unsigned depth);

// Exact check, for n >= 2, of
//   g(mu_{n,k}) = mu_{n-1,k}            for 0 <= k <= 2^{n-2},
//   g(mu_{n,k}) = g(mu_{n,2^{n-1}-k})   for 0 <= k <= 2^{n-1},
//   mu_{n-1,k}  = mu_{n,2k}             for 0 <= k <= 2^{n-2}.
bool check_mu_identities(const UnimodalMap& g, unsigned n);

}  // namespace plm
