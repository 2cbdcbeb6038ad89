#pragma once

// Shared generators and oracles for the test suites. Nothing here calls the
// construction under test: the sawtooth oracle evaluates the floor/fractional
// part formula directly and the map comparisons are pointwise.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "plmaps/conjugacy.hpp"
#include "plmaps/plmap.hpp"
#include "plmaps/unimodal.hpp"

namespace plm::testing {

inline Rational R(std::int64_t n, std::int64_t d = 1) { return Rational(n, d); }

inline mpz_class floor_of(const Rational& r) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), r.raw().get_num_mpz_t(), r.raw().get_den_mpz_t());
  return q;
}

// (1 - (-1)^[tx]) / 2 + (-1)^[tx] {tx}
inline Rational sawtooth_oracle(unsigned t, const Rational& x) {
  const Rational tx = Rational(static_cast<std::int64_t>(t)) * x;
  const mpz_class whole = floor_of(tx);
  const Rational frac = tx - Rational(whole, 1);
  const bool odd = mpz_odd_p(whole.get_mpz_t()) != 0;
  return odd ? 1 - frac : frac;
}

inline Rational tent_oracle(const Rational& x) { return 1 - abs(1 - 2 * x); }

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(gen_);
  }

  // Rational in [0, 1] with denominator at most max_den.
  Rational unit(std::int64_t max_den = 64) {
    const std::int64_t d = uniform(1, max_den);
    return Rational(uniform(0, d), d);
  }

  // Strictly increasing sequence of `count` distinct rationals in (0, 1).
  std::vector<Rational> interior_sorted(std::size_t count, std::int64_t max_den = 64) {
    std::set<Rational> s;
    while (s.size() < count) {
      Rational r = unit(max_den);
      if (r.sign() > 0 && r < 1) s.insert(r);
    }
    return {s.begin(), s.end()};
  }

  // Random PL self-map of [0,1] with up to max_inner interior breakpoints.
  PLMap plmap(std::size_t max_inner = 6) {
    const auto xs = interior_sorted(static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(max_inner))));
    std::vector<Point> pts{{0, unit()}};
    for (const auto& x : xs) pts.push_back({x, unit()});
    pts.push_back({1, unit()});
    return PLMap::from_points(std::move(pts));
  }

  // Random increasing PL homeomorphism with 1..max_kinks kinks.
  PLMap homeomorphism(std::size_t max_kinks = 6, std::int64_t max_den = 32) {
    const auto n = static_cast<std::size_t>(uniform(1, static_cast<std::int64_t>(max_kinks)));
    for (;;) {
      const auto xs = interior_sorted(n, max_den);
      const auto ys = interior_sorted(n, max_den);
      std::vector<Point> pts{{0, 0}};
      for (std::size_t i = 0; i < n; ++i) pts.push_back({xs[i], ys[i]});
      pts.push_back({1, 1});
      PLMap h = PLMap::from_points(std::move(pts));
      if (h.piece_count() > 1) return h;
    }
  }

  // As homeomorphism(), with every kink abscissa of the form j / 2^{max_exp}.
  PLMap dyadic_homeomorphism(std::size_t max_kinks, unsigned max_exp) {
    const std::int64_t den = std::int64_t{1} << max_exp;
    const auto n = static_cast<std::size_t>(uniform(1, std::min<std::int64_t>(static_cast<std::int64_t>(max_kinks), den - 1)));
    for (;;) {
      std::set<std::int64_t> nums;
      while (nums.size() < n) nums.insert(uniform(1, den - 1));
      const auto ys = interior_sorted(n, 40);
      std::vector<Point> pts{{0, 0}};
      std::size_t i = 0;
      for (auto j : nums) pts.push_back({Rational(j, den), ys[i++]});
      pts.push_back({1, 1});
      PLMap h = PLMap::from_points(std::move(pts));
      if (h.piece_count() > 1) return h;
    }
  }

  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

// Pointwise agreement at every breakpoint of both maps and at the midpoints
// between consecutive ones; for PL maps this decides equality.
inline bool pointwise_equal(const PLMap& a, const PLMap& b) {
  std::vector<Rational> xs;
  for (const auto& p : a.points()) xs.push_back(p.x);
  for (const auto& p : b.points()) xs.push_back(p.x);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  const std::size_t n = xs.size();
  for (std::size_t i = 0; i + 1 < n; ++i) xs.push_back((xs[i] + xs[i + 1]) / 2);
  for (const auto& x : xs)
    if (a(x) != b(x)) return false;
  return true;
}

inline std::vector<Rational> dyadic_grid(unsigned n) {
  const std::int64_t den = std::int64_t{1} << (n - 1);
  std::vector<Rational> pts;
  for (std::int64_t k = 0; k <= den; ++k) pts.push_back(Rational(k, den));
  return pts;
}

}  // namespace plm::testing
