#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "plmaps/plmap.hpp"
#include "plmaps/unimodal.hpp"

namespace plm {

// psi o g == g o psi, exactly.
bool commutes(const UnimodalMap& g, const PLMap& psi);

enum class TrivialityKind { Constant, IterateOf, NonTrivial };

struct Triviality {
  TrivialityKind kind = TrivialityKind::NonTrivial;
  unsigned iterate = 0;  // m with psi = g^m, when kind == IterateOf
  friend bool operator==(const Triviality&, const Triviality&) = default;
};

std::string to_string(const Triviality& t);

// Constant, an iterate g^m (only m with 2^m = laps(psi) is possible), or
// neither. Throws PreconditionError unless psi commutes with g.
Triviality classify_triviality(const UnimodalMap& g, const PLMap& psi);

struct BoundaryCheck {
  std::string label;
  std::string identity;
  bool passed = false;
  std::optional<Rational> witness;  // failing point, if any
};

struct BoundaryReport {
  std::size_t lap_count = 0;
  std::vector<BoundaryCheck> checks;
  std::string note;
  [[nodiscard]] bool all_passed() const;
};

// Structural facts every non-constant commutator satisfies: psi(0) = 0,
// psi(1) in {0, 1}, every lap onto [0,1], and the turning-point value:
//   laps odd            -> psi(v) = v
//   laps = 2s, s even   -> endpoint s is v and psi(v) = 0
//   laps = 2s, s odd    -> endpoint s is v and psi(v) = 1
// A failure here means a bug upstream, not a counterexample.
BoundaryReport boundary_checks(const UnimodalMap& g, const PLMap& psi);

// Laps I_k = [endpoints[k], endpoints[k+1]] of a commutator, each split at
// splits[k] = psi_k^{-1}(v) into I_{k,0} (left) and I_{k,1} (right).
struct LapDecomposition {
  std::vector<Rational> endpoints;
  std::vector<Rational> splits;
  std::size_t lapcount = 0;

  [[nodiscard]] Rational sub_lo(std::size_t k, unsigned s) const { return s == 0 ? endpoints[k] : splits[k]; }
  [[nodiscard]] Rational sub_hi(std::size_t k, unsigned s) const { return s == 0 ? splits[k] : endpoints[k + 1]; }
};

// Throws PreconditionError for constant or non-commuting psi, StructureError
// if the laps do not alternate 0 -> 1 -> 0 ... starting from psi(0) = 0.
LapDecomposition lap_decomposition(const UnimodalMap& g, const PLMap& psi);

// For psi with 2t laps, the t-lap commutator psi~ with g o psi~ = psi. Lap k of
// psi is pulled back through the increasing branch of g when k mod 4 is 0 or
// 3 and through the decreasing branch when it is 1 or 2.
// Throws ParityError for an odd lap count, PreconditionError if psi does not
// commute with g, StructureError if a sub-interval image or the continuity
// of the assembled map is off.
PLMap halve(const UnimodalMap& g, const PLMap& psi);

// Halves while the lap count is even.
PLMap reduce_fully(const UnimodalMap& g, const PLMap& psi);

// a * g'(0) / psi'(0) with a the first kink of g. Throws PreconditionError
// unless psi'(0) > g'(0).
Rational predicted_first_kink(const UnimodalMap& g, const PLMap& psi);

}  // namespace plm
