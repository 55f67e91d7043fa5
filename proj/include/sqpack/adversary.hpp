#pragma once

#include "sqpack/report.hpp"
#include "sqpack/strategy.hpp"

#include <string>
#include <vector>

namespace sqpack {

enum class IterationType { type_i, type_ii };
std::string to_string(IterationType t);

// Type I when the two quarters are stacked with positive x-overlap and the
// lower one starts exactly at h_prev.
IterationType classify_iteration(const Placement& pl1, const Placement& pl2, const Scalar& h_prev);

struct AdversaryIteration {
  IterationType type = IterationType::type_ii;
  std::vector<Placement> placements;  // as chosen by the strategy
  Scalar height;                      // H_i
};

struct AdversaryTranscript {
  std::string strategy;
  Scalar epsilon;
  std::vector<AdversaryIteration> iterations;

  std::vector<SquareItem> sequence() const;
  // H_i with H_0 = 0.
  Scalar height(std::size_t i) const;
  std::string serialize() const;
};

// Plays m iterations against s. Throws InvariantError when the strategy
// returns a placement that does not verify.
AdversaryTranscript adversary_run(OnlineStrategy& s, int m, const Scalar& eps);

// Band-by-band packing of the transcript's squares, each band of height 1 + eps.
Packing optimal_packing_for_transcript(const AdversaryTranscript& t);

// H_m >= 5/4 m - 1/4, H_m / optimum >= (5/4)/(1 + 2 eps) and a valid optimum.
std::vector<CheckLine> adversary_checks(const AdversaryTranscript& t, const Packing& optimum);

// n squares of side 2^-k + delta; delta must keep the rounding at 2^-(k-1).
std::vector<SquareItem> slot_killer_instance(int k, const Scalar& delta, long n);

}  // namespace sqpack
