#pragma once

// Quantum Condorcet voting: scores -> weak order -> extensions -> uniform
// mixture, followed by the minority shot and unanimity enforcement, plus the
// preference-basis measurement of the societal state.

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "qcvote/ballots.hpp"

namespace qcvote {

struct QcvParams {
  double delta = 0.05;      // minority-shot weight, must satisfy 0 < delta < 1/m^2
  double tolerance = 1e-9;  // density validation slack
};

// Throws argument_error when delta or tolerance are out of bounds for m.
void validate_params(const QcvParams& params, int m);

// Everything the six steps produce along the way, for reporting and tests.
struct QcvTrace {
  std::vector<int> scores;
  WeakOrder weak_order;
  std::vector<LinearOrder> extensions;
  DensityOperator sigma1;  // uniform mixture over extensions
  DensityOperator sigma2;  // after the minority shot
  DensityOperator sigma3;  // after unanimity enforcement, renormalized
  std::vector<std::pair<int, int>> minority_pairs;   // encoded by >= 1 voter
  std::vector<std::pair<int, int>> unanimous_pairs;  // encoded by all voters
  double renormalization_factor = 1.0;  // trace removed by the projection
};

// The rule on a basis profile. Output is sigma3: diagonal in the preference
// basis and a valid density operator.
std::pair<DensityOperator, QcvTrace> qcv_basis(const BasisProfile& b,
                                               const QcvParams& params);

// Extension to arbitrary profile states: dephase into basis-profile
// components, apply qcv_basis to each, recombine convexly (ascending joint
// index, so floating-point results are reproducible).
DensityOperator qcv(const ProfileState& p, const QcvParams& params);

// Samples the preference-basis measurement: returns the drawn order and its
// exact probability (the diagonal entry).
std::pair<LinearOrder, double> measure_outcome(const DensityOperator& d,
                                               std::mt19937_64& rng);

// Engine for the given seed; all randomness in the library flows through
// explicitly seeded engines derived this way (purpose string splits streams).
std::mt19937_64 seeded_rng(std::uint64_t seed, std::string_view purpose = "");

}  // namespace qcvote
