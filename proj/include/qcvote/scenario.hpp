#pragma once

// Scenario files: the line-oriented input format of the CLI.
//
//   candidates: x,y,z
//   ballot: x>y>z
//   ballot: 0.99 x>y>z + 0.01 y>x>z
//   delta: 0.05
//   checks: sharp-unanimity,unsharp-qiia
//   seed: 42
//   tolerance: 1e-9

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qcvote/ballots.hpp"

namespace qcvote {

// One voter's ballot: a convex mixture of basis orders (weight 1 when the
// ballot is a single order).
struct BallotSpec {
  std::vector<std::pair<double, LinearOrder>> components;

  bool operator==(const BallotSpec&) const = default;
};

struct Scenario {
  CandidateSet candidates;
  std::vector<BallotSpec> ballots;
  double delta = 0.05;
  std::vector<std::string> checks;
  std::uint64_t seed = 42;
  double tolerance = 1e-9;

  int voter_count() const { return static_cast<int>(ballots.size()); }
  bool operator==(const Scenario&) const = default;
};

// Throws parse_error with the offending line, or on violated constraints
// (mixture weights must sum to 1 within 1e-9, orders must be permutations of
// the candidate list, delta must lie in (0, 1/m^2), >= 2 ballots, known
// check names).
Scenario parse_scenario(std::string_view text);

// Canonical rendering; parse_scenario(serialize_scenario(s)) == s exactly.
std::string serialize_scenario(const Scenario& s);

// The joint state: tensor product of the per-voter diagonal mixtures.
ProfileState scenario_profile(const Scenario& s);

std::string order_to_string(const LinearOrder& o, const CandidateSet& cs);
LinearOrder order_from_string(std::string_view text, const CandidateSet& cs);

}  // namespace qcvote
