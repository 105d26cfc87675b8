#pragma once

// Quantum encoding of preferences: the preference basis over H (dim m!),
// ballots and joint profile states as density operators, pair projectors,
// reduced ballots and the dephased decomposition used to extend
// basis-defined voting maps to arbitrary profile states.

#include <cstdint>
#include <utility>
#include <vector>

#include "qcvote/linalg.hpp"
#include "qcvote/orders.hpp"

namespace qcvote {

// Diagonal 0/1 projector onto the span of basis orders ranking x above y.
struct PairProjector {
  int x = -1;
  int y = -1;
  ComplexMatrix matrix;

  Eigen::Index rank() const;  // m!/2
};

PairProjector pair_projector(int m, int x, int y);

struct Ballot {
  DensityOperator state;  // dim m!
  int owner = 0;          // voter index
};

// |R><R| for the order R: a single diagonal 1 at order_to_index(R).
Ballot basis_ballot(const LinearOrder& o, int owner = 0);

// Classical profile plus its quantum reading as a product of basis ballots.
struct BasisProfile {
  std::vector<LinearOrder> orders;

  int voter_count() const { return static_cast<int>(orders.size()); }
  int candidate_count() const {
    return orders.empty() ? 0 : orders.front().candidate_count();
  }
  ClassicalProfile classical() const { return make_profile(orders); }
  std::string label(const CandidateSet& cs) const;  // "x>y>z | y>z>x | ..."

  bool operator==(const BasisProfile&) const = default;
};

struct ProfileState {
  DensityOperator state;  // dim (m!)^n
  int n = 0;
  int m = 0;
};

// Tensor product of the ballots in voter order (voter 0 most significant).
ProfileState profile_state(const std::vector<Ballot>& ballots);
ProfileState profile_state(const BasisProfile& b);

// Joint preference-basis index of a basis profile (mixed-radix, base m!).
std::int64_t joint_basis_index(const BasisProfile& b);
BasisProfile basis_profile_from_joint_index(std::int64_t index, int n, int m);

// Tr over all voters except i.
Ballot reduced_ballot(const ProfileState& p, int voter);

// Tr(Pi^{x>y} d), clamped to [0,1]; values outside by more than 1e-9 raise
// numeric_error. d must live on a single preference space (dim m!).
double pair_weight(const DensityOperator& d, int x, int y);

// True iff voter i's order ranks x above y.
bool encodes(const BasisProfile& b, int voter, int x, int y);

// Diagonal of p in the joint preference basis as a classical mixture of
// basis profiles: entries above 1e-12, ascending joint index. Off-diagonal
// (coherent) terms are discarded; this is the dephasing that extends
// basis-defined rules to arbitrary density operators.
std::vector<std::pair<double, BasisProfile>> dephase_decompose(
    const ProfileState& p);

// m such that m! == dim. Throws dimension_error if dim is not a factorial.
int candidate_count_for_dim(Eigen::Index dim);

}  // namespace qcvote
