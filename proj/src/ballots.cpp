#include "qcvote/ballots.hpp"

#include <cmath>

namespace qcvote {

Eigen::Index PairProjector::rank() const {
  return static_cast<Eigen::Index>(std::llround(matrix.diagonal().real().sum()));
}

PairProjector pair_projector(int m, int x, int y) {
  if (x == y) throw argument_error("pair_projector: x == y");
  if (x < 0 || x >= m || y < 0 || y >= m) {
    throw argument_error("pair_projector: candidate out of range");
  }
  const std::int64_t dim = factorial(m);
  ComplexMatrix mat = ComplexMatrix::Zero(dim, dim);
  for (std::int64_t i = 0; i < dim; ++i) {
    if (index_to_order(i, m).ranks_above(x, y)) mat(i, i) = 1.0;
  }
  return PairProjector{x, y, std::move(mat)};
}

Ballot basis_ballot(const LinearOrder& o, int owner) {
  const std::int64_t dim = factorial(o.candidate_count());
  ComplexMatrix mat = ComplexMatrix::Zero(dim, dim);
  mat(order_to_index(o), order_to_index(o)) = 1.0;
  return Ballot{DensityOperator::validate(std::move(mat)), owner};
}

std::string BasisProfile::label(const CandidateSet& cs) const {
  std::string out;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (i) out += " | ";
    out += orders[i].label(cs);
  }
  return out;
}

ProfileState profile_state(const std::vector<Ballot>& ballots) {
  if (ballots.size() < 2) throw argument_error("profile needs >= 2 ballots");
  const Eigen::Index dim = ballots.front().state.dim();
  const int m = candidate_count_for_dim(dim);
  ComplexMatrix joint = ballots.front().state.matrix();
  for (std::size_t i = 1; i < ballots.size(); ++i) {
    if (ballots[i].state.dim() != dim) {
      throw dimension_error("profile_state: ballots live on different spaces");
    }
    joint = tensor(joint, ballots[i].state.matrix());
  }
  return ProfileState{DensityOperator::validate(std::move(joint)),
                      static_cast<int>(ballots.size()), m};
}

ProfileState profile_state(const BasisProfile& b) {
  std::vector<Ballot> ballots;
  ballots.reserve(b.orders.size());
  for (std::size_t i = 0; i < b.orders.size(); ++i) {
    ballots.push_back(basis_ballot(b.orders[i], static_cast<int>(i)));
  }
  return profile_state(ballots);
}

std::int64_t joint_basis_index(const BasisProfile& b) {
  const std::int64_t base = factorial(b.candidate_count());
  std::int64_t index = 0;
  for (const auto& o : b.orders) index = index * base + order_to_index(o);
  return index;
}

BasisProfile basis_profile_from_joint_index(std::int64_t index, int n, int m) {
  const std::int64_t base = factorial(m);
  std::vector<LinearOrder> orders(n, LinearOrder{});
  for (int v = n - 1; v >= 0; --v) {
    orders[v] = index_to_order(index % base, m);
    index /= base;
  }
  if (index != 0) throw argument_error("joint index out of range");
  return BasisProfile{std::move(orders)};
}

Ballot reduced_ballot(const ProfileState& p, int voter) {
  if (voter < 0 || voter >= p.n) {
    throw argument_error("reduced_ballot: voter " + std::to_string(voter) +
                         " out of range");
  }
  const Eigen::Index d = factorial(p.m);
  std::vector<Eigen::Index> dims(p.n, d);
  ComplexMatrix reduced =
      partial_trace(p.state.matrix(), dims, static_cast<std::size_t>(voter));
  return Ballot{DensityOperator::validate(std::move(reduced),
                                          p.state.tolerance()),
                voter};
}

double pair_weight(const DensityOperator& d, int x, int y) {
  const int m = candidate_count_for_dim(d.dim());
  const PairProjector proj = pair_projector(m, x, y);
  double w = (proj.matrix * d.matrix()).trace().real();
  if (w < -1e-9 || w > 1.0 + 1e-9) {
    throw numeric_error("pair weight " + std::to_string(w) +
                        " outside [0,1] beyond tolerance");
  }
  return std::clamp(w, 0.0, 1.0);
}

bool encodes(const BasisProfile& b, int voter, int x, int y) {
  if (voter < 0 || voter >= b.voter_count()) {
    throw argument_error("encodes: voter out of range");
  }
  return b.orders[static_cast<std::size_t>(voter)].ranks_above(x, y);
}

std::vector<std::pair<double, BasisProfile>> dephase_decompose(
    const ProfileState& p) {
  const Eigen::Index dim = p.state.dim();
  std::vector<std::pair<double, BasisProfile>> components;
  for (Eigen::Index i = 0; i < dim; ++i) {
    const double w = p.state.matrix()(i, i).real();
    if (w > 1e-12) {
      components.emplace_back(w, basis_profile_from_joint_index(i, p.n, p.m));
    }
  }
  return components;
}

int candidate_count_for_dim(Eigen::Index dim) {
  std::int64_t f = 1;
  for (int m = 1; m <= 20; ++m) {
    f *= m;
    if (f == dim) return m;
    if (f > dim) break;
  }
  throw dimension_error("dimension " + std::to_string(dim) +
                        " is not a factorial");
}

}  // namespace qcvote
