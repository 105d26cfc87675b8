#include "qcvote/rules.hpp"

namespace qcvote {

QuantumRule qcv_rule(const QcvParams& params) {
  return [params](const ProfileState& p) { return qcv(p, params); };
}

QuantumRule constant_uniform_rule() {
  return [](const ProfileState& p) {
    const std::int64_t dim = factorial(p.m);
    ComplexMatrix mat =
        ComplexMatrix::Identity(dim, dim) / static_cast<double>(dim);
    return DensityOperator::validate(std::move(mat));
  };
}

QuantumRule constant_order_rule(const LinearOrder& o) {
  return [o](const ProfileState&) { return basis_ballot(o).state; };
}

QuantumRule ballot_projection_rule(int voter) {
  return [voter](const ProfileState& p) {
    return reduced_ballot(p, voter).state;
  };
}

QuantumRule dephased_classical_rule(const ClassicalSwf& swf) {
  return [swf](const ProfileState& p) {
    const std::int64_t dim = factorial(p.m);
    ComplexMatrix sum = ComplexMatrix::Zero(dim, dim);
    double total = 0.0;
    for (const auto& [weight, component] : dephase_decompose(p)) {
      const LinearOrder winner = swf(component.classical());
      sum(order_to_index(winner), order_to_index(winner)) += weight;
      total += weight;
    }
    sum /= total;
    return DensityOperator::validate(std::move(sum));
  };
}

ClassicalSwf condorcet_lex_swf() {
  return [](const ClassicalProfile& p) {
    const WeakOrder weak = weak_order_from_scores(condorcet_scores(p));
    // Extensions come back sorted by Lehmer index; the tiebreak picks the
    // smallest.
    return linear_extensions(weak).front();
  };
}

ClassicalSwf dictator_swf(int voter) {
  return [voter](const ClassicalProfile& p) {
    if (voter < 0 || voter >= p.voter_count()) {
      throw argument_error("dictator_swf: voter out of range");
    }
    return p.orders[static_cast<std::size_t>(voter)];
  };
}

ClassicalSwf constant_swf(const LinearOrder& o) {
  return [o](const ClassicalProfile&) { return o; };
}

}  // namespace qcvote
