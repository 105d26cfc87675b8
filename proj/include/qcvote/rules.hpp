#pragma once

// Voting rules as first-class values: the quantum Condorcet channel, the
// classical social welfare functions used for contrast, and deliberately
// broken rules that the checker mutation tests feed on.

#include <functional>

#include "qcvote/qcv.hpp"

namespace qcvote {

using QuantumRule = std::function<DensityOperator(const ProfileState&)>;
using ClassicalSwf = std::function<LinearOrder(const ClassicalProfile&)>;

QuantumRule qcv_rule(const QcvParams& params);

// Always returns the maximally mixed state I/m!. Violates sharp unanimity.
QuantumRule constant_uniform_rule();

// Always returns |R><R|. Violates unsharp unanimity (and dictatorship, for
// every voter).
QuantumRule constant_order_rule(const LinearOrder& o);

// Returns voter i's reduced ballot: the identity dictator.
QuantumRule ballot_projection_rule(int voter);

// Dephases the profile and applies the classical rule to each component.
QuantumRule dephased_classical_rule(const ClassicalSwf& swf);

// Condorcet scores -> weak order -> extensions -> smallest Lehmer index.
// Unanimous but, by Arrow's impossibility theorem, not IIA.
ClassicalSwf condorcet_lex_swf();

ClassicalSwf dictator_swf(int voter);
ClassicalSwf constant_swf(const LinearOrder& o);

}  // namespace qcvote
