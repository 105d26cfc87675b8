#pragma once

// Dense complex linear algebra for preference-space states: tensor products,
// traces, partial traces, projector conjugation and density-operator
// validation. Dimensions stay small (at most (m!)^n with m <= 5), so
// everything is dense and double-precision.

#include <Eigen/Dense>
#include <complex>
#include <optional>
#include <vector>

#include "qcvote/errors.hpp"

namespace qcvote {

using ComplexMatrix = Eigen::MatrixXcd;
using Complex = std::complex<double>;

// Validation slack for density-operator invariants.
inline constexpr double kValidationTol = 1e-9;
// Slack for algebraic identities that should hold to rounding error.
inline constexpr double kAlgebraTol = 1e-12;

// Kronecker product: entry [(i*b.rows+k), (j*b.cols+l)] = a(i,j) * b(k,l).
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

// Sum of diagonal entries. Throws dimension_error on non-square input.
Complex trace(const ComplexMatrix& a);

// Traces out every tensor factor except `keep`. `dims` lists the factor
// dimensions in tensor order; rho must be square of dimension prod(dims).
ComplexMatrix partial_trace(const ComplexMatrix& rho,
                            const std::vector<Eigen::Index>& dims,
                            std::size_t keep);

// p * rho * p for a projector p. Only the dimension is checked here; callers
// are responsible for p being an actual projector.
ComplexMatrix conjugate_by_projector(const ComplexMatrix& p,
                                     const ComplexMatrix& rho);

bool is_diagonal(const ComplexMatrix& a, double tol);

// First violated density invariant, or nullopt if `a` is a density operator
// within tol. Checks finiteness, Hermiticity, unit trace, then positivity
// (diagonal scan when the matrix is diagonal, smallest eigenvalue of the
// Hermitian part otherwise).
std::optional<density_defect> density_defect_of(const ComplexMatrix& a,
                                                double tol);

class DensityOperator {
 public:
  // Throws density_error naming the violated invariant.
  static DensityOperator validate(ComplexMatrix a, double tol = kValidationTol);

  const ComplexMatrix& matrix() const { return matrix_; }
  Eigen::Index dim() const { return matrix_.rows(); }
  double tolerance() const { return tolerance_; }

 private:
  DensityOperator(ComplexMatrix m, double tol)
      : matrix_(std::move(m)), tolerance_(tol) {}

  ComplexMatrix matrix_;
  double tolerance_;
};

}  // namespace qcvote
