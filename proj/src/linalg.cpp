#include "qcvote/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <string>

namespace qcvote {

std::string to_string(density_defect d) {
  switch (d) {
    case density_defect::not_finite:
      return "not-finite";
    case density_defect::not_hermitian:
      return "not-hermitian";
    case density_defect::trace_not_one:
      return "trace-not-one";
    case density_defect::not_psd:
      return "not-psd";
  }
  return "unknown";
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Complex trace(const ComplexMatrix& a) {
  if (a.rows() != a.cols()) {
    throw dimension_error("trace: matrix is " + std::to_string(a.rows()) +
                          "x" + std::to_string(a.cols()) + ", not square");
  }
  return a.trace();
}

ComplexMatrix partial_trace(const ComplexMatrix& rho,
                            const std::vector<Eigen::Index>& dims,
                            std::size_t keep) {
  if (rho.rows() != rho.cols()) {
    throw dimension_error("partial_trace: input not square");
  }
  if (keep >= dims.size()) {
    throw dimension_error("partial_trace: keep index " + std::to_string(keep) +
                          " out of range for " + std::to_string(dims.size()) +
                          " factors");
  }
  Eigen::Index total = 1;
  for (Eigen::Index d : dims) {
    if (d <= 0) throw dimension_error("partial_trace: nonpositive factor dim");
    total *= d;
  }
  if (total != rho.rows()) {
    throw dimension_error("partial_trace: factor dims multiply to " +
                          std::to_string(total) + ", matrix dim is " +
                          std::to_string(rho.rows()));
  }

  // Group the factors around `keep`: joint index = (l*dk + i)*dr + r.
  // Tracing everything else amounts to summing over l and r on the diagonal.
  Eigen::Index dl = 1, dr = 1;
  const Eigen::Index dk = dims[keep];
  for (std::size_t f = 0; f < keep; ++f) dl *= dims[f];
  for (std::size_t f = keep + 1; f < dims.size(); ++f) dr *= dims[f];

  ComplexMatrix out = ComplexMatrix::Zero(dk, dk);
  for (Eigen::Index i = 0; i < dk; ++i) {
    for (Eigen::Index j = 0; j < dk; ++j) {
      Complex sum = 0.0;
      for (Eigen::Index l = 0; l < dl; ++l) {
        for (Eigen::Index r = 0; r < dr; ++r) {
          sum += rho((l * dk + i) * dr + r, (l * dk + j) * dr + r);
        }
      }
      out(i, j) = sum;
    }
  }
  return out;
}

ComplexMatrix conjugate_by_projector(const ComplexMatrix& p,
                                     const ComplexMatrix& rho) {
  if (p.rows() != p.cols() || rho.rows() != rho.cols() ||
      p.rows() != rho.rows()) {
    throw dimension_error("conjugate_by_projector: dimension mismatch (" +
                          std::to_string(p.rows()) + " vs " +
                          std::to_string(rho.rows()) + ")");
  }
  return p * rho * p;
}

bool is_diagonal(const ComplexMatrix& a, double tol) {
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (i != j && std::abs(a(i, j)) > tol) return false;
    }
  }
  return true;
}

std::optional<density_defect> density_defect_of(const ComplexMatrix& a,
                                                double tol) {
  if (a.rows() != a.cols()) return density_defect::not_hermitian;
  if (!a.allFinite()) return density_defect::not_finite;

  double herm_dev = 0.0;
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = i; j < a.cols(); ++j) {
      herm_dev = std::max(herm_dev, std::abs(a(i, j) - std::conj(a(j, i))));
    }
  }
  if (herm_dev > tol) return density_defect::not_hermitian;

  if (std::abs(a.trace() - Complex(1.0)) > tol) {
    return density_defect::trace_not_one;
  }

  if (is_diagonal(a, tol)) {
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      if (a(i, i).real() < -tol) return density_defect::not_psd;
    }
    return std::nullopt;
  }
  ComplexMatrix herm = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(herm,
                                                      Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < -tol) return density_defect::not_psd;
  return std::nullopt;
}

DensityOperator DensityOperator::validate(ComplexMatrix a, double tol) {
  if (auto defect = density_defect_of(a, tol)) {
    throw density_error(*defect, "density operator invariant violated: " +
                                     to_string(*defect));
  }
  return DensityOperator(std::move(a), tol);
}

}  // namespace qcvote
