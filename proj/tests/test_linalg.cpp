#include <doctest.h>

#include <cmath>
#include <limits>

#include "qcvote/linalg.hpp"
#include "qcvote/qcv.hpp"
#include "test_helpers.hpp"

using namespace qcvote;
using qcvote::testing::kron_oracle;
using qcvote::testing::partial_trace_oracle;
using qcvote::testing::random_density;

namespace {

ComplexMatrix diag(std::initializer_list<double> entries) {
  ComplexMatrix out = ComplexMatrix::Zero(
      static_cast<Eigen::Index>(entries.size()),
      static_cast<Eigen::Index>(entries.size()));
  Eigen::Index i = 0;
  for (double v : entries) out(i, i) = v, ++i;
  return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace

TEST_CASE("tensor: identities and basis projectors") {
  const ComplexMatrix i2 = ComplexMatrix::Identity(2, 2);
  CHECK(max_abs_diff(tensor(i2, i2), ComplexMatrix::Identity(4, 4)) == 0.0);
  CHECK(max_abs_diff(tensor(diag({1, 0}), diag({0, 1})), diag({0, 1, 0, 0})) ==
        0.0);
}

TEST_CASE("tensor: |0><0| x rho places rho in the top-left block") {
  auto rng = seeded_rng(7, "tensor-block");
  const ComplexMatrix rho = random_density(2, rng);
  const ComplexMatrix got = tensor(diag({1, 0}), rho);
  CHECK(max_abs_diff(got, kron_oracle(diag({1, 0}), rho)) == 0.0);
  CHECK(max_abs_diff(got.block(0, 0, 2, 2), rho) == 0.0);
  CHECK(got.block(2, 0, 2, 4).cwiseAbs().maxCoeff() == 0.0);
  CHECK(got.block(0, 2, 2, 2).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("tensor matches the quadruple-loop oracle exactly on integer matrices") {
  auto rng = seeded_rng(11, "tensor-int");
  for (int trial = 0; trial < 20; ++trial) {
    const Eigen::Index ra = 1 + static_cast<Eigen::Index>(rng() % 4);
    const Eigen::Index ca = 1 + static_cast<Eigen::Index>(rng() % 4);
    const Eigen::Index rb = 1 + static_cast<Eigen::Index>(rng() % 4);
    const Eigen::Index cb = 1 + static_cast<Eigen::Index>(rng() % 4);
    ComplexMatrix a(ra, ca), b(rb, cb);
    for (Eigen::Index i = 0; i < ra; ++i)
      for (Eigen::Index j = 0; j < ca; ++j)
        a(i, j) = Complex(static_cast<double>(rng() % 7) - 3,
                          static_cast<double>(rng() % 7) - 3);
    for (Eigen::Index i = 0; i < rb; ++i)
      for (Eigen::Index j = 0; j < cb; ++j)
        b(i, j) = Complex(static_cast<double>(rng() % 7) - 3,
                          static_cast<double>(rng() % 7) - 3);
    CHECK(max_abs_diff(tensor(a, b), kron_oracle(a, b)) == 0.0);
  }
}

TEST_CASE("tensor is associative on integer matrices") {
  auto rng = seeded_rng(13, "tensor-assoc");
  for (int trial = 0; trial < 10; ++trial) {
    ComplexMatrix ms[3];
    for (auto& m : ms) {
      const Eigen::Index r = 1 + static_cast<Eigen::Index>(rng() % 3);
      const Eigen::Index c = 1 + static_cast<Eigen::Index>(rng() % 3);
      m.resize(r, c);
      for (Eigen::Index i = 0; i < r; ++i)
        for (Eigen::Index j = 0; j < c; ++j)
          m(i, j) = static_cast<double>(rng() % 5) - 2;
    }
    CHECK(max_abs_diff(tensor(tensor(ms[0], ms[1]), ms[2]),
                       tensor(ms[0], tensor(ms[1], ms[2]))) == 0.0);
  }
}

TEST_CASE("trace basics") {
  CHECK(trace(ComplexMatrix::Identity(6, 6)) == Complex(6.0));
  CHECK_THROWS_AS(trace(ComplexMatrix::Zero(2, 3)), dimension_error);
}

TEST_CASE("trace is multiplicative under tensor") {
  auto rng = seeded_rng(17, "trace-mult");
  for (int trial = 0; trial < 10; ++trial) {
    const ComplexMatrix a = random_density(3, rng);
    const ComplexMatrix b = random_density(4, rng);
    const Complex lhs = trace(tensor(a, b));
    const Complex rhs = trace(a) * trace(b);
    CHECK(std::abs(lhs - rhs) <= 1e-12);
  }
}

TEST_CASE("partial_trace recovers product factors") {
  auto rng = seeded_rng(19, "pt-product");
  const ComplexMatrix rho_a = random_density(3, rng);
  const ComplexMatrix rho_b = random_density(4, rng);
  const ComplexMatrix joint = tensor(rho_a, rho_b);
  CHECK(max_abs_diff(partial_trace(joint, {3, 4}, 0), rho_a) <= 1e-12);
  CHECK(max_abs_diff(partial_trace(joint, {3, 4}, 1), rho_b) <= 1e-12);
}

TEST_CASE("partial_trace of the Bell state is maximally mixed") {
  ComplexMatrix bell = ComplexMatrix::Zero(4, 4);
  // (|00> + |11>)/sqrt(2) as a density operator.
  for (Eigen::Index i : {0, 3})
    for (Eigen::Index j : {0, 3}) bell(i, j) = 0.5;
  const ComplexMatrix reduced = partial_trace(bell, {2, 2}, 0);
  CHECK(max_abs_diff(reduced, ComplexMatrix::Identity(2, 2) / 2.0) <= 1e-12);
  CHECK(max_abs_diff(reduced, partial_trace_oracle(bell, {2, 2}, 0)) <= 1e-12);
}

TEST_CASE("partial_trace over three factors keeps the middle voter") {
  // Basis product |2> x |4> x |1> on three 6-dimensional factors.
  auto unit = [](Eigen::Index dim, Eigen::Index at) {
    ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
    m(at, at) = 1.0;
    return m;
  };
  const ComplexMatrix joint = tensor(tensor(unit(6, 2), unit(6, 4)), unit(6, 1));
  const std::vector<Eigen::Index> dims{6, 6, 6};
  CHECK(max_abs_diff(partial_trace(joint, dims, 1), unit(6, 4)) == 0.0);
  CHECK(max_abs_diff(partial_trace(joint, dims, 1),
                     partial_trace_oracle(joint, dims, 1)) <= 1e-12);
}

TEST_CASE("partial_trace dimension errors") {
  const ComplexMatrix rho = ComplexMatrix::Identity(6, 6) / 6.0;
  CHECK_THROWS_AS(partial_trace(rho, {2, 2}, 0), dimension_error);
  CHECK_THROWS_AS(partial_trace(rho, {2, 3}, 2), dimension_error);
  CHECK_THROWS_AS(partial_trace(ComplexMatrix::Zero(2, 3), {2, 3}, 0),
                  dimension_error);
}

TEST_CASE("partial_trace preserves trace and density validity") {
  auto rng = seeded_rng(23, "pt-preserve");
  for (int trial = 0; trial < 10; ++trial) {
    const ComplexMatrix rho = random_density(12, rng);
    const std::vector<Eigen::Index> dims{3, 4};
    for (std::size_t keep : {0u, 1u}) {
      const ComplexMatrix reduced = partial_trace(rho, dims, keep);
      CHECK(std::abs(trace(reduced) - trace(rho)) <= 1e-12);
      CHECK(!density_defect_of(reduced, 1e-9).has_value());
    }
  }
}

TEST_CASE("conjugate_by_projector basics") {
  const ComplexMatrix rho = diag({0.3, 0.7});
  CHECK(max_abs_diff(
            conjugate_by_projector(ComplexMatrix::Identity(2, 2), rho), rho) ==
        0.0);
  CHECK(max_abs_diff(conjugate_by_projector(diag({1, 0}), rho),
                     diag({0.3, 0})) == 0.0);
  CHECK_THROWS_AS(conjugate_by_projector(diag({1, 0}), diag({1, 0, 0})),
                  dimension_error);
}

TEST_CASE("projector conjugation preserves the Pi-rho trace") {
  auto rng = seeded_rng(29, "proj-trace");
  for (int trial = 0; trial < 10; ++trial) {
    const ComplexMatrix rho = random_density(6, rng);
    ComplexMatrix p = ComplexMatrix::Zero(6, 6);
    for (Eigen::Index i = 0; i < 6; ++i) {
      if (rng() % 2) p(i, i) = 1.0;
    }
    const Complex lhs = trace(conjugate_by_projector(p, rho));
    const Complex rhs = trace(p * rho);
    CHECK(std::abs(lhs - rhs) <= 1e-12);
  }
}

TEST_CASE("validate_density accepts and rejects with named defects") {
  CHECK_NOTHROW(DensityOperator::validate(ComplexMatrix::Identity(6, 6) / 6.0,
                                          1e-9));

  auto defect_of = [](const ComplexMatrix& m) {
    try {
      DensityOperator::validate(m, 1e-9);
    } catch (const density_error& e) {
      return e.defect;
    }
    throw std::logic_error("expected density_error");
  };

  CHECK(defect_of(ComplexMatrix::Identity(6, 6) / 3.0) ==
        density_defect::trace_not_one);
  CHECK(defect_of(diag({1.1, -0.1})) == density_defect::not_psd);

  ComplexMatrix skew = diag({0.5, 0.5});
  skew(0, 1) = Complex(0, 0.5);
  skew(1, 0) = Complex(0, 0.5);  // conj would need -0.5i
  CHECK(defect_of(skew) == density_defect::not_hermitian);

  ComplexMatrix bad = diag({1.0, 0.0});
  bad(1, 1) = std::numeric_limits<double>::quiet_NaN();
  CHECK(defect_of(bad) == density_defect::not_finite);
}

TEST_CASE("PSD check: diagonal fast path agrees with the dense eigenvalue path") {
  // Same spectrum, one diagonal and one rotated: both must validate, and the
  // rotated copy exercises the eigensolver branch.
  const ComplexMatrix d = diag({0.6, 0.4, 0.0});
  ComplexMatrix rot(3, 3);
  const double c = std::cos(0.7), s = std::sin(0.7);
  rot << c, -s, 0, s, c, 0, 0, 0, 1;
  const ComplexMatrix rotated = rot * d * rot.adjoint();
  CHECK(!is_diagonal(rotated, 1e-9));
  CHECK(!density_defect_of(d, 1e-9).has_value());
  CHECK(!density_defect_of(rotated, 1e-9).has_value());

  const ComplexMatrix neg = diag({1.1, -0.1, 0.0});
  const ComplexMatrix neg_rotated = rot * neg * rot.adjoint();
  CHECK(density_defect_of(neg, 1e-9) == density_defect::not_psd);
  CHECK(density_defect_of(neg_rotated, 1e-9) == density_defect::not_psd);
}
