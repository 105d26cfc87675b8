#include <doctest.h>

#include <array>
#include <cmath>
#include <map>

#include "qcvote/qcv.hpp"
#include "test_helpers.hpp"

using namespace qcvote;

namespace {

LinearOrder order(std::initializer_list<int> ranking) {
  return make_order(std::vector<int>(ranking));
}

BasisProfile cycle_profile() {
  return BasisProfile{{order({0, 1, 2}), order({1, 2, 0}), order({2, 0, 1})}};
}

BasisProfile unanimous_xyz() {
  return BasisProfile{{order({0, 1, 2}), order({0, 1, 2}), order({0, 1, 2})}};
}

// Straight-line recomputation of the channel on the profile
// (x>y>z, x>y>z, x>z>y): plain arrays, no library calls. The six basis
// orders in index order are xyz, xzy, yxz, yzx, zxy, zyx.
std::array<double, 6> handcheck_oracle(double delta) {
  // Which of the 6 orders rank a above b, as diagonal 0/1 masks.
  const std::array<double, 6> xy = {1, 1, 0, 0, 1, 0};
  const std::array<double, 6> xz = {1, 1, 1, 0, 0, 0};
  const std::array<double, 6> yz = {1, 0, 1, 1, 0, 0};
  const std::array<double, 6> zy = {0, 1, 0, 0, 1, 1};

  // Scores: x beats y 3-0 and z 3-0 -> 2; y beats z 2-1 -> 1; z -> 0.
  // Strict weak order, single extension xyz: sigma1 = |xyz><xyz|.
  std::array<double, 6> sigma1 = {1, 0, 0, 0, 0, 0};

  // Pairs encoded by at least one voter: xy, xz, yz, zy. k = 4, rank 3.
  std::array<double, 6> sigma2{};
  for (int i = 0; i < 6; ++i) {
    sigma2[i] = (1 - 4 * delta) * sigma1[i] +
                delta / 3 * (xy[i] + xz[i] + yz[i] + zy[i]);
  }

  // Pairs encoded by all voters: xy, xz. Project onto both subspaces.
  std::array<double, 6> sigma3{};
  double renorm = 0;
  for (int i = 0; i < 6; ++i) {
    sigma3[i] = sigma2[i] * xy[i] * xz[i];
    renorm += sigma3[i];
  }
  for (int i = 0; i < 6; ++i) sigma3[i] /= renorm;
  return sigma3;
}

}  // namespace

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(validate_params(QcvParams{0.2, 1e-9}, 3), argument_error);
  CHECK_THROWS_AS(validate_params(QcvParams{0.0, 1e-9}, 3), argument_error);
  CHECK_THROWS_AS(validate_params(QcvParams{0.05, 0.0}, 3), argument_error);
  CHECK_NOTHROW(validate_params(QcvParams{0.05, 1e-9}, 3));
  CHECK_NOTHROW(validate_params(QcvParams{0.24, 1e-9}, 2));
}

TEST_CASE("cycle profile yields the uniform state for any admissible delta") {
  const ComplexMatrix uniform = ComplexMatrix::Identity(6, 6) / 6.0;
  for (double delta : {0.01, 0.05, 0.1}) {
    auto [out, trace_record] = qcv_basis(cycle_profile(), QcvParams{delta, 1e-9});
    CHECK((out.matrix() - uniform).cwiseAbs().maxCoeff() <= 1e-12);
    CHECK(pair_weight(out, 0, 1) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(trace_record.extensions.size() == 6);
    CHECK(trace_record.minority_pairs.size() == 6);
    CHECK(trace_record.unanimous_pairs.empty());
    CHECK(trace_record.renormalization_factor ==
          doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("unanimous profile yields the pure ballot exactly") {
  auto [out, trace_record] = qcv_basis(unanimous_xyz(), QcvParams{0.05, 1e-9});
  ComplexMatrix expected = ComplexMatrix::Zero(6, 6);
  expected(0, 0) = 1.0;
  CHECK((out.matrix() - expected).cwiseAbs().maxCoeff() <= 1e-12);
  CHECK(pair_weight(out, 0, 1) == 1.0);
  CHECK(trace_record.unanimous_pairs.size() == 3);
  // The projection removes 2*delta of weight: sigma2 holds 1-2delta at xyz.
  CHECK(trace_record.renormalization_factor ==
        doctest::Approx(1.0 - 2 * 0.05).epsilon(1e-12));
}

TEST_CASE("near-unanimous profile matches the straight-line oracle") {
  const BasisProfile profile{
      {order({0, 1, 2}), order({0, 1, 2}), order({0, 2, 1})}};
  const double delta = 0.05;
  auto [out, trace_record] = qcv_basis(profile, QcvParams{delta, 1e-9});

  const auto expected = handcheck_oracle(delta);
  for (int i = 0; i < 6; ++i) {
    CHECK(out.matrix()(i, i).real() ==
          doctest::Approx(expected[static_cast<std::size_t>(i)]).epsilon(1e-12));
  }
  // Frozen values: (1-3d)/(1-2d) and d/(1-2d) at delta = 0.05.
  CHECK(out.matrix()(0, 0).real() ==
        doctest::Approx(0.944444444444444).epsilon(1e-12));
  CHECK(out.matrix()(1, 1).real() ==
        doctest::Approx(0.055555555555556).epsilon(1e-11));
  CHECK(pair_weight(out, 1, 2) == doctest::Approx(0.85 / 0.9).epsilon(1e-10));
  CHECK(pair_weight(out, 2, 1) == doctest::Approx(0.05 / 0.9).epsilon(1e-10));
}

TEST_CASE("qcv on a basis profile equals qcv_basis") {
  const BasisProfile b = cycle_profile();
  const QcvParams params{0.05, 1e-9};
  const DensityOperator via_state = qcv(profile_state(b), params);
  const DensityOperator direct = qcv_basis(b, params).first;
  CHECK((via_state.matrix() - direct.matrix()).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("qcv is convex-linear over dephased components") {
  const QcvParams params{0.05, 1e-9};
  const ProfileState cyc = profile_state(cycle_profile());
  const ProfileState una = profile_state(unanimous_xyz());
  const ComplexMatrix mix = 0.5 * cyc.state.matrix() + 0.5 * una.state.matrix();
  const ProfileState mixed{DensityOperator::validate(mix), 3, 3};

  const ComplexMatrix expected = 0.5 * qcv(cyc, params).matrix() +
                                 0.5 * qcv(una, params).matrix();
  const DensityOperator got = qcv(mixed, params);
  CHECK((got.matrix() - expected).cwiseAbs().maxCoeff() <= 1e-9);
  CHECK(pair_weight(got, 0, 1) == doctest::Approx(0.75).epsilon(1e-9));
}

TEST_CASE("qcv output is diagonal and a valid density operator") {
  auto rng = seeded_rng(53, "qcv-diag");
  for (std::int64_t joint = 0; joint < 216; joint += 7) {
    const BasisProfile b = basis_profile_from_joint_index(joint, 3, 3);
    const DensityOperator out = qcv_basis(b, QcvParams{0.05, 1e-9}).first;
    for (Eigen::Index i = 0; i < 6; ++i) {
      for (Eigen::Index j = 0; j < 6; ++j) {
        if (i != j) CHECK(std::abs(out.matrix()(i, j)) <= 1e-12);
      }
    }
    CHECK(!density_defect_of(out.matrix(), 1e-9).has_value());
  }
  (void)rng;
}

TEST_CASE("qcv is anonymous and neutral") {
  const QcvParams params{0.05, 1e-9};
  auto rng = seeded_rng(59, "qcv-sym");
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<LinearOrder> orders;
    for (int v = 0; v < 3; ++v) {
      orders.push_back(index_to_order(static_cast<std::int64_t>(rng() % 6), 3));
    }
    const DensityOperator base = qcv_basis(BasisProfile{orders}, params).first;

    // Anonymity: rotating the voters leaves the output unchanged.
    std::vector<LinearOrder> rotated = orders;
    std::rotate(rotated.begin(), rotated.begin() + 1, rotated.end());
    const DensityOperator anon = qcv_basis(BasisProfile{rotated}, params).first;
    CHECK((anon.matrix() - base.matrix()).cwiseAbs().maxCoeff() <= 1e-12);

    // Neutrality: relabeling candidates by sigma conjugates the output by
    // the induced basis permutation.
    const LinearOrder sigma =
        index_to_order(static_cast<std::int64_t>(rng() % 6), 3);
    std::vector<LinearOrder> relabeled;
    for (const auto& o : orders) {
      std::vector<int> r;
      for (int c : o.ranking) {
        r.push_back(sigma.ranking[static_cast<std::size_t>(c)]);
      }
      relabeled.push_back(make_order(std::move(r)));
    }
    const DensityOperator perm = qcv_basis(BasisProfile{relabeled}, params).first;

    ComplexMatrix basis_perm = ComplexMatrix::Zero(6, 6);
    for (std::int64_t i = 0; i < 6; ++i) {
      std::vector<int> mapped;
      for (int c : index_to_order(i, 3).ranking) {
        mapped.push_back(sigma.ranking[static_cast<std::size_t>(c)]);
      }
      basis_perm(order_to_index(make_order(std::move(mapped))), i) = 1.0;
    }
    const ComplexMatrix expected =
        basis_perm * base.matrix() * basis_perm.adjoint();
    CHECK((perm.matrix() - expected).cwiseAbs().maxCoeff() <= 1e-12);
  }
}

TEST_CASE("measurement outcomes") {
  auto rng = seeded_rng(61, "measure");

  const DensityOperator pure = basis_ballot(order({0, 1, 2})).state;
  for (int i = 0; i < 20; ++i) {
    const auto [o, prob] = measure_outcome(pure, rng);
    CHECK(o == order({0, 1, 2}));
    CHECK(prob == 1.0);
  }

  const DensityOperator uniform =
      DensityOperator::validate(ComplexMatrix::Identity(6, 6) / 6.0);
  std::map<std::int64_t, int> counts;
  const int shots = 60000;
  for (int i = 0; i < shots; ++i) {
    const auto [o, prob] = measure_outcome(uniform, rng);
    CHECK(prob == doctest::Approx(1.0 / 6).epsilon(1e-12));
    ++counts[order_to_index(o)];
  }
  for (std::int64_t i = 0; i < 6; ++i) {
    const double freq = static_cast<double>(counts[i]) / shots;
    CHECK(std::abs(freq - 1.0 / 6) <= 0.01);
  }

  // The reported probability always equals the diagonal entry.
  ComplexMatrix skewed = ComplexMatrix::Zero(6, 6);
  skewed(0, 0) = 0.7;
  skewed(3, 3) = 0.3;
  const DensityOperator d = DensityOperator::validate(skewed);
  for (int i = 0; i < 50; ++i) {
    const auto [o, prob] = measure_outcome(d, rng);
    CHECK(prob == d.matrix()(order_to_index(o), order_to_index(o)).real());
  }
}

TEST_CASE("measurement streams are reproducible per seed") {
  const DensityOperator uniform =
      DensityOperator::validate(ComplexMatrix::Identity(6, 6) / 6.0);
  auto a = seeded_rng(99, "repro");
  auto b = seeded_rng(99, "repro");
  for (int i = 0; i < 100; ++i) {
    CHECK(measure_outcome(uniform, a).first == measure_outcome(uniform, b).first);
  }
  // Distinct purposes split distinct streams.
  auto c = seeded_rng(99, "other");
  bool any_difference = false;
  auto a2 = seeded_rng(99, "repro");
  for (int i = 0; i < 100; ++i) {
    if (measure_outcome(uniform, a2).first != measure_outcome(uniform, c).first) {
      any_difference = true;
    }
  }
  CHECK(any_difference);
}

TEST_CASE("smallest legal instance m=2, n=2") {
  const BasisProfile opposed{{order({0, 1}), order({1, 0})}};
  auto [out, trace_record] = qcv_basis(opposed, QcvParams{0.2, 1e-9});
  // Tied scores, both extensions, no unanimous pair: the uniform state.
  CHECK((out.matrix() - ComplexMatrix::Identity(2, 2) / 2.0)
            .cwiseAbs()
            .maxCoeff() <= 1e-12);

  const BasisProfile agreed{{order({0, 1}), order({0, 1})}};
  auto [out2, trace2] = qcv_basis(agreed, QcvParams{0.2, 1e-9});
  CHECK(out2.matrix()(0, 0).real() == doctest::Approx(1.0).epsilon(1e-12));
}
