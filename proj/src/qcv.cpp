#include "qcvote/qcv.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace qcvote {

void validate_params(const QcvParams& params, int m) {
  const double bound = 1.0 / (static_cast<double>(m) * m);
  if (!(params.delta > 0.0) || !(params.delta < bound)) {
    throw argument_error("delta must lie in (0, 1/m^2) = (0, " +
                         std::to_string(bound) + "), got " +
                         std::to_string(params.delta));
  }
  if (!(params.tolerance > 0.0)) {
    throw argument_error("tolerance must be positive");
  }
}

std::pair<DensityOperator, QcvTrace> qcv_basis(const BasisProfile& b,
                                               const QcvParams& params) {
  const int m = b.candidate_count();
  const int n = b.voter_count();
  validate_params(params, m);
  if (n < 2) throw argument_error("qcv needs >= 2 voters");

  const ClassicalProfile classical = b.classical();
  const std::int64_t dim = factorial(m);

  // Steps 1-3: Condorcet scores, the induced weak order, its extensions.
  std::vector<int> scores = condorcet_scores(classical);
  WeakOrder weak = weak_order_from_scores(scores);
  std::vector<LinearOrder> extensions = linear_extensions(weak);

  // Step 4: uniform mixture over the extensions.
  ComplexMatrix sigma1 = ComplexMatrix::Zero(dim, dim);
  for (const auto& ext : extensions) {
    sigma1(order_to_index(ext), order_to_index(ext)) +=
        1.0 / static_cast<double>(extensions.size());
  }

  // Step 5: minority shot. Every pair direction some voter encodes receives
  // delta of probability weight, spread uniformly over its subspace
  // (Pi / rank is the maximally mixed state there).
  std::vector<std::pair<int, int>> minority;
  std::vector<std::pair<int, int>> unanimous;
  for (int x = 0; x < m; ++x) {
    for (int y = 0; y < m; ++y) {
      if (x == y) continue;
      int supporters = pairwise_tally(classical, x, y);
      if (supporters >= 1) minority.emplace_back(x, y);
      if (supporters == n) unanimous.emplace_back(x, y);
    }
  }
  const double k = static_cast<double>(minority.size());
  ComplexMatrix sigma2 = (1.0 - k * params.delta) * sigma1;
  for (const auto& [x, y] : minority) {
    const PairProjector proj = pair_projector(m, x, y);
    sigma2 += (params.delta / static_cast<double>(proj.rank())) * proj.matrix;
  }

  // Step 6: unanimity enforcement. Project onto every unanimously encoded
  // pair subspace (the projectors are diagonal and commute; sorted pair
  // order is used), then renormalize.
  ComplexMatrix enforced = sigma2;
  for (const auto& [x, y] : unanimous) {
    const PairProjector proj = pair_projector(m, x, y);
    enforced = conjugate_by_projector(proj.matrix, enforced);
  }
  const double renorm = trace(enforced).real();
  if (renorm < 1e-12) {
    throw numeric_error("unanimity projection left trace " +
                        std::to_string(renorm) + "; state is degenerate");
  }
  ComplexMatrix sigma3 = enforced / renorm;

  DensityOperator out = DensityOperator::validate(sigma3, params.tolerance);
  QcvTrace trace_record{
      std::move(scores),
      std::move(weak),
      std::move(extensions),
      DensityOperator::validate(std::move(sigma1), params.tolerance),
      DensityOperator::validate(std::move(sigma2), params.tolerance),
      out,
      std::move(minority),
      std::move(unanimous),
      renorm,
  };
  return {std::move(out), std::move(trace_record)};
}

DensityOperator qcv(const ProfileState& p, const QcvParams& params) {
  validate_params(params, p.m);
  const std::int64_t dim = factorial(p.m);
  ComplexMatrix sum = ComplexMatrix::Zero(dim, dim);
  double total = 0.0;
  for (const auto& [weight, component] : dephase_decompose(p)) {
    sum += weight * qcv_basis(component, params).first.matrix();
    total += weight;
  }
  // The diagonal of a density operator sums to 1, so total is 1 up to the
  // dephasing cutoff; renormalize away the cutoff residue.
  sum /= total;
  return DensityOperator::validate(std::move(sum), params.tolerance);
}

std::pair<LinearOrder, double> measure_outcome(const DensityOperator& d,
                                               std::mt19937_64& rng) {
  const int m = candidate_count_for_dim(d.dim());
  std::vector<double> probs(static_cast<std::size_t>(d.dim()));
  double total = 0.0;
  for (Eigen::Index i = 0; i < d.dim(); ++i) {
    probs[static_cast<std::size_t>(i)] = std::max(0.0, d.matrix()(i, i).real());
    total += probs[static_cast<std::size_t>(i)];
  }
  // 53-bit uniform in [0,1); fully determined by the engine stream.
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53 * total;
  double cumulative = 0.0;
  Eigen::Index drawn = d.dim() - 1;
  for (Eigen::Index i = 0; i < d.dim(); ++i) {
    cumulative += probs[static_cast<std::size_t>(i)];
    if (u < cumulative) {
      drawn = i;
      break;
    }
  }
  return {index_to_order(drawn, m), d.matrix()(drawn, drawn).real()};
}

std::mt19937_64 seeded_rng(std::uint64_t seed, std::string_view purpose) {
  // FNV-1a over the purpose string splits independent streams off one seed.
  std::uint64_t h = 14695981039346656037ull;
  for (char c : purpose) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(h),
                    static_cast<std::uint32_t>(h >> 32)};
  return std::mt19937_64(seq);
}

}  // namespace qcvote
