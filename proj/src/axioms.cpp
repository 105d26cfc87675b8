#include "qcvote/axioms.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace qcvote {

namespace {

std::string fmt_weight(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::vector<std::pair<int, int>> ordered_pairs(int m) {
  std::vector<std::pair<int, int>> pairs;
  for (int x = 0; x < m; ++x) {
    for (int y = 0; y < m; ++y) {
      if (x != y) pairs.emplace_back(x, y);
    }
  }
  return pairs;
}

std::string pair_label(const CandidateSet& cs, int x, int y) {
  return cs.labels.at(x) + ">" + cs.labels.at(y);
}

std::string profile_label(const ProfileState& p, const CandidateSet& cs) {
  const auto components = dephase_decompose(p);
  if (components.size() == 1 && components.front().first > 1.0 - 1e-9) {
    return components.front().second.label(cs);
  }
  std::string out;
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (i) out += " + ";
    out += fmt_weight(components[i].first) + " (" +
           components[i].second.label(cs) + ")";
  }
  return out;
}

// Everything a checker needs from one profile: per-voter reduced pair
// weights, the rule's outcome weights, and a printable label.
struct ProfileSummary {
  std::string label;
  std::vector<std::vector<double>> voter_marginals;  // [voter][pair index]
  std::vector<double> outcome;                       // [pair index]
};

ProfileSummary summarize(const ProfileState& p, const QuantumRule& rule,
                         const CandidateSet& cs,
                         const std::vector<std::pair<int, int>>& pairs) {
  ProfileSummary s;
  s.label = profile_label(p, cs);
  s.voter_marginals.resize(static_cast<std::size_t>(p.n));
  for (int v = 0; v < p.n; ++v) {
    const Ballot b = reduced_ballot(p, v);
    auto& row = s.voter_marginals[static_cast<std::size_t>(v)];
    row.reserve(pairs.size());
    for (const auto& [x, y] : pairs) row.push_back(pair_weight(b.state, x, y));
  }
  const DensityOperator out = rule(p);
  s.outcome.reserve(pairs.size());
  for (const auto& [x, y] : pairs) s.outcome.push_back(pair_weight(out, x, y));
  return s;
}

ProfileState diagonal_profile(const std::vector<std::pair<double, std::int64_t>>&
                                  weighted_indices,
                              int n, int m) {
  std::int64_t dim = 1;
  for (int v = 0; v < n; ++v) dim *= factorial(m);
  ComplexMatrix mat = ComplexMatrix::Zero(dim, dim);
  for (const auto& [w, idx] : weighted_indices) mat(idx, idx) += w;
  return ProfileState{DensityOperator::validate(std::move(mat)), n, m};
}

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// 2..4 distinct joint basis indices with normalized random weights.
ProfileState random_mixed_profile(int n, int m, std::mt19937_64& rng) {
  std::int64_t dim = 1;
  for (int v = 0; v < n; ++v) dim *= factorial(m);
  const int parts = 2 + static_cast<int>(rng() % 3);
  std::vector<std::pair<double, std::int64_t>> components;
  double total = 0.0;
  for (int c = 0; c < parts; ++c) {
    const auto idx = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(dim));
    const double w = 0.05 + uniform01(rng);
    components.emplace_back(w, idx);
    total += w;
  }
  for (auto& [w, idx] : components) w /= total;
  return diagonal_profile(components, n, m);
}

AxiomVerdict check_unanimity_impl(const std::string& axiom,
                                  const QuantumRule& rule,
                                  const ProfileFamily& family,
                                  const CandidateSet& cs, bool sharp) {
  const int m = cs.count();
  const auto pairs = ordered_pairs(m);
  AxiomVerdict verdict;
  verdict.axiom = axiom;
  verdict.notes = family.description();

  family.for_each([&](const ProfileState& p) {
    const ProfileSummary s = summarize(p, rule, cs, pairs);
    for (std::size_t pi = 0; pi < pairs.size(); ++pi) {
      ++verdict.cases_checked;
      double min_marginal = 1.0;
      for (const auto& row : s.voter_marginals) {
        min_marginal = std::min(min_marginal, row[pi]);
      }
      const bool precondition =
          sharp ? min_marginal >= kSharpThreshold
                : min_marginal > kUnsharpThreshold;
      if (!precondition) continue;
      ++verdict.cases_applicable;
      const bool ok = sharp ? s.outcome[pi] >= kSharpThreshold
                            : s.outcome[pi] > kUnsharpThreshold;
      if (!ok) {
        AxiomWitness w;
        w.profile = s.label;
        w.x = pairs[pi].first;
        w.y = pairs[pi].second;
        w.ballot_weight = min_marginal;
        w.outcome_weight = s.outcome[pi];
        w.detail = "all voters weight " + pair_label(cs, w.x, w.y) + " at " +
                   fmt_weight(min_marginal) + " but the outcome weights it at " +
                   fmt_weight(s.outcome[pi]);
        verdict.witnesses.push_back(std::move(w));
      }
    }
  });
  verdict.holds = verdict.witnesses.empty();
  return verdict;
}

AxiomVerdict check_qiia_impl(const std::string& axiom, const QuantumRule& rule,
                             const ProfilePairFamily& pair_family,
                             const CandidateSet& cs, bool sharp,
                             std::optional<std::pair<int, int>> restrict_pair) {
  const int m = cs.count();
  auto pairs = ordered_pairs(m);
  AxiomVerdict verdict;
  verdict.axiom = axiom;
  verdict.notes = pair_family.description;

  std::vector<std::size_t> pair_indices;
  for (std::size_t pi = 0; pi < pairs.size(); ++pi) {
    if (!restrict_pair || pairs[pi] == *restrict_pair) pair_indices.push_back(pi);
  }

  // The reverse direction of each ordered pair, for the (y,x) half of the
  // matching precondition.
  std::vector<std::size_t> reverse_of(pairs.size());
  for (std::size_t pi = 0; pi < pairs.size(); ++pi) {
    for (std::size_t qi = 0; qi < pairs.size(); ++qi) {
      if (pairs[qi].first == pairs[pi].second &&
          pairs[qi].second == pairs[pi].first) {
        reverse_of[pi] = qi;
      }
    }
  }

  std::vector<ProfileSummary> summaries;
  pair_family.base.for_each([&](const ProfileState& p) {
    summaries.push_back(summarize(p, rule, cs, pairs));
  });

  auto matched = [&](const ProfileSummary& a, const ProfileSummary& b,
                     std::size_t pi) {
    const std::size_t qi = reverse_of[pi];
    for (std::size_t v = 0; v < a.voter_marginals.size(); ++v) {
      if (std::abs(a.voter_marginals[v][pi] - b.voter_marginals[v][pi]) > 1e-9)
        return false;
      if (std::abs(a.voter_marginals[v][qi] - b.voter_marginals[v][qi]) > 1e-9)
        return false;
    }
    return true;
  };

  auto scan = [&](const ProfileSummary& a, const ProfileSummary& b) {
    for (std::size_t pi : pair_indices) {
      ++verdict.cases_checked;
      if (a.voter_marginals.size() != b.voter_marginals.size()) continue;
      if (!matched(a, b, pi)) continue;
      ++verdict.cases_applicable;
      const bool antecedent = sharp ? a.outcome[pi] >= kSharpThreshold
                                    : a.outcome[pi] > kUnsharpThreshold;
      if (!antecedent) continue;
      const bool consequent = sharp ? b.outcome[pi] >= kSharpThreshold
                                    : b.outcome[pi] > kUnsharpThreshold;
      if (!consequent) {
        AxiomWitness w;
        w.profile = a.label;
        w.profile_b = b.label;
        w.x = pairs[pi].first;
        w.y = pairs[pi].second;
        w.outcome_weight = a.outcome[pi];
        w.outcome_weight_b = b.outcome[pi];
        w.detail = "profiles are similar on " + pair_label(cs, w.x, w.y) +
                   " but outcomes weight it at " + fmt_weight(a.outcome[pi]) +
                   " vs " + fmt_weight(b.outcome[pi]);
        verdict.witnesses.push_back(std::move(w));
      }
    }
  };

  if (pair_family.pairs.empty()) {
    for (const auto& a : summaries) {
      for (const auto& b : summaries) scan(a, b);
    }
  } else {
    for (const auto& [i, j] : pair_family.pairs) {
      scan(summaries.at(i), summaries.at(j));
    }
  }
  verdict.holds = verdict.witnesses.empty();
  return verdict;
}

}  // namespace

std::string AxiomVerdict::summary(const CandidateSet&) const {
  std::string out = axiom + ": " + (holds ? "HOLDS" : "VIOLATED") +
                    " (cases=" + std::to_string(cases_checked) +
                    ", applicable=" + std::to_string(cases_applicable) +
                    ", witnesses=" + std::to_string(witnesses.size()) + ")";
  return out;
}

std::uint64_t ProfileFamily::size() const {
  switch (kind) {
    case Kind::exhaustive_basis: {
      std::uint64_t count = 1;
      for (int v = 0; v < n; ++v) count *= static_cast<std::uint64_t>(factorial(m));
      return count;
    }
    case Kind::random_mixed:
      return static_cast<std::uint64_t>(sample_count);
    case Kind::explicit_list:
      return profiles.size();
  }
  return 0;
}

std::string ProfileFamily::description() const {
  switch (kind) {
    case Kind::exhaustive_basis:
      return "exhaustive-basis(n=" + std::to_string(n) +
             ", m=" + std::to_string(m) + ")";
    case Kind::random_mixed:
      return "random-mixed(n=" + std::to_string(n) + ", m=" + std::to_string(m) +
             ", count=" + std::to_string(sample_count) +
             ", seed=" + std::to_string(seed) + ")";
    case Kind::explicit_list:
      return "explicit(" + std::to_string(profiles.size()) + " profiles)";
  }
  return "";
}

void ProfileFamily::for_each(
    const std::function<void(const ProfileState&)>& fn) const {
  switch (kind) {
    case Kind::exhaustive_basis: {
      const std::uint64_t count = size();
      for (std::uint64_t i = 0; i < count; ++i) {
        fn(profile_state(
            basis_profile_from_joint_index(static_cast<std::int64_t>(i), n, m)));
      }
      return;
    }
    case Kind::random_mixed: {
      std::mt19937_64 rng = seeded_rng(seed, "random-mixed-family");
      for (int i = 0; i < sample_count; ++i) {
        fn(random_mixed_profile(n, m, rng));
      }
      return;
    }
    case Kind::explicit_list: {
      for (const auto& p : profiles) fn(p);
      return;
    }
  }
}

ProfileFamily exhaustive_basis_family(int n, int m) {
  if (n < 2 || m < 2) throw argument_error("family needs n >= 2, m >= 2");
  std::uint64_t count = 1;
  for (int v = 0; v < n; ++v) count *= static_cast<std::uint64_t>(factorial(m));
  if (count > 1000000) {
    throw argument_error("exhaustive family of " + std::to_string(count) +
                         " profiles is too large");
  }
  ProfileFamily f;
  f.kind = ProfileFamily::Kind::exhaustive_basis;
  f.n = n;
  f.m = m;
  return f;
}

ProfileFamily random_mixed_family(int n, int m, int count, std::uint64_t seed) {
  if (n < 2 || m < 2) throw argument_error("family needs n >= 2, m >= 2");
  ProfileFamily f;
  f.kind = ProfileFamily::Kind::random_mixed;
  f.n = n;
  f.m = m;
  f.sample_count = count;
  f.seed = seed;
  return f;
}

ProfileFamily explicit_family(std::vector<ProfileState> profiles) {
  if (profiles.empty()) throw argument_error("explicit family is empty");
  ProfileFamily f;
  f.kind = ProfileFamily::Kind::explicit_list;
  f.n = profiles.front().n;
  f.m = profiles.front().m;
  f.profiles = std::move(profiles);
  return f;
}

std::uint64_t ProfilePairFamily::pair_count() const {
  if (!pairs.empty()) return pairs.size();
  return base.size() * base.size();
}

ProfilePairFamily similar_profile_pairs(const ProfileFamily& family,
                                        PairingStrategy strategy,
                                        std::uint64_t seed) {
  if (strategy == PairingStrategy::all_ordered_pairs) {
    ProfilePairFamily pf;
    pf.base = family;
    pf.description = "all ordered pairs of " + family.description();
    return pf;
  }

  // Matched mixtures: for each generated pair, fix a candidate pair (x,y)
  // and rebuild the second mixture by replacing every voter order with a
  // random order of the same (x,y) direction. Per-voter (x,y)/(y,x)
  // marginals agree exactly by construction.
  const int n = family.n;
  const int m = family.m;
  const int count = family.sample_count > 0 ? family.sample_count : 200;
  const auto pairs = ordered_pairs(m);
  std::mt19937_64 rng = seeded_rng(seed, "matched-mixtures");
  const std::int64_t dim_single = factorial(m);

  auto same_direction_order = [&](const LinearOrder& o, int x, int y) {
    const bool dir = o.ranks_above(x, y);
    for (int tries = 0; tries < 64; ++tries) {
      const auto idx =
          static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(dim_single));
      LinearOrder cand = index_to_order(idx, m);
      if (cand.ranks_above(x, y) == dir) return cand;
    }
    return o;
  };

  std::vector<ProfileState> profiles;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> index_pairs;
  for (int k = 0; k < count; ++k) {
    const auto [x, y] = pairs[static_cast<std::size_t>(k) % pairs.size()];
    const int parts = 2 + static_cast<int>(rng() % 2);
    std::vector<std::pair<double, std::int64_t>> a_parts, b_parts;
    double total = 0.0;
    for (int c = 0; c < parts; ++c) {
      std::vector<LinearOrder> a_orders, b_orders;
      for (int v = 0; v < n; ++v) {
        LinearOrder o = index_to_order(
            static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(dim_single)),
            m);
        a_orders.push_back(o);
        b_orders.push_back(same_direction_order(o, x, y));
      }
      const double w = 0.05 + uniform01(rng);
      a_parts.emplace_back(w, joint_basis_index(BasisProfile{a_orders}));
      b_parts.emplace_back(w, joint_basis_index(BasisProfile{b_orders}));
      total += w;
    }
    for (auto& [w, idx] : a_parts) w /= total;
    for (auto& [w, idx] : b_parts) w /= total;
    profiles.push_back(diagonal_profile(a_parts, n, m));
    profiles.push_back(diagonal_profile(b_parts, n, m));
    index_pairs.emplace_back(2 * k, 2 * k + 1);
  }

  ProfilePairFamily pf;
  pf.base = explicit_family(std::move(profiles));
  pf.pairs = std::move(index_pairs);
  pf.description = "matched-mixtures(n=" + std::to_string(n) +
                   ", m=" + std::to_string(m) + ", pairs=" +
                   std::to_string(count) + ", seed=" + std::to_string(seed) + ")";
  return pf;
}

bool similar_by_weight(const ProfileState& a, const ProfileState& b, int x,
                       int y, double tol) {
  if (a.n != b.n || a.m != b.m) return false;
  for (int v = 0; v < a.n; ++v) {
    const Ballot ba = reduced_ballot(a, v);
    const Ballot bb = reduced_ballot(b, v);
    if (std::abs(pair_weight(ba.state, x, y) - pair_weight(bb.state, x, y)) >
        tol)
      return false;
    if (std::abs(pair_weight(ba.state, y, x) - pair_weight(bb.state, y, x)) >
        tol)
      return false;
  }
  return true;
}

bool similar_by_support(const ProfileState& a, const ProfileState& b, int x,
                        int y, double eps) {
  if (a.n != b.n || a.m != b.m) return false;
  for (int v = 0; v < a.n; ++v) {
    const Ballot ba = reduced_ballot(a, v);
    const Ballot bb = reduced_ballot(b, v);
    if ((pair_weight(ba.state, x, y) > eps) !=
        (pair_weight(bb.state, x, y) > eps))
      return false;
    if ((pair_weight(ba.state, y, x) > eps) !=
        (pair_weight(bb.state, y, x) > eps))
      return false;
  }
  return true;
}

AxiomVerdict check_sharp_unanimity(const QuantumRule& rule,
                                   const ProfileFamily& family,
                                   const CandidateSet& cs) {
  return check_unanimity_impl("sharp-unanimity", rule, family, cs, true);
}

AxiomVerdict check_unsharp_unanimity(const QuantumRule& rule,
                                     const ProfileFamily& family,
                                     const CandidateSet& cs) {
  return check_unanimity_impl("unsharp-unanimity", rule, family, cs, false);
}

AxiomVerdict check_sharp_qiia(const QuantumRule& rule,
                              const ProfilePairFamily& pairs,
                              const CandidateSet& cs,
                              std::optional<std::pair<int, int>> restrict_pair) {
  return check_qiia_impl("sharp-qiia", rule, pairs, cs, true, restrict_pair);
}

AxiomVerdict check_unsharp_qiia(const QuantumRule& rule,
                                const ProfilePairFamily& pairs,
                                const CandidateSet& cs,
                                std::optional<std::pair<int, int>>
                                    restrict_pair) {
  return check_qiia_impl("unsharp-qiia", rule, pairs, cs, false, restrict_pair);
}

AxiomVerdict check_dictatorship(const QuantumRule& rule,
                                const ProfileFamily& family,
                                const CandidateSet& cs, DictatorshipMode mode) {
  const int m = cs.count();
  const auto pairs = ordered_pairs(m);
  const bool scan_sharp = mode != DictatorshipMode::unsharp;
  const bool scan_unsharp = mode != DictatorshipMode::sharp;

  AxiomVerdict verdict;
  verdict.axiom = mode == DictatorshipMode::sharp     ? "sharp-dictatorship"
                  : mode == DictatorshipMode::unsharp ? "unsharp-dictatorship"
                                                      : "quantum-dictatorship";
  verdict.notes = family.description();

  std::vector<ProfileSummary> summaries;
  family.for_each([&](const ProfileState& p) {
    summaries.push_back(summarize(p, rule, cs, pairs));
  });
  const int n = summaries.empty()
                    ? 0
                    : static_cast<int>(summaries.front().voter_marginals.size());

  std::vector<AxiomWitness> violations;
  int surviving_voter = -1;
  for (int v = 0; v < n; ++v) {
    std::optional<AxiomWitness> sharp_witness, unsharp_witness;
    for (const auto& s : summaries) {
      for (std::size_t pi = 0; pi < pairs.size(); ++pi) {
        verdict.cases_checked += 1;
        const double marginal = s.voter_marginals[static_cast<std::size_t>(v)][pi];
        const double outcome = s.outcome[pi];
        if (scan_sharp && !sharp_witness &&
            (marginal >= kSharpThreshold) != (outcome >= kSharpThreshold)) {
          AxiomWitness w;
          w.profile = s.label;
          w.x = pairs[pi].first;
          w.y = pairs[pi].second;
          w.voter = v;
          w.ballot_weight = marginal;
          w.outcome_weight = outcome;
          w.detail = "sharp violation: voter ballot weights " +
                     pair_label(cs, w.x, w.y) + " at " + fmt_weight(marginal) +
                     ", outcome at " + fmt_weight(outcome);
          sharp_witness = std::move(w);
        }
        if (scan_unsharp && !unsharp_witness &&
            (marginal > kUnsharpThreshold) != (outcome > kUnsharpThreshold)) {
          AxiomWitness w;
          w.profile = s.label;
          w.x = pairs[pi].first;
          w.y = pairs[pi].second;
          w.voter = v;
          w.ballot_weight = marginal;
          w.outcome_weight = outcome;
          w.detail = "unsharp violation: voter ballot weights " +
                     pair_label(cs, w.x, w.y) + " at " + fmt_weight(marginal) +
                     ", outcome at " + fmt_weight(outcome);
          unsharp_witness = std::move(w);
        }
      }
    }
    const bool violated = (scan_sharp && sharp_witness.has_value()) ||
                          (scan_unsharp && unsharp_witness.has_value());
    if (!violated) {
      if (surviving_voter < 0) surviving_voter = v;
    } else {
      if (sharp_witness) violations.push_back(std::move(*sharp_witness));
      if (unsharp_witness) violations.push_back(std::move(*unsharp_witness));
    }
  }
  verdict.cases_applicable = verdict.cases_checked;

  if (surviving_voter >= 0) {
    verdict.holds = true;
    verdict.notes += "; no violation found in family (dictator candidate: voter " +
                     std::to_string(surviving_voter) + ")";
  } else {
    verdict.holds = false;
    verdict.witnesses = std::move(violations);
  }
  return verdict;
}

std::vector<AxiomVerdict> check_classical_axioms(const ClassicalSwf& swf,
                                                 int n, int m,
                                                 const CandidateSet& cs) {
  if (n < 2 || m < 2) throw argument_error("classical check needs n, m >= 2");
  std::uint64_t count = 1;
  for (int v = 0; v < n; ++v) {
    count *= static_cast<std::uint64_t>(factorial(m));
    if (count > 1000000) {
      throw argument_error("classical enumeration of (m!)^n profiles exceeds 10^6");
    }
  }
  const auto pairs = ordered_pairs(m);
  if (count * count * pairs.size() > 400000000ull) {
    throw argument_error("classical IIA pair enumeration too large");
  }

  // Precompute, per profile: society's order, and per candidate pair the
  // bitmask of voters ranking x above y.
  std::vector<std::int64_t> society(count);
  std::vector<std::vector<std::uint32_t>> masks(
      count, std::vector<std::uint32_t>(pairs.size(), 0));
  std::vector<BasisProfile> basis(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    basis[i] = basis_profile_from_joint_index(static_cast<std::int64_t>(i), n, m);
    society[i] = order_to_index(swf(basis[i].classical()));
    for (std::size_t pi = 0; pi < pairs.size(); ++pi) {
      for (int v = 0; v < n; ++v) {
        if (basis[i].orders[static_cast<std::size_t>(v)].ranks_above(
                pairs[pi].first, pairs[pi].second)) {
          masks[i][pi] |= (1u << v);
        }
      }
    }
  }
  const std::uint32_t full_mask = (n == 32) ? ~0u : ((1u << n) - 1);
  auto society_ranks = [&](std::uint64_t i, std::size_t pi) {
    return index_to_order(society[i], m)
        .ranks_above(pairs[pi].first, pairs[pi].second);
  };

  constexpr std::size_t kMaxWitnesses = 25;

  AxiomVerdict unanimity;
  unanimity.axiom = "classical-unanimity";
  for (std::uint64_t i = 0; i < count; ++i) {
    for (std::size_t pi = 0; pi < pairs.size(); ++pi) {
      ++unanimity.cases_checked;
      if (masks[i][pi] != full_mask) continue;
      ++unanimity.cases_applicable;
      if (!society_ranks(i, pi) &&
          unanimity.witnesses.size() < kMaxWitnesses) {
        AxiomWitness w;
        w.profile = basis[i].label(cs);
        w.x = pairs[pi].first;
        w.y = pairs[pi].second;
        w.detail = "all voters rank " + pair_label(cs, w.x, w.y) +
                   " but society ranks " + pair_label(cs, w.y, w.x);
        unanimity.witnesses.push_back(std::move(w));
      }
    }
  }
  unanimity.holds = unanimity.witnesses.empty();

  AxiomVerdict iia;
  iia.axiom = "classical-iia";
  bool iia_truncated = false;
  for (std::uint64_t i = 0; i < count; ++i) {
    for (std::uint64_t j = 0; j < count; ++j) {
      for (std::size_t pi = 0; pi < pairs.size(); ++pi) {
        ++iia.cases_checked;
        if (masks[i][pi] != masks[j][pi]) continue;
        ++iia.cases_applicable;
        const bool ri = society_ranks(i, pi);
        const bool rj = society_ranks(j, pi);
        if (ri != rj) {
          if (iia.witnesses.size() < kMaxWitnesses) {
            AxiomWitness w;
            w.profile = basis[i].label(cs);
            w.profile_b = basis[j].label(cs);
            w.x = pairs[pi].first;
            w.y = pairs[pi].second;
            w.detail = "same voters rank " + pair_label(cs, w.x, w.y) +
                       " in both profiles, but society ranks it " +
                       (ri ? "true" : "false") + " vs " + (rj ? "true" : "false");
            iia.witnesses.push_back(std::move(w));
          } else {
            iia_truncated = true;
          }
        }
      }
    }
  }
  iia.holds = iia.witnesses.empty();
  if (iia_truncated) {
    iia.notes = "witness list truncated at " + std::to_string(kMaxWitnesses);
  }

  AxiomVerdict dictatorship;
  dictatorship.axiom = "classical-dictatorship";
  int surviving = -1;
  for (int v = 0; v < n; ++v) {
    std::optional<AxiomWitness> witness;
    for (std::uint64_t i = 0; i < count; ++i) {
      ++dictatorship.cases_checked;
      const std::int64_t voter_order =
          order_to_index(basis[i].orders[static_cast<std::size_t>(v)]);
      if (society[i] != voter_order && !witness) {
        AxiomWitness w;
        w.profile = basis[i].label(cs);
        w.voter = v;
        w.detail = "society order differs from voter " + std::to_string(v) +
                   "'s ballot";
        witness = std::move(w);
      }
    }
    if (!witness) {
      if (surviving < 0) surviving = v;
    } else if (dictatorship.witnesses.size() < kMaxWitnesses) {
      dictatorship.witnesses.push_back(std::move(*witness));
    }
  }
  dictatorship.cases_applicable = dictatorship.cases_checked;
  if (surviving >= 0) {
    dictatorship.holds = true;
    dictatorship.witnesses.clear();
    dictatorship.notes = "no violation found in family (dictator: voter " +
                         std::to_string(surviving) + ")";
  } else {
    dictatorship.holds = false;
  }

  return {std::move(unanimity), std::move(iia), std::move(dictatorship)};
}

bool axiom_expected_to_hold(std::string_view axiom) {
  return axiom == "sharp-unanimity" || axiom == "unsharp-unanimity" ||
         axiom == "sharp-qiia" || axiom == "unsharp-qiia" ||
         axiom == "classical-unanimity";
}

bool is_known_axiom(std::string_view axiom) {
  const auto names = known_axioms();
  return std::find(names.begin(), names.end(), axiom) != names.end();
}

std::vector<std::string> known_axioms() {
  return {"sharp-unanimity",      "unsharp-unanimity",
          "sharp-qiia",           "unsharp-qiia",
          "sharp-dictatorship",   "unsharp-dictatorship",
          "classical-unanimity",  "classical-iia",
          "classical-dictatorship"};
}

}  // namespace qcvote
