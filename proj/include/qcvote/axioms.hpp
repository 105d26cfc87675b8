#pragma once

// Mechanical axiom checkers. Each produces an AxiomVerdict: pass/fail, the
// number of cases scanned, and counterexample witnesses when the axiom is
// violated. "= 1" is read as >= 1 - 1e-9 and "> 0" as > 1e-12 throughout.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qcvote/rules.hpp"

namespace qcvote {

// Floating-point reading of the axioms' exact statements.
inline constexpr double kSharpThreshold = 1.0 - 1e-9;
inline constexpr double kUnsharpThreshold = 1e-12;

struct AxiomWitness {
  std::string profile;    // primary profile, human-readable
  std::string profile_b;  // second profile for pairwise axioms, else empty
  int x = -1;
  int y = -1;
  int voter = -1;  // -1 when the witness is not tied to one voter
  double ballot_weight = -1.0;     // Tr(Pi (Tr_{!=i} rho)) where applicable
  double outcome_weight = -1.0;    // Tr(Pi E(rho))
  double outcome_weight_b = -1.0;  // Tr(Pi E(rho')) for pairwise axioms
  std::string detail;
};

struct AxiomVerdict {
  std::string axiom;
  bool holds = true;  // true iff witnesses is empty
  std::vector<AxiomWitness> witnesses;
  std::uint64_t cases_checked = 0;     // scanned cardinality (audited)
  std::uint64_t cases_applicable = 0;  // cases whose precondition fired
  std::string notes;

  std::string summary(const CandidateSet& cs) const;
};

struct ProfileFamily {
  enum class Kind { exhaustive_basis, random_mixed, explicit_list };

  Kind kind = Kind::exhaustive_basis;
  int n = 0;
  int m = 0;
  int sample_count = 0;
  std::uint64_t seed = 0;
  std::vector<ProfileState> profiles;  // explicit_list only

  std::uint64_t size() const;
  std::string description() const;
  // Generates profiles one at a time; nothing larger than one joint state is
  // ever held in memory.
  void for_each(const std::function<void(const ProfileState&)>& fn) const;
};

ProfileFamily exhaustive_basis_family(int n, int m);
// Seeded mixtures of 2..4 joint basis states with random weights.
ProfileFamily random_mixed_family(int n, int m, int count, std::uint64_t seed);
ProfileFamily explicit_family(std::vector<ProfileState> profiles);

struct ProfilePairFamily {
  ProfileFamily base;
  // When empty, every ordered pair of base profiles (including identical
  // ones) is scanned; otherwise only the listed index pairs.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
  std::string description;

  std::uint64_t pair_count() const;
};

enum class PairingStrategy {
  all_ordered_pairs,
  // Pairs of mixtures with identical per-voter (x,y)/(y,x) marginals but
  // permuted placement of the remaining candidates.
  matched_mixtures,
};

ProfilePairFamily similar_profile_pairs(const ProfileFamily& family,
                                        PairingStrategy strategy,
                                        std::uint64_t seed);

// Per-voter agreement of reduced (x,y) and (y,x) weights, within tol. This is
// the similarity the QIIA precondition quantifies over.
bool similar_by_weight(const ProfileState& a, const ProfileState& b, int x,
                       int y, double tol = 1e-9);
// Support-only agreement (weights compared as zero / nonzero), the weaker
// notion this library's QIIA deliberately does not use.
bool similar_by_support(const ProfileState& a, const ProfileState& b, int x,
                        int y, double eps = kUnsharpThreshold);

AxiomVerdict check_sharp_unanimity(const QuantumRule& rule,
                                   const ProfileFamily& family,
                                   const CandidateSet& cs);
AxiomVerdict check_unsharp_unanimity(const QuantumRule& rule,
                                     const ProfileFamily& family,
                                     const CandidateSet& cs);

// `restrict_pair`, when set, limits the scan to that ordered candidate pair.
AxiomVerdict check_sharp_qiia(const QuantumRule& rule,
                              const ProfilePairFamily& pairs,
                              const CandidateSet& cs,
                              std::optional<std::pair<int, int>> restrict_pair =
                                  std::nullopt);
AxiomVerdict check_unsharp_qiia(const QuantumRule& rule,
                                const ProfilePairFamily& pairs,
                                const CandidateSet& cs,
                                std::optional<std::pair<int, int>>
                                    restrict_pair = std::nullopt);

enum class DictatorshipMode { sharp, unsharp, both };

// holds=true means some voter survives the scan with zero violations, i.e.
// the rule looks like a dictatorship on this family (a finite family can
// only certify violation, never satisfaction; the verdict notes say so).
AxiomVerdict check_dictatorship(const QuantumRule& rule,
                                const ProfileFamily& family,
                                const CandidateSet& cs,
                                DictatorshipMode mode = DictatorshipMode::both);

// Exhaustive classical baseline: unanimity, IIA over all profile pairs, and
// dictatorship for an SWF on (m!)^n profiles. Throws argument_error when the
// enumeration would exceed 10^6 profiles.
std::vector<AxiomVerdict> check_classical_axioms(const ClassicalSwf& swf,
                                                 int n, int m,
                                                 const CandidateSet& cs);

// Expected outcome of each axiom for a rule worth having: unanimity and IIA
// variants should hold, dictatorship variants and classical IIA should not.
bool axiom_expected_to_hold(std::string_view axiom);
bool is_known_axiom(std::string_view axiom);
std::vector<std::string> known_axioms();

}  // namespace qcvote
