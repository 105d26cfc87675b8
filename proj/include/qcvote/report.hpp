#pragma once

// Report assembly: running a scenario through the channel, axiom checks,
// measurement sampling, and the theorem-reproduction bundle. Reports render
// to canonical text (field order fixed, weights at 12 significant digits) or
// JSON; two runs with the same seed produce byte-identical output.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qcvote/axioms.hpp"
#include "qcvote/scenario.hpp"

namespace qcvote {

struct PairWeightRow {
  int x = -1;
  int y = -1;
  double weight = 0.0;
};

// One dephased component of the input profile with its channel trace.
struct ComponentTrace {
  double weight = 0.0;
  BasisProfile profile;
  QcvTrace trace;
};

struct CheckResult {
  AxiomVerdict verdict;
  bool expected_hold = true;
  bool as_expected = true;
};

struct SampleRow {
  LinearOrder order;
  std::uint64_t count = 0;
  double frequency = 0.0;
  double probability = 0.0;
};

struct SampleSummary {
  int shots = 0;
  std::uint64_t seed = 0;
  std::vector<SampleRow> rows;  // ascending basis index
};

struct Report {
  Scenario scenario;
  std::vector<ComponentTrace> components;      // ascending joint index
  std::vector<PairWeightRow> pair_weights;     // sorted by (x, y)
  std::vector<CheckResult> checks;
  std::optional<SampleSummary> samples;

  // 0: everything as expected; 1: some axiom verdict contrary to expectation.
  int exit_code() const;
  std::string to_text() const;
  std::string to_json() const;
};

Report run_scenario(const Scenario& s);
Report run_scenario_with_samples(const Scenario& s, int shots);

// Runs one named axiom check against the scenario's profile (explicit
// family; QIIA checks pair the profile with itself). classical-* axioms run
// the exhaustive classical baseline at the scenario's (n, m).
CheckResult run_check(const Scenario& s, const std::string& axiom);

struct TheoremVerdict {
  std::string name;    // "THEOREM-2" .. "THEOREM-7"
  std::string axiom;
  bool as_expected = false;
  std::uint64_t cases = 0;
  std::uint64_t witnesses = 0;
  std::string detail;
};

struct ReproduceBundle {
  int m = 3;
  int n = 3;
  double delta = 0.05;
  std::uint64_t seed = 42;
  std::vector<TheoremVerdict> theorems;
  bool corollary_reproduced = false;

  int exit_code() const;
  std::string to_text() const;
  std::string to_json() const;
};

// Full verification bundle: unanimity and IIA sweeps (exhaustive basis
// profiles plus seeded mixed families), and per-voter dictatorship-violation
// witnesses on the rotation profile. The corollary line reads "reproduced"
// iff every theorem verdict came out as expected.
ReproduceBundle reproduce_theorems(int m, int n, double delta,
                                   std::uint64_t seed);

// Voter i votes the i-th cyclic rotation of the candidate list: the profile
// whose channel output witnesses both dictatorship violations.
BasisProfile rotation_profile(int n, int m);

// %.12g formatting used by every numeric field in reports.
std::string format_weight(double v);

}  // namespace qcvote
