#include "qcvote/report.hpp"

#include <algorithm>
#include <cstdio>
#include <map>

#include <json.hpp>

namespace qcvote {

namespace {

using ordered_json = nlohmann::ordered_json;

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

std::string pair_list_label(const CandidateSet& cs,
                            const std::vector<std::pair<int, int>>& pairs) {
  if (pairs.empty()) return "(none)";
  std::string out;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (i) out += ", ";
    out += pair_label(cs, pairs[i].first, pairs[i].second);
  }
  return out;
}

std::string scores_label(const CandidateSet& cs, const std::vector<int>& scores) {
  std::string out;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    if (i) out += ", ";
    out += cs.labels[i] + "=" + std::to_string(scores[i]);
  }
  return out;
}

std::string verdict_status(const AxiomVerdict& v) {
  return v.holds ? "HOLDS" : "VIOLATED";
}

void append_witness_lines(std::string& out, const AxiomVerdict& v) {
  constexpr std::size_t kShown = 10;
  for (std::size_t i = 0; i < v.witnesses.size() && i < kShown; ++i) {
    const auto& w = v.witnesses[i];
    out += "    witness: profile=[" + w.profile + "]";
    if (!w.profile_b.empty()) out += " profile'=[" + w.profile_b + "]";
    if (w.voter >= 0) out += " voter=" + std::to_string(w.voter);
    out += " " + w.detail + "\n";
  }
  if (v.witnesses.size() > kShown) {
    out += "    ... (" + std::to_string(v.witnesses.size() - kShown) +
           " more witnesses)\n";
  }
}

ordered_json witness_json(const AxiomWitness& w, const CandidateSet& cs) {
  ordered_json j;
  j["profile"] = w.profile;
  if (!w.profile_b.empty()) j["profile_b"] = w.profile_b;
  if (w.x >= 0) j["pair"] = pair_label(cs, w.x, w.y);
  if (w.voter >= 0) j["voter"] = w.voter;
  if (w.ballot_weight >= 0.0) j["ballot_weight"] = w.ballot_weight;
  if (w.outcome_weight >= 0.0) j["outcome_weight"] = w.outcome_weight;
  if (w.outcome_weight_b >= 0.0) j["outcome_weight_b"] = w.outcome_weight_b;
  j["detail"] = w.detail;
  return j;
}

ordered_json verdict_json(const AxiomVerdict& v, const CandidateSet& cs) {
  ordered_json j;
  j["axiom"] = v.axiom;
  j["holds"] = v.holds;
  j["cases_checked"] = v.cases_checked;
  j["cases_applicable"] = v.cases_applicable;
  j["witnesses"] = ordered_json::array();
  for (const auto& w : v.witnesses) j["witnesses"].push_back(witness_json(w, cs));
  if (!v.notes.empty()) j["notes"] = v.notes;
  return j;
}

}  // namespace

std::string format_weight(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

CheckResult run_check(const Scenario& s, const std::string& axiom) {
  if (!is_known_axiom(axiom)) throw argument_error("unknown axiom '" + axiom + "'");
  const QcvParams params{s.delta, s.tolerance};
  const CandidateSet& cs = s.candidates;
  const int n = s.voter_count();
  const int m = cs.count();

  AxiomVerdict verdict;
  if (axiom.rfind("classical-", 0) == 0) {
    const auto verdicts = check_classical_axioms(condorcet_lex_swf(), n, m, cs);
    for (const auto& v : verdicts) {
      if (v.axiom == axiom) verdict = v;
    }
  } else {
    const QuantumRule rule = qcv_rule(params);
    ProfileFamily family = explicit_family({scenario_profile(s)});
    if (axiom == "sharp-unanimity") {
      verdict = check_sharp_unanimity(rule, family, cs);
    } else if (axiom == "unsharp-unanimity") {
      verdict = check_unsharp_unanimity(rule, family, cs);
    } else if (axiom == "sharp-qiia" || axiom == "unsharp-qiia") {
      ProfilePairFamily pairs =
          similar_profile_pairs(family, PairingStrategy::all_ordered_pairs, s.seed);
      verdict = axiom == "sharp-qiia"
                    ? check_sharp_qiia(rule, pairs, cs)
                    : check_unsharp_qiia(rule, pairs, cs);
    } else if (axiom == "sharp-dictatorship") {
      verdict = check_dictatorship(rule, family, cs, DictatorshipMode::sharp);
    } else if (axiom == "unsharp-dictatorship") {
      verdict = check_dictatorship(rule, family, cs, DictatorshipMode::unsharp);
    }
  }

  CheckResult result;
  result.verdict = std::move(verdict);
  result.expected_hold = axiom_expected_to_hold(axiom);
  result.as_expected = result.verdict.holds == result.expected_hold;
  return result;
}

Report run_scenario(const Scenario& s) {
  Report report;
  report.scenario = s;
  const QcvParams params{s.delta, s.tolerance};
  const ProfileState profile = scenario_profile(s);

  for (const auto& [weight, component] : dephase_decompose(profile)) {
    auto [out, trace] = qcv_basis(component, params);
    report.components.push_back(ComponentTrace{weight, component, std::move(trace)});
  }

  const DensityOperator outcome = qcv(profile, params);
  for (const auto& [x, y] : ordered_pairs(s.candidates.count())) {
    report.pair_weights.push_back(PairWeightRow{x, y, pair_weight(outcome, x, y)});
  }

  for (const auto& axiom : s.checks) {
    report.checks.push_back(run_check(s, axiom));
  }
  return report;
}

Report run_scenario_with_samples(const Scenario& s, int shots) {
  if (shots <= 0) throw argument_error("shots must be positive");
  Report report = run_scenario(s);
  const QcvParams params{s.delta, s.tolerance};
  const DensityOperator outcome = qcv(scenario_profile(s), params);

  SampleSummary samples;
  samples.shots = shots;
  samples.seed = s.seed;
  std::mt19937_64 rng = seeded_rng(s.seed, "sample");
  const int m = s.candidates.count();
  std::map<std::int64_t, std::uint64_t> counts;
  for (int shot = 0; shot < shots; ++shot) {
    const auto [order, prob] = measure_outcome(outcome, rng);
    ++counts[order_to_index(order)];
  }
  for (std::int64_t i = 0; i < factorial(m); ++i) {
    SampleRow row;
    row.order = index_to_order(i, m);
    row.count = counts.count(i) ? counts[i] : 0;
    row.frequency = static_cast<double>(row.count) / shots;
    row.probability = outcome.matrix()(i, i).real();
    samples.rows.push_back(std::move(row));
  }
  report.samples = std::move(samples);
  return report;
}

int Report::exit_code() const {
  for (const auto& c : checks) {
    if (!c.as_expected) return 1;
  }
  return 0;
}

std::string Report::to_text() const {
  const CandidateSet& cs = scenario.candidates;
  std::string out = "qcvote report\n";
  out += "candidates: ";
  for (std::size_t i = 0; i < cs.labels.size(); ++i) {
    if (i) out += ",";
    out += cs.labels[i];
  }
  out += "\n";
  out += "voters: " + std::to_string(scenario.voter_count()) + "\n";
  out += "delta: " + format_weight(scenario.delta) + "\n";
  out += "seed: " + std::to_string(scenario.seed) + "\n";
  out += "tolerance: " + format_weight(scenario.tolerance) + "\n";

  out += "components: " + std::to_string(components.size()) + "\n";
  for (std::size_t i = 0; i < components.size(); ++i) {
    const auto& c = components[i];
    out += "component " + std::to_string(i + 1) +
           ": weight=" + format_weight(c.weight) + " profile=" +
           c.profile.label(cs) + "\n";
    out += "  scores: " + scores_label(cs, c.trace.scores) + "\n";
    out += "  weak-order: " + c.trace.weak_order.label(cs) + "\n";
    out += "  extensions: " + std::to_string(c.trace.extensions.size()) + "\n";
    out += "  minority-pairs: " + pair_list_label(cs, c.trace.minority_pairs) + "\n";
    out += "  unanimous-pairs: " + pair_list_label(cs, c.trace.unanimous_pairs) + "\n";
    out += "  renormalization: " + format_weight(c.trace.renormalization_factor) +
           "\n";
  }

  out += "pair-weights:\n";
  for (const auto& row : pair_weights) {
    out += "  " + pair_label(cs, row.x, row.y) + ": " + format_weight(row.weight) +
           "\n";
  }

  if (!checks.empty()) {
    out += "checks:\n";
    for (const auto& c : checks) {
      out += "  " + c.verdict.summary(cs) +
             " [expected " + (c.expected_hold ? "HOLDS" : "VIOLATED") + "] " +
             (c.as_expected ? "OK" : "UNEXPECTED") + "\n";
      append_witness_lines(out, c.verdict);
    }
  }

  if (samples) {
    out += "samples: shots=" + std::to_string(samples->shots) +
           " seed=" + std::to_string(samples->seed) + "\n";
    for (const auto& row : samples->rows) {
      out += "  " + row.order.label(cs) + ": count=" + std::to_string(row.count) +
             " frequency=" + format_weight(row.frequency) +
             " probability=" + format_weight(row.probability) + "\n";
    }
  }

  out += "result: " + std::string(exit_code() == 0 ? "OK" : "UNEXPECTED") + "\n";
  return out;
}

std::string Report::to_json() const {
  const CandidateSet& cs = scenario.candidates;
  ordered_json j;
  j["scenario"] = ordered_json::object();
  j["scenario"]["candidates"] = cs.labels;
  j["scenario"]["voters"] = scenario.voter_count();
  j["scenario"]["ballots"] = ordered_json::array();
  for (const auto& ballot : scenario.ballots) {
    ordered_json b = ordered_json::array();
    for (const auto& [w, order] : ballot.components) {
      b.push_back({{"weight", w}, {"order", order.label(cs)}});
    }
    j["scenario"]["ballots"].push_back(b);
  }
  j["scenario"]["delta"] = scenario.delta;
  j["scenario"]["checks"] = scenario.checks;
  j["scenario"]["seed"] = scenario.seed;
  j["scenario"]["tolerance"] = scenario.tolerance;

  j["components"] = ordered_json::array();
  for (const auto& c : components) {
    ordered_json cj;
    cj["weight"] = c.weight;
    cj["profile"] = c.profile.label(cs);
    cj["scores"] = c.trace.scores;
    cj["weak_order"] = c.trace.weak_order.label(cs);
    cj["extensions"] = c.trace.extensions.size();
    cj["minority_pairs"] = pair_list_label(cs, c.trace.minority_pairs);
    cj["unanimous_pairs"] = pair_list_label(cs, c.trace.unanimous_pairs);
    cj["renormalization"] = c.trace.renormalization_factor;
    j["components"].push_back(cj);
  }

  j["pair_weights"] = ordered_json::object();
  for (const auto& row : pair_weights) {
    j["pair_weights"][pair_label(cs, row.x, row.y)] = row.weight;
  }

  j["checks"] = ordered_json::array();
  for (const auto& c : checks) {
    ordered_json cj = verdict_json(c.verdict, cs);
    cj["expected_hold"] = c.expected_hold;
    cj["as_expected"] = c.as_expected;
    j["checks"].push_back(cj);
  }

  if (samples) {
    ordered_json sj;
    sj["shots"] = samples->shots;
    sj["seed"] = samples->seed;
    sj["rows"] = ordered_json::array();
    for (const auto& row : samples->rows) {
      sj["rows"].push_back({{"order", row.order.label(cs)},
                            {"count", row.count},
                            {"frequency", row.frequency},
                            {"probability", row.probability}});
    }
    j["samples"] = sj;
  }

  j["exit_code"] = exit_code();
  return j.dump(2) + "\n";
}

BasisProfile rotation_profile(int n, int m) {
  std::vector<LinearOrder> orders;
  for (int v = 0; v < n; ++v) {
    std::vector<int> ranking(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) ranking[static_cast<std::size_t>(i)] = (v + i) % m;
    orders.push_back(make_order(std::move(ranking)));
  }
  return BasisProfile{std::move(orders)};
}

namespace {

TheoremVerdict combine_verdicts(const std::string& name,
                                const std::string& axiom, bool expect_hold,
                                const std::vector<AxiomVerdict>& verdicts,
                                const std::string& detail) {
  TheoremVerdict t;
  t.name = name;
  t.axiom = axiom;
  t.detail = detail;
  bool all_as_expected = true;
  for (const auto& v : verdicts) {
    t.cases += v.cases_checked;
    t.witnesses += v.witnesses.size();
    if (v.holds != expect_hold) all_as_expected = false;
  }
  t.as_expected = all_as_expected;
  return t;
}

}  // namespace

ReproduceBundle reproduce_theorems(int m, int n, double delta,
                                   std::uint64_t seed) {
  ReproduceBundle bundle;
  bundle.m = m;
  bundle.n = n;
  bundle.delta = delta;
  bundle.seed = seed;

  const CandidateSet cs = CandidateSet::default_labels(m);
  const QcvParams params{delta, 1e-9};
  validate_params(params, m);
  const QuantumRule rule = qcv_rule(params);

  const ProfileFamily exhaustive = exhaustive_basis_family(n, m);
  const ProfileFamily mixed = random_mixed_family(n, m, 500, seed);

  bundle.theorems.push_back(combine_verdicts(
      "THEOREM-2", "sharp-unanimity", true,
      {check_sharp_unanimity(rule, exhaustive, cs),
       check_sharp_unanimity(rule, mixed, cs)},
      "exhaustive basis profiles + 500 random mixed profiles"));
  bundle.theorems.push_back(combine_verdicts(
      "THEOREM-3", "unsharp-unanimity", true,
      {check_unsharp_unanimity(rule, exhaustive, cs),
       check_unsharp_unanimity(rule, mixed, cs)},
      "exhaustive basis profiles + 500 random mixed profiles"));

  const ProfilePairFamily exhaustive_pairs =
      similar_profile_pairs(exhaustive, PairingStrategy::all_ordered_pairs, seed);
  ProfileFamily matched_base = random_mixed_family(n, m, 200, seed);
  const ProfilePairFamily matched_pairs =
      similar_profile_pairs(matched_base, PairingStrategy::matched_mixtures, seed);

  bundle.theorems.push_back(combine_verdicts(
      "THEOREM-4", "sharp-qiia", true,
      {check_sharp_qiia(rule, exhaustive_pairs, cs),
       check_sharp_qiia(rule, matched_pairs, cs)},
      "all ordered basis-profile pairs + 200 matched mixed pairs"));
  bundle.theorems.push_back(combine_verdicts(
      "THEOREM-5", "unsharp-qiia", true,
      {check_unsharp_qiia(rule, exhaustive_pairs, cs),
       check_unsharp_qiia(rule, matched_pairs, cs)},
      "all ordered basis-profile pairs + 200 matched mixed pairs"));

  // Dictatorship violations are witnessed on the rotation profile; at
  // (m, n) = (3, 3) this is the cyclic profile whose output is the uniform
  // state, and the closed form is asserted on top of the scan.
  const ProfileState rotation = profile_state(rotation_profile(n, m));
  const ProfileFamily rotation_family = explicit_family({rotation});

  AxiomVerdict sharp_dict =
      check_dictatorship(rule, rotation_family, cs, DictatorshipMode::sharp);
  AxiomVerdict unsharp_dict =
      check_dictatorship(rule, rotation_family, cs, DictatorshipMode::unsharp);
  const bool every_voter_sharp =
      !sharp_dict.holds &&
      static_cast<int>(sharp_dict.witnesses.size()) == n;
  const bool every_voter_unsharp =
      !unsharp_dict.holds &&
      static_cast<int>(unsharp_dict.witnesses.size()) == n;

  bool uniform_output_ok = true;
  if (m == 3 && n == 3) {
    const DensityOperator out = qcv(rotation, params);
    const std::int64_t dim = factorial(m);
    const ComplexMatrix uniform =
        ComplexMatrix::Identity(dim, dim) / static_cast<double>(dim);
    uniform_output_ok =
        (out.matrix() - uniform).cwiseAbs().maxCoeff() <= 1e-12;
    for (const auto& [x, y] : ordered_pairs(m)) {
      if (std::abs(pair_weight(out, x, y) - 0.5) > 1e-9) uniform_output_ok = false;
    }
  }

  TheoremVerdict t6;
  t6.name = "THEOREM-6";
  t6.axiom = "sharp-dictatorship";
  t6.cases = sharp_dict.cases_checked;
  t6.witnesses = sharp_dict.witnesses.size();
  t6.as_expected = every_voter_sharp && uniform_output_ok;
  t6.detail = "rotation profile: every voter has a sharp violation" +
              std::string(m == 3 && n == 3
                              ? "; output equals the uniform state within 1e-12"
                              : "");
  bundle.theorems.push_back(std::move(t6));

  TheoremVerdict t7;
  t7.name = "THEOREM-7";
  t7.axiom = "unsharp-dictatorship";
  t7.cases = unsharp_dict.cases_checked;
  t7.witnesses = unsharp_dict.witnesses.size();
  t7.as_expected = every_voter_unsharp && uniform_output_ok;
  t7.detail = "rotation profile: every voter has an unsharp violation";
  bundle.theorems.push_back(std::move(t7));

  bundle.corollary_reproduced = true;
  for (const auto& t : bundle.theorems) {
    if (!t.as_expected) bundle.corollary_reproduced = false;
  }
  return bundle;
}

int ReproduceBundle::exit_code() const { return corollary_reproduced ? 0 : 1; }

std::string ReproduceBundle::to_text() const {
  std::string out = "qcvote reproduce\n";
  out += "m: " + std::to_string(m) + "\n";
  out += "n: " + std::to_string(n) + "\n";
  out += "delta: " + format_weight(delta) + "\n";
  out += "seed: " + std::to_string(seed) + "\n";
  for (const auto& t : theorems) {
    std::string status;
    const bool expects_witnesses = t.axiom.find("dictatorship") != std::string::npos;
    if (t.as_expected) {
      status = expects_witnesses ? "VIOLATION-WITNESSED" : "HOLDS";
    } else {
      status = "FAILED";
    }
    out += t.name + ": " + status + " (cases=" + std::to_string(t.cases);
    if (expects_witnesses || t.witnesses > 0) {
      out += ", witnesses=" + std::to_string(t.witnesses);
    }
    out += ") -- " + t.axiom + ": " + t.detail + "\n";
  }
  out += std::string("Corollary: ") +
         (corollary_reproduced ? "reproduced" : "NOT reproduced") + "\n";
  return out;
}

std::string ReproduceBundle::to_json() const {
  ordered_json j;
  j["m"] = m;
  j["n"] = n;
  j["delta"] = delta;
  j["seed"] = seed;
  j["theorems"] = ordered_json::array();
  for (const auto& t : theorems) {
    ordered_json tj;
    tj["name"] = t.name;
    tj["axiom"] = t.axiom;
    tj["as_expected"] = t.as_expected;
    tj["cases"] = t.cases;
    tj["witnesses"] = t.witnesses;
    tj["detail"] = t.detail;
    j["theorems"].push_back(tj);
  }
  j["corollary_reproduced"] = corollary_reproduced;
  j["exit_code"] = exit_code();
  return j.dump(2) + "\n";
}

}  // namespace qcvote
