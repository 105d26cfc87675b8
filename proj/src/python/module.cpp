// pybind11 bindings: the linear-algebra kernel, preference combinatorics,
// the voting channel, axiom checks and scenario execution.

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qcvote/report.hpp"

namespace py = pybind11;
using namespace qcvote;

namespace {

LinearOrder order_from_list(const std::vector<int>& ranking) {
  return make_order(ranking);
}

ProfileState state_from_matrix(const ComplexMatrix& joint, int n, int m) {
  std::int64_t expected = 1;
  for (int v = 0; v < n; ++v) expected *= factorial(m);
  if (joint.rows() != expected || joint.cols() != expected) {
    throw dimension_error("joint matrix must be (m!)^n x (m!)^n");
  }
  return ProfileState{DensityOperator::validate(joint), n, m};
}

QuantumRule rule_by_name(const std::string& name, const QcvParams& params) {
  if (name == "qcv") return qcv_rule(params);
  if (name == "constant-uniform") return constant_uniform_rule();
  if (name == "classical-condorcet-lex")
    return dephased_classical_rule(condorcet_lex_swf());
  if (name.rfind("dictator:", 0) == 0) {
    return ballot_projection_rule(std::stoi(name.substr(9)));
  }
  if (name.rfind("constant-order:", 0) == 0) {
    throw argument_error("constant-order rules need an explicit order");
  }
  throw argument_error("unknown rule '" + name + "'");
}

py::dict witness_to_dict(const AxiomWitness& w) {
  py::dict d;
  d["profile"] = w.profile;
  if (!w.profile_b.empty()) d["profile_b"] = w.profile_b;
  d["x"] = w.x;
  d["y"] = w.y;
  d["voter"] = w.voter;
  d["ballot_weight"] = w.ballot_weight;
  d["outcome_weight"] = w.outcome_weight;
  d["detail"] = w.detail;
  return d;
}

py::dict verdict_to_dict(const AxiomVerdict& v) {
  py::dict d;
  d["axiom"] = v.axiom;
  d["holds"] = v.holds;
  d["cases_checked"] = v.cases_checked;
  d["cases_applicable"] = v.cases_applicable;
  py::list ws;
  for (const auto& w : v.witnesses) ws.append(witness_to_dict(w));
  d["witnesses"] = ws;
  d["notes"] = v.notes;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "quantum Condorcet voting: simulation and axiom verification";

  py::register_exception<dimension_error>(m, "DimensionError",
                                          PyExc_ValueError);
  py::register_exception<argument_error>(m, "ArgumentError", PyExc_ValueError);
  py::register_exception<numeric_error>(m, "NumericError", PyExc_ValueError);
  py::register_exception<density_error>(m, "DensityError", PyExc_ValueError);
  py::register_exception<parse_error>(m, "ScenarioParseError", PyExc_ValueError);

  // linalg
  m.def("tensor", &tensor, py::arg("a"), py::arg("b"));
  m.def("trace", &trace, py::arg("a"));
  m.def(
      "partial_trace",
      [](const ComplexMatrix& rho, const std::vector<Eigen::Index>& dims,
         std::size_t keep) { return partial_trace(rho, dims, keep); },
      py::arg("rho"), py::arg("dims"), py::arg("keep"));
  m.def("conjugate_by_projector", &conjugate_by_projector, py::arg("p"),
        py::arg("rho"));
  m.def(
      "validate_density",
      [](const ComplexMatrix& a, double tol) {
        return DensityOperator::validate(a, tol).matrix();
      },
      py::arg("a"), py::arg("tol") = kValidationTol,
      "Returns the matrix unchanged if it is a density operator within tol; "
      "raises DensityError naming the violated invariant otherwise.");

  // orders
  m.def(
      "order_to_index",
      [](const std::vector<int>& ranking) {
        return order_to_index(order_from_list(ranking));
      },
      py::arg("ranking"));
  m.def(
      "index_to_order",
      [](std::int64_t index, int m) { return index_to_order(index, m).ranking; },
      py::arg("index"), py::arg("m"));
  m.def("factorial", &factorial, py::arg("m"));
  m.def(
      "pairwise_tally",
      [](const std::vector<std::vector<int>>& orders, int x, int y) {
        std::vector<LinearOrder> parsed;
        for (const auto& o : orders) parsed.push_back(order_from_list(o));
        return pairwise_tally(make_profile(std::move(parsed)), x, y);
      },
      py::arg("orders"), py::arg("x"), py::arg("y"));
  m.def(
      "condorcet_scores",
      [](const std::vector<std::vector<int>>& orders) {
        std::vector<LinearOrder> parsed;
        for (const auto& o : orders) parsed.push_back(order_from_list(o));
        return condorcet_scores(make_profile(std::move(parsed)));
      },
      py::arg("orders"));
  m.def(
      "weak_order_from_scores",
      [](const std::vector<int>& scores) {
        return weak_order_from_scores(scores).tie_groups;
      },
      py::arg("scores"));
  m.def(
      "linear_extensions",
      [](const std::vector<std::vector<int>>& tie_groups) {
        std::vector<std::vector<int>> out;
        for (const auto& o : linear_extensions(WeakOrder{tie_groups})) {
          out.push_back(o.ranking);
        }
        return out;
      },
      py::arg("tie_groups"));

  // ballots
  m.def(
      "pair_projector",
      [](int m_, int x, int y) { return pair_projector(m_, x, y).matrix; },
      py::arg("m"), py::arg("x"), py::arg("y"));
  m.def(
      "basis_ballot",
      [](const std::vector<int>& ranking) {
        return basis_ballot(order_from_list(ranking)).state.matrix();
      },
      py::arg("ranking"));
  m.def(
      "profile_state",
      [](const std::vector<std::vector<int>>& orders) {
        std::vector<LinearOrder> parsed;
        for (const auto& o : orders) parsed.push_back(order_from_list(o));
        return profile_state(BasisProfile{std::move(parsed)}).state.matrix();
      },
      py::arg("orders"),
      "Joint density matrix of the basis profile given by per-voter rankings.");
  m.def(
      "reduced_ballot",
      [](const ComplexMatrix& joint, int n, int m_, int voter) {
        return reduced_ballot(state_from_matrix(joint, n, m_), voter)
            .state.matrix();
      },
      py::arg("joint"), py::arg("n"), py::arg("m"), py::arg("voter"));
  m.def(
      "pair_weight",
      [](const ComplexMatrix& d, int x, int y) {
        return pair_weight(DensityOperator::validate(d), x, y);
      },
      py::arg("d"), py::arg("x"), py::arg("y"));
  m.def(
      "dephase_decompose",
      [](const ComplexMatrix& joint, int n, int m_) {
        std::vector<std::pair<double, std::vector<std::vector<int>>>> out;
        for (const auto& [w, b] :
             dephase_decompose(state_from_matrix(joint, n, m_))) {
          std::vector<std::vector<int>> orders;
          for (const auto& o : b.orders) orders.push_back(o.ranking);
          out.emplace_back(w, std::move(orders));
        }
        return out;
      },
      py::arg("joint"), py::arg("n"), py::arg("m"));

  // qcv
  py::class_<QcvParams>(m, "QcvParams")
      .def(py::init<>())
      .def(py::init([](double delta, double tolerance) {
             return QcvParams{delta, tolerance};
           }),
           py::arg("delta") = 0.05, py::arg("tolerance") = 1e-9)
      .def_readwrite("delta", &QcvParams::delta)
      .def_readwrite("tolerance", &QcvParams::tolerance);

  m.def(
      "qcv_basis",
      [](const std::vector<std::vector<int>>& orders, double delta) {
        std::vector<LinearOrder> parsed;
        for (const auto& o : orders) parsed.push_back(order_from_list(o));
        auto [out, trace_record] =
            qcv_basis(BasisProfile{std::move(parsed)}, QcvParams{delta, 1e-9});
        py::dict record;
        record["scores"] = trace_record.scores;
        record["weak_order"] = trace_record.weak_order.tie_groups;
        py::list exts;
        for (const auto& e : trace_record.extensions) exts.append(e.ranking);
        record["extensions"] = exts;
        record["minority_pairs"] = trace_record.minority_pairs;
        record["unanimous_pairs"] = trace_record.unanimous_pairs;
        record["renormalization_factor"] = trace_record.renormalization_factor;
        return py::make_tuple(out.matrix(), record);
      },
      py::arg("orders"), py::arg("delta") = 0.05,
      "Runs the channel on a basis profile; returns (density matrix, trace).");
  m.def(
      "qcv",
      [](const ComplexMatrix& joint, int n, int m_, double delta) {
        return qcv(state_from_matrix(joint, n, m_), QcvParams{delta, 1e-9})
            .matrix();
      },
      py::arg("joint"), py::arg("n"), py::arg("m"), py::arg("delta") = 0.05);
  m.def(
      "measure_outcomes",
      [](const ComplexMatrix& d, int shots, std::uint64_t seed) {
        const DensityOperator op = DensityOperator::validate(d);
        auto rng = seeded_rng(seed, "sample");
        std::vector<std::pair<std::vector<int>, double>> out;
        for (int i = 0; i < shots; ++i) {
          auto [order, prob] = measure_outcome(op, rng);
          out.emplace_back(order.ranking, prob);
        }
        return out;
      },
      py::arg("d"), py::arg("shots") = 1, py::arg("seed") = 42);

  // axioms
  m.def(
      "check_axiom",
      [](const std::string& axiom, const std::string& rule_name, int n, int m_,
         double delta, std::uint64_t seed) {
        const CandidateSet cs = CandidateSet::default_labels(m_);
        const QcvParams params{delta, 1e-9};
        if (axiom.rfind("classical-", 0) == 0) {
          ClassicalSwf swf = condorcet_lex_swf();
          if (rule_name.rfind("dictator:", 0) == 0) {
            swf = dictator_swf(std::stoi(rule_name.substr(9)));
          }
          for (const auto& v : check_classical_axioms(swf, n, m_, cs)) {
            if (v.axiom == axiom) return verdict_to_dict(v);
          }
          throw argument_error("unknown classical axiom '" + axiom + "'");
        }
        const QuantumRule rule = rule_by_name(rule_name, params);
        const ProfileFamily family = exhaustive_basis_family(n, m_);
        if (axiom == "sharp-unanimity")
          return verdict_to_dict(check_sharp_unanimity(rule, family, cs));
        if (axiom == "unsharp-unanimity")
          return verdict_to_dict(check_unsharp_unanimity(rule, family, cs));
        if (axiom == "sharp-qiia" || axiom == "unsharp-qiia") {
          const ProfilePairFamily pairs = similar_profile_pairs(
              family, PairingStrategy::all_ordered_pairs, seed);
          return verdict_to_dict(axiom == "sharp-qiia"
                                     ? check_sharp_qiia(rule, pairs, cs)
                                     : check_unsharp_qiia(rule, pairs, cs));
        }
        if (axiom == "sharp-dictatorship")
          return verdict_to_dict(check_dictatorship(rule, family, cs,
                                                    DictatorshipMode::sharp));
        if (axiom == "unsharp-dictatorship")
          return verdict_to_dict(check_dictatorship(rule, family, cs,
                                                    DictatorshipMode::unsharp));
        throw argument_error("unknown axiom '" + axiom + "'");
      },
      py::arg("axiom"), py::arg("rule") = "qcv", py::arg("n") = 3,
      py::arg("m") = 3, py::arg("delta") = 0.05, py::arg("seed") = 42,
      "Checks one axiom for a named rule over the exhaustive basis family.");

  // scenarios and reproduction
  m.def(
      "run_scenario",
      [](const std::string& text, bool json) {
        const Report report = run_scenario(parse_scenario(text));
        return py::make_tuple(report.exit_code(),
                              json ? report.to_json() : report.to_text());
      },
      py::arg("text"), py::arg("json") = false,
      "Parses and runs a scenario; returns (exit_code, report).");
  m.def(
      "serialize_scenario",
      [](const std::string& text) {
        return serialize_scenario(parse_scenario(text));
      },
      py::arg("text"), "Canonical rendering of a scenario file.");
  m.def(
      "reproduce",
      [](int m_, int n, double delta, std::uint64_t seed, bool json) {
        const ReproduceBundle bundle = reproduce_theorems(m_, n, delta, seed);
        return py::make_tuple(bundle.exit_code(),
                              json ? bundle.to_json() : bundle.to_text());
      },
      py::arg("m") = 3, py::arg("n") = 3, py::arg("delta") = 0.05,
      py::arg("seed") = 42, py::arg("json") = false,
      "Runs the unanimity / IIA / non-dictatorship verification bundle.");
}
