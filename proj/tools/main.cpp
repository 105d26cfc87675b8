// qcvote: simulate quantum Condorcet voting on scenario files and verify
// the unanimity / IIA / non-dictatorship properties of the channel.
//
// Exit codes: 0 all requested checks came out as expected, 1 some axiom
// verdict was contrary to expectation, 2 input error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "qcvote/report.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw qcvote::parse_error(0, "cannot open scenario file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_output(const std::string& text, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(output_path, std::ios::binary);
  if (!out) throw qcvote::parse_error(0, "cannot write output file: " + output_path);
  out << text;
}

struct CommonOptions {
  std::string scenario_path;
  std::string output_path;
  bool json = false;
  std::optional<double> delta;
  std::optional<double> tolerance;
  std::optional<std::uint64_t> seed;
};

void add_common(CLI::App* cmd, CommonOptions& opts, bool with_scenario) {
  if (with_scenario) {
    cmd->add_option("scenario", opts.scenario_path, "scenario file")->required();
  }
  cmd->add_option("--delta", opts.delta, "override the minority-shot weight");
  cmd->add_option("--tolerance", opts.tolerance, "override the numeric tolerance");
  cmd->add_option("--seed", opts.seed, "override the random seed");
  cmd->add_flag("--json", opts.json, "emit the report as JSON");
  cmd->add_option("--output", opts.output_path, "write the report to a file");
}

qcvote::Scenario load_scenario(const CommonOptions& opts) {
  qcvote::Scenario s = qcvote::parse_scenario(read_file(opts.scenario_path));
  if (opts.delta) s.delta = *opts.delta;
  if (opts.tolerance) s.tolerance = *opts.tolerance;
  if (opts.seed) s.seed = *opts.seed;
  // Re-validate after overrides.
  return qcvote::parse_scenario(qcvote::serialize_scenario(s));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quantum Condorcet voting simulator and axiom verifier"};
  app.require_subcommand(1);

  CommonOptions run_opts, check_opts, sample_opts, repro_opts;
  std::string axiom;
  int shots = 1000;
  int repro_m = 3, repro_n = 3;
  double repro_delta = 0.05;
  std::uint64_t repro_seed = 42;

  CLI::App* run_cmd =
      app.add_subcommand("run", "run a scenario and report pair weights");
  add_common(run_cmd, run_opts, true);

  CLI::App* check_cmd =
      app.add_subcommand("check", "run one axiom check against a scenario");
  add_common(check_cmd, check_opts, true);
  check_cmd->add_option("--axiom", axiom, "axiom name")->required();

  CLI::App* sample_cmd =
      app.add_subcommand("sample", "sample preference-basis measurements");
  add_common(sample_cmd, sample_opts, true);
  sample_cmd->add_option("--shots", shots, "number of measurement samples");

  CLI::App* repro_cmd = app.add_subcommand(
      "reproduce", "verify unanimity, IIA and non-dictatorship end to end");
  repro_cmd->add_option("--m", repro_m, "number of candidates");
  repro_cmd->add_option("--n", repro_n, "number of voters");
  repro_cmd->add_option("--delta", repro_delta, "minority-shot weight");
  repro_cmd->add_option("--seed", repro_seed, "random seed");
  repro_cmd->add_flag("--json", repro_opts.json, "emit the report as JSON");
  repro_cmd->add_option("--output", repro_opts.output_path,
                        "write the report to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (run_cmd->parsed()) {
      const qcvote::Report report = qcvote::run_scenario(load_scenario(run_opts));
      write_output(run_opts.json ? report.to_json() : report.to_text(),
                   run_opts.output_path);
      return report.exit_code();
    }
    if (check_cmd->parsed()) {
      qcvote::Scenario s = load_scenario(check_opts);
      s.checks = {axiom};
      const qcvote::Report report = qcvote::run_scenario(s);
      write_output(check_opts.json ? report.to_json() : report.to_text(),
                   check_opts.output_path);
      return report.exit_code();
    }
    if (sample_cmd->parsed()) {
      const qcvote::Report report = qcvote::run_scenario_with_samples(
          load_scenario(sample_opts), shots);
      write_output(sample_opts.json ? report.to_json() : report.to_text(),
                   sample_opts.output_path);
      return report.exit_code();
    }
    if (repro_cmd->parsed()) {
      const qcvote::ReproduceBundle bundle =
          qcvote::reproduce_theorems(repro_m, repro_n, repro_delta, repro_seed);
      write_output(repro_opts.json ? bundle.to_json() : bundle.to_text(),
                   repro_opts.output_path);
      return bundle.exit_code();
    }
  } catch (const qcvote::parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
