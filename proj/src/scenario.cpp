#include "qcvote/scenario.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>

#include "qcvote/axioms.hpp"

namespace qcvote {

namespace {

std::string trim(std::string_view s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string_view::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return std::string(s.substr(begin, end - begin + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(trim(s.substr(start)));
      break;
    }
    parts.push_back(trim(s.substr(start, pos - start)));
    start = pos + 1;
  }
  return parts;
}

double parse_double(const std::string& text, int line, const char* what) {
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (end == text.c_str() || *end != '\0' || !std::isfinite(v)) {
    throw parse_error(line, std::string("invalid ") + what + ": '" + text + "'");
  }
  return v;
}

// Shortest decimal that round-trips the exact double.
std::string format_exact(double v) {
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

}  // namespace

LinearOrder order_from_string(std::string_view text, const CandidateSet& cs) {
  const auto parts = split(text, '>');
  std::vector<int> ranking;
  for (const auto& name : parts) {
    const int idx = cs.index_of(name);
    if (idx < 0) throw argument_error("unknown candidate '" + name + "'");
    ranking.push_back(idx);
  }
  if (static_cast<int>(ranking.size()) != cs.count()) {
    throw argument_error("order '" + std::string(text) + "' must rank all " +
                         std::to_string(cs.count()) + " candidates");
  }
  return make_order(std::move(ranking));
}

std::string order_to_string(const LinearOrder& o, const CandidateSet& cs) {
  return o.label(cs);
}

Scenario parse_scenario(std::string_view text) {
  Scenario s;
  bool have_candidates = false, have_delta = false, have_seed = false,
       have_tolerance = false, have_checks = false;
  std::vector<std::pair<int, std::string>> ballot_lines;

  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto nl = text.find('\n', start);
    std::string_view raw = text.substr(
        start, nl == std::string_view::npos ? text.size() - start : nl - start);
    start = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) {
      throw parse_error(line_no, "expected 'key: value'");
    }
    const std::string key = trim(line.substr(0, colon));
    const std::string value = trim(line.substr(colon + 1));

    if (key == "candidates") {
      if (have_candidates) throw parse_error(line_no, "duplicate 'candidates'");
      try {
        s.candidates = CandidateSet::from_labels(split(value, ','));
      } catch (const argument_error& e) {
        throw parse_error(line_no, e.what());
      }
      for (const auto& label : s.candidates.labels) {
        if (label.find_first_of("> +~") != std::string::npos) {
          throw parse_error(line_no, "candidate name '" + label +
                                         "' contains reserved characters");
        }
      }
      have_candidates = true;
    } else if (key == "ballot") {
      ballot_lines.emplace_back(line_no, value);
    } else if (key == "delta") {
      if (have_delta) throw parse_error(line_no, "duplicate 'delta'");
      s.delta = parse_double(value, line_no, "delta");
      have_delta = true;
    } else if (key == "seed") {
      if (have_seed) throw parse_error(line_no, "duplicate 'seed'");
      std::uint64_t seed = 0;
      const auto res =
          std::from_chars(value.data(), value.data() + value.size(), seed);
      if (res.ec != std::errc() || res.ptr != value.data() + value.size()) {
        throw parse_error(line_no, "invalid seed: '" + value + "'");
      }
      s.seed = seed;
      have_seed = true;
    } else if (key == "tolerance") {
      if (have_tolerance) throw parse_error(line_no, "duplicate 'tolerance'");
      s.tolerance = parse_double(value, line_no, "tolerance");
      have_tolerance = true;
    } else if (key == "checks") {
      if (have_checks) throw parse_error(line_no, "duplicate 'checks'");
      for (const auto& name : split(value, ',')) {
        if (name.empty()) continue;
        if (!is_known_axiom(name)) {
          throw parse_error(line_no, "unknown axiom '" + name + "'");
        }
        s.checks.push_back(name);
      }
      have_checks = true;
    } else {
      throw parse_error(line_no, "unknown key '" + key + "'");
    }
  }

  if (!have_candidates) throw parse_error(0, "missing 'candidates' line");
  if (ballot_lines.size() < 2) {
    throw parse_error(0, "need at least 2 'ballot' lines, got " +
                             std::to_string(ballot_lines.size()));
  }

  for (const auto& [line, value] : ballot_lines) {
    BallotSpec spec;
    double weight_sum = 0.0;
    for (const auto& part : split(value, '+')) {
      if (part.empty()) throw parse_error(line, "empty mixture component");
      // "w x>y>z" or bare "x>y>z".
      const auto space = part.find_first_of(" \t");
      double weight = 1.0;
      std::string order_text = part;
      if (space != std::string::npos) {
        weight = parse_double(trim(part.substr(0, space)), line, "ballot weight");
        order_text = trim(part.substr(space + 1));
      }
      if (!(weight > 0.0) || weight > 1.0 + 1e-9) {
        throw parse_error(line, "ballot weight must lie in (0, 1]");
      }
      try {
        spec.components.emplace_back(weight,
                                     order_from_string(order_text, s.candidates));
      } catch (const argument_error& e) {
        throw parse_error(line, e.what());
      }
      weight_sum += weight;
    }
    if (std::abs(weight_sum - 1.0) > 1e-9) {
      throw parse_error(line, "mixture weights sum to " +
                                  format_exact(weight_sum) + ", expected 1");
    }
    s.ballots.push_back(std::move(spec));
  }

  const int m = s.candidates.count();
  const double bound = 1.0 / (static_cast<double>(m) * m);
  if (!(s.delta > 0.0) || !(s.delta < bound)) {
    throw parse_error(0, "delta " + format_exact(s.delta) +
                             " outside (0, 1/m^2) = (0, " + format_exact(bound) +
                             ")");
  }
  if (!(s.tolerance > 0.0)) throw parse_error(0, "tolerance must be positive");
  return s;
}

std::string serialize_scenario(const Scenario& s) {
  std::string out = "candidates: ";
  for (std::size_t i = 0; i < s.candidates.labels.size(); ++i) {
    if (i) out += ",";
    out += s.candidates.labels[i];
  }
  out += "\n";
  for (const auto& ballot : s.ballots) {
    out += "ballot: ";
    if (ballot.components.size() == 1 &&
        ballot.components.front().first == 1.0) {
      out += ballot.components.front().second.label(s.candidates);
    } else {
      for (std::size_t i = 0; i < ballot.components.size(); ++i) {
        if (i) out += " + ";
        out += format_exact(ballot.components[i].first) + " " +
               ballot.components[i].second.label(s.candidates);
      }
    }
    out += "\n";
  }
  out += "delta: " + format_exact(s.delta) + "\n";
  if (!s.checks.empty()) {
    out += "checks: ";
    for (std::size_t i = 0; i < s.checks.size(); ++i) {
      if (i) out += ",";
      out += s.checks[i];
    }
    out += "\n";
  }
  out += "seed: " + std::to_string(s.seed) + "\n";
  out += "tolerance: " + format_exact(s.tolerance) + "\n";
  return out;
}

ProfileState scenario_profile(const Scenario& s) {
  const int m = s.candidates.count();
  const std::int64_t dim = factorial(m);
  std::vector<Ballot> ballots;
  for (std::size_t v = 0; v < s.ballots.size(); ++v) {
    ComplexMatrix mat = ComplexMatrix::Zero(dim, dim);
    for (const auto& [w, order] : s.ballots[v].components) {
      mat(order_to_index(order), order_to_index(order)) += w;
    }
    ballots.push_back(Ballot{DensityOperator::validate(std::move(mat), s.tolerance),
                             static_cast<int>(v)});
  }
  return profile_state(ballots);
}

}  // namespace qcvote
