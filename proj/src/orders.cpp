#include "qcvote/orders.hpp"

#include <algorithm>
#include <set>

namespace qcvote {

int CandidateSet::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == name) return static_cast<int>(i);
  }
  return -1;
}

CandidateSet CandidateSet::from_labels(std::vector<std::string> labels) {
  if (labels.size() < 2) {
    throw argument_error("candidate set needs at least 2 candidates");
  }
  std::set<std::string> seen;
  for (const auto& l : labels) {
    if (l.empty()) throw argument_error("empty candidate name");
    if (!seen.insert(l).second) {
      throw argument_error("duplicate candidate name: " + l);
    }
  }
  return CandidateSet{std::move(labels)};
}

CandidateSet CandidateSet::default_labels(int m) {
  static const std::vector<std::string> xyz = {"x", "y", "z"};
  std::vector<std::string> labels;
  if (m <= 3) {
    labels.assign(xyz.begin(), xyz.begin() + m);
  } else {
    for (int i = 1; i <= m; ++i) labels.push_back("c" + std::to_string(i));
  }
  return from_labels(std::move(labels));
}

int LinearOrder::position_of(int candidate) const {
  for (std::size_t i = 0; i < ranking.size(); ++i) {
    if (ranking[i] == candidate) return static_cast<int>(i);
  }
  throw argument_error("candidate " + std::to_string(candidate) +
                       " not in order");
}

bool LinearOrder::ranks_above(int x, int y) const {
  return position_of(x) < position_of(y);
}

std::string LinearOrder::label(const CandidateSet& cs) const {
  std::string out;
  for (std::size_t i = 0; i < ranking.size(); ++i) {
    if (i) out += '>';
    out += cs.labels.at(ranking[i]);
  }
  return out;
}

LinearOrder make_order(std::vector<int> ranking) {
  const int m = static_cast<int>(ranking.size());
  if (m < 1) throw argument_error("empty ranking");
  std::vector<bool> seen(m, false);
  for (int c : ranking) {
    if (c < 0 || c >= m || seen[c]) {
      throw argument_error("ranking is not a permutation of 0.." +
                           std::to_string(m - 1));
    }
    seen[c] = true;
  }
  return LinearOrder{std::move(ranking)};
}

std::int64_t factorial(int m) {
  if (m < 0 || m > 20) throw argument_error("factorial out of range");
  std::int64_t f = 1;
  for (int i = 2; i <= m; ++i) f *= i;
  return f;
}

std::int64_t order_to_index(const LinearOrder& o) {
  const int m = o.candidate_count();
  std::int64_t index = 0;
  for (int i = 0; i < m; ++i) {
    int smaller_after = 0;
    for (int j = i + 1; j < m; ++j) {
      if (o.ranking[j] < o.ranking[i]) ++smaller_after;
    }
    index += smaller_after * factorial(m - 1 - i);
  }
  return index;
}

LinearOrder index_to_order(std::int64_t index, int m) {
  if (m < 1 || index < 0 || index >= factorial(m)) {
    throw argument_error("order index " + std::to_string(index) +
                         " out of range for m=" + std::to_string(m));
  }
  std::vector<int> pool(m);
  for (int i = 0; i < m; ++i) pool[i] = i;
  std::vector<int> ranking;
  ranking.reserve(m);
  for (int i = 0; i < m; ++i) {
    const std::int64_t f = factorial(m - 1 - i);
    const auto digit = static_cast<std::size_t>(index / f);
    index %= f;
    ranking.push_back(pool[digit]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digit));
  }
  return LinearOrder{std::move(ranking)};
}

ClassicalProfile make_profile(std::vector<LinearOrder> orders) {
  if (orders.size() < 2) throw argument_error("profile needs >= 2 voters");
  const int m = orders.front().candidate_count();
  for (const auto& o : orders) {
    if (o.candidate_count() != m) {
      throw argument_error("all voters must rank the same candidate set");
    }
  }
  return ClassicalProfile{std::move(orders)};
}

int pairwise_tally(const ClassicalProfile& p, int x, int y) {
  if (x == y) throw argument_error("pairwise_tally: x == y");
  int count = 0;
  for (const auto& o : p.orders) {
    if (o.ranks_above(x, y)) ++count;
  }
  return count;
}

std::vector<int> condorcet_scores(const ClassicalProfile& p) {
  const int m = p.candidate_count();
  std::vector<int> scores(m, 0);
  for (int x = 0; x < m; ++x) {
    for (int y = 0; y < m; ++y) {
      if (x == y) continue;
      if (pairwise_tally(p, x, y) >= pairwise_tally(p, y, x)) ++scores[x];
    }
  }
  return scores;
}

int WeakOrder::candidate_count() const {
  int count = 0;
  for (const auto& g : tie_groups) count += static_cast<int>(g.size());
  return count;
}

std::string WeakOrder::label(const CandidateSet& cs) const {
  std::string out;
  for (std::size_t g = 0; g < tie_groups.size(); ++g) {
    if (g) out += " > ";
    for (std::size_t i = 0; i < tie_groups[g].size(); ++i) {
      if (i) out += " ~ ";
      out += cs.labels.at(tie_groups[g][i]);
    }
  }
  return out;
}

WeakOrder weak_order_from_scores(const std::vector<int>& scores) {
  std::vector<int> by_score(scores.size());
  for (std::size_t i = 0; i < scores.size(); ++i) by_score[i] = static_cast<int>(i);
  std::stable_sort(by_score.begin(), by_score.end(),
                   [&](int a, int b) { return scores[a] > scores[b]; });
  WeakOrder w;
  for (int c : by_score) {
    if (w.tie_groups.empty() ||
        scores[w.tie_groups.back().front()] != scores[c]) {
      w.tie_groups.push_back({c});
    } else {
      w.tie_groups.back().push_back(c);
    }
  }
  return w;
}

std::vector<LinearOrder> linear_extensions(const WeakOrder& w) {
  std::vector<LinearOrder> out;
  std::vector<std::vector<int>> groups = w.tie_groups;
  for (auto& g : groups) std::sort(g.begin(), g.end());

  // Cartesian product of within-group permutations.
  std::vector<int> ranking;
  auto expand = [&](auto&& self, std::size_t g) -> void {
    if (g == groups.size()) {
      out.push_back(LinearOrder{ranking});
      return;
    }
    std::vector<int> perm = groups[g];
    do {
      ranking.insert(ranking.end(), perm.begin(), perm.end());
      self(self, g + 1);
      ranking.resize(ranking.size() - perm.size());
    } while (std::next_permutation(perm.begin(), perm.end()));
  };
  expand(expand, 0);

  std::sort(out.begin(), out.end(), [](const LinearOrder& a, const LinearOrder& b) {
    return order_to_index(a) < order_to_index(b);
  });
  return out;
}

}  // namespace qcvote
