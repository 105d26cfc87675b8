#pragma once

// Combinatorics of voter preferences: strict rankings and their factoradic
// (Lehmer) indexing, pairwise tallies, Condorcet scores, weak orders and
// linear-extension enumeration.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qcvote/errors.hpp"

namespace qcvote {

struct CandidateSet {
  std::vector<std::string> labels;

  int count() const { return static_cast<int>(labels.size()); }
  // -1 if the name is unknown.
  int index_of(std::string_view name) const;

  // Throws argument_error unless there are >= 2 distinct, nonempty labels.
  static CandidateSet from_labels(std::vector<std::string> labels);
  // x, y, z for m <= 3; c1..cm beyond that.
  static CandidateSet default_labels(int m);

  bool operator==(const CandidateSet&) const = default;
};

// Strict total ranking, best candidate first. Entries are candidate indices.
struct LinearOrder {
  std::vector<int> ranking;

  int candidate_count() const { return static_cast<int>(ranking.size()); }
  int position_of(int candidate) const;
  bool ranks_above(int x, int y) const;
  std::string label(const CandidateSet& cs) const;  // "x>y>z"

  bool operator==(const LinearOrder&) const = default;
};

// Throws argument_error unless `ranking` is a permutation of 0..m-1, m >= 1.
LinearOrder make_order(std::vector<int> ranking);

std::int64_t factorial(int m);

// Lehmer-code rank of the permutation; index 0 is the identity ranking.
std::int64_t order_to_index(const LinearOrder& o);
// Inverse of order_to_index. Throws argument_error if index is out of range.
LinearOrder index_to_order(std::int64_t index, int m);

struct ClassicalProfile {
  std::vector<LinearOrder> orders;  // one per voter

  int voter_count() const { return static_cast<int>(orders.size()); }
  int candidate_count() const {
    return orders.empty() ? 0 : orders.front().candidate_count();
  }
};

// Throws argument_error unless n >= 2 and all orders share one candidate set.
ClassicalProfile make_profile(std::vector<LinearOrder> orders);

// Number of voters ranking x above y. tally(x,y) + tally(y,x) = n.
int pairwise_tally(const ClassicalProfile& p, int x, int y);

// Condorcet score per candidate: the number of opponents it beats or ties in
// pairwise majority. Ties award the pair to both sides.
std::vector<int> condorcet_scores(const ClassicalProfile& p);

// Total preorder as tie groups, best group first; members sorted ascending.
struct WeakOrder {
  std::vector<std::vector<int>> tie_groups;

  int candidate_count() const;
  std::string label(const CandidateSet& cs) const;  // "x ~ y > z"

  bool operator==(const WeakOrder&) const = default;
};

WeakOrder weak_order_from_scores(const std::vector<int>& scores);

// All strict orders compatible with the weak order (free permutation inside
// tie groups), sorted by Lehmer index.
std::vector<LinearOrder> linear_extensions(const WeakOrder& w);

}  // namespace qcvote
