#pragma once

#include <functional>
#include <vector>

#include "onelie/core.hpp"

namespace onelie {

// [n] once plus every singleton twice, in that order; m = 2n+1.  Tolerates
// one lie.  For n = 1 the three copies of {1} merge into one entry.
MultiFamily optimal_one_lie_family(int n);

// Every singleton once; solves the lie-free problem with m = n.
MultiFamily singleton_family_no_lie(int n);

// ceil(log2 n) bit-mask queries for the promise "exactly one excellent
// element": query k contains element i iff bit k of (i-1) is set.
MultiFamily binary_mask_family_exactly_one(int n);

// Reads the element index back from bit-mask answers (answer k = bit k).
// Throws if the length is wrong or the index exceeds n (broken promise).
int decode_exactly_one(int n, const AnswerSequence& answers);

// Answers one membership query truthfully against a hidden excellent set.
using AdaptiveOracle = std::function<bool(const Query&)>;

AdaptiveOracle make_truth_oracle(std::uint64_t excellent);

struct AdaptiveResult {
  Verdict verdict;
  int questions = 0;
};

// Lie-free adaptive search by prefix splitting: ask an initial block of the
// remaining candidates; YES narrows to the block, NO discards it.  Worst
// case is exactly ceil(log2(n+1)) questions.
AdaptiveResult adaptive_no_lie_search(const AdaptiveOracle& oracle, int n);

// Smallest c >= 1 with c^r >= n.
int integer_root_ceil(int n, int r);

// Lie-free staged plan over a fixed number of batched rounds.  Round 0 asks
// disjoint blocks covering the universe; each later round subdivides the
// lowest-indexed YES block of the round before; the final round asks
// singletons.  All NO in round 0 certifies no excellent element.
class RoundPlan {
 public:
  int n() const { return n_; }
  int rounds() const { return rounds_; }
  int fanout() const { return fanout_; }

  // Family for `round` (0-based) given answers to all previous rounds.
  // Defined for every prior answer combination; empty once the outcome is
  // already decided or the plan is exhausted.
  MultiFamily round_family(int round, const std::vector<AnswerSequence>& prior) const;
  MultiFamily first_round() const { return round_family(0, {}); }

  // Verdict from the per-round answers of one complete branch.
  Verdict decode(const std::vector<AnswerSequence>& answers) const;

  struct RunResult {
    Verdict verdict;
    int questions = 0;
    int rounds_used = 0;
  };
  RunResult run(const AdaptiveOracle& oracle) const;

  // Question total along the longest branch.
  int worst_case_length() const;

 private:
  friend RoundPlan two_round_plan(int n);
  friend RoundPlan multi_round_plan(int n, int rounds);
  RoundPlan(int n, int rounds, int first_block, int fanout);

  struct Replay {
    int lo = 1, hi = 0;
    bool decided = false;
    Verdict verdict;
    int rounds_seen = 0;
  };
  int block_size(int round, int span) const;
  MultiFamily blocks(int lo, int hi, int size) const;
  Replay replay(const std::vector<AnswerSequence>& answers) const;

  int n_ = 0;
  int rounds_ = 1;
  int first_block_ = 1;
  int fanout_ = 1;
};

// Blocks of size ceil(sqrt(n)) and then the singletons of the YES block;
// total length at most 2*ceil(sqrt(n)).
RoundPlan two_round_plan(int n);

// r rounds with fanout c = ceil(n^(1/r)); total length at most r*c.  r = 1
// degenerates to the singleton family.
RoundPlan multi_round_plan(int n, int rounds);

}  // namespace onelie
