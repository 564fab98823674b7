#pragma once

#include <optional>
#include <vector>

#include "onelie/core.hpp"

namespace onelie {

// Assigns each flat position to one side of a disjoint split; copies of the
// same entry may land on different sides.
struct PartitionAssignment {
  std::vector<std::uint8_t> in_first;  // flat position -> assumed-YES side?

  int size() const { return static_cast<int>(in_first.size()); }
  int first_count() const;
};

// Case analysis for optimal_one_lie_family(n); answers are read in that
// family's flat order (the whole universe first, then each singleton twice)
// and must have length 2n+1.  Decides every sequence: Found or NoExcellent
// when some scenario with at most one lie fits, Inconsistent otherwise,
// never Undecidable.
Verdict decode_optimal(int n, const AnswerSequence& answers);

// All excellent sets whose truthful answers differ from `answers` in at most
// lie_budget positions, ascending by mask.  Enumerates all 2^n subsets and
// refuses n above kMaxEnumerationUniverse.
std::vector<std::uint64_t> consistent_scenarios(const MultiFamily& family,
                                                const AnswerSequence& answers,
                                                int lie_budget);

// Scenario-consistency decoder for any family and lie budget: Inconsistent
// when nothing fits, NoExcellent when only the empty set fits, Found(x) for
// the smallest x shared by every fitting set (provided the empty set does
// not fit), Undecidable otherwise.
Verdict decode_generic(const MultiFamily& family, const AnswerSequence& answers,
                       int lie_budget);

// Candidate excellent sets assuming YES on every first-side position and NO
// on every second-side position, with at most one constraint violated.
// Requires at least two first-side positions.
std::vector<std::uint64_t> split_candidates(const MultiFamily& family,
                                            const PartitionAssignment& split);

// Elements common to all candidates of the split; nullopt when there are no
// candidates at all (distinct from an empty intersection).
std::optional<Query> split_candidates_intersection(const MultiFamily& family,
                                                   const PartitionAssignment& split);

}  // namespace onelie
