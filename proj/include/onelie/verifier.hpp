#pragma once

#include <optional>
#include <vector>

#include "onelie/decoder.hpp"

namespace onelie {

// solves() decodes every reachable answer sequence; refuse universes beyond
// this (cost grows like 4^n).
inline constexpr int kMaxSolvesUniverse = 10;

// check_partition_condition walks every split of the flat positions.
inline constexpr int kMaxPartitionPositions = 26;
inline constexpr int kMaxPartitionUniverse = 16;

struct CoverageReport {
  bool ok = false;
  std::vector<int> cover_counts;   // per element 1..n
  std::vector<int> under_covered;  // elements covered fewer than 3 times
};

// Necessary for one-lie decoding: every element must appear in at least
// three flat positions.
CoverageReport check_coverage(const MultiFamily& family);

struct PartitionReport {
  bool ok = false;
  std::optional<PartitionAssignment> witness;  // a violating split when !ok
};

// For every split with at least two assumed-YES positions, the candidate
// sets must be absent or share an element.  Copies of one entry are
// interchangeable, so only the per-entry count on the YES side is varied.
PartitionReport check_partition_condition(const MultiFamily& family);

struct SolvesReport {
  bool ok = false;
  std::optional<AnswerSequence> witness;  // a reachable sequence that fails
};

// True iff every answer sequence reachable from some scenario within the
// lie budget decodes to a verdict that is correct for all of its generating
// scenarios (so never Undecidable).
SolvesReport solves(const MultiFamily& family, int lie_budget = 1);

// Removes element j from a family that asks the singleton {j} at least
// twice: relabel j as the top element, drop the singleton's copies, strip
// the element from the remaining sets and merge what collides (multiplicity
// sums clamp at 3).  The result lives on a universe one smaller and is at
// least two flat positions shorter.
MultiFamily restrict_family(const MultiFamily& family, int j);

struct StructuralReport {
  bool has_singleton = false;
  bool has_repeated_singleton = false;
};

StructuralReport structural_checks(const MultiFamily& family);

}  // namespace onelie
