#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "onelie/core.hpp"

namespace onelie {

// The exhaustive minimum search enumerates every multi-family up to
// relabeling; the level sizes explode quickly beyond this.
inline constexpr int kMaxSearchUniverse = 4;
inline constexpr int kMaxAllMinimalUniverse = 3;
inline constexpr int kMaxCanonicalUniverse = 8;

// Relabels elements: element i becomes perm[i-1].  perm must be a
// permutation of 1..n.  Entry order is preserved.
MultiFamily permute_family(const MultiFamily& family, const std::vector<int>& perm);

// The representative of a family's relabeling class: entries sorted
// ascending by mask under the relabeling whose (mask, multiplicity) list is
// lexicographically smallest.
MultiFamily canonical_form(const MultiFamily& family);
bool is_canonical(const MultiFamily& family);

// Every canonical family of nonempty queries with exactly m flat positions
// on [n], in ascending enumeration order.
void enumerate_canonical_families(int n, int m,
                                  const std::function<void(const MultiFamily&)>& fn);

struct SearchOptions {
  int max_m = 0;      // largest total size tried; 0 means 2n+1
  bool prune = true;  // apply the necessary-condition filters before solving
  int threads = 0;    // 0 means hardware concurrency
};

struct SearchReport {
  int n = 0;
  int max_m = 0;
  std::optional<int> min_size;           // absent when nothing solves up to max_m
  std::vector<MultiFamily> witnesses;    // every solving family at min_size, canonical
  std::uint64_t families_examined = 0;
  std::map<std::string, std::uint64_t> pruned_by;
  std::uint64_t solve_checks = 0;
};

// Size-ascending exhaustive search for the smallest family that still
// decodes correctly under one lie.  The filters only discard families that
// provably cannot solve, so the first size with a survivor is the minimum.
SearchReport min_family_size(int n, const SearchOptions& options = {});

// Canonical representatives of every minimum-size solving family.
std::vector<MultiFamily> all_minimal_families(int n);

}  // namespace onelie
