#include "onelie/verifier.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

namespace onelie {

CoverageReport check_coverage(const MultiFamily& family) {
  CoverageReport rep;
  rep.cover_counts.assign(static_cast<std::size_t>(family.n()), 0);
  for (const auto& e : family.entries())
    for (int el : e.query.elements())
      rep.cover_counts[static_cast<std::size_t>(el - 1)] += e.multiplicity;
  for (int el = 1; el <= family.n(); ++el)
    if (rep.cover_counts[static_cast<std::size_t>(el - 1)] < 3) rep.under_covered.push_back(el);
  rep.ok = rep.under_covered.empty();
  return rep;
}

PartitionReport check_partition_condition(const MultiFamily& family) {
  if (family.m() > kMaxPartitionPositions)
    throw CapacityError("check_partition_condition supports at most " +
                        std::to_string(kMaxPartitionPositions) + " flat positions; got " +
                        std::to_string(family.m()));
  if (family.n() > kMaxPartitionUniverse)
    throw CapacityError("check_partition_condition supports n <= " +
                        std::to_string(kMaxPartitionUniverse) + "; got n = " +
                        std::to_string(family.n()));

  const auto& entries = family.entries();
  const int k = static_cast<int>(entries.size());
  std::vector<int> first_counts(static_cast<std::size_t>(k), 0);

  PartitionReport rep;
  rep.ok = true;

  // Walk all per-entry YES-side counts (copies are interchangeable).
  auto test_current = [&]() -> bool {  // false once a violation is found
    int total_first = 0;
    for (int c : first_counts) total_first += c;
    if (total_first < 2) return true;
    PartitionAssignment split;
    split.in_first.reserve(static_cast<std::size_t>(family.m()));
    for (int i = 0; i < k; ++i)
      for (int c = 0; c < entries[static_cast<std::size_t>(i)].multiplicity; ++c)
        split.in_first.push_back(c < first_counts[static_cast<std::size_t>(i)] ? 1 : 0);
    auto common = split_candidates_intersection(family, split);
    if (common && common->empty()) {
      rep.ok = false;
      rep.witness = std::move(split);
      return false;
    }
    return true;
  };

  // odometer over counts 0..multiplicity per entry
  if (!test_current()) return rep;
  while (true) {
    int i = 0;
    while (i < k && first_counts[static_cast<std::size_t>(i)] ==
                        entries[static_cast<std::size_t>(i)].multiplicity) {
      first_counts[static_cast<std::size_t>(i)] = 0;
      ++i;
    }
    if (i == k) break;
    ++first_counts[static_cast<std::size_t>(i)];
    if (!test_current()) return rep;
  }
  return rep;
}

SolvesReport solves(const MultiFamily& family, int lie_budget) {
  if (family.n() > kMaxSolvesUniverse)
    throw CapacityError("solves supports n <= " + std::to_string(kMaxSolvesUniverse) +
                        "; got n = " + std::to_string(family.n()));
  if (lie_budget < 0 || lie_budget > 3)
    throw std::invalid_argument("solves supports lie budgets 0..3");

  const int m = family.m();
  std::unordered_set<std::string> seen;
  SolvesReport rep;
  rep.ok = true;

  auto check = [&](const AnswerSequence& s) -> bool {  // false on failure
    if (!seen.insert(s.str()).second) return true;
    Verdict v = decode_generic(family, s, lie_budget);
    // Reachable sequences always have their generating scenario consistent,
    // and Found/NoExcellent verdicts are correct by construction.
    if (v.kind == VerdictKind::Found || v.kind == VerdictKind::NoExcellent) return true;
    rep.ok = false;
    rep.witness = s;
    return false;
  };

  // every scenario's truthful answers, flipped in up to lie_budget places
  const std::uint64_t count = 1ull << family.n();
  for (std::uint64_t t = 0; t < count; ++t) {
    AnswerSequence truthful = answers_for(family, Scenario{t, std::nullopt});
    if (!check(truthful)) return rep;
    // lexicographic flip sets of sizes 1..lie_budget
    std::vector<int> stack;
    auto rec = [&](auto&& self, int from) -> bool {
      if (static_cast<int>(stack.size()) == lie_budget) return true;
      for (int p = from; p < m; ++p) {
        stack.push_back(p);
        AnswerSequence s = truthful;
        for (int q : stack) s = s.with_flip(q);
        if (!check(s)) return false;
        if (!self(self, p + 1)) return false;
        stack.pop_back();
      }
      return true;
    };
    if (!rec(rec, 0)) return rep;
  }
  return rep;
}

MultiFamily restrict_family(const MultiFamily& family, int j) {
  const int n = family.n();
  if (j < 1 || j > n) throw std::invalid_argument("element to remove is outside the universe");
  bool repeated = false;
  for (const auto& e : family.entries())
    if (e.query.mask() == element_bit(j) && e.multiplicity >= 2) repeated = true;
  if (!repeated)
    throw std::invalid_argument("restriction needs the singleton {" + std::to_string(j) +
                                "} with multiplicity at least 2");

  const std::uint64_t jbit = element_bit(j);
  const std::uint64_t nbit = element_bit(n);
  std::vector<MultiFamily::Entry> out;
  std::vector<std::uint64_t> masks;
  for (const auto& e : family.entries()) {
    std::uint64_t mask = e.query.mask();
    if (j != n) {  // swap labels j and n so the removed element is the top one
      bool had_j = (mask & jbit) != 0, had_n = (mask & nbit) != 0;
      mask &= ~(jbit | nbit);
      if (had_j) mask |= nbit;
      if (had_n) mask |= jbit;
    }
    if (mask == nbit) continue;  // the dropped singleton's copies
    mask &= ~nbit;
    auto it = std::find(masks.begin(), masks.end(), mask);
    if (it == masks.end()) {
      masks.push_back(mask);
      out.push_back({Query::from_mask(mask), e.multiplicity});
    } else {
      auto& slot = out[static_cast<std::size_t>(it - masks.begin())];
      slot.multiplicity = std::min(3, slot.multiplicity + e.multiplicity);
    }
  }
  return MultiFamily(Universe(n - 1), std::move(out));
}

StructuralReport structural_checks(const MultiFamily& family) {
  StructuralReport rep;
  for (const auto& e : family.entries()) {
    if (e.query.size() == 1) {
      rep.has_singleton = true;
      if (e.multiplicity >= 2) rep.has_repeated_singleton = true;
    }
  }
  return rep;
}

}  // namespace onelie
