#include "onelie/decoder.hpp"

#include <bit>

namespace onelie {

namespace {

void require_enumerable(const MultiFamily& family, const char* what) {
  if (family.n() > kMaxEnumerationUniverse)
    throw CapacityError(std::string(what) + " enumerates all subsets and supports n <= " +
                        std::to_string(kMaxEnumerationUniverse) + "; got n = " +
                        std::to_string(family.n()));
}

// mismatches between the truthful answers for `excellent` and `answers`,
// stopping once `cap` is exceeded
int truth_distance(const std::vector<Query>& flat, std::uint64_t excellent,
                   const AnswerSequence& answers, int cap) {
  int d = 0;
  for (std::size_t p = 0; p < flat.size(); ++p) {
    d += ((flat[p].mask() & excellent) != 0) != answers.yes(static_cast<int>(p));
    if (d > cap) break;
  }
  return d;
}

}  // namespace

int PartitionAssignment::first_count() const {
  int c = 0;
  for (std::uint8_t b : in_first) c += b != 0;
  return c;
}

Verdict decode_optimal(int n, const AnswerSequence& answers) {
  Universe u(n);
  if (n == 0) {
    if (answers.size() != 0) throw std::invalid_argument("expected an empty answer sequence for n = 0");
    return Verdict::none();
  }
  if (answers.size() != 2 * n + 1)
    throw std::invalid_argument("expected " + std::to_string(2 * n + 1) + " answers, got " +
                                std::to_string(answers.size()));

  // position 0 answers the whole universe; positions 2i-1, 2i answer the two
  // copies of {i}
  int mismatched = 0;  // singleton pairs with differing answers
  int mismatch_at = 0;
  int both_yes_at = 0;  // smallest i answered YES twice
  for (int i = 1; i <= n; ++i) {
    bool a = answers.yes(2 * i - 1), b = answers.yes(2 * i);
    if (a != b) {
      if (++mismatched >= 2) return Verdict::inconsistent();  // two forced lies
      mismatch_at = i;
    } else if (a && both_yes_at == 0) {
      both_yes_at = i;
    }
  }

  if (mismatched == 1) {
    // The lie sits at one copy of {mismatch_at}; every other answer is true.
    if (answers.yes(0)) {
      // some excellent element exists: a doubly-YES singleton names it,
      // otherwise everything else is excluded and mismatch_at remains
      return Verdict::found(both_yes_at != 0 ? both_yes_at : mismatch_at);
    }
    // the whole-universe NO is true, unless a doubly-YES pair contradicts it
    return both_yes_at != 0 ? Verdict::inconsistent() : Verdict::none();
  }

  // All pairs agree, so no singleton pair hides a second lie: doubly-YES
  // pairs are true YES, doubly-NO pairs true NO, whatever position 0 says.
  return both_yes_at != 0 ? Verdict::found(both_yes_at) : Verdict::none();
}

std::vector<std::uint64_t> consistent_scenarios(const MultiFamily& family,
                                                const AnswerSequence& answers,
                                                int lie_budget) {
  require_enumerable(family, "consistent_scenarios");
  if (answers.size() != family.m())
    throw std::invalid_argument("answer sequence length does not match the family");
  if (lie_budget < 0) throw std::invalid_argument("lie budget must be non-negative");
  const auto& flat = family.flat();
  std::vector<std::uint64_t> out;
  const std::uint64_t count = 1ull << family.n();
  for (std::uint64_t t = 0; t < count; ++t)
    if (truth_distance(flat, t, answers, lie_budget) <= lie_budget) out.push_back(t);
  return out;
}

Verdict decode_generic(const MultiFamily& family, const AnswerSequence& answers,
                       int lie_budget) {
  require_enumerable(family, "decode_generic");
  if (answers.size() != family.m())
    throw std::invalid_argument("answer sequence length does not match the family");
  if (lie_budget < 0) throw std::invalid_argument("lie budget must be non-negative");
  const auto& flat = family.flat();
  bool empty_fits = false;
  bool any_nonempty = false;
  std::uint64_t common = ~0ull;
  const std::uint64_t count = 1ull << family.n();
  for (std::uint64_t t = 0; t < count; ++t) {
    if (truth_distance(flat, t, answers, lie_budget) > lie_budget) continue;
    if (t == 0) {
      empty_fits = true;
    } else {
      any_nonempty = true;
      common &= t;
    }
  }
  if (!empty_fits && !any_nonempty) return Verdict::inconsistent();
  if (!any_nonempty) return Verdict::none();
  if (empty_fits) return Verdict::undecidable();
  common &= family.universe().full_mask();
  if (common == 0) return Verdict::undecidable();
  return Verdict::found(std::countr_zero(common) + 1);
}

namespace {

// violations of "YES on first side, NO on second side" by candidate set t
int split_violations(const std::vector<Query>& flat, const PartitionAssignment& split,
                     std::uint64_t t, int cap) {
  int v = 0;
  for (std::size_t p = 0; p < flat.size(); ++p) {
    bool hit = (flat[p].mask() & t) != 0;
    v += split.in_first[p] ? !hit : hit;
    if (v > cap) break;
  }
  return v;
}

void require_split(const MultiFamily& family, const PartitionAssignment& split) {
  if (split.size() != family.m())
    throw std::invalid_argument("partition assignment length does not match the family");
  if (split.first_count() < 2)
    throw std::invalid_argument("the assumed-YES side needs at least two positions");
}

}  // namespace

std::vector<std::uint64_t> split_candidates(const MultiFamily& family,
                                            const PartitionAssignment& split) {
  require_enumerable(family, "split_candidates");
  require_split(family, split);
  const auto& flat = family.flat();
  std::vector<std::uint64_t> out;
  const std::uint64_t count = 1ull << family.n();
  for (std::uint64_t t = 0; t < count; ++t)
    if (split_violations(flat, split, t, 1) <= 1) out.push_back(t);
  return out;
}

std::optional<Query> split_candidates_intersection(const MultiFamily& family,
                                                   const PartitionAssignment& split) {
  require_enumerable(family, "split_candidates_intersection");
  require_split(family, split);
  const auto& flat = family.flat();
  bool any = false;
  std::uint64_t common = family.universe().full_mask();
  const std::uint64_t count = 1ull << family.n();
  for (std::uint64_t t = 0; t < count; ++t) {
    if (split_violations(flat, split, t, 1) > 1) continue;
    any = true;
    common &= t;
    if (common == 0) break;
  }
  if (!any) return std::nullopt;
  return Query::from_mask(common);
}

}  // namespace onelie
