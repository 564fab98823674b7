#include "onelie/strategies.hpp"

#include <algorithm>
#include <bit>

namespace onelie {

namespace {

std::uint64_t range_mask(int lo, int hi) {
  // elements lo..hi inclusive, 1-based; empty when lo > hi
  if (lo > hi) return 0;
  std::uint64_t high = (hi == 64) ? ~0ull : ((1ull << hi) - 1);
  std::uint64_t low = (1ull << (lo - 1)) - 1;
  return high & ~low;
}

// ceil(log2(x)) for x >= 1
int ceil_log2(int x) { return std::bit_width(static_cast<unsigned>(x - 1)); }

}  // namespace

MultiFamily optimal_one_lie_family(int n) {
  Universe u(n);
  std::vector<MultiFamily::Entry> entries;
  if (n > 0) {
    entries.push_back({Query::from_mask(u.full_mask()), 1});
    for (int i = 1; i <= n; ++i) entries.push_back({Query::from_mask(element_bit(i)), 2});
  }
  return MultiFamily(u, std::move(entries));
}

MultiFamily singleton_family_no_lie(int n) {
  Universe u(n);
  std::vector<MultiFamily::Entry> entries;
  for (int i = 1; i <= n; ++i) entries.push_back({Query::from_mask(element_bit(i)), 1});
  return MultiFamily(u, std::move(entries));
}

MultiFamily binary_mask_family_exactly_one(int n) {
  Universe u(n);
  if (n < 1) throw std::invalid_argument("the exactly-one promise needs n >= 1");
  int q = ceil_log2(n);
  std::vector<MultiFamily::Entry> entries;
  for (int k = 0; k < q; ++k) {
    std::uint64_t bits = 0;
    for (int i = 1; i <= n; ++i)
      if ((static_cast<unsigned>(i - 1) >> k) & 1u) bits |= element_bit(i);
    entries.push_back({Query::from_mask(bits), 1});
  }
  return MultiFamily(u, std::move(entries));
}

int decode_exactly_one(int n, const AnswerSequence& answers) {
  if (n < 1) throw std::invalid_argument("the exactly-one promise needs n >= 1");
  int q = ceil_log2(n);
  if (answers.size() != q)
    throw std::invalid_argument("expected " + std::to_string(q) + " answers, got " +
                                std::to_string(answers.size()));
  int index = 0;
  for (int k = 0; k < q; ++k)
    if (answers.yes(k)) index |= 1 << k;
  int element = index + 1;
  if (element > n)
    throw std::invalid_argument("answers name element " + std::to_string(element) +
                                " outside the universe; the exactly-one promise was broken");
  return element;
}

AdaptiveOracle make_truth_oracle(std::uint64_t excellent) {
  return [excellent](const Query& q) { return truth_of(q, excellent); };
}

AdaptiveResult adaptive_no_lie_search(const AdaptiveOracle& oracle, int n) {
  Universe u(n);
  int lo = 1, hi = n;
  bool known = false;  // candidate range certainly holds an excellent element
  int asked = 0;
  while (true) {
    if (known && lo == hi) return {Verdict::found(lo), asked};
    if (!known && lo > hi) return {Verdict::none(), asked};
    int span = hi - lo + 1;
    // Keep both continuations one question cheaper: YES narrows to a
    // power-of-two block, NO leaves at most 2^(q-1)-1 open outcomes.
    int take = known ? 1 << (ceil_log2(span) - 1)
                     : 1 << (std::bit_width(static_cast<unsigned>(span)) - 1);
    ++asked;
    if (oracle(Query::from_mask(range_mask(lo, lo + take - 1)))) {
      hi = lo + take - 1;
      known = true;
    } else {
      lo = lo + take;
    }
  }
}

int integer_root_ceil(int n, int r) {
  if (n < 1 || r < 1) throw std::invalid_argument("integer_root_ceil needs n >= 1 and r >= 1");
  for (int c = 1;; ++c) {
    long long p = 1;
    bool reached = false;
    for (int k = 0; k < r; ++k) {
      p *= c;
      if (p >= n) {
        reached = true;
        break;
      }
    }
    if (reached || p >= n) return c;
  }
}

RoundPlan::RoundPlan(int n, int rounds, int first_block, int fanout)
    : n_(n), rounds_(rounds), first_block_(first_block), fanout_(fanout) {}

int RoundPlan::block_size(int round, int span) const {
  if (round == rounds_ - 1) return 1;
  if (round == 0) return first_block_;
  return (span + fanout_ - 1) / fanout_;
}

MultiFamily RoundPlan::blocks(int lo, int hi, int size) const {
  std::vector<MultiFamily::Entry> entries;
  for (int b = lo; b <= hi; b += size)
    entries.push_back({Query::from_mask(range_mask(b, std::min(b + size - 1, hi))), 1});
  return MultiFamily(Universe(n_), std::move(entries));
}

RoundPlan::Replay RoundPlan::replay(const std::vector<AnswerSequence>& answers) const {
  Replay st;
  st.lo = 1;
  st.hi = n_;
  if (n_ == 0) {
    st.decided = true;
    st.verdict = Verdict::none();
    return st;
  }
  for (std::size_t k = 0; k < answers.size(); ++k) {
    if (st.decided || static_cast<int>(k) >= rounds_)
      throw std::invalid_argument("answers supplied past the end of the plan");
    int size = block_size(static_cast<int>(k), st.hi - st.lo + 1);
    int count = (st.hi - st.lo + size) / size;
    if (answers[k].size() != count)
      throw std::invalid_argument("round " + std::to_string(k) + " expects " + std::to_string(count) +
                                  " answers, got " + std::to_string(answers[k].size()));
    int hit = -1;
    for (int b = 0; b < count; ++b)
      if (answers[k].yes(b)) {
        hit = b;
        break;
      }
    if (hit < 0) {
      st.decided = true;
      // round 0 covers every candidate, later rounds a certainly-hit block
      st.verdict = (k == 0) ? Verdict::none() : Verdict::inconsistent();
    } else {
      int blo = st.lo + hit * size;
      st.lo = blo;
      st.hi = std::min(blo + size - 1, st.hi);
      if (st.lo == st.hi) {
        // a YES block of size one pins the element, whatever round this is
        st.decided = true;
        st.verdict = Verdict::found(st.lo);
      }
    }
    st.rounds_seen = static_cast<int>(k) + 1;
  }
  return st;
}

MultiFamily RoundPlan::round_family(int round, const std::vector<AnswerSequence>& prior) const {
  if (round < 0 || static_cast<int>(prior.size()) != round)
    throw std::invalid_argument("round index must equal the number of prior answer rounds");
  Replay st = replay(prior);
  if (st.decided || round >= rounds_) return MultiFamily(Universe(n_));
  return blocks(st.lo, st.hi, block_size(round, st.hi - st.lo + 1));
}

Verdict RoundPlan::decode(const std::vector<AnswerSequence>& answers) const {
  Replay st = replay(answers);
  if (!st.decided) throw std::invalid_argument("answers do not cover a complete branch of the plan");
  return st.verdict;
}

RoundPlan::RunResult RoundPlan::run(const AdaptiveOracle& oracle) const {
  std::vector<AnswerSequence> collected;
  int questions = 0;
  for (int k = 0; k < rounds_; ++k) {
    MultiFamily fam = round_family(k, collected);
    if (fam.m() == 0) break;
    std::vector<std::uint8_t> yes;
    for (const Query& q : fam.flat()) yes.push_back(oracle(q) ? 1 : 0);
    questions += fam.m();
    collected.emplace_back(std::move(yes));
  }
  return {decode(collected), questions, static_cast<int>(collected.size())};
}

int RoundPlan::worst_case_length() const {
  int total = 0;
  int span = n_;
  for (int k = 0; k < rounds_ && span > 0; ++k) {
    int size = block_size(k, span);
    total += (span + size - 1) / size;
    span = size;  // worst branch survives a full-size block
    if (size == 1) break;
  }
  return total;
}

RoundPlan two_round_plan(int n) {
  Universe u(n);
  int b = (n >= 1) ? integer_root_ceil(n, 2) : 1;
  return RoundPlan(n, 2, b, b);
}

RoundPlan multi_round_plan(int n, int rounds) {
  Universe u(n);
  if (rounds < 1) throw std::invalid_argument("a plan needs at least one round");
  int c = (n >= 1) ? integer_root_ceil(n, rounds) : 1;
  int first = (n >= 1) ? (n + c - 1) / c : 1;
  return RoundPlan(n, rounds, first, c);
}

}  // namespace onelie
