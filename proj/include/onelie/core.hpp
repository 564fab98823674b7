#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace onelie {

// Element sets are 64-bit masks throughout; larger universes are refused.
inline constexpr int kMaxUniverse = 64;

// Operations that enumerate every subset of the universe refuse n beyond this.
inline constexpr int kMaxEnumerationUniverse = 20;

// Thrown when an input is structurally valid but too large for the
// brute-force machinery behind an operation.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The ground set {1, .., n}; n = 0 is the (valid) trivial universe.
struct Universe {
  int n = 0;

  Universe() = default;
  explicit Universe(int size);

  std::uint64_t full_mask() const;

  bool operator==(const Universe&) const = default;
};

// Mask with exactly the bit of `element` (1-based) set.
std::uint64_t element_bit(int element);

// A subset of the universe: the unit a test is asked about
// ("does this set contain an excellent element?").
class Query {
 public:
  Query() = default;

  static Query from_mask(std::uint64_t bits) { return Query(bits); }
  // Validates 1 <= e <= universe_size for every element; duplicates collapse.
  static Query from_elements(const std::vector<int>& elems, int universe_size);
  static Query from_elements(const std::vector<int>& elems, const Universe& u) {
    return from_elements(elems, u.n);
  }

  std::uint64_t mask() const { return bits_; }
  bool empty() const { return bits_ == 0; }
  int size() const;
  bool contains(int element) const;
  bool within(const Universe& u) const { return (bits_ & ~u.full_mask()) == 0; }
  std::vector<int> elements() const;  // ascending, 1-based

  auto operator<=>(const Query&) const = default;

 private:
  explicit Query(std::uint64_t bits) : bits_(bits) {}
  std::uint64_t bits_ = 0;
};

// An ordered list of queries with multiplicities 1..3.  Equal sets merge into
// the first occurrence with summed multiplicity; a sum above 3 is rejected.
// The flat expansion (one position per copy, copies consecutive, entries in
// listed order) fixes the answer order everywhere else.
class MultiFamily {
 public:
  struct Entry {
    Query query;
    int multiplicity = 1;
    bool operator==(const Entry&) const = default;
  };

  explicit MultiFamily(Universe universe) : universe_(universe) {}
  MultiFamily(Universe universe, std::vector<Entry> entries);

  const Universe& universe() const { return universe_; }
  int n() const { return universe_.n; }
  const std::vector<Entry>& entries() const { return entries_; }
  int m() const { return static_cast<int>(flat_.size()); }
  const std::vector<Query>& flat() const { return flat_; }
  int entry_of(int flat_pos) const;

  bool operator==(const MultiFamily&) const = default;

 private:
  Universe universe_;
  std::vector<Entry> entries_;
  std::vector<Query> flat_;
  std::vector<int> flat_entry_;
};

// Ground truth for one run: the excellent set plus an optional lied-at flat
// position.  At most one answer may be a lie.
struct Scenario {
  std::uint64_t excellent = 0;
  std::optional<int> lie;
};

// Y/N answers in canonical flat order.
class AnswerSequence {
 public:
  AnswerSequence() = default;
  explicit AnswerSequence(std::vector<std::uint8_t> yes) : yes_(std::move(yes)) {}

  // Accepts 'Y'/'N' case-insensitively.
  static AnswerSequence from_string(std::string_view s);

  int size() const { return static_cast<int>(yes_.size()); }
  bool yes(int pos) const { return yes_[static_cast<std::size_t>(pos)] != 0; }
  void set(int pos, bool value);
  AnswerSequence with_flip(int pos) const;
  std::string str() const;  // uppercase

  bool operator==(const AnswerSequence&) const = default;

 private:
  std::vector<std::uint8_t> yes_;
};

enum class VerdictKind { Found, NoExcellent, Undecidable, Inconsistent };

// Outcome of decoding an answer sequence.  Found names one element that is
// excellent in every scenario consistent with the answers; NoExcellent
// certifies the excellent set empty; Inconsistent means no scenario within
// the lie budget produces the answers.
struct Verdict {
  VerdictKind kind = VerdictKind::Undecidable;
  int element = 0;  // meaningful only for Found

  static Verdict found(int element) { return {VerdictKind::Found, element}; }
  static Verdict none() { return {VerdictKind::NoExcellent, 0}; }
  static Verdict undecidable() { return {VerdictKind::Undecidable, 0}; }
  static Verdict inconsistent() { return {VerdictKind::Inconsistent, 0}; }

  bool operator==(const Verdict&) const = default;
};

std::string to_string(const Verdict& v);

// Y iff the query meets the excellent set.
bool truth_of(const Query& query, std::uint64_t excellent);

// Observed answers for a scenario: truthful everywhere, flipped at the lie
// position when present.
AnswerSequence answers_for(const MultiFamily& family, const Scenario& scenario);

// Number of positions where two equal-length sequences differ.
int mismatch_count(const AnswerSequence& a, const AnswerSequence& b);

}  // namespace onelie
