#include "onelie/core.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <unordered_map>

namespace onelie {

Universe::Universe(int size) : n(size) {
  if (size < 0) throw std::invalid_argument("universe size must be non-negative");
  if (size > kMaxUniverse)
    throw CapacityError("universe size " + std::to_string(size) + " exceeds the supported maximum of " +
                        std::to_string(kMaxUniverse));
}

std::uint64_t Universe::full_mask() const {
  if (n == 0) return 0;
  if (n == 64) return ~0ull;
  return (1ull << n) - 1;
}

std::uint64_t element_bit(int element) {
  if (element < 1 || element > kMaxUniverse)
    throw std::invalid_argument("element index out of range: " + std::to_string(element));
  return 1ull << (element - 1);
}

Query Query::from_elements(const std::vector<int>& elems, int universe_size) {
  Universe u(universe_size);
  std::uint64_t bits = 0;
  for (int e : elems) {
    if (e < 1 || e > universe_size)
      throw std::invalid_argument("element " + std::to_string(e) + " outside universe of size " +
                                  std::to_string(universe_size));
    bits |= element_bit(e);
  }
  return Query(bits);
}

int Query::size() const { return std::popcount(bits_); }

bool Query::contains(int element) const { return (bits_ & element_bit(element)) != 0; }

std::vector<int> Query::elements() const {
  std::vector<int> out;
  for (std::uint64_t rest = bits_; rest != 0; rest &= rest - 1)
    out.push_back(std::countr_zero(rest) + 1);
  return out;
}

MultiFamily::MultiFamily(Universe universe, std::vector<Entry> entries) : universe_(universe) {
  std::unordered_map<std::uint64_t, std::size_t> index;
  for (const Entry& e : entries) {
    if (!e.query.within(universe_))
      throw std::invalid_argument("query contains elements outside the universe");
    if (e.multiplicity < 1 || e.multiplicity > 3)
      throw std::invalid_argument("multiplicity must be 1, 2 or 3");
    auto it = index.find(e.query.mask());
    if (it == index.end()) {
      index.emplace(e.query.mask(), entries_.size());
      entries_.push_back(e);
    } else {
      int total = entries_[it->second].multiplicity + e.multiplicity;
      if (total > 3)
        throw std::invalid_argument("merged multiplicity of a repeated query set exceeds 3");
      entries_[it->second].multiplicity = total;
    }
  }
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    for (int c = 0; c < entries_[i].multiplicity; ++c) {
      flat_.push_back(entries_[i].query);
      flat_entry_.push_back(static_cast<int>(i));
    }
  }
}

int MultiFamily::entry_of(int flat_pos) const {
  if (flat_pos < 0 || flat_pos >= m())
    throw std::invalid_argument("flat position out of range");
  return flat_entry_[static_cast<std::size_t>(flat_pos)];
}

AnswerSequence AnswerSequence::from_string(std::string_view s) {
  std::vector<std::uint8_t> yes;
  yes.reserve(s.size());
  for (char c : s) {
    char u = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    if (u == 'Y')
      yes.push_back(1);
    else if (u == 'N')
      yes.push_back(0);
    else
      throw std::invalid_argument(std::string("invalid answer character '") + c + "' (expected Y or N)");
  }
  return AnswerSequence(std::move(yes));
}

void AnswerSequence::set(int pos, bool value) {
  yes_.at(static_cast<std::size_t>(pos)) = value ? 1 : 0;
}

AnswerSequence AnswerSequence::with_flip(int pos) const {
  AnswerSequence out = *this;
  out.yes_.at(static_cast<std::size_t>(pos)) ^= 1;
  return out;
}

std::string AnswerSequence::str() const {
  std::string s;
  s.reserve(yes_.size());
  for (std::uint8_t b : yes_) s.push_back(b ? 'Y' : 'N');
  return s;
}

std::string to_string(const Verdict& v) {
  switch (v.kind) {
    case VerdictKind::Found:
      return "found(" + std::to_string(v.element) + ")";
    case VerdictKind::NoExcellent:
      return "none";
    case VerdictKind::Undecidable:
      return "undecidable";
    case VerdictKind::Inconsistent:
      return "inconsistent";
  }
  return "?";
}

bool truth_of(const Query& query, std::uint64_t excellent) {
  return (query.mask() & excellent) != 0;
}

AnswerSequence answers_for(const MultiFamily& family, const Scenario& scenario) {
  if ((scenario.excellent & ~family.universe().full_mask()) != 0)
    throw std::invalid_argument("excellent set contains elements outside the universe");
  if (scenario.lie && (*scenario.lie < 0 || *scenario.lie >= family.m()))
    throw std::invalid_argument("lie position out of range");
  std::vector<std::uint8_t> yes(static_cast<std::size_t>(family.m()));
  const auto& flat = family.flat();
  for (int p = 0; p < family.m(); ++p)
    yes[static_cast<std::size_t>(p)] = truth_of(flat[static_cast<std::size_t>(p)], scenario.excellent) ? 1 : 0;
  AnswerSequence out{std::move(yes)};
  if (scenario.lie) return out.with_flip(*scenario.lie);
  return out;
}

int mismatch_count(const AnswerSequence& a, const AnswerSequence& b) {
  if (a.size() != b.size()) throw std::invalid_argument("answer sequences differ in length");
  int d = 0;
  for (int p = 0; p < a.size(); ++p) d += a.yes(p) != b.yes(p);
  return d;
}

}  // namespace onelie
