#include "onelie/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <numeric>
#include <thread>

#include "onelie/verifier.hpp"

namespace onelie {

namespace {

using Key = std::vector<std::pair<std::uint64_t, int>>;  // (mask, multiplicity) ascending

std::vector<std::vector<int>> permutations_of(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::uint64_t remap_mask(std::uint64_t mask, const std::vector<int>& perm) {
  std::uint64_t out = 0;
  for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1)
    out |= element_bit(perm[static_cast<std::size_t>(std::countr_zero(rest))]);
  return out;
}

// per-permutation lookup of remapped masks, for small n
struct PermTables {
  std::vector<std::vector<std::uint16_t>> remap;  // [perm][mask]

  explicit PermTables(int n) {
    auto perms = permutations_of(n);
    const int size = 1 << n;
    remap.resize(perms.size());
    for (std::size_t pi = 0; pi < perms.size(); ++pi) {
      remap[pi].resize(static_cast<std::size_t>(size));
      for (int mask = 0; mask < size; ++mask)
        remap[pi][static_cast<std::size_t>(mask)] =
            static_cast<std::uint16_t>(remap_mask(static_cast<std::uint64_t>(mask), perms[pi]));
    }
  }
};

bool key_is_canonical(const Key& key, const PermTables& tables) {
  Key scratch;
  for (std::size_t pi = 1; pi < tables.remap.size(); ++pi) {  // 0 is the identity
    scratch.clear();
    for (const auto& [mask, cnt] : key)
      scratch.emplace_back(tables.remap[pi][static_cast<std::size_t>(mask)], cnt);
    std::sort(scratch.begin(), scratch.end());
    if (scratch < key) return false;
  }
  return true;
}

MultiFamily family_from_key(int n, const Key& key) {
  std::vector<MultiFamily::Entry> entries;
  entries.reserve(key.size());
  for (const auto& [mask, cnt] : key) entries.push_back({Query::from_mask(mask), cnt});
  return MultiFamily(Universe(n), std::move(entries));
}

Key key_of(const MultiFamily& family) {
  Key key;
  for (const auto& e : family.entries()) key.emplace_back(e.query.mask(), e.multiplicity);
  std::sort(key.begin(), key.end());
  return key;
}

// all count vectors over masks idx.. summing to `remaining`, counts 0..3
void walk(int nmasks, int idx, int remaining, std::vector<int>& counts,
          const std::function<void(const std::vector<int>&)>& leaf) {
  if (idx == nmasks) {
    if (remaining == 0) leaf(counts);
    return;
  }
  if (remaining > 3 * (nmasks - idx)) return;
  const int cap = std::min(3, remaining);
  for (int c = 0; c <= cap; ++c) {
    counts[static_cast<std::size_t>(idx)] = c;
    walk(nmasks, idx + 1, remaining - c, counts, leaf);
  }
  counts[static_cast<std::size_t>(idx)] = 0;
}

struct LevelOut {
  std::uint64_t examined = 0;
  std::uint64_t non_canonical = 0;
  std::uint64_t coverage = 0;
  std::uint64_t no_singleton = 0;
  std::uint64_t no_repeated_singleton = 0;
  std::uint64_t solve_checks = 0;
  std::vector<Key> witnesses;
};

// work units: fixed counts for the first one or two masks, everything else
// enumerated inside the task; merging in task order reproduces the
// sequential enumeration exactly
std::vector<std::vector<int>> task_prefixes(int nmasks, int m) {
  const int depth = std::min(2, nmasks);
  std::vector<std::vector<int>> out;
  if (depth == 0) {
    out.push_back({});
    return out;
  }
  for (int c0 = 0; c0 <= 3; ++c0) {
    if (c0 > m) break;
    if (depth == 1) {
      out.push_back({c0});
      continue;
    }
    for (int c1 = 0; c1 <= 3; ++c1) {
      if (c0 + c1 > m) break;
      out.push_back({c0, c1});
    }
  }
  return out;
}

void process_leaf(int n, const std::vector<int>& counts, bool prune, const PermTables& tables,
                  LevelOut& out) {
  ++out.examined;
  Key key;
  const int nmasks = static_cast<int>(counts.size());
  for (int i = 0; i < nmasks; ++i)
    if (counts[static_cast<std::size_t>(i)] > 0)
      key.emplace_back(static_cast<std::uint64_t>(i + 1), counts[static_cast<std::size_t>(i)]);
  if (!key_is_canonical(key, tables)) {
    ++out.non_canonical;
    return;
  }
  if (prune) {
    int cover[4] = {0, 0, 0, 0};
    bool singleton = false, repeated = false;
    for (const auto& [mask, cnt] : key) {
      for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1)
        cover[std::countr_zero(rest)] += cnt;
      if (std::popcount(mask) == 1) {
        singleton = true;
        if (cnt >= 2) repeated = true;
      }
    }
    for (int e = 0; e < n; ++e)
      if (cover[e] < 3) {
        ++out.coverage;
        return;
      }
    if (!singleton) {
      ++out.no_singleton;
      return;
    }
    if (!repeated) {
      ++out.no_repeated_singleton;
      return;
    }
  }
  ++out.solve_checks;
  if (solves(family_from_key(n, key), 1).ok) out.witnesses.push_back(key);
}

LevelOut run_level(int n, int m, bool prune, const PermTables& tables, int threads) {
  const int nmasks = (1 << n) - 1;
  auto prefixes = task_prefixes(nmasks, m);
  std::vector<LevelOut> results(prefixes.size());

  std::atomic<std::size_t> next{0};
  auto work = [&]() {
    for (std::size_t i; (i = next.fetch_add(1)) < prefixes.size();) {
      const auto& pre = prefixes[i];
      LevelOut& out = results[i];
      std::vector<int> counts(static_cast<std::size_t>(nmasks), 0);
      int used = 0;
      for (std::size_t k = 0; k < pre.size(); ++k) {
        counts[k] = pre[k];
        used += pre[k];
      }
      walk(nmasks, static_cast<int>(pre.size()), m - used, counts,
           [&](const std::vector<int>& full) { process_leaf(n, full, prune, tables, out); });
    }
  };

  int nt = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
  nt = std::clamp(nt, 1, static_cast<int>(prefixes.size()));
  if (nt <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < nt; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }

  LevelOut total;
  for (auto& r : results) {
    total.examined += r.examined;
    total.non_canonical += r.non_canonical;
    total.coverage += r.coverage;
    total.no_singleton += r.no_singleton;
    total.no_repeated_singleton += r.no_repeated_singleton;
    total.solve_checks += r.solve_checks;
    for (auto& w : r.witnesses) total.witnesses.push_back(std::move(w));
  }
  return total;
}

}  // namespace

MultiFamily permute_family(const MultiFamily& family, const std::vector<int>& perm) {
  const int n = family.n();
  if (static_cast<int>(perm.size()) != n)
    throw std::invalid_argument("permutation length does not match the universe");
  std::vector<bool> hit(static_cast<std::size_t>(n), false);
  for (int v : perm) {
    if (v < 1 || v > n || hit[static_cast<std::size_t>(v - 1)])
      throw std::invalid_argument("not a permutation of 1..n");
    hit[static_cast<std::size_t>(v - 1)] = true;
  }
  std::vector<MultiFamily::Entry> entries;
  for (const auto& e : family.entries())
    entries.push_back({Query::from_mask(remap_mask(e.query.mask(), perm)), e.multiplicity});
  return MultiFamily(family.universe(), std::move(entries));
}

MultiFamily canonical_form(const MultiFamily& family) {
  const int n = family.n();
  if (n > kMaxCanonicalUniverse)
    throw CapacityError("canonical_form tries all n! relabelings and supports n <= " +
                        std::to_string(kMaxCanonicalUniverse));
  Key best = key_of(family);
  for (const auto& perm : permutations_of(n)) {
    Key cand;
    for (const auto& e : family.entries())
      cand.emplace_back(remap_mask(e.query.mask(), perm), e.multiplicity);
    std::sort(cand.begin(), cand.end());
    if (cand < best) best = std::move(cand);
  }
  std::vector<MultiFamily::Entry> entries;
  for (const auto& [mask, cnt] : best) entries.push_back({Query::from_mask(mask), cnt});
  return MultiFamily(family.universe(), std::move(entries));
}

bool is_canonical(const MultiFamily& family) { return family == canonical_form(family); }

void enumerate_canonical_families(int n, int m,
                                  const std::function<void(const MultiFamily&)>& fn) {
  if (n < 0 || m < 0) throw std::invalid_argument("n and m must be non-negative");
  if (n > kMaxSearchUniverse)
    throw CapacityError("family enumeration supports n <= " + std::to_string(kMaxSearchUniverse));
  if (n == 0) {
    if (m == 0) fn(MultiFamily(Universe(0)));
    return;
  }
  PermTables tables(n);
  const int nmasks = (1 << n) - 1;
  std::vector<int> counts(static_cast<std::size_t>(nmasks), 0);
  walk(nmasks, 0, m, counts, [&](const std::vector<int>& full) {
    Key key;
    for (int i = 0; i < nmasks; ++i)
      if (full[static_cast<std::size_t>(i)] > 0)
        key.emplace_back(static_cast<std::uint64_t>(i + 1), full[static_cast<std::size_t>(i)]);
    if (key_is_canonical(key, tables)) fn(family_from_key(n, key));
  });
}

SearchReport min_family_size(int n, const SearchOptions& options) {
  if (n < 0) throw std::invalid_argument("n must be non-negative");
  if (n > kMaxSearchUniverse)
    throw CapacityError("min_family_size supports n <= " + std::to_string(kMaxSearchUniverse) +
                        "; got n = " + std::to_string(n));
  SearchReport rep;
  rep.n = n;
  rep.max_m = options.max_m > 0 ? options.max_m : 2 * n + 1;
  rep.pruned_by = {{"non_canonical", 0},
                   {"coverage", 0},
                   {"no_singleton", 0},
                   {"no_repeated_singleton", 0}};
  if (n == 0) {
    // nothing to ask and nothing to find: the empty family already decides
    rep.min_size = 0;
    rep.witnesses.push_back(MultiFamily(Universe(0)));
    rep.families_examined = 1;
    return rep;
  }
  PermTables tables(n);
  for (int m = 0; m <= rep.max_m; ++m) {
    LevelOut lvl = run_level(n, m, options.prune, tables, options.threads);
    rep.families_examined += lvl.examined;
    rep.pruned_by["non_canonical"] += lvl.non_canonical;
    rep.pruned_by["coverage"] += lvl.coverage;
    rep.pruned_by["no_singleton"] += lvl.no_singleton;
    rep.pruned_by["no_repeated_singleton"] += lvl.no_repeated_singleton;
    rep.solve_checks += lvl.solve_checks;
    if (!lvl.witnesses.empty()) {
      rep.min_size = m;
      for (const auto& key : lvl.witnesses) rep.witnesses.push_back(family_from_key(n, key));
      break;
    }
  }
  return rep;
}

std::vector<MultiFamily> all_minimal_families(int n) {
  if (n > kMaxAllMinimalUniverse)
    throw CapacityError("all_minimal_families supports n <= " +
                        std::to_string(kMaxAllMinimalUniverse));
  return min_family_size(n, {}).witnesses;
}

}  // namespace onelie
