#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "arc/index.hpp"
#include "arc/probability.hpp"
#include "arc/rng.hpp"

namespace arc {

/// One draw from the multiset union of bucket contents at distances I across
/// the K tables.
struct SampleDraw {
  std::uint32_t element = 0;
  int table = 0;
  HashAddress bucket_addr;
  int distance = 0;
};

/// Picks table k with probability counts[k] / sum(counts). At least one count
/// must be positive.
int select_table(std::span<const std::int64_t> counts, Rng& rng);

/// Picks d in I with probability cv[d] / sum_{d in I} cv[d].
int select_distance(const CountsVector& cv, const HammingSet& set, Rng& rng);

/// Walks the prefix tree to pick a bucket b at hamming distance d from addr
/// with probability size(b) / D, where D counts all elements at distance d.
/// Exactly t rounds of O(1) counts-matrix lookups; per-round odds are exact
/// integer ratios.
HashAddress hamming_distance_sample(const CountsProvider& counts, HashAddress addr, int d,
                                    Rng& rng);

/// Binds (index, query context, distance set) and caches the per-table pool
/// sizes C^k_q(I) so repeated draws stay O(t).
class SampleSource {
 public:
  SampleSource(const LshIndex& index, const QueryContext& ctx, const HammingSet& set);

  /// Sum over tables of C^k_q(I); zero means empty support.
  std::int64_t total_pool() const { return total_; }
  std::span<const std::int64_t> per_table_pools() const { return pools_; }

  /// Uniform draw over element occurrences: table -> distance -> bucket ->
  /// element. Requires total_pool() > 0.
  SampleDraw draw(Rng& rng) const;

 private:
  const LshIndex* index_;
  const QueryContext* ctx_;
  const HammingSet* set_;
  std::vector<CountsVector> table_cv_;
  std::vector<std::int64_t> pools_;
  std::int64_t total_ = 0;
};

/// One-shot convenience wrapper around SampleSource.
SampleDraw draw_sample(const LshIndex& index, const QueryContext& ctx, const HammingSet& set,
                       Rng& rng);

}  // namespace arc
