#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "arc/counts.hpp"
#include "arc/geometry.hpp"
#include "arc/hashing.hpp"

namespace arc {

enum class CountsMode {
  kAuto,    // dense when t <= kDenseModeBits, else sparse
  kDense,   // precompute the full counts tensor per table
  kSparse,  // scan non-empty buckets on demand
};

/// Widths above this fall back to sparse counts under kAuto: the dense
/// tensor costs Theta((t+1)^2 2^t) memory per table.
inline constexpr int kDenseModeBits = 16;

struct IndexParams {
  int t = 0;
  int tables = 0;
  std::uint32_t dim = 0;
  std::uint64_t n = 0;
  std::uint64_t seed = 0;
  bool dense_counts = false;  // resolved mode
};

/// K random-hyperplane hash tables over one dataset, plus per-table counts
/// structures. Immutable after build; concurrently readable.
class LshIndex {
 public:
  struct Table {
    HyperplaneSet planes;
    BucketTable buckets;
    std::unique_ptr<CountsProvider> counts;
  };

  /// Hashes every dataset element into K tables. Table k's hyperplanes come
  /// from the seed stream (seed, k). Dense mode additionally precomputes the
  /// counts tensors. Deterministic given the seed.
  static LshIndex build(std::shared_ptr<const Dataset> data, int t, int tables,
                        std::uint64_t seed, CountsMode mode = CountsMode::kAuto);

  /// Reassembles a loaded index (persistence path).
  LshIndex(IndexParams params, std::shared_ptr<const Dataset> data, std::vector<Table> tables);

  const IndexParams& params() const { return params_; }
  const Dataset& data() const { return *data_; }
  std::shared_ptr<const Dataset> data_ptr() const { return data_; }
  int table_count() const { return params_.tables; }
  const Table& table(int k) const { return tables_[k]; }

 private:
  IndexParams params_;
  std::shared_ptr<const Dataset> data_;
  std::vector<Table> tables_;
};

/// A query's per-table addresses and hyperplane projections.
struct QueryContext {
  UnitVector q;
  std::vector<HashAddress> addresses;        // i^k
  std::vector<QueryProjections> projections; // r_q per table
};

QueryContext make_query_context(const LshIndex& index, const UnitVector& q);

}  // namespace arc
