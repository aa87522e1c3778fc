#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <span>
#include <unordered_map>
#include <vector>

#include "arc/hashing.hpp"
#include "arc/probability.hpp"

namespace arc {

/// entries[r] = number of elements in buckets at hamming distance exactly r
/// from some reference address. Size t+1; entries sum to n.
using CountsVector = std::vector<std::int64_t>;

/// One hash table's contents: every element id in exactly one bucket.
class BucketTable {
 public:
  struct Bucket {
    std::uint32_t addr;
    std::vector<std::uint32_t> ids;
  };

  /// Groups element ids 0..n-1 by their t-bit addresses.
  BucketTable(int t, std::span<const std::uint32_t> element_addresses);

  /// Assembles a table from pre-grouped buckets (persistence path).
  BucketTable(int t, std::vector<Bucket> buckets, std::uint64_t n);

  int t() const { return t_; }
  std::uint64_t total() const { return n_; }

  /// Non-empty buckets in ascending address order.
  const std::vector<Bucket>& nonempty() const { return buckets_; }

  /// nullptr when the bucket is empty.
  const std::vector<std::uint32_t>* bucket(std::uint32_t addr) const;
  std::int64_t bucket_size(std::uint32_t addr) const;

 private:
  int t_;
  std::uint64_t n_;
  std::vector<Bucket> buckets_;                                // sorted by addr
  std::unordered_map<std::uint32_t, std::size_t> addr_index_;  // addr -> buckets_ position
};

/// Counts vectors for every address of a table, stored densely
/// (2^t rows of t+1 entries). Produced by the message-passing rounds.
class AggregateCounts {
 public:
  AggregateCounts(int t, std::vector<std::int64_t> flat);

  int t() const { return t_; }
  std::span<const std::int64_t> at(std::uint32_t addr) const {
    return {flat_.data() + static_cast<std::size_t>(addr) * (t_ + 1), static_cast<std::size_t>(t_ + 1)};
  }

 private:
  int t_;
  std::vector<std::int64_t> flat_;
};

/// Runs the t+1 message-passing rounds over the full address space:
///   C_i[0] = b_i
///   C_i[1] = sum_{j in N_i} C_j[0]
///   C_i[r] = (sum_{j in N_i} C_j[r-1] - (t-r+2) C_i[r-2]) / r
/// where N_i are the t single-bit-flip neighbors. Every division must be
/// exact; a remainder raises InternalError. O(t^2 2^t) time.
AggregateCounts aggregate_counts(const BucketTable& table);

/// Counts vector for a single address by scanning only non-empty buckets.
/// Agrees exactly with aggregate_counts(table).at(addr). O(#nonempty) time.
CountsVector counts_vector_sparse(const BucketTable& table, HashAddress addr);

/// cells[s][a] = number of elements at hamming distance s from the reference
/// address whose bucket address agrees with it on the low a bits.
/// Column a = 0 is the counts vector; column a = t pins the whole address.
class CountsMatrix {
 public:
  explicit CountsMatrix(int t);

  int t() const { return t_; }
  std::int64_t cell(int s, int a) const { return cells_[static_cast<std::size_t>(s) * (t_ + 1) + a]; }
  std::int64_t& cell(int s, int a) { return cells_[static_cast<std::size_t>(s) * (t_ + 1) + a]; }

 private:
  int t_;
  std::vector<std::int64_t> cells_;  // (t+1) x (t+1), row s, column a
};

/// Counts matrix for one address via per-column scans over non-empty buckets.
CountsMatrix counts_matrix(const BucketTable& table, HashAddress addr);

/// C_q(I) = sum of the selected entries.
std::int64_t counts_over_set(const CountsVector& cv, const HammingSet& set);

/// Access to counts-matrix cells for the sampler walk. The dense
/// implementation precomputes every cell; the sparse one scans non-empty
/// buckets on demand. Both return identical values.
class CountsProvider {
 public:
  virtual ~CountsProvider() = default;

  /// M_addr[s, a]; zero whenever s > t - a.
  virtual std::int64_t cell(std::uint32_t addr, int s, int a) const = 0;

  /// Column a = 0 for an address.
  virtual CountsVector counts_vector(std::uint32_t addr) const = 0;
};

/// Full tensor M[addr][s][a] for a table, built by running the
/// message-passing rounds once per prefix width a within the sub-hypercubes
/// that fix the low a bits. O(t^3 2^t) time, (t+1)^2 2^t memory.
class DenseCountsProvider final : public CountsProvider {
 public:
  explicit DenseCountsProvider(const BucketTable& table);

  std::int64_t cell(std::uint32_t addr, int s, int a) const override;
  CountsVector counts_vector(std::uint32_t addr) const override;

  /// Extracts one address's full matrix (for equivalence tests).
  CountsMatrix matrix(std::uint32_t addr) const;

 private:
  int t_;
  std::vector<std::int64_t> tensor_;  // [addr][s][a]
};

/// On-demand provider: a cell lookup scans the non-empty bucket list with a
/// prefix mask. Whole columns are memoized behind a shared mutex, so repeated
/// walks from the same query address stay cheap.
class SparseCountsProvider final : public CountsProvider {
 public:
  explicit SparseCountsProvider(const BucketTable& table);

  std::int64_t cell(std::uint32_t addr, int s, int a) const override;
  CountsVector counts_vector(std::uint32_t addr) const override;

 private:
  const std::vector<std::int64_t>& column(std::uint32_t addr, int a) const;

  const BucketTable* table_;
  mutable std::shared_mutex mutex_;
  mutable std::unordered_map<std::uint64_t, std::vector<std::int64_t>> cache_;
};

}  // namespace arc
