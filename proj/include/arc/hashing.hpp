#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "arc/geometry.hpp"

namespace arc {

/// Maximum hash width. Dense counts structures allocate Theta(2^t), so wider
/// addresses are rejected at construction.
inline constexpr int kMaxHashBits = 30;

/// A t-bit bucket address. Plane j occupies bit j (LSB = plane 0).
struct HashAddress {
  std::uint32_t bits = 0;
  int t = 0;

  friend bool operator==(const HashAddress&, const HashAddress&) = default;
};

/// t random hyperplanes in R^d, every coordinate a standard Gaussian draw.
/// Regenerating with the same seed reproduces the planes bit for bit.
class HyperplaneSet {
 public:
  static HyperplaneSet generate(int t, std::size_t d, std::uint64_t seed);

  /// Wraps existing rows (row-major t x d), e.g. when loading from disk.
  HyperplaneSet(int t, std::size_t d, std::vector<Real> rows, std::uint64_t seed);

  int t() const { return t_; }
  std::size_t dim() const { return d_; }
  std::uint64_t seed() const { return seed_; }
  std::span<const Real> plane(int j) const { return {rows_.data() + static_cast<std::size_t>(j) * d_, d_}; }
  std::span<const Real> rows() const { return rows_; }

 private:
  int t_;
  std::size_t d_;
  std::uint64_t seed_;
  std::vector<Real> rows_;  // row-major, plane j at rows_[j*d .. j*d+d)
};

/// Per-plane projections r_j . q of a query. sign(values[j]) determines bit j
/// of the query's address (<= 0 maps to 0).
struct QueryProjections {
  std::vector<Real> values;
};

/// One hash bit: 0 if plane . v <= 0, else 1 (ties go to 0).
int hash_bit(std::span<const Real> plane, const UnitVector& v);

HashAddress hash_address(const HyperplaneSet& planes, const UnitVector& v);

QueryProjections project_query(const HyperplaneSet& planes, const UnitVector& q);

/// popcount(a XOR b); throws on width mismatch.
int hamming_distance(HashAddress a, HashAddress b);

}  // namespace arc
