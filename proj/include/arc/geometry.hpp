#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace arc {

using Real = double;

/// A vector on the unit sphere in R^d, d >= 2. The stored norm is within
/// 1e-9 of 1.
class UnitVector {
 public:
  /// Wraps coordinates that are already unit length (validated).
  explicit UnitVector(std::vector<Real> coords);

  std::size_t dim() const { return coords_.size(); }
  std::span<const Real> coords() const { return coords_; }
  Real operator[](std::size_t i) const { return coords_[i]; }

 private:
  std::vector<Real> coords_;
};

/// Scales a raw vector to unit length. Rejects the zero vector.
UnitVector normalize(std::span<const Real> raw);

/// Angle in [0, pi] between two unit vectors; the dot product is clamped to
/// [-1, 1] before arccos. Throws on dimension mismatch.
Real angle_between(const UnitVector& a, const UnitVector& b);

/// A closed range of angles [lo, hi], 0 <= lo < hi <= pi, in radians.
class AngleRange {
 public:
  AngleRange(Real lo, Real hi);

  Real lo() const { return lo_; }
  Real hi() const { return hi_; }
  bool contains(Real theta) const { return theta >= lo_ && theta <= hi_; }

 private:
  Real lo_;
  Real hi_;
};

/// An immutable collection of unit vectors with optional unique labels.
/// Element ids are row indices and fit in 32 bits.
class Dataset {
 public:
  explicit Dataset(std::vector<UnitVector> vectors, std::vector<std::string> labels = {});

  std::size_t n() const { return vectors_.size(); }
  std::size_t dim() const { return vectors_.empty() ? 0 : vectors_[0].dim(); }
  const UnitVector& vector(std::size_t id) const { return vectors_[id]; }
  const std::vector<UnitVector>& vectors() const { return vectors_; }

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<std::uint32_t> find_label(std::string_view label) const;

 private:
  std::vector<UnitVector> vectors_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string_view, std::uint32_t> label_index_;
};

/// Exact |A_q|: the number of dataset points whose angle to q falls in the
/// closed range. O(n d) scan; the ground truth for every estimator.
std::uint64_t brute_force_count(const Dataset& data, const UnitVector& q, const AngleRange& range);

}  // namespace arc
