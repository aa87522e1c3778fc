#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "arc/geometry.hpp"
#include "arc/hashing.hpp"

namespace arc {

/// A non-empty sorted set of hamming distances in [0, t].
class HammingSet {
 public:
  explicit HammingSet(std::vector<int> distances);

  /// Inclusive range {lo..hi}.
  static HammingSet range(int lo, int hi);

  /// Parses "a..b" (inclusive range) or a comma list "a,b,c".
  static HammingSet parse(const std::string& text);

  const std::vector<int>& values() const { return values_; }
  int max() const { return values_.back(); }
  bool contains(int d) const;
  std::string to_string() const;

  /// Throws if any distance exceeds the hash width t.
  void check_width(int t) const;

 private:
  std::vector<int> values_;  // sorted, unique, >= 0
};

/// P(d_qx = i | theta) for t-bit hyperplane hashes:
/// C(t,i) (1 - theta/pi)^(t-i) (theta/pi)^i, evaluated in log space.
/// Exact 0/1 at the degenerate theta in {0, pi}.
double hamming_pmf(int t, double theta, int i);

/// p(x) = P(d_qx in I | theta) = sum of hamming_pmf over I.
double hamming_cdf_over_set(int t, double theta, const HammingSet& set);

/// Minimum of hamming_cdf_over_set over a uniform grid of `grid` angles
/// spanning [lo, hi] inclusive; the planner's proxy for min_{x in A_q} p(x).
double min_collision_prob(int t, const AngleRange& range, const HammingSet& set, int grid = 256);

/// Per-hyperplane flip probability given the query's projection r_q:
/// P(h_r(x) != h_r(q) | r_q) = 1/2 - 1/2 erf(|r_q| / (sqrt(2) tan(theta))).
/// Exceeds 1/2 for theta > pi/2 (tan negative), as it should.
double bit_flip_prob(double theta, double r_q);

/// Per-bit flip probabilities for one table at a fixed angle, computed from
/// the query's projections onto that table's hyperplanes.
struct BitFlipProfile {
  std::vector<double> probs;  // probs[j] = P(bit j differs), each in [0, 1]
};

BitFlipProfile bit_flip_profile(const QueryProjections& projections, double theta);

/// Probability that a point at the profile's angle lands in `bucket`:
/// product of p_j over flipped bits and (1 - p_j) over unflipped bits.
double bucket_collision_prob(const BitFlipProfile& profile, HashAddress query_addr,
                             HashAddress bucket_addr);

/// Single-hyperplane cut probabilities for a (q, x, y) triple:
/// { both flip, only y flips, only x flips, neither }. Sums to 1; throws if
/// the angles are not realizable by unit vectors (any entry < -1e-12).
struct PairwiseCutProbs {
  double both;
  double only_y;
  double only_x;
  double neither;
};

PairwiseCutProbs joint_pairwise_cut_probs(double theta_qx, double theta_qy, double theta_xy);

/// P(d_qx = a AND d_qy = b | angles) over t hyperplanes.
double joint_hamming_pmf(int t, int a, int b, double theta_qx, double theta_qy, double theta_xy);

/// p(x, y) = P(d_qx in I AND d_qy in I | angles).
double joint_hamming_over_set(int t, const HammingSet& set, double theta_qx, double theta_qy,
                              double theta_xy);

}  // namespace arc
