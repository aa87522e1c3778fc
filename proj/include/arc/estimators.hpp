#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "arc/index.hpp"
#include "arc/probability.hpp"
#include "arc/sampler.hpp"

namespace arc {

struct EstimatorConfig {
  AngleRange range{0.0, 3.141592653589793};
  HammingSet hamming = HammingSet::range(0, 3);  // used by the sampling estimators
  std::uint64_t samples = 1000;                  // S: sample or inspection budget
  int probe_budget = 0;                          // B buckets per table; 0 = budget driven
  double theta_rep = 0.7853981633974483;         // bucket-ranking angle, default 45 degrees
  int groups = 1;                                // median-of-means groups M (odd)
  std::uint64_t seed = 0;
};

struct EstimateReport {
  double estimate = 0.0;
  std::uint64_t samples_used = 0;
  std::uint64_t elements_inspected = 0;
  std::vector<double> group_estimates;
  bool empty_support = false;
  double elapsed_ms = 0.0;
};

/// Importance-sampled count over buckets at hamming distances I: each sample
/// x with angle in range scores (sum_k C^k_q(I)) / (K p(x)), p(x) the
/// binomial mass of I at theta_qx; the estimate is the mean score. With
/// groups > 1 the sample budget splits evenly and the median of the group
/// means is reported.
EstimateReport lsh_count(const LshIndex& index, const UnitVector& q, const EstimatorConfig& cfg);

/// The B distinct bucket addresses with the largest collision probability
/// under the profile, in nonincreasing probability order (ties broken by
/// ascending address). Lazy best-first search over flip subsets; never
/// enumerates all 2^t buckets unless asked to.
std::vector<std::pair<HashAddress, double>> probing_sequence(const BitFlipProfile& profile,
                                                             HashAddress query_addr, int budget);

/// Per-table ranked probe buckets with their probabilities at theta_rep.
struct ProbeSet {
  std::vector<std::vector<std::pair<HashAddress, double>>> per_table;
  double cumulative = 0.0;  // total ranked probability mass across tables
};

/// Probes the most promising buckets per table (ranked at theta_rep) and
/// importance-weights every inspected occurrence with angle in range by
/// 1 / sum_k p^k_m(x), where p^k_m uses the occurrence's true angle. The
/// estimate is the sum of the weights; duplicates across tables are kept.
EstimateReport multi_probe_count(const LshIndex& index, const UnitVector& q,
                                 const EstimatorConfig& cfg);

/// Enumeration baseline: inspects only the query's own bucket in every table
/// and scores each in-range occurrence by 1 / (K (1 - theta/pi)^t).
EstimateReport spring_baseline(const LshIndex& index, const UnitVector& q,
                               const EstimatorConfig& cfg);

/// Classic multi-probe baseline: probes ranked buckets until the inspection
/// budget is spent and reports the number of distinct in-range ids seen.
EstimateReport multiprobe_baseline(const LshIndex& index, const UnitVector& q,
                                   const EstimatorConfig& cfg);

/// Runs `run(group)` for group = 0..m-1 and reports the median estimate.
/// m must be odd. Group results are retained in the report.
EstimateReport median_of_means(const std::function<EstimateReport(int)>& run, int m);

struct PlannerAdvice {
  std::int64_t tables = 0;            // K = ceil(8 / (eps^2 p_min))
  int groups = 0;                     // smallest odd M >= 11 ln(1/delta)
  double p_min = 0.0;                 // grid minimum used for the K bound
  std::optional<double> samples;      // set only when both hints are given
  std::vector<std::string> unknowns;  // hints missing for the sample bound
};

/// Resource bounds for a target (1 +- eps) approximation with failure
/// probability delta. The sample bound needs E[C_q(I)] and a prior guess of
/// the true count; without them it is left symbolic and the unknowns are
/// flagged.
PlannerAdvice plan_resources(int t, const AngleRange& range, const HammingSet& set, double epsilon,
                             double delta, std::optional<double> expected_pool = {},
                             std::optional<double> count_guess = {});

struct BiasDiagnostic {
  double w = 0.0;             // realized importance-weighted mass
  double relative_bias = 0.0; // |w / truth - 1|
};

/// Computes W = (1/K) sum_k sum_{x in truth} 1(x in B^k_q(I)) / p(x) exactly
/// for one table realization; the relative bias is the estimator's inherent
/// bias at that realization.
BiasDiagnostic diagnose_bias(const LshIndex& index, const UnitVector& q, const HammingSet& set,
                             std::span<const std::uint32_t> truth);

}  // namespace arc
