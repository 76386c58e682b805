#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "specgap/measure.hpp"
#include "specgap/spectral.hpp"
#include "specgap/tolerance.hpp"
#include "specgap/word.hpp"

namespace specgap {

inline constexpr std::uint64_t kDefaultMemoryCap = 4ull << 30;  // 4 GiB

/// Breadth-first enumeration of the ball of given radius in the word metric,
/// with generator adjacency. Element 0 is the identity; levels are contiguous.
class CayleyBall {
 public:
  static CayleyBall build(const WordGroup& G, int radius,
                          std::uint64_t memory_cap_bytes = kDefaultMemoryCap);

  int size() const { return static_cast<int>(elements_.size()); }
  int radius() const { return radius_; }
  const WordGroup& group() const { return group_; }
  const Word& element(int idx) const { return elements_[idx]; }
  int level_of(int idx) const { return levels_[idx]; }
  int index_of(const Word& w) const;  // -1 when outside the ball

  /// Neighbor reached by one generator step (sign +1/-1); -1 when the step
  /// leaves the ball.
  int step(int idx, int gen, int sign) const {
    return adjacency_[static_cast<std::size_t>(idx) * 2 * group_.generator_count() +
                      2 * gen + (sign < 0 ? 1 : 0)];
  }

  /// Closed form for the free group F_k: 1 + 2k ((2k-1)^R - 1) / (2k - 2)
  /// for k >= 2, and 2R + 1 for k = 1.
  static std::uint64_t free_ball_size(int rank, int radius);

 private:
  WordGroup group_ = WordGroup::free_group(1);
  int radius_ = 0;
  std::vector<Word> elements_;
  std::vector<int> levels_;
  std::vector<int> adjacency_;
  std::unordered_map<Word, int, WordHash> index_;
};

/// Exact return probabilities p_n = mu^{*n}(e), n = 0..N.
struct ReturnSeries {
  std::vector<Rational> p;
  bool symmetric = false;  // mu == mu_check
  std::string group_desc, measure_desc;
  int max_n() const { return static_cast<int>(p.size()) - 1; }
};

/// Exact rational computation of the return series. For the uniform (or
/// lazily held) measure on the generators of a single free factor the exact
/// distance-process reduction is used, which reaches large N without
/// enumerating the ball; all other measures go through generic group-algebra
/// convolution restricted to the reachable set, guarded by the memory cap.
ReturnSeries exact_return_probabilities(const WordGroup& G, const ProbMeasure<Word>& mu, int N,
                                        std::uint64_t memory_cap_bytes = kDefaultMemoryCap);

/// Kesten-style spectral radius estimators from a symmetric return series:
/// primary r = sqrt(p_{2m} / p_{2m-2}) at the largest usable m, secondary the
/// monotone lower bounds p_{2n}^{1/2n}; band = distance between them.
struct ReturnRadiusEstimate {
  double ratio_estimate = 0.0;
  std::vector<double> power_estimates;
  double band = 0.0;
  int n_used = 0;  // m in p_{2m}
};
ReturnRadiusEstimate estimate_spectral_radius_from_returns(const ReturnSeries& series);

/// Finite section of the convolution operator lambda_G(mu) on a Cayley ball
/// (Dirichlet truncation: steps exiting the ball are dropped). Stored in
/// sparse row form; densifiable when small.
class TruncatedOperator {
 public:
  static TruncatedOperator build(const WordGroup& G, const ProbMeasure<Word>& mu, int radius,
                                 std::uint64_t memory_cap_bytes = kDefaultMemoryCap);

  int dim() const { return dim_; }
  int radius() const { return radius_; }
  bool symmetric() const { return symmetric_; }
  const std::string& group_desc() const { return group_desc_; }
  const std::string& measure_desc() const { return measure_desc_; }

  void apply(const double* in, double* out) const;
  Eigen::VectorXd apply(const Eigen::VectorXd& v) const;
  Eigen::MatrixXd dense() const;

  /// Dense eigenvalue path at or below tol.dense_dim_limit; sparse power
  /// iteration on A^2 above (requires a symmetric measure there).
  SpectralReport spectral_radius(const ToleranceProfile& tol = {}) const;

  /// n-step return probability (A^n delta_e)(e) in double precision; for
  /// n * max support length <= radius this must match the exact rational
  /// series to 1e-12.
  double return_probability(int n) const;

 private:
  int dim_ = 0;
  int radius_ = 0;
  bool symmetric_ = false;
  std::string group_desc_, measure_desc_;
  // CSR layout.
  std::vector<std::int64_t> row_start_;
  std::vector<std::int32_t> col_;
  std::vector<double> val_;
};

/// Dense AveragedOperator view of the truncation (dim <= tol.dense_dim_limit).
AveragedOperator truncated_operator(const WordGroup& G, const ProbMeasure<Word>& mu, int radius,
                                    const ToleranceProfile& tol = {},
                                    std::uint64_t memory_cap_bytes = kDefaultMemoryCap);

struct GapScanRow {
  int radius;
  int dim;
  double spectral_radius;
  double gap;
};
/// One row per radius: (R, dim, radius, gap). Spectral radii are
/// non-decreasing in R (Dirichlet monotonicity; asserted by callers/tests).
std::vector<GapScanRow> gap_scan(const WordGroup& G, const ProbMeasure<Word>& mu,
                                 const std::vector<int>& radii, const ToleranceProfile& tol = {},
                                 std::uint64_t memory_cap_bytes = kDefaultMemoryCap);

/// Uniform measure on the 2k signed generators.
ProbMeasure<Word> uniform_generator_measure(const WordGroup& G);

}  // namespace specgap
