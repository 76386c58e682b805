#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "specgap/group.hpp"
#include "specgap/measure.hpp"
#include "specgap/rng.hpp"
#include "specgap/tolerance.hpp"

namespace specgap {

/// Outcome of one randomized property suite.
struct SuiteResult {
  std::string suite;
  int passed = 0;
  int failed = 0;
  double worst_margin = std::numeric_limits<double>::infinity();
  std::vector<std::string> notes;
  bool ok() const { return failed == 0; }
};

/// Monte-Carlo check of the Hilbert-Schmidt inequality over random complex
/// pairs, per dimension.
SuiteResult verify_lemma2(int samples, const std::vector<int>& dims, std::uint64_t seed,
                          const ToleranceProfile& tol = {});

/// Polar-decomposition identities on random complex matrices.
SuiteResult verify_polar(int samples, const std::vector<int>& dims, std::uint64_t seed,
                         const ToleranceProfile& tol = {});

/// Jensen tensor-power bound over random (group, rep, measure) triples drawn
/// from {Z/n, D4, S3, S4}, powers up to n_max.
SuiteResult verify_tensor_power(int triples, int n_max, std::uint64_t seed,
                                const ToleranceProfile& tol = {});

/// nu = mu_check * mu identities under the regular representation.
SuiteResult verify_nu_identities(const std::vector<std::string>& group_specs, int samples,
                                 std::uint64_t seed, const ToleranceProfile& tol = {});

/// Coset-search vs nu-adaptedness agreement over random measures.
SuiteResult verify_adapted_equivalence(const std::vector<std::string>& group_specs, int samples,
                                       std::uint64_t seed, const ToleranceProfile& tol = {});

std::vector<std::string> verify_suite_names();
/// Dispatch by suite name with that suite's defaults for unset options.
SuiteResult run_verify_suite(const std::string& name, int samples, int dim, int n_max,
                             const std::vector<std::string>& group_specs, std::uint64_t seed,
                             const ToleranceProfile& tol = {});

/// Random measure on G: support of the given size (or random size when 0),
/// weights k_i / sum with k_i drawn from 1..64.
ProbMeasure<int> random_measure(const FiniteGroup& G, Rng& rng, int support_size = 0);

/// Random matrix with entries uniform in the complex unit box.
Eigen::MatrixXcd random_complex_matrix(int dim, Rng& rng);

}  // namespace specgap
