#pragma once

#include <Eigen/Dense>

#include <complex>
#include <string>
#include <vector>

#include "specgap/rep.hpp"
#include "specgap/tolerance.hpp"

namespace specgap {

/// The averaged operator pi(mu) = sum over g of mu(g) pi(g), with its
/// provenance. Weights cross the exact-to-float boundary here.
struct AveragedOperator {
  Eigen::MatrixXcd matrix;
  std::string rep_desc;
  std::string measure_desc;
  int dim() const { return static_cast<int>(matrix.rows()); }
};

AveragedOperator average(const UnitaryRep& pi, const ProbMeasure<int>& mu,
                         const ToleranceProfile& tol = {});

enum class RadiusMethod { kDenseEigen, kGelfandIteration };

struct SpectralReport {
  double spectral_radius = 0.0;
  double operator_norm = 0.0;
  RadiusMethod method = RadiusMethod::kDenseEigen;
  int iterations = 0;     // squarings for Gelfand, 0 for dense
  double residual = 0.0;  // last successive-estimate difference for Gelfand
  double gap() const { return 1.0 - spectral_radius; }
};

const char* radius_method_name(RadiusMethod m);

/// Largest singular value.
double operator_norm(const Eigen::MatrixXcd& A);

/// Dense eigenvalues for dim <= tol.dense_dim_limit, Gelfand repeated
/// squaring (with per-step normalization) above.
SpectralReport spectral_radius(const Eigen::MatrixXcd& A, const ToleranceProfile& tol = {});
SpectralReport spectral_radius(const AveragedOperator& A, const ToleranceProfile& tol = {});

/// Forced single-method variants (the two must agree within 1e-4 wherever
/// both run; the unit tests assert this). norms_out, when non-null, receives
/// the ||A^{2^k}|| sequence for the submultiplicativity checks.
double dense_spectral_radius(const Eigen::MatrixXcd& A);
double gelfand_spectral_radius(const Eigen::MatrixXcd& A, const ToleranceProfile& tol,
                               int* iterations_out = nullptr, double* residual_out = nullptr,
                               std::vector<double>* norms_out = nullptr);

/// Best unit-vector witness for an approximate eigenvalue c with |c| = 1:
/// the singular vector of (A - cI) for its smallest singular value, polished
/// by `refine_steps` inverse-iteration sweeps. Returns the vector and the
/// achieved residual ||A xi - c xi||.
struct EigenvalueWitness {
  Eigen::VectorXcd vector;
  double residual;
};
EigenvalueWitness approximate_eigenvalue_witness(const Eigen::MatrixXcd& A,
                                                 std::complex<double> c, int refine_steps = 2,
                                                 const ToleranceProfile& tol = {});

/// Hilbert-Schmidt inner product <S, T> = Trace(T* S).
std::complex<double> hs_inner(const Eigen::MatrixXcd& S, const Eigen::MatrixXcd& T);

/// Positive square root (T* T)^{1/2} via eigendecomposition of T* T.
Eigen::MatrixXcd absolute_value(const Eigen::MatrixXcd& T);

/// |<S,T>|^2 <= <|S|,|T|> <|S*|,|T*|>; margin = rhs - lhs, scale =
/// (||S||_2 ||T||_2)^2. ok iff margin >= -hs_margin_rel * scale.
struct HsInequalityCheck {
  double lhs, rhs, margin, scale;
  bool ok;
};
HsInequalityCheck check_hs_inequality(const Eigen::MatrixXcd& S, const Eigen::MatrixXcd& T,
                                      const ToleranceProfile& tol = {});

/// Polar decomposition T = V |T| via SVD (unitary V), and the identity
/// |T*| = V |T| V* from the Lemma-2 proof.
struct PolarCheck {
  double recomposition_err;  // ||T - V|T|||
  double conjugate_abs_err;  // |||T*| - V|T|V*||
  double scale;
  bool ok;
};
PolarCheck check_polar_identities(const Eigen::MatrixXcd& T, const ToleranceProfile& tol = {});

/// Jensen bound ||A^n|| <= ||B^n||^{1/2} for A = pi(mu), B = (pi (x) conj pi)(mu),
/// for n = 1..n_max, plus the limit form r(A)^2 <= r(B).
struct TensorPowerRow {
  int n;
  double base_norm;         // ||A^n||
  double tensor_norm_sqrt;  // ||B^n||^{1/2}
  bool ok;
};
struct TensorPowerCheck {
  std::vector<TensorPowerRow> rows;
  double base_radius, tensor_radius;
  bool radius_ok;
  bool ok;
};
TensorPowerCheck check_tensor_power_bound(const UnitaryRep& pi, const ProbMeasure<int>& mu,
                                          int n_max, const ToleranceProfile& tol = {});

/// nu = mu_check * mu identities: pi(nu) = pi(mu)* pi(mu), self-adjoint,
/// positive, and ||pi(nu)|| = ||pi(mu)||^2.
struct NuIdentityCheck {
  double operator_err;     // ||pi(nu) - pi(mu)* pi(mu)||
  double selfadjoint_err;  // ||pi(nu) - pi(nu)*||
  double min_eigenvalue;   // of the Hermitian part
  double norm_nu, norm_mu;
  double norm_err;  // | ||pi(nu)|| - ||pi(mu)||^2 |
  bool ok;
};
NuIdentityCheck check_nu_identities(const UnitaryRep& pi, const ProbMeasure<int>& mu,
                                    const ToleranceProfile& tol = {});

/// Agreement of the two strong-adaptedness routes (coset search vs
/// nu-adaptedness) for one measure; returns the common verdict and whether
/// the routes agreed.
struct StrongAdaptedEquivalence {
  bool coset_search;
  bool nu_adapted;
  bool agree;
};
StrongAdaptedEquivalence check_strong_adapted_equivalence(const FiniteGroup& G,
                                                          const ProbMeasure<int>& mu);

}  // namespace specgap
