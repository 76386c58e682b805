#pragma once

#include <string>

namespace specgap {

/// Single tolerance profile threaded through all floating-point decisions.
/// The defaults are the pinned values used by the acceptance suite.
struct ToleranceProfile {
  double unitarity = 1e-12;           // ||U*U - I||_inf on representation images
  double fixed_rank_rel = 1e-9;       // relative singular-value threshold for rank decisions
  double contraction_slack = 1e-10;   // averaged operators: ||A|| <= 1 + slack
  double radius_norm_slack = 1e-10;   // spectral radius <= operator norm + slack
  double gelfand_stop = 1e-6;         // successive Gelfand estimates
  int gelfand_max_squarings = 24;
  int dense_dim_limit = 512;          // dense eigenvalue path at or below this
  double hs_margin_rel = 1e-9;        // Lemma-2 margin >= -rel * scale
  double polar_rel = 1e-9;            // polar-decomposition identities
  double tensor_power_slack = 1e-9;   // ||A^n|| <= ||B^n||^{1/2} + slack
  double tensor_radius_slack = 1e-6;  // r(A)^2 <= r(B) + slack
  double nu_matrix_tol = 1e-10;       // ||pi(nu) - pi(mu)* pi(mu)||
  double nu_norm_tol = 1e-9;          // | ||pi(nu)|| - ||pi(mu)||^2 |
  double nu_positivity_slack = 1e-10; // min eigenvalue of pi(nu) >= -slack
  double unit_modulus_tol = 1e-12;    // |c| = 1 inputs
  double power_iteration_stop = 1e-13;
  int power_iteration_max = 20000;

  /// Named profiles addressable from the CLI; "default" is the pinned one.
  static ToleranceProfile preset(const std::string& name);
};

}  // namespace specgap
