#pragma once

#include <Eigen/Dense>

#include <memory>
#include <string>
#include <vector>

#include "specgap/gset.hpp"
#include "specgap/group.hpp"
#include "specgap/tolerance.hpp"

namespace specgap {

/// Finite-dimensional unitary representation of a finite group. Images are
/// produced lazily from a generator-indexed builder and memoized; every image
/// is unitary to within the profile tolerance. Thread-safe and immutable.
class UnitaryRep {
 public:
  int dim() const;
  const FiniteGroup& group() const;
  std::shared_ptr<const FiniteGroup> group_ptr() const;
  Eigen::MatrixXcd image(int g) const;
  const std::string& description() const;

  /// Generating set the constructor considers canonical for this rep
  /// (falls back to the group's suggested generators).
  const std::vector<int>& generators() const;

  /// Left regular representation: image(g) permutes the basis by h -> gh.
  static UnitaryRep regular(std::shared_ptr<const FiniteGroup> G);

  /// Character of an abelian group built from cyclic factors; index runs
  /// mixed-radix over the factors.
  static UnitaryRep character(std::shared_ptr<const FiniteGroup> G, int index);

  /// Quasi-regular representation of a weighted G-set, expressed in the
  /// orthonormal basis {sqrt(nu(x)) e_x} of L2(X, nu); on a finite set the
  /// Radon-Nikodym cocycle is a coboundary, so these images are exactly the
  /// permutation matrices of the action. The raw scaled matrices are
  /// available through cocycle_matrix().
  static UnitaryRep quasi_regular(const WeightedGSet& X);

  /// Restriction of quasi_regular(X) to the orthocomplement of the constants
  /// 1_X; requires an invariant measure. Dimension |X| - 1.
  static UnitaryRep mean_zero(const WeightedGSet& X);

  /// Tensor square pi (x) conj(pi) realized on Hilbert-Schmidt space:
  /// T -> pi(x) T pi(x)^{-1} acting on column-major vectorized matrices.
  static UnitaryRep tensor_conj(const UnitaryRep& pi);

  static UnitaryRep direct_sum(const UnitaryRep& a, const UnitaryRep& b);

  static UnitaryRep from_images(std::shared_ptr<const FiniteGroup> G,
                                std::vector<Eigen::MatrixXcd> images,
                                std::string description,
                                std::vector<int> generators = {});

  /// Unitarity of all images and the homomorphism identity
  /// image(gh) = image(g) image(h): exhaustive pairs for order <= 64,
  /// 10^4 random pairs above. Throws NumericalError on violation.
  void validate(const ToleranceProfile& tol = {}, std::uint64_t seed = 7) const;

 private:
  struct State;
  explicit UnitaryRep(std::shared_ptr<State> state) : state_(std::move(state)) {}
  std::shared_ptr<State> state_;
};

/// Raw quasi-regular matrix on the delta-function basis of L2(X, nu):
/// entry (x, y) = sqrt(nu(g^{-1} x) / nu(x)) when y = g^{-1} x. Unitary with
/// respect to the nu-weighted inner product: M* D M = D, D = diag(nu).
Eigen::MatrixXd cocycle_matrix(const WeightedGSet& X, int g);

/// Orthonormal basis of the common fixed space of {image(g) : g in gens},
/// computed as the numerical null space of sum over gens of
/// (U_g - I)*(U_g - I). gens must generate the group.
std::vector<Eigen::VectorXcd> fixed_subspace(const UnitaryRep& pi,
                                             const std::vector<int>& gens,
                                             const ToleranceProfile& tol = {});
std::vector<Eigen::VectorXcd> fixed_subspace(const UnitaryRep& pi,
                                             const ToleranceProfile& tol = {});
int fixed_subspace_dim(const UnitaryRep& pi, const ToleranceProfile& tol = {});

/// Dimension of {A : A pi(g) = pi(g) A for all g}, solved directly as a
/// Sylvester-type linear system (independent of the tensor-square route).
int commutant_dimension(const UnitaryRep& pi, const ToleranceProfile& tol = {});

/// Finite shadow of the mixing criterion: true iff the conjugate tensor
/// square of the mean-zero part of lambda_X has no nonzero invariant vector.
/// On a finite X with |X| > 1 this is always false; |X| = 1 is vacuously true.
bool mixing_check(const WeightedGSet& X, const ToleranceProfile& tol = {});

}  // namespace specgap
