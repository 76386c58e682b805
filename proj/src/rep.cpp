#include "specgap/rep.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <cmath>
#include <complex>
#include <functional>
#include <mutex>
#include <numbers>
#include <unordered_map>

#include "specgap/errors.hpp"
#include "specgap/rng.hpp"

namespace specgap {

using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::VectorXcd;

struct UnitaryRep::State {
  std::shared_ptr<const FiniteGroup> group;
  int dim = 0;
  std::string description;
  std::vector<int> generators;
  std::function<MatrixXcd(int)> build;  // pure in the group element
  mutable std::unordered_map<int, MatrixXcd> cache;
  mutable std::mutex cache_mutex;
};

namespace {

UnitaryRep::State* new_state(std::shared_ptr<const FiniteGroup> G, int dim,
                             std::string description, std::vector<int> gens,
                             std::function<MatrixXcd(int)> build) {
  auto* s = new UnitaryRep::State;
  s->group = std::move(G);
  s->dim = dim;
  s->description = std::move(description);
  s->generators = gens.empty() ? s->group->suggested_generators() : std::move(gens);
  s->build = std::move(build);
  return s;
}

}  // namespace

int UnitaryRep::dim() const { return state_->dim; }
const FiniteGroup& UnitaryRep::group() const { return *state_->group; }
std::shared_ptr<const FiniteGroup> UnitaryRep::group_ptr() const { return state_->group; }
const std::string& UnitaryRep::description() const { return state_->description; }
const std::vector<int>& UnitaryRep::generators() const { return state_->generators; }

MatrixXcd UnitaryRep::image(int g) const {
  if (!state_->group->contains(g)) throw ConfigError("element without an image");
  {
    std::lock_guard<std::mutex> lock(state_->cache_mutex);
    auto it = state_->cache.find(g);
    if (it != state_->cache.end()) return it->second;
  }
  MatrixXcd M = state_->build(g);
  std::lock_guard<std::mutex> lock(state_->cache_mutex);
  return state_->cache.emplace(g, std::move(M)).first->second;
}

UnitaryRep UnitaryRep::regular(std::shared_ptr<const FiniteGroup> G) {
  const FiniteGroup* Gp = G.get();
  const int n = Gp->order();
  auto build = [Gp, n](int g) {
    MatrixXcd M = MatrixXcd::Zero(n, n);
    for (int h = 0; h < n; ++h) M(Gp->mul(g, h), h) = 1.0;  // e_h -> e_{gh}
    return M;
  };
  return UnitaryRep(std::shared_ptr<State>(new_state(std::move(G), n, "regular", {}, build)));
}

UnitaryRep UnitaryRep::character(std::shared_ptr<const FiniteGroup> G, int index) {
  const auto factors = G->cyclic_factors();
  if (factors.empty()) throw ConfigError("character requires a group built from cyclic factors");
  int total = 1;
  for (int f : factors) total *= f;
  if (index < 0 || index >= total) throw ConfigError("character index out of range");
  std::vector<int> exponents(factors.size());
  int rem = index;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    exponents[i] = rem % factors[i];
    rem /= factors[i];
  }
  const FiniteGroup* Gp = G.get();
  auto build = [Gp, exponents, factors](int g) {
    double angle = 0.0;
    for (std::size_t i = 0; i < factors.size(); ++i)
      angle += 2.0 * std::numbers::pi * exponents[i] *
               Gp->coordinate(g, static_cast<int>(i)) / factors[i];
    MatrixXcd M(1, 1);
    M(0, 0) = std::polar(1.0, angle);
    return M;
  };
  return UnitaryRep(std::shared_ptr<State>(
      new_state(std::move(G), 1, "character:" + std::to_string(index), {}, build)));
}

Eigen::MatrixXd cocycle_matrix(const WeightedGSet& X, int g) {
  const int n = X.size();
  MatrixXd M = MatrixXd::Zero(n, n);
  const int gi = X.group().inv(g);
  for (int x = 0; x < n; ++x) {
    int y = X.act(gi, x);  // y = g^{-1} x
    M(x, y) = std::sqrt(rational_to_double(X.weights()[y] / X.weights()[x]));
  }
  return M;
}

UnitaryRep UnitaryRep::quasi_regular(const WeightedGSet& X) {
  const int n = X.size();
  auto Xc = std::make_shared<const WeightedGSet>(X);
  auto build = [Xc, n](int g) {
    // In the orthonormal basis {sqrt(nu(x)) e_x} of L2(X, nu) the
    // Radon-Nikodym cocycle cancels and the image is the permutation matrix
    // of x -> g.x. The raw scaled matrix is cocycle_matrix(X, g).
    MatrixXcd M = MatrixXcd::Zero(n, n);
    for (int x = 0; x < n; ++x) M(Xc->act(g, x), x) = 1.0;
    return M;
  };
  return UnitaryRep(std::shared_ptr<State>(
      new_state(X.group_ptr(), n, "quasi_regular(" + X.name() + ")", {}, build)));
}

UnitaryRep UnitaryRep::mean_zero(const WeightedGSet& X) {
  if (!X.measure_invariant()) throw ConfigError("L2_0 requires invariant measure");
  const int n = X.size();
  // 1_X has orthonormal coordinates v(x) = sqrt(nu(x)); take a Householder
  // frame whose first column is v, the rest spanning (C 1_X)^perp.
  Eigen::VectorXd v(n);
  for (int x = 0; x < n; ++x) v(x) = std::sqrt(rational_to_double(X.weights()[x]));
  v.normalize();
  Eigen::VectorXd u = v;
  u(0) += 1.0;  // v(0) > 0 always
  u.normalize();
  Eigen::MatrixXd Q = -(Eigen::MatrixXd::Identity(n, n) - 2.0 * u * u.transpose());
  // Q e_1 = v; columns 2..n are orthonormal and orthogonal to v.
  auto W = std::make_shared<const MatrixXcd>(Q.rightCols(n - 1).cast<std::complex<double>>());
  auto Xc = std::make_shared<const WeightedGSet>(X);
  auto build = [Xc, W, n](int g) {
    MatrixXcd P = MatrixXcd::Zero(n, n);
    for (int x = 0; x < n; ++x) P(Xc->act(g, x), x) = 1.0;
    return MatrixXcd(W->adjoint() * P * (*W));
  };
  return UnitaryRep(std::shared_ptr<State>(
      new_state(X.group_ptr(), n - 1, "mean_zero(" + X.name() + ")", {}, build)));
}

UnitaryRep UnitaryRep::tensor_conj(const UnitaryRep& pi) {
  const int d = pi.dim();
  auto base = std::make_shared<const UnitaryRep>(pi);
  auto build = [base](int g) {
    MatrixXcd U = base->image(g);
    // Column-major vec: vec(U T U^*) = (conj(U) kron U) vec(T).
    return MatrixXcd(Eigen::kroneckerProduct(U.conjugate(), U));
  };
  return UnitaryRep(std::shared_ptr<State>(new_state(pi.group_ptr(), d * d,
                                                     "tensor_conj(" + pi.description() + ")",
                                                     pi.generators(), build)));
}

UnitaryRep UnitaryRep::direct_sum(const UnitaryRep& a, const UnitaryRep& b) {
  if (!a.group().same_group(b.group()))
    throw ConfigError("direct_sum requires the same group context");
  auto ac = std::make_shared<const UnitaryRep>(a);
  auto bc = std::make_shared<const UnitaryRep>(b);
  const int da = a.dim(), db = b.dim();
  auto build = [ac, bc, da, db](int g) {
    MatrixXcd M = MatrixXcd::Zero(da + db, da + db);
    M.topLeftCorner(da, da) = ac->image(g);
    M.bottomRightCorner(db, db) = bc->image(g);
    return M;
  };
  return UnitaryRep(std::shared_ptr<State>(
      new_state(a.group_ptr(), da + db,
                "direct_sum(" + a.description() + "," + b.description() + ")",
                a.generators(), build)));
}

UnitaryRep UnitaryRep::from_images(std::shared_ptr<const FiniteGroup> G,
                                   std::vector<MatrixXcd> images, std::string description,
                                   std::vector<int> generators) {
  if (static_cast<int>(images.size()) != G->order())
    throw ConfigError("from_images needs one image per group element");
  const int d = images.empty() ? 0 : static_cast<int>(images[0].rows());
  for (const auto& M : images)
    if (M.rows() != d || M.cols() != d) throw ConfigError("image dimensions must agree");
  auto table = std::make_shared<const std::vector<MatrixXcd>>(std::move(images));
  auto build = [table](int g) { return (*table)[g]; };
  return UnitaryRep(std::shared_ptr<State>(
      new_state(std::move(G), d, std::move(description), std::move(generators), build)));
}

void UnitaryRep::validate(const ToleranceProfile& tol, std::uint64_t seed) const {
  if (dim() == 0) return;
  const auto& G = group();
  const int n = G.order();
  const MatrixXcd I = MatrixXcd::Identity(dim(), dim());
  auto check_unitary = [&](int g) {
    double defect = (image(g).adjoint() * image(g) - I).cwiseAbs().maxCoeff();
    if (defect > tol.unitarity)
      throw NumericalError("image not unitary within tolerance (defect " +
                           std::to_string(defect) + ")");
  };
  auto check_pair = [&](int g, int h) {
    double defect = (image(G.mul(g, h)) - image(g) * image(h)).cwiseAbs().maxCoeff();
    if (defect > tol.unitarity)
      throw NumericalError("homomorphism identity violated (defect " +
                           std::to_string(defect) + ")");
  };
  if (n <= 64) {
    for (int g = 0; g < n; ++g) check_unitary(g);
    for (int g = 0; g < n; ++g)
      for (int h = 0; h < n; ++h) check_pair(g, h);
  } else {
    Rng rng(seed);
    for (int t = 0; t < 200; ++t) check_unitary(rng.int_in(0, n - 1));
    for (int t = 0; t < 10000; ++t) check_pair(rng.int_in(0, n - 1), rng.int_in(0, n - 1));
  }
}

std::vector<VectorXcd> fixed_subspace(const UnitaryRep& pi, const std::vector<int>& gens,
                                      const ToleranceProfile& tol) {
  const auto& G = pi.group();
  if (static_cast<int>(generated_subgroup(G, gens).size()) != G.order())
    throw ConfigError("fixed_subspace: generators do not generate the group");
  const int d = pi.dim();
  if (d == 0) return {};
  MatrixXcd M = MatrixXcd::Zero(d, d);
  for (int g : gens) {
    MatrixXcd D = pi.image(g) - MatrixXcd::Identity(d, d);
    M += D.adjoint() * D;
  }
  Eigen::SelfAdjointEigenSolver<MatrixXcd> es(M);
  if (es.info() != Eigen::Success) throw NumericalError("eigendecomposition failed");
  const auto& vals = es.eigenvalues();
  // Relative threshold with a unit floor: images of non-fixed directions give
  // eigenvalues of order 1, so near-zero sigma_max means an (almost) trivial
  // action and everything below noise level is fixed.
  double sigma_max = std::max(vals(d - 1), 0.0);
  double cutoff = tol.fixed_rank_rel * std::max(sigma_max, 1.0);
  std::vector<VectorXcd> basis;
  for (int i = 0; i < d; ++i)
    if (vals(i) <= cutoff) basis.push_back(es.eigenvectors().col(i));
  return basis;
}

std::vector<VectorXcd> fixed_subspace(const UnitaryRep& pi, const ToleranceProfile& tol) {
  return fixed_subspace(pi, pi.generators(), tol);
}

int fixed_subspace_dim(const UnitaryRep& pi, const ToleranceProfile& tol) {
  return static_cast<int>(fixed_subspace(pi, tol).size());
}

int commutant_dimension(const UnitaryRep& pi, const ToleranceProfile& tol) {
  const int d = pi.dim();
  if (d == 0) return 0;
  const auto& gens = pi.generators();
  MatrixXcd stacked(static_cast<Eigen::Index>(gens.size()) * d * d, d * d);
  const MatrixXcd I = MatrixXcd::Identity(d, d);
  for (std::size_t k = 0; k < gens.size(); ++k) {
    MatrixXcd U = pi.image(gens[k]);
    // vec(U A - A U) = (I kron U - U^T kron I) vec(A)
    stacked.middleRows(static_cast<Eigen::Index>(k) * d * d, d * d) =
        Eigen::kroneckerProduct(I, U) - Eigen::kroneckerProduct(U.transpose(), I);
  }
  Eigen::JacobiSVD<MatrixXcd> svd(stacked);
  const auto& sv = svd.singularValues();
  double cutoff = tol.fixed_rank_rel * std::max(sv.size() ? sv(0) : 0.0, 1.0);
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > cutoff) ++rank;
  return d * d - rank;
}

bool mixing_check(const WeightedGSet& X, const ToleranceProfile& tol) {
  UnitaryRep lambda0 = UnitaryRep::mean_zero(X);
  if (lambda0.dim() == 0) return true;  // |X| = 1: vacuous
  return fixed_subspace_dim(UnitaryRep::tensor_conj(lambda0), tol) == 0;
}

}  // namespace specgap
