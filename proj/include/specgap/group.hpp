#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "specgap/measure.hpp"

namespace specgap {

/// Explicit finite group: a full multiplication table over dense element ids
/// 0..order-1. Exact by construction; immutable after construction.
class FiniteGroup {
 public:
  using Elem = int;

  static FiniteGroup cyclic(int n);
  static FiniteGroup dihedral(int n);   // symmetries of the n-gon, order 2n
  static FiniteGroup symmetric(int n);  // S_n, n <= 5
  static FiniteGroup quaternion();      // Q8
  static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
  /// Explicit table, row-major: table[a * order + b] = a*b.
  static FiniteGroup from_table(std::vector<int> table, std::string name = "table");

  int order() const { return order_; }
  int mul(int a, int b) const { return mul_[static_cast<std::size_t>(a) * order_ + b]; }
  int inv(int a) const { return inv_[a]; }
  int identity() const { return identity_; }
  bool contains(int e) const { return e >= 0 && e < order_; }

  const std::string& name() const { return name_; }
  const std::string& label(int g) const { return labels_[g]; }
  bool is_abelian() const;

  /// A small generating set chosen by the constructor family (used as the
  /// default generator list for representation-theoretic computations).
  const std::vector<int>& suggested_generators() const { return suggested_generators_; }

  /// Cyclic decomposition when the group was built as cyclic or as a direct
  /// product of cyclics; empty otherwise. coordinate(g, i) is g's component
  /// in factor i. Characters are indexed through this structure.
  const std::vector<int>& cyclic_factors() const { return cyclic_factors_; }
  int coordinate(int g, int factor) const { return cyclic_coords_[g][factor]; }

  /// Verifies the group axioms: identity, inverses, and associativity
  /// (exhaustive for order <= 256, randomly sampled triples above).
  void check_axioms(std::uint64_t seed = 1) const;

  bool same_group(const FiniteGroup& other) const {
    return order_ == other.order_ && mul_ == other.mul_;
  }

 private:
  FiniteGroup() = default;
  void finish_construction();  // derives inv_, identity_, default labels

  int order_ = 0;
  int identity_ = 0;
  std::vector<int> mul_;  // row-major order_ x order_
  std::vector<int> inv_;
  std::vector<std::string> labels_;
  std::string name_;
  std::vector<int> suggested_generators_;
  std::vector<int> cyclic_factors_;
  std::vector<std::vector<int>> cyclic_coords_;
};

/// Smallest subset of G containing S, the identity, and closed under
/// multiplication and inversion. Returned sorted. Errors on empty S.
std::vector<int> generated_subgroup(const FiniteGroup& G, const std::vector<int>& S);

/// True iff the support of mu generates G (finite groups: dense = equal).
bool is_adapted(const FiniteGroup& G, const ProbMeasure<int>& mu);

enum class StrongAdaptednessRoute {
  kCosetSearch,  // direct: no proper subgroup H and g with supp(mu) within gH
  kNuAdapted,    // via the equivalence: mu strongly adapted iff mu_check * mu adapted
};

/// True iff supp(mu) is not contained in any coset of a proper subgroup.
/// Both routes are exposed; they must agree on every finite group.
bool is_strongly_adapted(const FiniteGroup& G, const ProbMeasure<int>& mu,
                         StrongAdaptednessRoute route = StrongAdaptednessRoute::kCosetSearch);

}  // namespace specgap
