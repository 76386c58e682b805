#pragma once

#include <memory>
#include <string>
#include <vector>

#include "specgap/group.hpp"
#include "specgap/rational.hpp"

namespace specgap {

/// Finite G-set with strictly positive weights nu (automatically
/// quasi-invariant). The action is given as a full table act[g][x].
class WeightedGSet {
 public:
  WeightedGSet(std::shared_ptr<const FiniteGroup> G,
               std::vector<std::vector<int>> action_table,
               std::vector<Rational> weights, std::string name = "gset");

  /// X = G acted on by left translation, uniform weights.
  static WeightedGSet translation_action(std::shared_ptr<const FiniteGroup> G);
  /// Z/n rotating n points.
  static WeightedGSet cycle_action(int n);
  static WeightedGSet trivial_action(std::shared_ptr<const FiniteGroup> G, int points);
  /// Same acting group, disjoint points; weights concatenate.
  static WeightedGSet disjoint_union(const WeightedGSet& a, const WeightedGSet& b);

  WeightedGSet with_weights(std::vector<Rational> weights) const;

  int size() const { return static_cast<int>(weights_.size()); }
  const FiniteGroup& group() const { return *G_; }
  std::shared_ptr<const FiniteGroup> group_ptr() const { return G_; }
  int act(int g, int x) const { return action_[g][x]; }
  const std::vector<Rational>& weights() const { return weights_; }
  const std::string& name() const { return name_; }

  /// Exact check: nu(g.x) == nu(x) for all g, x.
  bool measure_invariant() const;

  int orbit_count() const;
  bool transitive() const { return orbit_count() == 1; }

  /// Identity acts trivially and (gh).x == g.(h.x) for all pairs (exhaustive
  /// up to order 64, sampled above).
  void check_action_axioms(std::uint64_t seed = 1) const;

 private:
  std::shared_ptr<const FiniteGroup> G_;
  std::vector<std::vector<int>> action_;  // [g][x]
  std::vector<Rational> weights_;
  std::string name_;
};

}  // namespace specgap
