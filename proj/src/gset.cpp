#include "specgap/gset.hpp"

#include <functional>
#include <numeric>

#include "specgap/errors.hpp"
#include "specgap/rng.hpp"

namespace specgap {

WeightedGSet::WeightedGSet(std::shared_ptr<const FiniteGroup> G,
                           std::vector<std::vector<int>> action_table,
                           std::vector<Rational> weights, std::string name)
    : G_(std::move(G)), action_(std::move(action_table)), weights_(std::move(weights)),
      name_(std::move(name)) {
  const int n = static_cast<int>(weights_.size());
  if (n == 0) throw ConfigError("G-set needs at least one point");
  if (static_cast<int>(action_.size()) != G_->order())
    throw ConfigError("action table must have one row per group element");
  for (const auto& row : action_) {
    if (static_cast<int>(row.size()) != n) throw ConfigError("action table row size mismatch");
    for (int x : row)
      if (x < 0 || x >= n) throw ConfigError("action table entry out of range");
  }
  for (const auto& w : weights_)
    if (w <= 0) throw ConfigError("G-set weights must be strictly positive");
}

WeightedGSet WeightedGSet::translation_action(std::shared_ptr<const FiniteGroup> G) {
  const int n = G->order();
  std::vector<std::vector<int>> action(n, std::vector<int>(n));
  for (int g = 0; g < n; ++g)
    for (int x = 0; x < n; ++x) action[g][x] = G->mul(g, x);
  std::vector<Rational> weights(n, Rational(1, static_cast<unsigned long>(n)));
  return WeightedGSet(std::move(G), std::move(action), std::move(weights), "translation");
}

WeightedGSet WeightedGSet::cycle_action(int n) {
  auto G = std::make_shared<const FiniteGroup>(FiniteGroup::cyclic(n));
  return translation_action(std::move(G));
}

WeightedGSet WeightedGSet::trivial_action(std::shared_ptr<const FiniteGroup> G, int points) {
  if (points < 1) throw ConfigError("trivial action needs at least one point");
  std::vector<int> row(points);
  std::iota(row.begin(), row.end(), 0);
  std::vector<std::vector<int>> action(G->order(), row);
  std::vector<Rational> weights(points, Rational(1, static_cast<unsigned long>(points)));
  return WeightedGSet(std::move(G), std::move(action), std::move(weights), "trivial");
}

WeightedGSet WeightedGSet::disjoint_union(const WeightedGSet& a, const WeightedGSet& b) {
  if (!a.group().same_group(b.group()))
    throw ConfigError("disjoint_union requires the same acting group");
  const int na = a.size(), nb = b.size();
  std::vector<std::vector<int>> action(a.group().order(), std::vector<int>(na + nb));
  for (int g = 0; g < a.group().order(); ++g) {
    for (int x = 0; x < na; ++x) action[g][x] = a.act(g, x);
    for (int x = 0; x < nb; ++x) action[g][na + x] = na + b.act(g, x);
  }
  auto weights = a.weights();
  weights.insert(weights.end(), b.weights().begin(), b.weights().end());
  return WeightedGSet(a.group_ptr(), std::move(action), std::move(weights),
                      a.name() + "+" + b.name());
}

WeightedGSet WeightedGSet::with_weights(std::vector<Rational> weights) const {
  if (weights.size() != weights_.size()) throw ConfigError("weight vector size mismatch");
  return WeightedGSet(G_, action_, std::move(weights), name_);
}

bool WeightedGSet::measure_invariant() const {
  for (int g = 0; g < G_->order(); ++g)
    for (int x = 0; x < size(); ++x)
      if (weights_[act(g, x)] != weights_[x]) return false;
  return true;
}

int WeightedGSet::orbit_count() const {
  // Union-find over the generator action.
  std::vector<int> parent(size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int g = 0; g < G_->order(); ++g)
    for (int x = 0; x < size(); ++x) {
      int a = find(x), b = find(act(g, x));
      if (a != b) parent[a] = b;
    }
  int count = 0;
  for (int x = 0; x < size(); ++x)
    if (find(x) == x) ++count;
  return count;
}

void WeightedGSet::check_action_axioms(std::uint64_t seed) const {
  const auto& G = *G_;
  for (int x = 0; x < size(); ++x)
    if (act(G.identity(), x) != x) throw NumericalError("identity does not act trivially");
  auto check = [&](int g, int h, int x) {
    if (act(G.mul(g, h), x) != act(g, act(h, x)))
      throw NumericalError("action is not compatible with multiplication");
  };
  if (G.order() <= 64) {
    for (int g = 0; g < G.order(); ++g)
      for (int h = 0; h < G.order(); ++h)
        for (int x = 0; x < size(); ++x) check(g, h, x);
  } else {
    Rng rng(seed);
    for (int t = 0; t < 20000; ++t)
      check(rng.int_in(0, G.order() - 1), rng.int_in(0, G.order() - 1),
            rng.int_in(0, size() - 1));
  }
}

}  // namespace specgap
