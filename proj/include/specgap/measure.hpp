#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "specgap/errors.hpp"
#include "specgap/rational.hpp"

namespace specgap {

/// Finitely supported probability measure with exact rational weights.
/// Entries are kept strictly sorted by element, weights strictly positive,
/// total mass exactly 1. Immutable after construction.
template <typename Elem>
class ProbMeasure {
 public:
  using Entry = std::pair<Elem, Rational>;

  static ProbMeasure dirac(Elem e) {
    return ProbMeasure({{std::move(e), Rational(1)}});
  }

  static ProbMeasure uniform(std::vector<Elem> support) {
    if (support.empty()) throw ConfigError("uniform measure needs a nonempty support");
    Rational w(1, static_cast<unsigned long>(support.size()));
    std::vector<Entry> entries;
    entries.reserve(support.size());
    for (auto& e : support) entries.emplace_back(std::move(e), w);
    return ProbMeasure(std::move(entries));
  }

  /// Builds from (element, weight) pairs. With merge_duplicates, repeated
  /// elements accumulate their weights (the Lemma-3 truncation convention);
  /// otherwise duplicates are an error.
  static ProbMeasure from_weights(std::vector<Entry> entries, bool merge_duplicates = false) {
    if (merge_duplicates) {
      std::map<Elem, Rational> acc;
      for (auto& [e, w] : entries) acc[e] += w;
      entries.assign(acc.begin(), acc.end());
    }
    return ProbMeasure(std::move(entries));
  }

  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t support_size() const { return entries_.size(); }

  std::vector<Elem> support() const {
    std::vector<Elem> s;
    s.reserve(entries_.size());
    for (const auto& [e, w] : entries_) s.push_back(e);
    return s;
  }

  Rational weight_of(const Elem& e) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), e,
                               [](const Entry& a, const Elem& b) { return a.first < b; });
    if (it != entries_.end() && it->first == e) return it->second;
    return Rational(0);
  }

  bool operator==(const ProbMeasure& other) const { return entries_ == other.entries_; }

 private:
  explicit ProbMeasure(std::vector<Entry> entries) : entries_(std::move(entries)) {
    std::sort(entries_.begin(), entries_.end(),
              [](const Entry& a, const Entry& b) { return a.first < b.first; });
    Rational total(0);
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (i > 0 && entries_[i].first == entries_[i - 1].first)
        throw ConfigError("measure support entries must be pairwise distinct");
      if (entries_[i].second <= 0)
        throw ConfigError("measure weights must be strictly positive");
      total += entries_[i].second;
    }
    if (total != 1) {
      throw ConfigError("measure weights must sum to exactly 1 (got " +
                        rational_to_string(total) + ")");
    }
  }

  std::vector<Entry> entries_;
};

/// Group-context concept used by the measure algebra: Ctx provides Elem,
/// mul, inv, identity and contains. FiniteGroup and WordGroup both model it.

template <typename Ctx>
void require_supported(const Ctx& g, const ProbMeasure<typename Ctx::Elem>& mu,
                       const char* where) {
  for (const auto& [e, w] : mu.entries()) {
    if (!g.contains(e)) {
      throw ConfigError(std::string(where) + ": measure support lies outside the group context");
    }
  }
}

/// (mu1 * mu2)(g) = sum over ab = g of mu1(a) mu2(b), exact.
template <typename Ctx>
ProbMeasure<typename Ctx::Elem> convolve(const Ctx& g,
                                         const ProbMeasure<typename Ctx::Elem>& mu1,
                                         const ProbMeasure<typename Ctx::Elem>& mu2) {
  using Elem = typename Ctx::Elem;
  require_supported(g, mu1, "convolve");
  require_supported(g, mu2, "convolve");
  std::map<Elem, Rational> acc;
  for (const auto& [a, wa] : mu1.entries())
    for (const auto& [b, wb] : mu2.entries()) acc[g.mul(a, b)] += wa * wb;
  std::vector<std::pair<Elem, Rational>> entries(acc.begin(), acc.end());
  return ProbMeasure<Elem>::from_weights(std::move(entries));
}

/// Reflection: mu_check(g) = mu(g^{-1}).
template <typename Ctx>
ProbMeasure<typename Ctx::Elem> reflect(const Ctx& g,
                                        const ProbMeasure<typename Ctx::Elem>& mu) {
  using Elem = typename Ctx::Elem;
  require_supported(g, mu, "reflect");
  std::vector<std::pair<Elem, Rational>> entries;
  entries.reserve(mu.support_size());
  for (const auto& [e, w] : mu.entries()) entries.emplace_back(g.inv(e), w);
  return ProbMeasure<Elem>::from_weights(std::move(entries));
}

template <typename Ctx>
bool is_symmetric(const Ctx& g, const ProbMeasure<typename Ctx::Elem>& mu) {
  return reflect(g, mu) == mu;
}

/// n-fold convolution power; n = 0 returns the Dirac measure at the identity.
template <typename Ctx>
ProbMeasure<typename Ctx::Elem> convolution_power(const Ctx& g,
                                                  const ProbMeasure<typename Ctx::Elem>& mu,
                                                  int n) {
  using Elem = typename Ctx::Elem;
  if (n < 0) throw ConfigError("convolution_power: n must be >= 0");
  ProbMeasure<Elem> result = ProbMeasure<Elem>::dirac(g.identity());
  ProbMeasure<Elem> base = mu;
  // Binary powering; equals the iterated product exactly since convolution
  // is associative in exact arithmetic.
  while (n > 0) {
    if (n & 1) result = convolve(g, result, base);
    n >>= 1;
    if (n > 0) base = convolve(g, base, base);
  }
  return result;
}

/// lazy(alpha, mu) = alpha * delta_e + (1 - alpha) * mu.
template <typename Ctx>
ProbMeasure<typename Ctx::Elem> lazy(const Ctx& g, const Rational& alpha,
                                     const ProbMeasure<typename Ctx::Elem>& mu) {
  using Elem = typename Ctx::Elem;
  if (alpha < 0 || alpha >= 1) throw ConfigError("lazy: alpha must be in [0, 1)");
  if (alpha == 0) return mu;
  std::vector<std::pair<Elem, Rational>> entries;
  entries.emplace_back(g.identity(), alpha);
  Rational rest = Rational(1) - alpha;
  for (const auto& [e, w] : mu.entries()) entries.emplace_back(e, rest * w);
  return ProbMeasure<Elem>::from_weights(std::move(entries), /*merge_duplicates=*/true);
}

}  // namespace specgap
