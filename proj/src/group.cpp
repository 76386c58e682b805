#include "specgap/group.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>

#include "specgap/errors.hpp"
#include "specgap/rng.hpp"

namespace specgap {

namespace {

// Lexicographic permutations of {0..n-1}.
std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace

void FiniteGroup::finish_construction() {
  const int n = order_;
  if (n <= 0) throw ConfigError("group order must be positive");
  if (static_cast<int>(mul_.size()) != n * n) throw ConfigError("multiplication table size mismatch");
  for (int v : mul_)
    if (v < 0 || v >= n) throw ConfigError("multiplication table entry out of range");

  // Identity: the unique two-sided neutral element.
  identity_ = -1;
  for (int e = 0; e < n; ++e) {
    bool neutral = true;
    for (int g = 0; g < n && neutral; ++g)
      neutral = mul(e, g) == g && mul(g, e) == g;
    if (neutral) {
      identity_ = e;
      break;
    }
  }
  if (identity_ < 0) throw ConfigError("table has no identity element");

  inv_.assign(n, -1);
  for (int g = 0; g < n; ++g) {
    for (int h = 0; h < n; ++h) {
      if (mul(g, h) == identity_ && mul(h, g) == identity_) {
        inv_[g] = h;
        break;
      }
    }
    if (inv_[g] < 0) throw ConfigError("element without a two-sided inverse");
  }

  if (labels_.empty()) {
    labels_.resize(n);
    for (int g = 0; g < n; ++g) labels_[g] = std::to_string(g);
  }
  if (suggested_generators_.empty()) {
    suggested_generators_.resize(n);
    std::iota(suggested_generators_.begin(), suggested_generators_.end(), 0);
  }
}

void FiniteGroup::check_axioms(std::uint64_t seed) const {
  const int n = order_;
  for (int g = 0; g < n; ++g) {
    if (mul(identity_, g) != g || mul(g, identity_) != g)
      throw NumericalError("identity is not neutral");
    if (mul(g, inv(g)) != identity_ || mul(inv(g), g) != identity_)
      throw NumericalError("inverse table broken");
  }
  auto check_triple = [&](int a, int b, int c) {
    if (mul(mul(a, b), c) != mul(a, mul(b, c)))
      throw NumericalError("multiplication table is not associative");
  };
  if (n <= 256) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) check_triple(a, b, c);
  } else {
    Rng rng(seed);
    for (int t = 0; t < 200000; ++t)
      check_triple(rng.int_in(0, n - 1), rng.int_in(0, n - 1), rng.int_in(0, n - 1));
  }
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order_; ++a)
    for (int b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

FiniteGroup FiniteGroup::cyclic(int n) {
  if (n < 1) throw ConfigError("cyclic group needs n >= 1");
  FiniteGroup G;
  G.order_ = n;
  G.name_ = "cyclic:" + std::to_string(n);
  G.mul_.resize(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) G.mul_[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
  G.cyclic_factors_ = {n};
  G.cyclic_coords_.resize(n);
  for (int g = 0; g < n; ++g) G.cyclic_coords_[g] = {g};
  G.suggested_generators_ = {n > 1 ? 1 : 0};
  G.finish_construction();
  return G;
}

FiniteGroup FiniteGroup::dihedral(int n) {
  if (n < 1) throw ConfigError("dihedral group needs n >= 1");
  const int order = 2 * n;
  FiniteGroup G;
  G.order_ = order;
  G.name_ = "dihedral:" + std::to_string(n);
  G.mul_.resize(static_cast<std::size_t>(order) * order);
  // Element i + n*j is r^i s^j with s r s = r^{-1}.
  auto id = [n](int i, int j) { return i + n * j; };
  for (int i1 = 0; i1 < n; ++i1)
    for (int j1 = 0; j1 < 2; ++j1)
      for (int i2 = 0; i2 < n; ++i2)
        for (int j2 = 0; j2 < 2; ++j2) {
          // (r^i1 s^j1)(r^i2 s^j2) = r^{i1 + (-1)^{j1} i2} s^{j1+j2}
          int i = ((i1 + (j1 ? n - i2 : i2)) % n + n) % n;
          int j = (j1 + j2) % 2;
          G.mul_[static_cast<std::size_t>(id(i1, j1)) * order + id(i2, j2)] = id(i, j);
        }
  G.labels_.resize(order);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < 2; ++j)
      G.labels_[id(i, j)] = std::string(j ? "s" : "") + (i ? "r" + std::to_string(i) : (j ? "" : "e"));
  G.labels_[id(0, 1)] = "s";
  G.suggested_generators_ = n > 1 ? std::vector<int>{id(1, 0), id(0, 1)}
                                  : std::vector<int>{id(0, 1)};
  G.finish_construction();
  return G;
}

FiniteGroup FiniteGroup::symmetric(int n) {
  if (n < 1 || n > 5) throw ConfigError("symmetric group supported for 1 <= n <= 5");
  auto perms = all_permutations(n);
  const int order = static_cast<int>(perms.size());
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < order; ++i) index[perms[i]] = i;
  FiniteGroup G;
  G.order_ = order;
  G.name_ = "symmetric:" + std::to_string(n);
  G.mul_.resize(static_cast<std::size_t>(order) * order);
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) {
      std::vector<int> c(n);  // (a ∘ b)(x) = a(b(x))
      for (int x = 0; x < n; ++x) c[x] = perms[a][perms[b][x]];
      G.mul_[static_cast<std::size_t>(a) * order + b] = index[c];
    }
  G.labels_.resize(order);
  for (int i = 0; i < order; ++i) {
    std::string s = "(";
    for (int x : perms[i]) s += std::to_string(x);
    G.labels_[i] = s + ")";
  }
  if (n >= 2) {
    std::vector<int> transposition(n), cycle(n);
    std::iota(transposition.begin(), transposition.end(), 0);
    std::swap(transposition[0], transposition[1]);
    for (int x = 0; x < n; ++x) cycle[x] = (x + 1) % n;
    G.suggested_generators_ = {index[transposition], index[cycle]};
  }
  G.finish_construction();
  return G;
}

FiniteGroup FiniteGroup::quaternion() {
  // {1, -1, i, -i, j, -j, k, -k} as 0..7.
  const int order = 8;
  auto sign_of = [](int a) { return a % 2 ? -1 : 1; };
  auto unit_of = [](int a) { return a / 2; };  // 0=1, 1=i, 2=j, 3=k
  // unit multiplication: table[u][v] = (sign, unit)
  static const int unit_mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign_mul[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  FiniteGroup G;
  G.order_ = order;
  G.name_ = "quaternion";
  G.mul_.resize(order * order);
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) {
      int u = unit_mul[unit_of(a)][unit_of(b)];
      int s = sign_of(a) * sign_of(b) * sign_mul[unit_of(a)][unit_of(b)];
      G.mul_[a * order + b] = 2 * u + (s < 0 ? 1 : 0);
    }
  G.labels_ = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  G.suggested_generators_ = {2, 4};  // i, j
  G.finish_construction();
  return G;
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const int na = a.order(), nb = b.order();
  const int order = na * nb;
  FiniteGroup G;
  G.order_ = order;
  G.name_ = a.name() + "x" + b.name();
  G.mul_.resize(static_cast<std::size_t>(order) * order);
  auto id = [na](int x, int y) { return x + na * y; };
  for (int x1 = 0; x1 < na; ++x1)
    for (int y1 = 0; y1 < nb; ++y1)
      for (int x2 = 0; x2 < na; ++x2)
        for (int y2 = 0; y2 < nb; ++y2)
          G.mul_[static_cast<std::size_t>(id(x1, y1)) * order + id(x2, y2)] =
              id(a.mul(x1, x2), b.mul(y1, y2));
  G.labels_.resize(order);
  for (int x = 0; x < na; ++x)
    for (int y = 0; y < nb; ++y) G.labels_[id(x, y)] = "(" + a.label(x) + "," + b.label(y) + ")";
  for (int g : a.suggested_generators_) G.suggested_generators_.push_back(id(g, b.identity()));
  for (int g : b.suggested_generators_) G.suggested_generators_.push_back(id(a.identity(), g));
  if (!a.cyclic_factors_.empty() && !b.cyclic_factors_.empty()) {
    G.cyclic_factors_ = a.cyclic_factors_;
    G.cyclic_factors_.insert(G.cyclic_factors_.end(), b.cyclic_factors_.begin(),
                             b.cyclic_factors_.end());
    G.cyclic_coords_.resize(order);
    for (int x = 0; x < na; ++x)
      for (int y = 0; y < nb; ++y) {
        auto coords = a.cyclic_coords_[x];
        coords.insert(coords.end(), b.cyclic_coords_[y].begin(), b.cyclic_coords_[y].end());
        G.cyclic_coords_[id(x, y)] = std::move(coords);
      }
  }
  G.finish_construction();
  return G;
}

FiniteGroup FiniteGroup::from_table(std::vector<int> table, std::string name) {
  FiniteGroup G;
  std::size_t n = 0;
  while (n * n < table.size()) ++n;
  if (n * n != table.size()) throw ConfigError("multiplication table must be square");
  G.order_ = static_cast<int>(n);
  G.mul_ = std::move(table);
  G.name_ = std::move(name);
  G.finish_construction();
  G.check_axioms();
  return G;
}

std::vector<int> generated_subgroup(const FiniteGroup& G, const std::vector<int>& S) {
  if (S.empty()) throw ConfigError("empty generating set");
  for (int s : S)
    if (!G.contains(s)) throw ConfigError("generator outside the group");
  std::vector<char> in(G.order(), 0);
  std::vector<int> frontier;
  auto add = [&](int g) {
    if (!in[g]) {
      in[g] = 1;
      frontier.push_back(g);
    }
  };
  add(G.identity());
  for (int s : S) {
    add(s);
    add(G.inv(s));
  }
  // Closure iteration: multiply every known element by every known element.
  std::vector<int> known;
  while (!frontier.empty()) {
    int g = frontier.back();
    frontier.pop_back();
    known.push_back(g);
    for (int h : known) {
      add(G.mul(g, h));
      add(G.mul(h, g));
    }
  }
  std::vector<int> out;
  for (int g = 0; g < G.order(); ++g)
    if (in[g]) out.push_back(g);
  return out;
}

bool is_adapted(const FiniteGroup& G, const ProbMeasure<int>& mu) {
  require_supported(G, mu, "is_adapted");
  return static_cast<int>(generated_subgroup(G, mu.support()).size()) == G.order();
}

bool is_strongly_adapted(const FiniteGroup& G, const ProbMeasure<int>& mu,
                         StrongAdaptednessRoute route) {
  require_supported(G, mu, "is_strongly_adapted");
  if (route == StrongAdaptednessRoute::kNuAdapted) {
    return is_adapted(G, convolve(G, reflect(G, mu), mu));
  }
  // supp(mu) lies in a coset gH iff H contains the difference set
  // s0^{-1} supp(mu); the smallest such H is its generated subgroup, so mu is
  // strongly adapted iff that closure is all of G.
  const auto& support = mu.support();
  const int s0_inv = G.inv(support.front());
  std::vector<int> difference;
  difference.reserve(support.size());
  for (int s : support) difference.push_back(G.mul(s0_inv, s));
  return static_cast<int>(generated_subgroup(G, difference).size()) == G.order();
}

}  // namespace specgap
