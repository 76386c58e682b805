#pragma once

#include <complex>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "specgap/group.hpp"
#include "specgap/measure.hpp"
#include "specgap/rational.hpp"
#include "specgap/tolerance.hpp"

namespace specgap {

/// Finitely supported probability measure on the circle. Angles are stored
/// in "turns" (theta = 2 pi t), exactly rational when possible so that
/// sup |phi| = 1 is detected exactly, double otherwise.
struct CircleAtom {
  std::variant<Rational, double> turns;
  Rational weight;
  bool rational_angle() const { return std::holds_alternative<Rational>(turns); }
  double turns_as_double() const;
};

class CircleMeasure {
 public:
  static CircleMeasure from_atoms(std::vector<CircleAtom> atoms);
  static CircleMeasure rational_atom(const Rational& turns);  // single atom, weight 1
  const std::vector<CircleAtom>& atoms() const { return atoms_; }
  bool all_angles_rational() const;

 private:
  explicit CircleMeasure(std::vector<CircleAtom> atoms) : atoms_(std::move(atoms)) {}
  std::vector<CircleAtom> atoms_;
};

/// Fourier coefficients phi(n) = sum_j w_j e^{-i n theta_j} over the modes
/// 1 <= |n| <= N: the diagonal of lambda_{S^1}(mu) truncated to L2_0. By
/// phi(-n) = conj(phi(n)) only n >= 1 is stored.
struct FourierProfile {
  int N = 0;
  std::vector<std::complex<double>> phi;  // phi[n-1] = phi(n)
  double sup = 0.0;
  int argmax_n = 0;
  bool sup_exactly_one = false;  // exact rational-angle detection

  std::complex<double> value(int n) const;  // any n with 1 <= |n| <= N
};

FourierProfile circle_truncation_profile(const CircleMeasure& mu, int N);

/// Remark-(ii) pattern: pi(mu) for mu = delta_z and the character w -> w^k is
/// the 1x1 matrix [z^k]; |z| = 1 forces spectral radius exactly 1.
struct CharacterCounterexample {
  std::complex<double> chi_z;
  double spectral_radius;
};
CharacterCounterexample dirac_character_counterexample(std::complex<double> z, int chi_order,
                                                       const ToleranceProfile& tol = {});

struct CollapseRow {
  int N;
  double sup;
  int argmax_n;
  bool sup_exactly_one;
};
/// Running maxima of |phi(n)| over 1 <= |n| <= N for each N in the list
/// (monotone non-decreasing; tends to 1).
std::vector<CollapseRow> gap_collapse_curve(const CircleMeasure& mu,
                                            const std::vector<int>& N_list);

/// Lemma-3 truncation: sum_{n=1..K} 2^{-n} delta_{g_n}, renormalized by
/// 1/(1 - 2^{-K}); duplicate elements merge by weight summation.
template <typename Elem>
ProbMeasure<Elem> dense_subgroup_measure(const std::vector<Elem>& elements, int K) {
  if (K < 1) throw ConfigError("dense_subgroup_measure: K must be >= 1");
  if (static_cast<std::size_t>(K) > elements.size())
    throw ConfigError("dense_subgroup_measure: fewer than K elements given");
  Rational norm = Rational(1) - Rational(1, mpz_class(1) << K);  // 1 - 2^{-K}
  std::vector<std::pair<Elem, Rational>> entries;
  Rational w(1, 2);
  for (int n = 1; n <= K; ++n) {
    entries.emplace_back(elements[n - 1], w / norm);
    w /= 2;
  }
  return ProbMeasure<Elem>::from_weights(std::move(entries), /*merge_duplicates=*/true);
}

/// Circle instance of Lemma 3: g_n at angle n * alpha turns, n = 1..K.
CircleMeasure dense_subgroup_circle_measure(double alpha_turns, int K);

/// Named, reproducible scenario runs with machine-checkable verdicts.
struct ScenarioResult {
  std::string name;
  bool pass = false;
  std::vector<std::string> lines;  // human-readable findings
  std::vector<std::string> csv_header;
  std::vector<std::vector<std::string>> csv_rows;
};

std::vector<std::string> scenario_names();  // remark-ii, remark-iii, lemma3-circle
ScenarioResult run_scenario(const std::string& name, const ToleranceProfile& tol = {});

}  // namespace specgap
