#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace specgap {

/// Seeded RNG with stdlib-independent derived draws, so identical seeds give
/// identical sweeps on every platform (the determinism contract for CSV output).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform on {0, ..., n-1}, n >= 1.
  std::uint64_t below(std::uint64_t n) {
    // Rejection-free modulo; bias is irrelevant for test sampling.
    return engine_() % n;
  }

  int int_in(int lo, int hi) {  // inclusive bounds
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  /// Uniform in [0, 1).
  double real01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double real_in(double lo, double hi) { return lo + (hi - lo) * real01(); }

  std::complex<double> complex_in_box() {  // Re, Im uniform in [-1, 1)
    return {real_in(-1.0, 1.0), real_in(-1.0, 1.0)};
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace specgap
