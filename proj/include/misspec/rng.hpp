#pragma once

#include <cstdint>

#include <Eigen/Dense>

namespace misspec {

// Counter-based uniform draws: the value at (seed, step) is a pure function
// of its key, so parallel replicas are deterministic and order-independent.

inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

inline std::uint64_t counter_bits(std::uint64_t seed, std::uint64_t step) {
  return mix64(mix64(seed) ^ (step * 0xd1342543de82ef95ull + 0x2545f4914f6cdd1dull));
}

// Uniform on [0, 1) with 53 random bits.
inline double counter_uniform(std::uint64_t seed, std::uint64_t step) {
  return static_cast<double>(counter_bits(seed, step) >> 11) * 0x1.0p-53;
}

// Inverse-CDF draw from a cumulative distribution (cdf.back() == 1).
inline Eigen::Index draw_from_cdf(const Eigen::VectorXd& cdf, double u) {
  Eigen::Index lo = 0;
  Eigen::Index hi = cdf.size() - 1;
  while (lo < hi) {
    const Eigen::Index mid = (lo + hi) / 2;
    if (u < cdf[mid])
      hi = mid;
    else
      lo = mid + 1;
  }
  return lo;
}

}  // namespace misspec
