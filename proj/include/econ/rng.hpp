#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>

namespace econ {

// splitmix64 step; used to derive independent per-replication seeds from a
// master seed so Monte-Carlo results do not depend on execution order.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  return splitmix64(splitmix64(master) ^ splitmix64(index + 0x51ed270b8a9c1dfbULL));
}

// xoshiro256** — small, fast, and identical output on every platform, which
// keeps frozen test expectations and report bytes stable.
class Rng {
public:
  explicit Rng(std::uint64_t seed) {
    std::uint64_t x = seed;
    for (auto& word : state_) {
      x = splitmix64(x);
      word = x;
    }
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // Uniform on (0, 1).
  double next_uniform() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  // Standard normal via Box-Muller with a cached spare.
  double next_normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double u1 = next_uniform();
    const double u2 = next_uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * M_PI * u2;
    spare_ = r * std::sin(theta);
    has_spare_ = true;
    return r * std::cos(theta);
  }

  Eigen::VectorXd normal_vector(Eigen::Index n, double sd = 1.0) {
    Eigen::VectorXd v(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      v(i) = sd * next_normal();
    }
    return v;
  }

  // Driftless Gaussian random walk y_i = sum_{s<=i} eps_s.
  Eigen::VectorXd random_walk(Eigen::Index n, double sd = 1.0) {
    Eigen::VectorXd v(n);
    double acc = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
      acc += sd * next_normal();
      v(i) = acc;
    }
    return v;
  }

  // Zero-mean stationary AR(1) with coefficient phi, |phi| < 1.
  Eigen::VectorXd ar1(Eigen::Index n, double phi, double sd = 1.0) {
    Eigen::VectorXd v(n);
    double prev = sd / std::sqrt(1.0 - phi * phi) * next_normal();
    for (Eigen::Index i = 0; i < n; ++i) {
      prev = phi * prev + sd * next_normal();
      v(i) = prev;
    }
    return v;
  }

private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::uint64_t state_[4];
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace econ
