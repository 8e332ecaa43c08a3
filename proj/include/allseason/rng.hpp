// Copyright 2026 The allseason authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

#include <Eigen/Core>

namespace allseason {

using Rng = std::mt19937_64;

/// Stateless 64-bit mixer used to derive independent stream seeds.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Derives a generator for stream `tag` from a root seed. Streams with
/// distinct tags are independent, so consuming one does not shift another.
inline Rng derive_stream(std::uint64_t root_seed, std::uint64_t tag) {
  std::uint64_t state = root_seed ^ (0x632be59bd9b4e019ULL * (tag + 1));
  return Rng(splitmix64(state));
}

/// Uniform double in [0, 1).
inline double uniform_unit(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Standard normal via Box-Muller. Consumes exactly two generator words per
/// call, so stream positions are easy to reason about.
inline double standard_normal(Rng& rng) {
  const double u1 = (static_cast<double>(rng() >> 11) + 1.0) * 0x1.0p-53;  // (0, 1]
  const double u2 = static_cast<double>(rng() >> 11) * 0x1.0p-53;          // [0, 1)
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

inline Eigen::VectorXd standard_normal_vector(Rng& rng, Eigen::Index n) {
  Eigen::VectorXd z(n);
  for (Eigen::Index i = 0; i < n; ++i) z(i) = standard_normal(rng);
  return z;
}

/// Unbiased uniform index in [0, n).
inline std::size_t uniform_index(Rng& rng, std::size_t n) {
  if (n == 0) throw std::invalid_argument("uniform_index: n must be positive");
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - max % n;
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return static_cast<std::size_t>(x % n);
}

/// The independent streams one experiment run draws from. Environment
/// randomness never shares a stream with policy randomness, so swapping the
/// policy leaves the environment realization untouched.
struct RngStreams {
  Rng env_noise;
  Rng action_gen;
  Rng policy;
  Rng tie_break;
  Rng bandit_select;

  static RngStreams from_seed(std::uint64_t root_seed) {
    return RngStreams{
        derive_stream(root_seed, 1),  // env_noise
        derive_stream(root_seed, 2),  // action_gen
        derive_stream(root_seed, 3),  // policy
        derive_stream(root_seed, 4),  // tie_break
        derive_stream(root_seed, 5),  // bandit_select
    };
  }
};

}  // namespace allseason
