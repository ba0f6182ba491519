// Copyright 2026 the interaction-net authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace inet {

// Deterministic splitmix64 stream. Hand-rolled so that runs replay
// bit-identically regardless of standard-library implementation.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next_u64() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform double in [0, 1)
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // uniform integer in [0, n); n must be > 0
  size_t below(size_t n) {
    return static_cast<size_t>(
        (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
  }

  bool coin(double p) { return uniform() < p; }

 private:
  uint64_t state_;
};

// Derives an independent, named stream from the run seed. All randomness in a
// run flows from one seed through these streams, so runs are replayable.
Rng derive_stream(uint64_t run_seed, std::string_view component);

}  // namespace inet
