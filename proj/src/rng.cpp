// Copyright 2026 the interaction-net authors
// SPDX-License-Identifier: Apache-2.0
#include "inet/rng.hpp"

namespace inet {

namespace {
uint64_t fnv1a(std::string_view s) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}
}  // namespace

Rng derive_stream(uint64_t run_seed, std::string_view component) {
  // One mixing round keeps streams independent even for adjacent seeds.
  Rng mixer(run_seed ^ fnv1a(component));
  return Rng(mixer.next_u64());
}

}  // namespace inet
