// Copyright 2026 The Specrad Authors
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

#include <cstdint>

namespace specrad {

// SplitMix64 (Steele, Lea & Flood).  Chosen over std::mt19937_64 because the
// output sequence is pinned by this code alone, so seeded instances are
// bit-identical across platforms and standard-library versions.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0,1) with 53 random bits; exact IEEE-754 arithmetic.
  double next_double() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) {
    return lo + (hi - lo) * next_double();
  }

  // Modulo reduction: the tiny bias is irrelevant for test-instance
  // generation and keeps the draw sequence trivially portable.
  uint64_t next_below(uint64_t bound) { return next() % bound; }

  // Derived stream for phase `key`; gives generation phases independent
  // draw sequences so adding draws to one phase cannot shift another.
  SplitMix64 split(uint64_t key) const {
    SplitMix64 mixer(state_ ^ (0xa0761d6478bd642fULL * (key + 1)));
    return SplitMix64(mixer.next());
  }

 private:
  uint64_t state_;
};

}  // namespace specrad
