// Copyright 2026 The phonebias Authors.
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

#ifndef PHONEBIAS_BASE_RNG_H_
#define PHONEBIAS_BASE_RNG_H_

#include <cstddef>
#include <cstdint>
#include <random>
#include <string_view>

namespace phonebias {

// The engine is fully specified by the standard, so streams are identical
// across platforms. The distributions below are ours for the same reason
// (std:: distributions are implementation-defined).
using Rng = std::mt19937_64;

uint64_t SplitMix64(uint64_t x);

// Derives an independent seed for a named sub-stream.
uint64_t DeriveSeed(uint64_t base, uint64_t stream);
uint64_t DeriveSeed(uint64_t base, std::string_view stream);

// Uniform double in [0, 1) with 53 random bits.
double UniformDouble(Rng& rng);

// Uniform integer in [0, n), n > 0, by rejection.
size_t UniformIndex(Rng& rng, size_t n);

bool Bernoulli(Rng& rng, double p);

}  // namespace phonebias

#endif  // PHONEBIAS_BASE_RNG_H_
