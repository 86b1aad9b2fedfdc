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

#ifndef PHONEBIAS_TOKENIZATION_TARGET_SAMPLER_H_
#define PHONEBIAS_TOKENIZATION_TARGET_SAMPLER_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "base/rng.h"
#include "lexicon/lexicon.h"
#include "lexicon/symbol_table.h"
#include "tokenization/wordpiece.h"

namespace phonebias {

struct SamplerConfig {
  double p0 = 0.5;     // presentation probability for rare words
  int64_t T = 10;      // count threshold below which words count as rare
  uint64_t seed = 0;

  // Throws kInvalidArgument unless 0 <= p0 <= 1 and T >= 1.
  void Validate() const;
};

// p0 * min(T / count, 1); a count of zero takes the clamped branch.
double PhonemePresentationProb(int64_t count, const SamplerConfig& config);

// Stored pronunciation. Throws kOutOfLexicon.
std::vector<Label> WordToPhonemes(std::string_view word, const Lexicon& lexicon);

// Mixed wordpiece/phoneme target for one transcript. Each in-lexicon word
// is independently rendered as phonemes with PhonemePresentationProb of its
// count, otherwise as wordpieces; <eow> separates consecutive words.
// `lexicon` is expected trimmed and bound to the phoneme table that
// `units` was built from. Advances `rng`.
std::vector<Label> SampleTargetSequence(std::span<const std::string> transcript,
                                        const Lexicon& lexicon,
                                        const WordpieceInventory& inventory,
                                        const SymbolTable& units, const SamplerConfig& config,
                                        Rng& rng);

}  // namespace phonebias

#endif  // PHONEBIAS_TOKENIZATION_TARGET_SAMPLER_H_
