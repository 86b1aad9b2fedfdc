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

#include "tokenization/target_sampler.h"

#include <algorithm>

#include "base/error.h"

namespace phonebias {

void SamplerConfig::Validate() const {
  if (!(p0 >= 0.0 && p0 <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "p0 must be in [0, 1]");
  }
  if (T < 1) throw Error(ErrorCode::kInvalidArgument, "T must be >= 1");
}

double PhonemePresentationProb(int64_t count, const SamplerConfig& config) {
  if (count <= config.T) return config.p0;
  return config.p0 * std::min(static_cast<double>(config.T) / static_cast<double>(count), 1.0);
}

std::vector<Label> WordToPhonemes(std::string_view word, const Lexicon& lexicon) {
  const LexiconEntry* entry = lexicon.Find(word);
  if (entry == nullptr) {
    throw Error(ErrorCode::kOutOfLexicon, "'" + std::string(word) + "' is not in the lexicon");
  }
  return entry->pronunciation;
}

std::vector<Label> SampleTargetSequence(std::span<const std::string> transcript,
                                        const Lexicon& lexicon,
                                        const WordpieceInventory& inventory,
                                        const SymbolTable& units, const SamplerConfig& config,
                                        Rng& rng) {
  config.Validate();
  std::vector<Label> out;
  for (size_t i = 0; i < transcript.size(); ++i) {
    if (i > 0) out.push_back(units.eow());
    const std::string& word = transcript[i];
    const LexiconEntry* entry = lexicon.Find(word);
    // One draw per in-lexicon word, whatever the probability, so the
    // stream position depends only on the transcript.
    if (entry != nullptr &&
        UniformDouble(rng) < PhonemePresentationProb(entry->frequency, config)) {
      for (Label p : entry->pronunciation) {
        if (!units.Contains(p) || units.Kind(p) != SymbolKind::kPhoneme) {
          throw Error(ErrorCode::kAlphabetMismatch,
                      "lexicon phoneme id " + std::to_string(p) + " is not a phoneme unit");
        }
      }
      out.insert(out.end(), entry->pronunciation.begin(), entry->pronunciation.end());
    } else {
      auto pieces = WordpieceLabels(word, inventory, units);
      out.insert(out.end(), pieces.begin(), pieces.end());
    }
  }
  return out;
}

}  // namespace phonebias
