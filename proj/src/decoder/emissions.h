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

#ifndef PHONEBIAS_DECODER_EMISSIONS_H_
#define PHONEBIAS_DECODER_EMISSIONS_H_

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "bias/contextual_fst.h"
#include "lexicon/symbol_table.h"

namespace phonebias {

// One step is a dense log-probability vector indexed by unit id; absent
// symbols hold -infinity.
using EmissionStep = std::vector<double>;

struct EmissionSequence {
  std::string utt_id;
  std::vector<EmissionStep> steps;
};

// Throws kFormat unless every log-probability is <= 0 and every step sums
// to 1 within `tolerance`.
void ValidateEmissions(const EmissionSequence& em, double tolerance = 1e-6);

// {"utt_id": "...", "steps": [{"sym": logp, ...}, ...]}
std::string FormatEmissionsJson(const EmissionSequence& em, const SymbolTable& units);
// Throws kFormat, or kAlphabetMismatch for symbols outside `units`.
EmissionSequence ParseEmissionsJson(const std::string& line, const SymbolTable& units);

std::vector<EmissionSequence> LoadEmissions(const std::string& path, const SymbolTable& units);
void SaveEmissions(const std::vector<EmissionSequence>& ems, const SymbolTable& units,
                   const std::string& path);

struct SyntheticConfig {
  double noise = 0.0;  // epsilon in [0, 1)
  uint64_t seed = 0;
};

// Reference symbols for a transcript: phonemes for words in
// `foreign_words`, wordpieces otherwise, <eow> between words.
std::vector<Label> ReferenceSymbols(const std::vector<std::string>& transcript,
                                    const std::set<std::string>& foreign_words,
                                    const ExpansionContext& ctx);

// Each step is corrupted with probability `noise`: the observed symbol is
// then drawn uniformly from the reference's other same-kind symbols. The
// observed symbol gets probability 1 - noise and the rest is spread evenly
// over the remaining same-kind symbols. <eow> has no confusions.
EmissionSequence GenerateSyntheticEmissions(const std::string& utt_id,
                                            const std::vector<std::string>& transcript,
                                            const std::set<std::string>& foreign_words,
                                            const ExpansionContext& ctx,
                                            const SyntheticConfig& config);

// Same, from an explicit reference; returns the observed symbols in
// `observed` when non-null.
EmissionSequence SynthesizeSteps(const std::string& utt_id, const std::vector<Label>& reference,
                                 const SymbolTable& units, const SyntheticConfig& config,
                                 std::vector<Label>* observed = nullptr);

}  // namespace phonebias

#endif  // PHONEBIAS_DECODER_EMISSIONS_H_
