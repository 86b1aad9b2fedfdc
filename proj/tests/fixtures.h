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

#ifndef PHONEBIAS_TESTS_FIXTURES_H_
#define PHONEBIAS_TESTS_FIXTURES_H_

#include <memory>
#include <string>
#include <vector>

#include "base/rng.h"
#include "bias/contextual_fst.h"
#include "decoder/emissions.h"
#include "harness/experiment.h"
#include "oracles.h"

namespace phonebias::testing {

std::string DataDir();
std::string TempPath(const std::string& name);

// The shipped tables with the French lexicon and map, loaded once.
struct Shipped {
  Resources res;
  std::unique_ptr<Lexicon> fr_lexicon;
  ExpansionContext ctx;
};
const Shipped& ShippedData();

// Four phonemes (a b c d), pieces over the letters x y z, and random words
// with random pronunciations in an English lexicon. Homophones and
// pronunciation prefixes are allowed.
struct ToyWorld {
  std::shared_ptr<const SymbolTable> phonemes;
  std::shared_ptr<const SymbolTable> units;
  std::unique_ptr<WordpieceInventory> pieces;
  std::unique_ptr<Lexicon> lexicon;
  ExpansionContext ctx;
  std::vector<std::string> words;
  std::vector<OracleWord> oracle_words;
};
std::unique_ptr<ToyWorld> MakeToyWorld(Rng& rng, int n_words);

// Sparse random emissions over the toy alphabet: each step supports one
// to four symbols with weights from {1, 2, 3}.
EmissionSequence RandomEmissions(Rng& rng, const ToyWorld& world, int steps);

// Step costs plus the final cancellation.
double RunMatcher(const Wfst& matcher, const std::vector<Label>& input);

}  // namespace phonebias::testing

#endif  // PHONEBIAS_TESTS_FIXTURES_H_
