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

#include "fixtures.h"

#include <cmath>
#include <filesystem>
#include <set>

#include "fst/algorithms.h"

#ifndef PHONEBIAS_DATA_DIR
#define PHONEBIAS_DATA_DIR "data"
#endif

namespace phonebias::testing {

std::string DataDir() { return PHONEBIAS_DATA_DIR; }

std::string TempPath(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "phonebias_tests";
  std::filesystem::create_directories(dir);
  return (dir / name).string();
}

const Shipped& ShippedData() {
  static const Shipped* shipped = [] {
    auto* s = new Shipped;
    s->res = LoadResources(DataDir());
    s->fr_lexicon = std::make_unique<Lexicon>(LoadLexicon(DataDir() + "/fr/lexicon.tsv", s->res.fr_phonemes));
    s->ctx.units = s->res.units;
    s->ctx.lexicon = s->fr_lexicon.get();
    s->ctx.map = s->res.map.get();
    s->ctx.wordpieces = s->res.wordpieces.get();
    return s;
  }();
  return *shipped;
}

std::unique_ptr<ToyWorld> MakeToyWorld(Rng& rng, int n_words) {
  auto w = std::make_unique<ToyWorld>();
  auto phonemes = std::make_shared<SymbolTable>();
  for (const char* p : {"a", "b", "c", "d"}) phonemes->Add(p, SymbolKind::kPhoneme);
  w->phonemes = phonemes;
  w->pieces = std::make_unique<WordpieceInventory>(
      std::vector<std::string>{"_x", "_y", "_z", "x", "y", "z"});
  w->units = std::make_shared<const SymbolTable>(MakeUnitTable(*phonemes, w->pieces->pieces()));

  std::set<std::string> spelled;
  std::vector<LexiconEntry> entries;
  while (static_cast<int>(entries.size()) < n_words) {
    std::string word;
    const size_t letters = 1 + UniformIndex(rng, 3);
    for (size_t i = 0; i < letters; ++i) word += "xyz"[UniformIndex(rng, 3)];
    if (!spelled.insert(word).second) continue;
    std::vector<Label> pron;
    const size_t length = 1 + UniformIndex(rng, 3);
    for (size_t i = 0; i < length; ++i) pron.push_back(static_cast<Label>(3 + UniformIndex(rng, 4)));
    entries.push_back({word, 1, pron});
    w->words.push_back(word);
  }
  w->lexicon = std::make_unique<Lexicon>(w->phonemes, entries);
  w->ctx.units = w->units;
  w->ctx.lexicon = w->lexicon.get();
  w->ctx.wordpieces = w->pieces.get();
  for (const std::string& word : w->words) {
    w->oracle_words.push_back({ExpandWord(word, BiasUnit::kPhoneme, w->ctx),
                               ExpandWord(word, BiasUnit::kWordpiece, w->ctx)});
  }
  return w;
}

EmissionSequence RandomEmissions(Rng& rng, const ToyWorld& world, int steps) {
  EmissionSequence em{"toy", {}};
  const Label first = 2, last = static_cast<Label>(world.units->size()) - 1;
  for (int t = 0; t < steps; ++t) {
    const size_t support = 1 + UniformIndex(rng, 4);
    std::map<Label, double> weights;
    while (weights.size() < support) {
      weights[static_cast<Label>(first + UniformIndex(rng, last - first + 1))] =
          static_cast<double>(1 + UniformIndex(rng, 3));
    }
    double total = 0.0;
    for (const auto& [l, v] : weights) total += v;
    EmissionStep step(world.units->size(), -INFINITY);
    for (const auto& [l, v] : weights) step[l] = std::log(v / total);
    em.steps.push_back(std::move(step));
  }
  return em;
}

double RunMatcher(const Wfst& matcher, const std::vector<Label>& input) {
  StateId s = matcher.Start();
  double cost = 0.0;
  for (Label l : input) {
    const FailureStep step = StepWithFailure(matcher, s, l);
    s = step.state;
    cost += step.cost;
  }
  return cost + CancellationCost(matcher, s);
}

}  // namespace phonebias::testing
