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

#ifndef PHONEBIAS_BIAS_CONTEXTUAL_FST_H_
#define PHONEBIAS_BIAS_CONTEXTUAL_FST_H_

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fst/wfst.h"
#include "lexicon/bias_list.h"
#include "lexicon/lexicon.h"
#include "lexicon/phoneme_map.h"
#include "lexicon/symbol_table.h"
#include "tokenization/wordpiece.h"

namespace phonebias {

enum class BiasUnit { kPhoneme, kWordpiece, kGrapheme, kParallel };

std::string_view BiasUnitName(BiasUnit unit);
std::optional<BiasUnit> ParseBiasUnit(std::string_view name);

struct BiasConfig {
  BiasUnit unit = BiasUnit::kPhoneme;
  double bonus = 2.0;   // w; every matched unit costs -w
  double lambda = 1.0;  // used by the decoder
  // Throws kInvalidArgument unless bonus > 0 and lambda >= 0.
  void Validate() const;
};

// Everything needed to spell a word in some unit. `units` is the
// recognizer table (phonemes and wordpieces); `graphemes` is only needed
// for the grapheme unit. A null `map` means the lexicon is already bound
// to the English phoneme table.
struct ExpansionContext {
  std::shared_ptr<const SymbolTable> units;
  std::shared_ptr<const SymbolTable> graphemes;
  const Lexicon* lexicon = nullptr;
  const PhonemeMap* map = nullptr;
  const WordpieceInventory* wordpieces = nullptr;

  // Table that labels `unit` sequences (graphemes or units).
  const std::shared_ptr<const SymbolTable>& TableFor(BiasUnit unit) const;
};

// Label sequence of one word. kParallel is not a single unit and is
// rejected. Throws kExpansionFailure naming the word and the unit.
std::vector<Label> ExpandWord(std::string_view word, BiasUnit unit, const ExpansionContext& ctx);

// Words joined by <eow>.
std::vector<Label> ExpandPhrase(const Phrase& phrase, BiasUnit unit, const ExpansionContext& ctx);

// Word-level union acceptor, a trie with zero costs. An empty list gives a
// single non-final state. Throws kEmptyPhrase, kUnknownSymbol.
Wfst BuildPhraseAcceptor(const std::vector<Phrase>& phrases,
                         std::shared_ptr<const SymbolTable> words);

// One path per word: unit labels in, the word label on the last arc,
// `arc_cost` on every arc.
Wfst BuildSpeller(const std::vector<std::string>& words, BiasUnit unit, const ExpansionContext& ctx,
                  std::shared_ptr<const SymbolTable> word_table, double arc_cost = 0.0);

// One or more spelled words separated by <eow>:<eps> arcs of `eow_cost`.
Wfst SpellerClosure(const Wfst& speller, Label eow, double eow_cost);

// Deterministic acceptor trie over label sequences, every arc costing
// -bonus, accepting states final at cost 0.
Wfst BuildUnitTrie(const std::vector<std::vector<Label>>& sequences, double bonus);

// Deterministic acceptor trie over phrase unit sequences; every arc costs
// -bonus and accepting states have final cost 0. kParallel holds both the
// phoneme and the wordpiece spelling of each phrase.
Wfst BuildBiasTrie(const std::vector<Phrase>& phrases, BiasUnit unit, double bonus,
                   const ExpansionContext& ctx);

// min(det(S o G)): the reference construction of the same machine as
// BuildBiasTrie, for single units.
Wfst CompileBiasPipeline(const std::vector<Phrase>& phrases, BiasUnit unit, double bonus,
                         const ExpansionContext& ctx);

struct ContextualFst {
  Wfst fst;
  BiasUnit unit = BiasUnit::kPhoneme;
  size_t phrase_count = 0;
  double bonus = 0.0;
};

// The trie turned into a matcher: completing a phrase returns to the
// start, and each non-start state has a failure arc to the start that
// cancels the bonus collected since the last completed phrase. Final
// costs equal CancellationCost, so every state is final.
ContextualFst BuildContextualFst(const std::vector<Phrase>& phrases, const BiasConfig& config,
                                 const ExpansionContext& ctx);

// The matcher for an arbitrary trie from BuildUnitTrie.
Wfst AddFailureArcs(const Wfst& trie, double bonus);

ContextualFst BuildParallelBias(const std::vector<Phrase>& phrases, double bonus,
                                const ExpansionContext& ctx);

// Sum of failure-arc costs from `state` back to the start.
double CancellationCost(const Wfst& fst, StateId state);

// Phonemes in, words out: compose(determinize(L), G).
Wfst BuildDynamicClassLm(const Wfst& lexicon_fst, const Wfst& grammar);

}  // namespace phonebias

#endif  // PHONEBIAS_BIAS_CONTEXTUAL_FST_H_
