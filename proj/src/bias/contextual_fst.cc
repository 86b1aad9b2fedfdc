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

#include "bias/contextual_fst.h"

#include <map>

#include "base/error.h"
#include "base/unicode.h"
#include "fst/algorithms.h"

namespace phonebias {

namespace {

class Trie {
 public:
  Trie() : children_(1) {}

  // Returns the state reached by `labels`.
  StateId Insert(const std::vector<Label>& labels) {
    StateId s = 0;
    for (Label l : labels) {
      auto [it, inserted] = children_[s].emplace(l, static_cast<StateId>(children_.size()));
      if (inserted) children_.emplace_back();
      s = it->second;
    }
    accepting_.resize(children_.size(), false);
    accepting_[s] = true;
    return s;
  }

  Wfst ToWfst(double arc_cost) const {
    Wfst fst;
    fst.AddStates(children_.size());
    fst.SetStart(0);
    for (StateId s = 0; s < static_cast<StateId>(children_.size()); ++s) {
      if (s < static_cast<StateId>(accepting_.size()) && accepting_[s]) fst.SetFinal(s, 0.0);
      for (const auto& [l, t] : children_[s]) fst.AddArc(s, {l, l, arc_cost, t});
    }
    return fst;
  }

 private:
  std::vector<std::map<Label, StateId>> children_;
  std::vector<bool> accepting_;
};

[[noreturn]] void ExpansionError(std::string_view word, BiasUnit unit, const std::string& why) {
  throw Error(ErrorCode::kExpansionFailure, "cannot expand \"" + std::string(word) + "\" as " +
                                                std::string(BiasUnitName(unit)) + ": " + why);
}

}  // namespace

std::string_view BiasUnitName(BiasUnit unit) {
  switch (unit) {
    case BiasUnit::kPhoneme: return "phoneme";
    case BiasUnit::kWordpiece: return "wordpiece";
    case BiasUnit::kGrapheme: return "grapheme";
    case BiasUnit::kParallel: return "parallel";
  }
  return "?";
}

std::optional<BiasUnit> ParseBiasUnit(std::string_view name) {
  for (BiasUnit u : {BiasUnit::kPhoneme, BiasUnit::kWordpiece, BiasUnit::kGrapheme,
                     BiasUnit::kParallel}) {
    if (BiasUnitName(u) == name) return u;
  }
  return std::nullopt;
}

void BiasConfig::Validate() const {
  if (!(bonus > 0.0)) throw Error(ErrorCode::kInvalidArgument, "bias bonus must be > 0");
  if (!(lambda >= 0.0)) throw Error(ErrorCode::kInvalidArgument, "lambda must be >= 0");
}

const std::shared_ptr<const SymbolTable>& ExpansionContext::TableFor(BiasUnit unit) const {
  return unit == BiasUnit::kGrapheme ? graphemes : units;
}

std::vector<Label> ExpandWord(std::string_view word, BiasUnit unit, const ExpansionContext& ctx) {
  std::vector<Label> labels;
  try {
    switch (unit) {
      case BiasUnit::kPhoneme:
        if (ctx.lexicon == nullptr) ExpansionError(word, unit, "no lexicon");
        labels = TargetPronunciation(*ctx.lexicon, ctx.map, word);
        break;
      case BiasUnit::kWordpiece:
        if (ctx.wordpieces == nullptr || !ctx.units) ExpansionError(word, unit, "no wordpieces");
        labels = WordpieceLabels(word, *ctx.wordpieces, *ctx.units);
        break;
      case BiasUnit::kGrapheme:
        if (!ctx.graphemes) ExpansionError(word, unit, "no grapheme table");
        for (const std::string& g : SplitCodePoints(NormalizeNfc(word))) {
          labels.push_back(ctx.graphemes->Lookup(g));
        }
        break;
      case BiasUnit::kParallel:
        ExpansionError(word, unit, "not a single unit");
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kExpansionFailure) throw;
    ExpansionError(word, unit, e.what());
  }
  if (labels.empty()) ExpansionError(word, unit, "empty expansion");
  return labels;
}

std::vector<Label> ExpandPhrase(const Phrase& phrase, BiasUnit unit, const ExpansionContext& ctx) {
  if (phrase.empty()) throw Error(ErrorCode::kEmptyPhrase, "empty biasing phrase");
  std::vector<Label> labels;
  for (size_t i = 0; i < phrase.size(); ++i) {
    if (phrase[i].empty()) throw Error(ErrorCode::kEmptyPhrase, "empty word in biasing phrase");
    if (i > 0) labels.push_back(ctx.TableFor(unit)->eow());
    std::vector<Label> word = ExpandWord(phrase[i], unit, ctx);
    labels.insert(labels.end(), word.begin(), word.end());
  }
  return labels;
}

Wfst BuildPhraseAcceptor(const std::vector<Phrase>& phrases,
                         std::shared_ptr<const SymbolTable> words) {
  Trie trie;
  for (const Phrase& phrase : phrases) {
    if (phrase.empty()) throw Error(ErrorCode::kEmptyPhrase, "empty biasing phrase");
    std::vector<Label> labels;
    for (const std::string& w : phrase) {
      if (w.empty()) throw Error(ErrorCode::kEmptyPhrase, "empty word in biasing phrase");
      labels.push_back(words->Lookup(w));
    }
    trie.Insert(labels);
  }
  Wfst fst = trie.ToWfst(0.0);
  fst.set_input_symbols(words);
  fst.set_output_symbols(words);
  return fst;
}

Wfst BuildSpeller(const std::vector<std::string>& words, BiasUnit unit, const ExpansionContext& ctx,
                  std::shared_ptr<const SymbolTable> word_table, double arc_cost) {
  Wfst fst;
  const StateId start = fst.AddState();
  fst.SetStart(start);
  for (const std::string& word : words) {
    const std::vector<Label> labels = ExpandWord(word, unit, ctx);
    const Label word_label = word_table->Lookup(word);
    StateId s = start;
    for (size_t i = 0; i < labels.size(); ++i) {
      const StateId t = fst.AddState();
      const Label out = i + 1 == labels.size() ? word_label : kEpsilon;
      fst.AddArc(s, {labels[i], out, arc_cost, t});
      s = t;
    }
    fst.SetFinal(s, 0.0);
  }
  fst.set_input_symbols(ctx.TableFor(unit));
  fst.set_output_symbols(std::move(word_table));
  return fst;
}

Wfst SpellerClosure(const Wfst& speller, Label eow, double eow_cost) {
  Wfst out = speller;
  for (StateId s = 0; s < static_cast<StateId>(out.NumStates()); ++s) {
    if (s != out.Start() && speller.IsFinal(s)) out.AddArc(s, {eow, kEpsilon, eow_cost, out.Start()});
  }
  return out;
}

Wfst BuildUnitTrie(const std::vector<std::vector<Label>>& sequences, double bonus) {
  Trie trie;
  for (const std::vector<Label>& seq : sequences) {
    if (seq.empty()) throw Error(ErrorCode::kEmptyPhrase, "empty label sequence");
    trie.Insert(seq);
  }
  return trie.ToWfst(-bonus);
}

Wfst BuildBiasTrie(const std::vector<Phrase>& phrases, BiasUnit unit, double bonus,
                   const ExpansionContext& ctx) {
  std::vector<std::vector<Label>> sequences;
  for (const Phrase& phrase : phrases) {
    if (unit == BiasUnit::kParallel) {
      sequences.push_back(ExpandPhrase(phrase, BiasUnit::kPhoneme, ctx));
      sequences.push_back(ExpandPhrase(phrase, BiasUnit::kWordpiece, ctx));
    } else {
      sequences.push_back(ExpandPhrase(phrase, unit, ctx));
    }
  }
  Wfst fst = BuildUnitTrie(sequences, bonus);
  fst.set_input_symbols(ctx.TableFor(unit));
  fst.set_output_symbols(ctx.TableFor(unit));
  return fst;
}

Wfst CompileBiasPipeline(const std::vector<Phrase>& phrases, BiasUnit unit, double bonus,
                         const ExpansionContext& ctx) {
  if (unit == BiasUnit::kParallel) {
    throw Error(ErrorCode::kInvalidArgument, "the pipeline is defined for single units");
  }
  const std::vector<std::string> words = PhraseWords(phrases);
  auto word_table = std::make_shared<const SymbolTable>(MakeWordTable(words));
  const Wfst g = BuildPhraseAcceptor(phrases, word_table);
  const Wfst s = BuildSpeller(words, unit, ctx, word_table, -bonus);
  const Wfst closure = SpellerClosure(s, ctx.TableFor(unit)->eow(), -bonus);
  Wfst c = MinimizeAcyclic(DeterminizeAcyclic(ProjectInput(Compose(closure, g))));
  c.set_output_symbols(c.input_symbols());
  return c;
}

Wfst AddFailureArcs(const Wfst& trie, double bonus) {
  const StateId n = static_cast<StateId>(trie.NumStates());
  // Trie states are numbered parent-first, so one pass fills depths.
  std::vector<int> depth(n, 0), banked(n, 0);
  std::vector<StateId> id(n, kNoState);
  Wfst fst;
  for (StateId s = 0; s < n; ++s) {
    if (s == trie.Start() || !trie.Arcs(s).empty()) id[s] = fst.AddState();
    for (const Arc& a : trie.Arcs(s)) {
      depth[a.nextstate] = depth[s] + 1;
      banked[a.nextstate] = trie.IsFinal(a.nextstate) ? depth[a.nextstate] : banked[s];
    }
  }
  const StateId start = id[trie.Start()];
  fst.SetStart(start);
  for (StateId s = 0; s < n; ++s) {
    if (id[s] == kNoState) continue;
    const double cancel = (depth[s] - banked[s]) * bonus;
    fst.SetFinal(id[s], cancel);
    if (s != trie.Start()) fst.AddArc(id[s], {kFailure, kFailure, cancel, start});
    for (const Arc& a : trie.Arcs(s)) {
      // A completed phrase with no continuation hands control back to the start.
      const StateId next = id[a.nextstate] == kNoState ? start : id[a.nextstate];
      fst.AddArc(id[s], {a.ilabel, a.olabel, a.weight, next});
    }
  }
  fst.SortArcsByInput();
  fst.set_input_symbols(trie.input_symbols());
  fst.set_output_symbols(trie.output_symbols());
  return fst;
}

ContextualFst BuildContextualFst(const std::vector<Phrase>& phrases, const BiasConfig& config,
                                 const ExpansionContext& ctx) {
  config.Validate();
  const Wfst trie = BuildBiasTrie(phrases, config.unit, config.bonus, ctx);
  return {AddFailureArcs(trie, config.bonus), config.unit, phrases.size(), config.bonus};
}

ContextualFst BuildParallelBias(const std::vector<Phrase>& phrases, double bonus,
                                const ExpansionContext& ctx) {
  BiasConfig config;
  config.unit = BiasUnit::kParallel;
  config.bonus = bonus;
  return BuildContextualFst(phrases, config, ctx);
}

double CancellationCost(const Wfst& fst, StateId state) {
  double cost = 0.0;
  for (size_t hops = 0; state != fst.Start(); ++hops) {
    const Arc* fail = fst.FailureArc(state);
    if (fail == nullptr || hops > fst.NumStates()) {
      throw Error(ErrorCode::kMalformedGraph, "state " + std::to_string(state) +
                                                  " has no failure path to the start");
    }
    cost += fail->weight;
    state = fail->nextstate;
  }
  return cost;
}

Wfst BuildDynamicClassLm(const Wfst& lexicon_fst, const Wfst& grammar) {
  return Compose(DeterminizeAcyclic(lexicon_fst), grammar);
}

}  // namespace phonebias
