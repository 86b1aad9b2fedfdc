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

#ifndef PHONEBIAS_DECODER_DECODING_GRAPH_H_
#define PHONEBIAS_DECODER_DECODING_GRAPH_H_

#include <memory>
#include <string>
#include <vector>

#include "bias/contextual_fst.h"
#include "fst/wfst.h"

namespace phonebias {

struct GraphWord {
  std::string word;
  std::vector<Label> pronunciation;  // English phoneme ids
  std::vector<Label> wordpieces;
};

// Hub state 0 loops on every wordpiece and <eow>. A pronunciation trie of
// phoneme:<eps> arcs hangs off the hub; after a word's last phoneme a
// chain of <eps>:wordpiece arcs spells the word and returns to the hub.
struct DecodingGraph {
  Wfst fst;
  StateId hub = 0;
  size_t tree_states = 0;
  std::vector<GraphWord> words;
  std::shared_ptr<const SymbolTable> units;
};

// Repeated words are kept once. Throws kExpansionFailure.
DecodingGraph BuildDecodingGraph(const std::vector<std::string>& bias_words,
                                 const ExpansionContext& ctx);

struct Closure {
  StateId state = kNoState;
  std::vector<Label> outputs;
};

// Every end point of epsilon-input paths from `state` (a state with no
// epsilon arcs returns itself with no output). More than one result means
// several words share a pronunciation. Throws kMalformedGraph on a cycle.
std::vector<Closure> EpsilonClosures(const Wfst& fst, StateId state);

// The single closure of `state`. Throws kMalformedGraph if it is not unique.
Closure EpsilonClosureOutputs(const DecodingGraph& graph, StateId state);

bool HasEpsilonArcs(const Wfst& fst, StateId state);

}  // namespace phonebias

#endif  // PHONEBIAS_DECODER_DECODING_GRAPH_H_
