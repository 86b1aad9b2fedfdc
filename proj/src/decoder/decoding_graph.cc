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

#include "decoder/decoding_graph.h"

#include <map>
#include <set>

#include "base/error.h"

namespace phonebias {

DecodingGraph BuildDecodingGraph(const std::vector<std::string>& bias_words,
                                 const ExpansionContext& ctx) {
  DecodingGraph g;
  g.units = ctx.units;
  Wfst& fst = g.fst;
  g.hub = fst.AddState();
  fst.SetStart(g.hub);
  fst.SetFinal(g.hub, 0.0);
  fst.AddArc(g.hub, {ctx.units->eow(), ctx.units->eow(), 0.0, g.hub});
  for (Label l : ctx.units->LabelsOfKind(SymbolKind::kWordpiece)) fst.AddArc(g.hub, {l, l, 0.0, g.hub});

  std::set<std::string> seen;
  std::map<std::pair<StateId, Label>, StateId> tree;
  for (const std::string& word : bias_words) {
    if (!seen.insert(word).second) continue;
    GraphWord entry{word, ExpandWord(word, BiasUnit::kPhoneme, ctx),
                    ExpandWord(word, BiasUnit::kWordpiece, ctx)};
    StateId s = g.hub;
    for (Label p : entry.pronunciation) {
      auto [it, inserted] = tree.emplace(std::make_pair(s, p), kNoState);
      if (inserted) {
        it->second = fst.AddState();
        fst.AddArc(s, {p, kEpsilon, 0.0, it->second});
        ++g.tree_states;
      }
      s = it->second;
    }
    for (size_t i = 0; i < entry.wordpieces.size(); ++i) {
      const bool last = i + 1 == entry.wordpieces.size();
      const StateId next = last ? g.hub : fst.AddState();
      if (!last) ++g.tree_states;
      fst.AddArc(s, {kEpsilon, entry.wordpieces[i], 0.0, next});
      s = next;
    }
    g.words.push_back(std::move(entry));
  }
  fst.SortArcsByInput();
  fst.set_input_symbols(ctx.units);
  fst.set_output_symbols(ctx.units);
  return g;
}

bool HasEpsilonArcs(const Wfst& fst, StateId state) {
  auto arcs = fst.Arcs(state);
  if (fst.input_sorted()) return !arcs.empty() && arcs.front().ilabel == kEpsilon;
  for (const Arc& a : arcs) {
    if (a.ilabel == kEpsilon) return true;
  }
  return false;
}

namespace {

void Follow(const Wfst& fst, StateId state, std::vector<Label>* outputs, std::vector<bool>* on_path,
            std::vector<Closure>* result) {
  if (!HasEpsilonArcs(fst, state)) {
    result->push_back({state, *outputs});
    return;
  }
  if ((*on_path)[state]) throw Error(ErrorCode::kMalformedGraph, "epsilon cycle in decoding graph");
  (*on_path)[state] = true;
  for (const Arc& a : fst.Arcs(state)) {
    if (a.ilabel != kEpsilon) continue;
    if (a.olabel != kEpsilon) outputs->push_back(a.olabel);
    Follow(fst, a.nextstate, outputs, on_path, result);
    if (a.olabel != kEpsilon) outputs->pop_back();
  }
  (*on_path)[state] = false;
}

}  // namespace

std::vector<Closure> EpsilonClosures(const Wfst& fst, StateId state) {
  if (!fst.ValidState(state)) throw Error(ErrorCode::kInvalidArgument, "no such state");
  std::vector<Closure> result;
  std::vector<Label> outputs;
  std::vector<bool> on_path(fst.NumStates(), false);
  Follow(fst, state, &outputs, &on_path, &result);
  return result;
}

Closure EpsilonClosureOutputs(const DecodingGraph& graph, StateId state) {
  std::vector<Closure> all = EpsilonClosures(graph.fst, state);
  if (all.size() != 1) {
    throw Error(ErrorCode::kMalformedGraph,
                "state " + std::to_string(state) + " has " + std::to_string(all.size()) + " closures");
  }
  return std::move(all.front());
}

}  // namespace phonebias
