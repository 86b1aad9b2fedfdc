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

#include <algorithm>
#include <deque>
#include <map>
#include <tuple>

#include "base/error.h"
#include "fst/algorithms.h"

namespace phonebias {

namespace {

// Shortest epsilon distances from `source`, Bellman-Ford style so that
// negative arcs are allowed as long as no epsilon cycle is negative.
std::map<StateId, double> EpsilonClosure(const Wfst& fst, StateId source) {
  std::map<StateId, double> dist{{source, 0.0}};
  std::map<StateId, size_t> relaxations;
  std::deque<StateId> queue{source};
  const size_t limit = fst.NumStates() + 1;
  while (!queue.empty()) {
    const StateId s = queue.front();
    queue.pop_front();
    const double ds = dist[s];
    for (const Arc& a : fst.Arcs(s)) {
      if (a.ilabel != kEpsilon || a.olabel != kEpsilon) continue;
      const double candidate = ds + a.weight;
      auto it = dist.find(a.nextstate);
      if (it != dist.end() && it->second <= candidate) continue;
      if (a.nextstate == source && candidate < 0.0) {
        throw Error(ErrorCode::kDivergentEpsilonCycle,
                    "negative epsilon cycle through state " + std::to_string(source));
      }
      dist[a.nextstate] = candidate;
      if (++relaxations[a.nextstate] > limit) {
        throw Error(ErrorCode::kDivergentEpsilonCycle, "negative epsilon cycle");
      }
      queue.push_back(a.nextstate);
    }
  }
  return dist;
}

}  // namespace

Wfst RemoveEpsilons(const Wfst& fst) {
  for (StateId s = 0; s < static_cast<StateId>(fst.NumStates()); ++s) {
    for (const Arc& a : fst.Arcs(s)) {
      if (a.ilabel == kEpsilon && a.olabel != kEpsilon) {
        throw Error(ErrorCode::kUnsupportedArcKind,
                    "epsilon-input arc with output label " + std::to_string(a.olabel));
      }
    }
  }

  Wfst out;
  out.set_input_symbols(fst.input_symbols());
  out.set_output_symbols(fst.output_symbols());
  out.AddStates(fst.NumStates());
  if (fst.Start() == kNoState) return out;
  out.SetStart(fst.Start());

  for (StateId p = 0; p < static_cast<StateId>(fst.NumStates()); ++p) {
    // (ilabel, olabel, next) -> best cost, to fold parallel duplicates.
    std::map<std::tuple<Label, Label, StateId>, double> arcs;
    double final_cost = kInfiniteCost;
    for (const auto& [q, d] : EpsilonClosure(fst, p)) {
      if (fst.IsFinal(q)) final_cost = std::min(final_cost, d + fst.Final(q));
      for (const Arc& a : fst.Arcs(q)) {
        if (a.ilabel == kEpsilon) continue;
        auto key = std::make_tuple(a.ilabel, a.olabel, a.nextstate);
        auto [it, inserted] = arcs.emplace(key, d + a.weight);
        if (!inserted) it->second = std::min(it->second, d + a.weight);
      }
    }
    out.SetFinal(p, final_cost);
    for (const auto& [key, w] : arcs) {
      out.AddArc(p, {std::get<0>(key), std::get<1>(key), w, std::get<2>(key)});
    }
  }
  return Connect(out);
}

}  // namespace phonebias
