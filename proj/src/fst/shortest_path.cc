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
#include <queue>
#include <tuple>

#include "base/error.h"
#include "fst/algorithms.h"

namespace phonebias {

namespace {

bool Better(const PathResult& a, const PathResult& b) {
  return std::tie(a.cost, a.output, a.input) < std::tie(b.cost, b.output, b.input);
}

void Prepend(const Arc& arc, const PathResult& suffix, PathResult* path) {
  path->cost = arc.weight + suffix.cost;
  path->input.clear();
  path->output.clear();
  if (arc.ilabel != kEpsilon) path->input.push_back(arc.ilabel);
  if (arc.olabel != kEpsilon) path->output.push_back(arc.olabel);
  path->input.insert(path->input.end(), suffix.input.begin(), suffix.input.end());
  path->output.insert(path->output.end(), suffix.output.begin(), suffix.output.end());
}

// Exact: the best completion of every state is computed from the best
// completions of its successors, and prefixing preserves the order.
PathResult AcyclicShortestPath(const Wfst& fst) {
  std::vector<StateId> order = TopologicalOrder(fst);
  std::vector<PathResult> best(fst.NumStates());
  PathResult candidate;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const StateId s = *it;
    PathResult& b = best[s];
    if (fst.IsFinal(s)) b.cost = fst.Final(s);
    for (const Arc& a : fst.Arcs(s)) {
      if (best[a.nextstate].cost == kInfiniteCost) continue;
      Prepend(a, best[a.nextstate], &candidate);
      if (b.cost == kInfiniteCost || Better(candidate, b)) b = candidate;
    }
  }
  return best[fst.Start()];
}

// Backward Dijkstra over non-negative costs; ties broken on the settled
// successor's path.
PathResult CyclicShortestPath(const Wfst& fst) {
  const size_t n = fst.NumStates();
  std::vector<std::vector<std::pair<StateId, const Arc*>>> incoming(n);
  for (StateId s = 0; s < static_cast<StateId>(n); ++s) {
    for (const Arc& a : fst.Arcs(s)) {
      if (a.weight < 0.0) {
        throw Error(ErrorCode::kInvalidArgument, "shortest path on a cyclic machine needs costs >= 0");
      }
      incoming[a.nextstate].emplace_back(s, &a);
    }
  }
  std::vector<PathResult> best(n);
  std::vector<bool> settled(n, false);
  using Entry = std::pair<double, StateId>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  for (StateId s = 0; s < static_cast<StateId>(n); ++s) {
    if (!fst.IsFinal(s)) continue;
    best[s].cost = fst.Final(s);
    heap.emplace(best[s].cost, s);
  }
  PathResult candidate;
  while (!heap.empty()) {
    const auto [d, s] = heap.top();
    heap.pop();
    if (settled[s] || d != best[s].cost) continue;
    settled[s] = true;
    for (const auto& [p, arc] : incoming[s]) {
      if (settled[p]) continue;
      Prepend(*arc, best[s], &candidate);
      if (best[p].cost == kInfiniteCost || Better(candidate, best[p])) {
        best[p] = candidate;
        heap.emplace(best[p].cost, p);
      }
    }
  }
  return best[fst.Start()];
}

}  // namespace

PathResult ShortestPath(const Wfst& fst) {
  if (fst.Start() == kNoState) throw Error(ErrorCode::kEmptyLanguage, "machine has no start state");
  PathResult result = IsAcyclic(fst) ? AcyclicShortestPath(fst) : CyclicShortestPath(fst);
  if (result.cost == kInfiniteCost) throw Error(ErrorCode::kEmptyLanguage, "no accepting path");
  return result;
}

}  // namespace phonebias
