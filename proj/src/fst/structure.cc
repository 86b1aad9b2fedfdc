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
#include <set>
#include <utility>

#include "base/error.h"
#include "fst/algorithms.h"

namespace phonebias {

namespace {

// Post-order DFS over all states; returns false on a back edge.
bool PostOrder(const Wfst& fst, std::vector<StateId>* order) {
  enum Color : uint8_t { kWhite, kGrey, kBlack };
  std::vector<Color> color(fst.NumStates(), kWhite);
  std::vector<std::pair<StateId, size_t>> stack;
  for (StateId root = 0; root < static_cast<StateId>(fst.NumStates()); ++root) {
    if (color[root] != kWhite) continue;
    stack.emplace_back(root, 0);
    color[root] = kGrey;
    while (!stack.empty()) {
      auto& [s, next_arc] = stack.back();
      auto arcs = fst.Arcs(s);
      if (next_arc < arcs.size()) {
        const StateId t = arcs[next_arc++].nextstate;
        if (color[t] == kGrey) return false;
        if (color[t] == kWhite) {
          color[t] = kGrey;
          stack.emplace_back(t, 0);
        }
      } else {
        color[s] = kBlack;
        order->push_back(s);
        stack.pop_back();
      }
    }
  }
  return true;
}

}  // namespace

bool IsAcyclic(const Wfst& fst) {
  std::vector<StateId> order;
  return PostOrder(fst, &order);
}

std::vector<StateId> TopologicalOrder(const Wfst& fst) {
  std::vector<StateId> order;
  if (!PostOrder(fst, &order)) throw Error(ErrorCode::kNotAcyclic, "machine has a cycle");
  std::reverse(order.begin(), order.end());
  return order;
}

bool IsInputDeterministic(const Wfst& fst) {
  for (StateId s = 0; s < static_cast<StateId>(fst.NumStates()); ++s) {
    std::set<Label> seen;
    for (const Arc& a : fst.Arcs(s)) {
      if (a.arc_class() != ArcClass::kNormal) continue;
      if (!seen.insert(a.ilabel).second) return false;
    }
  }
  return true;
}

bool HasFailureArcs(const Wfst& fst) {
  for (StateId s = 0; s < static_cast<StateId>(fst.NumStates()); ++s) {
    if (fst.FailureArc(s) != nullptr) return true;
  }
  return false;
}

Wfst Connect(const Wfst& fst) {
  const size_t n = fst.NumStates();
  Wfst out;
  out.set_input_symbols(fst.input_symbols());
  out.set_output_symbols(fst.output_symbols());
  if (fst.Start() == kNoState) return out;

  std::vector<bool> accessible(n, false), coaccessible(n, false);
  std::vector<StateId> stack{fst.Start()};
  accessible[fst.Start()] = true;
  std::vector<std::vector<StateId>> reverse(n);
  while (!stack.empty()) {
    StateId s = stack.back();
    stack.pop_back();
    for (const Arc& a : fst.Arcs(s)) {
      if (!accessible[a.nextstate]) {
        accessible[a.nextstate] = true;
        stack.push_back(a.nextstate);
      }
    }
  }
  for (StateId s = 0; s < static_cast<StateId>(n); ++s) {
    for (const Arc& a : fst.Arcs(s)) reverse[a.nextstate].push_back(s);
    if (fst.IsFinal(s)) {
      coaccessible[s] = true;
      stack.push_back(s);
    }
  }
  while (!stack.empty()) {
    StateId s = stack.back();
    stack.pop_back();
    for (StateId p : reverse[s]) {
      if (!coaccessible[p]) {
        coaccessible[p] = true;
        stack.push_back(p);
      }
    }
  }

  std::vector<StateId> remap(n, kNoState);
  for (StateId s = 0; s < static_cast<StateId>(n); ++s) {
    if ((accessible[s] && coaccessible[s]) || s == fst.Start()) remap[s] = out.AddState();
  }
  out.SetStart(remap[fst.Start()]);
  for (StateId s = 0; s < static_cast<StateId>(n); ++s) {
    if (remap[s] == kNoState) continue;
    out.SetFinal(remap[s], fst.Final(s));
    for (const Arc& a : fst.Arcs(s)) {
      if (remap[a.nextstate] == kNoState || !coaccessible[a.nextstate]) continue;
      Arc b = a;
      b.nextstate = remap[a.nextstate];
      out.AddArc(remap[s], b);
    }
  }
  return out;
}

Wfst ProjectInput(const Wfst& fst) {
  Wfst out = fst;
  for (StateId s = 0; s < static_cast<StateId>(out.NumStates()); ++s) {
    for (Arc& a : out.MutableArcs(s)) a.olabel = a.ilabel;
  }
  if (fst.input_sorted()) out.SortArcsByInput();
  out.set_output_symbols(fst.input_symbols());
  return out;
}

Wfst IdentityAcceptor(std::span<const Label> labels) {
  Wfst out;
  const StateId s = out.AddState();
  out.SetStart(s);
  out.SetFinal(s, 0.0);
  for (Label l : labels) out.AddArc(s, {l, l, 0.0, s});
  return out;
}

}  // namespace phonebias
