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

// One element of a weighted subset: a source state reached with a residual
// cost (relative to the subset's best) and output not yet emitted.
struct Element {
  StateId state;
  std::vector<Label> pending;
  double residual;

  bool operator<(const Element& o) const {
    return std::tie(state, pending, residual) < std::tie(o.state, o.pending, o.residual);
  }
  bool operator==(const Element& o) const = default;
};

using Subset = std::vector<Element>;

// Keeps the cheapest element per (state, pending) and sorts.
Subset Canonical(std::vector<Element> elements) {
  std::map<std::pair<StateId, std::vector<Label>>, double> best;
  for (Element& e : elements) {
    auto key = std::make_pair(e.state, std::move(e.pending));
    auto [it, inserted] = best.emplace(std::move(key), e.residual);
    if (!inserted) it->second = std::min(it->second, e.residual);
  }
  Subset out;
  out.reserve(best.size());
  for (auto& [key, w] : best) out.push_back({key.first, key.second, w});
  return out;
}

}  // namespace

Wfst DeterminizeAcyclic(const Wfst& fst) {
  TopologicalOrder(fst);  // throws kNotAcyclic
  for (StateId s = 0; s < static_cast<StateId>(fst.NumStates()); ++s) {
    for (const Arc& a : fst.Arcs(s)) {
      if (a.ilabel == kEpsilon) {
        throw Error(ErrorCode::kUnsupportedArcKind, "determinization input has epsilon-input arcs");
      }
    }
  }

  Wfst out;
  out.set_input_symbols(fst.input_symbols());
  out.set_output_symbols(fst.output_symbols());
  if (fst.Start() == kNoState) return out;

  std::map<Subset, StateId> ids;
  std::deque<std::pair<Subset, StateId>> queue;
  auto state_of = [&](Subset subset) {
    auto it = ids.find(subset);
    if (it != ids.end()) return it->second;
    const StateId id = out.AddState();
    ids.emplace(subset, id);
    queue.emplace_back(std::move(subset), id);
    return id;
  };

  out.SetStart(state_of({{fst.Start(), {}, 0.0}}));
  while (!queue.empty()) {
    auto [subset, src] = std::move(queue.front());
    queue.pop_front();

    // Final weight, or a flush chain when output is still pending.
    const std::vector<Label>* final_output = nullptr;
    double final_cost = kInfiniteCost;
    for (const Element& e : subset) {
      if (!fst.IsFinal(e.state)) continue;
      if (final_output != nullptr && *final_output != e.pending) {
        throw Error(ErrorCode::kNotFunctional, "one input string has two different outputs");
      }
      final_output = &e.pending;
      final_cost = std::min(final_cost, e.residual + fst.Final(e.state));
    }
    if (final_output != nullptr) {
      if (final_output->empty()) {
        out.SetFinal(src, final_cost);
      } else {
        StateId prev = src;
        double w = final_cost;
        for (Label l : *final_output) {
          const StateId next = out.AddState();
          out.AddArc(prev, {kEpsilon, l, w, next});
          w = 0.0;
          prev = next;
        }
        out.SetFinal(prev, 0.0);
      }
    }

    std::map<Label, std::vector<Element>> by_label;
    for (const Element& e : subset) {
      for (const Arc& a : fst.Arcs(e.state)) {
        Element next{a.nextstate, e.pending, e.residual + a.weight};
        if (a.olabel != kEpsilon) next.pending.push_back(a.olabel);
        by_label[a.ilabel].push_back(std::move(next));
      }
    }
    for (auto& [label, elements] : by_label) {
      double best = kInfiniteCost;
      for (const Element& e : elements) best = std::min(best, e.residual);
      // Emit the first symbol of the common pending prefix, if any.
      Label emit = kEpsilon;
      const std::vector<Label>& first = elements.front().pending;
      if (!first.empty() && std::all_of(elements.begin(), elements.end(), [&](const Element& e) {
            return !e.pending.empty() && e.pending.front() == first.front();
          })) {
        emit = first.front();
      }
      for (Element& e : elements) {
        e.residual -= best;
        if (emit != kEpsilon) e.pending.erase(e.pending.begin());
      }
      const StateId dst = state_of(Canonical(std::move(elements)));
      out.AddArc(src, {label, emit, best, dst});
    }
  }
  return out;
}

}  // namespace phonebias
