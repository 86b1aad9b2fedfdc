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
#include <array>
#include <deque>
#include <map>

#include "base/error.h"
#include "fst/algorithms.h"

namespace phonebias {

namespace {

// Filter state: 0 while the left machine may still take output-epsilon
// moves, 1 once the right machine has taken an input-epsilon move. This
// admits exactly one interleaving of epsilon moves between two matches.
using Triple = std::array<int32_t, 3>;

void CheckNoFailure(const Wfst& fst, const char* side) {
  if (HasFailureArcs(fst)) {
    throw Error(ErrorCode::kUnsupportedArcKind,
                std::string("failure arcs in ") + side + " operand of composition");
  }
}

}  // namespace

Wfst Compose(const Wfst& a, const Wfst& b) {
  if (a.output_symbols() && b.input_symbols() && !(*a.output_symbols() == *b.input_symbols())) {
    throw Error(ErrorCode::kAlphabetMismatch,
                "output alphabet of the left operand differs from input alphabet of the right");
  }
  CheckNoFailure(a, "left");
  CheckNoFailure(b, "right");

  Wfst out;
  out.set_input_symbols(a.input_symbols());
  out.set_output_symbols(b.output_symbols());
  if (a.Start() == kNoState || b.Start() == kNoState) {
    out.SetStart(out.AddState());
    return out;
  }

  // Right-hand arcs grouped by input label, per state.
  std::vector<std::multimap<Label, const Arc*>> b_by_input(b.NumStates());
  for (StateId s = 0; s < static_cast<StateId>(b.NumStates()); ++s) {
    for (const Arc& arc : b.Arcs(s)) b_by_input[s].emplace(arc.ilabel, &arc);
  }

  std::map<Triple, StateId> ids;
  std::deque<Triple> queue;
  auto state_of = [&](const Triple& t) {
    auto [it, inserted] = ids.emplace(t, kNoState);
    if (inserted) {
      it->second = out.AddState();
      queue.push_back(t);
    }
    return it->second;
  };

  out.SetStart(state_of({a.Start(), b.Start(), 0}));
  while (!queue.empty()) {
    const Triple t = queue.front();
    queue.pop_front();
    const StateId src = ids.at(t);
    const auto [sa, sb, filter] = t;
    if (a.IsFinal(sa) && b.IsFinal(sb)) out.SetFinal(src, a.Final(sa) + b.Final(sb));

    for (const Arc& ea : a.Arcs(sa)) {
      if (ea.olabel == kEpsilon) {
        if (filter != 0) continue;
        const StateId dst = state_of({ea.nextstate, sb, 0});
        out.AddArc(src, {ea.ilabel, kEpsilon, ea.weight, dst});
        continue;
      }
      auto [lo, hi] = b_by_input[sb].equal_range(ea.olabel);
      for (auto it = lo; it != hi; ++it) {
        const Arc& eb = *it->second;
        const StateId dst = state_of({ea.nextstate, eb.nextstate, 0});
        out.AddArc(src, {ea.ilabel, eb.olabel, ea.weight + eb.weight, dst});
      }
    }
    auto [lo, hi] = b_by_input[sb].equal_range(kEpsilon);
    for (auto it = lo; it != hi; ++it) {
      const Arc& eb = *it->second;
      const StateId dst = state_of({sa, eb.nextstate, 1});
      out.AddArc(src, {kEpsilon, eb.olabel, eb.weight, dst});
    }
  }
  return Connect(out);
}

}  // namespace phonebias
