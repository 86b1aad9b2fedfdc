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

#include "fst/wfst.h"

#include <algorithm>
#include <string>
#include <tuple>

#include "base/error.h"

namespace phonebias {

StateId Wfst::AddState() {
  states_.emplace_back();
  return static_cast<StateId>(states_.size() - 1);
}

void Wfst::AddStates(size_t n) { states_.resize(states_.size() + n); }

void Wfst::CheckState(StateId s) const {
  if (!ValidState(s)) throw Error(ErrorCode::kInvalidArgument, "bad state id " + std::to_string(s));
}

void Wfst::SetStart(StateId state) {
  CheckState(state);
  start_ = state;
}

void Wfst::SetFinal(StateId state, double cost) {
  CheckState(state);
  states_[state].final = cost;
}

void Wfst::AddArc(StateId state, const Arc& arc) {
  CheckState(state);
  CheckState(arc.nextstate);
  auto& arcs = states_[state].arcs;
  if (arc.ilabel == kFailure && FailureArc(state) != nullptr) {
    throw Error(ErrorCode::kUnsupportedArcKind,
                "state " + std::to_string(state) + " already has a failure arc");
  }
  if (input_sorted_ && !arcs.empty()) {
    const Arc& last = arcs.back();
    if (std::tie(last.ilabel, last.olabel, last.nextstate) >
        std::tie(arc.ilabel, arc.olabel, arc.nextstate)) {
      input_sorted_ = false;
    }
  }
  arcs.push_back(arc);
}

std::vector<Arc>& Wfst::MutableArcs(StateId state) {
  CheckState(state);
  input_sorted_ = false;
  return states_[state].arcs;
}

size_t Wfst::NumArcs() const {
  size_t n = 0;
  for (const State& s : states_) n += s.arcs.size();
  return n;
}

void Wfst::SortArcsByInput() {
  for (State& s : states_) {
    std::stable_sort(s.arcs.begin(), s.arcs.end(), [](const Arc& a, const Arc& b) {
      return std::tie(a.ilabel, a.olabel, a.nextstate) < std::tie(b.ilabel, b.olabel, b.nextstate);
    });
  }
  input_sorted_ = true;
}

const Arc* Wfst::FindArc(StateId state, Label ilabel) const {
  const auto& arcs = states_[state].arcs;
  if (input_sorted_) {
    auto it = std::lower_bound(arcs.begin(), arcs.end(), ilabel,
                               [](const Arc& a, Label l) { return a.ilabel < l; });
    if (it != arcs.end() && it->ilabel == ilabel) return &*it;
    return nullptr;
  }
  for (const Arc& a : arcs) {
    if (a.ilabel == ilabel) return &a;
  }
  return nullptr;
}

const Arc* Wfst::FailureArc(StateId state) const { return FindArc(state, kFailure); }

bool Wfst::SameStructure(const Wfst& other) const {
  if (start_ != other.start_ || states_.size() != other.states_.size()) return false;
  for (size_t i = 0; i < states_.size(); ++i) {
    if (states_[i].final != other.states_[i].final) return false;
    if (states_[i].arcs != other.states_[i].arcs) return false;
  }
  return true;
}

}  // namespace phonebias
