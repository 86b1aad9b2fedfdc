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

#include "base/error.h"
#include "fst/algorithms.h"

namespace phonebias {

namespace {

struct Enumerator {
  const Wfst& fst;
  size_t max_paths;
  PathSet paths;
  PathResult current{{}, {}, 0.0};

  void Visit(StateId s) {
    if (fst.IsFinal(s)) {
      if (paths.size() == max_paths) {
        throw Error(ErrorCode::kTooManyPaths,
                    "more than " + std::to_string(max_paths) + " accepting paths");
      }
      paths.push_back(current);
      paths.back().cost += fst.Final(s);
    }
    for (const Arc& a : fst.Arcs(s)) {
      const double saved = current.cost;
      current.cost += a.weight;
      if (a.ilabel != kEpsilon) current.input.push_back(a.ilabel);
      if (a.olabel != kEpsilon) current.output.push_back(a.olabel);
      Visit(a.nextstate);
      if (a.ilabel != kEpsilon) current.input.pop_back();
      if (a.olabel != kEpsilon) current.output.pop_back();
      current.cost = saved;
    }
  }
};

}  // namespace

PathSet EnumeratePaths(const Wfst& fst, size_t max_paths) {
  if (!IsAcyclic(fst)) throw Error(ErrorCode::kNotAcyclic, "cannot enumerate paths of a cyclic machine");
  Enumerator e{fst, max_paths, {}};
  if (fst.Start() != kNoState) e.Visit(fst.Start());
  return std::move(e.paths);
}

FailureStep StepWithFailure(const Wfst& fst, StateId state, Label label) {
  if (label == kEpsilon || label == kFailure) {
    throw Error(ErrorCode::kInvalidArgument, "cannot step on epsilon or failure labels");
  }
  if (!fst.ValidState(state)) {
    throw Error(ErrorCode::kInvalidArgument, "no state " + std::to_string(state));
  }
  FailureStep step{state, 0.0};
  // Each failure hop must visit a new state; more hops than states is a loop.
  for (size_t hops = 0; hops <= fst.NumStates(); ++hops) {
    if (const Arc* arc = fst.FindArc(step.state, label)) {
      step.cost += arc->weight;
      step.state = arc->nextstate;
      return step;
    }
    const Arc* fail = fst.FailureArc(step.state);
    if (fail == nullptr) {
      if (step.state == fst.Start()) return step;
      throw Error(ErrorCode::kNoTransition, "no arc for label " + std::to_string(label) +
                                                " at state " + std::to_string(step.state));
    }
    step.cost += fail->weight;
    step.state = fail->nextstate;
  }
  throw Error(ErrorCode::kNoTransition, "failure arcs form a loop");
}

}  // namespace phonebias
