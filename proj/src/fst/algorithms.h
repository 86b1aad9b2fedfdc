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

#ifndef PHONEBIAS_FST_ALGORITHMS_H_
#define PHONEBIAS_FST_ALGORITHMS_H_

#include <cstddef>
#include <span>
#include <vector>

#include "fst/wfst.h"

namespace phonebias {

// ---- structure ------------------------------------------------------------

bool IsAcyclic(const Wfst& fst);

// States in topological order. Throws kNotAcyclic.
std::vector<StateId> TopologicalOrder(const Wfst& fst);

// No state has two arcs sharing an ilabel, epsilon and failure excluded.
bool IsInputDeterministic(const Wfst& fst);

bool HasFailureArcs(const Wfst& fst);

// Keeps states that are reachable from the start and can reach a final
// state (the start is always kept). State order is preserved.
Wfst Connect(const Wfst& fst);

// Output labels replaced by input labels.
Wfst ProjectInput(const Wfst& fst);

// One-state machine accepting any string over `labels`, at cost 0.
Wfst IdentityAcceptor(std::span<const Label> labels);

// ---- algorithms -----------------------------------------------------------

// Transducer composition with a sequencing epsilon filter. Throws
// kAlphabetMismatch when both sides carry differing symbol tables at the
// junction, kUnsupportedArcKind when either side has failure arcs.
Wfst Compose(const Wfst& a, const Wfst& b);

// Removes epsilon:epsilon arcs. Throws kDivergentEpsilonCycle on a
// negative-cost epsilon cycle and kUnsupportedArcKind on an epsilon-input
// arc with a non-epsilon output.
Wfst RemoveEpsilons(const Wfst& fst);

// Weighted subset construction with residual costs and delayed outputs,
// for acyclic epsilon-free acceptors and functional transducers. Pending
// output at a final subset is flushed on an epsilon-input chain. Throws
// kNotAcyclic, kNotFunctional, kUnsupportedArcKind (epsilon input).
Wfst DeterminizeAcyclic(const Wfst& fst);

// Merges states with identical signatures (final cost and arcs into
// already-merged classes), bottom-up by height. Throws kNotAcyclic,
// kNotDeterministic.
Wfst MinimizeAcyclic(const Wfst& fst);

struct PathResult {
  std::vector<Label> input;   // epsilons removed
  std::vector<Label> output;  // epsilons removed
  double cost = kInfiniteCost;
};

// Minimum-cost accepting path; ties go to the lexicographically smallest
// output sequence, then input sequence. Exact tie-breaking is guaranteed
// for acyclic machines; cyclic machines need non-negative costs.
// Throws kEmptyLanguage.
PathResult ShortestPath(const Wfst& fst);

using PathSet = std::vector<PathResult>;

// Every accepting path by depth-first search. Throws kNotAcyclic, and
// kTooManyPaths when more than `max_paths` exist.
PathSet EnumeratePaths(const Wfst& fst, size_t max_paths);

struct FailureStep {
  StateId state = kNoState;
  double cost = 0.0;
};

// Consumes `label` from `state`: a matching arc is taken directly;
// otherwise failure arcs are followed (adding their costs, consuming
// nothing) and the label retried at each target. With no match and no
// failure arc the start state absorbs the label at no cost; any other
// state throws kNoTransition.
FailureStep StepWithFailure(const Wfst& fst, StateId state, Label label);

}  // namespace phonebias

#endif  // PHONEBIAS_FST_ALGORITHMS_H_
