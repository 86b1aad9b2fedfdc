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

struct SignatureArc {
  Label ilabel;
  Label olabel;
  double weight;
  int32_t target;  // class id

  auto Key() const { return std::tie(ilabel, olabel, weight, target); }
  bool operator<(const SignatureArc& o) const { return Key() < o.Key(); }
};

using Signature = std::pair<double, std::vector<SignatureArc>>;

}  // namespace

Wfst MinimizeAcyclic(const Wfst& input) {
  if (!IsAcyclic(input)) throw Error(ErrorCode::kNotAcyclic, "minimization input has a cycle");
  if (!IsInputDeterministic(input)) {
    throw Error(ErrorCode::kNotDeterministic, "minimization input is not input-deterministic");
  }
  const Wfst fst = Connect(input);
  const StateId n = static_cast<StateId>(fst.NumStates());
  Wfst out;
  out.set_input_symbols(fst.input_symbols());
  out.set_output_symbols(fst.output_symbols());
  if (fst.Start() == kNoState) return out;

  // Reverse topological order visits every state after all its successors.
  std::vector<StateId> order = TopologicalOrder(fst);
  std::reverse(order.begin(), order.end());

  std::vector<int32_t> cls(n, -1);
  std::map<Signature, int32_t> classes;
  std::vector<StateId> representative;
  for (StateId s : order) {
    Signature sig{fst.Final(s), {}};
    for (const Arc& a : fst.Arcs(s)) {
      sig.second.push_back({a.ilabel, a.olabel, a.weight, cls[a.nextstate]});
    }
    std::sort(sig.second.begin(), sig.second.end());
    auto [it, inserted] = classes.emplace(std::move(sig), static_cast<int32_t>(representative.size()));
    if (inserted) representative.push_back(s);
    cls[s] = it->second;
  }

  // Number output states breadth-first from the start.
  std::vector<StateId> id(representative.size(), kNoState);
  std::deque<int32_t> queue;
  auto state_of = [&](int32_t c) {
    if (id[c] == kNoState) {
      id[c] = out.AddState();
      queue.push_back(c);
    }
    return id[c];
  };
  out.SetStart(state_of(cls[fst.Start()]));
  while (!queue.empty()) {
    const int32_t c = queue.front();
    queue.pop_front();
    const StateId rep = representative[c];
    const StateId src = id[c];
    out.SetFinal(src, fst.Final(rep));
    for (const Arc& a : fst.Arcs(rep)) {
      out.AddArc(src, {a.ilabel, a.olabel, a.weight, state_of(cls[a.nextstate])});
    }
  }
  return out;
}

}  // namespace phonebias
