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

#ifndef PHONEBIAS_FST_WFST_H_
#define PHONEBIAS_FST_WFST_H_

#include <cstdint>
#include <limits>
#include <memory>
#include <span>
#include <vector>

#include "lexicon/symbol_table.h"

namespace phonebias {

using StateId = int32_t;

constexpr StateId kNoState = -1;

// Costs are negative natural-log probabilities; lower is better. Infinity
// stands for probability zero (e.g. "not final").
constexpr double kInfiniteCost = std::numeric_limits<double>::infinity();

enum class ArcClass { kNormal, kEpsilon, kFailure };

struct Arc {
  Label ilabel = kEpsilon;
  Label olabel = kEpsilon;
  double weight = 0.0;
  StateId nextstate = kNoState;

  ArcClass arc_class() const {
    if (ilabel == kEpsilon) return ArcClass::kEpsilon;
    if (ilabel == kFailure) return ArcClass::kFailure;
    return ArcClass::kNormal;
  }

  bool operator==(const Arc&) const = default;
};

// Mutable vector-backed weighted transducer over the (min, +) cost
// semiring. Path cost is the sum of arc costs plus the final cost.
class Wfst {
 public:
  StateId AddState();
  void AddStates(size_t n);

  void SetStart(StateId state);
  StateId Start() const { return start_; }

  // kInfiniteCost makes the state non-final.
  void SetFinal(StateId state, double cost);
  double Final(StateId state) const { return states_[state].final; }
  bool IsFinal(StateId state) const { return states_[state].final != kInfiniteCost; }

  // At most one failure arc may leave a state.
  void AddArc(StateId state, const Arc& arc);

  std::span<const Arc> Arcs(StateId state) const { return states_[state].arcs; }
  // Invalidates the input-sorted property.
  std::vector<Arc>& MutableArcs(StateId state);

  size_t NumStates() const { return states_.size(); }
  size_t NumArcs() const;
  bool ValidState(StateId s) const { return s >= 0 && static_cast<size_t>(s) < states_.size(); }

  // Sorts each state's arcs by (ilabel, olabel, nextstate).
  void SortArcsByInput();
  bool input_sorted() const { return input_sorted_; }

  // First arc with the given ilabel, binary search when sorted.
  const Arc* FindArc(StateId state, Label ilabel) const;
  const Arc* FailureArc(StateId state) const;

  const std::shared_ptr<const SymbolTable>& input_symbols() const { return isyms_; }
  const std::shared_ptr<const SymbolTable>& output_symbols() const { return osyms_; }
  void set_input_symbols(std::shared_ptr<const SymbolTable> syms) { isyms_ = std::move(syms); }
  void set_output_symbols(std::shared_ptr<const SymbolTable> syms) { osyms_ = std::move(syms); }

  // Structural equality (states, arcs in order, finals, start).
  bool SameStructure(const Wfst& other) const;

 private:
  struct State {
    std::vector<Arc> arcs;
    double final = kInfiniteCost;
  };

  void CheckState(StateId s) const;

  std::vector<State> states_;
  StateId start_ = kNoState;
  bool input_sorted_ = true;
  std::shared_ptr<const SymbolTable> isyms_;
  std::shared_ptr<const SymbolTable> osyms_;
};

}  // namespace phonebias

#endif  // PHONEBIAS_FST_WFST_H_
