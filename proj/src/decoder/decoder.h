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

#ifndef PHONEBIAS_DECODER_DECODER_H_
#define PHONEBIAS_DECODER_DECODER_H_

#include <string>
#include <vector>

#include "bias/contextual_fst.h"
#include "decoder/decoding_graph.h"
#include "decoder/emissions.h"

namespace phonebias {

// Marks a word completed through the pronunciation tree inside an output
// sequence. Never a symbol id.
constexpr Label kWordBoundary = -1;

struct Hypothesis {
  std::vector<Label> out;  // wordpieces, <eow>, kWordBoundary
  std::vector<Label> inp;
  StateId g_state = kNoState;
  StateId b_state = kNoState;
  double model_cost = 0.0;
  double bias_cost = 0.0;

  double Total(double lambda) const { return model_cost + lambda * bias_cost; }
};

struct DecoderConfig {
  size_t beam_size = 8;
  double lambda = 1.0;
  const ContextualFst* bias = nullptr;
  bool finalize_partial = false;
  // Throws kInvalidArgument.
  void Validate() const;
};

struct DecodeResult {
  std::vector<std::string> transcript;
  double cost = 0.0;
  Hypothesis best;
  bool truncated = false;
  // Beam entries inspected, and those resting on a state with pending
  // epsilon-input arcs.
  size_t states_checked = 0;
  size_t eager_violations = 0;
};

// Groups by (out, g_state, b_state); each group becomes its cheapest
// member (ties: smallest inp) carrying the group's log-sum-exp total. The
// member's bias cost is kept and its model cost absorbs the difference.
std::vector<Hypothesis> Recombine(std::vector<Hypothesis> beam, double lambda);

// Words of an output sequence: split at <eow>, at tree completions and
// before word-initial pieces; markers are stripped and empty words dropped.
std::vector<std::string> AssembleTranscript(const std::vector<Label>& out, const SymbolTable& units);

// Throws kNoCompleteHypothesis, kAlphabetMismatch.
DecodeResult Decode(const EmissionSequence& em, const DecodingGraph& graph,
                    const DecoderConfig& config);

}  // namespace phonebias

#endif  // PHONEBIAS_DECODER_DECODER_H_
