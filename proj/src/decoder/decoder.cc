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

#include "decoder/decoder.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <tuple>

#include "base/error.h"
#include "fst/algorithms.h"
#include "tokenization/wordpiece.h"

namespace phonebias {

namespace {

constexpr double kTieTolerance = 1e-9;

bool Ranked(const Hypothesis& a, const Hypothesis& b, double lambda) {
  const double ta = a.Total(lambda), tb = b.Total(lambda);
  if (ta != tb) return ta < tb;
  return std::tie(a.out, a.inp) < std::tie(b.out, b.inp);
}

double LogSumExpCost(double a, double b) {
  const double lo = std::min(a, b), hi = std::max(a, b);
  if (hi == INFINITY) return lo;
  return lo - std::log1p(std::exp(lo - hi));
}

}  // namespace

void DecoderConfig::Validate() const {
  if (beam_size < 1) throw Error(ErrorCode::kInvalidArgument, "beam size must be >= 1");
  if (!(lambda >= 0.0)) throw Error(ErrorCode::kInvalidArgument, "lambda must be >= 0");
}

std::vector<Hypothesis> Recombine(std::vector<Hypothesis> beam, double lambda) {
  using Key = std::tuple<const std::vector<Label>*, StateId, StateId>;
  auto less = [](const Key& a, const Key& b) {
    if (std::get<1>(a) != std::get<1>(b)) return std::get<1>(a) < std::get<1>(b);
    if (std::get<2>(a) != std::get<2>(b)) return std::get<2>(a) < std::get<2>(b);
    return *std::get<0>(a) < *std::get<0>(b);
  };
  std::map<Key, std::vector<size_t>, decltype(less)> groups(less);
  for (size_t i = 0; i < beam.size(); ++i) {
    groups[{&beam[i].out, beam[i].g_state, beam[i].b_state}].push_back(i);
  }
  std::vector<Hypothesis> out;
  out.reserve(groups.size());
  for (auto& [key, members] : groups) {
    size_t best = members.front();
    double total = beam[best].Total(lambda);
    for (size_t k = 1; k < members.size(); ++k) {
      const Hypothesis& h = beam[members[k]];
      total = LogSumExpCost(total, h.Total(lambda));
      const double hc = h.Total(lambda), bc = beam[best].Total(lambda);
      if (hc < bc || (hc == bc && h.inp < beam[best].inp)) best = members[k];
    }
    Hypothesis merged = std::move(beam[best]);
    if (members.size() > 1) merged.model_cost = total - lambda * merged.bias_cost;
    out.push_back(std::move(merged));
  }
  // Keep input order stable for callers: sort by rank.
  std::sort(out.begin(), out.end(),
            [lambda](const Hypothesis& a, const Hypothesis& b) { return Ranked(a, b, lambda); });
  return out;
}

std::vector<std::string> AssembleTranscript(const std::vector<Label>& out, const SymbolTable& units) {
  std::vector<std::string> words;
  std::string current;
  auto flush = [&] {
    if (!current.empty()) words.push_back(std::move(current));
    current.clear();
  };
  for (Label l : out) {
    if (l == kWordBoundary || l == units.eow()) {
      flush();
      continue;
    }
    const std::string& piece = units.Symbol(l);
    if (IsWordStart(piece)) flush();
    current += StripWordStart(piece);
  }
  flush();
  return words;
}

DecodeResult Decode(const EmissionSequence& em, const DecodingGraph& graph,
                    const DecoderConfig& config) {
  config.Validate();
  const Wfst& g = graph.fst;
  const SymbolTable& units = *graph.units;
  for (const EmissionStep& step : em.steps) {
    if (step.size() != units.size()) {
      throw Error(ErrorCode::kAlphabetMismatch,
                  em.utt_id + ": emission width differs from the graph alphabet");
    }
  }
  const Wfst* bias = nullptr;
  if (config.bias != nullptr && config.lambda > 0.0) {
    bias = &config.bias->fst;
    if (bias->input_symbols() && !(*bias->input_symbols() == units)) {
      throw Error(ErrorCode::kAlphabetMismatch, "bias machine and graph use different alphabets");
    }
  }
  const double lambda = config.lambda;

  DecodeResult result;
  Hypothesis root;
  root.g_state = graph.hub;
  root.b_state = bias ? bias->Start() : kNoState;
  std::vector<Hypothesis> beam{root};
  std::vector<Hypothesis> next;

  for (const EmissionStep& step : em.steps) {
    next.clear();
    for (const Hypothesis& h : beam) {
      for (const Arc& arc : g.Arcs(h.g_state)) {
        if (arc.ilabel == kEpsilon) continue;
        const double logp = step[arc.ilabel];
        if (logp == -INFINITY) continue;
        Hypothesis e = h;
        e.model_cost -= logp;
        e.inp.push_back(arc.ilabel);
        if (arc.olabel != kEpsilon) e.out.push_back(arc.olabel);
        if (bias) {
          const FailureStep fs = StepWithFailure(*bias, h.b_state, arc.ilabel);
          e.b_state = fs.state;
          e.bias_cost += fs.cost;
        }
        e.g_state = arc.nextstate;
        if (!HasEpsilonArcs(g, arc.nextstate)) {
          next.push_back(std::move(e));
          continue;
        }
        // Eager epsilon consumption: a completed pronunciation yields all of
        // the word's pieces within this step.
        for (const Closure& c : EpsilonClosures(g, arc.nextstate)) {
          Hypothesis done = e;
          done.out.insert(done.out.end(), c.outputs.begin(), c.outputs.end());
          done.out.push_back(kWordBoundary);
          done.g_state = c.state;
          next.push_back(std::move(done));
        }
        // A pronunciation that is a prefix of another may also continue.
        const auto arcs = g.Arcs(arc.nextstate);
        if (arcs.back().ilabel != kEpsilon) next.push_back(std::move(e));
      }
    }
    beam = Recombine(std::move(next), lambda);
    if (beam.size() > config.beam_size) beam.resize(config.beam_size);
    for (const Hypothesis& h : beam) {
      ++result.states_checked;
      if (HasEpsilonArcs(g, h.g_state)) ++result.eager_violations;
    }
    if (beam.empty()) break;
  }

  std::vector<Hypothesis> finished;
  for (Hypothesis& h : beam) {
    if (h.g_state != graph.hub) {
      if (!config.finalize_partial) continue;
    }
    if (bias) {
      h.bias_cost += CancellationCost(*bias, h.b_state);
      h.b_state = bias->Start();
    }
    finished.push_back(std::move(h));
  }
  finished = Recombine(std::move(finished), lambda);
  if (finished.empty()) {
    throw Error(ErrorCode::kNoCompleteHypothesis, em.utt_id + ": no hypothesis ends at a word boundary");
  }
  // Near-ties go to the smallest output, then input.
  const double floor = finished.front().Total(lambda);
  const Hypothesis* best = &finished.front();
  for (const Hypothesis& h : finished) {
    if (h.Total(lambda) > floor + kTieTolerance) break;
    if (std::tie(h.out, h.inp) < std::tie(best->out, best->inp)) best = &h;
  }
  result.best = *best;
  result.cost = best->Total(lambda);
  result.truncated = best->g_state != graph.hub;
  result.transcript = AssembleTranscript(best->out, units);
  return result;
}

}  // namespace phonebias
