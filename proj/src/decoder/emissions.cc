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

#include "decoder/emissions.h"

#include <cmath>
#include <limits>

#include "base/error.h"
#include "base/rng.h"
#include "base/text.h"
#include "json.hpp"

namespace phonebias {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

}  // namespace

void ValidateEmissions(const EmissionSequence& em, double tolerance) {
  for (size_t t = 0; t < em.steps.size(); ++t) {
    double total = 0.0;
    for (double lp : em.steps[t]) {
      if (std::isnan(lp) || lp > tolerance) {
        throw Error(ErrorCode::kFormat, em.utt_id + ": step " + std::to_string(t) +
                                            " has a log-probability above 0");
      }
      total += std::exp(lp);
    }
    if (std::abs(total - 1.0) > tolerance) {
      throw Error(ErrorCode::kFormat, em.utt_id + ": step " + std::to_string(t) + " sums to " +
                                          FormatDouble(total));
    }
  }
}

std::string FormatEmissionsJson(const EmissionSequence& em, const SymbolTable& units) {
  nlohmann::ordered_json steps = nlohmann::ordered_json::array();
  for (const EmissionStep& step : em.steps) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (size_t id = 0; id < step.size(); ++id) {
      if (step[id] != kNegInf) obj[units.Symbol(static_cast<Label>(id))] = step[id];
    }
    steps.push_back(std::move(obj));
  }
  nlohmann::ordered_json doc;
  doc["utt_id"] = em.utt_id;
  doc["steps"] = std::move(steps);
  return doc.dump();
}

EmissionSequence ParseEmissionsJson(const std::string& line, const SymbolTable& units) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kFormat, std::string("bad emissions JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("utt_id") || !doc["utt_id"].is_string() ||
      !doc.contains("steps") || !doc["steps"].is_array()) {
    throw Error(ErrorCode::kFormat, "emissions object needs \"utt_id\" and \"steps\"");
  }
  EmissionSequence em;
  em.utt_id = doc["utt_id"].get<std::string>();
  for (const auto& step : doc["steps"]) {
    if (!step.is_object()) throw Error(ErrorCode::kFormat, em.utt_id + ": step is not an object");
    EmissionStep dense(units.size(), kNegInf);
    for (const auto& [sym, value] : step.items()) {
      const auto id = units.Find(sym);
      if (!id) throw Error(ErrorCode::kAlphabetMismatch, em.utt_id + ": unknown symbol " + sym);
      if (!value.is_number()) throw Error(ErrorCode::kFormat, em.utt_id + ": non-numeric score");
      dense[*id] = value.get<double>();
    }
    em.steps.push_back(std::move(dense));
  }
  ValidateEmissions(em);
  return em;
}

std::vector<EmissionSequence> LoadEmissions(const std::string& path, const SymbolTable& units) {
  std::vector<EmissionSequence> out;
  for (const Line& line : ReadLines(path)) {
    try {
      out.push_back(ParseEmissionsJson(line.text, units));
    } catch (const Error& e) {
      throw Error(e.code(), Where(path, line) + e.what());
    }
  }
  return out;
}

void SaveEmissions(const std::vector<EmissionSequence>& ems, const SymbolTable& units,
                   const std::string& path) {
  std::string text;
  for (const EmissionSequence& em : ems) text += FormatEmissionsJson(em, units) + '\n';
  WriteFile(path, text);
}

std::vector<Label> ReferenceSymbols(const std::vector<std::string>& transcript,
                                    const std::set<std::string>& foreign_words,
                                    const ExpansionContext& ctx) {
  std::vector<Label> ref;
  for (size_t i = 0; i < transcript.size(); ++i) {
    if (i > 0) ref.push_back(ctx.units->eow());
    const BiasUnit unit =
        foreign_words.count(transcript[i]) ? BiasUnit::kPhoneme : BiasUnit::kWordpiece;
    std::vector<Label> word = ExpandWord(transcript[i], unit, ctx);
    ref.insert(ref.end(), word.begin(), word.end());
  }
  return ref;
}

EmissionSequence SynthesizeSteps(const std::string& utt_id, const std::vector<Label>& reference,
                                 const SymbolTable& units, const SyntheticConfig& config,
                                 std::vector<Label>* observed) {
  if (!(config.noise >= 0.0 && config.noise < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "noise must be in [0, 1)");
  }
  const std::vector<Label> phonemes = units.LabelsOfKind(SymbolKind::kPhoneme);
  const std::vector<Label> pieces = units.LabelsOfKind(SymbolKind::kWordpiece);
  Rng rng(config.seed);
  EmissionSequence em{utt_id, {}};
  if (observed) observed->clear();
  for (Label ref : reference) {
    const SymbolKind kind = units.Kind(ref);
    const std::vector<Label>* pool = nullptr;
    if (kind == SymbolKind::kPhoneme) pool = &phonemes;
    if (kind == SymbolKind::kWordpiece) pool = &pieces;
    EmissionStep step(units.size(), kNegInf);
    if (pool == nullptr || pool->size() < 2) {
      step[ref] = 0.0;
      em.steps.push_back(std::move(step));
      if (observed) observed->push_back(ref);
      continue;
    }
    // Two draws per step, always, so the stream does not depend on noise.
    const bool corrupt = UniformDouble(rng) < config.noise;
    size_t pick = UniformIndex(rng, pool->size() - 1);
    Label seen = ref;
    if (corrupt) {
      for (Label l : *pool) {
        if (l == ref) continue;
        if (pick-- == 0) {
          seen = l;
          break;
        }
      }
    }
    const double rest = config.noise / static_cast<double>(pool->size() - 1);
    for (Label l : *pool) step[l] = l == seen ? 0.0 + std::log1p(-config.noise) : std::log(rest);
    em.steps.push_back(std::move(step));
    if (observed) observed->push_back(seen);
  }
  return em;
}

EmissionSequence GenerateSyntheticEmissions(const std::string& utt_id,
                                            const std::vector<std::string>& transcript,
                                            const std::set<std::string>& foreign_words,
                                            const ExpansionContext& ctx,
                                            const SyntheticConfig& config) {
  return SynthesizeSteps(utt_id, ReferenceSymbols(transcript, foreign_words, ctx), *ctx.units,
                         config);
}

}  // namespace phonebias
