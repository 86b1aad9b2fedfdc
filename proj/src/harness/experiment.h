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

#ifndef PHONEBIAS_HARNESS_EXPERIMENT_H_
#define PHONEBIAS_HARNESS_EXPERIMENT_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bias/contextual_fst.h"
#include "harness/pool.h"
#include "lexicon/phoneme_map.h"
#include "lexicon/symbol_table.h"
#include "tokenization/wordpiece.h"

namespace phonebias {

// Recognizer alphabet and source-language data used by every experiment.
struct Resources {
  std::shared_ptr<const SymbolTable> en_phonemes;
  std::shared_ptr<const SymbolTable> fr_phonemes;
  std::shared_ptr<const SymbolTable> units;
  std::shared_ptr<const WordpieceInventory> wordpieces;
  std::shared_ptr<const PhonemeMap> map;  // source -> English
};

// Reads en/phonemes.tsv, en/wordpieces.txt, fr/phonemes.tsv and
// fr_en_map.tsv under `data_dir`.
Resources LoadResources(const std::string& data_dir);

struct Utterance {
  std::string utt_id;
  std::vector<std::string> words;
  std::string truth;  // the foreign word, empty for English-only sets
};

struct DirectionsSet {
  std::vector<Utterance> utterances;
  std::vector<PoolEntry> pool;
};

// "directions to X" with X drawn uniformly with replacement from the pool.
// Throws kEmptyPool.
DirectionsSet MakeDirectionsSet(std::vector<PoolEntry> pool, size_t n_utts, uint64_t seed);
DirectionsSet MakeDirectionsSet(const std::string& pool_path, size_t n_utts, uint64_t seed);

// English-only utterances drawn uniformly from `sentences`.
DirectionsSet MakeEnglishSet(const std::vector<std::vector<std::string>>& sentences, size_t n_utts,
                             uint64_t seed);

std::string FormatSetTsv(const DirectionsSet& set);

struct ExperimentConfig {
  std::optional<BiasUnit> unit;  // none: no pronunciation tree and no bias
  size_t n_bias = 1;
  double bonus = 2.0;
  double lambda = 1.0;
  double noise = 0.2;
  size_t beam = 8;
  uint64_t seed = 0;
  // Decode with an empty bias list instead of the sampled one.
  bool empty_bias_list = false;
  size_t threads = 0;  // 0: hardware concurrency
};

struct UtteranceResult {
  std::string utt_id;
  std::vector<std::string> ref;
  std::vector<std::string> hyp;
  size_t errors = 0;
  double wer = 0.0;
  double cost = 0.0;
  std::string flags;  // "ok", "failed", "truncated"
  size_t states_checked = 0;
  size_t eager_violations = 0;
};

struct ExperimentResult {
  double wer = 0.0;
  size_t errors = 0;
  size_t ref_words = 0;
  std::vector<UtteranceResult> rows;
  size_t states_checked = 0;
  size_t eager_violations = 0;
};

// The bias list of one utterance: the truth followed by the first n - 1
// words of a per-utterance permutation of the rest of the pool, so lists
// for growing n are nested.
std::vector<std::string> BiasWords(const DirectionsSet& set, const Utterance& utt, size_t n_bias,
                                   uint64_t seed);

// Builds graph and bias machine per utterance, synthesizes emissions,
// decodes and scores. Emissions depend only on (seed, utt_id, unit
// rendering), so runs differing in n_bias or bias unit are paired.
ExperimentResult RunBiasExperiment(const DirectionsSet& set, const Resources& res,
                                   const ExperimentConfig& config);

struct SweepRow {
  size_t n_bias = 0;
  double wer = 0.0;
  size_t utterances = 0;
  uint64_t seed = 0;
  size_t errors = 0;
  size_t ref_words = 0;
};

std::vector<SweepRow> DistractorSweep(const DirectionsSet& set, const Resources& res,
                                      const std::vector<size_t>& n_list, ExperimentConfig config);

std::string FormatExperimentTsv(const ExperimentResult& result);
std::string FormatExperimentJson(const ExperimentResult& result);
std::string FormatSweepTsv(const std::vector<SweepRow>& rows);
std::string FormatSweepJson(const std::vector<SweepRow>& rows);

}  // namespace phonebias

#endif  // PHONEBIAS_HARNESS_EXPERIMENT_H_
