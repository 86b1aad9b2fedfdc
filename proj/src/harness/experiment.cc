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

#include "harness/experiment.h"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <set>
#include <thread>

#include "base/error.h"
#include "base/rng.h"
#include "base/text.h"
#include "decoder/decoder.h"
#include "decoder/decoding_graph.h"
#include "decoder/emissions.h"
#include "harness/wer.h"
#include "json.hpp"

namespace phonebias {

namespace {

std::string UttId(size_t i) { return "u" + std::to_string(i); }

// Runs fn(i) for i in [0, n) on `threads` workers; rethrows the first error.
template <typename Fn>
void ParallelFor(size_t n, size_t threads, Fn fn) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, std::max<size_t>(n, 1));
  std::atomic<size_t> next{0};
  std::exception_ptr error;
  std::mutex mu;
  auto worker = [&] {
    for (size_t i = next++; i < n; i = next++) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!error) error = std::current_exception();
        next = n;
      }
    }
  };
  std::vector<std::thread> pool;
  for (size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace

Resources LoadResources(const std::string& data_dir) {
  Resources res;
  res.en_phonemes = std::make_shared<const SymbolTable>(LoadSymbolTable(data_dir + "/en/phonemes.tsv"));
  res.fr_phonemes = std::make_shared<const SymbolTable>(LoadSymbolTable(data_dir + "/fr/phonemes.tsv"));
  res.wordpieces =
      std::make_shared<const WordpieceInventory>(LoadWordpieces(data_dir + "/en/wordpieces.txt"));
  res.units = std::make_shared<const SymbolTable>(MakeUnitTable(*res.en_phonemes, res.wordpieces->pieces()));
  res.map = std::make_shared<const PhonemeMap>(LoadPhonemeMap(data_dir + "/fr_en_map.tsv", res.en_phonemes));
  return res;
}

DirectionsSet MakeDirectionsSet(std::vector<PoolEntry> pool, size_t n_utts, uint64_t seed) {
  if (pool.empty()) throw Error(ErrorCode::kEmptyPool, "the foreign word pool is empty");
  DirectionsSet set;
  set.pool = std::move(pool);
  Rng rng(DeriveSeed(seed, "directions"));
  for (size_t i = 0; i < n_utts; ++i) {
    const std::string& truth = set.pool[UniformIndex(rng, set.pool.size())].word;
    set.utterances.push_back({UttId(i), {"directions", "to", truth}, truth});
  }
  return set;
}

DirectionsSet MakeDirectionsSet(const std::string& pool_path, size_t n_utts, uint64_t seed) {
  return MakeDirectionsSet(LoadPool(pool_path), n_utts, seed);
}

DirectionsSet MakeEnglishSet(const std::vector<std::vector<std::string>>& sentences, size_t n_utts,
                             uint64_t seed) {
  if (sentences.empty()) throw Error(ErrorCode::kEmptyPool, "no English sentences");
  DirectionsSet set;
  Rng rng(DeriveSeed(seed, "english"));
  for (size_t i = 0; i < n_utts; ++i) {
    set.utterances.push_back({UttId(i), sentences[UniformIndex(rng, sentences.size())], ""});
  }
  return set;
}

std::string FormatSetTsv(const DirectionsSet& set) {
  std::string out = "utt_id\ttranscript\ttruth\n";
  for (const Utterance& u : set.utterances) {
    out += u.utt_id + '\t' + Join(u.words, " ") + '\t' + u.truth + '\n';
  }
  return out;
}

std::vector<std::string> BiasWords(const DirectionsSet& set, const Utterance& utt, size_t n_bias,
                                   uint64_t seed) {
  std::vector<std::string> words;
  if (n_bias == 0) return words;
  std::vector<const std::string*> others;
  for (const PoolEntry& e : set.pool) {
    if (e.word != utt.truth) others.push_back(&e.word);
  }
  Rng rng(DeriveSeed(seed, "distractors/" + utt.utt_id));
  for (size_t i = others.size(); i > 1; --i) std::swap(others[i - 1], others[UniformIndex(rng, i)]);
  if (!utt.truth.empty()) words.push_back(utt.truth);
  for (const std::string* w : others) {
    if (words.size() >= n_bias) break;
    words.push_back(*w);
  }
  return words;
}

ExperimentResult RunBiasExperiment(const DirectionsSet& set, const Resources& res,
                                   const ExperimentConfig& config) {
  if (config.unit == BiasUnit::kGrapheme) {
    throw Error(ErrorCode::kInvalidArgument, "the synthetic model has no grapheme outputs");
  }
  if (config.unit && !config.empty_bias_list && config.n_bias < 1) {
    throw Error(ErrorCode::kInvalidArgument, "n_bias must be >= 1 when biasing");
  }
  const Lexicon lexicon = PoolLexicon(set.pool, res.fr_phonemes);
  ExpansionContext ctx;
  ctx.units = res.units;
  ctx.lexicon = &lexicon;
  ctx.map = res.map.get();
  ctx.wordpieces = res.wordpieces.get();
  // A wordpiece-unit model spells foreign words; every other setup hears
  // them as phonemes.
  const bool spell_foreign = config.unit == BiasUnit::kWordpiece;
  const bool tree = config.unit && !spell_foreign;

  ExperimentResult result;
  result.rows.resize(set.utterances.size());
  ParallelFor(set.utterances.size(), config.threads, [&](size_t i) {
    const Utterance& utt = set.utterances[i];
    std::vector<std::string> words;
    if (config.unit && !config.empty_bias_list) words = BiasWords(set, utt, config.n_bias, config.seed);
    const DecodingGraph graph = BuildDecodingGraph(tree ? words : std::vector<std::string>{}, ctx);

    ContextualFst bias;
    DecoderConfig dc;
    dc.beam_size = config.beam;
    dc.lambda = config.lambda;
    if (config.unit) {
      std::vector<Phrase> phrases;
      for (const std::string& w : words) phrases.push_back({w});
      BiasConfig bc{*config.unit, config.bonus, config.lambda};
      bias = BuildContextualFst(phrases, bc, ctx);
      dc.bias = &bias;
    }

    std::set<std::string> foreign;
    if (!utt.truth.empty() && !spell_foreign) foreign.insert(utt.truth);
    const EmissionSequence em = GenerateSyntheticEmissions(
        utt.utt_id, utt.words, foreign, ctx,
        {config.noise, DeriveSeed(config.seed, "emissions/" + utt.utt_id)});

    UtteranceResult& row = result.rows[i];
    row.utt_id = utt.utt_id;
    row.ref = utt.words;
    try {
      const DecodeResult d = Decode(em, graph, dc);
      row.hyp = d.transcript;
      row.cost = d.cost;
      row.flags = d.truncated ? "truncated" : "ok";
      row.states_checked = d.states_checked;
      row.eager_violations = d.eager_violations;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kNoCompleteHypothesis) throw;
      row.hyp.clear();
      row.cost = kInfiniteCost;
      row.flags = "failed";
    }
    const WerResult w = Wer(row.ref, row.hyp);
    row.errors = w.distance;
    row.wer = w.value;
  });

  for (const UtteranceResult& row : result.rows) {
    result.errors += row.errors;
    result.ref_words += row.ref.size();
    result.states_checked += row.states_checked;
    result.eager_violations += row.eager_violations;
  }
  result.wer = result.ref_words == 0
                   ? 0.0
                   : static_cast<double>(result.errors) / static_cast<double>(result.ref_words);
  return result;
}

std::vector<SweepRow> DistractorSweep(const DirectionsSet& set, const Resources& res,
                                      const std::vector<size_t>& n_list, ExperimentConfig config) {
  if (n_list.empty()) throw Error(ErrorCode::kInvalidArgument, "empty distractor list");
  std::vector<SweepRow> rows;
  for (size_t n : n_list) {
    if (n < 1) throw Error(ErrorCode::kInvalidArgument, "bias list sizes must be >= 1");
    config.n_bias = n;
    const ExperimentResult r = RunBiasExperiment(set, res, config);
    rows.push_back({n, r.wer, set.utterances.size(), config.seed, r.errors, r.ref_words});
  }
  return rows;
}

std::string FormatExperimentTsv(const ExperimentResult& result) {
  std::string out = "utt_id\treference\thypothesis\terrors\twer\tcost\tflags\n";
  for (const UtteranceResult& r : result.rows) {
    out += r.utt_id + '\t' + Join(r.ref, " ") + '\t' + Join(r.hyp, " ") + '\t' +
           std::to_string(r.errors) + '\t' + FormatDouble(r.wer) + '\t' + FormatDouble(r.cost) +
           '\t' + r.flags + '\n';
  }
  return out;
}

std::string FormatExperimentJson(const ExperimentResult& result) {
  std::string out;
  for (const UtteranceResult& r : result.rows) {
    nlohmann::ordered_json j;
    j["utt_id"] = r.utt_id;
    j["reference"] = r.ref;
    j["hypothesis"] = r.hyp;
    j["errors"] = r.errors;
    j["wer"] = r.wer;
    j["cost"] = FormatDouble(r.cost);
    j["flags"] = r.flags;
    out += j.dump() + '\n';
  }
  return out;
}

std::string FormatSweepTsv(const std::vector<SweepRow>& rows) {
  std::string out = "n_bias\twer\tutterances\tseed\terrors\tref_words\n";
  for (const SweepRow& r : rows) {
    out += std::to_string(r.n_bias) + '\t' + FormatDouble(r.wer) + '\t' +
           std::to_string(r.utterances) + '\t' + std::to_string(r.seed) + '\t' +
           std::to_string(r.errors) + '\t' + std::to_string(r.ref_words) + '\n';
  }
  return out;
}

std::string FormatSweepJson(const std::vector<SweepRow>& rows) {
  std::string out;
  for (const SweepRow& r : rows) {
    nlohmann::ordered_json j;
    j["n_bias"] = r.n_bias;
    j["wer"] = r.wer;
    j["utterances"] = r.utterances;
    j["seed"] = r.seed;
    j["errors"] = r.errors;
    j["ref_words"] = r.ref_words;
    out += j.dump() + '\n';
  }
  return out;
}

}  // namespace phonebias
