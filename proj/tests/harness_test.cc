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

#include <gtest/gtest.h>

#include <set>

#include "base/error.h"
#include "base/rng.h"
#include "fixtures.h"
#include "harness/experiment.h"
#include "harness/pool.h"
#include "harness/wer.h"
#include "lexicon/phoneme_map.h"

namespace phonebias {
namespace {

using testing::DataDir;
using testing::ShippedData;
using Words = std::vector<std::string>;

TEST(WerTest, Examples) {
  const Words ref{"directions", "to", "créteil"};
  EXPECT_EQ(Wer(ref, ref).value, 0.0);
  const WerResult r = Wer(Words{"directions", "to", "champs-élysées"}, Words{"directions", "to", "shaw", "city"});
  EXPECT_EQ(r.distance, 2u);
  EXPECT_NEAR(r.value, 2.0 / 3.0, 1e-12);
  EXPECT_EQ(Wer(Words{"a", "b"}, Words{}).value, 1.0);
  EXPECT_EQ(Wer(Words{}, Words{}).value, 0.0);
  const WerResult degenerate = Wer(Words{}, Words{"a", "b"});
  EXPECT_TRUE(degenerate.degenerate);
  EXPECT_EQ(degenerate.value, 2.0);
}

TEST(WerTest, NormalizesBeforeComparing) {
  EXPECT_EQ(Wer(Words{"créteil"}, Words{"cre\xCC\x81teil"}).distance, 0u);
}

TEST(WerTest, DistanceProperties) {
  Rng rng(1);
  auto random_words = [&] {
    Words w;
    for (size_t n = UniformIndex(rng, 6); n > 0; --n) w.push_back(std::string(1, "abc"[UniformIndex(rng, 3)]));
    return w;
  };
  for (int trial = 0; trial < 1000; ++trial) {
    const Words x = random_words(), y = random_words(), z = random_words();
    EXPECT_EQ(EditDistance(x, x), 0u);
    EXPECT_EQ(EditDistance(x, y), EditDistance(y, x));
    EXPECT_LE(EditDistance(x, z), EditDistance(x, y) + EditDistance(y, z));
    EXPECT_LE(EditDistance(x, y), std::max(x.size(), y.size()));
  }
}

std::vector<PoolEntry> CreteilPool() { return {{"créteil", {"k", "R", "e", "t", "E", "j"}}}; }

TEST(DirectionsSetTest, Examples) {
  const DirectionsSet one = MakeDirectionsSet(CreteilPool(), 1, 7);
  ASSERT_EQ(one.utterances.size(), 1u);
  EXPECT_EQ(one.utterances[0].utt_id, "u0");
  EXPECT_EQ(one.utterances[0].words, (Words{"directions", "to", "créteil"}));
  EXPECT_EQ(one.utterances[0].truth, "créteil");
  EXPECT_TRUE(MakeDirectionsSet(CreteilPool(), 0, 7).utterances.empty());

  const std::string pool = DataDir() + "/fr/pool.tsv";
  EXPECT_EQ(FormatSetTsv(MakeDirectionsSet(pool, 200, 3)), FormatSetTsv(MakeDirectionsSet(pool, 200, 3)));
  EXPECT_NE(FormatSetTsv(MakeDirectionsSet(pool, 200, 3)), FormatSetTsv(MakeDirectionsSet(pool, 200, 4)));
}

TEST(DirectionsSetTest, EmptyPool) {
  try {
    MakeDirectionsSet(std::vector<PoolEntry>{}, 3, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyPool);
  }
}

TEST(DirectionsSetTest, EverythingComesFromThePool) {
  const DirectionsSet set = MakeDirectionsSet(DataDir() + "/fr/pool.tsv", 300, 11);
  std::set<std::string> pool;
  for (const PoolEntry& e : set.pool) pool.insert(e.word);
  for (const Utterance& u : set.utterances) {
    EXPECT_EQ(u.words.size(), 3u);
    EXPECT_EQ(u.words.back(), u.truth);
    EXPECT_TRUE(pool.count(u.truth));
  }
}

TEST(PoolTest, ShippedPoolIsUsable) {
  const auto pool = LoadPool(DataDir() + "/fr/pool.tsv");
  EXPECT_EQ(pool.size(), 1000u);
  const auto& res = ShippedData().res;
  const Lexicon lex = PoolLexicon(pool, res.fr_phonemes);
  std::set<std::vector<Label>> mapped;
  std::set<std::string> words;
  for (const LexiconEntry& e : lex.entries()) {
    EXPECT_TRUE(words.insert(e.word).second);
    mapped.insert(MapPhonemes(lex.Spell(e.pronunciation), *res.map));
    EXPECT_NO_THROW(TokenizeWordpieces(e.word, *res.wordpieces)) << e.word;
  }
  EXPECT_EQ(mapped.size(), pool.size());
  // Prefix-free after mapping.
  for (auto it = mapped.begin(); it != mapped.end(); ++it) {
    auto next = std::next(it);
    if (next == mapped.end()) break;
    EXPECT_FALSE(it->size() < next->size() && std::equal(it->begin(), it->end(), next->begin()));
  }
}

TEST(PoolTest, GeneratorIsDeterministic) {
  const PhonemeMap& map = *ShippedData().res.map;
  EXPECT_EQ(FormatPool(GeneratePool(300, map, 7)), FormatPool(GeneratePool(300, map, 7)));
  EXPECT_EQ(FormatPool(GeneratePool(1000, map, 7)), FormatPool(LoadPool(DataDir() + "/fr/pool.tsv")));
}

TEST(BiasWordsTest, TruthFirstAndNested) {
  const DirectionsSet set = MakeDirectionsSet(DataDir() + "/fr/pool.tsv", 5, 2);
  for (const Utterance& u : set.utterances) {
    const Words small = BiasWords(set, u, 10, 5);
    const Words large = BiasWords(set, u, 100, 5);
    EXPECT_EQ(small.front(), u.truth);
    ASSERT_EQ(small.size(), 10u);
    ASSERT_EQ(large.size(), 100u);
    EXPECT_TRUE(std::equal(small.begin(), small.end(), large.begin()));
    EXPECT_EQ(std::set<std::string>(large.begin(), large.end()).size(), 100u);
    EXPECT_EQ(BiasWords(set, u, 1000, 5).size(), 1000u);
    EXPECT_EQ(BiasWords(set, u, 5000, 5).size(), 1000u);  // capped by the pool
  }
}

ExperimentConfig Config(std::optional<BiasUnit> unit, double noise, size_t n_bias) {
  ExperimentConfig c;
  c.unit = unit;
  c.noise = noise;
  c.n_bias = n_bias;
  c.seed = 17;
  return c;
}

TEST(ExperimentTest, UnbiasedMissesForeignWords) {
  const DirectionsSet set = MakeDirectionsSet(DataDir() + "/fr/pool.tsv", 20, 5);
  const ExperimentResult r = RunBiasExperiment(set, ShippedData().res, Config(std::nullopt, 0.0, 1));
  for (const UtteranceResult& row : r.rows) EXPECT_GE(row.wer, 1.0 / 3.0);
}

TEST(ExperimentTest, NoiselessPhonemeBiasIsPerfect) {
  const DirectionsSet set = MakeDirectionsSet(DataDir() + "/fr/pool.tsv", 30, 5);
  const ExperimentResult r = RunBiasExperiment(set, ShippedData().res, Config(BiasUnit::kPhoneme, 0.0, 1));
  EXPECT_EQ(r.wer, 0.0);
  EXPECT_EQ(r.eager_violations, 0u);
}

TEST(ExperimentTest, ReportsAreDeterministic) {
  const DirectionsSet set = MakeDirectionsSet(DataDir() + "/fr/pool.tsv", 25, 5);
  ExperimentConfig c = Config(BiasUnit::kParallel, 0.2, 50);
  c.threads = 1;
  const std::string serial = FormatExperimentTsv(RunBiasExperiment(set, ShippedData().res, c));
  c.threads = 4;
  EXPECT_EQ(FormatExperimentTsv(RunBiasExperiment(set, ShippedData().res, c)), serial);
  EXPECT_EQ(serial.substr(0, serial.find('\n')), "utt_id\treference\thypothesis\terrors\twer\tcost\tflags");
}

TEST(ExperimentTest, WordpieceUnitRuns) {
  const DirectionsSet set = MakeDirectionsSet(DataDir() + "/fr/pool.tsv", 10, 5);
  const ExperimentResult r = RunBiasExperiment(set, ShippedData().res, Config(BiasUnit::kWordpiece, 0.0, 1));
  EXPECT_EQ(r.rows.size(), 10u);
  EXPECT_THROW(RunBiasExperiment(set, ShippedData().res, Config(BiasUnit::kGrapheme, 0.0, 1)), Error);
}

TEST(SweepTest, RowsAndDeterminism) {
  const DirectionsSet set = MakeDirectionsSet(DataDir() + "/fr/pool.tsv", 10, 5);
  const auto one = DistractorSweep(set, ShippedData().res, {1}, Config(BiasUnit::kPhoneme, 0.2, 1));
  EXPECT_EQ(one.size(), 1u);
  const auto a = DistractorSweep(set, ShippedData().res, {1, 10, 100}, Config(BiasUnit::kPhoneme, 0.2, 1));
  const auto b = DistractorSweep(set, ShippedData().res, {1, 10, 100}, Config(BiasUnit::kPhoneme, 0.2, 1));
  EXPECT_EQ(a.size(), 3u);
  EXPECT_EQ(FormatSweepTsv(a), FormatSweepTsv(b));
  EXPECT_EQ(FormatSweepJson(a), FormatSweepJson(b));
  EXPECT_THROW(DistractorSweep(set, ShippedData().res, {}, Config(BiasUnit::kPhoneme, 0.2, 1)), Error);
  EXPECT_THROW(DistractorSweep(set, ShippedData().res, {0}, Config(BiasUnit::kPhoneme, 0.2, 1)), Error);
}

TEST(EnglishSetTest, UsesCorpusSentences) {
  const DirectionsSet set = MakeEnglishSet({{"call", "mom"}, {"play", "music"}}, 10, 1);
  EXPECT_EQ(set.utterances.size(), 10u);
  for (const Utterance& u : set.utterances) {
    EXPECT_TRUE(u.truth.empty());
    EXPECT_EQ(u.words.size(), 2u);
  }
}

}  // namespace
}  // namespace phonebias
