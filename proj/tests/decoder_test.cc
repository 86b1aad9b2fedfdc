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

#include <cmath>
#include <numeric>

#include "base/error.h"
#include "base/rng.h"
#include "bias/contextual_fst.h"
#include "decoder/decoder.h"
#include "decoder/decoding_graph.h"
#include "decoder/emissions.h"
#include "fixtures.h"
#include "fst/algorithms.h"

namespace phonebias {
namespace {

using testing::ExhaustiveDecode;
using testing::MakeToyWorld;
using testing::RandomEmissions;
using testing::ShippedData;

const SymbolTable& Units() { return *ShippedData().res.units; }

EmissionStep OneHot(Label l) {
  EmissionStep s(Units().size(), -INFINITY);
  s[l] = 0.0;
  return s;
}

EmissionStep Mix(const std::vector<std::pair<Label, double>>& probs) {
  EmissionStep s(Units().size(), -INFINITY);
  for (const auto& [l, p] : probs) s[l] = std::log(p);
  return s;
}

Label Phone(const std::string& p) { return Units().Lookup(PhonemeUnitSymbol(p)); }

Hypothesis Hyp(std::vector<Label> out, std::vector<Label> inp, double cost) {
  Hypothesis h;
  h.out = std::move(out);
  h.inp = std::move(inp);
  h.g_state = 0;
  h.b_state = 0;
  h.model_cost = cost;
  return h;
}

double Mass(const std::vector<Hypothesis>& beam, double lambda) {
  double m = 0.0;
  for (const Hypothesis& h : beam) m += std::exp(-h.Total(lambda));
  return m;
}

TEST(DecoderTest, EmptyEmissions) {
  const DecodingGraph g = BuildDecodingGraph({}, ShippedData().ctx);
  const DecodeResult r = Decode({"e", {}}, g, {});
  EXPECT_TRUE(r.transcript.empty());
  EXPECT_EQ(r.cost, 0.0);
}

TEST(DecoderTest, OneHotForcing) {
  const DecodingGraph g = BuildDecodingGraph({}, ShippedData().ctx);
  const EmissionSequence em{"u", {OneHot(Units().Lookup("_to")), OneHot(Units().eow()), OneHot(Units().Lookup("_a"))}};
  const DecodeResult r = Decode(em, g, {});
  EXPECT_EQ(r.transcript, (std::vector<std::string>{"to", "a"}));
  EXPECT_EQ(r.cost, 0.0);
}

TEST(DecoderTest, BiasFlipsAmbiguousWord) {
  // Six steps of phoneme vs wordpiece, then <eow>; the wordpiece reading
  // is 1.5 times as likely overall. The third symbol of each step is a
  // phoneme that no tree arc accepts.
  const std::vector<std::string> phones{"k", "r\\", "E", "t", "E", "j"};
  const std::vector<std::string> pieces{"_show", "e", "r", "e", "s", "t"};
  std::vector<EmissionStep> steps;
  for (size_t i = 0; i < 6; ++i) {
    const double p = i == 0 ? 0.36 : 0.45, q = i == 0 ? 0.54 : 0.45;
    steps.push_back(Mix({{Phone(phones[i]), p}, {Units().Lookup(pieces[i]), q}, {Phone("z"), 1.0 - p - q}}));
  }
  steps.push_back(OneHot(Units().eow()));
  const EmissionSequence em{"u", steps};
  ValidateEmissions(em);

  const DecodingGraph g = BuildDecodingGraph({"créteil"}, ShippedData().ctx);
  const DecodeResult plain = Decode(em, g, {});
  EXPECT_EQ(plain.transcript, std::vector<std::string>{"showerest"});

  const ContextualFst bias = BuildContextualFst({{"créteil"}}, {BiasUnit::kPhoneme, 2.0, 1.0}, ShippedData().ctx);
  DecoderConfig cfg;
  cfg.bias = &bias;
  const DecodeResult biased = Decode(em, g, cfg);
  EXPECT_EQ(biased.transcript, std::vector<std::string>{"créteil"});

  // Against exhaustive enumeration.
  const std::vector<testing::OracleWord> words{{g.words[0].pronunciation, g.words[0].wordpieces}};
  const std::vector<testing::Sequence> phrases{g.words[0].pronunciation};
  const auto oracle = ExhaustiveDecode(em, words, &phrases, 2.0, 1.0, Units());
  EXPECT_EQ(AssembleTranscript(oracle.out, Units()), biased.transcript);
  EXPECT_NEAR(oracle.cost, biased.cost, 1e-9);
  const auto oracle_plain = ExhaustiveDecode(em, words, nullptr, 2.0, 1.0, Units());
  EXPECT_NEAR(oracle_plain.cost, plain.cost, 1e-9);
  EXPECT_NEAR(plain.cost, -std::log(0.54 * std::pow(0.45, 5)), 1e-9);
}

TEST(DecoderTest, ErrorsAndConfig) {
  const DecodingGraph g = BuildDecodingGraph({"créteil"}, ShippedData().ctx);
  // A phoneme the tree cannot take empties the beam.
  const EmissionSequence dead{"u", {OneHot(Phone("z"))}};
  try {
    Decode(dead, g, {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNoCompleteHypothesis);
  }
  // Mid-word at the end of input.
  const EmissionSequence partial{"u", {OneHot(Phone("k")), OneHot(Phone("r\\"))}};
  EXPECT_THROW(Decode(partial, g, {}), Error);
  DecoderConfig fin;
  fin.finalize_partial = true;
  const DecodeResult r = Decode(partial, g, fin);
  EXPECT_TRUE(r.truncated);

  EmissionSequence wrong{"u", {EmissionStep(3, 0.0)}};
  try {
    Decode(wrong, g, {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kAlphabetMismatch);
  }
  DecoderConfig bad;
  bad.beam_size = 0;
  EXPECT_THROW(Decode({"u", {}}, g, bad), Error);
}

TEST(RecombineTest, Examples) {
  const Label a = Units().Lookup("_a");
  auto out = Recombine({Hyp({a}, {1}, -std::log(0.2)), Hyp({a}, {2}, -std::log(0.3))}, 1.0);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_NEAR(out[0].Total(1.0), -std::log(0.5), 1e-12);
  EXPECT_EQ(out[0].inp, std::vector<Label>{2});

  out = Recombine({Hyp({a}, {1}, 1.0), Hyp({a, a}, {2}, 2.0)}, 1.0);
  EXPECT_EQ(out.size(), 2u);
  EXPECT_DOUBLE_EQ(out[0].Total(1.0), 1.0);
  EXPECT_DOUBLE_EQ(out[1].Total(1.0), 2.0);

  out = Recombine({Hyp({a}, {1}, -std::log(0.1)), Hyp({a}, {2}, -std::log(0.1)), Hyp({a}, {3}, -std::log(0.05))}, 1.0);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_NEAR(out[0].Total(1.0), -std::log(0.25), 1e-12);
  EXPECT_EQ(out[0].inp, std::vector<Label>{1});  // tie to the smaller input
}

TEST(RecombineTest, ConservesMassAndKeepsBiasCost) {
  Rng rng(3);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<Hypothesis> beam;
    for (size_t n = 1 + UniformIndex(rng, 12); n > 0; --n) {
      Hypothesis h = Hyp({static_cast<Label>(UniformIndex(rng, 3))}, {static_cast<Label>(UniformIndex(rng, 50))},
                         UniformDouble(rng) * 5);
      h.g_state = static_cast<StateId>(UniformIndex(rng, 2));
      h.b_state = static_cast<StateId>(UniformIndex(rng, 2));
      h.bias_cost = -static_cast<double>(UniformIndex(rng, 3));
      beam.push_back(h);
    }
    const double lambda = 0.5 * static_cast<double>(UniformIndex(rng, 4));
    const auto out = Recombine(beam, lambda);
    EXPECT_NEAR(Mass(out, lambda), Mass(beam, lambda), 1e-9);
    for (size_t i = 1; i < out.size(); ++i) EXPECT_LE(out[i - 1].Total(lambda), out[i].Total(lambda));
  }
}

TEST(AssembleTranscriptTest, Boundaries) {
  const Label to = Units().Lookup("_to"), cre = Units().Lookup("_cré"), teil = Units().Lookup("teil");
  const Label eow = Units().eow();
  EXPECT_EQ(AssembleTranscript({to, eow, cre, teil, kWordBoundary}, Units()),
            (std::vector<std::string>{"to", "créteil"}));
  // A boundary marker followed by <eow> does not add an empty word.
  EXPECT_EQ(AssembleTranscript({cre, teil, kWordBoundary, eow, to}, Units()),
            (std::vector<std::string>{"créteil", "to"}));
  // A word-start piece starts a new word.
  EXPECT_EQ(AssembleTranscript({to, cre, teil}, Units()), (std::vector<std::string>{"to", "créteil"}));
  EXPECT_TRUE(AssembleTranscript({eow, eow}, Units()).empty());
}

// Random bias phrases over a toy world's phoneme and wordpiece sequences.
std::vector<testing::Sequence> ToyPhrases(Rng& rng, const testing::ToyWorld& w) {
  std::vector<testing::Sequence> phrases;
  for (const auto& ow : w.oracle_words) {
    if (UniformDouble(rng) < 0.5) phrases.push_back(ow.pronunciation);
    if (UniformDouble(rng) < 0.2) phrases.push_back(ow.pieces);
  }
  return phrases;
}

TEST(DecoderPropertyTest, EqualsExhaustiveArgmax) {
  for (int trial = 0; trial < 300; ++trial) {
    Rng rng(1000 + trial);
    const auto world = MakeToyWorld(rng, 1 + UniformIndex(rng, 4));
    const DecodingGraph g = BuildDecodingGraph(world->words, world->ctx);
    const auto em = RandomEmissions(rng, *world, 1 + UniformIndex(rng, 6));
    const auto phrases = ToyPhrases(rng, *world);
    const double w = 0.5 * static_cast<double>(1 + UniformIndex(rng, 4));
    const double lambda = trial % 4 == 0 ? 0.0 : 1.0;
    const ContextualFst bias{AddFailureArcs(BuildUnitTrie(phrases, w), w), BiasUnit::kParallel, phrases.size(), w};

    DecoderConfig cfg;
    cfg.beam_size = 100000;
    cfg.lambda = lambda;
    cfg.bias = &bias;
    const auto oracle = ExhaustiveDecode(em, world->oracle_words, &phrases, w, lambda, *world->units);
    if (!oracle.any) {
      EXPECT_THROW(Decode(em, g, cfg), Error) << "trial " << trial;
      continue;
    }
    const DecodeResult r = Decode(em, g, cfg);
    ASSERT_NEAR(r.cost, oracle.cost, 1e-9) << "trial " << trial;
    ASSERT_EQ(r.best.out, oracle.out) << "trial " << trial;
  }
}

TEST(DecoderPropertyTest, BiasNeutrality) {
  for (int trial = 0; trial < 100; ++trial) {
    Rng rng(2000 + trial);
    const auto world = MakeToyWorld(rng, 3);
    const DecodingGraph g = BuildDecodingGraph(world->words, world->ctx);
    const auto em = RandomEmissions(rng, *world, 5);
    const auto phrases = ToyPhrases(rng, *world);
    const ContextualFst bias{AddFailureArcs(BuildUnitTrie(phrases, 3.0), 3.0), BiasUnit::kParallel, phrases.size(), 3.0};
    DecoderConfig none, zero;
    zero.bias = &bias;
    zero.lambda = 0.0;
    try {
      const DecodeResult a = Decode(em, g, none);
      const DecodeResult b = Decode(em, g, zero);
      EXPECT_EQ(a.best.out, b.best.out);
      EXPECT_EQ(a.best.inp, b.best.inp);
      EXPECT_EQ(a.cost, b.cost);
    } catch (const Error&) {
      EXPECT_THROW(Decode(em, g, zero), Error);
    }
  }
}

TEST(DecoderPropertyTest, PartialMatchCancelsEndToEnd) {
  // crèche shares k r\ E with the biased créteil, then leaves it.
  const auto& ctx = ShippedData().ctx;
  const DecodingGraph g = BuildDecodingGraph({"crèche"}, ctx);
  const ContextualFst bias = BuildContextualFst({{"créteil"}}, {BiasUnit::kPhoneme, 2.0, 1.0}, ctx);
  std::vector<EmissionStep> steps;
  for (const char* p : {"k", "r\\", "E", "S"}) steps.push_back(OneHot(Phone(p)));
  steps.push_back(OneHot(Units().eow()));
  steps.push_back(OneHot(Units().Lookup("_to")));
  DecoderConfig with;
  with.bias = &bias;
  const DecodeResult a = Decode({"u", steps}, g, {});
  const DecodeResult b = Decode({"u", steps}, g, with);
  EXPECT_EQ(a.transcript, b.transcript);
  EXPECT_DOUBLE_EQ(a.cost, b.cost);
}

TEST(DecoderPropertyTest, EagerClosure) {
  for (int trial = 0; trial < 100; ++trial) {
    Rng rng(3000 + trial);
    const auto world = MakeToyWorld(rng, 6);
    const DecodingGraph g = BuildDecodingGraph(world->words, world->ctx);
    DecoderConfig cfg;
    cfg.beam_size = 16;
    try {
      const DecodeResult r = Decode(RandomEmissions(rng, *world, 6), g, cfg);
      EXPECT_GT(r.states_checked, 0u);
      // Only prefix-collision states may hold an unclosed hypothesis.
      if (r.eager_violations > 0) {
        bool collision = false;
        for (const auto& a : world->oracle_words) {
          for (const auto& b : world->oracle_words) {
            collision |= a.pronunciation.size() < b.pronunciation.size() &&
                         std::equal(a.pronunciation.begin(), a.pronunciation.end(), b.pronunciation.begin());
          }
        }
        EXPECT_TRUE(collision);
      }
    } catch (const Error&) {
    }
  }
}

TEST(DecoderPropertyTest, LargerBonusNeverDemotesMatch) {
  // The créteil reading's total cost improves relative to every rival.
  const auto& ctx = ShippedData().ctx;
  const DecodingGraph g = BuildDecodingGraph({"créteil"}, ctx);
  std::vector<EmissionStep> steps;
  const std::vector<std::string> phones{"k", "r\\", "E", "t", "E", "j"};
  const std::vector<std::string> pieces{"_show", "e", "r", "e", "s", "t"};
  for (size_t i = 0; i < 6; ++i) {
    steps.push_back(Mix({{Phone(phones[i]), 0.2}, {Units().Lookup(pieces[i]), 0.8}}));
  }
  steps.push_back(OneHot(Units().eow()));
  bool matched_before = false;
  for (double w = 0.1; w < 3.0; w += 0.1) {
    const ContextualFst bias = BuildContextualFst({{"créteil"}}, {BiasUnit::kPhoneme, w, 1.0}, ctx);
    DecoderConfig cfg;
    cfg.bias = &bias;
    const bool matched = Decode({"u", steps}, g, cfg).transcript == std::vector<std::string>{"créteil"};
    EXPECT_TRUE(matched || !matched_before) << w;
    matched_before |= matched;
  }
  EXPECT_TRUE(matched_before);
}

TEST(EmissionsTest, NoiselessIsOneHot) {
  const auto& ctx = ShippedData().ctx;
  const std::vector<std::string> words{"directions", "to", "créteil"};
  const auto em = GenerateSyntheticEmissions("u", words, {"créteil"}, ctx, {0.0, 1});
  const auto ref = ReferenceSymbols(words, {"créteil"}, ctx);
  ASSERT_EQ(em.steps.size(), ref.size());
  for (size_t t = 0; t < ref.size(); ++t) {
    for (Label l = 0; l < static_cast<Label>(Units().size()); ++l) {
      EXPECT_EQ(em.steps[t][l], l == ref[t] ? 0.0 : -INFINITY);
    }
  }
  ValidateEmissions(em);
}

TEST(EmissionsTest, NormalizedAtAnyNoise) {
  const auto& ctx = ShippedData().ctx;
  for (double noise : {0.0, 0.01, 0.2, 0.5, 0.99}) {
    const auto em = GenerateSyntheticEmissions("u", {"directions", "to", "créteil"}, {"créteil"}, ctx, {noise, 3});
    for (const EmissionStep& s : em.steps) {
      double total = 0.0;
      for (double lp : s) {
        EXPECT_LE(lp, 0.0);
        total += std::exp(lp);
      }
      EXPECT_NEAR(total, 1.0, 1e-6);
    }
  }
}

TEST(EmissionsTest, ArgmaxFlipRate) {
  // 10k confusable steps, half phonemes and half wordpieces.
  std::vector<Label> ref;
  for (int i = 0; i < 5000; ++i) {
    ref.push_back(Phone("k"));
    ref.push_back(Units().Lookup("_to"));
  }
  const auto em = SynthesizeSteps("u", ref, Units(), {0.2, 42});
  size_t differs = 0;
  for (size_t t = 0; t < ref.size(); ++t) {
    const auto& s = em.steps[t];
    differs += static_cast<Label>(std::max_element(s.begin(), s.end()) - s.begin()) != ref[t];
  }
  const double rate = static_cast<double>(differs) / static_cast<double>(ref.size());
  EXPECT_NEAR(rate, 0.20, 0.02);
}

TEST(EmissionsTest, DeterministicUnderSeed) {
  const auto& ctx = ShippedData().ctx;
  const std::vector<std::string> words{"directions", "to", "crèche"};
  const auto a = GenerateSyntheticEmissions("u", words, {"crèche"}, ctx, {0.3, 9});
  const auto b = GenerateSyntheticEmissions("u", words, {"crèche"}, ctx, {0.3, 9});
  EXPECT_EQ(FormatEmissionsJson(a, Units()), FormatEmissionsJson(b, Units()));
  const auto c = GenerateSyntheticEmissions("u", words, {"crèche"}, ctx, {0.3, 10});
  EXPECT_NE(FormatEmissionsJson(a, Units()), FormatEmissionsJson(c, Units()));
}

TEST(EmissionsTest, JsonRoundTrip) {
  const auto& ctx = ShippedData().ctx;
  const auto em = GenerateSyntheticEmissions("u7", {"directions", "to", "créteil"}, {"créteil"}, ctx, {0.2, 5});
  const std::string line = FormatEmissionsJson(em, Units());
  const auto back = ParseEmissionsJson(line, Units());
  EXPECT_EQ(back.utt_id, "u7");
  EXPECT_EQ(FormatEmissionsJson(back, Units()), line);
  try {
    ParseEmissionsJson(R"({"utt_id":"x","steps":[{"nope":0.0}]})", Units());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kAlphabetMismatch);
  }
  EXPECT_THROW(ParseEmissionsJson("{not json", Units()), Error);
}

TEST(EmissionsTest, ExpansionFailure) {
  EXPECT_THROW(GenerateSyntheticEmissions("u", {"zzq"}, {"zzq"}, ShippedData().ctx, {0.0, 1}), Error);
}

}  // namespace
}  // namespace phonebias
