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

#include <iostream>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "base/error.h"
#include "base/rng.h"
#include "base/text.h"
#include "base/unicode.h"
#include "bias/contextual_fst.h"
#include "decoder/decoder.h"
#include "decoder/decoding_graph.h"
#include "decoder/emissions.h"
#include "fst/text_io.h"
#include "harness/experiment.h"
#include "harness/pool.h"
#include "harness/wer.h"
#include "lexicon/bias_list.h"
#include "lexicon/lexicon.h"
#include "lexicon/phoneme_map.h"
#include "tokenization/target_sampler.h"
#include "tokenization/wordpiece.h"

#ifndef PHONEBIAS_DATA_DIR
#define PHONEBIAS_DATA_DIR "data"
#endif

namespace pb = phonebias;

namespace {

constexpr int kExitInput = 2;
constexpr int kExitDecode = 3;

void Emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    pb::WriteFile(path, text);
  }
}

// Paths shared by the commands that expand words.
struct DataOptions {
  std::string data = PHONEBIAS_DATA_DIR;
  std::string phonemes;         // English phoneme table
  std::string source_phonemes;  // lexicon table when a map is used
  std::string lexicon;
  std::string map;
  std::string wordpieces;

  void Register(CLI::App* cmd, bool with_lexicon) {
    cmd->add_option("--data", data, "Data directory for defaults");
    cmd->add_option("--phonemes", phonemes, "English phoneme table");
    cmd->add_option("--wordpieces", wordpieces, "Wordpiece inventory");
    if (with_lexicon) {
      cmd->add_option("--lexicon", lexicon, "Pronunciation lexicon (default: French lexicon)");
      cmd->add_option("--map", map, "Phoneme map into English, or 'none' for an English lexicon");
      cmd->add_option("--source-phonemes", source_phonemes, "Phoneme table of a mapped lexicon");
    }
  }

  std::string Or(const std::string& value, const std::string& fallback) const {
    return value.empty() ? data + "/" + fallback : value;
  }
};

// Loaded resources kept alive for an ExpansionContext.
struct Loaded {
  std::shared_ptr<const pb::SymbolTable> en;
  std::shared_ptr<const pb::SymbolTable> units;
  std::unique_ptr<pb::WordpieceInventory> wordpieces;
  std::unique_ptr<pb::Lexicon> lexicon;
  std::unique_ptr<pb::PhonemeMap> map;
  pb::ExpansionContext ctx;
};

std::unique_ptr<Loaded> Load(const DataOptions& o, bool with_lexicon) {
  auto l = std::make_unique<Loaded>();
  l->en = std::make_shared<const pb::SymbolTable>(pb::LoadSymbolTable(o.Or(o.phonemes, "en/phonemes.tsv")));
  l->wordpieces = std::make_unique<pb::WordpieceInventory>(
      pb::LoadWordpieces(o.Or(o.wordpieces, "en/wordpieces.txt")));
  l->units = std::make_shared<const pb::SymbolTable>(pb::MakeUnitTable(*l->en, l->wordpieces->pieces()));
  l->ctx.units = l->units;
  l->ctx.wordpieces = l->wordpieces.get();
  if (with_lexicon) {
    if (o.map == "none") {
      l->lexicon = std::make_unique<pb::Lexicon>(pb::LoadLexicon(o.Or(o.lexicon, "en/lexicon.tsv"), l->en));
    } else {
      auto source = std::make_shared<const pb::SymbolTable>(
          pb::LoadSymbolTable(o.Or(o.source_phonemes, "fr/phonemes.tsv")));
      l->lexicon = std::make_unique<pb::Lexicon>(pb::LoadLexicon(o.Or(o.lexicon, "fr/lexicon.tsv"), source));
      l->map = std::make_unique<pb::PhonemeMap>(pb::LoadPhonemeMap(o.Or(o.map, "fr_en_map.tsv"), l->en));
    }
    l->ctx.lexicon = l->lexicon.get();
    l->ctx.map = l->map.get();
  }
  return l;
}

pb::BiasUnit UnitOrThrow(const std::string& name) {
  const auto unit = pb::ParseBiasUnit(name);
  if (!unit) throw pb::Error(pb::ErrorCode::kInvalidArgument, "unknown unit " + name);
  return *unit;
}

std::optional<pb::BiasUnit> UnitOrNone(const std::string& name) {
  if (name == "none") return std::nullopt;
  return UnitOrThrow(name);
}

std::vector<std::vector<std::string>> ReadTranscripts(const std::string& path,
                                                      std::vector<std::string>* ids) {
  std::vector<std::vector<std::string>> out;
  for (const pb::Line& line : pb::ReadLines(path)) {
    const std::vector<std::string> f = pb::SplitOn(line.text, '\t');
    if (f.size() < 2) throw pb::Error(pb::ErrorCode::kFormat, pb::Where(path, line) + "expected utt_id<TAB>words");
    if (f[0] == "utt_id") continue;  // header
    if (ids) ids->push_back(f[0]);
    out.push_back(pb::SplitWhitespace(pb::NormalizeNfc(f[1])));
  }
  return out;
}

std::vector<size_t> ParseSizes(const std::string& text) {
  std::vector<size_t> out;
  for (const std::string& f : pb::SplitOn(text, ',')) {
    int64_t v = 0;
    if (!pb::ParseInt64(f, &v) || v < 1) {
      throw pb::Error(pb::ErrorCode::kInvalidArgument, "bad list size '" + f + "'");
    }
    out.push_back(static_cast<size_t>(v));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Contextual biasing with phoneme, wordpiece and grapheme FSTs"};
  app.require_subcommand(1);

  // sample-targets
  auto* sample = app.add_subcommand("sample-targets", "Mixed wordpiece/phoneme training targets");
  std::string corpus, out;
  DataOptions sample_data;
  pb::SamplerConfig sampler;
  sample->add_option("--corpus", corpus, "utt_id<TAB>transcript lines")->required();
  sample->add_option("--lexicon", sample_data.lexicon, "English lexicon (trimmed on load)");
  sample_data.Register(sample, false);
  sample->add_option("--p0", sampler.p0, "Presentation probability")->capture_default_str();
  sample->add_option("--T", sampler.T, "Count threshold")->capture_default_str();
  sample->add_option("--seed", sampler.seed)->capture_default_str();
  sample->add_option("--out", out, "Output file (default stdout)");

  // build-bias-fst
  auto* bias_cmd = app.add_subcommand("build-bias-fst", "Compile a phrase list into a biasing FST");
  std::string phrases_path, unit_name = "phoneme", isyms_out;
  double bonus = 2.0;
  DataOptions bias_data;
  bias_cmd->add_option("--phrases", phrases_path, "One phrase per line")->required();
  bias_cmd->add_option("--unit", unit_name, "phoneme|wordpiece|grapheme|parallel")->capture_default_str();
  bias_cmd->add_option("--bonus", bonus, "Per-unit bonus w")->capture_default_str();
  bias_cmd->add_option("--out", out, "FST text output")->required();
  bias_cmd->add_option("--isymbols-out", isyms_out, "Write the input symbol table here");
  bias_data.Register(bias_cmd, true);

  // build-decode-graph
  auto* graph_cmd = app.add_subcommand("build-decode-graph", "Hub loops plus pronunciation tree");
  std::string bias_words_path;
  DataOptions graph_data;
  graph_cmd->add_option("--bias-words", bias_words_path, "One word per line")->required();
  graph_cmd->add_option("--out", out, "FST text output")->required();
  graph_cmd->add_option("--isymbols-out", isyms_out, "Write the unit symbol table here");
  graph_data.Register(graph_cmd, true);

  // decode
  auto* decode_cmd = app.add_subcommand("decode", "Beam search with optional biasing");
  std::string graph_path, emissions_path, bias_path, symbols_path;
  double lambda = 1.0;
  size_t beam = 8;
  bool finalize_partial = false;
  DataOptions decode_data;
  decode_cmd->add_option("--graph", graph_path, "Decoding graph (FST text)")->required();
  decode_cmd->add_option("--emissions", emissions_path, "emissions.jsonl")->required();
  decode_cmd->add_option("--bias", bias_path, "Biasing FST (FST text)");
  decode_cmd->add_option("--lambda", lambda)->capture_default_str();
  decode_cmd->add_option("--beam", beam)->capture_default_str();
  decode_cmd->add_flag("--finalize-partial", finalize_partial, "Keep hypotheses that end mid-word");
  decode_cmd->add_option("--symbols", symbols_path, "Unit symbol table (default: built from data)");
  decode_cmd->add_option("--out", out, "hyps.tsv (default stdout)");
  decode_data.Register(decode_cmd, false);

  // make-pool
  auto* pool_cmd = app.add_subcommand("make-pool", "Curated and generated foreign place names");
  size_t pool_size = 1000;
  uint64_t seed = 0;
  DataOptions pool_data;
  pool_cmd->add_option("--size", pool_size)->capture_default_str();
  pool_cmd->add_option("--seed", seed)->capture_default_str();
  pool_cmd->add_option("--map", pool_data.map, "Phoneme map used for the collision filter");
  pool_cmd->add_option("--data", pool_data.data);
  pool_cmd->add_option("--out", out, "pool.tsv (default stdout)");

  // make-set
  auto* set_cmd = app.add_subcommand("make-set", "Synthetic Directions set");
  std::string pool_path;
  size_t n_utts = 200;
  set_cmd->add_option("--pool", pool_path, "pool.tsv (default: shipped pool)");
  set_cmd->add_option("--n", n_utts, "Number of utterances")->capture_default_str();
  set_cmd->add_option("--seed", seed)->capture_default_str();
  set_cmd->add_option("--data", pool_data.data);
  set_cmd->add_option("--out", out);

  // synth-emissions
  auto* synth_cmd = app.add_subcommand("synth-emissions", "Synthetic emissions for a set");
  std::string set_path, foreign_path;
  double noise = 0.2;
  DataOptions synth_data;
  synth_cmd->add_option("--set", set_path, "utt_id<TAB>transcript[<TAB>truth] lines")->required();
  synth_cmd->add_option("--foreign", foreign_path, "Words rendered as phonemes (default: truth column)");
  synth_cmd->add_option("--noise", noise)->capture_default_str();
  synth_cmd->add_option("--seed", seed)->capture_default_str();
  synth_cmd->add_option("--out", out)->required();
  synth_data.Register(synth_cmd, true);

  // run / sweep
  pb::ExperimentConfig exp;
  std::string exp_unit = "phoneme", n_list = "1,10,100,500,1000";
  bool json = false;
  std::string english_corpus;
  auto add_experiment_flags = [&](CLI::App* cmd) {
    cmd->add_option("--pool", pool_path, "pool.tsv (default: shipped pool)");
    cmd->add_option("--n-utts", n_utts)->capture_default_str();
    cmd->add_option("--unit", exp_unit, "none|phoneme|wordpiece|parallel")->capture_default_str();
    cmd->add_option("--noise", exp.noise)->capture_default_str();
    cmd->add_option("--bonus", exp.bonus)->capture_default_str();
    cmd->add_option("--lambda", exp.lambda)->capture_default_str();
    cmd->add_option("--beam", exp.beam)->capture_default_str();
    cmd->add_option("--seed", exp.seed)->capture_default_str();
    cmd->add_option("--threads", exp.threads, "0: all cores")->capture_default_str();
    cmd->add_option("--data", pool_data.data);
    cmd->add_option("--out", out);
    cmd->add_flag("--json", json, "JSON lines instead of TSV");
  };
  auto* run_cmd = app.add_subcommand("run", "One biasing experiment");
  add_experiment_flags(run_cmd);
  run_cmd->add_option("--n-bias", exp.n_bias)->capture_default_str();
  run_cmd->add_option("--english", english_corpus, "Use an English-only set from this corpus");
  run_cmd->add_flag("--empty-bias-list", exp.empty_bias_list, "Bias with an empty list");
  auto* sweep_cmd = app.add_subcommand("sweep", "WER against bias list size");
  add_experiment_flags(sweep_cmd);
  sweep_cmd->add_option("--n-list", n_list, "Comma-separated list sizes")->capture_default_str();

  // wer
  auto* wer_cmd = app.add_subcommand("wer", "Word error rate");
  std::string ref_text, hyp_text, ref_file, hyp_file;
  wer_cmd->add_option("--ref", ref_text, "Reference words");
  wer_cmd->add_option("--hyp", hyp_text, "Hypothesis words");
  wer_cmd->add_option("--ref-file", ref_file, "utt_id<TAB>transcript lines");
  wer_cmd->add_option("--hyp-file", hyp_file, "utt_id<TAB>transcript lines, e.g. decode output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (*sample) {
      sampler.Validate();
      auto l = Load(sample_data, false);
      const pb::Lexicon lexicon = pb::TrimLexicon(
          pb::LoadLexicon(sample_data.Or(sample_data.lexicon, "en/lexicon.tsv"), l->en)).lexicon;
      std::vector<std::string> ids;
      const auto transcripts = ReadTranscripts(corpus, &ids);
      pb::Rng rng(sampler.seed);
      std::string text;
      for (size_t i = 0; i < transcripts.size(); ++i) {
        const std::vector<pb::Label> labels = pb::SampleTargetSequence(
            transcripts[i], lexicon, *l->wordpieces, *l->units, sampler, rng);
        std::vector<std::string> symbols;
        for (pb::Label id : labels) symbols.push_back(l->units->Symbol(id));
        text += ids[i] + '\t' + pb::Join(symbols, " ") + '\n';
      }
      Emit(out, text);
    } else if (*bias_cmd) {
      auto l = Load(bias_data, true);
      const pb::BiasUnit unit = UnitOrThrow(unit_name);
      const std::vector<pb::Phrase> phrases = pb::LoadBiasList(phrases_path);
      if (unit == pb::BiasUnit::kGrapheme) {
        std::vector<std::string> graphemes;
        for (const std::string& w : pb::PhraseWords(phrases)) {
          for (std::string& g : pb::SplitCodePoints(w)) graphemes.push_back(std::move(g));
        }
        l->ctx.graphemes = std::make_shared<const pb::SymbolTable>(pb::MakeGraphemeTable(graphemes));
      }
      pb::BiasConfig config{unit, bonus, 1.0};
      const pb::ContextualFst c = pb::BuildContextualFst(phrases, config, l->ctx);
      pb::SaveWfst(c.fst, out);
      if (!isyms_out.empty()) pb::SaveSymbolTable(*l->ctx.TableFor(unit), isyms_out);
    } else if (*graph_cmd) {
      auto l = Load(graph_data, true);
      std::vector<std::string> words;
      for (const pb::Line& line : pb::ReadLines(bias_words_path)) {
        for (std::string& w : pb::SplitWhitespace(pb::NormalizeNfc(line.text))) words.push_back(std::move(w));
      }
      const pb::DecodingGraph g = pb::BuildDecodingGraph(words, l->ctx);
      pb::SaveWfst(g.fst, out);
      if (!isyms_out.empty()) pb::SaveSymbolTable(*l->units, isyms_out);
    } else if (*decode_cmd) {
      std::shared_ptr<const pb::SymbolTable> units;
      if (symbols_path.empty()) {
        units = Load(decode_data, false)->units;
      } else {
        units = std::make_shared<const pb::SymbolTable>(pb::LoadSymbolTable(symbols_path));
      }
      pb::DecodingGraph graph;
      graph.fst = pb::LoadWfst(graph_path);
      graph.fst.SortArcsByInput();
      graph.hub = graph.fst.Start();
      graph.units = units;
      pb::ContextualFst bias;
      pb::DecoderConfig dc;
      dc.beam_size = beam;
      dc.lambda = lambda;
      dc.finalize_partial = finalize_partial;
      if (!bias_path.empty()) {
        bias.fst = pb::LoadWfst(bias_path);
        bias.fst.SortArcsByInput();
        dc.bias = &bias;
      }
      bool failed = false;
      std::string text;
      for (const pb::EmissionSequence& em : pb::LoadEmissions(emissions_path, *units)) {
        try {
          const pb::DecodeResult r = pb::Decode(em, graph, dc);
          text += em.utt_id + '\t' + pb::Join(r.transcript, " ") + '\t' + pb::FormatDouble(r.cost) +
                  '\t' + (r.truncated ? "truncated" : "ok") + '\n';
        } catch (const pb::Error& e) {
          if (e.code() != pb::ErrorCode::kNoCompleteHypothesis) throw;
          failed = true;
          text += em.utt_id + "\t\tInfinity\tfailed\n";
        }
      }
      Emit(out, text);
      if (failed) return kExitDecode;
    } else if (*pool_cmd) {
      const auto en = std::make_shared<const pb::SymbolTable>(
          pb::LoadSymbolTable(pool_data.data + "/en/phonemes.tsv"));
      const pb::PhonemeMap map = pb::LoadPhonemeMap(pool_data.Or(pool_data.map, "fr_en_map.tsv"), en);
      Emit(out, pb::FormatPool(pb::GeneratePool(pool_size, map, seed)));
    } else if (*set_cmd) {
      const pb::DirectionsSet set =
          pb::MakeDirectionsSet(pool_data.Or(pool_path, "fr/pool.tsv"), n_utts, seed);
      Emit(out, pb::FormatSetTsv(set));
    } else if (*synth_cmd) {
      auto l = Load(synth_data, true);
      std::set<std::string> foreign;
      if (!foreign_path.empty()) {
        for (const pb::Line& line : pb::ReadLines(foreign_path)) foreign.insert(pb::NormalizeNfc(line.text));
      }
      std::vector<pb::EmissionSequence> ems;
      for (const pb::Line& line : pb::ReadLines(set_path)) {
        const std::vector<std::string> f = pb::SplitOn(line.text, '\t');
        if (f[0] == "utt_id") continue;
        if (f.size() < 2) throw pb::Error(pb::ErrorCode::kFormat, pb::Where(set_path, line) + "expected utt_id<TAB>words");
        std::set<std::string> utt_foreign = foreign;
        if (foreign_path.empty() && f.size() >= 3 && !f[2].empty()) utt_foreign.insert(pb::NormalizeNfc(f[2]));
        ems.push_back(pb::GenerateSyntheticEmissions(
            f[0], pb::SplitWhitespace(pb::NormalizeNfc(f[1])), utt_foreign, l->ctx,
            {noise, pb::DeriveSeed(seed, "emissions/" + f[0])}));
      }
      pb::SaveEmissions(ems, *l->units, out);
    } else if (*run_cmd || *sweep_cmd) {
      const pb::Resources res = pb::LoadResources(pool_data.data);
      exp.unit = UnitOrNone(exp_unit);
      pb::DirectionsSet set;
      if (!english_corpus.empty()) {
        set = pb::MakeEnglishSet(ReadTranscripts(english_corpus, nullptr), n_utts, exp.seed);
        set.pool = pb::LoadPool(pool_data.Or(pool_path, "fr/pool.tsv"));
      } else {
        set = pb::MakeDirectionsSet(pool_data.Or(pool_path, "fr/pool.tsv"), n_utts, exp.seed);
      }
      if (*run_cmd) {
        const pb::ExperimentResult r = pb::RunBiasExperiment(set, res, exp);
        Emit(out, json ? pb::FormatExperimentJson(r) : pb::FormatExperimentTsv(r));
        std::cerr << "wer\t" << pb::FormatDouble(r.wer) << "\terrors\t" << r.errors << "\tref_words\t"
                  << r.ref_words << '\n';
      } else {
        const auto rows = pb::DistractorSweep(set, res, ParseSizes(n_list), exp);
        Emit(out, json ? pb::FormatSweepJson(rows) : pb::FormatSweepTsv(rows));
      }
    } else if (*wer_cmd) {
      if (!ref_file.empty() || !hyp_file.empty()) {
        std::vector<std::string> ref_ids, hyp_ids;
        const auto refs = ReadTranscripts(ref_file, &ref_ids);
        std::map<std::string, std::vector<std::string>> hyps;
        for (const pb::Line& line : pb::ReadLines(hyp_file)) {
          const std::vector<std::string> f = pb::SplitOn(line.text, '\t');
          if (f[0] == "utt_id") continue;
          hyps[f[0]] = f.size() >= 2 ? pb::SplitWhitespace(pb::NormalizeNfc(f[1])) : std::vector<std::string>{};
        }
        size_t errors = 0, words = 0;
        for (size_t i = 0; i < refs.size(); ++i) {
          const pb::WerResult w = pb::Wer(refs[i], hyps[ref_ids[i]]);
          errors += w.distance;
          words += w.ref_words;
        }
        std::cout << "wer\t" << pb::FormatDouble(words ? double(errors) / double(words) : 0.0)
                  << "\terrors\t" << errors << "\tref_words\t" << words << '\n';
      } else {
        const auto ref = pb::SplitWhitespace(pb::NormalizeNfc(ref_text));
        const auto hyp = pb::SplitWhitespace(pb::NormalizeNfc(hyp_text));
        const pb::WerResult w = pb::Wer(ref, hyp);
        std::cout << pb::FormatDouble(w.value) << (w.degenerate ? "\tdegenerate" : "") << '\n';
      }
    }
  } catch (const pb::Error& e) {
    std::cerr << "phonebias: " << e.what() << '\n';
    if (pb::IsInputError(e.code())) return kExitInput;
    if (e.code() == pb::ErrorCode::kNoCompleteHypothesis) return kExitDecode;
    return 1;
  }
  return 0;
}
