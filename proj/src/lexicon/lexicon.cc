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

#include "lexicon/lexicon.h"

#include <algorithm>
#include <map>
#include <set>

#include "base/error.h"
#include "base/text.h"
#include "base/unicode.h"

namespace phonebias {

Lexicon::Lexicon(std::shared_ptr<const SymbolTable> phonemes, std::vector<LexiconEntry> entries)
    : phonemes_(std::move(phonemes)), entries_(std::move(entries)) {
  for (size_t i = 0; i < entries_.size(); ++i) {
    LexiconEntry& e = entries_[i];
    e.word = NormalizeNfc(e.word);
    for (Label p : e.pronunciation) {
      if (!phonemes_->Contains(p) || phonemes_->Kind(p) != SymbolKind::kPhoneme) {
        throw Error(ErrorCode::kUnknownSymbol,
                    "pronunciation of '" + e.word + "' uses non-phoneme id " + std::to_string(p));
      }
    }
    by_word_[e.word].push_back(i);
  }
}

std::vector<const LexiconEntry*> Lexicon::FindAll(std::string_view word) const {
  std::vector<const LexiconEntry*> out;
  auto it = by_word_.find(NormalizeNfc(word));
  if (it == by_word_.end()) return out;
  for (size_t i : it->second) out.push_back(&entries_[i]);
  return out;
}

const LexiconEntry* Lexicon::Find(std::string_view word) const {
  auto it = by_word_.find(NormalizeNfc(word));
  if (it == by_word_.end()) return nullptr;
  return &entries_[it->second.front()];
}

std::vector<std::string> Lexicon::Spell(const std::vector<Label>& pronunciation) const {
  std::vector<std::string> out;
  out.reserve(pronunciation.size());
  for (Label p : pronunciation) out.push_back(phonemes_->Symbol(p));
  return out;
}

Lexicon LoadLexicon(const std::string& path, std::shared_ptr<const SymbolTable> phonemes) {
  std::vector<LexiconEntry> entries;
  for (const Line& line : ReadLines(path)) {
    auto fields = SplitOn(line.text, '\t');
    if (fields.size() != 3) {
      throw Error(ErrorCode::kFormat, Where(path, line) + "expected word<TAB>frequency<TAB>phonemes");
    }
    LexiconEntry entry;
    entry.word = NormalizeNfc(fields[0]);
    if (entry.word.empty()) throw Error(ErrorCode::kFormat, Where(path, line) + "empty word");
    if (!ParseInt64(fields[1], &entry.frequency)) {
      throw Error(ErrorCode::kFormat, Where(path, line) + "bad frequency '" + fields[1] + "'");
    }
    if (entry.frequency < 0) {
      throw Error(ErrorCode::kBadFrequency, Where(path, line) + "negative frequency " + fields[1]);
    }
    auto phones = SplitWhitespace(fields[2]);
    if (phones.empty()) throw Error(ErrorCode::kFormat, Where(path, line) + "empty pronunciation");
    for (const std::string& p : phones) {
      auto id = phonemes->Find(p);
      if (!id || phonemes->Kind(*id) != SymbolKind::kPhoneme) {
        throw Error(ErrorCode::kUnknownSymbol, Where(path, line) + "unknown phoneme '" + p + "'");
      }
      entry.pronunciation.push_back(*id);
    }
    entries.push_back(std::move(entry));
  }
  return Lexicon(std::move(phonemes), std::move(entries));
}

TrimResult TrimLexicon(const Lexicon& lexicon) {
  std::map<std::string, size_t> rows_per_word;
  std::map<std::vector<Label>, std::set<std::string>> words_per_pron;
  for (const LexiconEntry& e : lexicon.entries()) {
    ++rows_per_word[e.word];
    words_per_pron[e.pronunciation].insert(e.word);
  }

  TrimReport report;
  std::set<std::string> dropped;
  for (const auto& [word, rows] : rows_per_word) {
    if (rows > 1) {
      report.variants.push_back(word);
      dropped.insert(word);
    }
  }
  for (const auto& [pron, words] : words_per_pron) {
    if (words.size() < 2) continue;
    for (const std::string& w : words) {
      if (dropped.insert(w).second) report.homophones.push_back(w);
    }
  }
  std::sort(report.homophones.begin(), report.homophones.end());

  std::vector<LexiconEntry> kept;
  for (const LexiconEntry& e : lexicon.entries()) {
    if (!dropped.count(e.word)) kept.push_back(e);
  }
  return {Lexicon(lexicon.phonemes_ptr(), std::move(kept)), std::move(report)};
}

}  // namespace phonebias
