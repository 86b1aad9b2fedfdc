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

#ifndef PHONEBIAS_LEXICON_LEXICON_H_
#define PHONEBIAS_LEXICON_LEXICON_H_

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "lexicon/symbol_table.h"

namespace phonebias {

struct LexiconEntry {
  std::string word;  // NFC
  int64_t frequency = 0;
  std::vector<Label> pronunciation;  // ids in the bound phoneme table
};

// Pronunciation lexicon bound to a phoneme table. An untrimmed lexicon may
// list a word more than once (variants, homographs).
class Lexicon {
 public:
  Lexicon(std::shared_ptr<const SymbolTable> phonemes, std::vector<LexiconEntry> entries);

  const SymbolTable& phonemes() const { return *phonemes_; }
  const std::shared_ptr<const SymbolTable>& phonemes_ptr() const { return phonemes_; }

  const std::vector<LexiconEntry>& entries() const { return entries_; }
  size_t size() const { return entries_.size(); }

  // All rows for a word, in file order. The word is NFC-normalized first.
  std::vector<const LexiconEntry*> FindAll(std::string_view word) const;
  // First row for a word, or nullptr.
  const LexiconEntry* Find(std::string_view word) const;
  bool Contains(std::string_view word) const { return Find(word) != nullptr; }

  // Pronunciation rendered as phoneme strings.
  std::vector<std::string> Spell(const std::vector<Label>& pronunciation) const;

 private:
  std::shared_ptr<const SymbolTable> phonemes_;
  std::vector<LexiconEntry> entries_;
  std::unordered_map<std::string, std::vector<size_t>> by_word_;
};

// Reads "word<TAB>frequency<TAB>phonemes" lines. Phonemes must be of kind
// phoneme in `phonemes`.
Lexicon LoadLexicon(const std::string& path, std::shared_ptr<const SymbolTable> phonemes);

struct TrimReport {
  std::vector<std::string> homophones;  // removed: pronunciation shared with another word
  std::vector<std::string> variants;    // removed: more than one row
};

struct TrimResult {
  Lexicon lexicon;
  TrimReport report;
};

// Keeps only words that map to exactly one pronunciation which no other
// word shares. Collision groups are dropped whole.
TrimResult TrimLexicon(const Lexicon& lexicon);

}  // namespace phonebias

#endif  // PHONEBIAS_LEXICON_LEXICON_H_
