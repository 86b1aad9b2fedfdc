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

#ifndef PHONEBIAS_LEXICON_SYMBOL_TABLE_H_
#define PHONEBIAS_LEXICON_SYMBOL_TABLE_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace phonebias {

using Label = int32_t;

constexpr Label kEpsilon = 0;
constexpr Label kFailure = 1;

enum class SymbolKind { kPhoneme, kWordpiece, kGrapheme, kWord, kSpecial };

std::string_view SymbolKindName(SymbolKind kind);
std::optional<SymbolKind> ParseSymbolKind(std::string_view name);

// Bijection between symbol strings and dense ids 0..N-1. Every table
// starts with the reserved entries <eps>=0 and <phi>=1 and contains <eow>.
class SymbolTable {
 public:
  static constexpr std::string_view kEpsilonSymbol = "<eps>";
  static constexpr std::string_view kFailureSymbol = "<phi>";
  static constexpr std::string_view kEowSymbol = "<eow>";

  // A table holding only <eps>, <phi> and <eow> (ids 0, 1, 2).
  SymbolTable();

  // Appends a symbol with the next free id. Throws kDuplicateSymbol, or
  // kFormat if the symbol is not a valid token for its kind.
  Label Add(std::string symbol, SymbolKind kind);

  size_t size() const { return symbols_.size(); }
  bool Contains(Label id) const { return id >= 0 && static_cast<size_t>(id) < symbols_.size(); }

  std::optional<Label> Find(std::string_view symbol) const;
  // Throws kUnknownSymbol.
  Label Lookup(std::string_view symbol) const;

  const std::string& Symbol(Label id) const;
  SymbolKind Kind(Label id) const;
  Label eow() const { return eow_; }

  std::vector<Label> LabelsOfKind(SymbolKind kind) const;

  bool operator==(const SymbolTable& other) const {
    return symbols_ == other.symbols_ && kinds_ == other.kinds_;
  }

 private:
  friend SymbolTable LoadSymbolTable(const std::string& path);

  std::vector<std::string> symbols_;
  std::vector<SymbolKind> kinds_;
  std::unordered_map<std::string, Label> index_;
  Label eow_ = -1;
};

// Reads "symbol<TAB>id<TAB>kind" lines.
SymbolTable LoadSymbolTable(const std::string& path);

// Canonical text form: one line per id in increasing order.
std::string FormatSymbolTable(const SymbolTable& table);
void SaveSymbolTable(const SymbolTable& table, const std::string& path);

// X-SAMPA tokens are printable ASCII without whitespace.
bool IsXsampaToken(std::string_view symbol);

// How a phoneme is spelled inside a unit table, where phonemes share the
// namespace with wordpieces ("k" is both a phoneme and a wordpiece).
std::string PhonemeUnitSymbol(std::string_view phoneme);

// The recognizer's output alphabet: the phoneme table's ids are kept
// unchanged (so pronunciations index both tables) with phonemes respelled
// by PhonemeUnitSymbol, followed by one wordpiece entry per piece.
SymbolTable MakeUnitTable(const SymbolTable& phonemes,
                          const std::vector<std::string>& wordpieces);

// Reserved entries plus one grapheme entry per distinct code point, in
// the given order.
SymbolTable MakeGraphemeTable(const std::vector<std::string>& graphemes);

// Reserved entries plus one word entry per distinct word.
SymbolTable MakeWordTable(const std::vector<std::string>& words);

}  // namespace phonebias

#endif  // PHONEBIAS_LEXICON_SYMBOL_TABLE_H_
