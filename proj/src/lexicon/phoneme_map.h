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

#ifndef PHONEBIAS_LEXICON_PHONEME_MAP_H_
#define PHONEBIAS_LEXICON_PHONEME_MAP_H_

#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lexicon/lexicon.h"
#include "lexicon/symbol_table.h"

namespace phonebias {

// Source-language phoneme -> non-empty target phoneme sequence. Targets
// are ids in the target (English) phoneme table.
class PhonemeMap {
 public:
  PhonemeMap(std::shared_ptr<const SymbolTable> target,
             std::map<std::string, std::vector<Label>, std::less<>> pairs);

  const SymbolTable& target() const { return *target_; }
  const std::map<std::string, std::vector<Label>, std::less<>>& pairs() const { return pairs_; }

  // nullptr if the source phoneme is not covered.
  const std::vector<Label>* Find(std::string_view source) const;

 private:
  std::shared_ptr<const SymbolTable> target_;
  std::map<std::string, std::vector<Label>, std::less<>> pairs_;
};

// Reads "src<TAB>tgt1 tgt2 ..." lines.
PhonemeMap LoadPhonemeMap(const std::string& path, std::shared_ptr<const SymbolTable> target);

// Maps every phoneme of `target` to itself.
PhonemeMap IdentityPhonemeMap(std::shared_ptr<const SymbolTable> target);

// Concatenation of per-symbol target sequences. Throws kUnmappedPhoneme
// naming the first uncovered symbol.
std::vector<Label> MapPhonemes(std::span<const std::string> source, const PhonemeMap& map);

// Pronunciation of `word` in the target phoneme table: the lexicon row
// itself when `map` is null (lexicon already bound to the target table),
// otherwise the row mapped symbol by symbol. Throws kOutOfLexicon or
// kUnmappedPhoneme.
std::vector<Label> TargetPronunciation(const Lexicon& lexicon, const PhonemeMap* map,
                                       std::string_view word);

}  // namespace phonebias

#endif  // PHONEBIAS_LEXICON_PHONEME_MAP_H_
