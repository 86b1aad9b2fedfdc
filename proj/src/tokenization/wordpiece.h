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

#ifndef PHONEBIAS_TOKENIZATION_WORDPIECE_H_
#define PHONEBIAS_TOKENIZATION_WORDPIECE_H_

#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "lexicon/symbol_table.h"

namespace phonebias {

// Fixed wordpiece inventory. Pieces that may begin a word carry the "_"
// prefix; all others continue a word.
class WordpieceInventory {
 public:
  static constexpr std::string_view kWordStart = "_";

  explicit WordpieceInventory(std::vector<std::string> pieces);

  const std::vector<std::string>& pieces() const { return pieces_; }
  bool Contains(std::string_view piece) const { return set_.count(std::string(piece)) > 0; }

 private:
  friend std::vector<std::string> TokenizeWordpieces(std::string_view word,
                                                     const WordpieceInventory& inventory);
  std::vector<std::string> pieces_;
  std::unordered_set<std::string> set_;
  size_t max_code_points_ = 0;
};

// One piece per line.
WordpieceInventory LoadWordpieces(const std::string& path);

// Greedy longest-match, left to right, over code points of the NFC word.
// The first piece must be a "_" piece. Throws kUnsegmentableWord.
std::vector<std::string> TokenizeWordpieces(std::string_view word,
                                            const WordpieceInventory& inventory);

std::string_view StripWordStart(std::string_view piece);
bool IsWordStart(std::string_view piece);

// Tokenizes and resolves each piece in `units`.
std::vector<Label> WordpieceLabels(std::string_view word, const WordpieceInventory& inventory,
                                   const SymbolTable& units);

}  // namespace phonebias

#endif  // PHONEBIAS_TOKENIZATION_WORDPIECE_H_
