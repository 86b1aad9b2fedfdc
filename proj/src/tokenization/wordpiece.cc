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

#include "tokenization/wordpiece.h"

#include <algorithm>

#include "base/error.h"
#include "base/text.h"
#include "base/unicode.h"

namespace phonebias {

WordpieceInventory::WordpieceInventory(std::vector<std::string> pieces) {
  for (std::string& piece : pieces) {
    piece = NormalizeNfc(piece);
    if (piece.empty() || piece == kWordStart) {
      throw Error(ErrorCode::kFormat, "empty wordpiece");
    }
    if (!set_.insert(piece).second) {
      throw Error(ErrorCode::kDuplicateSymbol, "wordpiece '" + piece + "' listed twice");
    }
    max_code_points_ = std::max(max_code_points_, SplitCodePoints(piece).size());
  }
  pieces_ = std::move(pieces);
}

WordpieceInventory LoadWordpieces(const std::string& path) {
  std::vector<std::string> pieces;
  for (const Line& line : ReadLines(path)) {
    if (line.text.find_first_of(" \t") != std::string::npos) {
      throw Error(ErrorCode::kFormat, Where(path, line) + "whitespace in wordpiece");
    }
    pieces.push_back(line.text);
  }
  return WordpieceInventory(std::move(pieces));
}

std::string_view StripWordStart(std::string_view piece) {
  if (IsWordStart(piece)) piece.remove_prefix(WordpieceInventory::kWordStart.size());
  return piece;
}

bool IsWordStart(std::string_view piece) {
  return piece.size() > WordpieceInventory::kWordStart.size() &&
         piece.substr(0, WordpieceInventory::kWordStart.size()) == WordpieceInventory::kWordStart;
}

std::vector<std::string> TokenizeWordpieces(std::string_view word,
                                            const WordpieceInventory& inventory) {
  const std::vector<std::string> graphemes = SplitCodePoints(NormalizeNfc(word));
  if (graphemes.empty()) throw Error(ErrorCode::kUnsegmentableWord, "empty word");
  std::vector<std::string> out;
  size_t start = 0;
  while (start < graphemes.size()) {
    const size_t longest = std::min(graphemes.size(), start + inventory.max_code_points_);
    bool matched = false;
    for (size_t end = longest; end > start; --end) {
      std::string candidate = start == 0 ? std::string(WordpieceInventory::kWordStart) : "";
      for (size_t i = start; i < end; ++i) candidate += graphemes[i];
      if (inventory.set_.count(candidate)) {
        out.push_back(std::move(candidate));
        start = end;
        matched = true;
        break;
      }
    }
    if (!matched) {
      throw Error(ErrorCode::kUnsegmentableWord, "cannot segment '" + std::string(word) +
                                                     "' at '" + graphemes[start] + "'");
    }
  }
  return out;
}

std::vector<Label> WordpieceLabels(std::string_view word, const WordpieceInventory& inventory,
                                   const SymbolTable& units) {
  std::vector<Label> out;
  for (const std::string& piece : TokenizeWordpieces(word, inventory)) {
    out.push_back(units.Lookup(piece));
  }
  return out;
}

}  // namespace phonebias
