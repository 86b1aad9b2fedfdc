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

#include "lexicon/bias_list.h"

#include <unordered_set>

#include "base/text.h"
#include "base/unicode.h"

namespace phonebias {

std::vector<Phrase> LoadBiasList(const std::string& path) {
  std::vector<Phrase> phrases;
  for (const Line& line : ReadLines(path)) {
    Phrase phrase = SplitWhitespace(NormalizeNfc(line.text));
    if (!phrase.empty()) phrases.push_back(std::move(phrase));
  }
  return phrases;
}

std::vector<std::string> PhraseWords(const std::vector<Phrase>& phrases) {
  std::vector<std::string> words;
  std::unordered_set<std::string> seen;
  for (const Phrase& p : phrases) {
    for (const std::string& w : p) {
      if (seen.insert(w).second) words.push_back(w);
    }
  }
  return words;
}

}  // namespace phonebias
