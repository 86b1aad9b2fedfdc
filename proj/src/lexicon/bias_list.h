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

#ifndef PHONEBIAS_LEXICON_BIAS_LIST_H_
#define PHONEBIAS_LEXICON_BIAS_LIST_H_

#include <string>
#include <vector>

namespace phonebias {

// A biasing phrase: one or more NFC words.
using Phrase = std::vector<std::string>;

// One phrase per line, words separated by whitespace.
std::vector<Phrase> LoadBiasList(const std::string& path);

// Distinct words over all phrases, in first-seen order.
std::vector<std::string> PhraseWords(const std::vector<Phrase>& phrases);

}  // namespace phonebias

#endif  // PHONEBIAS_LEXICON_BIAS_LIST_H_
