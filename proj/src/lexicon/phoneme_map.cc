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

#include "lexicon/phoneme_map.h"

#include "base/error.h"
#include "base/text.h"

namespace phonebias {

PhonemeMap::PhonemeMap(std::shared_ptr<const SymbolTable> target,
                       std::map<std::string, std::vector<Label>, std::less<>> pairs)
    : target_(std::move(target)), pairs_(std::move(pairs)) {
  for (const auto& [src, tgt] : pairs_) {
    if (tgt.empty()) throw Error(ErrorCode::kFormat, "empty target for '" + src + "'");
    for (Label t : tgt) {
      if (!target_->Contains(t) || target_->Kind(t) != SymbolKind::kPhoneme) {
        throw Error(ErrorCode::kUnknownSymbol, "target id " + std::to_string(t) + " of '" + src +
                                                   "' is not a target phoneme");
      }
    }
  }
}

const std::vector<Label>* PhonemeMap::Find(std::string_view source) const {
  auto it = pairs_.find(source);
  return it == pairs_.end() ? nullptr : &it->second;
}

PhonemeMap LoadPhonemeMap(const std::string& path, std::shared_ptr<const SymbolTable> target) {
  std::map<std::string, std::vector<Label>, std::less<>> pairs;
  for (const Line& line : ReadLines(path)) {
    auto fields = SplitOn(line.text, '\t');
    if (fields.size() != 2 || fields[0].empty()) {
      throw Error(ErrorCode::kFormat, Where(path, line) + "expected src<TAB>tgt [tgt...]");
    }
    std::vector<Label> targets;
    for (const std::string& t : SplitWhitespace(fields[1])) {
      auto id = target->Find(t);
      if (!id || target->Kind(*id) != SymbolKind::kPhoneme) {
        throw Error(ErrorCode::kUnknownSymbol, Where(path, line) + "unknown target phoneme '" + t + "'");
      }
      targets.push_back(*id);
    }
    if (targets.empty()) throw Error(ErrorCode::kFormat, Where(path, line) + "empty target");
    if (!pairs.emplace(fields[0], std::move(targets)).second) {
      throw Error(ErrorCode::kDuplicateSource, Where(path, line) + "source '" + fields[0] + "' mapped twice");
    }
  }
  return PhonemeMap(std::move(target), std::move(pairs));
}

PhonemeMap IdentityPhonemeMap(std::shared_ptr<const SymbolTable> target) {
  std::map<std::string, std::vector<Label>, std::less<>> pairs;
  for (Label id : target->LabelsOfKind(SymbolKind::kPhoneme)) {
    pairs.emplace(target->Symbol(id), std::vector<Label>{id});
  }
  return PhonemeMap(std::move(target), std::move(pairs));
}

std::vector<Label> MapPhonemes(std::span<const std::string> source, const PhonemeMap& map) {
  std::vector<Label> out;
  for (const std::string& s : source) {
    const std::vector<Label>* tgt = map.Find(s);
    if (tgt == nullptr) throw Error(ErrorCode::kUnmappedPhoneme, "no mapping for phoneme '" + s + "'");
    out.insert(out.end(), tgt->begin(), tgt->end());
  }
  return out;
}

std::vector<Label> TargetPronunciation(const Lexicon& lexicon, const PhonemeMap* map,
                                       std::string_view word) {
  const LexiconEntry* entry = lexicon.Find(word);
  if (entry == nullptr) {
    throw Error(ErrorCode::kOutOfLexicon, "'" + std::string(word) + "' is not in the lexicon");
  }
  if (map == nullptr) return entry->pronunciation;
  return MapPhonemes(lexicon.Spell(entry->pronunciation), *map);
}

}  // namespace phonebias
