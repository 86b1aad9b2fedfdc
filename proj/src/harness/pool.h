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

#ifndef PHONEBIAS_HARNESS_POOL_H_
#define PHONEBIAS_HARNESS_POOL_H_

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "lexicon/lexicon.h"
#include "lexicon/phoneme_map.h"

namespace phonebias {

struct PoolEntry {
  std::string word;                        // NFC
  std::vector<std::string> pronunciation;  // source-language phonemes
};

// "word<TAB>source-pron" lines. Throws kFormat on malformed or repeated
// words.
std::vector<PoolEntry> LoadPool(const std::string& path);
std::string FormatPool(const std::vector<PoolEntry>& pool);

// Lexicon over the pool words in the source phoneme table, frequency 1.
Lexicon PoolLexicon(const std::vector<PoolEntry>& pool, std::shared_ptr<const SymbolTable> phonemes);

// Curated place names followed by generated pseudo-names, `size` in
// total. Entries whose mapped pronunciation equals, extends or is
// extended by an earlier entry's are skipped, so the result decodes
// without homophones or prefix collisions.
std::vector<PoolEntry> GeneratePool(size_t size, const PhonemeMap& map, uint64_t seed);

}  // namespace phonebias

#endif  // PHONEBIAS_HARNESS_POOL_H_
