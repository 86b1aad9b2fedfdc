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

#include "harness/pool.h"

#include <algorithm>
#include <set>

#include "base/error.h"
#include "base/rng.h"
#include "base/text.h"
#include "base/unicode.h"

namespace phonebias {

namespace {

struct Spelled {
  const char* text;
  const char* pron;
};

constexpr Spelled kPlaces[] = {
    {"créteil", "k R e t E j"},        {"crèche", "k R E S"},
    {"paris", "p a R i"},              {"lyon", "l j o~"},
    {"marseille", "m a R s E j"},      {"toulouse", "t u l u z"},
    {"nice", "n i s"},                 {"nantes", "n a~ t"},
    {"strasbourg", "s t R a s b u R"}, {"montpellier", "m o~ p E l j e"},
    {"bordeaux", "b O R d o"},         {"lille", "l i l"},
    {"rennes", "R E n"},               {"reims", "R e~ s"},
    {"toulon", "t u l o~"},            {"grenoble", "g R @ n O b l"},
    {"dijon", "d i Z o~"},             {"angers", "a~ Z e"},
    {"nîmes", "n i m"},                {"villeurbanne", "v i l 9 R b a n"},
    {"limoges", "l i m o Z"},          {"tours", "t u R"},
    {"amiens", "a m j e~"},            {"perpignan", "p E R p i J a~"},
    {"metz", "m E s"},                 {"besançon", "b @ z a~ s o~"},
    {"orléans", "O R l e a~"},         {"rouen", "R w a~"},
    {"caen", "k a~"},                  {"nancy", "n a~ s i"},
    {"argenteuil", "a R Z a~ t 9 j"},  {"montreuil", "m o~ t R 9 j"},
    {"roubaix", "R u b E"},            {"tourcoing", "t u R k w e~"},
    {"avignon", "a v i J o~"},         {"poitiers", "p w a t j e"},
    {"versailles", "v E R s a j"},     {"pau", "p o"},
    {"calais", "k a l E"},             {"cannes", "k a n"},
    {"antibes", "a~ t i b"},           {"colmar", "k O l m a R"},
    {"chambéry", "S a~ b e R i"},      {"annecy", "a n s i"},
    {"bourges", "b u R Z"},            {"vannes", "v a n"},
    {"lorient", "l O R j a~"},         {"chartres", "S a R t R"},
    {"auxerre", "o s E R"},            {"beauvais", "b o v E"},
    {"champs-élysées", "S a~ z e l i z e"}, {"saint-denis", "s e~ d @ n i"},
    {"vincennes", "v e~ s E n"},       {"aubervilliers", "o b E R v i l j e"},
    {"évry", "e v R i"},               {"sète", "s E t"},
};

constexpr Spelled kOnsets[] = {
    {"b", "b"},   {"c", "k"},    {"d", "d"},    {"f", "f"},    {"g", "g"},   {"l", "l"},
    {"m", "m"},   {"n", "n"},    {"p", "p"},    {"r", "R"},    {"s", "s"},   {"t", "t"},
    {"v", "v"},   {"ch", "S"},   {"gr", "g R"}, {"br", "b R"}, {"tr", "t R"}, {"pl", "p l"},
    {"cl", "k l"}, {"fr", "f R"}, {"j", "Z"},
};

constexpr Spelled kVowels[] = {
    {"a", "a"},  {"ou", "u"},  {"i", "i"},  {"é", "e"},  {"o", "o"},   {"eu", "2"},
    {"u", "y"},  {"è", "E"},   {"an", "a~"}, {"on", "o~"}, {"in", "e~"}, {"ai", "E"},
};

constexpr Spelled kEndings[] = {
    {"", ""},        {"ac", "a k"},     {"ville", "v i l"}, {"court", "k u R"},
    {"mont", "m o~"}, {"bourg", "b u R"}, {"ières", "j E R"}, {"euil", "9 j"},
    {"y", "i"},
};

template <size_t N>
const Spelled& Pick(const Spelled (&table)[N], Rng& rng) {
  return table[UniformIndex(rng, N)];
}

bool IsPrefix(const std::vector<Label>& a, const std::vector<Label>& b) {
  return a.size() <= b.size() && std::equal(a.begin(), a.end(), b.begin());
}

class PoolBuilder {
 public:
  PoolBuilder(size_t size, const PhonemeMap& map) : size_(size), map_(map) {}

  bool full() const { return pool_.size() >= size_; }

  void Offer(const std::string& word, const std::string& pron) {
    if (full() || !words_.insert(word).second) return;
    std::vector<std::string> phones = SplitWhitespace(pron);
    std::vector<Label> mapped = MapPhonemes(phones, map_);
    for (const std::vector<Label>& other : mapped_) {
      if (IsPrefix(other, mapped) || IsPrefix(mapped, other)) return;
    }
    mapped_.push_back(std::move(mapped));
    pool_.push_back({word, std::move(phones)});
  }

  std::vector<PoolEntry> Take() { return std::move(pool_); }

 private:
  size_t size_;
  const PhonemeMap& map_;
  std::set<std::string> words_;
  std::vector<std::vector<Label>> mapped_;
  std::vector<PoolEntry> pool_;
};

}  // namespace

std::vector<PoolEntry> LoadPool(const std::string& path) {
  std::vector<PoolEntry> pool;
  std::set<std::string> seen;
  for (const Line& line : ReadLines(path)) {
    const std::vector<std::string> f = SplitOn(line.text, '\t');
    if (f.size() != 2) throw Error(ErrorCode::kFormat, Where(path, line) + "expected 2 fields");
    PoolEntry e{NormalizeNfc(f[0]), SplitWhitespace(f[1])};
    if (e.word.empty() || e.pronunciation.empty()) {
      throw Error(ErrorCode::kFormat, Where(path, line) + "empty word or pronunciation");
    }
    if (!seen.insert(e.word).second) {
      throw Error(ErrorCode::kFormat, Where(path, line) + "repeated word " + e.word);
    }
    pool.push_back(std::move(e));
  }
  return pool;
}

std::string FormatPool(const std::vector<PoolEntry>& pool) {
  std::string out;
  for (const PoolEntry& e : pool) out += e.word + '\t' + Join(e.pronunciation, " ") + '\n';
  return out;
}

Lexicon PoolLexicon(const std::vector<PoolEntry>& pool, std::shared_ptr<const SymbolTable> phonemes) {
  std::vector<LexiconEntry> entries;
  entries.reserve(pool.size());
  for (const PoolEntry& e : pool) {
    LexiconEntry row{e.word, 1, {}};
    for (const std::string& p : e.pronunciation) row.pronunciation.push_back(phonemes->Lookup(p));
    entries.push_back(std::move(row));
  }
  return Lexicon(std::move(phonemes), std::move(entries));
}

std::vector<PoolEntry> GeneratePool(size_t size, const PhonemeMap& map, uint64_t seed) {
  PoolBuilder builder(size, map);
  for (const Spelled& place : kPlaces) builder.Offer(place.text, place.pron);
  Rng rng(seed);
  // The name space is far larger than any requested size; the cap only
  // guards against a map that collapses it.
  for (size_t attempts = 0; !builder.full() && attempts < 1000 * (size + 1); ++attempts) {
    std::string word, pron;
    const size_t syllables = 1 + UniformIndex(rng, 2);
    for (size_t i = 0; i < syllables; ++i) {
      const Spelled& onset = Pick(kOnsets, rng);
      const Spelled& vowel = Pick(kVowels, rng);
      word += std::string(onset.text) + vowel.text;
      pron += std::string(pron.empty() ? "" : " ") + onset.pron + " " + vowel.pron;
    }
    const Spelled& ending = Pick(kEndings, rng);
    word += ending.text;
    if (*ending.pron) pron += std::string(" ") + ending.pron;
    builder.Offer(NormalizeNfc(word), pron);
  }
  std::vector<PoolEntry> pool = builder.Take();
  if (pool.size() < size) {
    throw Error(ErrorCode::kInvalidArgument, "could only generate " + std::to_string(pool.size()) +
                                                 " distinct pool entries");
  }
  return pool;
}

}  // namespace phonebias
