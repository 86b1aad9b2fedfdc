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

#include "lexicon/symbol_table.h"

#include <algorithm>
#include <sstream>

#include "base/error.h"
#include "base/text.h"

namespace phonebias {

std::string_view SymbolKindName(SymbolKind kind) {
  switch (kind) {
    case SymbolKind::kPhoneme: return "phoneme";
    case SymbolKind::kWordpiece: return "wordpiece";
    case SymbolKind::kGrapheme: return "grapheme";
    case SymbolKind::kWord: return "word";
    case SymbolKind::kSpecial: return "special";
  }
  return "special";
}

std::optional<SymbolKind> ParseSymbolKind(std::string_view name) {
  if (name == "phoneme") return SymbolKind::kPhoneme;
  if (name == "wordpiece") return SymbolKind::kWordpiece;
  if (name == "grapheme") return SymbolKind::kGrapheme;
  if (name == "word") return SymbolKind::kWord;
  if (name == "special") return SymbolKind::kSpecial;
  return std::nullopt;
}

bool IsXsampaToken(std::string_view symbol) {
  if (symbol.empty()) return false;
  return std::all_of(symbol.begin(), symbol.end(), [](char c) {
    return c >= 0x21 && c <= 0x7e;
  });
}

namespace {

void ValidateToken(std::string_view symbol, SymbolKind kind) {
  if (symbol.empty()) throw Error(ErrorCode::kFormat, "empty symbol");
  for (char c : symbol) {
    if (c == '\t' || c == '\n' || c == '\r' || c == ' ') {
      throw Error(ErrorCode::kFormat, "whitespace in symbol '" + std::string(symbol) + "'");
    }
  }
  if (kind == SymbolKind::kPhoneme && !IsXsampaToken(symbol)) {
    throw Error(ErrorCode::kFormat, "'" + std::string(symbol) + "' is not an X-SAMPA token");
  }
}

}  // namespace

SymbolTable::SymbolTable() {
  Add(std::string(kEpsilonSymbol), SymbolKind::kSpecial);
  Add(std::string(kFailureSymbol), SymbolKind::kSpecial);
  eow_ = Add(std::string(kEowSymbol), SymbolKind::kSpecial);
}

Label SymbolTable::Add(std::string symbol, SymbolKind kind) {
  ValidateToken(symbol, kind);
  if (index_.count(symbol)) {
    throw Error(ErrorCode::kDuplicateSymbol, "symbol '" + symbol + "' already present");
  }
  const Label id = static_cast<Label>(symbols_.size());
  index_.emplace(symbol, id);
  symbols_.push_back(std::move(symbol));
  kinds_.push_back(kind);
  return id;
}

std::optional<Label> SymbolTable::Find(std::string_view symbol) const {
  auto it = index_.find(std::string(symbol));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Label SymbolTable::Lookup(std::string_view symbol) const {
  auto id = Find(symbol);
  if (!id) throw Error(ErrorCode::kUnknownSymbol, "unknown symbol '" + std::string(symbol) + "'");
  return *id;
}

const std::string& SymbolTable::Symbol(Label id) const {
  if (!Contains(id)) {
    throw Error(ErrorCode::kUnknownSymbol, "no symbol with id " + std::to_string(id));
  }
  return symbols_[id];
}

SymbolKind SymbolTable::Kind(Label id) const {
  if (!Contains(id)) {
    throw Error(ErrorCode::kUnknownSymbol, "no symbol with id " + std::to_string(id));
  }
  return kinds_[id];
}

std::vector<Label> SymbolTable::LabelsOfKind(SymbolKind kind) const {
  std::vector<Label> out;
  for (size_t i = 0; i < kinds_.size(); ++i) {
    if (kinds_[i] == kind) out.push_back(static_cast<Label>(i));
  }
  return out;
}

SymbolTable LoadSymbolTable(const std::string& path) {
  struct Row {
    std::string symbol;
    int64_t id;
    SymbolKind kind;
  };
  std::vector<Row> rows;
  for (const Line& line : ReadLines(path)) {
    auto fields = SplitOn(line.text, '\t');
    if (fields.size() != 3) {
      throw Error(ErrorCode::kFormat, Where(path, line) + "expected symbol<TAB>id<TAB>kind");
    }
    Row row;
    row.symbol = fields[0];
    if (!ParseInt64(fields[1], &row.id) || row.id < 0) {
      throw Error(ErrorCode::kFormat, Where(path, line) + "bad id '" + fields[1] + "'");
    }
    auto kind = ParseSymbolKind(fields[2]);
    if (!kind) throw Error(ErrorCode::kFormat, Where(path, line) + "bad kind '" + fields[2] + "'");
    row.kind = *kind;
    try {
      ValidateToken(row.symbol, row.kind);
    } catch (const Error& e) {
      throw Error(e.code(), Where(path, line) + e.what());
    }
    rows.push_back(std::move(row));
  }

  std::vector<const Row*> by_id(rows.size(), nullptr);
  std::unordered_map<std::string, int64_t> seen;
  for (const Row& row : rows) {
    if (!seen.emplace(row.symbol, row.id).second) {
      throw Error(ErrorCode::kDuplicateSymbol, path + ": symbol '" + row.symbol + "' listed twice");
    }
    if (row.id >= static_cast<int64_t>(rows.size())) {
      throw Error(ErrorCode::kFormat, path + ": ids are not dense (id " +
                                          std::to_string(row.id) + ")");
    }
    if (by_id[row.id] != nullptr) {
      throw Error(ErrorCode::kDuplicateSymbol, path + ": id " + std::to_string(row.id) + " listed twice");
    }
    by_id[row.id] = &row;
  }

  auto require = [&](std::string_view symbol, std::optional<int64_t> id) {
    auto it = seen.find(std::string(symbol));
    if (it == seen.end() || (id && it->second != *id) ||
        by_id[it->second]->kind != SymbolKind::kSpecial) {
      std::string msg = path + ": reserved symbol " + std::string(symbol);
      if (id) msg += " must have id " + std::to_string(*id);
      throw Error(ErrorCode::kMissingReserved, msg + " and kind special");
    }
  };
  require(SymbolTable::kEpsilonSymbol, 0);
  require(SymbolTable::kFailureSymbol, 1);
  require(SymbolTable::kEowSymbol, std::nullopt);

  SymbolTable table;
  table.symbols_.clear();
  table.kinds_.clear();
  table.index_.clear();
  for (const Row* row : by_id) {
    table.index_.emplace(row->symbol, static_cast<Label>(table.symbols_.size()));
    table.symbols_.push_back(row->symbol);
    table.kinds_.push_back(row->kind);
  }
  table.eow_ = *table.Find(SymbolTable::kEowSymbol);
  return table;
}

std::string FormatSymbolTable(const SymbolTable& table) {
  std::ostringstream os;
  for (size_t i = 0; i < table.size(); ++i) {
    const Label id = static_cast<Label>(i);
    os << table.Symbol(id) << '\t' << id << '\t' << SymbolKindName(table.Kind(id)) << '\n';
  }
  return os.str();
}

void SaveSymbolTable(const SymbolTable& table, const std::string& path) {
  WriteFile(path, FormatSymbolTable(table));
}

std::string PhonemeUnitSymbol(std::string_view phoneme) {
  std::string out = "/";
  out += phoneme;
  out += '/';
  return out;
}

SymbolTable MakeUnitTable(const SymbolTable& phonemes, const std::vector<std::string>& wordpieces) {
  SymbolTable units;
  for (size_t i = 0; i < phonemes.size(); ++i) {
    const Label id = static_cast<Label>(i);
    const SymbolKind kind = phonemes.Kind(id);
    if (id <= kFailure) continue;
    if (kind == SymbolKind::kSpecial) {
      if (phonemes.Symbol(id) == SymbolTable::kEowSymbol) {
        if (id != units.eow()) {
          // Keep ids aligned: <eow> must sit at the same position.
          throw Error(ErrorCode::kFormat, "phoneme table must place <eow> at id 2");
        }
        continue;
      }
      units.Add(phonemes.Symbol(id), kind);
    } else if (kind == SymbolKind::kPhoneme) {
      units.Add(PhonemeUnitSymbol(phonemes.Symbol(id)), kind);
    } else {
      throw Error(ErrorCode::kFormat,
                  "phoneme table contains non-phoneme symbol '" + phonemes.Symbol(id) + "'");
    }
  }
  for (const std::string& piece : wordpieces) units.Add(piece, SymbolKind::kWordpiece);
  return units;
}

SymbolTable MakeGraphemeTable(const std::vector<std::string>& graphemes) {
  SymbolTable table;
  for (const std::string& g : graphemes) {
    if (!table.Find(g)) table.Add(g, SymbolKind::kGrapheme);
  }
  return table;
}

SymbolTable MakeWordTable(const std::vector<std::string>& words) {
  SymbolTable table;
  for (const std::string& w : words) {
    if (!table.Find(w)) table.Add(w, SymbolKind::kWord);
  }
  return table;
}

}  // namespace phonebias
