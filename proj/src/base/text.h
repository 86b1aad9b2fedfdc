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

#ifndef PHONEBIAS_BASE_TEXT_H_
#define PHONEBIAS_BASE_TEXT_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace phonebias {

// A line of an input file, with its 1-based line number for diagnostics.
struct Line {
  size_t number = 0;
  std::string text;
};

// Reads a UTF-8 text file. Blank lines are dropped; a trailing '\r' is
// stripped. Throws Error(kIo) if the file cannot be opened.
std::vector<Line> ReadLines(const std::string& path);

void WriteFile(const std::string& path, std::string_view contents);

std::vector<std::string> SplitOn(std::string_view text, char delimiter);

// Splits on runs of ASCII whitespace; no empty fields.
std::vector<std::string> SplitWhitespace(std::string_view text);

std::string Join(const std::vector<std::string>& parts, std::string_view sep);

// Shortest decimal representation that round-trips.
std::string FormatDouble(double value);

// Strict parsers: the whole field must be consumed.
bool ParseInt64(std::string_view text, int64_t* out);
bool ParseDouble(std::string_view text, double* out);

// Location prefix "path:line: " for error messages.
std::string Where(const std::string& path, const Line& line);

}  // namespace phonebias

#endif  // PHONEBIAS_BASE_TEXT_H_
