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

#ifndef PHONEBIAS_BASE_UNICODE_H_
#define PHONEBIAS_BASE_UNICODE_H_

#include <string>
#include <string_view>
#include <vector>

namespace phonebias {

bool IsValidUtf8(std::string_view text);

// NFC normalization. Throws Error(kFormat) on invalid UTF-8.
std::string NormalizeNfc(std::string_view text);

// Splits UTF-8 text into Unicode scalar values, each returned as its own
// UTF-8 string. The input is not normalized here.
std::vector<std::string> SplitCodePoints(std::string_view text);

// Lower-cases with the root locale (full case mapping), then NFC.
std::string ToLowerNfc(std::string_view text);

}  // namespace phonebias

#endif  // PHONEBIAS_BASE_UNICODE_H_
