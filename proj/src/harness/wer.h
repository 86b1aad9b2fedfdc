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

#ifndef PHONEBIAS_HARNESS_WER_H_
#define PHONEBIAS_HARNESS_WER_H_

#include <cstddef>
#include <span>
#include <string>

namespace phonebias {

// Word-level Levenshtein distance with unit costs.
size_t EditDistance(std::span<const std::string> a, std::span<const std::string> b);

struct WerResult {
  size_t distance = 0;
  size_t ref_words = 0;
  double value = 0.0;
  // Empty reference with a non-empty hypothesis: value is the hypothesis
  // length.
  bool degenerate = false;
};

WerResult Wer(std::span<const std::string> ref, std::span<const std::string> hyp);

}  // namespace phonebias

#endif  // PHONEBIAS_HARNESS_WER_H_
