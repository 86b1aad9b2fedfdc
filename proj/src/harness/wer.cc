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

#include "harness/wer.h"

#include <algorithm>
#include <numeric>
#include <vector>

#include "base/unicode.h"

namespace phonebias {

size_t EditDistance(std::span<const std::string> a, std::span<const std::string> b) {
  std::vector<size_t> row(b.size() + 1);
  std::iota(row.begin(), row.end(), size_t{0});
  for (size_t i = 1; i <= a.size(); ++i) {
    size_t diagonal = row[0];
    row[0] = i;
    for (size_t j = 1; j <= b.size(); ++j) {
      const size_t up = row[j];
      row[j] = std::min({row[j] + 1, row[j - 1] + 1, diagonal + (a[i - 1] == b[j - 1] ? 0 : 1)});
      diagonal = up;
    }
  }
  return row[b.size()];
}

namespace {

std::vector<std::string> Nfc(std::span<const std::string> words) {
  std::vector<std::string> out;
  out.reserve(words.size());
  for (const std::string& w : words) out.push_back(NormalizeNfc(w));
  return out;
}

}  // namespace

WerResult Wer(std::span<const std::string> ref, std::span<const std::string> hyp) {
  WerResult r;
  r.distance = EditDistance(Nfc(ref), Nfc(hyp));
  r.ref_words = ref.size();
  if (ref.empty()) {
    r.value = static_cast<double>(hyp.size());
    r.degenerate = !hyp.empty();
  } else {
    r.value = static_cast<double>(r.distance) / static_cast<double>(ref.size());
  }
  return r;
}

}  // namespace phonebias
