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

#include "fst/text_io.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "base/error.h"
#include "base/text.h"

namespace phonebias {

namespace {

void FormatState(const Wfst& fst, StateId s, std::string* out) {
  const std::string src = std::to_string(s);
  for (const Arc& a : fst.Arcs(s)) {
    *out += src + '\t' + std::to_string(a.nextstate) + '\t' + std::to_string(a.ilabel) + '\t' +
            std::to_string(a.olabel) + '\t' + FormatDouble(a.weight) + '\n';
  }
  if (fst.IsFinal(s)) {
    *out += src + '\t' + FormatDouble(fst.Final(s)) + '\n';
  } else if (fst.Arcs(s).empty()) {
    *out += src + '\n';
  }
}

}  // namespace

std::string FormatWfst(const Wfst& fst) {
  std::string out;
  if (fst.Start() == kNoState) return out;
  FormatState(fst, fst.Start(), &out);
  for (StateId s = 0; s < static_cast<StateId>(fst.NumStates()); ++s) {
    if (s != fst.Start()) FormatState(fst, s, &out);
  }
  return out;
}

Wfst ParseWfst(std::string_view text, const std::string& source) {
  Wfst fst;
  auto ensure = [&](int64_t s) {
    while (static_cast<int64_t>(fst.NumStates()) <= s) fst.AddState();
  };
  size_t number = 0;
  size_t begin = 0;
  while (begin < text.size()) {
    size_t end = text.find('\n', begin);
    if (end == std::string_view::npos) end = text.size();
    Line line{++number, std::string(text.substr(begin, end - begin))};
    begin = end + 1;
    if (!line.text.empty() && line.text.back() == '\r') line.text.pop_back();
    if (line.text.empty()) continue;

    const std::vector<std::string> f = SplitOn(line.text, '\t');
    int64_t src = 0;
    auto fail = [&](const std::string& what) {
      return Error(ErrorCode::kFormat, Where(source, line) + what);
    };
    if (!ParseInt64(f[0], &src) || src < 0 || src > INT32_MAX) throw fail("bad state id");
    ensure(src);
    if (fst.Start() == kNoState) fst.SetStart(static_cast<StateId>(src));
    if (f.size() == 1) continue;
    if (f.size() == 2) {
      double cost = 0.0;
      if (!ParseDouble(f[1], &cost)) throw fail("bad final cost");
      fst.SetFinal(static_cast<StateId>(src), cost);
      continue;
    }
    if (f.size() != 5) throw fail("expected 1, 2 or 5 fields");
    int64_t dst = 0, ilabel = 0, olabel = 0;
    double cost = 0.0;
    if (!ParseInt64(f[1], &dst) || dst < 0 || dst > INT32_MAX) throw fail("bad state id");
    if (!ParseInt64(f[2], &ilabel) || ilabel < 0 || ilabel > INT32_MAX) throw fail("bad label");
    if (!ParseInt64(f[3], &olabel) || olabel < 0 || olabel > INT32_MAX) throw fail("bad label");
    if (!ParseDouble(f[4], &cost)) throw fail("bad cost");
    ensure(dst);
    fst.AddArc(static_cast<StateId>(src), {static_cast<Label>(ilabel), static_cast<Label>(olabel),
                                           cost, static_cast<StateId>(dst)});
  }
  return fst;
}

Wfst LoadWfst(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseWfst(buffer.str(), path);
}

void SaveWfst(const Wfst& fst, const std::string& path) { WriteFile(path, FormatWfst(fst)); }

}  // namespace phonebias
