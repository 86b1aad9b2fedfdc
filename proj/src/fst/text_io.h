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

#ifndef PHONEBIAS_FST_TEXT_IO_H_
#define PHONEBIAS_FST_TEXT_IO_H_

#include <string>
#include <string_view>

#include "fst/wfst.h"

namespace phonebias {

// Tab-separated text form. Arc lines are "src dst ilabel olabel cost",
// final lines "state cost", and a lone "state" declares a state with
// neither arcs nor final cost. Labels are integer ids. The start state's
// lines come first.
std::string FormatWfst(const Wfst& fst);
Wfst ParseWfst(std::string_view text, const std::string& source = "<string>");

Wfst LoadWfst(const std::string& path);
void SaveWfst(const Wfst& fst, const std::string& path);

}  // namespace phonebias

#endif  // PHONEBIAS_FST_TEXT_IO_H_
