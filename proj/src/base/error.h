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

#ifndef PHONEBIAS_BASE_ERROR_H_
#define PHONEBIAS_BASE_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace phonebias {

enum class ErrorCode {
  kIo,
  kFormat,
  kInvalidArgument,
  // lexicon-io
  kDuplicateSymbol,
  kMissingReserved,
  kUnknownSymbol,
  kBadFrequency,
  kDuplicateSource,
  kUnmappedPhoneme,
  // tokenization
  kUnsegmentableWord,
  kOutOfLexicon,
  // wfst
  kAlphabetMismatch,
  kUnsupportedArcKind,
  kDivergentEpsilonCycle,
  kNotAcyclic,
  kNotFunctional,
  kNotDeterministic,
  kEmptyLanguage,
  kTooManyPaths,
  kNoTransition,
  // bias / graph
  kEmptyPhrase,
  kExpansionFailure,
  kMalformedGraph,
  // decoder / harness
  kNoCompleteHypothesis,
  kEmptyPool,
};

std::string_view ErrorCodeName(ErrorCode code);

// All library failures are reported as Error; the code identifies the
// failure class independently of the message text.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// True for failures caused by malformed or inconsistent input files or
// arguments.
bool IsInputError(ErrorCode code);

}  // namespace phonebias

#endif  // PHONEBIAS_BASE_ERROR_H_
