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

#include "base/error.h"

namespace phonebias {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kIo: return "IoError";
    case ErrorCode::kFormat: return "FormatError";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kDuplicateSymbol: return "DuplicateSymbol";
    case ErrorCode::kMissingReserved: return "MissingReserved";
    case ErrorCode::kUnknownSymbol: return "UnknownSymbol";
    case ErrorCode::kBadFrequency: return "BadFrequency";
    case ErrorCode::kDuplicateSource: return "DuplicateSource";
    case ErrorCode::kUnmappedPhoneme: return "UnmappedPhoneme";
    case ErrorCode::kUnsegmentableWord: return "UnsegmentableWord";
    case ErrorCode::kOutOfLexicon: return "OutOfLexicon";
    case ErrorCode::kAlphabetMismatch: return "AlphabetMismatch";
    case ErrorCode::kUnsupportedArcKind: return "UnsupportedArcKind";
    case ErrorCode::kDivergentEpsilonCycle: return "DivergentEpsilonCycle";
    case ErrorCode::kNotAcyclic: return "NotAcyclic";
    case ErrorCode::kNotFunctional: return "NotFunctional";
    case ErrorCode::kNotDeterministic: return "NotDeterministic";
    case ErrorCode::kEmptyLanguage: return "EmptyLanguage";
    case ErrorCode::kTooManyPaths: return "TooManyPaths";
    case ErrorCode::kNoTransition: return "NoTransition";
    case ErrorCode::kEmptyPhrase: return "EmptyPhrase";
    case ErrorCode::kExpansionFailure: return "ExpansionFailure";
    case ErrorCode::kMalformedGraph: return "MalformedGraph";
    case ErrorCode::kNoCompleteHypothesis: return "NoCompleteHypothesis";
    case ErrorCode::kEmptyPool: return "EmptyPool";
  }
  return "Unknown";
}

bool IsInputError(ErrorCode code) {
  switch (code) {
    case ErrorCode::kIo:
    case ErrorCode::kFormat:
    case ErrorCode::kDuplicateSymbol:
    case ErrorCode::kMissingReserved:
    case ErrorCode::kUnknownSymbol:
    case ErrorCode::kBadFrequency:
    case ErrorCode::kDuplicateSource:
    case ErrorCode::kUnmappedPhoneme:
    case ErrorCode::kUnsegmentableWord:
    case ErrorCode::kOutOfLexicon:
    case ErrorCode::kAlphabetMismatch:
    case ErrorCode::kEmptyPhrase:
    case ErrorCode::kExpansionFailure:
    case ErrorCode::kEmptyPool:
    case ErrorCode::kInvalidArgument:
      return true;
    default:
      return false;
  }
}

}  // namespace phonebias
