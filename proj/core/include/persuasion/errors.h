// Copyright 2026 The voting-persuasion Authors
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

#ifndef PERSUASION_ERRORS_H_
#define PERSUASION_ERRORS_H_

#include <stdexcept>
#include <string>

namespace persuasion {

// Broad failure classes. The command-line tool maps each one to a distinct
// process exit code.
enum class ErrorCode {
  kInvalidArgument,
  kDimensionMismatch,
  kSizeGuard,
  kPrecondition,
  kParse,
  kIo,
  kSolverFailure,
};

const char* ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace persuasion

#endif  // PERSUASION_ERRORS_H_
