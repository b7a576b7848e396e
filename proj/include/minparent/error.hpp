// Copyright 2026 The minparent Authors
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

#ifndef MINPARENT_ERROR_HPP_
#define MINPARENT_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace minparent {

enum class ErrorCode {
  kInvalidArgument,
  kParse,
  kIo,
  kInfeasible,
  kBudgetExceeded,
};

// The single exception type thrown by the library. The C API maps `code()`
// onto its status enum.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void ThrowInvalidArgument(const std::string& message);

// Line numbers are 1-based; 0 means "no particular line".
[[noreturn]] void ThrowParse(int line, const std::string& message);

}  // namespace minparent

#endif  // MINPARENT_ERROR_HPP_
