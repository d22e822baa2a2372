/*
  Copyright 2026 The stringy-hd Authors

  Licensed under the Apache License, Version 2.0 (the "License");
  you may not use this file except in compliance with the License.
  You may obtain a copy of the License at

  http://www.apache.org/licenses/LICENSE-2.0

  Unless required by applicable law or agreed to in writing, software
  distributed under the License is distributed on an "AS IS" BASIS,
  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
  See the License for the specific language governing permissions and
  limitations under the License.
*/

#ifndef STRINGY_ERROR_HPP
#define STRINGY_ERROR_HPP

#include <stdexcept>
#include <string>

namespace stringy {

enum class ErrorCode {
  invalid_argument = 1,
  parse = 2,
  unsupported = 3,
  insufficient_precision = 4,
  not_log_terminal = 5,
  guard_exceeded = 6,
  not_specializable = 7,
  not_polynomial = 8,
  not_stabilized = 9,
  non_generic = 10,
};

// All library failures are reported as Error; the C API maps code() onto
// stringy_status one-to-one.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class InsufficientPrecision : public Error {
 public:
  InsufficientPrecision(int required, const std::string& what)
      : Error(ErrorCode::insufficient_precision,
              what + " (required precision >= " + std::to_string(required) + ")"),
        required_(required) {}
  int required_precision() const noexcept { return required_; }

 private:
  int required_;
};

}  // namespace stringy

#endif  // STRINGY_ERROR_HPP
