// Copyright 2026 The QNQ Authors
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

#ifndef QNQ_ERROR_HPP
#define QNQ_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace qnq {

/// Failure classes. The CLI maps each one to a distinct exit code.
enum class ErrorKind {
  Usage,      // bad argument / precondition violated by the caller
  Range,      // numeric argument outside its domain
  Io,
  Format,     // malformed file or stream
  Capacity,   // id space or memory budget exhausted
  Integrity,  // internally inconsistent data (e.g. two colors under one id)
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace qnq

#endif  // QNQ_ERROR_HPP
