// Copyright 2026 The subrec Authors.
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

#ifndef SUBREC_ERROR_HPP_
#define SUBREC_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace subrec {

  enum class ErrorKind {
    syntax_error,
    empty_image,
    unknown_letter,
    duplicate_rule,
    io_error,
    invalid_argument,
    size_exceeded,
    not_primitive,
    no_seed,
    invalid_seed,
    out_of_window,
    level_unavailable,
    window_too_small,
    window_cap_exceeded,
    not_a_factor,
    not_aperiodic,
    degenerate_width,
    bad_parameters,
  };

  char const* to_string(ErrorKind kind) noexcept;

  // Input errors are the caller's fault (bad file, bad flag); resource errors
  // mean a configured cap would have been exceeded.
  bool is_resource_error(ErrorKind kind) noexcept;

  class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, std::string const& what)
        : std::runtime_error(what), _kind(kind) {}

    [[nodiscard]] ErrorKind kind() const noexcept {
      return _kind;
    }

   private:
    ErrorKind _kind;
  };

  class SyntaxError : public Error {
   public:
    SyntaxError(std::size_t line, std::size_t column, std::string const& msg)
        : Error(ErrorKind::syntax_error,
                "line " + std::to_string(line) + ", column "
                    + std::to_string(column) + ": " + msg),
          _line(line),
          _column(column) {}

    [[nodiscard]] std::size_t line() const noexcept {
      return _line;
    }
    [[nodiscard]] std::size_t column() const noexcept {
      return _column;
    }

   private:
    std::size_t _line;
    std::size_t _column;
  };

}  // namespace subrec

#endif  // SUBREC_ERROR_HPP_
