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

#include "subrec/error.hpp"

namespace subrec {

  char const* to_string(ErrorKind kind) noexcept {
    switch (kind) {
      case ErrorKind::syntax_error: return "SyntaxError";
      case ErrorKind::empty_image: return "EmptyImage";
      case ErrorKind::unknown_letter: return "UnknownLetter";
      case ErrorKind::duplicate_rule: return "DuplicateRule";
      case ErrorKind::io_error: return "IoError";
      case ErrorKind::invalid_argument: return "InvalidArgument";
      case ErrorKind::size_exceeded: return "SizeExceeded";
      case ErrorKind::not_primitive: return "NotPrimitive";
      case ErrorKind::no_seed: return "NoSeed";
      case ErrorKind::invalid_seed: return "InvalidSeed";
      case ErrorKind::out_of_window: return "OutOfWindow";
      case ErrorKind::level_unavailable: return "LevelUnavailable";
      case ErrorKind::window_too_small: return "WindowTooSmall";
      case ErrorKind::window_cap_exceeded: return "WindowCapExceeded";
      case ErrorKind::not_a_factor: return "NotAFactor";
      case ErrorKind::not_aperiodic: return "NotAperiodic";
      case ErrorKind::degenerate_width: return "DegenerateWidth";
      case ErrorKind::bad_parameters: return "BadParameters";
    }
    return "Error";
  }

  bool is_resource_error(ErrorKind kind) noexcept {
    return kind == ErrorKind::size_exceeded || kind == ErrorKind::window_cap_exceeded
           || kind == ErrorKind::window_too_small;
  }

}  // namespace subrec
