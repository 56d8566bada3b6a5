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

// Shared fixtures for the C++ tests.

#ifndef SUBREC_TESTS_HELPERS_HPP_
#define SUBREC_TESTS_HELPERS_HPP_

#include <string>
#include <vector>

#include "oracles.hpp"
#include "subrec/morphism.hpp"

namespace fixtures {

  inline subrec::Morphism make(oracle::Rules const& r) {
    return subrec::parse_morphism(oracle::text(r));
  }

  inline subrec::Morphism fib() {
    return make(oracle::FIB);
  }
  inline subrec::Morphism tm() {
    return make(oracle::TM);
  }
  inline subrec::Morphism trib() {
    return make(oracle::TRIB);
  }
  inline subrec::Morphism coll() {
    return make(oracle::COLL);
  }
  inline subrec::Morphism per() {
    return make(oracle::PER);
  }

  inline std::string str(subrec::Morphism const& sigma, subrec::WordView w) {
    return sigma.format(w);
  }

  inline subrec::Word word(subrec::Morphism const& sigma, std::string const& text) {
    return sigma.parse_word(text);
  }

  struct Named {
    char const*   name;
    oracle::Rules rules;
  };

  inline std::vector<Named> const& standard() {
    static std::vector<Named> const all{
        {"FIB", oracle::FIB}, {"TM", oracle::TM}, {"TRIB", oracle::TRIB}, {"COLL", oracle::COLL}};
    return all;
  }

}  // namespace fixtures

#endif  // SUBREC_TESTS_HELPERS_HPP_
