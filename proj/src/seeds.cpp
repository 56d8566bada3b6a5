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

#include "subrec/seeds.hpp"

#include "subrec/error.hpp"
#include "subrec/language.hpp"
#include "subrec/matrix.hpp"

namespace subrec {

  namespace {

    // a ↦ first (or last) letter of σ^e(a).
    std::vector<Letter> end_letter_map(Morphism const& sigma, unsigned e, bool first) {
      std::vector<Letter> step(sigma.size());
      for (Letter a = 0; a < sigma.size(); ++a) {
        step[a] = first ? sigma.image(a).front() : sigma.image(a).back();
      }
      std::vector<Letter> out(sigma.size());
      for (Letter a = 0; a < sigma.size(); ++a) {
        Letter b = a;
        for (unsigned i = 0; i < e; ++i) {
          b = step[b];
        }
        out[a] = b;
      }
      return out;
    }

  }  // namespace

  unsigned default_seed_power_cap(Morphism const& sigma) noexcept {
    return static_cast<unsigned>(2 * sigma.size() * sigma.size());
  }

  SeedSearch admissible_seeds(Morphism const& sigma, unsigned max_power) {
    if (!is_primitive(sigma).primitive) {
      throw Error(ErrorKind::not_primitive, "admissible_seeds: the morphism is not primitive");
    }
    SeedSearch out;
    out.max_power = max_power == 0 ? default_seed_power_cap(sigma) : max_power;
    if (sigma.widest() == 1) {
      // Images never grow, so no two-sided fixed point has infinite halves.
      out.cap_hit = true;
      return out;
    }
    Language const language(sigma, 2);
    for (unsigned e = 1; e <= out.max_power; ++e) {
      auto const first = end_letter_map(sigma, e, true);
      auto const last  = end_letter_map(sigma, e, false);
      for (Letter a = 0; a < sigma.size(); ++a) {
        if (last[a] != a) {
          continue;
        }
        for (Letter b = 0; b < sigma.size(); ++b) {
          Letter const pair[2] = {a, b};
          if (first[b] == b && language.contains(WordView(pair))) {
            out.seeds.push_back({e, a, b});
          }
        }
      }
      if (!out.seeds.empty()) {
        out.power = e;
        return out;
      }
    }
    out.cap_hit = true;
    return out;
  }

  bool is_valid_seed(Morphism const& sigma, FixedPointSeed const& seed, Language const& language) {
    if (seed.power == 0 || seed.left >= sigma.size() || seed.right >= sigma.size()
        || sigma.widest() == 1) {
      return false;
    }
    Letter const pair[2] = {seed.left, seed.right};
    return end_letter_map(sigma, seed.power, false)[seed.left] == seed.left
           && end_letter_map(sigma, seed.power, true)[seed.right] == seed.right
           && language.contains(WordView(pair));
  }

  bool is_valid_seed(Morphism const& sigma, FixedPointSeed const& seed) {
    return is_valid_seed(sigma, seed, Language(sigma, 2));
  }

}  // namespace subrec
