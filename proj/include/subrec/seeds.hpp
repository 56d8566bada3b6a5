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

// Seeds of admissible two-sided fixed points σ^ω(a·b).

#ifndef SUBREC_SEEDS_HPP_
#define SUBREC_SEEDS_HPP_

#include <compare>
#include <vector>

#include "subrec/morphism.hpp"

namespace subrec {

  class Language;

  // σ^power(left) ends with left, σ^power(right) starts with right and
  // left·right is a factor of the language.
  struct FixedPointSeed {
    unsigned power = 1;
    Letter   left  = 0;
    Letter   right = 0;

    auto operator<=>(FixedPointSeed const&) const = default;
  };

  struct SeedSearch {
    unsigned                    power = 0;  // 0 when nothing was found
    std::vector<FixedPointSeed> seeds;
    unsigned                    max_power = 0;
    bool                        cap_hit   = false;
  };

  // Default cap on the power: 2·(#A)².
  unsigned default_seed_power_cap(Morphism const& sigma) noexcept;

  // All seeds for the smallest power e <= max_power that has one. Throws
  // Error(not_primitive). max_power = 0 selects the default cap.
  SeedSearch admissible_seeds(Morphism const& sigma, unsigned max_power = 0);

  // Checks prolongability, growth and admissibility of a given seed.
  bool is_valid_seed(Morphism const& sigma, FixedPointSeed const& seed);
  bool is_valid_seed(Morphism const& sigma, FixedPointSeed const& seed, Language const& language);

}  // namespace subrec

#endif  // SUBREC_SEEDS_HPP_
