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

// Incidence matrices, primitivity and the lengths |σ^n(a)|.

#ifndef SUBREC_MATRIX_HPP_
#define SUBREC_MATRIX_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "subrec/bigint.hpp"
#include "subrec/morphism.hpp"

namespace subrec {

  // Entry (a, b) is the number of occurrences of a in σ(b); column b sums to
  // |σ(b)|.
  using IncidenceMatrix = BigMatrix;

  IncidenceMatrix incidence_matrix(Morphism const& sigma);

  struct PrimitivityVerdict {
    bool     primitive = false;
    unsigned witness   = 0;  // smallest k with M^k > 0, when primitive
  };

  // Tests M^k > 0 for k up to the Wielandt bound dim² - 2·dim + 2, so a
  // negative answer is conclusive.
  PrimitivityVerdict is_primitive(IncidenceMatrix const& m);
  PrimitivityVerdict is_primitive(Morphism const& sigma);

  unsigned wielandt_bound(std::size_t dim) noexcept;

  // |σ^n(a)| for every letter a, via fast exponentiation of M_σ.
  std::vector<BigNat> image_lengths(Morphism const& sigma, std::uint64_t n);

  // lengths[n][a] = |σ^n(a)| for n = 0, ..., n_max.
  std::vector<std::vector<BigNat>> length_table(Morphism const& sigma, std::size_t n_max);

  struct ExtremeLengths {
    BigNat widest;     // |σ^n|
    BigNat narrowest;  // ⟨σ^n⟩
  };

  ExtremeLengths extreme_lengths(Morphism const& sigma, std::uint64_t n);
  ExtremeLengths extreme_lengths(std::vector<BigNat> const& lengths);

  // L·(w^k - 1)/(w - 1): the constant for σ^k obtained from a constant L for
  // σ when w = |σ|. With w = 1 the fixed point is periodic; that throws
  // Error(degenerate_width) unless limit_convention is set, in which case
  // the limit L·k is returned.
  BigNat power_scaled_constant(BigNat const& L,
                               std::uint64_t k,
                               BigNat const& widest,
                               bool          limit_convention = false);

}  // namespace subrec

#endif  // SUBREC_MATRIX_HPP_
