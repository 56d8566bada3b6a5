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

#include "subrec/matrix.hpp"

#include <algorithm>

#include "subrec/error.hpp"

namespace subrec {

  IncidenceMatrix incidence_matrix(Morphism const& sigma) {
    IncidenceMatrix m(sigma.size());
    for (Letter b = 0; b < sigma.size(); ++b) {
      for (Letter a : sigma.image(b)) {
        m(a, b) += 1;
      }
    }
    return m;
  }

  unsigned wielandt_bound(std::size_t dim) noexcept {
    if (dim == 0) {
      return 0;
    }
    return static_cast<unsigned>(dim * dim - 2 * dim + 2);
  }

  PrimitivityVerdict is_primitive(IncidenceMatrix const& m) {
    std::size_t const d = m.dim();
    if (d == 0) {
      return {};
    }
    using Bits = std::vector<char>;
    Bits base(d * d);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        base[i * d + j] = m(i, j) > 0;
      }
    }
    Bits     current = base;
    unsigned bound   = wielandt_bound(d);
    for (unsigned k = 1; k <= bound; ++k) {
      if (std::all_of(current.begin(), current.end(), [](char c) { return c != 0; })) {
        return {true, k};
      }
      Bits next(d * d, 0);
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t l = 0; l < d; ++l) {
          if (!current[i * d + l]) {
            continue;
          }
          for (std::size_t j = 0; j < d; ++j) {
            next[i * d + j] |= base[l * d + j];
          }
        }
      }
      current = std::move(next);
    }
    return {};
  }

  PrimitivityVerdict is_primitive(Morphism const& sigma) {
    return is_primitive(incidence_matrix(sigma));
  }

  std::vector<BigNat> image_lengths(Morphism const& sigma, std::uint64_t n) {
    std::vector<BigNat> lengths(sigma.size(), 1);
    if (n == 0) {
      return lengths;
    }
    auto const mn = incidence_matrix(sigma).power(n);
    for (Letter b = 0; b < sigma.size(); ++b) {
      lengths[b] = mn.column_sum(b);
    }
    return lengths;
  }

  std::vector<std::vector<BigNat>> length_table(Morphism const& sigma, std::size_t n_max) {
    std::vector<std::vector<BigNat>> table;
    table.reserve(n_max + 1);
    table.emplace_back(sigma.size(), 1);
    for (std::size_t n = 1; n <= n_max; ++n) {
      auto const&         prev = table.back();
      std::vector<BigNat> next(sigma.size(), 0);
      for (Letter b = 0; b < sigma.size(); ++b) {
        for (Letter a : sigma.image(b)) {
          next[b] += prev[a];
        }
      }
      table.push_back(std::move(next));
    }
    return table;
  }

  ExtremeLengths extreme_lengths(std::vector<BigNat> const& lengths) {
    auto [lo, hi] = std::minmax_element(lengths.begin(), lengths.end());
    return {*hi, *lo};
  }

  ExtremeLengths extreme_lengths(Morphism const& sigma, std::uint64_t n) {
    return extreme_lengths(image_lengths(sigma, n));
  }

  BigNat power_scaled_constant(BigNat const& L,
                               std::uint64_t k,
                               BigNat const& widest,
                               bool          limit_convention) {
    if (k == 0) {
      throw Error(ErrorKind::invalid_argument, "power_scaled_constant: k must be >= 1");
    }
    if (widest < 1) {
      throw Error(ErrorKind::invalid_argument, "power_scaled_constant: |σ| must be >= 1");
    }
    if (widest == 1) {
      if (!limit_convention) {
        throw Error(ErrorKind::degenerate_width,
                    "|σ| = 1: every image is a single letter and the fixed point is periodic");
      }
      return L * BigNat(static_cast<unsigned long>(k));
    }
    BigNat numerator = pow(widest, k) - 1;
    BigNat quotient;
    mpz_divexact(quotient.get_mpz_t(), numerator.get_mpz_t(), BigNat(widest - 1).get_mpz_t());
    return L * quotient;
  }

}  // namespace subrec
