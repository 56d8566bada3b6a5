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

// Arbitrary-precision naturals and the dense matrices built from them.

#ifndef SUBREC_BIGINT_HPP_
#define SUBREC_BIGINT_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace subrec {

  using BigNat      = mpz_class;
  using BigInt      = mpz_class;  // signed quantities
  using BigRational = mpq_class;

  std::string to_decimal(BigNat const& value);
  BigNat      from_decimal(std::string const& text);

  // Exact number of decimal digits of |value| (1 for zero).
  std::size_t decimal_digits(BigNat const& value);

  // log10 of a positive integer, accurate to double precision even when the
  // value does not fit a double.
  double log10_of(BigNat const& value);

  BigNat pow(BigNat const& base, std::uint64_t exponent);

  // Human-facing rendering: values of at most max_digits digits are printed
  // in full, longer ones as "<D digits, leading 1234567890…>".
  std::string abbreviate(BigNat const& value, std::size_t max_digits = 80);

  // Square matrix of big naturals, row-major.
  class BigMatrix {
   public:
    BigMatrix() = default;
    explicit BigMatrix(std::size_t dim);

    static BigMatrix identity(std::size_t dim);

    [[nodiscard]] std::size_t dim() const noexcept {
      return _dim;
    }

    BigNat& operator()(std::size_t row, std::size_t col) {
      return _entries[row * _dim + col];
    }
    BigNat const& operator()(std::size_t row, std::size_t col) const {
      return _entries[row * _dim + col];
    }

    BigMatrix operator*(BigMatrix const& that) const;
    bool      operator==(BigMatrix const& that) const;

    // Square-and-multiply.
    [[nodiscard]] BigMatrix power(std::uint64_t n) const;

    [[nodiscard]] BigNat column_sum(std::size_t col) const;

    [[nodiscard]] bool all_positive() const;

   private:
    std::size_t         _dim = 0;
    std::vector<BigNat> _entries;
  };

}  // namespace subrec

#endif  // SUBREC_BIGINT_HPP_
