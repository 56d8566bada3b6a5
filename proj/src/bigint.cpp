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

#include "subrec/bigint.hpp"

#include <cmath>
#include <stdexcept>

namespace subrec {

  std::string to_decimal(BigNat const& value) {
    return value.get_str(10);
  }

  BigNat from_decimal(std::string const& text) {
    BigNat result;
    if (text.empty() || result.set_str(text, 10) != 0) {
      throw std::invalid_argument("not a decimal integer: \"" + text + "\"");
    }
    return result;
  }

  std::size_t decimal_digits(BigNat const& value) {
    if (value == 0) {
      return 1;
    }
    // mpz_sizeinbase may overshoot by one for base 10.
    std::size_t digits = mpz_sizeinbase(value.get_mpz_t(), 10);
    BigNat      bound;
    mpz_ui_pow_ui(bound.get_mpz_t(), 10, digits - 1);
    return abs(value) < bound ? digits - 1 : digits;
  }

  double log10_of(BigNat const& value) {
    if (value <= 0) {
      throw std::domain_error("log10 of a non-positive integer");
    }
    long   exp2     = 0;
    double mantissa = mpz_get_d_2exp(&exp2, value.get_mpz_t());
    return std::log10(mantissa) + static_cast<double>(exp2) * std::log10(2.0);
  }

  BigNat pow(BigNat const& base, std::uint64_t exponent) {
    BigNat result = 1;
    BigNat square = base;
    while (exponent != 0) {
      if (exponent & 1U) {
        result *= square;
      }
      exponent >>= 1U;
      if (exponent != 0) {
        square *= square;
      }
    }
    return result;
  }

  std::string abbreviate(BigNat const& value, std::size_t max_digits) {
    std::string full = to_decimal(value);
    if (full.size() <= max_digits) {
      return full;
    }
    return "<" + std::to_string(full.size()) + " digits, leading "
           + full.substr(0, 12) + "…>";
  }

  BigMatrix::BigMatrix(std::size_t dim) : _dim(dim), _entries(dim * dim, 0) {}

  BigMatrix BigMatrix::identity(std::size_t dim) {
    BigMatrix result(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      result(i, i) = 1;
    }
    return result;
  }

  BigMatrix BigMatrix::operator*(BigMatrix const& that) const {
    if (_dim != that._dim) {
      throw std::invalid_argument("matrix dimension mismatch");
    }
    BigMatrix result(_dim);
    for (std::size_t i = 0; i < _dim; ++i) {
      for (std::size_t k = 0; k < _dim; ++k) {
        BigNat const& lhs = (*this)(i, k);
        if (lhs == 0) {
          continue;
        }
        for (std::size_t j = 0; j < _dim; ++j) {
          result(i, j) += lhs * that(k, j);
        }
      }
    }
    return result;
  }

  bool BigMatrix::operator==(BigMatrix const& that) const {
    return _dim == that._dim && _entries == that._entries;
  }

  BigMatrix BigMatrix::power(std::uint64_t n) const {
    BigMatrix result = identity(_dim);
    BigMatrix square = *this;
    while (n != 0) {
      if (n & 1U) {
        result = result * square;
      }
      n >>= 1U;
      if (n != 0) {
        square = square * square;
      }
    }
    return result;
  }

  BigNat BigMatrix::column_sum(std::size_t col) const {
    BigNat sum = 0;
    for (std::size_t row = 0; row < _dim; ++row) {
      sum += (*this)(row, col);
    }
    return sum;
  }

  bool BigMatrix::all_positive() const {
    for (auto const& x : _entries) {
      if (x <= 0) {
        return false;
      }
    }
    return true;
  }

}  // namespace subrec
