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

// Upper bounds for the constant of recognizability of a primitive
// aperiodic morphism, from measured or certified constants, plus the
// closed-form bound and the uniform binary delay bound.

#ifndef SUBREC_BOUNDS_HPP_
#define SUBREC_BOUNDS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "subrec/bigint.hpp"
#include "subrec/morphism.hpp"

namespace subrec {

  struct CertifiedConstants {
    BigNat N_cert;     // |σ^{A²}|
    BigNat Rret_cert;  // 2·|σ^{2A²}|
    BigNat K_cert;     // Rret·N·|σ|
    BigNat k_cert;     // K + 1
  };

  // A = #A. Throws Error(not_primitive).
  CertifiedConstants certified_constants(Morphism const& sigma);

  // A natural number that may be too large to write down. log10 is always
  // set; exact is set when the value has at most the exact cap's digits.
  struct BigValue {
    std::optional<BigNat> exact;
    double                log10 = 0;
    std::string           expr;
    BigNat                digits = 0;  // exact count, or the estimate ⌊log10⌋ + 1
    bool                  approximate = false;

    bool operator==(BigValue const&) const = default;
  };

  // Largest exact value materialised, in decimal digits. Reads the
  // SUBREC_EXACT_CAP environment variable, default 10⁶.
  std::size_t default_exact_cap();

  enum class BoundMode { empirical_exact, certified };

  std::string to_string(BoundMode mode);

  struct BoundOptions {
    BoundMode   mode      = BoundMode::empirical_exact;
    bool        safe_d    = false;  // d = #A instead of the letter-level d
    std::size_t exact_cap = default_exact_cap();
    // Complexities are computed exactly up to this length; beyond it the
    // linear bound p(i) <= K_cert·i is used.
    std::size_t language_cap = 1024;
    std::size_t aperiodic_nmax = 200;
  };

  // The constants the bound is built from. complexity[i] = p(i) for
  // i < complexity.size(); larger i use p(i) <= linear·i.
  struct BoundInputs {
    BigNat              N;
    BigNat              k;
    unsigned            d = 1;
    std::vector<BigNat> complexity;
    BigNat              linear;
  };

  struct BoundBreakdown {
    BoundMode   mode = BoundMode::empirical_exact;
    BigNat      N;
    BigNat      k;
    BigRational K;  // linear complexity constant used or observed
    unsigned    d = 1;
    BigNat      R;
    BigNat      Q;
    BigNat      sum_lo;  // ⌈R/N⌉
    BigNat      sum_hi;  // RN + 2
    BigValue    sigma_dQ;
    BigValue    M;
    BigValue    bound;
    std::vector<std::string> notes;
  };

  // The bound chain R, Q, M = R·|σ^{dQ}|, bound = M + |σ^d|.
  BoundBreakdown bound_from_inputs(Morphism const&    sigma,
                                   BoundInputs const& inputs,
                                   BoundMode          mode,
                                   std::size_t        exact_cap = default_exact_cap());

  // Measures (empirical_exact) or certifies the constants, then runs the
  // chain. Throws Error(not_primitive) and Error(not_aperiodic).
  BoundBreakdown bound_maindetail(Morphism const& sigma, BoundOptions const& options = {});

  struct NEstimate {
    BigNat                   N;
    BigNat                   sampled;  // max ⌈|σ^n|/⟨σ^n⟩⌉ over the sample
    std::optional<double>    tail;     // bound for the supremum past it
    std::size_t              horizon = 0;
    bool                     certified_fallback = false;
  };

  // An integer N with |σ^n| <= N·⟨σ^n⟩ for every n.
  NEstimate estimate_N(Morphism const& sigma);

  // |σ^n| as a BigValue, exact when it fits exact_cap digits.
  BigValue image_width(Morphism const& sigma, BigNat const& n, std::size_t exact_cap);

  // log10 |σ^n| extrapolated from |σ^64| and |σ^128| (exact for n <= 128).
  double estimate_log10_width(Morphism const& sigma, BigNat const& n);

  struct ClosedForm {
    BigNat   exponent;  // 6A² + 6A·|σ|^{28A²}, or 6A² + 6|σ|^{28A²}
    BigNat   base;      // |σ|
    BigValue value;     // 2·|σ|^exponent + |σ|^A (or + |σ|)
    // log10 log10 of the value; finite even when value.log10 overflows.
    double   log10_log10 = 0;
    bool     injective  = false;
    bool     degenerate = false;  // #A = 1: the fixed point is periodic
  };

  // Throws Error(not_primitive).
  ClosedForm bound_closed_form(Morphism const& sigma,
                               bool            injective_hint = false,
                               std::size_t     exact_cap      = default_exact_cap());

  // Delay bound for a k-uniform binary morphism: 8 for k = 2, k² + 3k - 4
  // for an odd prime k, k²(k/d - 1) + 5k - 4 otherwise, d the least divisor
  // of k above 1. Throws Error(bad_parameters).
  std::uint64_t klouda_medkova_bound(std::uint64_t k, std::uint64_t d);
  std::uint64_t klouda_medkova_bound(std::uint64_t k);

  std::uint64_t least_divisor(std::uint64_t k);

}  // namespace subrec

#endif  // SUBREC_BOUNDS_HPP_
