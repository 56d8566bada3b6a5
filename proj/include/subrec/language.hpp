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

// The factor language L(σ) of a primitive morphism and the statistics read
// off it: complexity, return words, repetitions and linear recurrence.

#ifndef SUBREC_LANGUAGE_HPP_
#define SUBREC_LANGUAGE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "subrec/bigint.hpp"
#include "subrec/morphism.hpp"

namespace subrec {

  // L_n(σ), sorted lexicographically by letter index.
  struct FactorSet {
    std::size_t       length = 0;
    std::vector<Word> words;

    [[nodiscard]] bool contains(WordView w) const;
  };

  // All factors of length <= max_length of the admissible fixed points of a
  // primitive σ. Built once by a monotone closure at length max_length + 1:
  // starting from the factors of some σ^j(a), add every factor of σ(w) for
  // each w already present until nothing new appears. The limit is exact.
  class Language {
   public:
    // Throws Error(not_primitive).
    Language(Morphism const& sigma, std::size_t max_length);

    [[nodiscard]] std::size_t max_length() const noexcept {
      return _max_length;
    }

    // Membership for words of length <= max_length() + 1.
    [[nodiscard]] bool contains(WordView w) const;

    // p(n) for 0 <= n <= max_length() + 1.
    [[nodiscard]] std::size_t complexity(std::size_t n) const;

    [[nodiscard]] FactorSet factors(std::size_t n) const;

    [[nodiscard]] Morphism const& morphism() const noexcept {
      return _sigma;
    }

   private:
    Morphism            _sigma;
    std::size_t         _max_length;
    std::size_t         _top;
    std::vector<Word>   _words;  // L_top, sorted
    std::vector<size_t> _lcp;    // _lcp[i] = lcp(_words[i-1], _words[i])
  };

  FactorSet   factor_language(Morphism const& sigma, std::size_t n);
  std::size_t complexity(Morphism const& sigma, std::size_t n);

  // A factor of the given length of a fixed point of some power of σ. Longer
  // requests extend shorter ones (the result is a prefix of a right-infinite
  // fixed point), so windows of doubling length are nested.
  Word sample_word(Morphism const& sigma, std::size_t length);

  struct ReturnWordSet {
    Word              base;
    std::vector<Word> returns;  // sorted by length, then lexicographically
    bool              certified = false;
    std::size_t       window    = 0;
  };

  // Return words to u: r such that ru is a factor, u is a prefix of ru and u
  // occurs exactly twice in ru. Windows double until the set is stable over
  // two doublings and every return is at most a quarter of the window. The
  // result is certified only when the window is long enough for the
  // certified linear-recurrence constant to force completeness.
  ReturnWordSet return_words(Morphism const& sigma,
                             WordView        u,
                             std::size_t     window_cap = std::size_t(1) << 20);

  struct PowerFreeVerdict {
    enum class Kind { bounded, unbounded, inconclusive };
    Kind        kind = Kind::inconclusive;
    unsigned    k    = 0;  // smallest k with no u^k seen, when bounded
    unsigned    largest_power = 0;
    Word        witness;           // u with u^largest_power in the window
    std::size_t window = 0;
  };

  PowerFreeVerdict power_free_index(Morphism const& sigma,
                                    std::size_t     scan_len      = 10000,
                                    unsigned        max_k         = 64,
                                    std::size_t     aperiodic_nmax = 200);

  // Largest integer power found in w, with witness root. Uses the prefix
  // function of every suffix (quadratic in |w|).
  std::pair<unsigned, Word> largest_integer_power(WordView w);

  struct RecurrenceEstimate {
    BigRational ratio;               // max |r|/|u|, a lower bound for K
    Word        witness;             // u achieving it
    std::size_t longest_return = 0;  // |r| for the witness
    std::size_t window         = 0;
    bool        stable         = false;
  };

  RecurrenceEstimate recurrence_constant_empirical(Morphism const& sigma,
                                                   std::size_t     max_len,
                                                   std::size_t window_cap = std::size_t(1) << 24);

  struct AperiodicityVerdict {
    bool        periodic = false;
    std::size_t period   = 0;  // when periodic
    std::size_t at       = 0;  // first n with p(n) <= n, when periodic
    std::size_t n_max    = 0;
  };

  // Morse–Hedlund screening: periodic as soon as p(n) <= n for some
  // n <= n_max. A negative answer is a screening result, not a proof.
  AperiodicityVerdict aperiodicity_check(Morphism const& sigma, std::size_t n_max = 200);
  AperiodicityVerdict aperiodicity_check(Language const& language);

}  // namespace subrec

#endif  // SUBREC_LANGUAGE_HPP_
