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

// Finite windows of an admissible two-sided fixed point x = τ^ω(a·b) of
// τ = σ^e, together with the exact cutting sets E(x, σ^p) inside them.
//
// A window keeps its whole desubstitution tower: stage q holds the word
// σ^q(a)·σ^q(b) anchored at the a·b junction (coordinate 0 is the first
// letter of σ^q(b)) and, for each of its letters, where its σ-image starts
// in stage q + 1. The top stage is the window content; stage top - p is the
// σ^p-preimage of the content, so cut status and preimage letters are ground
// truth rather than the result of a search.

#ifndef SUBREC_FIXEDPOINT_HPP_
#define SUBREC_FIXEDPOINT_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "subrec/bigint.hpp"
#include "subrec/morphism.hpp"
#include "subrec/seeds.hpp"

namespace subrec {

  class Window {
   public:
    [[nodiscard]] Morphism const& morphism() const noexcept {
      return *_sigma;
    }
    [[nodiscard]] FixedPointSeed const& seed() const noexcept {
      return _seed;
    }

    // Content covers positions [lo, hi).
    [[nodiscard]] std::int64_t lo() const noexcept {
      return stage_lo(depth());
    }
    [[nodiscard]] std::int64_t hi() const noexcept {
      return stage_hi(depth());
    }
    [[nodiscard]] Word const& content() const noexcept {
      return _stages.back().word;
    }

    // x_pos. Throws Error(out_of_window).
    [[nodiscard]] Letter at(std::int64_t pos) const;

    // Number of σ^e applications used to grow the window.
    [[nodiscard]] unsigned level() const noexcept {
      return depth() / _seed.power;
    }
    // Number of σ applications: level() · e.
    [[nodiscard]] unsigned depth() const noexcept {
      return static_cast<unsigned>(_stages.size() - 1);
    }

    [[nodiscard]] Word const& stage(unsigned q) const {
      return _stages.at(q).word;
    }
    [[nodiscard]] std::int64_t stage_lo(unsigned q) const {
      return -_stages.at(q).anchor;
    }
    [[nodiscard]] std::int64_t stage_hi(unsigned q) const {
      auto const& s = _stages.at(q);
      return static_cast<std::int64_t>(s.word.size()) - s.anchor;
    }

    // Coordinate in stage `to` where the σ^{to-from}-image of the letter at
    // coordinate i of stage `from` begins. i may equal stage_hi(from), which
    // maps to stage_hi(to).
    [[nodiscard]] std::int64_t lift(std::int64_t i, unsigned from, unsigned to) const;

   private:
    friend Window build_window(Morphism const&, FixedPointSeed const&, std::size_t, std::size_t, unsigned);

    struct Stage {
      Word         word;
      std::int64_t anchor = 0;
      // starts[j]: index in the next stage where σ(word[j]) begins;
      // starts[word.size()] is the next stage's length.
      std::vector<std::int64_t> starts;
    };

    std::shared_ptr<Morphism const> _sigma;
    FixedPointSeed                  _seed;
    std::vector<Stage>              _stages;
  };

  // Grows τ^j(a)·τ^j(b) until both halves reach `radius` letters and at
  // least `min_depth` applications of σ are recorded. Throws
  // Error(invalid_seed) or Error(size_exceeded) when the content would pass
  // `cap` letters.
  Window build_window(Morphism const&       sigma,
                      FixedPointSeed const& seed,
                      std::size_t           radius,
                      std::size_t           cap       = std::size_t(1) << 26,
                      unsigned              min_depth = 0);

  // f^{(p)}(i): |σ^p(x_[0,i))| for i > 0, 0 for i = 0 and -|σ^p(x_[i,0))|
  // for i < 0, where x here is the level-p preimage of the content. Throws
  // Error(level_unavailable) when p > depth() and Error(out_of_window).
  std::int64_t f_p(Window const& window, std::int64_t i, unsigned p);

  struct CuttingSet {
    unsigned                  p = 0;
    std::vector<std::int64_t> cuts;      // sorted, inside [lo, hi)
    std::vector<std::int64_t> index;     // index[t]: i with f^{(p)}(i) = cuts[t]
    std::vector<Letter>       preimage;  // preimage[t]: the letter x_i

    // Position of pos in `cuts`, or -1.
    [[nodiscard]] std::ptrdiff_t find(std::int64_t pos) const;
  };

  // E(x, σ^p) inside the window, read from the tower. Throws
  // Error(level_unavailable) when p > depth().
  CuttingSet cutting_points(Window const& window, unsigned p);

  // Admissible lengths t = |v| - 2 of the words v in an interpretation
  // σ^n(v) ⊇ σ^n(u) ⊇ σ^n(v[1, t]):
  // (⌈⟨σ^n⟩·|u| / |σ^n|⌉ - 2, ⌊|σ^n|·|u| / ⟨σ^n⟩⌋).
  std::pair<BigInt, BigInt> interpretation_length_bounds(std::size_t     u_len,
                                                         Morphism const& sigma,
                                                         std::uint64_t   n);

  // Debug dump: one "pos<TAB>letter<TAB>cutlevels" line per position, where
  // cutlevels lists (comma separated) every p <= max_level with pos a cut.
  std::string dump_window(Window const& window, unsigned max_level);

}  // namespace subrec

#endif  // SUBREC_FIXEDPOINT_HPP_
