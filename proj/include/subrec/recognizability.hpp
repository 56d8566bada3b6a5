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

// Circularity and recognizability: the injectivity exponent, interpretations
// and synchronizing points, and the window-based recognizability verifier.

#ifndef SUBREC_RECOGNIZABILITY_HPP_
#define SUBREC_RECOGNIZABILITY_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "subrec/fixedpoint.hpp"
#include "subrec/language.hpp"
#include "subrec/morphism.hpp"

namespace subrec {

  // Level n of the chain identifies a and b when σ^n(a) = σ^n(b).
  struct KernelChain {
    std::vector<std::vector<unsigned>> class_of;  // class_of[n][a], n = 0..#A
    unsigned                           d = 1;

    [[nodiscard]] bool same(std::size_t n, Letter a, Letter b) const {
      return class_of.at(n).at(a) == class_of.at(n).at(b);
    }
    // The classes of level n with more than one letter.
    [[nodiscard]] std::vector<std::vector<Letter>> merged(std::size_t n) const;
  };

  // d is the smallest value in {1, ..., #A} with E_{d-1} = E_{#A-1}.
  KernelChain injectivity_exponent(Morphism const& sigma);

  // σ^n(a) == σ^n(b) without materialising either word when avoidable.
  bool images_equal(Morphism const& sigma, WordView a, WordView b, std::uint64_t n);

  // σ(core) = prefix · u · suffix with |prefix| < |σ(core_1)| and
  // |suffix| < |σ(core_last)|. cuts holds the positions k in [0, |u|] where
  // an image boundary of σ(core) falls.
  struct Interpretation {
    Word                     prefix;
    Word                     core;
    Word                     suffix;
    std::vector<std::size_t> cuts;

    auto operator<=>(Interpretation const&) const = default;
  };

  // All tight interpretations of u with core in L(σ). The language must be
  // indexed up to length |u| + 2. Throws Error(not_a_factor).
  std::vector<Interpretation> interpretations(Morphism const& sigma,
                                              WordView        u,
                                              Language const& language);
  std::vector<Interpretation> interpretations(Morphism const& sigma, WordView u);

  struct SyncVerdict {
    bool                     synchronized = false;
    std::vector<std::size_t> positions;  // common cut positions k >= 1
  };

  // Positions k in {1, ..., |u|} (or {1, ..., |u| - 1} with interior_only)
  // where every interpretation of u has a cut.
  SyncVerdict synchronizing_point(Morphism const& sigma,
                                  WordView        u,
                                  Language const& language,
                                  bool            interior_only = false);
  SyncVerdict synchronizing_point(Morphism const& sigma, WordView u, bool interior_only = false);

  struct SyncResult {
    std::optional<std::size_t> delay;  // C
    std::size_t                n_max = 0;
    // unsynchronized[n - 1]: the words of length n without a synchronizing
    // point, for every n tested.
    std::vector<std::vector<Word>> unsynchronized;
    bool                           periodic = false;

    // ⌈(C - 1)/2⌉ from C = 2L + 1.
    [[nodiscard]] std::optional<std::size_t> L_from_C() const;
  };

  // Smallest n <= n_max such that every word of L_n(σ) has a synchronizing
  // point. A periodic σ is never circular, so it yields no delay.
  SyncResult synchronizing_delay(Morphism const& sigma,
                                 std::size_t     n_max,
                                 bool            interior_only  = false,
                                 std::size_t     aperiodic_nmax = 200);

  struct Counterexample {
    std::int64_t          i = 0;       // preimage index of the cut
    std::int64_t          cut = 0;     // f^{(p)}(i)
    Letter                cut_letter;  // x_i
    std::int64_t          m = 0;       // the position with the same context
    std::optional<Letter> m_letter;    // preimage letter at m, if m is a cut
    std::optional<std::int64_t> j;     // preimage index at m, if m is a cut
  };

  struct VerifyVerdict {
    bool                          ok = false;
    std::optional<Counterexample> counterexample;
  };

  // Checks, inside the window, that whenever the (2L+1)-context of some
  // position m equals that of a level-p cut f^{(p)}(i), m is itself a cut
  // with the same preimage letter. A counterexample is a global disproof; ok
  // only speaks for this window. The reported counterexample minimises |m|,
  // then |i|. Throws Error(window_too_small).
  VerifyVerdict verify_constant(Window const& window, std::size_t L, unsigned p);

  struct EmpiricalConstant {
    std::size_t                   certified_lower = 0;
    std::optional<std::size_t>    heuristic;
    std::size_t                   scanned_to = 0;
    std::optional<Counterexample> counterexample;  // for L = certified_lower - 1
  };

  // Ascending scan of verify_constant over L = 0..L_max (clipped to what the
  // window can host). certified_lower is one more than the largest refuted
  // L; heuristic is the first L that passes on this window.
  EmpiricalConstant minimal_constant_empirical(Window const& window, unsigned p, std::size_t L_max);

  // Largest L verify_constant accepts for this window and level.
  std::optional<std::size_t> max_verifiable_L(Window const& window, unsigned p);

}  // namespace subrec

#endif  // SUBREC_RECOGNIZABILITY_HPP_
