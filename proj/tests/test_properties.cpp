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

#include <doctest.h>

#include <random>
#include <string>

#include "helpers.hpp"
#include "oracles.hpp"
#include "subrec/error.hpp"
#include "subrec/fixedpoint.hpp"
#include "subrec/language.hpp"
#include "subrec/matrix.hpp"
#include "subrec/recognizability.hpp"
#include "subrec/seeds.hpp"

using namespace subrec;

namespace {

  // Random non-erasing morphisms over 2..max_letters letters.
  struct Generator {
    std::mt19937 rng;

    explicit Generator(unsigned seed) : rng(seed) {}

    std::size_t below(std::size_t n) {
      return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
    }

    oracle::Rules rules(std::size_t max_letters, std::size_t max_width) {
      std::size_t const A = 2 + below(max_letters - 1);
      oracle::Rules     out(A);
      for (auto& image : out) {
        std::size_t const len = 1 + below(max_width);
        for (std::size_t t = 0; t < len; ++t) {
          image += static_cast<char>('a' + below(A));
        }
      }
      return out;
    }

    Word word(std::size_t A, std::size_t max_len) {
      Word w(below(max_len + 1));
      for (auto& a : w) {
        a = static_cast<Letter>(below(A));
      }
      return w;
    }

    // A primitive aperiodic morphism, or the Fibonacci one after many misses.
    oracle::Rules primitive(std::size_t max_letters, std::size_t max_width) {
      for (int attempt = 0; attempt < 500; ++attempt) {
        auto const     r     = rules(max_letters, max_width);
        Morphism const sigma = fixtures::make(r);
        if (is_primitive(sigma).primitive && !aperiodicity_check(sigma, 40).periodic) {
          return r;
        }
      }
      return oracle::FIB;
    }
  };

  BigNat nat(std::size_t n) {
    return BigNat(static_cast<unsigned long>(n));
  }

}  // namespace

TEST_CASE("apply is a monoid homomorphism") {
  Generator gen(1);
  for (int round = 0; round < 200; ++round) {
    Morphism const sigma = fixtures::make(gen.rules(4, 4));
    Word const     u     = gen.word(sigma.size(), 20);
    Word const     v     = gen.word(sigma.size(), 20);
    Word           uv    = u;
    uv.insert(uv.end(), v.begin(), v.end());
    Word expected = apply(sigma, u);
    Word const tail = apply(sigma, v);
    expected.insert(expected.end(), tail.begin(), tail.end());
    CHECK(apply(sigma, uv) == expected);
  }
}

TEST_CASE("image lengths match matrix column sums") {
  Generator gen(2);
  for (int round = 0; round < 40; ++round) {
    auto const     rules = gen.rules(4, 3);
    Morphism const sigma = fixtures::make(rules);
    auto const     M     = incidence_matrix(sigma);
    for (unsigned n = 0; n <= 10; ++n) {
      auto const Mn = M.power(n);
      for (Letter a = 0; a < sigma.size(); ++a) {
        std::size_t const len = oracle::iterate(rules, std::string(1, char('a' + a)), n).size();
        CHECK(Mn.column_sum(a) == nat(len));
        CHECK(iterate(sigma, a, n, std::size_t(1) << 24).size() == len);
      }
    }
  }
}

TEST_CASE("extreme lengths are sub- and super-multiplicative") {
  Generator gen(3);
  for (int round = 0; round < 20; ++round) {
    Morphism const sigma = fixtures::make(gen.rules(4, 3));
    std::vector<ExtremeLengths> e;
    for (unsigned n = 0; n <= 20; ++n) {
      e.push_back(extreme_lengths(sigma, n));
    }
    for (unsigned m = 0; m <= 20; ++m) {
      for (unsigned n = 0; m + n <= 20; ++n) {
        CHECK(e[m + n].widest <= e[m].widest * e[n].widest);
        CHECK(e[m + n].narrowest >= e[m].narrowest * e[n].narrowest);
      }
    }
  }
}

TEST_CASE("primitivity agrees with brute force on every binary 3x3 matrix") {
  for (unsigned bits = 0; bits < 512; ++bits) {
    BigMatrix          m(3);
    oracle::BoolMatrix b{};
    for (unsigned t = 0; t < 9; ++t) {
      bool const one      = (bits >> t) & 1u;
      m(t / 3, t % 3)     = one ? 1 : 0;
      b[t / 3][t % 3]     = one;
    }
    unsigned const expected = oracle::primitive_power(b);
    auto const     verdict  = is_primitive(m);
    CAPTURE(bits);
    CHECK(verdict.primitive == (expected != 0));
    if (verdict.primitive) {
      CHECK(verdict.witness == expected);
      CHECK(verdict.witness <= 5);
    }
  }
}

TEST_CASE("returned seeds are valid") {
  Generator gen(4);
  for (int round = 0; round < 40; ++round) {
    auto const     rules = gen.primitive(3, 3);
    Morphism const sigma = fixtures::make(rules);
    auto const     found = admissible_seeds(sigma);
    CAPTURE(oracle::text(rules));
    REQUIRE(found.power > 0);
    auto const pairs = factor_language(sigma, 2);
    for (auto const& s : found.seeds) {
      Word const left  = iterate(sigma, s.left, s.power, std::size_t(1) << 24);
      Word const right = iterate(sigma, s.right, s.power, std::size_t(1) << 24);
      CHECK(left.back() == s.left);
      CHECK(right.front() == s.right);
      CHECK(std::binary_search(pairs.words.begin(), pairs.words.end(), Word{s.left, s.right}));
    }
  }
}

TEST_CASE("language properties on generated morphisms") {
  Generator gen(5);
  for (int round = 0; round < 25; ++round) {
    auto const     rules = gen.primitive(3, 3);
    Morphism const sigma = fixtures::make(rules);
    CAPTURE(oracle::text(rules));
    Language const language(sigma, 10);
    for (std::size_t n = 1; n <= 10; ++n) {
      CHECK(language.complexity(n) <= language.complexity(n + 1));
      CHECK(language.complexity(n + 1) <= language.complexity(n) * sigma.size());
      CHECK(language.factors(n).words.size() == oracle::language(rules, n).size());
    }
  }
}

TEST_CASE("window structure on generated morphisms") {
  Generator gen(6);
  for (int round = 0; round < 25; ++round) {
    auto const     rules = gen.primitive(3, 3);
    Morphism const sigma = fixtures::make(rules);
    CAPTURE(oracle::text(rules));
    auto const   found = admissible_seeds(sigma);
    Window const w     = build_window(sigma, found.seeds.front(), 300, std::size_t(1) << 24,
                                      3 * found.power);
    unsigned const e = found.power;
    for (unsigned p = 0; p + e <= w.depth() && p <= 4; ++p) {
      CuttingSet const here = cutting_points(w, p);
      CHECK(here.find(0) >= 0);
      auto const ext = extreme_lengths(sigma, p);
      for (std::size_t t = 0; t + 1 < here.cuts.size(); ++t) {
        auto const gap = nat(static_cast<std::size_t>(here.cuts[t + 1] - here.cuts[t]));
        CHECK(gap >= ext.narrowest);
        CHECK(gap <= ext.widest);
      }
      if (p + 1 <= w.depth()) {
        CuttingSet const next = cutting_points(w, p + 1);
        for (auto pos : next.cuts) {
          CHECK(here.find(pos) >= 0);
        }
      }
      // Only where both sides are defined inside the window.
      for (std::int64_t i = -20; i <= 20; ++i) {
        std::int64_t inner = 0;
        try {
          inner = f_p(w, i, p);
          (void)f_p(w, inner, e);
          (void)f_p(w, i, p + e);
        } catch (Error const&) {
          continue;
        }
        CHECK(f_p(w, i, p + e) == f_p(w, inner, e));
      }
    }
  }
}

TEST_CASE("kernel chain stabilizes on generated morphisms") {
  Generator gen(7);
  for (int round = 0; round < 100; ++round) {
    auto const     rules = gen.rules(4, 3);
    Morphism const sigma = fixtures::make(rules);
    auto const     chain = injectivity_exponent(sigma);
    std::size_t const A  = sigma.size();
    CHECK(chain.d >= 1);
    CHECK(chain.d <= A);
    for (Letter a = 0; a < A; ++a) {
      for (Letter b = 0; b < A; ++b) {
        CHECK(chain.same(A - 1, a, b) == chain.same(A, a, b));
        for (std::size_t n = 0; n < A; ++n) {
          if (chain.same(n, a, b)) {
            CHECK(chain.same(n + 1, a, b));
          }
        }
      }
    }
  }
}

TEST_CASE("counterexamples on generated morphisms refute the definition") {
  Generator gen(8);
  for (int round = 0; round < 10; ++round) {
    auto const     rules = gen.primitive(3, 3);
    Morphism const sigma = fixtures::make(rules);
    CAPTURE(oracle::text(rules));
    auto const   found = admissible_seeds(sigma);
    Window const w     = build_window(sigma, found.seeds.front(), 400);
    char const   a     = static_cast<char>('a' + found.seeds.front().left);
    char const   b     = static_cast<char>('a' + found.seeds.front().right);
    auto const   x     = oracle::two_sided(rules, a, b, w.depth(), found.power);
    for (std::size_t L = 0; L <= 3; ++L) {
      auto const v = verify_constant(w, L, found.power);
      CHECK(v.ok == !oracle::has_counterexample(x, L));
      if (v.counterexample) {
        auto const& c = *v.counterexample;
        for (std::int64_t k = -static_cast<std::int64_t>(L); k <= static_cast<std::int64_t>(L); ++k) {
          CHECK(w.at(c.cut + k) == w.at(c.m + k));
        }
        auto const own = x.cuts.find(c.m);
        bool const differs = own == x.cuts.end() || own->second != x.cuts.at(c.cut);
        CHECK(differs);
      }
    }
  }
}
