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

#include <map>
#include <sstream>
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
using fixtures::str;
using fixtures::word;

namespace {

  std::string read(Window const& w, std::int64_t from, std::int64_t to) {
    Word out;
    for (std::int64_t i = from; i < to; ++i) {
      out.push_back(w.at(i));
    }
    return w.morphism().format(out);
  }

  std::vector<std::int64_t> cuts_in(CuttingSet const& c, std::int64_t from, std::int64_t to) {
    std::vector<std::int64_t> out;
    for (auto pos : c.cuts) {
      if (pos >= from && pos < to) {
        out.push_back(pos);
      }
    }
    return out;
  }

  struct Case {
    char const*    name;
    oracle::Rules  rules;
    FixedPointSeed seed;
  };

  std::vector<Case> cases() {
    std::vector<Case> out;
    for (auto const& [name, rules] : fixtures::standard()) {
      auto const found = admissible_seeds(fixtures::make(rules));
      REQUIRE_FALSE(found.seeds.empty());
      out.push_back({name, rules, found.seeds.front()});
    }
    return out;
  }

}  // namespace

TEST_CASE("build_window examples") {
  Morphism const fib = fixtures::fib();
  Window const   w   = build_window(fib, {2, 0, 0}, 8);
  CHECK(w.lo() <= -8);
  CHECK(w.hi() >= 8);
  CHECK(read(w, 0, 8) == "abaababa");
  CHECK(w.at(-1) == 0);
  CHECK(w.at(0) == 0);

  Morphism const tm = fixtures::tm();
  Window const   t  = build_window(tm, {2, 0, 1}, 8);
  CHECK(read(t, 0, 8) == "baababba");
  CHECK(read(t, 0, 8) == oracle::iterate(oracle::TM, "b", 3));
  std::string const left = oracle::iterate(oracle::TM, "a", t.depth());
  CHECK(read(t, -8, 0) == left.substr(left.size() - 8));

  CHECK_THROWS_AS(build_window(fib, {2, 0, 1}, 8), Error);
  try {
    (void)build_window(fib, {2, 0, 1}, 8);
  } catch (Error const& e) {
    CHECK(e.kind() == ErrorKind::invalid_seed);
  }
  CHECK_THROWS_AS(build_window(fib, {2, 0, 0}, 0), Error);
}

TEST_CASE("window growth caps") {
  try {
    (void)build_window(fixtures::fib(), {2, 0, 0}, 1 << 20, 1 << 10);
    FAIL("expected an error");
  } catch (Error const& e) {
    CHECK(is_resource_error(e.kind()));
  }
}

TEST_CASE("windows agree with direct two-sided iteration") {
  for (auto const& c : cases()) {
    CAPTURE(c.name);
    Morphism const sigma = fixtures::make(c.rules);
    Window const   w     = build_window(sigma, c.seed, 200);
    REQUIRE(w.depth() % c.seed.power == 0);
    char const a = sigma.token(c.seed.left)[0];
    char const b = sigma.token(c.seed.right)[0];
    for (unsigned p = 0; p <= 3; ++p) {
      CAPTURE(p);
      auto const        x = oracle::two_sided(c.rules, a, b, w.depth(), p);
      std::int64_t const from = std::max<std::int64_t>(w.lo(), x.lo);
      std::int64_t const to   = std::min<std::int64_t>(w.hi(), x.lo + static_cast<long>(x.content.size()));
      CHECK(read(w, from, to) == x.content.substr(static_cast<std::size_t>(from - x.lo),
                                                  static_cast<std::size_t>(to - from)));
      CuttingSet const cut = cutting_points(w, p);
      std::map<long, char> mine;
      for (std::size_t t = 0; t < cut.cuts.size(); ++t) {
        if (cut.cuts[t] >= from && cut.cuts[t] < to) {
          mine[cut.cuts[t]] = sigma.token(cut.preimage[t])[0];
        }
      }
      std::map<long, char> theirs;
      for (auto const& [pos, letter] : x.cuts) {
        if (pos >= from && pos < to) {
          theirs[pos] = letter;
        }
      }
      CHECK(mine == theirs);
    }
  }
}

TEST_CASE("growing a window keeps existing positions") {
  for (auto const& c : cases()) {
    CAPTURE(c.name);
    Morphism const sigma = fixtures::make(c.rules);
    Window const   small = build_window(sigma, c.seed, 20);
    Window const   large = build_window(sigma, c.seed, 500);
    CHECK(read(small, small.lo(), small.hi()) == read(large, small.lo(), small.hi()));
  }
}

TEST_CASE("f_p examples") {
  Window const w = build_window(fixtures::fib(), {2, 0, 0}, 50);
  CHECK(f_p(w, 2, 1) == 3);
  CHECK(f_p(w, 1, 2) == 3);
  for (unsigned p = 0; p <= 4; ++p) {
    CHECK(f_p(w, 0, p) == 0);
  }
  CHECK(f_p(w, 5, 0) == 5);
  CHECK(f_p(w, -1, 1) == -1);
  CHECK(f_p(w, -2, 1) == -3);
  CHECK_THROWS_AS(f_p(w, 10000, 1), Error);
  CHECK_THROWS_AS(f_p(w, 40, 3), Error);
}

TEST_CASE("cutting_points examples") {
  Window const     w  = build_window(fixtures::fib(), {2, 0, 0}, 50);
  CuttingSet const c1 = cutting_points(w, 1);
  CHECK(cuts_in(c1, 0, 8) == std::vector<std::int64_t>{0, 2, 3, 5, 7});
  std::string letters;
  for (auto pos : {0, 2, 3, 5}) {
    letters += w.morphism().token(c1.preimage[static_cast<std::size_t>(c1.find(pos))]);
  }
  CHECK(letters == "abaa");
  CHECK(c1.find(1) < 0);

  CuttingSet const c2 = cutting_points(w, 2);
  CHECK(cuts_in(c2, 0, 8) == std::vector<std::int64_t>{0, 3, 5});

  CuttingSet const c0 = cutting_points(w, 0);
  CHECK(c0.cuts.size() == static_cast<std::size_t>(w.hi() - w.lo()));
  for (std::size_t t = 0; t < c0.cuts.size(); ++t) {
    CHECK(c0.preimage[t] == w.at(c0.cuts[t]));
  }
  CHECK_THROWS_AS(cutting_points(w, w.depth() + 1), Error);
}

TEST_CASE("interpretation_length_bounds examples") {
  Morphism const fib = fixtures::fib();
  CHECK(interpretation_length_bounds(10, fib, 1) == std::pair<BigInt, BigInt>{3, 20});
  CHECK(interpretation_length_bounds(1, fib, 1) == std::pair<BigInt, BigInt>{-1, 2});
  CHECK(interpretation_length_bounds(10, fib, 4) == std::pair<BigInt, BigInt>{5, 16});
}

TEST_CASE("f_p composition, nesting, gaps and refactorization") {
  for (auto const& c : cases()) {
    CAPTURE(c.name);
    Morphism const sigma = fixtures::make(c.rules);
    unsigned const e     = c.seed.power;
    Window const   w     = build_window(sigma, c.seed, 2000, std::size_t(1) << 26, 8);
    REQUIRE(w.depth() >= 8);
    for (unsigned p = 0; p < 5; ++p) {
      for (std::int64_t i = -50; i <= 50; ++i) {
        CAPTURE(p);
        CAPTURE(i);
        // Away from multiples of e the level-p preimage is not x itself, so
        // composition steps by whole seed powers.
        CHECK(f_p(w, i, p + e) == f_p(w, f_p(w, i, p), e));
        if (e == 1) {
          CHECK(f_p(w, i, p + 1) == f_p(w, f_p(w, i, p), 1));
        }
        CHECK(f_p(w, i, p) < f_p(w, i + 1, p));
      }
    }
    for (unsigned p = 0; p <= 5; ++p) {
      CAPTURE(p);
      CuttingSet const here = cutting_points(w, p);
      CuttingSet const next = cutting_points(w, p + 1);
      for (auto pos : next.cuts) {
        CHECK(here.find(pos) >= 0);
      }
      auto const   ext  = extreme_lengths(sigma, p);
      std::int64_t zero = here.find(0);
      CHECK(zero >= 0);
      for (std::size_t t = 0; t + 1 < here.cuts.size(); ++t) {
        auto const gap = here.cuts[t + 1] - here.cuts[t];
        CHECK(BigNat(static_cast<unsigned long>(gap)) >= ext.narrowest);
        CHECK(BigNat(static_cast<unsigned long>(gap)) <= ext.widest);
        Word const image = iterate(sigma, here.preimage[t], p, std::size_t(1) << 20);
        CHECK(image.size() == static_cast<std::size_t>(gap));
        bool same = true;
        for (std::size_t k = 0; k < image.size(); ++k) {
          same = same && image[k] == w.at(here.cuts[t] + static_cast<std::int64_t>(k));
        }
        CHECK(same);
        CHECK(f_p(w, here.index[t], p) == here.cuts[t]);
        if (p % e == 0) {
          CHECK(w.at(here.index[t]) == here.preimage[t]);
        }
      }
    }
  }
}

TEST_CASE("interpretation lengths obey the length bounds") {
  for (auto const& [name, rules] : fixtures::standard()) {
    CAPTURE(name);
    Morphism const sigma = fixtures::make(rules);
    Language const base(sigma, 30);
    for (unsigned n = 1; n <= 3; ++n) {
      CAPTURE(n);
      Morphism const sn = power(sigma, n);
      std::size_t const widest = sn.widest();
      Language const    language(sn, 30 * widest + 2);
      for (std::size_t len : {1, 2, 3, 5, 8, 13, 21, 30}) {
        auto const& words = base.factors(len).words;
        for (std::size_t k = 0; k < words.size(); k += 1 + words.size() / 6) {
          // The bound concerns interpretations v of U = σ^n(u) under σ^n.
          auto const bounds = interpretation_length_bounds(len, sigma, n);
          Word const U      = iterate(sigma, words[k], n, std::size_t(1) << 20);
          for (auto const& it : interpretations(sn, U, language)) {
            BigInt const t(static_cast<long>(it.core.size()) - 2);
            CHECK(t >= bounds.first);
            CHECK(t <= bounds.second);
          }
        }
      }
    }
  }
}

TEST_CASE("dump_window format") {
  Window const      w = build_window(fixtures::fib(), {2, 0, 0}, 8);
  std::string const d = dump_window(w, 2);
  std::istringstream in(d);
  std::string        line;
  std::int64_t       expected = w.lo();
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    std::string        pos, letter, levels;
    REQUIRE(std::getline(fields, pos, '\t'));
    REQUIRE(std::getline(fields, letter, '\t'));
    REQUIRE(std::getline(fields, levels));
    CHECK(std::stoll(pos) == expected);
    CHECK(letter == w.morphism().token(w.at(expected)));
    CHECK(levels.substr(0, 1) == "0");
    ++expected;
  }
  CHECK(expected == w.hi());
  CHECK(d.find("0\ta\t0,1,2\n") != std::string::npos);
  CHECK(d.find("1\tb\t0\n") != std::string::npos);
}
