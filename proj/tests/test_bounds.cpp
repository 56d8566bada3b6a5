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

#include <cmath>
#include <string>

#include "helpers.hpp"
#include "oracles.hpp"
#include "subrec/bounds.hpp"
#include "subrec/error.hpp"
#include "subrec/fixedpoint.hpp"
#include "subrec/recognizability.hpp"
#include "subrec/seeds.hpp"

using namespace subrec;
using oracle::cpp_int;

namespace {

  cpp_int big(BigNat const& n) {
    return cpp_int(n.get_str());
  }

  // log10 of a positive integer, from its leading digits.
  double log10_of(cpp_int const& n) {
    std::string const s    = n.str();
    std::size_t const head = std::min<std::size_t>(s.size(), 17);
    return std::log10(std::stod(s.substr(0, head))) + static_cast<double>(s.size() - head);
  }

  // max over letters of |σ^n(a)| and min likewise, by direct iteration.
  std::pair<std::size_t, std::size_t> extremes(oracle::Rules const& r, std::size_t n) {
    std::size_t hi = 0, lo = SIZE_MAX;
    for (std::size_t a = 0; a < r.size(); ++a) {
      std::size_t const len = oracle::iterate(r, std::string(1, char('a' + a)), n).size();
      hi                    = std::max(hi, len);
      lo                    = std::min(lo, len);
    }
    return {hi, lo};
  }

  void expect_error(ErrorKind kind, auto&& f) {
    try {
      f();
      FAIL("expected " << to_string(kind));
    } catch (Error const& e) {
      CHECK(e.kind() == kind);
    }
  }

}  // namespace

TEST_CASE("certified_constants against direct iteration") {
  for (auto const& [name, rules] : fixtures::standard()) {
    CAPTURE(name);
    auto const        c  = certified_constants(fixtures::make(rules));
    std::size_t const A2 = rules.size() * rules.size();
    cpp_int const     N  = extremes(rules, A2).first;
    cpp_int const     R  = 2 * cpp_int(extremes(rules, 2 * A2).first);
    CHECK(big(c.N_cert) == N);
    CHECK(big(c.Rret_cert) == R);
    CHECK(big(c.K_cert) == R * N * extremes(rules, 1).first);
    CHECK(big(c.k_cert) == big(c.K_cert) + 1);
  }
  auto const fib = certified_constants(fixtures::fib());
  CHECK(fib.N_cert == 8);
  CHECK(fib.Rret_cert == 110);
  CHECK(fib.K_cert == 1760);
  CHECK(fib.k_cert == 1761);
  CHECK(certified_constants(fixtures::tm()).K_cert == 16384);
  expect_error(ErrorKind::not_primitive, [] { (void)certified_constants(parse_morphism("a -> ab\nb -> b\n")); });
}

TEST_CASE("estimate_N covers every sampled ratio") {
  for (auto const& [name, rules] : fixtures::standard()) {
    CAPTURE(name);
    auto const  est = estimate_N(fixtures::make(rules));
    std::size_t worst = 0;
    for (std::size_t n = 0; n <= 4 * rules.size() * rules.size() && n <= 20; ++n) {
      auto const [hi, lo] = extremes(rules, n);
      worst               = std::max(worst, (hi + lo - 1) / lo);
    }
    CHECK(big(est.sampled) >= worst);
    CHECK(est.N >= est.sampled);
    CHECK(est.N <= certified_constants(fixtures::make(rules)).N_cert);
  }
  CHECK(estimate_N(fixtures::fib()).N == 2);
  CHECK(estimate_N(fixtures::tm()).N == 1);
}

TEST_CASE("image_width and its logarithmic estimate") {
  Morphism const fib = fixtures::fib();
  for (unsigned n : {0u, 1u, 10u, 100u, 1000u}) {
    auto const w = image_width(fib, n, 1000000);
    REQUIRE(w.exact.has_value());
    CHECK(big(*w.exact) == oracle::fibonacci(n + 2));
    CHECK(w.log10 == doctest::Approx(log10_of(oracle::fibonacci(n + 2))).epsilon(1e-12));
  }
  for (unsigned n : {200u, 5000u}) {
    CHECK(estimate_log10_width(fib, n) == doctest::Approx(log10_of(oracle::fibonacci(n + 2))).epsilon(1e-12));
  }
  auto const capped = image_width(fib, 100000, 100);
  CHECK_FALSE(capped.exact.has_value());
  CHECK(capped.approximate);
  CHECK(capped.log10 == doctest::Approx(log10_of(oracle::fibonacci(100002))).epsilon(1e-12));
}

TEST_CASE("bound_from_inputs: Fibonacci with measured constants") {
  Morphism const fib = fixtures::fib();
  BoundInputs    in;
  in.N = 2;
  in.k = 4;
  in.d = 1;
  for (unsigned i = 0; i <= 60; ++i) {
    in.complexity.push_back(i + 1);
  }
  in.linear = 2;
  auto const b = bound_from_inputs(fib, in, BoundMode::empirical_exact, 1000000);
  CHECK(b.R == 24);
  CHECK(b.sum_lo == 12);
  CHECK(b.sum_hi == 50);
  CHECK(b.Q == 31201);
  cpp_int sum = 0;
  for (unsigned i = 12; i <= 50; ++i) {
    sum += i + 1;
  }
  CHECK(big(b.Q) == 1 + 25 * sum);

  cpp_int const expected = 24 * oracle::fibonacci(31203) + 2;
  REQUIRE(b.bound.exact.has_value());
  CHECK(big(*b.bound.exact) == expected);
  CHECK(big(b.bound.digits) == expected.str().size());
  REQUIRE(b.sigma_dQ.exact.has_value());
  CHECK(big(*b.sigma_dQ.exact) == oracle::fibonacci(31203));
  CHECK(big(*b.M.exact) == 24 * oracle::fibonacci(31203));

  // Forcing the logarithmic path must agree with the exact value.
  auto const approx = bound_from_inputs(fib, in, BoundMode::empirical_exact, 100);
  CHECK_FALSE(approx.bound.exact.has_value());
  CHECK(approx.bound.approximate);
  CHECK(approx.bound.log10 == doctest::Approx(log10_of(expected)).epsilon(1e-12));
  CHECK(approx.bound.log10 == doctest::Approx(b.bound.log10).epsilon(1e-12));
}

TEST_CASE("bound_from_inputs beyond the exact complexities") {
  Morphism const fib = fixtures::fib();
  BoundInputs    in;
  in.N = 2;
  in.k = 4;
  in.complexity = {1, 2, 3};
  in.linear     = 5;
  auto const b  = bound_from_inputs(fib, in, BoundMode::certified, 1000);
  cpp_int sum = 0;
  for (unsigned i = 12; i <= 50; ++i) {
    sum += 5 * i;
  }
  CHECK(big(b.Q) == 1 + 5 * 24 * sum);
}

TEST_CASE("bound_maindetail, measured constants") {
  auto const fib = bound_maindetail(fixtures::fib());
  CHECK(fib.mode == BoundMode::empirical_exact);
  CHECK(fib.N == 2);
  CHECK(fib.k == 4);
  CHECK(fib.d == 1);
  CHECK(fib.R == 24);
  CHECK(fib.Q == 31201);
  REQUIRE(fib.bound.exact.has_value());
  CHECK(big(*fib.bound.exact) == 24 * oracle::fibonacci(31203) + 2);

  auto const tm = bound_maindetail(fixtures::tm());
  CHECK(tm.N == 1);
  CHECK(tm.k == 3);
  CHECK(tm.R == 6);
  std::size_t const p6 = oracle::language(oracle::TM, 6).size();
  cpp_int const     Q  = 1 + cpp_int(p6) * (oracle::language(oracle::TM, 6).size()
                                          + oracle::language(oracle::TM, 7).size()
                                          + oracle::language(oracle::TM, 8).size());
  CHECK(big(tm.Q) == Q);
  CHECK(tm.Q == 929);
  REQUIRE(tm.bound.exact.has_value());
  CHECK(big(*tm.bound.exact) == 6 * oracle::power(2, 929) + 2);

  BoundOptions safe;
  safe.safe_d = true;
  CHECK(bound_maindetail(fixtures::fib(), safe).d == 2);
}

TEST_CASE("bound_maindetail, certified constants") {
  BoundOptions opt;
  opt.mode   = BoundMode::certified;
  auto const b = bound_maindetail(fixtures::fib(), opt);
  CHECK(b.N == 8);
  CHECK(b.k == 1761);
  CHECK(b.R == 112784);
  cpp_int const R  = 112784;
  cpp_int const K  = 1760;
  cpp_int       lo = (R + 7) / 8, hi = R * 8 + 2;
  // Σ K·i over [lo, hi] in closed form.
  cpp_int const sum = K * (hi * (hi + 1) / 2 - (lo - 1) * lo / 2);
  CHECK(big(b.Q) == 1 + K * R * sum);
  CHECK(b.Q.get_str() == "142172030654674754764801");
  CHECK_FALSE(b.bound.exact.has_value());
  CHECK(b.bound.log10 > 1e20);
}

TEST_CASE("bound_maindetail errors") {
  expect_error(ErrorKind::not_aperiodic, [] { (void)bound_maindetail(parse_morphism("a -> a\n")); });
  expect_error(ErrorKind::not_aperiodic, [] { (void)bound_maindetail(fixtures::per()); });
  expect_error(ErrorKind::not_primitive, [] { (void)bound_maindetail(parse_morphism("a -> ab\nb -> b\n")); });
}

TEST_CASE("bound_closed_form") {
  cpp_int const two112 = oracle::power(2, 112);
  auto const    fib    = bound_closed_form(fixtures::fib());
  CHECK(big(fib.exponent) == 24 + 12 * two112);
  CHECK(fib.exponent.get_str() == "62307562302417931542365955950641176");
  CHECK(fib.base == 2);
  CHECK_FALSE(fib.value.exact.has_value());
  double const E = std::stod(fib.exponent.get_str());
  CHECK(fib.value.log10 == doctest::Approx(std::log10(2.0) + E * std::log10(2.0)).epsilon(1e-12));
  CHECK(fib.value.log10 == doctest::Approx(1.8756e34).epsilon(1e-4));
  CHECK(fib.log10_log10 == doctest::Approx(std::log10(fib.value.log10)).epsilon(1e-12));

  auto const inj = bound_closed_form(fixtures::fib(), true);
  CHECK(inj.injective);
  CHECK(big(inj.exponent) == 24 + 6 * two112);

  auto const one = bound_closed_form(parse_morphism("a -> aa\n"));
  CHECK(one.degenerate);
  CHECK(big(one.exponent) == 6 + 6 * oracle::power(2, 28));
}

TEST_CASE("bounds dominate the observed constants") {
  for (auto const& [name, rules] : fixtures::standard()) {
    CAPTURE(name);
    Morphism const sigma = fixtures::make(rules);
    auto const     found = admissible_seeds(sigma);
    Window const   w     = build_window(sigma, found.seeds.front(), 1000);
    auto const     emp   = minimal_constant_empirical(w, found.power, 64);
    REQUIRE(emp.heuristic.has_value());
    auto const measured = bound_maindetail(sigma);
    CHECK(measured.bound.log10 >= std::log10(static_cast<double>(*emp.heuristic) + 1));
    BoundOptions opt;
    opt.mode              = BoundMode::certified;
    auto const certified  = bound_maindetail(sigma, opt);
    auto const closed     = bound_closed_form(sigma);
    CHECK(closed.log10_log10 >= std::log10(certified.bound.log10));
    CHECK(certified.bound.log10 >= measured.bound.log10);
  }
}

TEST_CASE("klouda_medkova_bound") {
  CHECK(klouda_medkova_bound(2) == 8);
  CHECK(klouda_medkova_bound(3) == 14);
  CHECK(klouda_medkova_bound(4, 2) == 32);
  CHECK(klouda_medkova_bound(5) == 36);
  CHECK(klouda_medkova_bound(6) == 6 * 6 * 2 + 26);
  CHECK(klouda_medkova_bound(9) == 81 * 2 + 41);
  CHECK(least_divisor(9) == 3);
  CHECK(least_divisor(7) == 7);
  expect_error(ErrorKind::bad_parameters, [] { (void)klouda_medkova_bound(1); });
  expect_error(ErrorKind::bad_parameters, [] { (void)klouda_medkova_bound(4, 3); });
  expect_error(ErrorKind::bad_parameters, [] { (void)klouda_medkova_bound(6, 3); });
}
