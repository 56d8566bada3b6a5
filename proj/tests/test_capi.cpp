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

#include <json.hpp>
#include <string>
#include <thread>

#include "subrec/subrec.h"

using Json = nlohmann::json;

namespace {

  // Owns a morphism handle for the length of a test.
  struct Handle {
    subrec_morphism* ptr = nullptr;
    ~Handle() {
      subrec_morphism_free(ptr);
    }
  };

  std::string fixture(char const* name) {
    return std::string(SUBREC_FIXTURES) + "/" + name;
  }

  // Takes ownership of a returned string.
  std::string take(char* text) {
    std::string out(text ? text : "");
    subrec_string_free(text);
    return out;
  }

  Json take_json(char* text) {
    return Json::parse(take(text));
  }

}  // namespace

TEST_CASE("version and option defaults") {
  CHECK(std::string(subrec_version()).size() > 0);
  subrec_analyze_options o;
  subrec_analyze_options_init(&o);
  CHECK(o.radius == 1000);
  CHECK(o.max_delay == 24);
  CHECK(o.n_report == 16);
  CHECK(o.safe_d == 0);
}

TEST_CASE("parse and load") {
  Handle h;
  REQUIRE(subrec_morphism_parse("a -> ab\nb -> a\n", &h.ptr) == SUBREC_OK);
  CHECK(subrec_morphism_size(h.ptr) == 2);

  int      primitive = 0;
  unsigned witness   = 0;
  CHECK(subrec_is_primitive(h.ptr, &primitive, &witness) == SUBREC_OK);
  CHECK(primitive == 1);
  CHECK(witness == 2);

  char* widest    = nullptr;
  char* narrowest = nullptr;
  CHECK(subrec_extreme_lengths(h.ptr, 10, &widest, &narrowest) == SUBREC_OK);
  CHECK(take(widest) == "144");
  CHECK(take(narrowest) == "89");

  Handle f;
  CHECK(subrec_morphism_load(fixture("tm.morph").c_str(), &f.ptr) == SUBREC_OK);
  CHECK(subrec_morphism_size(f.ptr) == 2);
}

TEST_CASE("input errors carry a message and a kind") {
  Handle h;
  CHECK(subrec_morphism_parse("a -> \n", &h.ptr) == SUBREC_INPUT_ERROR);
  CHECK(h.ptr == nullptr);
  CHECK(std::string(subrec_last_error_kind()) == "EmptyImage");
  CHECK(std::string(subrec_last_error()).size() > 0);

  CHECK(subrec_morphism_load(fixture("missing.morph").c_str(), &h.ptr) == SUBREC_INPUT_ERROR);
  CHECK(std::string(subrec_last_error()).find("no such file") != std::string::npos);
  CHECK(subrec_morphism_load(fixture("duplicate.morph").c_str(), &h.ptr) == SUBREC_INPUT_ERROR);
  CHECK(subrec_morphism_load(fixture("unknown_letter.morph").c_str(), &h.ptr) == SUBREC_INPUT_ERROR);
  CHECK(subrec_morphism_parse(nullptr, &h.ptr) == SUBREC_INPUT_ERROR);
  CHECK(subrec_morphism_parse("a -> b\n", nullptr) == SUBREC_INPUT_ERROR);
}

TEST_CASE("errors are per thread") {
  Handle h;
  CHECK(subrec_morphism_parse("a -> \n", &h.ptr) == SUBREC_INPUT_ERROR);
  std::string other;
  std::thread([&] {
    subrec_morphism* m = nullptr;
    (void)subrec_morphism_parse("a -> a\na -> a\n", &m);
    other = subrec_last_error_kind();
  }).join();
  CHECK(other == "DuplicateRule");
  CHECK(std::string(subrec_last_error_kind()) == "EmptyImage");
}

TEST_CASE("analyze and render") {
  Handle h;
  REQUIRE(subrec_morphism_load(fixture("fib.morph").c_str(), &h.ptr) == SUBREC_OK);
  subrec_analyze_options o;
  subrec_analyze_options_init(&o);
  o.radius    = 200;
  o.max_delay = 10;
  char* out   = nullptr;
  REQUIRE(subrec_analyze(h.ptr, &o, &out) == SUBREC_OK);
  std::string const json = take(out);
  Json const        j    = Json::parse(json);
  CHECK(j["bounds"]["maindetail"]["R"] == "24");
  CHECK(j["delay"]["C"] == 2);
  CHECK(j["empirical"]["radius"] == 200);

  char* text = nullptr;
  REQUIRE(subrec_render_report(json.c_str(), 0, &text) == SUBREC_OK);
  CHECK(take(text).find("synchronizing delay") != std::string::npos);
  REQUIRE(subrec_render_report(json.c_str(), 1, &text) == SUBREC_OK);
  CHECK(Json::parse(take(text)) == j);
  CHECK(subrec_render_report("{not json", 0, &text) == SUBREC_INPUT_ERROR);
}

TEST_CASE("individual analyses") {
  Handle fib;
  Handle per;
  REQUIRE(subrec_morphism_load(fixture("fib.morph").c_str(), &fib.ptr) == SUBREC_OK);
  REQUIRE(subrec_morphism_load(fixture("per.morph").c_str(), &per.ptr) == SUBREC_OK);
  char* out = nullptr;

  REQUIRE(subrec_bound(fib.ptr, 1, 0, &out) == SUBREC_OK);
  Json const b = take_json(out);
  CHECK(b["maindetail"]["R"] == "112784");
  CHECK(b["closed_form"]["exponent"] == "62307562302417931542365955950641176");

  REQUIRE(subrec_delay(fib.ptr, 16, &out) == SUBREC_OK);
  CHECK(take_json(out)["C"] == 2);
  REQUIRE(subrec_delay(per.ptr, 16, &out) == SUBREC_OK);
  Json const d = take_json(out);
  CHECK(d["C"].is_null());
  CHECK(d["periodic"] == true);

  REQUIRE(subrec_verify(fib.ptr, 1, 1, 1000, &out) == SUBREC_OK);
  CHECK(take_json(out)["ok"] == true);
  REQUIRE(subrec_verify(per.ptr, 5, 1, 1000, &out) == SUBREC_OK);
  Json const v = take_json(out);
  CHECK(v["ok"] == false);
  CHECK(v["counterexample"].is_object());
  CHECK(subrec_verify(fib.ptr, 600, 1, 100, &out) == SUBREC_RESOURCE_ERROR);
  CHECK(std::string(subrec_last_error_kind()) == "WindowTooSmall");

  REQUIRE(subrec_language(fib.ptr, 3, &out) == SUBREC_OK);
  CHECK(take_json(out)["factors"] == Json::array({"aab", "aba", "baa", "bab"}));

  REQUIRE(subrec_seeds(fib.ptr, 0, &out) == SUBREC_OK);
  CHECK(take_json(out)["power"] == 2);

  REQUIRE(subrec_window_dump(fib.ptr, 8, 2, &out) == SUBREC_OK);
  CHECK(take(out).find("0\ta\t0,1,2\n") != std::string::npos);
}

TEST_CASE("non-primitive input") {
  Handle h;
  REQUIRE(subrec_morphism_load(fixture("not_primitive.morph").c_str(), &h.ptr) == SUBREC_OK);
  int      primitive = 1;
  unsigned witness   = 7;
  CHECK(subrec_is_primitive(h.ptr, &primitive, &witness) == SUBREC_OK);
  CHECK(primitive == 0);
  char* out = nullptr;
  CHECK(subrec_delay(h.ptr, 8, &out) == SUBREC_INPUT_ERROR);
  CHECK(std::string(subrec_last_error_kind()) == "NotPrimitive");
  CHECK(out == nullptr);
}
