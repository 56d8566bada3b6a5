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

// subrec: command-line front end over the C interface.
//
// Exit codes: 0 success, 1 negative analysis result (counterexample found,
// no delay, not primitive), 2 input error, 3 resource cap reached.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "subrec/subrec.h"

namespace {

  using Json = nlohmann::json;

  constexpr int exit_ok       = 0;
  constexpr int exit_negative = 1;
  constexpr int exit_input    = 2;

  struct MorphismDeleter {
    void operator()(subrec_morphism* m) const {
      subrec_morphism_free(m);
    }
  };
  using MorphismPtr = std::unique_ptr<subrec_morphism, MorphismDeleter>;

  struct StringDeleter {
    void operator()(char* s) const {
      subrec_string_free(s);
    }
  };
  using OwnedString = std::unique_ptr<char, StringDeleter>;

  // Thrown to leave a subcommand with the status of a failed C call.
  struct Failure {
    int code;
  };

  void check(subrec_status status) {
    if (status != SUBREC_OK) {
      std::cerr << "subrec: error: " << subrec_last_error() << "\n";
      throw Failure{static_cast<int>(status) == SUBREC_INTERNAL_ERROR ? exit_input : static_cast<int>(status)};
    }
  }

  MorphismPtr load(std::string const& path) {
    subrec_morphism* raw = nullptr;
    check(subrec_morphism_load(path.c_str(), &raw));
    return MorphismPtr(raw);
  }

  // Calls an API function that fills a char** and returns the string.
  template <class Call>
  std::string fetch(Call&& call) {
    char* raw = nullptr;
    check(call(&raw));
    OwnedString owned(raw);
    return std::string(raw);
  }

  std::string show_value(Json const& v) {
    std::string out;
    if (!v["exact"].is_null()) {
      std::string const digits = v["exact"].get<std::string>();
      out = digits.size() <= 80 ? digits
                                : "<" + std::to_string(digits.size()) + " digits, leading " + digits.substr(0, 12) + "…>";
    } else {
      out = v["expr"].get<std::string>();
    }
    if (!v["log10"].is_null()) {
      char buffer[64];
      std::snprintf(buffer, sizeof buffer, "%.10g", v["log10"].get<double>());
      out += std::string("  (log10 ") + buffer + (v["approximate"].get<bool>() ? ", approximate)" : ")");
    }
    return out;
  }

  std::string text_of(Json const& v) {
    return v.is_string() ? v.get<std::string>() : v.dump();
  }

  void print_bound(Json const& j) {
    Json const& b = j["maindetail"];
    std::cout << "mode      " << b["mode"].get<std::string>() << "\n"
              << "N         " << text_of(b["N"]) << "\n"
              << "k         " << text_of(b["k"]) << "\n"
              << "K         " << text_of(b["K"]) << "\n"
              << "d         " << b["d"] << "\n"
              << "R         " << text_of(b["R"]) << "\n"
              << "Q         " << text_of(b["Q"]) << "\n"
              << "M         " << show_value(b["M"]) << "\n"
              << "bound     " << show_value(b["bound"]) << "\n"
              << "digits    " << text_of(b["digits"]) << "\n";
    for (auto const& note : b["notes"]) {
      std::cout << "note      " << note.get<std::string>() << "\n";
    }
    Json const& cf = j["closed_form"];
    std::cout << "closed-form exponent  " << cf["exponent"].get<std::string>() << "\n"
              << "closed-form bound     " << show_value(cf["value"]) << "\n";
  }

  std::string optional_number(Json const& v) {
    return v.is_null() ? std::string("none") : v.dump();
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Recognizability constants of primitive substitutions"};
  app.require_subcommand(1);
  app.set_version_flag("--version", subrec_version());

  std::string file;
  bool        as_json = false;

  auto* analyze = app.add_subcommand("analyze", "Full report");
  std::size_t radius = 1000, max_delay = 24;
  analyze->add_option("FILE", file, "Morphism file")->required();
  analyze->add_flag("--json", as_json, "JSON output");
  analyze->add_option("--radius", radius, "Window radius for the empirical constant");
  analyze->add_option("--max-delay", max_delay, "Largest length tried for the synchronizing delay");
  bool safe_d = false;
  analyze->add_flag("--safe-d", safe_d, "Use d = #A in the bounds");

  auto*       bound = app.add_subcommand("bound", "Bound on the constant of recognizability");
  std::string mode  = "empirical";
  bound->add_option("FILE", file, "Morphism file")->required();
  bound->add_option("--mode", mode, "empirical or certified")
      ->check(CLI::IsMember({"empirical", "certified"}));
  bound->add_flag("--safe-d", safe_d, "Use d = #A");
  bound->add_flag("--json", as_json, "JSON output");

  auto*       delay = app.add_subcommand("delay", "Synchronizing delay");
  std::size_t n_max = 24;
  delay->add_option("FILE", file, "Morphism file")->required();
  delay->add_option("--max", n_max, "Largest length tried");
  delay->add_flag("--json", as_json, "JSON output");

  auto*       verify = app.add_subcommand("verify", "Check a recognizability constant on a window");
  std::size_t L      = 0;
  unsigned    level  = 1;
  std::string dump_path;
  verify->add_option("FILE", file, "Morphism file")->required();
  verify->add_option("--L", L, "Constant to check")->required();
  verify->add_option("--level", level, "Power p of the morphism")->check(CLI::PositiveNumber);
  verify->add_option("--radius", radius, "Window radius");
  verify->add_option("--dump", dump_path, "Write the window with its cut levels to this path");
  verify->add_flag("--json", as_json, "JSON output");

  auto*       language = app.add_subcommand("language", "Factors of a given length");
  std::size_t n        = 0;
  language->add_option("FILE", file, "Morphism file")->required();
  language->add_option("--n", n, "Factor length")->required();
  language->add_flag("--json", as_json, "JSON output");

  auto*    seeds     = app.add_subcommand("seeds", "Admissible fixed-point seeds");
  unsigned max_power = 0;
  seeds->add_option("FILE", file, "Morphism file")->required();
  seeds->add_option("--max-power", max_power, "Largest power e searched (default 2(#A)^2)");
  seeds->add_flag("--json", as_json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e);
    return code == 0 ? exit_ok : exit_input;
  }

  try {
    MorphismPtr const sigma = load(file);

    if (analyze->parsed()) {
      subrec_analyze_options options;
      subrec_analyze_options_init(&options);
      options.radius    = radius;
      options.max_delay = max_delay;
      options.safe_d    = safe_d ? 1 : 0;
      std::string const report =
          fetch([&](char** out) { return subrec_analyze(sigma.get(), &options, out); });
      std::cout << fetch([&](char** out) { return subrec_render_report(report.c_str(), as_json, out); });
      return Json::parse(report)["primitive"]["is"].get<bool>() ? exit_ok : exit_negative;
    }

    if (bound->parsed()) {
      std::string const out = fetch(
          [&](char** o) { return subrec_bound(sigma.get(), mode == "certified", safe_d, o); });
      if (as_json) {
        std::cout << out;
      } else {
        print_bound(Json::parse(out));
      }
      return exit_ok;
    }

    if (delay->parsed()) {
      std::string const out = fetch([&](char** o) { return subrec_delay(sigma.get(), n_max, o); });
      Json const        j   = Json::parse(out);
      if (as_json) {
        std::cout << out;
      } else {
        if (j["C"].is_null()) {
          std::cout << "C=none(" << j["n_max"] << ")";
          if (j["periodic"].get<bool>()) {
            std::cout << " periodic";
          }
          std::cout << "\n";
        } else {
          std::cout << "C=" << j["C"] << " L_from_C=" << optional_number(j["L_from_C"]) << "\n";
        }
        for (auto const& f : j["failures"]) {
          if (f["count"].get<std::size_t>() > 0) {
            std::cout << "  n=" << f["n"] << ": " << f["count"] << " unsynchronized";
            for (auto const& w : f["words"]) {
              std::cout << " " << w.get<std::string>();
            }
            std::cout << "\n";
          }
        }
      }
      return j["C"].is_null() ? exit_negative : exit_ok;
    }

    if (verify->parsed()) {
      std::string const out =
          fetch([&](char** o) { return subrec_verify(sigma.get(), L, level, radius, o); });
      if (!dump_path.empty()) {
        std::string const dump =
            fetch([&](char** o) { return subrec_window_dump(sigma.get(), radius, level, o); });
        std::ofstream stream(dump_path);
        if (!stream || !(stream << dump)) {
          std::cerr << "subrec: error: cannot write " << dump_path << "\n";
          return exit_input;
        }
      }
      Json const j = Json::parse(out);
      if (as_json) {
        std::cout << out;
      } else if (j["ok"].get<bool>()) {
        std::cout << "ok: L=" << L << " level=" << level << " holds on window [" << j["window"]["lo"]
                  << ", " << j["window"]["hi"] << ")\n";
      } else {
        Json const& c = j["counterexample"];
        std::cout << "counterexample: L=" << L << " level=" << level << " i=" << c["i"]
                  << " f(i)=" << c["cut"] << " x_i=" << c["cut_letter"].get<std::string>()
                  << " m=" << c["m"];
        if (c["m_letter"].is_null()) {
          std::cout << " (m is not a cut)\n";
        } else {
          std::cout << " j=" << c["j"] << " x_j=" << c["m_letter"].get<std::string>() << "\n";
        }
      }
      return j["ok"].get<bool>() ? exit_ok : exit_negative;
    }

    if (language->parsed()) {
      std::string const out = fetch([&](char** o) { return subrec_language(sigma.get(), n, o); });
      if (as_json) {
        std::cout << out;
      } else {
        Json const j = Json::parse(out);
        std::cout << "p(" << n << ")=" << j["complexity"] << "\n";
        for (auto const& w : j["factors"]) {
          std::cout << w.get<std::string>() << "\n";
        }
      }
      return exit_ok;
    }

    if (seeds->parsed()) {
      std::string const out = fetch([&](char** o) { return subrec_seeds(sigma.get(), max_power, o); });
      Json const        j   = Json::parse(out);
      if (as_json) {
        std::cout << out;
      } else if (j["pairs"].empty()) {
        std::cout << "no admissible seed with e <= " << j["max_power"] << "\n";
      } else {
        std::cout << "e=" << j["power"] << "\n";
        for (auto const& p : j["pairs"]) {
          std::cout << p[0].get<std::string>() << "." << p[1].get<std::string>() << "\n";
        }
      }
      return j["pairs"].empty() ? exit_negative : exit_ok;
    }
  } catch (Failure const& f) {
    return f.code;
  }
  return exit_input;
}
