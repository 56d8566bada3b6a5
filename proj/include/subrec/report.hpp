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

// The full analysis of a morphism and its JSON / text renderings. Big
// integers are carried as decimal strings so that reports round-trip
// through JSON without loss.

#ifndef SUBREC_REPORT_HPP_
#define SUBREC_REPORT_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "subrec/bounds.hpp"
#include "subrec/fixedpoint.hpp"
#include "subrec/language.hpp"
#include "subrec/morphism.hpp"
#include "subrec/recognizability.hpp"
#include "subrec/seeds.hpp"

namespace subrec {

  using Json = nlohmann::json;

  struct ReportValue {
    std::optional<std::string> exact;
    std::optional<double>      log10;  // unset when it overflows a double
    std::string                expr;
    std::string                digits;
    bool                       approximate = false;

    bool operator==(ReportValue const&) const = default;
  };

  struct ReportBound {
    std::string              mode;
    std::string              N, k, K;
    unsigned                 d = 1;
    std::string              R, Q, sum_lo, sum_hi;
    ReportValue              sigma_dQ, M, bound;
    std::vector<std::string> notes;

    bool operator==(ReportBound const&) const = default;
  };

  struct ReportClosedForm {
    std::string base, exponent;
    ReportValue value;
    double      log10_log10 = 0;
    bool        injective   = false;
    bool        degenerate  = false;

    bool operator==(ReportClosedForm const&) const = default;
  };

  struct ReportCounterexample {
    std::int64_t                i = 0, cut = 0, m = 0;
    std::string                 cut_letter;
    std::optional<std::string>  m_letter;
    std::optional<std::int64_t> j;

    bool operator==(ReportCounterexample const&) const = default;
  };

  struct ReportFailures {
    std::size_t              n     = 0;
    std::size_t              count = 0;
    std::vector<std::string> words;  // at most the first 16

    bool operator==(ReportFailures const&) const = default;
  };

  struct AnalysisReport {
    std::vector<std::string>           alphabet;
    std::map<std::string, std::string> rules;

    bool     primitive = false;
    unsigned witness   = 0;

    unsigned                                seed_power = 0;
    std::vector<std::array<std::string, 2>> seed_pairs;

    struct Constants {
      std::size_t widest = 0, narrowest = 0;
      std::string N, k, K_emp, K_cert;
      unsigned    d = 0, d_safe = 0;

      bool operator==(Constants const&) const = default;
    } constants;

    std::vector<std::size_t> complexity;  // p(1), ..., p(n_report)

    struct Delay {
      std::optional<std::size_t>  C, L_from_C;
      std::size_t                 n_max    = 0;
      bool                        periodic = false;
      std::vector<ReportFailures> failures;

      bool operator==(Delay const&) const = default;
    } delay;

    struct Empirical {
      std::size_t                         L_lower = 0;
      std::optional<std::size_t>          L_heuristic;
      std::size_t                         radius     = 0;
      unsigned                            level      = 1;
      std::size_t                         scanned_to = 0;
      std::optional<ReportCounterexample> counterexample;

      bool operator==(Empirical const&) const = default;
    } empirical;

    struct Bounds {
      std::optional<ReportBound>      maindetail, maindetail_certified;
      std::optional<ReportClosedForm> closed_form;
      std::optional<std::uint64_t>    klouda_medkova;

      bool operator==(Bounds const&) const = default;
    } bounds;

    struct Caps {
      std::size_t radius = 0, max_delay = 0, n_report = 0, aperiodic_nmax = 0, exact_cap = 0,
                  L_max = 0;

      bool operator==(Caps const&) const = default;
    } caps;

    std::vector<std::string> warnings;

    bool operator==(AnalysisReport const&) const = default;
  };

  struct AnalyzeOptions {
    std::size_t radius         = 1000;
    std::size_t max_delay      = 24;
    std::size_t n_report       = 16;
    std::size_t aperiodic_nmax = 200;
    std::size_t L_max          = 64;
    std::size_t exact_cap      = default_exact_cap();
    bool        safe_d         = false;
  };

  AnalysisReport analyze(Morphism const& sigma, AnalyzeOptions const& options = {});

  void to_json(Json& j, AnalysisReport const& r);
  void from_json(Json const& j, AnalysisReport& r);

  // Pretty JSON (sorted keys) or aligned text tables. Integers longer than
  // 80 digits are abbreviated in text only.
  std::string emit_report(AnalysisReport const& report, bool json);

  // JSON forms of the individual analyses.
  Json bound_json(BoundBreakdown const& b);
  Json closed_form_json(ClosedForm const& cf);
  Json delay_json(Morphism const& sigma, SyncResult const& r);
  Json verify_json(Window const& window, std::size_t L, unsigned p, VerifyVerdict const& v);
  Json language_json(Morphism const& sigma, FactorSet const& f);
  Json seeds_json(Morphism const& sigma, SeedSearch const& s);
  Json counterexample_json(Morphism const& sigma, Counterexample const& c);

}  // namespace subrec

#endif  // SUBREC_REPORT_HPP_
