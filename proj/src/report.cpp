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

#include "subrec/report.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "subrec/error.hpp"
#include "subrec/matrix.hpp"

namespace subrec {

  namespace {

    template <class T>
    Json opt(std::optional<T> const& v) {
      return v ? Json(*v) : Json(nullptr);
    }

    template <class T>
    std::optional<T> get_opt(Json const& j, char const* key) {
      if (!j.contains(key) || j.at(key).is_null()) {
        return std::nullopt;
      }
      return j.at(key).get<T>();
    }

    // Digit counts are plain numbers when they fit, strings otherwise.
    Json digits_json(std::string const& digits) {
      if (digits.size() < 19) {
        return Json(std::stoull(digits));
      }
      return Json(digits);
    }

    std::string digits_from(Json const& j) {
      return j.is_string() ? j.get<std::string>() : std::to_string(j.get<std::uint64_t>());
    }

    ReportValue to_report(BigValue const& v) {
      ReportValue r;
      if (v.exact) {
        r.exact = to_decimal(*v.exact);
      }
      if (std::isfinite(v.log10)) {
        r.log10 = v.log10;
      }
      r.expr        = v.expr;
      r.digits      = to_decimal(v.digits);
      r.approximate = v.approximate;
      return r;
    }

    std::string rational(BigRational const& q) {
      return q.get_str();
    }

    ReportBound to_report(BoundBreakdown const& b) {
      ReportBound r;
      r.mode     = to_string(b.mode);
      r.N        = to_decimal(b.N);
      r.k        = to_decimal(b.k);
      r.K        = rational(b.K);
      r.d        = b.d;
      r.R        = to_decimal(b.R);
      r.Q        = to_decimal(b.Q);
      r.sum_lo   = to_decimal(b.sum_lo);
      r.sum_hi   = to_decimal(b.sum_hi);
      r.sigma_dQ = to_report(b.sigma_dQ);
      r.M        = to_report(b.M);
      r.bound    = to_report(b.bound);
      r.notes    = b.notes;
      return r;
    }

    ReportClosedForm to_report(ClosedForm const& cf) {
      ReportClosedForm r;
      r.base        = to_decimal(cf.base);
      r.exponent    = to_decimal(cf.exponent);
      r.value       = to_report(cf.value);
      r.log10_log10 = cf.log10_log10;
      r.injective   = cf.injective;
      r.degenerate  = cf.degenerate;
      return r;
    }

    ReportCounterexample to_report(Morphism const& sigma, Counterexample const& c) {
      ReportCounterexample r;
      r.i          = c.i;
      r.cut        = c.cut;
      r.m          = c.m;
      r.cut_letter = sigma.token(c.cut_letter);
      if (c.m_letter) {
        r.m_letter = sigma.token(*c.m_letter);
      }
      r.j = c.j;
      return r;
    }

  }  // namespace

    void to_json(Json& j, ReportValue const& v) {
      j = Json{{"exact", opt(v.exact)},
               {"log10", opt(v.log10)},
               {"expr", v.expr},
               {"digits", digits_json(v.digits)},
               {"approximate", v.approximate}};
    }

    void from_json(Json const& j, ReportValue& v) {
      v.exact       = get_opt<std::string>(j, "exact");
      v.log10       = get_opt<double>(j, "log10");
      v.expr        = j.at("expr").get<std::string>();
      v.digits      = digits_from(j.at("digits"));
      v.approximate = j.at("approximate").get<bool>();
    }

    void to_json(Json& j, ReportBound const& b) {
      j = Json{{"mode", b.mode},
               {"N", b.N},
               {"k", b.k},
               {"K", b.K},
               {"d", b.d},
               {"R", b.R},
               {"Q", b.Q},
               {"sum_range", Json::array({b.sum_lo, b.sum_hi})},
               {"sigma_dQ", b.sigma_dQ},
               {"M", b.M},
               {"bound", b.bound},
               {"digits", digits_json(b.bound.digits)},
               {"notes", b.notes}};
    }

    void from_json(Json const& j, ReportBound& b) {
      b.mode     = j.at("mode").get<std::string>();
      b.N        = j.at("N").get<std::string>();
      b.k        = j.at("k").get<std::string>();
      b.K        = j.at("K").get<std::string>();
      b.d        = j.at("d").get<unsigned>();
      b.R        = j.at("R").get<std::string>();
      b.Q        = j.at("Q").get<std::string>();
      b.sum_lo   = j.at("sum_range").at(0).get<std::string>();
      b.sum_hi   = j.at("sum_range").at(1).get<std::string>();
      b.sigma_dQ = j.at("sigma_dQ").get<ReportValue>();
      b.M        = j.at("M").get<ReportValue>();
      b.bound    = j.at("bound").get<ReportValue>();
      b.notes    = j.at("notes").get<std::vector<std::string>>();
    }

    void to_json(Json& j, ReportClosedForm const& c) {
      j = Json{{"base", c.base},
               {"exponent", c.exponent},
               {"value", c.value},
               {"log10", opt(c.value.log10)},
               {"log10_log10", c.log10_log10},
               {"injective", c.injective},
               {"degenerate", c.degenerate}};
    }

    void from_json(Json const& j, ReportClosedForm& c) {
      c.base        = j.at("base").get<std::string>();
      c.exponent    = j.at("exponent").get<std::string>();
      c.value       = j.at("value").get<ReportValue>();
      c.log10_log10 = j.at("log10_log10").get<double>();
      c.injective   = j.at("injective").get<bool>();
      c.degenerate  = j.at("degenerate").get<bool>();
    }

    void to_json(Json& j, ReportCounterexample const& c) {
      j = Json{{"i", c.i},
               {"cut", c.cut},
               {"m", c.m},
               {"cut_letter", c.cut_letter},
               {"m_letter", opt(c.m_letter)},
               {"j", opt(c.j)}};
    }

    void from_json(Json const& j, ReportCounterexample& c) {
      c.i          = j.at("i").get<std::int64_t>();
      c.cut        = j.at("cut").get<std::int64_t>();
      c.m          = j.at("m").get<std::int64_t>();
      c.cut_letter = j.at("cut_letter").get<std::string>();
      c.m_letter   = get_opt<std::string>(j, "m_letter");
      c.j          = get_opt<std::int64_t>(j, "j");
    }

    void to_json(Json& j, ReportFailures const& f) {
      j = Json{{"n", f.n}, {"count", f.count}, {"words", f.words}};
    }

    void from_json(Json const& j, ReportFailures& f) {
      f.n     = j.at("n").get<std::size_t>();
      f.count = j.at("count").get<std::size_t>();
      f.words = j.at("words").get<std::vector<std::string>>();
    }

  namespace {

    template <class T>
    Json opt_obj(std::optional<T> const& v) {
      if (!v) {
        return nullptr;
      }
      Json j;
      to_json(j, *v);
      return j;
    }

    template <class T>
    std::optional<T> get_opt_obj(Json const& j, char const* key) {
      if (!j.contains(key) || j.at(key).is_null()) {
        return std::nullopt;
      }
      T v;
      from_json(j.at(key), v);
      return v;
    }

    std::vector<ReportFailures> failures_of(Morphism const& sigma, SyncResult const& r) {
      std::vector<ReportFailures> out;
      for (std::size_t n = 0; n < r.unsynchronized.size(); ++n) {
        auto const&    words = r.unsynchronized[n];
        ReportFailures f;
        f.n     = n + 1;
        f.count = words.size();
        for (std::size_t t = 0; t < words.size() && t < 16; ++t) {
          f.words.push_back(sigma.format(words[t]));
        }
        out.push_back(std::move(f));
      }
      return out;
    }

    // Text helpers.

    std::string show_big(std::string const& decimal) {
      if (decimal.size() <= 80) {
        return decimal;
      }
      return "<" + std::to_string(decimal.size()) + " digits, leading " + decimal.substr(0, 12) + "…>";
    }

    std::string show_value(ReportValue const& v) {
      std::ostringstream out;
      if (v.exact) {
        out << show_big(*v.exact);
      } else {
        out << v.expr;
      }
      if (v.log10) {
        out << "  (log10 " << std::setprecision(10) << *v.log10 << (v.approximate ? ", approximate" : "")
            << ")";
      } else {
        out << "  (" << v.digits << " digits)";
      }
      return out.str();
    }

    class Table {
     public:
      explicit Table(std::string title) : _title(std::move(title)) {}

      Table& row(std::string key, std::string value) {
        _rows.emplace_back(std::move(key), std::move(value));
        return *this;
      }

      void print(std::ostream& out) const {
        std::size_t width = 0;
        for (auto const& [k, v] : _rows) {
          width = std::max(width, k.size());
        }
        out << _title << "\n";
        for (auto const& [k, v] : _rows) {
          out << "  " << std::left << std::setw(static_cast<int>(width)) << k << "  " << v << "\n";
        }
        out << "\n";
      }

     private:
      std::string                                      _title;
      std::vector<std::pair<std::string, std::string>> _rows;
    };

    void bound_table(std::ostream& out, std::string const& title, ReportBound const& b) {
      Table t(title);
      t.row("N", show_big(b.N))
          .row("k", show_big(b.k))
          .row("K", b.K)
          .row("d", std::to_string(b.d))
          .row("R", show_big(b.R))
          .row("Q", show_big(b.Q))
          .row("sum range", show_big(b.sum_lo) + " .. " + show_big(b.sum_hi))
          .row("|sigma^dQ|", show_value(b.sigma_dQ))
          .row("M", show_value(b.M))
          .row("bound", show_value(b.bound));
      for (auto const& n : b.notes) {
        t.row("note", n);
      }
      t.print(out);
    }

    std::string or_none(std::optional<std::size_t> v) {
      return v ? std::to_string(*v) : std::string("none");
    }

  }  // namespace

  Json bound_json(BoundBreakdown const& b) {
    Json j;
    to_json(j, to_report(b));
    return j;
  }

  Json closed_form_json(ClosedForm const& cf) {
    Json j;
    to_json(j, to_report(cf));
    return j;
  }

  Json counterexample_json(Morphism const& sigma, Counterexample const& c) {
    Json j;
    to_json(j, to_report(sigma, c));
    return j;
  }

  Json delay_json(Morphism const& sigma, SyncResult const& r) {
    return Json{{"C", opt(r.delay)},
                {"L_from_C", opt(r.L_from_C())},
                {"n_max", r.n_max},
                {"periodic", r.periodic},
                {"failures", failures_of(sigma, r)}};
  }

  Json verify_json(Window const& window, std::size_t L, unsigned p, VerifyVerdict const& v) {
    Json j{{"L", L},
           {"level", p},
           {"ok", v.ok},
           {"window", Json{{"lo", window.lo()}, {"hi", window.hi()}}},
           {"counterexample", nullptr}};
    if (v.counterexample) {
      j["counterexample"] = counterexample_json(window.morphism(), *v.counterexample);
    }
    return j;
  }

  Json language_json(Morphism const& sigma, FactorSet const& f) {
    std::vector<std::string> words;
    words.reserve(f.words.size());
    for (auto const& w : f.words) {
      words.push_back(sigma.format(w));
    }
    return Json{{"n", f.length}, {"complexity", f.words.size()}, {"factors", words}};
  }

  Json seeds_json(Morphism const& sigma, SeedSearch const& s) {
    Json pairs = Json::array();
    for (auto const& seed : s.seeds) {
      pairs.push_back(Json::array({sigma.token(seed.left), sigma.token(seed.right)}));
    }
    return Json{{"power", s.power}, {"pairs", pairs}, {"max_power", s.max_power}, {"cap_hit", s.cap_hit}};
  }

  void to_json(Json& j, AnalysisReport const& r) {
    Json pairs = Json::array();
    for (auto const& p : r.seed_pairs) {
      pairs.push_back(Json::array({p[0], p[1]}));
    }
    Json bounds{{"maindetail", opt_obj(r.bounds.maindetail)},
                {"maindetail_certified", opt_obj(r.bounds.maindetail_certified)},
                {"closed_form", opt_obj(r.bounds.closed_form)}};
    if (r.bounds.klouda_medkova) {
      bounds["klouda_medkova"] = *r.bounds.klouda_medkova;
    }
    j = Json{
        {"alphabet", r.alphabet},
        {"rules", r.rules},
        {"primitive", {{"is", r.primitive}, {"witness", r.witness}}},
        {"seeds", {{"power", r.seed_power}, {"pairs", pairs}}},
        {"constants",
         {{"widest", r.constants.widest},
          {"narrowest", r.constants.narrowest},
          {"N", r.constants.N},
          {"k", r.constants.k},
          {"K_emp", r.constants.K_emp},
          {"K_cert", r.constants.K_cert},
          {"d", r.constants.d},
          {"d_safe", r.constants.d_safe}}},
        {"complexity", r.complexity},
        {"delay",
         {{"C", opt(r.delay.C)},
          {"L_from_C", opt(r.delay.L_from_C)},
          {"n_max", r.delay.n_max},
          {"periodic", r.delay.periodic},
          {"failures", r.delay.failures}}},
        {"empirical",
         {{"L_lower", r.empirical.L_lower},
          {"L_heuristic", opt(r.empirical.L_heuristic)},
          {"radius", r.empirical.radius},
          {"level", r.empirical.level},
          {"scanned_to", r.empirical.scanned_to},
          {"counterexample", opt_obj(r.empirical.counterexample)}}},
        {"bounds", bounds},
        {"caps",
         {{"radius", r.caps.radius},
          {"max_delay", r.caps.max_delay},
          {"n_report", r.caps.n_report},
          {"aperiodic_nmax", r.caps.aperiodic_nmax},
          {"exact_cap", r.caps.exact_cap},
          {"L_max", r.caps.L_max}}},
        {"warnings", r.warnings},
    };
  }

  void from_json(Json const& j, AnalysisReport& r) {
    r.alphabet  = j.at("alphabet").get<std::vector<std::string>>();
    r.rules     = j.at("rules").get<std::map<std::string, std::string>>();
    r.primitive = j.at("primitive").at("is").get<bool>();
    r.witness   = j.at("primitive").at("witness").get<unsigned>();

    r.seed_power = j.at("seeds").at("power").get<unsigned>();
    r.seed_pairs.clear();
    for (auto const& p : j.at("seeds").at("pairs")) {
      r.seed_pairs.push_back({p.at(0).get<std::string>(), p.at(1).get<std::string>()});
    }

    auto const& c          = j.at("constants");
    r.constants.widest    = c.at("widest").get<std::size_t>();
    r.constants.narrowest = c.at("narrowest").get<std::size_t>();
    r.constants.N         = c.at("N").get<std::string>();
    r.constants.k         = c.at("k").get<std::string>();
    r.constants.K_emp     = c.at("K_emp").get<std::string>();
    r.constants.K_cert    = c.at("K_cert").get<std::string>();
    r.constants.d         = c.at("d").get<unsigned>();
    r.constants.d_safe    = c.at("d_safe").get<unsigned>();

    r.complexity = j.at("complexity").get<std::vector<std::size_t>>();

    auto const& d     = j.at("delay");
    r.delay.C        = get_opt<std::size_t>(d, "C");
    r.delay.L_from_C = get_opt<std::size_t>(d, "L_from_C");
    r.delay.n_max    = d.at("n_max").get<std::size_t>();
    r.delay.periodic = d.at("periodic").get<bool>();
    r.delay.failures.clear();
    for (auto const& f : d.at("failures")) {
      ReportFailures rf;
      from_json(f, rf);
      r.delay.failures.push_back(std::move(rf));
    }

    auto const& e              = j.at("empirical");
    r.empirical.L_lower        = e.at("L_lower").get<std::size_t>();
    r.empirical.L_heuristic    = get_opt<std::size_t>(e, "L_heuristic");
    r.empirical.radius         = e.at("radius").get<std::size_t>();
    r.empirical.level          = e.at("level").get<unsigned>();
    r.empirical.scanned_to     = e.at("scanned_to").get<std::size_t>();
    r.empirical.counterexample = get_opt_obj<ReportCounterexample>(e, "counterexample");

    auto const& b                  = j.at("bounds");
    r.bounds.maindetail           = get_opt_obj<ReportBound>(b, "maindetail");
    r.bounds.maindetail_certified = get_opt_obj<ReportBound>(b, "maindetail_certified");
    r.bounds.closed_form          = get_opt_obj<ReportClosedForm>(b, "closed_form");
    r.bounds.klouda_medkova       = get_opt<std::uint64_t>(b, "klouda_medkova");

    auto const& caps        = j.at("caps");
    r.caps.radius          = caps.at("radius").get<std::size_t>();
    r.caps.max_delay       = caps.at("max_delay").get<std::size_t>();
    r.caps.n_report        = caps.at("n_report").get<std::size_t>();
    r.caps.aperiodic_nmax  = caps.at("aperiodic_nmax").get<std::size_t>();
    r.caps.exact_cap       = caps.at("exact_cap").get<std::size_t>();
    r.caps.L_max           = caps.at("L_max").get<std::size_t>();

    r.warnings = j.at("warnings").get<std::vector<std::string>>();
  }

  AnalysisReport analyze(Morphism const& sigma, AnalyzeOptions const& options) {
    AnalysisReport r;
    r.caps = {options.radius,         options.max_delay, options.n_report,
              options.aperiodic_nmax, options.exact_cap, options.L_max};

    r.alphabet = sigma.tokens();
    for (Letter a = 0; a < sigma.size(); ++a) {
      r.rules[sigma.token(a)] = sigma.format(sigma.image(a));
    }
    r.constants.widest    = sigma.widest();
    r.constants.narrowest = sigma.narrowest();
    r.constants.d_safe    = static_cast<unsigned>(sigma.size());

    auto const primitivity = is_primitive(sigma);
    r.primitive            = primitivity.primitive;
    r.witness              = primitivity.witness;
    if (!r.primitive) {
      r.warnings.push_back("not primitive: no further analysis");
      return r;
    }

    SeedSearch const seeds = admissible_seeds(sigma);
    r.seed_power           = seeds.power;
    for (auto const& s : seeds.seeds) {
      r.seed_pairs.push_back({sigma.token(s.left), sigma.token(s.right)});
    }
    if (seeds.seeds.empty()) {
      r.warnings.push_back("no admissible seed with power <= " + std::to_string(seeds.max_power));
    }

    Language const language(sigma, std::max(options.n_report, options.aperiodic_nmax));
    for (std::size_t n = 1; n <= options.n_report; ++n) {
      r.complexity.push_back(language.complexity(n));
    }

    auto const aperiodic = aperiodicity_check(language);
    bool const periodic  = aperiodic.periodic || sigma.widest() == 1;
    if (periodic) {
      r.warnings.push_back("periodic fixed point (p(" + std::to_string(aperiodic.at)
                           + ") <= " + std::to_string(aperiodic.at) + "): not recognizable");
    } else {
      r.warnings.push_back("aperiodicity screened to n=" + std::to_string(options.aperiodic_nmax)
                           + ", not proven");
    }

    CertifiedConstants const cert  = certified_constants(sigma);
    KernelChain const        chain = injectivity_exponent(sigma);
    r.constants.K_cert             = to_decimal(cert.K_cert);
    r.constants.d                  = chain.d;

    if (!periodic) {
      NEstimate const n = estimate_N(sigma);
      r.constants.N     = to_decimal(n.N);
      if (n.certified_fallback) {
        r.warnings.push_back("N: contraction tail bound unavailable, certified N used");
      }
      PowerFreeVerdict const pf = power_free_index(sigma);
      if (pf.kind == PowerFreeVerdict::Kind::bounded) {
        r.constants.k = std::to_string(pf.k);
        r.warnings.push_back("k from a power scan of " + std::to_string(pf.window)
                             + " letters (heuristic)");
      } else {
        r.constants.k = to_decimal(cert.k_cert);
        r.warnings.push_back("k: power scan inconclusive, certified k used");
      }
    } else {
      r.constants.N = "";
      r.constants.k = "";
    }

    RecurrenceEstimate const rec = recurrence_constant_empirical(sigma, 6);
    r.constants.K_emp            = rec.ratio.get_str();
    r.warnings.push_back("K_emp is a lower estimate from return words to factors of length <= 6");

    SyncResult const delay = synchronizing_delay(sigma, options.max_delay, false, options.aperiodic_nmax);
    r.delay.C              = delay.delay;
    r.delay.L_from_C       = delay.L_from_C();
    r.delay.n_max          = delay.n_max;
    r.delay.periodic       = delay.periodic;
    r.delay.failures       = failures_of(sigma, delay);
    if (!delay.delay) {
      r.warnings.push_back("no synchronizing delay found up to n=" + std::to_string(options.max_delay));
    }

    r.empirical.radius = options.radius;
    r.empirical.level  = 1;
    if (!seeds.seeds.empty()) {
      Window const window = build_window(sigma, seeds.seeds.front(), options.radius);
      auto const   e      = minimal_constant_empirical(window, 1, options.L_max);
      r.empirical.L_lower     = e.certified_lower;
      r.empirical.L_heuristic = e.heuristic;
      r.empirical.scanned_to  = e.scanned_to;
      if (e.counterexample) {
        r.empirical.counterexample = to_report(sigma, *e.counterexample);
      }
      if (e.heuristic) {
        r.warnings.push_back("L_heuristic holds on a window of radius " + std::to_string(options.radius)
                             + " only");
      } else {
        r.warnings.push_back("every L <= " + std::to_string(e.scanned_to)
                             + " is refuted on the window");
      }
    }

    if (!periodic) {
      BoundOptions bo;
      bo.safe_d         = options.safe_d;
      bo.exact_cap      = options.exact_cap;
      bo.aperiodic_nmax = options.aperiodic_nmax;
      bo.mode           = BoundMode::empirical_exact;
      r.bounds.maindetail = to_report(bound_maindetail(sigma, bo));
      r.warnings.push_back("maindetail bound uses the measured k and N");
      bo.mode                       = BoundMode::certified;
      r.bounds.maindetail_certified = to_report(bound_maindetail(sigma, bo));
      r.bounds.closed_form          = to_report(bound_closed_form(sigma, false, options.exact_cap));
      if (sigma.size() == 2 && sigma.is_uniform() && sigma.widest() >= 2) {
        r.bounds.klouda_medkova = klouda_medkova_bound(sigma.widest());
      }
    }
    return r;
  }

  std::string emit_report(AnalysisReport const& report, bool json) {
    if (json) {
      Json j = report;
      return j.dump(2) + "\n";
    }
    std::ostringstream out;

    Table morphism("morphism");
    for (auto const& [a, img] : report.rules) {
      morphism.row(a, "-> " + img);
    }
    morphism.row("primitive", report.primitive ? "yes (M^" + std::to_string(report.witness) + " > 0)"
                                               : std::string("no"));
    morphism.print(out);
    if (!report.primitive) {
      for (auto const& w : report.warnings) {
        out << "warning: " << w << "\n";
      }
      return out.str();
    }

    Table seeds("admissible seeds");
    seeds.row("power e", std::to_string(report.seed_power));
    std::string pairs;
    for (auto const& p : report.seed_pairs) {
      pairs += (pairs.empty() ? "" : ", ") + p[0] + "." + p[1];
    }
    seeds.row("pairs", pairs.empty() ? "none" : pairs);
    seeds.print(out);

    Table constants("constants");
    constants.row("|sigma|", std::to_string(report.constants.widest))
        .row("<sigma>", std::to_string(report.constants.narrowest))
        .row("N", report.constants.N.empty() ? "-" : show_big(report.constants.N))
        .row("k", report.constants.k.empty() ? "-" : show_big(report.constants.k))
        .row("K (empirical)", report.constants.K_emp)
        .row("K (certified)", show_big(report.constants.K_cert))
        .row("d", std::to_string(report.constants.d))
        .row("d (safe)", std::to_string(report.constants.d_safe));
    constants.print(out);

    Table complexity("complexity");
    for (std::size_t n = 0; n < report.complexity.size(); ++n) {
      complexity.row("p(" + std::to_string(n + 1) + ")", std::to_string(report.complexity[n]));
    }
    complexity.print(out);

    Table delay("synchronizing delay");
    delay.row("C", or_none(report.delay.C) + (report.delay.C ? "" : " (up to " + std::to_string(report.delay.n_max) + ")"))
        .row("L from C", or_none(report.delay.L_from_C));
    for (auto const& f : report.delay.failures) {
      if (f.count > 0) {
        delay.row("n=" + std::to_string(f.n), std::to_string(f.count) + " unsynchronized");
      }
    }
    delay.print(out);

    Table empirical("empirical constant (level 1)");
    empirical.row("certified lower", std::to_string(report.empirical.L_lower))
        .row("heuristic", or_none(report.empirical.L_heuristic))
        .row("window radius", std::to_string(report.empirical.radius));
    if (auto const& c = report.empirical.counterexample) {
      empirical.row("counterexample", "i=" + std::to_string(c->i) + " cut=" + std::to_string(c->cut)
                                          + " m=" + std::to_string(c->m));
    }
    empirical.print(out);

    if (report.bounds.maindetail) {
      bound_table(out, "bound (empirical constants)", *report.bounds.maindetail);
    }
    if (report.bounds.maindetail_certified) {
      bound_table(out, "bound (certified constants)", *report.bounds.maindetail_certified);
    }
    if (auto const& cf = report.bounds.closed_form) {
      Table t("closed-form bound");
      t.row("exponent", show_big(cf->exponent)).row("value", show_value(cf->value));
      t.print(out);
    }
    if (report.bounds.klouda_medkova) {
      Table t("uniform binary delay bound");
      t.row("C <=", std::to_string(*report.bounds.klouda_medkova));
      t.print(out);
    }
    for (auto const& w : report.warnings) {
      out << "warning: " << w << "\n";
    }
    return out.str();
  }

}  // namespace subrec
