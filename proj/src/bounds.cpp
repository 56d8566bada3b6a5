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

#include "subrec/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>

#include "subrec/error.hpp"
#include "subrec/language.hpp"
#include "subrec/matrix.hpp"
#include "subrec/recognizability.hpp"

namespace subrec {

  namespace {

    BigNat cdiv(BigNat const& a, BigNat const& b) {
      BigNat q;
      mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      return q;
    }

    // Σ_{i=lo}^{hi} i, zero for an empty range.
    BigNat range_sum(BigNat const& lo, BigNat const& hi) {
      if (hi < lo) {
        return 0;
      }
      BigNat const count = hi - lo + 1;
      return (lo + hi) * count / 2;
    }

    BigNat widest_of(std::vector<BigNat> const& lengths) {
      return extreme_lengths(lengths).widest;
    }

    std::string short_decimal(BigNat const& value) {
      return abbreviate(value, 80);
    }

    void require_primitive(Morphism const& sigma) {
      if (!is_primitive(sigma).primitive) {
        throw Error(ErrorKind::not_primitive, "the morphism is not primitive");
      }
    }

    BigValue exact_value(BigNat value, std::string expr) {
      BigValue v;
      v.log10  = value > 0 ? log10_of(value) : 0.0;
      v.digits = static_cast<unsigned long>(decimal_digits(value));
      v.exact  = std::move(value);
      v.expr   = std::move(expr);
      return v;
    }

    BigValue log_value(double log10, std::string expr) {
      BigValue v;
      v.log10       = log10;
      if (std::isfinite(log10)) {
        v.digits = BigNat(std::floor(std::max(log10, 0.0))) + 1;
      }
      v.expr        = std::move(expr);
      v.approximate = true;
      return v;
    }

  }  // namespace

  std::size_t default_exact_cap() {
    if (char const* env = std::getenv("SUBREC_EXACT_CAP")) {
      char*              end   = nullptr;
      unsigned long long value = std::strtoull(env, &end, 10);
      if (end != env && *end == '\0') {
        return static_cast<std::size_t>(value);
      }
    }
    return 1000000;
  }

  std::string to_string(BoundMode mode) {
    return mode == BoundMode::certified ? "certified" : "empirical_exact";
  }

  CertifiedConstants certified_constants(Morphism const& sigma) {
    require_primitive(sigma);
    std::uint64_t const a2 = static_cast<std::uint64_t>(sigma.size()) * sigma.size();
    CertifiedConstants  c;
    c.N_cert    = widest_of(image_lengths(sigma, a2));
    c.Rret_cert = 2 * widest_of(image_lengths(sigma, 2 * a2));
    c.K_cert    = c.Rret_cert * c.N_cert * BigNat(static_cast<unsigned long>(sigma.widest()));
    c.k_cert    = c.K_cert + 1;
    return c;
  }

  double estimate_log10_width(Morphism const& sigma, BigNat const& n) {
    if (n <= 128) {
      return log10_of(widest_of(image_lengths(sigma, n.get_ui())));
    }
    double const at64  = log10_of(widest_of(image_lengths(sigma, 64)));
    double const at128 = log10_of(widest_of(image_lengths(sigma, 128)));
    double const rate  = (at128 - at64) / 64.0;
    BigNat const rest  = n - 128;
    return at128 + rest.get_d() * rate;
  }

  BigValue image_width(Morphism const& sigma, BigNat const& n, std::size_t exact_cap) {
    std::string const expr     = "|sigma^" + short_decimal(n) + "|";
    double const      estimate = estimate_log10_width(sigma, n);
    if (n.fits_ulong_p() && estimate + 1 <= static_cast<double>(exact_cap)) {
      return exact_value(widest_of(image_lengths(sigma, n.get_ui())), expr);
    }
    return log_value(estimate, expr);
  }

  NEstimate estimate_N(Morphism const& sigma) {
    require_primitive(sigma);
    std::size_t const A       = sigma.size();
    std::size_t const horizon = 4 * A * A;
    auto const        table   = length_table(sigma, horizon + 1);

    NEstimate out;
    out.horizon = horizon;
    out.sampled = 1;
    for (std::size_t n = 0; n <= horizon; ++n) {
      auto const e = extreme_lengths(table[n]);
      out.sampled  = std::max(out.sampled, cdiv(e.widest, e.narrowest));
    }

    // Length vectors evolve by l_{n+1} = B·l_n with B the transpose of the
    // incidence matrix. A positive power P = B^w contracts the Hilbert
    // projective metric by τ = tanh(Δ(P)/4), so
    //   sup_{n >= T} max l_n / min l_n <= exp(D0 + w·g / (1 - τ))
    // with D0 = d_H(l_T, 1) and g = d_H(l_{T+1}, l_T).
    unsigned const  w   = is_primitive(sigma).witness;
    BigMatrix const Mw  = incidence_matrix(sigma).power(w);
    double          Dlt = 0;
    double const    ln10 = std::log(10.0);
    std::vector<double> logP(A * A);
    for (std::size_t a = 0; a < A; ++a) {
      for (std::size_t b = 0; b < A; ++b) {
        logP[a * A + b] = log10_of(Mw(b, a)) * ln10;  // P(a, b) = Mw(b, a)
      }
    }
    for (std::size_t a = 0; a < A; ++a) {
      for (std::size_t a2 = 0; a2 < A; ++a2) {
        for (std::size_t b = 0; b < A; ++b) {
          for (std::size_t b2 = 0; b2 < A; ++b2) {
            double const v = logP[a * A + b] + logP[a2 * A + b2] - logP[a2 * A + b] - logP[a * A + b2];
            Dlt            = std::max(Dlt, v);
          }
        }
      }
    }
    double const tau = std::tanh(Dlt / 4.0);

    auto const&  lT  = table[horizon];
    auto const&  lT1 = table[horizon + 1];
    auto const   eT  = extreme_lengths(lT);
    double const D0  = std::log(BigRational(eT.widest, eT.narrowest).get_d());
    double       hi  = -std::numeric_limits<double>::infinity();
    double       lo  = std::numeric_limits<double>::infinity();
    for (std::size_t a = 0; a < A; ++a) {
      double const r = std::log(BigRational(lT1[a], lT[a]).get_d());
      hi             = std::max(hi, r);
      lo             = std::min(lo, r);
    }
    double const g = hi - lo;

    // l_{T+1} proportional to l_T: the ratio is constant from T on.
    bool proportional = true;
    for (std::size_t a = 1; a < A && proportional; ++a) {
      proportional = lT1[a] * lT[0] == lT1[0] * lT[a];
    }
    if (proportional) {
      out.tail = BigRational(eT.widest, eT.narrowest).get_d();
      out.N    = out.sampled;
      return out;
    }

    if (tau < 1.0 - 1e-12) {
      // Widen slightly to absorb floating-point error.
      double const tail = std::exp(D0 + w * g / (1.0 - tau)) * (1.0 + 1e-9) + 1e-12;
      if (std::isfinite(tail)) {
        out.tail = tail;
        BigNat ceil_tail(std::ceil(tail));
        out.N = std::max(out.sampled, ceil_tail);
        return out;
      }
    }
    out.N                  = certified_constants(sigma).N_cert;
    out.certified_fallback = true;
    return out;
  }

  BoundBreakdown bound_from_inputs(Morphism const&    sigma,
                                   BoundInputs const& inputs,
                                   BoundMode          mode,
                                   std::size_t        exact_cap) {
    if (inputs.N == 0) {
      throw Error(ErrorKind::invalid_argument, "N must be positive");
    }
    BoundBreakdown b;
    b.mode   = mode;
    b.N      = inputs.N;
    b.k      = inputs.k;
    b.d      = inputs.d;
    b.R      = inputs.N * inputs.N * (inputs.k + 1) + 2 * inputs.N;
    b.sum_lo = cdiv(b.R, b.N);
    b.sum_hi = b.R * b.N + 2;

    BigNat const known = static_cast<unsigned long>(inputs.complexity.size());
    bool         linear_used = false;
    BigRational  observed    = 0;
    auto p = [&](BigNat const& i) -> BigNat {
      if (i < known) {
        BigNat const& v = inputs.complexity[i.get_ui()];
        if (i > 0) {
          observed = std::max(observed, BigRational(v, i));
        }
        return v;
      }
      linear_used = true;
      return inputs.linear * i;
    };

    BigNat sum = 0;
    BigNat i   = b.sum_lo;
    for (; i <= b.sum_hi && i < known; ++i) {
      sum += p(i);
    }
    if (i <= b.sum_hi) {
      linear_used = true;
      sum += inputs.linear * range_sum(i, b.sum_hi);
    }
    b.Q = 1 + p(b.R) * sum;
    if (linear_used) {
      b.K = BigRational(inputs.linear);
      b.notes.push_back(known == 0 ? "p(i) <= " + short_decimal(inputs.linear) + "*i used throughout"
                                   : "p(i) <= " + short_decimal(inputs.linear) + "*i used beyond i = "
                                         + to_decimal(known - 1));
    } else {
      b.K = observed;
    }
    b.K.canonicalize();

    BigNat const dQ = BigNat(static_cast<unsigned long>(b.d)) * b.Q;
    b.sigma_dQ      = image_width(sigma, dQ, exact_cap);

    std::string const m_expr = short_decimal(b.R) + "*" + b.sigma_dQ.expr;
    BigNat const      width_d = widest_of(image_lengths(sigma, b.d));
    std::string const b_expr  = m_expr + "+" + to_decimal(width_d);
    if (b.sigma_dQ.exact) {
      BigNat m = b.R * *b.sigma_dQ.exact;
      b.M      = exact_value(m, m_expr);
      b.bound  = exact_value(m + width_d, b_expr);
    } else {
      double const lm = log10_of(b.R) + b.sigma_dQ.log10;
      b.M             = log_value(lm, m_expr);
      b.bound         = log_value(lm, b_expr);
      b.notes.push_back("|sigma^dQ| extrapolated from the growth between |sigma^64| and |sigma^128|");
    }
    return b;
  }

  BoundBreakdown bound_maindetail(Morphism const& sigma, BoundOptions const& options) {
    require_primitive(sigma);
    if (sigma.widest() == 1) {
      throw Error(ErrorKind::not_aperiodic, "|sigma| = 1: the fixed point is periodic");
    }
    if (aperiodicity_check(sigma, options.aperiodic_nmax).periodic) {
      throw Error(ErrorKind::not_aperiodic, "the fixed point is periodic");
    }

    CertifiedConstants const cert  = certified_constants(sigma);
    KernelChain const        chain = injectivity_exponent(sigma);

    BoundInputs              in;
    std::vector<std::string> notes;
    in.d      = options.safe_d ? static_cast<unsigned>(sigma.size()) : chain.d;
    in.linear = cert.K_cert;

    if (options.mode == BoundMode::certified) {
      in.N = cert.N_cert;
      in.k = cert.k_cert;
    } else {
      NEstimate const n = estimate_N(sigma);
      in.N              = n.N;
      if (n.certified_fallback) {
        notes.push_back("N: contraction tail bound unavailable, certified N used");
      } else {
        notes.push_back("N: exact ratios for n <= " + std::to_string(n.horizon)
                        + " with a contraction bound on the tail");
      }
      PowerFreeVerdict const pf = power_free_index(sigma);
      if (pf.kind == PowerFreeVerdict::Kind::bounded) {
        in.k = pf.k;
        notes.push_back("k: power scan of " + std::to_string(pf.window) + " letters");
      } else {
        in.k = cert.k_cert;
        notes.push_back("k: power scan inconclusive, certified k used");
      }
      BigNat const R  = in.N * in.N * (in.k + 1) + 2 * in.N;
      BigNat const hi = R * in.N + 2;
      std::size_t  top = options.language_cap;
      if (hi < static_cast<unsigned long>(top)) {
        top = hi.get_ui();
      }
      Language const language(sigma, std::max<std::size_t>(top, 1) - 1);
      for (std::size_t i = 0; i <= top; ++i) {
        in.complexity.emplace_back(static_cast<unsigned long>(language.complexity(i)));
      }
    }

    BoundBreakdown b = bound_from_inputs(sigma, in, options.mode, options.exact_cap);
    notes.insert(notes.end(), b.notes.begin(), b.notes.end());
    b.notes = std::move(notes);
    if (options.mode == BoundMode::certified) {
      b.K = BigRational(cert.K_cert);
    }
    return b;
  }

  ClosedForm bound_closed_form(Morphism const& sigma, bool injective_hint, std::size_t exact_cap) {
    require_primitive(sigma);
    auto const   A  = static_cast<unsigned long>(sigma.size());
    BigNat const w  = static_cast<unsigned long>(sigma.widest());
    BigNat const tower = pow(w, 28ul * A * A);

    ClosedForm cf;
    cf.base       = w;
    cf.injective  = injective_hint;
    cf.degenerate = A == 1;
    cf.exponent   = 6 * BigNat(A * A) + (injective_hint ? BigNat(6) : BigNat(6 * A)) * tower;

    BigNat const tail = injective_hint ? w : pow(w, A);
    std::string const expr =
        "2*" + to_decimal(w) + "^" + short_decimal(cf.exponent) + "+" + to_decimal(tail);

    double const log10_w = log10_of(w);
    // log10 value ≈ log10 2 + E·log10 w, exactly so once the tail is negligible.
    double const log10_E = log10_of(cf.exponent);
    cf.log10_log10       = w == 1 ? -std::numeric_limits<double>::infinity()
                                  : log10_E + std::log10(log10_w);
    double const log10_value = std::log10(2.0) + cf.exponent.get_d() * log10_w;

    if (w == 1) {
      cf.value = exact_value(BigNat(3), expr);
    } else if (cf.exponent.fits_ulong_p() && log10_value + 1 <= static_cast<double>(exact_cap)) {
      cf.value = exact_value(2 * pow(w, cf.exponent.get_ui()) + tail, expr);
    } else {
      cf.value             = log_value(log10_value, expr);
      cf.value.approximate = false;  // the expression is exact; only the value is not written out
    }
    return cf;
  }

  std::uint64_t least_divisor(std::uint64_t k) {
    if (k < 2) {
      throw Error(ErrorKind::bad_parameters, "k must be at least 2");
    }
    for (std::uint64_t p = 2; p * p <= k; ++p) {
      if (k % p == 0) {
        return p;
      }
    }
    return k;
  }

  std::uint64_t klouda_medkova_bound(std::uint64_t k, std::uint64_t d) {
    if (k < 2) {
      throw Error(ErrorKind::bad_parameters, "k must be at least 2, got " + std::to_string(k));
    }
    if (k == 2) {
      return 8;
    }
    std::uint64_t const least = least_divisor(k);
    if (least == k) {
      return k * k + 3 * k - 4;
    }
    if (d != least) {
      throw Error(ErrorKind::bad_parameters,
                  "d = " + std::to_string(d) + " is not the least divisor of " + std::to_string(k)
                      + " above 1 (" + std::to_string(least) + ")");
    }
    return k * k * (k / d - 1) + 5 * k - 4;
  }

  std::uint64_t klouda_medkova_bound(std::uint64_t k) {
    return klouda_medkova_bound(k, k < 2 ? 0 : least_divisor(k));
  }

}  // namespace subrec
