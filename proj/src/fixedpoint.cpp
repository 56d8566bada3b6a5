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

#include "subrec/fixedpoint.hpp"

#include <algorithm>
#include <numeric>

#include "subrec/error.hpp"
#include "subrec/language.hpp"
#include "subrec/matrix.hpp"

namespace subrec {

  Letter Window::at(std::int64_t pos) const {
    if (pos < lo() || pos >= hi()) {
      throw Error(ErrorKind::out_of_window,
                  "position " + std::to_string(pos) + " outside [" + std::to_string(lo()) + ", "
                      + std::to_string(hi()) + ")");
    }
    return content()[static_cast<std::size_t>(pos - lo())];
  }

  std::int64_t Window::lift(std::int64_t i, unsigned from, unsigned to) const {
    if (from > to || to > depth()) {
      throw Error(ErrorKind::level_unavailable,
                  "stages " + std::to_string(from) + " -> " + std::to_string(to)
                      + " unavailable (depth " + std::to_string(depth()) + ")");
    }
    if (i < stage_lo(from) || i > stage_hi(from)) {
      throw Error(ErrorKind::out_of_window,
                  "index " + std::to_string(i) + " outside stage " + std::to_string(from));
    }
    auto j = static_cast<std::size_t>(i + _stages[from].anchor);
    for (unsigned q = from; q < to; ++q) {
      j = static_cast<std::size_t>(_stages[q].starts[j]);
    }
    return static_cast<std::int64_t>(j) - _stages[to].anchor;
  }

  Window build_window(Morphism const&       sigma,
                      FixedPointSeed const& seed,
                      std::size_t           radius,
                      std::size_t           cap,
                      unsigned              min_depth) {
    if (radius == 0) {
      throw Error(ErrorKind::invalid_argument, "window radius must be at least 1");
    }
    if (!is_valid_seed(sigma, seed)) {
      throw Error(ErrorKind::invalid_seed,
                  "(" + sigma.token(std::min<Letter>(seed.left, sigma.size() - 1)) + "·"
                      + sigma.token(std::min<Letter>(seed.right, sigma.size() - 1)) + ", e="
                      + std::to_string(seed.power) + ") is not an admissible fixed-point seed");
    }
    Window w;
    w._sigma = std::make_shared<Morphism const>(sigma);
    w._seed  = seed;
    w._stages.push_back({Word{seed.left, seed.right}, 1, {}});

    auto grown = [&] {
      auto const& top = w._stages.back();
      return w.depth() >= std::max<unsigned>(min_depth, seed.power) && w.depth() % seed.power == 0
             && static_cast<std::size_t>(top.anchor) >= radius
             && top.word.size() - static_cast<std::size_t>(top.anchor) >= radius;
    };
    while (!grown()) {
      auto& current = w._stages.back();
      current.starts.resize(current.word.size() + 1);
      std::int64_t acc = 0;
      for (std::size_t j = 0; j < current.word.size(); ++j) {
        current.starts[j] = acc;
        acc += static_cast<std::int64_t>(sigma.image(current.word[j]).size());
      }
      current.starts.back() = acc;
      if (static_cast<std::size_t>(acc) > cap) {
        throw Error(ErrorKind::size_exceeded,
                    "window would need " + std::to_string(acc) + " letters, cap is "
                        + std::to_string(cap));
      }
      Window::Stage next;
      next.anchor = current.starts[static_cast<std::size_t>(current.anchor)];
      next.word   = subrec::apply(sigma, current.word);
      w._stages.push_back(std::move(next));
    }
    return w;
  }

  std::int64_t f_p(Window const& window, std::int64_t i, unsigned p) {
    if (p > window.depth()) {
      throw Error(ErrorKind::level_unavailable,
                  "level " + std::to_string(p) + " exceeds window depth "
                      + std::to_string(window.depth()));
    }
    return window.lift(i, window.depth() - p, window.depth());
  }

  std::ptrdiff_t CuttingSet::find(std::int64_t pos) const {
    auto it = std::lower_bound(cuts.begin(), cuts.end(), pos);
    if (it == cuts.end() || *it != pos) {
      return -1;
    }
    return it - cuts.begin();
  }

  CuttingSet cutting_points(Window const& window, unsigned p) {
    if (p > window.depth()) {
      throw Error(ErrorKind::level_unavailable,
                  "level " + std::to_string(p) + " exceeds window depth "
                      + std::to_string(window.depth()));
    }
    unsigned const base = window.depth() - p;
    Word const&    pre  = window.stage(base);
    CuttingSet     out;
    out.p = p;
    out.cuts.resize(pre.size());
    out.index.resize(pre.size());
    out.preimage = pre;
    std::int64_t const lo = window.stage_lo(base);
    for (std::size_t j = 0; j < pre.size(); ++j) {
      out.index[j] = lo + static_cast<std::int64_t>(j);
      out.cuts[j]  = window.lift(out.index[j], base, window.depth());
    }
    return out;
  }

  std::pair<BigInt, BigInt> interpretation_length_bounds(std::size_t     u_len,
                                                         Morphism const& sigma,
                                                         std::uint64_t   n) {
    auto const   ext = extreme_lengths(sigma, n);
    BigInt const u   = static_cast<unsigned long>(u_len);
    BigInt       lower, upper;
    BigInt const lower_num = ext.narrowest * u;
    BigInt const upper_num = ext.widest * u;
    mpz_cdiv_q(lower.get_mpz_t(), lower_num.get_mpz_t(), ext.widest.get_mpz_t());
    mpz_fdiv_q(upper.get_mpz_t(), upper_num.get_mpz_t(), ext.narrowest.get_mpz_t());
    return {lower - 2, upper};
  }

  std::string dump_window(Window const& window, unsigned max_level) {
    max_level = std::min(max_level, window.depth());
    std::vector<CuttingSet> sets;
    for (unsigned p = 0; p <= max_level; ++p) {
      sets.push_back(cutting_points(window, p));
    }
    std::string out;
    auto const& sigma = window.morphism();
    for (std::int64_t pos = window.lo(); pos < window.hi(); ++pos) {
      out += std::to_string(pos);
      out += '\t';
      out += sigma.token(window.at(pos));
      out += '\t';
      bool first = true;
      for (unsigned p = 0; p <= max_level; ++p) {
        if (sets[p].find(pos) >= 0) {
          if (!first) {
            out += ',';
          }
          out += std::to_string(p);
          first = false;
        }
      }
      out += '\n';
    }
    return out;
  }

}  // namespace subrec
