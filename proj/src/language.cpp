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

#include "subrec/language.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "subrec/error.hpp"
#include "subrec/matrix.hpp"

namespace subrec {

  namespace {

    bool lex_less(WordView lhs, WordView rhs) {
      return std::lexicographical_compare(lhs.begin(), lhs.end(), rhs.begin(), rhs.end());
    }

    bool starts_with(WordView w, WordView prefix) {
      return w.size() >= prefix.size()
             && std::equal(prefix.begin(), prefix.end(), w.begin());
    }

    void require_primitive(Morphism const& sigma) {
      if (!is_primitive(sigma).primitive) {
        throw Error(ErrorKind::not_primitive, "the morphism is not primitive");
      }
    }

    // K_cert = 2|σ^{2(#A)²}| · |σ^{(#A)²}| · |σ|.
    BigNat certified_recurrence(Morphism const& sigma) {
      std::uint64_t const a2 = sigma.size() * sigma.size();
      return 2 * extreme_lengths(sigma, 2 * a2).widest * extreme_lengths(sigma, a2).widest
             * BigNat(static_cast<unsigned long>(sigma.widest()));
    }

    std::vector<std::size_t> occurrences(WordView x, WordView u) {
      std::vector<std::size_t> out;
      if (u.empty() || u.size() > x.size()) {
        return out;
      }
      auto it = x.begin();
      std::boyer_moore_horspool_searcher searcher(u.begin(), u.end());
      while (true) {
        auto [first, last] = searcher(it, x.end());
        if (first == x.end()) {
          break;
        }
        out.push_back(static_cast<std::size_t>(first - x.begin()));
        it = first + 1;
      }
      return out;
    }

    bool less_by_length(Word const& lhs, Word const& rhs) {
      if (lhs.size() != rhs.size()) {
        return lhs.size() < rhs.size();
      }
      return lhs < rhs;
    }

  }  // namespace

  bool FactorSet::contains(WordView w) const {
    return std::binary_search(words.begin(), words.end(), Word(w.begin(), w.end()));
  }

  Language::Language(Morphism const& sigma, std::size_t max_length)
      : _sigma(sigma), _max_length(max_length), _top(max_length + 1) {
    require_primitive(sigma);

    std::unordered_set<Word, WordHash, WordEqual> seen;
    std::vector<Word>                             todo;
    auto add = [&](WordView w) {
      if (seen.find(w) == seen.end()) {
        Word copy(w.begin(), w.end());
        seen.insert(copy);
        todo.push_back(std::move(copy));
      }
    };

    if (sigma.widest() == 1) {
      // Primitive with |σ| = 1 forces a single letter mapped to itself.
      add(Word(_top, 0));
    } else {
      Word seed{0};
      while (seed.size() < 2 * _top) {
        seed = subrec::apply(sigma, seed);
      }
      for (std::size_t i = 0; i + _top <= seed.size(); ++i) {
        add(WordView(seed).subspan(i, _top));
      }
    }
    // A length-top factor u of σ(y), |y| >= 2·top, either starts inside the
    // image of a letter y_t with t + top <= |y|, or ends inside the image of
    // a letter y_t with t + 1 >= top. Either way it is a factor of σ(w) for
    // a length-top factor w of y, starting in σ(w_0) or ending in σ(w_last),
    // so only those positions need to be visited.
    while (!todo.empty()) {
      Word w = std::move(todo.back());
      todo.pop_back();
      Word const        img   = subrec::apply(sigma, w);
      std::size_t const n     = img.size();
      std::size_t const first = sigma.image(w.front()).size();
      std::size_t const last  = sigma.image(w.back()).size();
      for (std::size_t i = 0; i < first && i + _top <= n; ++i) {
        add(WordView(img).subspan(i, _top));
      }
      for (std::size_t end = n - last + 1; end <= n; ++end) {
        if (end >= _top) {
          add(WordView(img).subspan(end - _top, _top));
        }
      }
    }

    _words.assign(seen.begin(), seen.end());
    std::sort(_words.begin(), _words.end());
    _lcp.assign(_words.size(), 0);
    for (std::size_t i = 1; i < _words.size(); ++i) {
      auto const& a = _words[i - 1];
      auto const& b = _words[i];
      auto        m = std::mismatch(a.begin(), a.end(), b.begin(), b.end());
      _lcp[i]       = static_cast<std::size_t>(m.first - a.begin());
    }
  }

  bool Language::contains(WordView w) const {
    if (w.size() > _top) {
      throw Error(ErrorKind::invalid_argument,
                  "language only indexed up to length " + std::to_string(_top));
    }
    if (w.empty()) {
      return true;
    }
    auto it = std::lower_bound(_words.begin(), _words.end(), w, [](Word const& lhs, WordView rhs) {
      return lex_less(lhs, rhs);
    });
    return it != _words.end() && starts_with(*it, w);
  }

  std::size_t Language::complexity(std::size_t n) const {
    if (n > _top) {
      throw Error(ErrorKind::invalid_argument,
                  "language only indexed up to length " + std::to_string(_top));
    }
    if (n == 0) {
      return 1;
    }
    return 1 + static_cast<std::size_t>(std::count_if(
                   _lcp.begin() + (_lcp.empty() ? 0 : 1), _lcp.end(),
                   [n](std::size_t l) { return l < n; }));
  }

  FactorSet Language::factors(std::size_t n) const {
    if (n > _top) {
      throw Error(ErrorKind::invalid_argument,
                  "language only indexed up to length " + std::to_string(_top));
    }
    FactorSet out{n, {}};
    for (std::size_t i = 0; i < _words.size(); ++i) {
      if (i == 0 || _lcp[i] < n) {
        out.words.emplace_back(_words[i].begin(), _words[i].begin() + n);
      }
    }
    return out;
  }

  FactorSet factor_language(Morphism const& sigma, std::size_t n) {
    if (n == 0) {
      throw Error(ErrorKind::invalid_argument, "factor_language: n must be >= 1");
    }
    return Language(sigma, n).factors(n);
  }

  std::size_t complexity(Morphism const& sigma, std::size_t n) {
    if (n == 0) {
      require_primitive(sigma);
      return 1;
    }
    return Language(sigma, n).complexity(n);
  }

  Word sample_word(Morphism const& sigma, std::size_t length) {
    // A letter on the cycle of the first-letter map, and the cycle length e:
    // σ^e(b) starts with b, so the σ^{e·j}(b) are prefixes of each other.
    std::vector<int> visited(sigma.size(), -1);
    Letter           b = 0;
    int              t = 0;
    while (visited[b] < 0) {
      visited[b] = t++;
      b          = sigma.image(b).front();
    }
    auto const e = static_cast<unsigned>(t - visited[b]);

    if (sigma.widest() == 1) {
      Word w{b};
      while (w.size() < length) {
        w = subrec::apply(sigma, w);
        if (w.size() == 1 && sigma.size() == 1) {
          return Word(length, b);
        }
      }
      throw Error(ErrorKind::invalid_argument, "sample_word: images never grow");
    }
    Word        w{b};
    std::size_t stalled = 0;
    while (w.size() < length) {
      std::size_t before = w.size();
      for (unsigned i = 0; i < e; ++i) {
        w = subrec::apply(sigma, w);
      }
      stalled = w.size() == before ? stalled + 1 : 0;
      if (stalled > sigma.size()) {
        throw Error(ErrorKind::invalid_argument, "sample_word: images never grow");
      }
    }
    w.resize(length);
    return w;
  }

  ReturnWordSet return_words(Morphism const& sigma, WordView u, std::size_t window_cap) {
    if (u.empty()) {
      throw Error(ErrorKind::invalid_argument, "return_words: u must be non-empty");
    }
    if (!Language(sigma, u.size()).contains(u)) {
      throw Error(ErrorKind::not_a_factor, "return_words: " + sigma.format(u) + " is not a factor");
    }
    std::size_t window = std::max<std::size_t>(256, 32 * u.size());
    std::vector<std::set<Word, decltype(&less_by_length)>> history;
    while (true) {
      if (window > window_cap) {
        throw Error(ErrorKind::window_cap_exceeded,
                    "return_words: set not stable below window cap "
                        + std::to_string(window_cap));
      }
      Word const x   = sample_word(sigma, window);
      auto const occ = occurrences(x, u);
      std::set<Word, decltype(&less_by_length)> found(&less_by_length);
      std::size_t longest = 0;
      for (std::size_t i = 1; i < occ.size(); ++i) {
        found.emplace(x.begin() + occ[i - 1], x.begin() + occ[i]);
        longest = std::max(longest, occ[i] - occ[i - 1]);
      }
      history.push_back(std::move(found));
      std::size_t const h = history.size();
      if (h >= 3 && !history.back().empty() && history[h - 1] == history[h - 2]
          && history[h - 2] == history[h - 3] && 4 * longest <= window) {
        ReturnWordSet out;
        out.base.assign(u.begin(), u.end());
        out.returns.assign(history.back().begin(), history.back().end());
        out.window = window;
        BigNat k   = certified_recurrence(sigma) + 1;
        out.certified
            = BigNat(static_cast<unsigned long>(window)) >= k * k * BigNat(static_cast<unsigned long>(u.size()));
        return out;
      }
      window *= 2;
    }
  }

  std::pair<unsigned, Word> largest_integer_power(WordView w) {
    unsigned                 best = 0;
    std::size_t              best_start = 0, best_period = 0;
    std::vector<std::size_t> pi(w.size());
    for (std::size_t start = 0; start < w.size(); ++start) {
      std::size_t const len = w.size() - start;
      // A power with exponent > best needs at least best + 1 letters.
      if (len <= best) {
        break;
      }
      Letter const* s = w.data() + start;
      pi[0]           = 0;
      if (best == 0) {
        best = 1, best_start = start, best_period = 1;
      }
      for (std::size_t m = 1; m < len; ++m) {
        std::size_t k = pi[m - 1];
        while (k > 0 && s[m] != s[k]) {
          k = pi[k - 1];
        }
        if (s[m] == s[k]) {
          ++k;
        }
        pi[m] = k;
        std::size_t const prefix = m + 1;
        std::size_t const period = prefix - k;
        auto const        e      = static_cast<unsigned>(prefix / period);
        if (e > best) {
          best        = e;
          best_start  = start;
          best_period = period;
        }
      }
    }
    Word root;
    if (best > 0) {
      root.assign(w.begin() + best_start, w.begin() + best_start + best_period);
    }
    return {best, root};
  }

  PowerFreeVerdict power_free_index(Morphism const& sigma,
                                    std::size_t     scan_len,
                                    unsigned        max_k,
                                    std::size_t     aperiodic_nmax) {
    PowerFreeVerdict out;
    out.window = scan_len;
    if (aperiodicity_check(sigma, aperiodic_nmax).periodic) {
      out.kind = PowerFreeVerdict::Kind::unbounded;
      return out;
    }
    Word const x          = sample_word(sigma, scan_len);
    auto [largest, root]  = largest_integer_power(x);
    out.largest_power     = largest;
    out.witness           = std::move(root);
    if (largest + 1 <= max_k) {
      out.kind = PowerFreeVerdict::Kind::bounded;
      out.k    = largest + 1;
    }
    return out;
  }

  RecurrenceEstimate recurrence_constant_empirical(Morphism const& sigma,
                                                   std::size_t     max_len,
                                                   std::size_t     window_cap) {
    if (max_len == 0) {
      throw Error(ErrorKind::invalid_argument, "recurrence_constant_empirical: max_len must be >= 1");
    }
    Language const language(sigma, max_len);

    // Per length n: the largest gap between consecutive occurrences of any
    // length-n factor, with its witness.
    struct Level {
      std::size_t gap = 0;
      Word        witness;
      bool        operator==(Level const&) const = default;
    };
    std::vector<Level> previous;
    std::size_t        window = std::max<std::size_t>(1024, 256 * max_len);
    RecurrenceEstimate out;
    while (true) {
      Word const         x = sample_word(sigma, window);
      std::vector<Level> levels(max_len + 1);
      std::size_t        longest  = 0;
      bool               complete = true;
      for (std::size_t n = 1; n <= max_len; ++n) {
        struct Seen {
          std::size_t last;
          std::size_t gap;
          std::size_t count;
        };
        std::unordered_map<WordView, Seen, WordHash, WordEqual> seen;
        for (std::size_t i = 0; i + n <= x.size(); ++i) {
          WordView f  = WordView(x).subspan(i, n);
          auto     it = seen.find(f);
          if (it == seen.end()) {
            seen.emplace(f, Seen{i, 0, 1});
          } else {
            it->second.gap  = std::max(it->second.gap, i - it->second.last);
            it->second.last = i;
            it->second.count += 1;
          }
        }
        if (seen.size() != language.complexity(n)) {
          complete = false;
        }
        Level& level = levels[n];
        for (auto const& [f, s] : seen) {
          if (s.count < 2) {
            complete = false;
          }
          Word fw(f.begin(), f.end());
          if (s.gap > level.gap || (s.gap == level.gap && fw < level.witness)) {
            level.gap     = s.gap;
            level.witness = std::move(fw);
          }
        }
        longest = std::max(longest, level.gap);
      }
      bool const stable = complete && levels == previous && 4 * longest <= window;
      if (stable || 2 * window > window_cap) {
        out.ratio  = 0;
        out.window = window;
        out.stable = stable;
        for (std::size_t n = 1; n <= max_len; ++n) {
          BigRational r(static_cast<unsigned long>(levels[n].gap), static_cast<unsigned long>(n));
          r.canonicalize();
          if (r > out.ratio) {
            out.ratio          = r;
            out.witness        = levels[n].witness;
            out.longest_return = levels[n].gap;
          }
        }
        return out;
      }
      previous = std::move(levels);
      window *= 2;
    }
  }

  AperiodicityVerdict aperiodicity_check(Language const& language) {
    AperiodicityVerdict out;
    out.n_max = language.max_length();
    for (std::size_t n = 1; n <= language.max_length(); ++n) {
      if (language.complexity(n) <= n) {
        out.periodic = true;
        out.at       = n;
        // The minimal period is at most n; read it off a long sample.
        Word const x = sample_word(language.morphism(), 8 * n + 16);
        for (std::size_t q = 1; q <= n; ++q) {
          bool ok = true;
          for (std::size_t i = 0; i + q < x.size() && ok; ++i) {
            ok = x[i] == x[i + q];
          }
          if (ok) {
            out.period = q;
            break;
          }
        }
        return out;
      }
    }
    return out;
  }

  AperiodicityVerdict aperiodicity_check(Morphism const& sigma, std::size_t n_max) {
    return aperiodicity_check(Language(sigma, n_max));
  }

}  // namespace subrec
