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

#include "subrec/recognizability.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>

#include "subrec/error.hpp"
#include "subrec/matrix.hpp"

namespace subrec {

  namespace {

    // Depth-first producer of σ^n(w), one letter at a time.
    class ImageStream {
     public:
      ImageStream(Morphism const& sigma, WordView w, std::uint64_t n) : _sigma(sigma) {
        _frames.push_back({w, 0, n});
      }

      std::optional<Letter> next() {
        while (!_frames.empty()) {
          Frame& top = _frames.back();
          if (top.pos == top.word.size()) {
            _frames.pop_back();
            continue;
          }
          Letter const a = top.word[top.pos++];
          if (top.depth == 0) {
            return a;
          }
          _frames.push_back({WordView(_sigma.image(a)), 0, top.depth - 1});
        }
        return std::nullopt;
      }

     private:
      struct Frame {
        WordView      word;
        std::size_t   pos;
        std::uint64_t depth;
      };
      Morphism const&    _sigma;
      std::vector<Frame> _frames;
    };

    BigNat image_length(std::vector<BigNat> const& lengths, WordView w) {
      BigNat total = 0;
      for (Letter a : w) {
        total += lengths[a];
      }
      return total;
    }

    // Relabel so that class ids appear in first-occurrence order; equal
    // partitions then have equal label vectors.
    std::vector<unsigned> canonical(std::vector<unsigned> const& raw) {
      std::map<unsigned, unsigned> rename;
      std::vector<unsigned>        out(raw.size());
      for (std::size_t a = 0; a < raw.size(); ++a) {
        auto [it, fresh] = rename.try_emplace(raw[a], static_cast<unsigned>(rename.size()));
        out[a]           = it->second;
      }
      return out;
    }

    std::size_t to_size(BigNat const& v) {
      if (!v.fits_ulong_p()) {
        return std::numeric_limits<std::size_t>::max();
      }
      return v.get_ui();
    }

  }  // namespace

  bool images_equal(Morphism const& sigma, WordView a, WordView b, std::uint64_t n) {
    auto const lengths = image_lengths(sigma, n);
    if (image_length(lengths, a) != image_length(lengths, b)) {
      return false;
    }
    ImageStream lhs(sigma, a, n);
    ImageStream rhs(sigma, b, n);
    for (;;) {
      auto x = lhs.next();
      auto y = rhs.next();
      if (x != y) {
        return false;
      }
      if (!x) {
        return true;
      }
    }
  }

  std::vector<std::vector<Letter>> KernelChain::merged(std::size_t n) const {
    auto const&                      labels = class_of.at(n);
    std::map<unsigned, std::vector<Letter>> groups;
    for (Letter a = 0; a < labels.size(); ++a) {
      groups[labels[a]].push_back(a);
    }
    std::vector<std::vector<Letter>> out;
    for (auto& [id, members] : groups) {
      if (members.size() > 1) {
        out.push_back(std::move(members));
      }
    }
    return out;
  }

  KernelChain injectivity_exponent(Morphism const& sigma) {
    std::size_t const size = sigma.size();
    KernelChain       chain;

    std::vector<unsigned> level0(size);
    for (std::size_t a = 0; a < size; ++a) {
      level0[a] = static_cast<unsigned>(a);
    }
    chain.class_of.push_back(level0);

    for (std::size_t n = 1; n <= size; ++n) {
      auto const& previous = chain.class_of.back();
      auto const  lengths  = image_lengths(sigma, n);

      // Union of letters whose level-n images agree. A letter joins the
      // first earlier representative it matches.
      std::vector<unsigned> raw(size);
      std::vector<Letter>   reps;
      for (Letter a = 0; a < size; ++a) {
        raw[a] = a;
        for (Letter r : reps) {
          if (lengths[a] != lengths[r]) {
            continue;
          }
          if (previous[a] == previous[r]) {
            raw[a] = raw[r];  // E_{n-1} ⊆ E_n
            break;
          }
          Word const& ia = sigma.image(a);
          Word const& ir = sigma.image(r);
          bool        same = ia.size() == ir.size();
          for (std::size_t t = 0; same && t < ia.size(); ++t) {
            same = previous[ia[t]] == previous[ir[t]];
          }
          if (same || images_equal(sigma, ia, ir, n - 1)) {
            raw[a] = raw[r];
            break;
          }
        }
        if (raw[a] == a) {
          reps.push_back(a);
        }
      }
      chain.class_of.push_back(canonical(raw));
    }

    auto const& stable = chain.class_of[size - 1];
    chain.d            = static_cast<unsigned>(size);
    for (std::size_t d = 1; d <= size; ++d) {
      if (chain.class_of[d - 1] == stable) {
        chain.d = static_cast<unsigned>(d);
        break;
      }
    }
    return chain;
  }

  std::vector<Interpretation> interpretations(Morphism const& sigma,
                                              WordView        u,
                                              Language const& language) {
    if (u.empty()) {
      throw Error(ErrorKind::invalid_argument, "interpretations: empty word");
    }
    if (language.max_length() + 1 < u.size() + 2) {
      throw Error(ErrorKind::invalid_argument,
                  "interpretations: language indexed to length "
                      + std::to_string(language.max_length() + 1) + ", need "
                      + std::to_string(u.size() + 2));
    }
    if (!language.contains(u)) {
      throw Error(ErrorKind::not_a_factor, sigma.format(u) + " is not a factor");
    }

    std::vector<Interpretation> found;
    std::size_t const           n = u.size();

    // Extend core v, whose image covers u[0, pos) (plus the prefix), by one
    // letter at a time. Every prefix of v must itself be a factor.
    Word                     core;
    std::vector<std::size_t> cuts;
    Word                     prefix;

    auto extend = [&](auto&& self, std::size_t pos) -> void {
      for (Letter c = 0; c < sigma.size(); ++c) {
        Word const& img = sigma.image(c);
        std::size_t const take = std::min(img.size(), n - pos);
        if (!std::equal(img.begin(), img.begin() + static_cast<std::ptrdiff_t>(take),
                        u.begin() + static_cast<std::ptrdiff_t>(pos))) {
          continue;
        }
        core.push_back(c);
        if (language.contains(core)) {
          std::size_t const end = pos + img.size();
          if (end >= n) {
            Interpretation found_one;
            found_one.prefix = prefix;
            found_one.core   = core;
            found_one.suffix.assign(img.begin() + static_cast<std::ptrdiff_t>(take), img.end());
            found_one.cuts = cuts;
            if (end == n) {
              found_one.cuts.push_back(n);
            }
            found.push_back(std::move(found_one));
          } else {
            cuts.push_back(end);
            self(self, end);
            cuts.pop_back();
          }
        }
        core.pop_back();
      }
    };

    for (Letter c = 0; c < sigma.size(); ++c) {
      Word const& img = sigma.image(c);
      for (std::size_t offset = 0; offset < img.size(); ++offset) {
        std::size_t const avail = img.size() - offset;
        std::size_t const take  = std::min(avail, n);
        if (!std::equal(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(take),
                        img.begin() + static_cast<std::ptrdiff_t>(offset))) {
          continue;
        }
        prefix.assign(img.begin(), img.begin() + static_cast<std::ptrdiff_t>(offset));
        core.assign(1, c);
        cuts.clear();
        if (offset == 0) {
          cuts.push_back(0);
        }
        if (avail >= n) {
          Interpretation single;
          single.prefix = prefix;
          single.core   = core;
          single.suffix.assign(img.begin() + static_cast<std::ptrdiff_t>(offset + n), img.end());
          single.cuts = cuts;
          if (avail == n) {
            single.cuts.push_back(n);
          }
          found.push_back(std::move(single));
        } else {
          cuts.push_back(avail);
          extend(extend, avail);
        }
      }
    }
    std::sort(found.begin(), found.end());
    return found;
  }

  std::vector<Interpretation> interpretations(Morphism const& sigma, WordView u) {
    Language const language(sigma, u.size() + 1);
    return interpretations(sigma, u, language);
  }

  SyncVerdict synchronizing_point(Morphism const& sigma,
                                  WordView        u,
                                  Language const& language,
                                  bool            interior_only) {
    auto const               all   = interpretations(sigma, u, language);
    std::size_t const        upper = interior_only ? u.size() - 1 : u.size();
    std::vector<std::size_t> common;
    for (std::size_t k = 1; k <= upper; ++k) {
      common.push_back(k);
    }
    for (auto const& it : all) {
      std::vector<std::size_t> kept;
      std::set_intersection(common.begin(), common.end(), it.cuts.begin(), it.cuts.end(),
                            std::back_inserter(kept));
      common = std::move(kept);
      if (common.empty()) {
        break;
      }
    }
    return {!common.empty(), std::move(common)};
  }

  SyncVerdict synchronizing_point(Morphism const& sigma, WordView u, bool interior_only) {
    Language const language(sigma, u.size() + 1);
    return synchronizing_point(sigma, u, language, interior_only);
  }

  std::optional<std::size_t> SyncResult::L_from_C() const {
    if (!delay) {
      return std::nullopt;
    }
    return *delay / 2;  // ⌈(C - 1)/2⌉
  }

  SyncResult synchronizing_delay(Morphism const& sigma,
                                 std::size_t     n_max,
                                 bool            interior_only,
                                 std::size_t     aperiodic_nmax) {
    if (!is_primitive(sigma).primitive) {
      throw Error(ErrorKind::not_primitive, "synchronizing delay needs a primitive morphism");
    }
    SyncResult result;
    result.n_max = n_max;
    if (n_max == 0) {
      return result;
    }
    Language const language(sigma, std::max(n_max + 1, aperiodic_nmax));
    if (aperiodicity_check(language).periodic) {
      result.periodic = true;
      return result;
    }
    for (std::size_t n = 1; n <= n_max; ++n) {
      std::vector<Word> failures;
      for (Word const& u : language.factors(n).words) {
        if (!synchronizing_point(sigma, u, language, interior_only).synchronized) {
          failures.push_back(u);
        }
      }
      bool const done = failures.empty();
      result.unsynchronized.push_back(std::move(failures));
      if (done) {
        result.delay = n;
        break;
      }
    }
    return result;
  }

  std::optional<std::size_t> max_verifiable_L(Window const& window, unsigned p) {
    if (p > window.depth()) {
      throw Error(ErrorKind::level_unavailable,
                  "level " + std::to_string(p) + " exceeds window depth "
                      + std::to_string(window.depth()));
    }
    std::size_t const margin = to_size(extreme_lengths(window.morphism(), p).widest);
    std::size_t const size   = window.content().size();
    if (margin > size / 2 || size - 2 * margin < 1) {
      return std::nullopt;
    }
    return (size - 2 * margin - 1) / 2;
  }

  VerifyVerdict verify_constant(Window const& window, std::size_t L, unsigned p) {
    auto const fit = max_verifiable_L(window, p);
    if (!fit || *fit < L) {
      throw Error(ErrorKind::window_too_small,
                  "window of " + std::to_string(window.content().size())
                      + " letters cannot host L=" + std::to_string(L) + " at level "
                      + std::to_string(p));
    }
    CuttingSet const cuts    = cutting_points(window, p);
    Word const&      content = window.content();
    std::int64_t const lo    = window.lo();
    std::int64_t const span  = static_cast<std::int64_t>(2 * L + 1);
    std::int64_t const first = lo + static_cast<std::int64_t>(L);
    std::int64_t const last  = window.hi() - 1 - static_cast<std::int64_t>(L);

    auto context = [&](std::int64_t m) {
      return WordView(content).subspan(static_cast<std::size_t>(m - static_cast<std::int64_t>(L) - lo),
                                       static_cast<std::size_t>(span));
    };

    // For every context around a cut: per preimage letter, the cut with
    // the smallest |i|.
    struct Best {
      std::int64_t i;
      std::int64_t cut;
    };
    using PerLetter = std::map<Letter, Best>;
    std::unordered_map<WordView, PerLetter, WordHash, WordEqual> groups;
    for (std::size_t t = 0; t < cuts.cuts.size(); ++t) {
      std::int64_t const c = cuts.cuts[t];
      if (c < first || c > last) {
        continue;
      }
      auto&        slot = groups[context(c)];
      std::int64_t i    = cuts.index[t];
      auto [it, fresh]  = slot.try_emplace(cuts.preimage[t], Best{i, c});
      if (!fresh) {
        auto const key = [](std::int64_t v) { return std::pair(v < 0 ? -v : v, v); };
        if (key(i) < key(it->second.i)) {
          it->second = Best{i, c};
        }
      }
    }

    // Visit m by increasing |m|, negative first on ties.
    std::vector<std::int64_t> order;
    for (std::int64_t m = first; m <= last; ++m) {
      order.push_back(m);
    }
    std::sort(order.begin(), order.end(), [](std::int64_t a, std::int64_t b) {
      auto const ka = std::pair(a < 0 ? -a : a, a);
      auto const kb = std::pair(b < 0 ? -b : b, b);
      return ka < kb;
    });

    for (std::int64_t m : order) {
      auto const g = groups.find(context(m));
      if (g == groups.end()) {
        continue;
      }
      std::ptrdiff_t const at = cuts.find(m);
      std::optional<Letter> own;
      if (at >= 0) {
        own = cuts.preimage[static_cast<std::size_t>(at)];
      }
      std::optional<std::pair<Letter, Best>> pick;
      for (auto const& [letter, best] : g->second) {
        if (own && *own == letter) {
          continue;
        }
        auto const key = [](std::int64_t v) { return std::pair(v < 0 ? -v : v, v); };
        if (!pick || key(best.i) < key(pick->second.i)) {
          pick = std::pair(letter, best);
        }
      }
      if (!pick) {
        continue;
      }
      Counterexample ce{};
      ce.i          = pick->second.i;
      ce.cut        = pick->second.cut;
      ce.cut_letter = pick->first;
      ce.m          = m;
      if (at >= 0) {
        ce.m_letter = own;
        ce.j        = cuts.index[static_cast<std::size_t>(at)];
      }
      return {false, ce};
    }
    return {true, std::nullopt};
  }

  EmpiricalConstant minimal_constant_empirical(Window const& window, unsigned p, std::size_t L_max) {
    auto const fit = max_verifiable_L(window, p);
    if (!fit) {
      throw Error(ErrorKind::window_too_small,
                  "window of " + std::to_string(window.content().size())
                      + " letters is too small for level " + std::to_string(p));
    }
    std::size_t const top = std::min(L_max, *fit);
    EmpiricalConstant out;
    for (std::size_t L = 0; L <= top; ++L) {
      out.scanned_to = L;
      auto verdict   = verify_constant(window, L, p);
      if (verdict.ok) {
        out.heuristic = L;
        break;
      }
      out.certified_lower = L + 1;
      out.counterexample  = verdict.counterexample;
    }
    return out;
  }

}  // namespace subrec
