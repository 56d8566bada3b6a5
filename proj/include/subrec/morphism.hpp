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

// Non-erasing morphisms over a finite indexed alphabet.
//
// Letters are dense indices 0, ..., #A - 1; the printable tokens only matter
// at the I/O boundary. A morphism file looks like
//
//   # Fibonacci
//   a -> a b
//   b -> a
//
// where each token is a single grapheme cluster or a bracketed name such as
// [x1]. Whitespace between right-hand-side tokens is optional. The order of
// the rules defines the letter indices.

#ifndef SUBREC_MORPHISM_HPP_
#define SUBREC_MORPHISM_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace subrec {

  using Letter   = std::uint32_t;
  using Word     = std::vector<Letter>;
  using WordView = std::span<Letter const>;

  // Hash and equality usable with heterogeneous lookup (Word or WordView).
  struct WordHash {
    using is_transparent = void;
    std::size_t operator()(WordView w) const noexcept;
    std::size_t operator()(Word const& w) const noexcept {
      return (*this)(WordView(w));
    }
  };

  struct WordEqual {
    using is_transparent = void;
    bool operator()(WordView lhs, WordView rhs) const noexcept;
  };

  inline WordView slice(WordView w, std::size_t first, std::size_t count) {
    return w.subspan(first, count);
  }

  class Morphism {
   public:
    Morphism() = default;

    // Throws Error(empty_image) for an erasing rule and Error(unknown_letter)
    // when an image uses an index >= tokens.size().
    Morphism(std::vector<std::string> tokens, std::vector<Word> images);

    [[nodiscard]] std::size_t size() const noexcept {
      return _images.size();
    }

    [[nodiscard]] Word const& image(Letter a) const {
      return _images[a];
    }

    [[nodiscard]] std::vector<Word> const& images() const noexcept {
      return _images;
    }

    [[nodiscard]] std::vector<std::string> const& tokens() const noexcept {
      return _tokens;
    }

    [[nodiscard]] std::string const& token(Letter a) const {
      return _tokens[a];
    }

    // |σ| and ⟨σ⟩.
    [[nodiscard]] std::size_t widest() const noexcept {
      return _widest;
    }
    [[nodiscard]] std::size_t narrowest() const noexcept {
      return _narrowest;
    }

    [[nodiscard]] bool is_uniform() const noexcept {
      return _widest == _narrowest;
    }

    // Display form. Single-token words are concatenated when every token is
    // one grapheme; otherwise tokens are space separated.
    [[nodiscard]] std::string format(WordView w) const;

    // Parse a word written with this morphism's tokens ("aba", "a b a",
    // "[x][y]"). Throws Error(unknown_letter).
    [[nodiscard]] Word parse_word(std::string_view text) const;

    [[nodiscard]] Letter letter(std::string_view token) const;

    // The morphism file text that parse_morphism maps back to *this.
    [[nodiscard]] std::string to_text() const;

    bool operator==(Morphism const& that) const {
      return _tokens == that._tokens && _images == that._images;
    }

   private:
    std::vector<std::string>                _tokens;
    std::vector<Word>                       _images;
    std::unordered_map<std::string, Letter> _index;
    std::size_t                             _widest    = 0;
    std::size_t                             _narrowest = 0;
    bool                                    _compact   = true;
  };

  Morphism parse_morphism(std::string_view text);
  Morphism load_morphism(std::string const& path);

  // Split a run of tokens into grapheme-sized pieces and [names]. Whitespace
  // separates tokens and is otherwise ignored.
  std::vector<std::string> split_tokens(std::string_view text);

  // σ(w). A function object rather than a function, so that unqualified
  // calls with std::vector arguments do not find std::apply by ADL.
  struct ApplyFn {
    Word operator()(Morphism const& sigma, WordView w) const;
  };
  inline constexpr ApplyFn apply{};

  // σ^n(a). The length is predicted from the incidence matrix first, so an
  // oversized request fails with Error(size_exceeded) before allocating.
  Word iterate(Morphism const& sigma, Letter a, std::uint64_t n, std::size_t cap);
  Word iterate(Morphism const& sigma, WordView w, std::uint64_t n, std::size_t cap);

  // σ^n as a morphism in its own right (images materialised, each <= cap).
  Morphism power(Morphism const& sigma, std::uint64_t n, std::size_t cap = std::size_t(1) << 24);

}  // namespace subrec

#endif  // SUBREC_MORPHISM_HPP_
