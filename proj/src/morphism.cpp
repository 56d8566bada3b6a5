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

#include "subrec/morphism.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>
#include <utility>

#include "subrec/error.hpp"
#include "subrec/matrix.hpp"

namespace subrec {

  namespace {

    struct CodePoint {
      char32_t    value;
      std::size_t bytes;
    };

    std::optional<CodePoint> decode(std::string_view s, std::size_t at) {
      auto const lead = static_cast<unsigned char>(s[at]);
      std::size_t len;
      char32_t    cp;
      if (lead < 0x80) {
        return CodePoint{lead, 1};
      } else if ((lead >> 5U) == 0x6) {
        len = 2;
        cp  = lead & 0x1FU;
      } else if ((lead >> 4U) == 0xE) {
        len = 3;
        cp  = lead & 0x0FU;
      } else if ((lead >> 3U) == 0x1E) {
        len = 4;
        cp  = lead & 0x07U;
      } else {
        return std::nullopt;
      }
      if (at + len > s.size()) {
        return std::nullopt;
      }
      for (std::size_t i = 1; i < len; ++i) {
        auto const c = static_cast<unsigned char>(s[at + i]);
        if ((c >> 6U) != 0x2) {
          return std::nullopt;
        }
        cp = (cp << 6U) | (c & 0x3FU);
      }
      return CodePoint{cp, len};
    }

    // Code points that attach to the preceding one inside a grapheme cluster.
    bool is_extending(char32_t cp) {
      return (cp >= 0x0300 && cp <= 0x036F) || (cp >= 0x1AB0 && cp <= 0x1AFF)
             || (cp >= 0x1DC0 && cp <= 0x1DFF) || (cp >= 0x20D0 && cp <= 0x20FF)
             || (cp >= 0xFE00 && cp <= 0xFE0F) || (cp >= 0xFE20 && cp <= 0xFE2F)
             || (cp >= 0x1F3FB && cp <= 0x1F3FF) || cp == 0x200D;
    }

    bool is_space(char c) {
      return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f';
    }

    std::size_t column_of(std::string_view line, std::size_t byte) {
      std::size_t col = 1;
      for (std::size_t i = 0; i < byte && i < line.size(); ++i) {
        if ((static_cast<unsigned char>(line[i]) >> 6U) != 0x2) {
          ++col;
        }
      }
      return col;
    }

    struct Token {
      std::string text;
      std::size_t offset;
    };

    struct TokenizeError {
      std::size_t offset;
      std::string message;
    };

    // Returns the tokens of s, or the first offending byte offset.
    std::vector<Token> tokenize(std::string_view s,
                                std::optional<TokenizeError>& err) {
      std::vector<Token> out;
      std::size_t        i = 0;
      while (i < s.size()) {
        if (is_space(s[i])) {
          ++i;
          continue;
        }
        std::size_t const start = i;
        if (s[i] == '[') {
          auto close = s.find(']', i + 1);
          if (close == std::string_view::npos) {
            err = TokenizeError{start, "unterminated '['"};
            return out;
          }
          auto name = s.substr(i + 1, close - i - 1);
          if (name.empty()
              || std::any_of(name.begin(), name.end(), [](char c) {
                   return is_space(c) || c == '[';
                 })) {
            err = TokenizeError{start, "malformed bracketed name"};
            return out;
          }
          out.push_back({std::string(s.substr(i, close - i + 1)), start});
          i = close + 1;
          continue;
        }
        if (s[i] == ']') {
          err = TokenizeError{start, "unexpected ']'"};
          return out;
        }
        auto cp = decode(s, i);
        if (!cp) {
          err = TokenizeError{start, "invalid UTF-8"};
          return out;
        }
        i += cp->bytes;
        bool joined = cp->value == 0x200D;
        while (i < s.size()) {
          auto next = decode(s, i);
          if (!next) {
            break;
          }
          if (joined || is_extending(next->value)) {
            joined = next->value == 0x200D;
            i += next->bytes;
          } else {
            break;
          }
        }
        out.push_back({std::string(s.substr(start, i - start)), start});
      }
      return out;
    }

    std::uint64_t fnv_mix(std::uint64_t h, std::uint64_t x) {
      h ^= x + 0x9E3779B97F4A7C15ULL + (h << 6U) + (h >> 2U);
      return h;
    }

  }  // namespace

  std::size_t WordHash::operator()(WordView w) const noexcept {
    std::uint64_t h = 0xCBF29CE484222325ULL ^ w.size();
    for (Letter a : w) {
      h = fnv_mix(h, a);
    }
    return static_cast<std::size_t>(h);
  }

  bool WordEqual::operator()(WordView lhs, WordView rhs) const noexcept {
    return std::equal(lhs.begin(), lhs.end(), rhs.begin(), rhs.end());
  }

  std::vector<std::string> split_tokens(std::string_view text) {
    std::optional<TokenizeError> err;
    auto                         tokens = tokenize(text, err);
    if (err) {
      throw SyntaxError(1, column_of(text, err->offset), err->message);
    }
    std::vector<std::string> out;
    out.reserve(tokens.size());
    for (auto& t : tokens) {
      out.push_back(std::move(t.text));
    }
    return out;
  }

  Morphism::Morphism(std::vector<std::string> tokens, std::vector<Word> images)
      : _tokens(std::move(tokens)), _images(std::move(images)) {
    if (_tokens.size() != _images.size()) {
      throw Error(ErrorKind::invalid_argument,
                  "morphism needs exactly one image per letter");
    }
    if (_tokens.empty()) {
      throw Error(ErrorKind::invalid_argument, "empty alphabet");
    }
    _narrowest = static_cast<std::size_t>(-1);
    for (Letter a = 0; a < _tokens.size(); ++a) {
      if (!_index.emplace(_tokens[a], a).second) {
        throw Error(ErrorKind::duplicate_rule,
                    "duplicate letter '" + _tokens[a] + "'");
      }
      if (_tokens[a].empty()) {
        throw Error(ErrorKind::invalid_argument, "empty letter token");
      }
      if (_images[a].empty()) {
        throw Error(ErrorKind::empty_image,
                    "erasing rule for '" + _tokens[a] + "'");
      }
      for (Letter b : _images[a]) {
        if (b >= _tokens.size()) {
          throw Error(ErrorKind::unknown_letter,
                      "image of '" + _tokens[a] + "' uses letter index "
                          + std::to_string(b));
        }
      }
      _widest    = std::max(_widest, _images[a].size());
      _narrowest = std::min(_narrowest, _images[a].size());
      std::optional<TokenizeError> err;
      auto                         pieces = tokenize(_tokens[a], err);
      if (err || pieces.size() != 1 || _tokens[a].front() == '[') {
        _compact = false;
      }
    }
  }

  std::string Morphism::format(WordView w) const {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (!_compact && i != 0) {
        out += ' ';
      }
      out += _tokens.at(w[i]);
    }
    return out;
  }

  Letter Morphism::letter(std::string_view token) const {
    auto it = _index.find(std::string(token));
    if (it == _index.end()) {
      throw Error(ErrorKind::unknown_letter,
                  "unknown letter '" + std::string(token) + "'");
    }
    return it->second;
  }

  Word Morphism::parse_word(std::string_view text) const {
    Word out;
    for (auto const& t : split_tokens(text)) {
      out.push_back(letter(t));
    }
    return out;
  }

  std::string Morphism::to_text() const {
    std::string out;
    for (Letter a = 0; a < size(); ++a) {
      out += _tokens[a] + " ->";
      for (Letter b : _images[a]) {
        out += ' ';
        out += _tokens[b];
      }
      out += '\n';
    }
    return out;
  }

  Morphism parse_morphism(std::string_view text) {
    struct Rule {
      std::string        lhs;
      std::vector<Token> rhs;
      std::size_t        line;
      std::string        raw;
    };
    std::vector<Rule>                            rules;
    std::unordered_map<std::string, std::size_t> seen;

    std::size_t line_no = 0;
    std::size_t pos     = 0;
    while (pos <= text.size()) {
      auto eol = text.find('\n', pos);
      if (eol == std::string_view::npos) {
        eol = text.size();
      }
      std::string_view line = text.substr(pos, eol - pos);
      ++line_no;
      pos = eol + 1;

      auto first = line.find_first_not_of(" \t\r\v\f");
      if (first == std::string_view::npos || line[first] == '#') {
        if (eol == text.size()) {
          break;
        }
        continue;
      }
      if (line_no == 1 && line.substr(0, 3) == "\xEF\xBB\xBF") {
        line.remove_prefix(3);
        first = line.find_first_not_of(" \t\r\v\f");
      }
      auto arrow = line.find("->");
      if (arrow == std::string_view::npos) {
        throw SyntaxError(line_no, column_of(line, first), "expected 'LHS -> RHS'");
      }
      std::optional<TokenizeError> err;
      auto lhs = tokenize(line.substr(0, arrow), err);
      if (err) {
        throw SyntaxError(line_no, column_of(line, err->offset), err->message);
      }
      if (lhs.size() != 1) {
        throw SyntaxError(line_no,
                          column_of(line, lhs.empty() ? arrow : lhs[1].offset),
                          lhs.empty() ? "missing left-hand side"
                                      : "left-hand side must be a single letter");
      }
      auto rhs = tokenize(line.substr(arrow + 2), err);
      if (err) {
        throw SyntaxError(line_no,
                          column_of(line, arrow + 2 + err->offset),
                          err->message);
      }
      for (auto& t : rhs) {
        t.offset += arrow + 2;
      }
      if (rhs.empty()) {
        throw Error(ErrorKind::empty_image,
                    "line " + std::to_string(line_no) + ": erasing rule for '"
                        + lhs.front().text + "'");
      }
      if (!seen.emplace(lhs.front().text, rules.size()).second) {
        throw Error(ErrorKind::duplicate_rule,
                    "line " + std::to_string(line_no) + ": second rule for '"
                        + lhs.front().text + "'");
      }
      rules.push_back({lhs.front().text, std::move(rhs), line_no, std::string(line)});
      if (eol == text.size()) {
        break;
      }
    }
    if (rules.empty()) {
      throw SyntaxError(1, 1, "no rules found");
    }

    std::vector<std::string> tokens;
    std::vector<Word>        images;
    for (auto const& r : rules) {
      tokens.push_back(r.lhs);
    }
    for (auto const& r : rules) {
      Word img;
      for (auto const& t : r.rhs) {
        auto it = seen.find(t.text);
        if (it == seen.end()) {
          throw Error(ErrorKind::unknown_letter,
                      "line " + std::to_string(r.line) + ", column "
                          + std::to_string(column_of(r.raw, t.offset))
                          + ": letter '" + t.text + "' has no rule");
        }
        img.push_back(static_cast<Letter>(it->second));
      }
      images.push_back(std::move(img));
    }
    return Morphism(std::move(tokens), std::move(images));
  }

  Morphism load_morphism(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw Error(ErrorKind::io_error, path + ": no such file");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_morphism(buffer.str());
  }

  Word ApplyFn::operator()(Morphism const& sigma, WordView w) const {
    std::size_t total = 0;
    for (Letter a : w) {
      total += sigma.image(a).size();
    }
    Word out;
    out.reserve(total);
    for (Letter a : w) {
      auto const& img = sigma.image(a);
      out.insert(out.end(), img.begin(), img.end());
    }
    return out;
  }

  Word iterate(Morphism const& sigma, WordView w, std::uint64_t n, std::size_t cap) {
    if (n > 0) {
      auto   lengths = image_lengths(sigma, n);
      BigNat total   = 0;
      for (Letter a : w) {
        total += lengths[a];
      }
      if (total > cap) {
        throw Error(ErrorKind::size_exceeded,
                    "iterate: result has " + to_decimal(total)
                        + " letters, cap is " + std::to_string(cap));
      }
    } else if (w.size() > cap) {
      throw Error(ErrorKind::size_exceeded, "iterate: input exceeds cap");
    }
    Word current(w.begin(), w.end());
    for (std::uint64_t i = 0; i < n; ++i) {
      current = subrec::apply(sigma, current);
    }
    return current;
  }

  Word iterate(Morphism const& sigma, Letter a, std::uint64_t n, std::size_t cap) {
    Letter const one[1] = {a};
    return iterate(sigma, WordView(one), n, cap);
  }

  Morphism power(Morphism const& sigma, std::uint64_t n, std::size_t cap) {
    std::vector<Word> images;
    images.reserve(sigma.size());
    for (Letter a = 0; a < sigma.size(); ++a) {
      images.push_back(iterate(sigma, a, n, cap));
    }
    return Morphism(sigma.tokens(), std::move(images));
  }

}  // namespace subrec
