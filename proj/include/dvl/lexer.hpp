/*
 * Copyright (c) 2026, the dvl project authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
*/

#ifndef DVL_LEXER_HPP_
#define DVL_LEXER_HPP_

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "dvl/diag.hpp"
#include "dvl/value.hpp"

namespace dvl {

enum class Tok {
  Ident, Int,
  LBrace, RBrace, LParen, RParen, LBracket, RBracket,
  Comma, Colon, Semi, Dot, DotDot,
  Bang, Question, At, Pipe,
  Assign,            // :=
  MapsTo,            // |->
  Diamond,           // <>
  Prec,              // -<
  Wedge,             // /\ (conjunction)
  Vee,               // \/ (disjunction, pure / out-of-fragment marker)
  AndAnd, OrOr,
  EqEq, Neq, Le, Ge, Lt, Gt,
  Plus, Minus, Star,
  Eof, Error,
};

struct Token {
  Tok kind = Tok::Eof;
  std::string text;
  Value value = 0;    // Int
  Span span;
};

/// Tokenizes a whole input. Never throws: malformed characters become
/// Error tokens so the parser can report a spanned diagnostic.
inline std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  const std::size_t n = src.size();

  auto make = [&](Tok k, std::size_t start, std::size_t len, int l, int c) {
    Token t;
    t.kind = k;
    t.text = std::string(src.substr(start, len));
    t.span = Span{l, c, static_cast<int>(len)};
    return t;
  };

  while (i < n) {
    char ch = src[i];
    if (ch == '\n') { ++line; col = 1; ++i; continue; }
    if (ch == ' ' || ch == '\t' || ch == '\r') { ++col; ++i; continue; }
    if (ch == '#') {  // comment to end of line
      while (i < n && src[i] != '\n') { ++i; ++col; }
      continue;
    }
    const int tl = line, tc = col;
    const std::size_t start = i;
    auto two = [&](char a, char b) {
      return ch == a && i + 1 < n && src[i + 1] == b;
    };
    auto three = [&](char a, char b, char c) {
      return ch == a && i + 2 < n && src[i + 1] == b && src[i + 2] == c;
    };

    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t j = i;
      while (j < n && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      while (j < n && src[j] == '\'') ++j;  // trailing primes: N', MyBank'
      Token t = make(Tok::Ident, start, j - start, tl, tc);
      col += static_cast<int>(j - i);
      i = j;
      out.push_back(std::move(t));
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t j = i;
      while (j < n && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      Token t = make(Tok::Int, start, j - start, tl, tc);
      t.value = std::stoll(t.text);
      col += static_cast<int>(j - i);
      i = j;
      out.push_back(std::move(t));
      continue;
    }

    Tok k = Tok::Error;
    std::size_t len = 1;
    if (three('|', '-', '>')) { k = Tok::MapsTo; len = 3; }
    else if (two(':', '=')) { k = Tok::Assign; len = 2; }
    else if (two('-', '<')) { k = Tok::Prec; len = 2; }
    else if (two('<', '>')) { k = Tok::Diamond; len = 2; }
    else if (two('<', '=')) { k = Tok::Le; len = 2; }
    else if (two('>', '=')) { k = Tok::Ge; len = 2; }
    else if (two('=', '=')) { k = Tok::EqEq; len = 2; }
    else if (two('!', '=')) { k = Tok::Neq; len = 2; }
    else if (two('&', '&')) { k = Tok::AndAnd; len = 2; }
    else if (two('|', '|')) { k = Tok::OrOr; len = 2; }
    else if (two('/', '\\')) { k = Tok::Wedge; len = 2; }
    else if (two('\\', '/')) { k = Tok::Vee; len = 2; }
    else if (two('.', '.')) { k = Tok::DotDot; len = 2; }
    else {
      switch (ch) {
        case '{': k = Tok::LBrace; break;
        case '}': k = Tok::RBrace; break;
        case '(': k = Tok::LParen; break;
        case ')': k = Tok::RParen; break;
        case '[': k = Tok::LBracket; break;
        case ']': k = Tok::RBracket; break;
        case ',': k = Tok::Comma; break;
        case ':': k = Tok::Colon; break;
        case ';': k = Tok::Semi; break;
        case '.': k = Tok::Dot; break;
        case '!': k = Tok::Bang; break;
        case '?': k = Tok::Question; break;
        case '@': k = Tok::At; break;
        case '|': k = Tok::Pipe; break;
        case '<': k = Tok::Lt; break;
        case '>': k = Tok::Gt; break;
        case '+': k = Tok::Plus; break;
        case '-': k = Tok::Minus; break;
        case '*': k = Tok::Star; break;
        default: k = Tok::Error; break;
      }
    }
    out.push_back(make(k, start, len, tl, tc));
    col += static_cast<int>(len);
    i += len;
  }
  Token eof;
  eof.kind = Tok::Eof;
  eof.span = Span{line, col, 0};
  out.push_back(eof);
  return out;
}

}  // namespace dvl

#endif  // DVL_LEXER_HPP_
