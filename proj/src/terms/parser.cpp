// Copyright 2026 The rellat Authors
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

// Recursive-descent parser for the `^` / `v` / `+` term syntax.

#include <cctype>

#include "rellat/error.hpp"
#include "rellat/term.hpp"

namespace rellat {

namespace {

enum class Tok {
  kEnd,
  kIdent,
  kMeet,
  kJoin,
  kOr,
  kLParen,
  kRParen,
  kEquals,
  kAnd,
  kArrow,
  kIff,
  kDot,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t offset;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) { advance(); }

  const Token& peek() const { return current_; }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

 private:
  bool starts_with(std::string_view s) const {
    return src_.substr(pos_, s.size()) == s;
  }

  void advance() {
    while (pos_ < src_.size() &&
           std::isspace(static_cast<unsigned char>(src_[pos_]))) {
      ++pos_;
    }
    const std::size_t at = pos_;
    if (pos_ >= src_.size()) {
      current_ = {Tok::kEnd, "", at};
      return;
    }
    struct Symbol {
      std::string_view text;
      Tok kind;
    };
    // Longest first.
    static constexpr Symbol kSymbols[] = {
        {"<->", Tok::kIff}, {"->", Tok::kArrow}, {"∧", Tok::kMeet},
        {"∨", Tok::kJoin}, {"^", Tok::kMeet}, {"+", Tok::kOr},
        {"(", Tok::kLParen}, {")", Tok::kRParen}, {"=", Tok::kEquals},
        {"&", Tok::kAnd},   {".", Tok::kDot},
    };
    for (const auto& s : kSymbols) {
      if (starts_with(s.text)) {
        pos_ += s.text.size();
        current_ = {s.kind, std::string(s.text), at};
        return;
      }
    }
    const unsigned char c = static_cast<unsigned char>(src_[pos_]);
    if (std::isalpha(c) || c == '_') {
      std::size_t end = pos_ + 1;
      while (end < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[end])) ||
              src_[end] == '_')) {
        ++end;
      }
      std::string word(src_.substr(pos_, end - pos_));
      pos_ = end;
      current_ = {word == "v" ? Tok::kJoin : Tok::kIdent, std::move(word), at};
      return;
    }
    throw ParseError("unexpected character '" + std::string(1, src_[pos_]) + "'",
                     at);
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  Token current_{Tok::kEnd, "", 0};
};

class Parser {
 public:
  explicit Parser(std::string_view src) : lex_(src) {}

  Term term() { return join_level(); }

  Equation equation() {
    Term lhs = term();
    expect(Tok::kEquals, "'='");
    Term rhs = term();
    return {std::move(lhs), std::move(rhs)};
  }

  std::vector<Implication> statement() {
    std::vector<Equation> left{equation()};
    while (lex_.peek().kind == Tok::kAnd) {
      lex_.take();
      left.push_back(equation());
    }
    std::vector<Implication> out;
    if (lex_.peek().kind == Tok::kArrow) {
      lex_.take();
      out.push_back({std::move(left), equation()});
    } else if (lex_.peek().kind == Tok::kIff) {
      if (left.size() != 1) {
        throw ParseError("'<->' needs a single equation on each side",
                         lex_.peek().offset);
      }
      lex_.take();
      Equation right = equation();
      out.push_back({{left[0]}, right});
      out.push_back({{right}, left[0]});
    } else {
      if (left.size() != 1) {
        throw ParseError("conjunction without '->'", lex_.peek().offset);
      }
      out.push_back({{}, std::move(left[0])});
    }
    return out;
  }

  void finish(bool allow_dot) {
    if (allow_dot && lex_.peek().kind == Tok::kDot) lex_.take();
    if (lex_.peek().kind != Tok::kEnd) {
      throw ParseError("unexpected '" + lex_.peek().text + "'",
                       lex_.peek().offset);
    }
  }

 private:
  void expect(Tok kind, const char* what) {
    if (lex_.peek().kind != kind) {
      throw ParseError(std::string("expected ") + what, lex_.peek().offset);
    }
    lex_.take();
  }

  Term join_level() {
    Term t = or_level();
    while (lex_.peek().kind == Tok::kJoin) {
      lex_.take();
      t = Term::join(std::move(t), or_level());
    }
    return t;
  }

  Term or_level() {
    Term t = meet_level();
    while (lex_.peek().kind == Tok::kOr) {
      lex_.take();
      t = Term::disjunction(std::move(t), meet_level());
    }
    return t;
  }

  Term meet_level() {
    Term t = primary();
    while (lex_.peek().kind == Tok::kMeet) {
      lex_.take();
      t = Term::meet(std::move(t), primary());
    }
    return t;
  }

  Term primary() {
    const Token& tok = lex_.peek();
    if (tok.kind == Tok::kLParen) {
      lex_.take();
      Term t = join_level();
      expect(Tok::kRParen, "')'");
      return t;
    }
    if (tok.kind != Tok::kIdent) {
      throw ParseError(tok.kind == Tok::kEnd ? "unexpected end of input"
                                             : "unexpected '" + tok.text + "'",
                       tok.offset);
    }
    Token id = lex_.take();
    if (id.text == "R00") return Term::constant(Constant::kR00);
    if (id.text == "R01") return Term::constant(Constant::kR01);
    if (id.text == "R10") return Term::constant(Constant::kR10);
    if (id.text == "R11") return Term::constant(Constant::kR11);
    if (std::isupper(static_cast<unsigned char>(id.text[0]))) {
      return Term::ground(std::move(id.text));
    }
    return Term::variable(std::move(id.text));
  }

  Lexer lex_;
};

}  // namespace

Term parse_term(std::string_view text) {
  Parser p(text);
  Term t = p.term();
  p.finish(false);
  return t;
}

Equation parse_equation(std::string_view text) {
  Parser p(text);
  Equation e = p.equation();
  p.finish(true);
  return e;
}

std::vector<Implication> parse_statement(std::string_view text) {
  Parser p(text);
  auto out = p.statement();
  p.finish(true);
  return out;
}

}  // namespace rellat
