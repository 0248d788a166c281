#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "cutcert/word.hpp"

namespace cutcert {

// Word grammar (also used in presentation files and on the CLI):
//   word    := term { term }
//   term    := primary [ '^' int ]
//   primary := atom | '[' word ',' word ']' | '(' word ')'
//   atom    := identifier | '1'
// '[u,v]' desugars to u v u^-1 v^-1; '1' is the empty word.

namespace detail {

struct Token {
  enum Kind { Ident, Number, LBracket, RBracket, LParen, RParen, Comma, Caret, End };
  Kind kind;
  std::string text;
  long long value = 0;
  int line = 1;
  int col = 1;
};

class WordLexer {
 public:
  WordLexer(std::string_view src, int first_line) : src_(src), line_(first_line) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_ws();
      Token t;
      t.line = line_;
      t.col = col_;
      if (pos_ >= src_.size()) {
        t.kind = Token::End;
        out.push_back(t);
        return out;
      }
      char c = src_[pos_];
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        size_t start = pos_;
        while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
                                      src_[pos_] == '_'))
          advance();
        t.kind = Token::Ident;
        t.text = std::string(src_.substr(start, pos_ - start));
      } else if (std::isdigit(static_cast<unsigned char>(c)) ||
                 (c == '-' && pos_ + 1 < src_.size() &&
                  std::isdigit(static_cast<unsigned char>(src_[pos_ + 1])))) {
        size_t start = pos_;
        if (c == '-') advance();
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
          advance();
        t.kind = Token::Number;
        t.text = std::string(src_.substr(start, pos_ - start));
        try {
          t.value = std::stoll(t.text);
        } catch (const std::exception&) {
          throw ParseError(t.line, t.col, "integer out of range: " + t.text);
        }
      } else {
        switch (c) {
          case '[': t.kind = Token::LBracket; break;
          case ']': t.kind = Token::RBracket; break;
          case '(': t.kind = Token::LParen; break;
          case ')': t.kind = Token::RParen; break;
          case ',': t.kind = Token::Comma; break;
          case '^': t.kind = Token::Caret; break;
          default:
            throw ParseError(line_, col_, std::string("unexpected character '") + c + "'");
        }
        t.text = std::string(1, c);
        advance();
      }
      out.push_back(t);
    }
  }

 private:
  void skip_ws() {
    while (pos_ < src_.size() &&
           std::isspace(static_cast<unsigned char>(src_[pos_])))
      advance();
  }

  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  std::string_view src_;
  size_t pos_ = 0;
  int line_;
  int col_ = 1;
};

class WordParser {
 public:
  WordParser(std::vector<Token> tokens, const Alphabet& alphabet)
      : tokens_(std::move(tokens)), alphabet_(alphabet) {}

  Word parse_full() {
    Word w = parse_word();
    if (cur().kind != Token::End)
      throw ParseError(cur().line, cur().col, "unexpected token '" + cur().text + "'");
    return w;
  }

 private:
  const Token& cur() const { return tokens_[idx_]; }
  void next() { ++idx_; }

  bool starts_primary() const {
    switch (cur().kind) {
      case Token::Ident:
      case Token::LBracket:
      case Token::LParen:
        return true;
      case Token::Number:
        return cur().value == 1;  // '1' is the empty word
      default:
        return false;
    }
  }

  Word parse_word() {
    if (!starts_primary())
      throw ParseError(cur().line, cur().col, "expected a word, got '" + cur().text + "'");
    Word w = parse_term();
    while (starts_primary()) w = w * parse_term();
    return w;
  }

  Word parse_term() {
    Word w = parse_primary();
    if (cur().kind == Token::Caret) {
      next();
      if (cur().kind != Token::Number)
        throw ParseError(cur().line, cur().col, "expected integer exponent");
      long long e = cur().value;
      next();
      if (e < -1000000 || e > 1000000)
        throw ParseError(cur().line, cur().col, "exponent out of range");
      w = w.pow(static_cast<int>(e));
    }
    return w;
  }

  Word parse_primary() {
    const Token t = cur();
    switch (t.kind) {
      case Token::Ident: {
        next();
        auto i = alphabet_.index_of(t.text);
        if (!i) throw ParseError(t.line, t.col, "unknown generator '" + t.text + "'");
        return Word::generator(alphabet_, *i);
      }
      case Token::Number:
        if (t.value == 1) {
          next();
          return Word(alphabet_);
        }
        throw ParseError(t.line, t.col, "expected a word, got '" + t.text + "'");
      case Token::LBracket: {
        next();
        Word u = parse_word();
        if (cur().kind != Token::Comma)
          throw ParseError(cur().line, cur().col, "expected ',' in commutator");
        next();
        Word v = parse_word();
        if (cur().kind != Token::RBracket)
          throw ParseError(cur().line, cur().col, "expected ']'");
        next();
        return commutator(u, v);
      }
      case Token::LParen: {
        next();
        Word u = parse_word();
        if (cur().kind != Token::RParen)
          throw ParseError(cur().line, cur().col, "expected ')'");
        next();
        return u;
      }
      default:
        throw ParseError(t.line, t.col, "expected a word, got '" + t.text + "'");
    }
  }

  std::vector<Token> tokens_;
  const Alphabet& alphabet_;
  size_t idx_ = 0;
};

}  // namespace detail

/// Parses `text` as a freely reduced word over `alphabet`. `first_line` sets
/// the line number reported in errors (for embedding in files).
inline Word parse_word(std::string_view text, const Alphabet& alphabet, int first_line = 1) {
  detail::WordLexer lex(text, first_line);
  detail::WordParser parser(lex.run(), alphabet);
  return parser.parse_full();
}

/// Identifiers appearing in `text`, in order of first appearance. Used to
/// infer an alphabet from CLI input.
inline std::vector<std::string> scan_identifiers(std::string_view text) {
  detail::WordLexer lex(text, 1);
  std::vector<std::string> out;
  for (const auto& t : lex.run()) {
    if (t.kind != detail::Token::Ident) continue;
    bool seen = false;
    for (const auto& s : out)
      if (s == t.text) {
        seen = true;
        break;
      }
    if (!seen) out.push_back(t.text);
  }
  return out;
}

}  // namespace cutcert
