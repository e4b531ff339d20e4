// Copyright 2026 The ogk Authors.
// SPDX-License-Identifier: Apache-2.0

#include <cctype>

#include "ogk/surface.hpp"

namespace ogk::surface {

std::string format(const Diagnostic& d) {
  std::string out = d.file.empty() ? "<input>" : d.file;
  out += ":" + std::to_string(d.span.line) + ":" + std::to_string(d.span.column) + ": ";
  out += d.severity == Severity::Error ? "error" : "warning";
  out += "[" + d.code + "]: " + d.message;
  if (d.note) out += "\n  note: " + *d.note;
  return out;
}

const char* token_kind_name(Token::Kind k) {
  switch (k) {
    case Token::Kind::Keyword: return "keyword";
    case Token::Kind::Ident: return "ident";
    case Token::Kind::Symbol: return "symbol";
    case Token::Kind::Integer: return "integer";
    case Token::Kind::Bitlist: return "bitlist";
    case Token::Kind::String: return "string";
    case Token::Kind::Error: return "error";
    case Token::Kind::End: return "end of input";
  }
  return "?";
}

namespace {

class Lexer {
 public:
  Lexer(std::string_view src, const std::string& file) : src_(src), file_(file) {}

  LexResult run() {
    LexResult out;
    while (true) {
      skip_space_and_comments();
      if (pos_ >= src_.size()) break;
      out.tokens.push_back(next(out.diagnostics));
    }
    Token end;
    end.kind = Token::Kind::End;
    end.span = here(pos_);
    out.tokens.push_back(end);
    return out;
  }

 private:
  Span here(std::size_t begin) const { return Span{line_, col_, begin, begin}; }

  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else if ((static_cast<unsigned char>(src_[pos_]) & 0xC0) != 0x80) {
      ++col_;
    }
    ++pos_;
  }

  char peek(std::size_t k = 0) const { return pos_ + k < src_.size() ? src_[pos_ + k] : '\0'; }

  void skip_space_and_comments() {
    while (pos_ < src_.size()) {
      char c = peek();
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else if (c == '-' && peek(1) == '-') {
        while (pos_ < src_.size() && peek() != '\n') advance();
      } else {
        break;
      }
    }
  }

  Token make(Token::Kind kind, Span start, std::string text) {
    start.end = pos_;
    return Token{kind, std::move(text), start};
  }

  Token next(std::vector<Diagnostic>& diags) {
    Span start = here(pos_);
    char c = peek();
    auto uc = static_cast<unsigned char>(c);

    if (std::isalpha(uc)) {
      std::size_t b = pos_;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
        advance();
      std::string text(src_.substr(b, pos_ - b));
      bool kw = is_reserved_word(text) && text != "P";
      return make(kw ? Token::Kind::Keyword : Token::Kind::Ident, start, text);
    }
    if (std::isdigit(uc)) {
      if (c == '0' && peek(1) == 'b' && (peek(2) == '0' || peek(2) == '1')) {
        advance();
        advance();
        std::size_t b = pos_;
        while (peek() == '0' || peek() == '1') advance();
        return make(Token::Kind::Bitlist, start, std::string(src_.substr(b, pos_ - b)));
      }
      std::size_t b = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) advance();
      return make(Token::Kind::Integer, start, std::string(src_.substr(b, pos_ - b)));
    }
    if (c == '"') {
      advance();
      std::size_t b = pos_;
      while (pos_ < src_.size() && peek() != '"' && peek() != '\n') advance();
      if (peek() != '"') {
        Token t = make(Token::Kind::Error, start, std::string(src_.substr(b - 1, pos_ - b + 1)));
        diags.push_back({Severity::Error, "E0001", "unterminated string literal", t.span,
                         std::nullopt, file_});
        return t;
      }
      std::string text(src_.substr(b, pos_ - b));
      advance();
      return make(Token::Kind::String, start, text);
    }
    for (const char* two : {":=", "->"}) {
      if (c == two[0] && peek(1) == two[1]) {
        advance();
        advance();
        return make(Token::Kind::Symbol, start, two);
      }
    }
    if (std::string_view("()[]{},;:*.").find(c) != std::string_view::npos) {
      advance();
      return make(Token::Kind::Symbol, start, std::string(1, c));
    }

    // One diagnostic per illegal character; a UTF-8 sequence counts once.
    std::size_t b = pos_;
    advance();
    while (pos_ < src_.size() && (static_cast<unsigned char>(peek()) & 0xC0) == 0x80) advance();
    Token t = make(Token::Kind::Error, start, std::string(src_.substr(b, pos_ - b)));
    diags.push_back({Severity::Error, "E0001", "illegal character '" + t.text + "'", t.span,
                     std::nullopt, file_});
    return t;
  }

  std::string_view src_;
  std::string file_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

}  // namespace

LexResult lex(std::string_view source, const std::string& file) {
  return Lexer(source, file).run();
}

}  // namespace ogk::surface
