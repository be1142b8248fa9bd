#include "nakayama/expr.hpp"

#include <cctype>

namespace nakayama::expr {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

}  // namespace

std::vector<Token> tokenize(std::string_view text, int first_line) {
  std::vector<Token> out;
  int line = first_line;
  int col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t k) {
    for (std::size_t j = 0; j < k; ++j) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    int tl = line, tc = col;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      out.push_back({Tok::Int, std::string(text.substr(i, j - i)), tl, tc});
      advance(j - i);
      continue;
    }
    if (ident_start(c) ||
        (c == '-' && i + 2 < text.size() && text[i + 1] == '-' && ident_start(text[i + 2]))) {
      std::size_t j = i;
      while (j < text.size() && text[j] == '-') ++j;
      while (j < text.size() && (ident_char(text[j]) || text[j] == '-')) {
        // a dash continues an option name only, never a plain identifier
        if (text[j] == '-' && text[i] != '-') break;
        ++j;
      }
      while (j < text.size() && text[j] == '\'') ++j;
      out.push_back({Tok::Ident, std::string(text.substr(i, j - i)), tl, tc});
      advance(j - i);
      continue;
    }
    if (c == '"') {
      std::size_t j = i + 1;
      while (j < text.size() && text[j] != '"' && text[j] != '\n') ++j;
      if (j >= text.size() || text[j] != '"') throw ParseError("unterminated string", tl, tc);
      out.push_back({Tok::String, std::string(text.substr(i + 1, j - i - 1)), tl, tc});
      advance(j + 1 - i);
      continue;
    }
    static const std::string_view syms = "+-*/^()[]{},;:=";
    if (syms.find(c) != std::string_view::npos) {
      out.push_back({Tok::Sym, std::string(1, c), tl, tc});
      advance(1);
      continue;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", tl, tc);
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

const Token& TokenStream::peek(std::size_t ahead) const {
  std::size_t k = pos_ + ahead;
  return k < toks_.size() ? toks_[k] : toks_.back();
}

Token TokenStream::next() {
  Token t = peek();
  if (pos_ < toks_.size() - 1) ++pos_;
  return t;
}

bool TokenStream::is_sym(std::string_view s, std::size_t ahead) const {
  const Token& t = peek(ahead);
  return t.kind == Tok::Sym && t.text == s;
}

bool TokenStream::is_ident(std::string_view s) const {
  const Token& t = peek();
  return t.kind == Tok::Ident && t.text == s;
}

void TokenStream::expect_sym(std::string_view s) {
  if (!is_sym(s)) fail("expected '" + std::string(s) + "'");
  next();
}

Token TokenStream::expect_ident() {
  if (peek().kind != Tok::Ident) fail("expected a name");
  return next();
}

long TokenStream::expect_int() {
  if (peek().kind != Tok::Int) fail("expected an integer");
  Token t = next();
  try {
    return std::stol(t.text);
  } catch (const std::exception&) {
    fail_at(t, "integer out of range");
  }
}

void TokenStream::fail(const std::string& msg) const {
  const Token& t = peek();
  std::string found = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
  throw ParseError(msg + ", found " + found, t.line, t.column);
}

void TokenStream::fail_at(const Token& t, const std::string& msg) {
  throw ParseError(msg, t.line, t.column);
}

}  // namespace nakayama::expr
