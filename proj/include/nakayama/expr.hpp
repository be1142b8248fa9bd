#pragma once

// Tokenizer and a small recursive-descent expression parser shared by scalar
// literals, noncommutative polynomials and Hopf-element literals.

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

#include "nakayama/errors.hpp"

namespace nakayama::expr {

enum class Tok { Int, Ident, String, Sym, End };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

// Identifiers are [A-Za-z_][A-Za-z0-9_]* optionally followed by primes, so
// dual generators like x1' lex as one name. '#' starts a comment. Options
// like --max-deg lex as a single identifier including the dashes.
std::vector<Token> tokenize(std::string_view text, int first_line = 1);

class TokenStream {
 public:
  explicit TokenStream(std::vector<Token> toks) : toks_(std::move(toks)) {}

  const Token& peek(std::size_t ahead = 0) const;
  Token next();
  bool at_end() const { return peek().kind == Tok::End; }
  bool is_sym(std::string_view s, std::size_t ahead = 0) const;
  bool is_ident(std::string_view s) const;
  void expect_sym(std::string_view s);
  Token expect_ident();
  long expect_int();
  [[noreturn]] void fail(const std::string& msg) const;
  [[noreturn]] static void fail_at(const Token& t, const std::string& msg);

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

// Policy requirements:
//   V integer(const mpz_class&, const Token&)
//   V ident(const Token&)
//   V add(V, V), sub(V, V), mul(V, V), neg(V)
//   V div(V, V, const Token&)       divisor must be invertible
//   V power(V, long, const Token&)
// Grammar:
//   expr    := ['+'|'-'] term (('+'|'-') term)*
//   term    := unary (('*'|'/') unary)*
//   unary   := '-' unary | power
//   power   := primary ['^' ['-'] INT]
//   primary := INT | IDENT | '(' expr ')'
template <class Policy>
class Parser {
 public:
  using Value = decltype(std::declval<Policy&>().ident(std::declval<const Token&>()));

  Parser(TokenStream& ts, Policy& policy) : ts_(ts), policy_(policy) {}

  Value expression() {
    Value acc = unary();
    while (ts_.is_sym("+") || ts_.is_sym("-")) {
      bool plus = ts_.next().text == "+";
      Value rhs = term();
      acc = plus ? policy_.add(std::move(acc), std::move(rhs))
                 : policy_.sub(std::move(acc), std::move(rhs));
    }
    return acc;
  }

 private:
  Value term() {
    Value acc = unary_power();
    return term_tail(std::move(acc));
  }

  Value term_tail(Value acc) {
    while (ts_.is_sym("*") || ts_.is_sym("/")) {
      Token op = ts_.next();
      Value rhs = unary_power();
      acc = op.text == "*" ? policy_.mul(std::move(acc), std::move(rhs))
                           : policy_.div(std::move(acc), std::move(rhs), op);
    }
    return acc;
  }

  // A leading sign binds to the whole first term.
  Value unary() {
    if (ts_.is_sym("+")) {
      ts_.next();
      return term();
    }
    if (ts_.is_sym("-")) {
      ts_.next();
      return policy_.neg(term());
    }
    return term();
  }

  Value unary_power() {
    if (ts_.is_sym("-")) {
      ts_.next();
      return policy_.neg(unary_power());
    }
    return power();
  }

  Value power() {
    Value base = primary();
    if (ts_.is_sym("^")) {
      Token op = ts_.next();
      bool negative = false;
      if (ts_.is_sym("-")) {
        ts_.next();
        negative = true;
      }
      long k = ts_.expect_int();
      base = policy_.power(std::move(base), negative ? -k : k, op);
    }
    return base;
  }

  Value primary() {
    const Token& t = ts_.peek();
    if (t.kind == Tok::Int) {
      Token tok = ts_.next();
      return policy_.integer(mpz_class(tok.text), tok);
    }
    if (t.kind == Tok::Ident) {
      Token tok = ts_.next();
      return policy_.ident(tok);
    }
    if (ts_.is_sym("(")) {
      ts_.next();
      Value v = expression();
      ts_.expect_sym(")");
      return v;
    }
    ts_.fail("expected a number, a name or '('");
  }

  TokenStream& ts_;
  Policy& policy_;
};

template <class Policy>
auto parse_expression(TokenStream& ts, Policy& policy) {
  return Parser<Policy>(ts, policy).expression();
}

// Parses a complete string; trailing tokens are an error.
template <class Policy>
auto parse_whole(std::string_view text, Policy& policy) {
  TokenStream ts(tokenize(text));
  auto v = parse_expression(ts, policy);
  if (!ts.at_end()) ts.fail("unexpected trailing input");
  return v;
}

}  // namespace nakayama::expr
