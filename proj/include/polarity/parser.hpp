#pragma once

#include <cctype>
#include <string>
#include <utility>
#include <vector>

#include "formula.hpp"
#include "printer.hpp"
#include "sorted_formula.hpp"

namespace polarity {

namespace detail {

enum class Tok {
  Ident,      // p0, P0, Q0, top, bot, top@1, ...
  AndOp,      // &
  OrOp,       // |
  Star,       // *
  RArrow,     // ->
  LArrow,     // <-
  Tilde,      // ~
  BoxD,       // [d]
  BoxU,       // [u]
  DiaU,       // <u>
  DiaD,       // <d>
  LParen,
  RParen,
  Turnstile,  // |-
  End
};

struct Token {
  Tok kind;
  std::string text;
  int pos;
};

inline std::vector<Token> lex(const std::string& s) {
  std::vector<Token> out;
  size_t i = 0;
  auto push = [&](Tok k, std::string t, size_t at) { out.push_back({k, std::move(t), (int)at}); };
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace((unsigned char)c)) {
      ++i;
      continue;
    }
    size_t at = i;
    if (std::isalpha((unsigned char)c)) {
      size_t j = i;
      while (j < s.size() && (std::isalnum((unsigned char)s[j]) || s[j] == '@')) ++j;
      push(Tok::Ident, s.substr(i, j - i), at);
      i = j;
      continue;
    }
    switch (c) {
      case '&':
        push(Tok::AndOp, "&", at);
        ++i;
        break;
      case '*':
        push(Tok::Star, "*", at);
        ++i;
        break;
      case '(':
        push(Tok::LParen, "(", at);
        ++i;
        break;
      case ')':
        push(Tok::RParen, ")", at);
        ++i;
        break;
      case '~':
        push(Tok::Tilde, "~", at);
        ++i;
        break;
      case '|':
        if (i + 1 < s.size() && s[i + 1] == '-') {
          push(Tok::Turnstile, "|-", at);
          i += 2;
        } else {
          push(Tok::OrOp, "|", at);
          ++i;
        }
        break;
      case '-':
        if (i + 1 < s.size() && s[i + 1] == '>') {
          push(Tok::RArrow, "->", at);
          i += 2;
        } else {
          throw ParseError((int)at, "lexical error: stray '-'");
        }
        break;
      case '<':
        if (i + 1 < s.size() && s[i + 1] == '-') {
          push(Tok::LArrow, "<-", at);
          i += 2;
        } else if (i + 2 < s.size() && s[i + 1] == 'u' && s[i + 2] == '>') {
          push(Tok::DiaU, "<u>", at);
          i += 3;
        } else if (i + 2 < s.size() && s[i + 1] == 'd' && s[i + 2] == '>') {
          push(Tok::DiaD, "<d>", at);
          i += 3;
        } else {
          throw ParseError((int)at, "lexical error: stray '<'");
        }
        break;
      case '[':
        if (i + 2 < s.size() && s[i + 2] == ']' && (s[i + 1] == 'd' || s[i + 1] == 'u')) {
          push(s[i + 1] == 'd' ? Tok::BoxD : Tok::BoxU, s.substr(i, 3), at);
          i += 3;
        } else {
          throw ParseError((int)at, "lexical error: expected [d] or [u]");
        }
        break;
      default:
        throw ParseError((int)at, std::string("lexical error: unexpected character '") + c + "'");
    }
  }
  out.push_back({Tok::End, "", (int)s.size()});
  return out;
}

inline int parse_atom_index(const std::string& text, int pos) {
  if (text.size() < 2) throw ParseError(pos, "atom needs a numeric index");
  long v = 0;
  for (size_t i = 1; i < text.size(); ++i) {
    if (!std::isdigit((unsigned char)text[i]))
      throw ParseError(pos, "unknown identifier '" + text + "'");
    v = v * 10 + (text[i] - '0');
    if (v > 1000000) throw ParseError(pos, "atom index too large");
  }
  return (int)v;
}

class SubParser {
 public:
  explicit SubParser(const std::string& text) : toks_(lex(text)) {}

  FormulaPtr parse() {
    FormulaPtr f = imp();
    expect_end();
    return f;
  }

  // "<formula> |- <formula>"
  std::pair<FormulaPtr, FormulaPtr> parse_sequent() {
    FormulaPtr l = imp();
    if (peek().kind != Tok::Turnstile) throw ParseError(peek().pos, "expected '|-'");
    ++i_;
    FormulaPtr r = imp();
    expect_end();
    return {l, r};
  }

 private:
  const Token& peek() const { return toks_[i_]; }
  bool accept(Tok k) {
    if (toks_[i_].kind == k) {
      ++i_;
      return true;
    }
    return false;
  }
  void expect_end() {
    if (peek().kind != Tok::End) throw ParseError(peek().pos, "unexpected trailing input");
  }

  FormulaPtr imp() {
    FormulaPtr f = disj();
    for (;;) {
      if (accept(Tok::RArrow)) return Formula::rimp(f, imp());
      if (accept(Tok::LArrow)) {
        f = Formula::limp(f, disj());
        continue;
      }
      return f;
    }
  }
  FormulaPtr disj() {
    FormulaPtr f = conj();
    while (accept(Tok::OrOp)) f = Formula::disj(f, conj());
    return f;
  }
  FormulaPtr conj() {
    FormulaPtr f = fuse();
    while (accept(Tok::AndOp)) f = Formula::conj(f, fuse());
    return f;
  }
  FormulaPtr fuse() {
    FormulaPtr f = prim();
    while (accept(Tok::Star)) f = Formula::fuse(f, prim());
    return f;
  }
  FormulaPtr prim() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Ident: {
        ++i_;
        if (t.text == "top") return Formula::top();
        if (t.text == "bot") return Formula::bot();
        if (t.text[0] == 'p') return Formula::atom(parse_atom_index(t.text, t.pos));
        throw ParseError(t.pos, "unknown identifier '" + t.text + "'");
      }
      case Tok::LParen: {
        ++i_;
        FormulaPtr f = imp();
        if (!accept(Tok::RParen)) throw ParseError(peek().pos, "unbalanced parentheses");
        return f;
      }
      case Tok::End:
        throw ParseError(t.pos, "dangling operator: formula expected");
      default:
        throw ParseError(t.pos, "formula expected before '" + t.text + "'");
    }
  }

  std::vector<Token> toks_;
  size_t i_ = 0;
};

class Ml2Parser {
 public:
  explicit Ml2Parser(const std::string& text) : toks_(lex(text)) {}

  SortedFormulaPtr parse() {
    SortedFormulaPtr f = imp();
    expect_end();
    return f;
  }

  std::pair<SortedFormulaPtr, SortedFormulaPtr> parse_sequent() {
    SortedFormulaPtr l = imp();
    if (peek().kind != Tok::Turnstile) throw ParseError(peek().pos, "expected '|-'");
    ++i_;
    SortedFormulaPtr r = imp();
    expect_end();
    return {l, r};
  }

 private:
  const Token& peek() const { return toks_[i_]; }
  bool accept(Tok k) {
    if (toks_[i_].kind == k) {
      ++i_;
      return true;
    }
    return false;
  }
  void expect_end() {
    if (peek().kind != Tok::End) throw ParseError(peek().pos, "unexpected trailing input");
  }

  // Sort errors from the factories are rethrown with the offending subterm.
  template <class F>
  SortedFormulaPtr built(int pos, F&& make) {
    try {
      return make();
    } catch (const SortError& e) {
      throw ParseError(pos, std::string("sort error: ") + e.what());
    }
  }

  SortedFormulaPtr imp() {
    SortedFormulaPtr f = disj();
    for (;;) {
      int pos = peek().pos;
      if (accept(Tok::RArrow)) {
        SortedFormulaPtr r = imp();
        return built(pos, [&] { return SortedFormula::rspoon(f, r); });
      }
      if (accept(Tok::LArrow)) {
        SortedFormulaPtr r = disj();
        f = built(pos, [&] { return SortedFormula::lspoon(f, r); });
        continue;
      }
      return f;
    }
  }
  SortedFormulaPtr disj() {
    SortedFormulaPtr f = conj();
    for (;;) {
      int pos = peek().pos;
      if (!accept(Tok::OrOp)) return f;
      SortedFormulaPtr r = conj();
      f = built(pos, [&] { return SortedFormula::disj(f, r); });
    }
  }
  SortedFormulaPtr conj() {
    SortedFormulaPtr f = fuse();
    for (;;) {
      int pos = peek().pos;
      if (!accept(Tok::AndOp)) return f;
      SortedFormulaPtr r = fuse();
      f = built(pos, [&] { return SortedFormula::conj(f, r); });
    }
  }
  SortedFormulaPtr fuse() {
    SortedFormulaPtr f = unary();
    for (;;) {
      int pos = peek().pos;
      if (!accept(Tok::Star)) return f;
      SortedFormulaPtr r = unary();
      f = built(pos, [&] { return SortedFormula::odot(f, r); });
    }
  }
  SortedFormulaPtr unary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Tilde:
        ++i_;
        return built(t.pos, [&] { return SortedFormula::neg(unary()); });
      case Tok::BoxD:
        ++i_;
        return built(t.pos, [&] { return SortedFormula::box_down(unary()); });
      case Tok::BoxU:
        ++i_;
        return built(t.pos, [&] { return SortedFormula::box_up(unary()); });
      case Tok::DiaU:
        ++i_;
        return built(t.pos, [&] { return SortedFormula::dia_up(unary()); });
      case Tok::DiaD:
        ++i_;
        return built(t.pos, [&] { return SortedFormula::dia_down(unary()); });
      default:
        return prim();
    }
  }
  SortedFormulaPtr prim() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Ident: {
        ++i_;
        if (t.text == "top@1") return SortedFormula::top(Sort::One);
        if (t.text == "top@2") return SortedFormula::top(Sort::Two);
        if (t.text == "bot@1") return SortedFormula::bot(Sort::One);
        if (t.text == "bot@2") return SortedFormula::bot(Sort::Two);
        if (t.text[0] == 'P') return SortedFormula::atom1(parse_atom_index(t.text, t.pos));
        if (t.text[0] == 'Q') return SortedFormula::atom2(parse_atom_index(t.text, t.pos));
        throw ParseError(t.pos, "unknown identifier '" + t.text + "'");
      }
      case Tok::LParen: {
        ++i_;
        SortedFormulaPtr f = imp();
        if (!accept(Tok::RParen)) throw ParseError(peek().pos, "unbalanced parentheses");
        return f;
      }
      case Tok::End:
        throw ParseError(t.pos, "dangling operator: formula expected");
      default:
        throw ParseError(t.pos, "formula expected before '" + t.text + "'");
    }
  }

  std::vector<Token> toks_;
  size_t i_ = 0;
};

}  // namespace detail

inline FormulaPtr parse_sub(const std::string& text) { return detail::SubParser(text).parse(); }

inline std::pair<FormulaPtr, FormulaPtr> parse_sub_sequent(const std::string& text) {
  return detail::SubParser(text).parse_sequent();
}

// Returns the tree; the inferred sort is available as ->sort().
inline SortedFormulaPtr parse_ml2(const std::string& text) {
  return detail::Ml2Parser(text).parse();
}

inline std::pair<SortedFormulaPtr, SortedFormulaPtr> parse_ml2_sequent(const std::string& text) {
  return detail::Ml2Parser(text).parse_sequent();
}

}  // namespace polarity
