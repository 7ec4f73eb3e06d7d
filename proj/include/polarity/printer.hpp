#pragma once

#include <string>

#include "formula.hpp"
#include "sorted_formula.hpp"

namespace polarity {

// Canonical printing with minimal parentheses under the precedence
//   prefix > * > & > | > (-> = <-)
// -> is right-associative, the other binaries left-associative.
namespace detail {

// Binding levels; a node is parenthesized when its level is below the context.
inline constexpr int kImp = 1, kOr = 2, kAnd = 3, kFuse = 4, kPrefix = 5, kLeaf = 6;

inline int level(Formula::Kind k) {
  switch (k) {
    case Formula::Kind::RImp:
    case Formula::Kind::LImp:
      return kImp;
    case Formula::Kind::Or:
      return kOr;
    case Formula::Kind::And:
      return kAnd;
    case Formula::Kind::Fuse:
      return kFuse;
    default:
      return kLeaf;
  }
}

inline int level(SortedFormula::Kind k) {
  switch (k) {
    case SortedFormula::Kind::RSpoon:
    case SortedFormula::Kind::LSpoon:
      return kImp;
    case SortedFormula::Kind::Or:
      return kOr;
    case SortedFormula::Kind::And:
      return kAnd;
    case SortedFormula::Kind::Odot:
      return kFuse;
    case SortedFormula::Kind::Neg:
    case SortedFormula::Kind::BoxDown:
    case SortedFormula::Kind::BoxUp:
    case SortedFormula::Kind::DiaUp:
    case SortedFormula::Kind::DiaDown:
      return kPrefix;
    default:
      return kLeaf;
  }
}

inline void print_to(const Formula& f, int min_level, std::string& out) {
  int lv = level(f.kind());
  bool parens = lv < min_level;
  if (parens) out += '(';
  switch (f.kind()) {
    case Formula::Kind::Atom:
      out += 'p';
      out += std::to_string(f.atom_index());
      break;
    case Formula::Kind::Top:
      out += "top";
      break;
    case Formula::Kind::Bot:
      out += "bot";
      break;
    case Formula::Kind::And:
      print_to(*f.lhs(), kAnd, out);
      out += " & ";
      print_to(*f.rhs(), kAnd + 1, out);
      break;
    case Formula::Kind::Or:
      print_to(*f.lhs(), kOr, out);
      out += " | ";
      print_to(*f.rhs(), kOr + 1, out);
      break;
    case Formula::Kind::Fuse:
      print_to(*f.lhs(), kFuse, out);
      out += " * ";
      print_to(*f.rhs(), kFuse + 1, out);
      break;
    case Formula::Kind::RImp:
      print_to(*f.lhs(), kImp + 1, out);
      out += " -> ";
      print_to(*f.rhs(), kImp, out);
      break;
    case Formula::Kind::LImp:
      // A right-implication on the left would re-associate under the
      // right-recursive parse of ->, so it keeps its parentheses.
      print_to(*f.lhs(), f.lhs()->kind() == Formula::Kind::RImp ? kImp + 1 : kImp, out);
      out += " <- ";
      print_to(*f.rhs(), kImp + 1, out);
      break;
  }
  if (parens) out += ')';
}

inline void print_to(const SortedFormula& f, int min_level, std::string& out) {
  int lv = level(f.kind());
  bool parens = lv < min_level;
  if (parens) out += '(';
  switch (f.kind()) {
    case SortedFormula::Kind::Atom:
      out += f.sort() == Sort::One ? 'P' : 'Q';
      out += std::to_string(f.atom_index());
      break;
    case SortedFormula::Kind::Top:
      out += f.sort() == Sort::One ? "top@1" : "top@2";
      break;
    case SortedFormula::Kind::Bot:
      out += f.sort() == Sort::One ? "bot@1" : "bot@2";
      break;
    case SortedFormula::Kind::Neg:
      out += '~';
      print_to(*f.lhs(), kPrefix, out);
      break;
    case SortedFormula::Kind::BoxDown:
      out += "[d]";
      print_to(*f.lhs(), kPrefix, out);
      break;
    case SortedFormula::Kind::BoxUp:
      out += "[u]";
      print_to(*f.lhs(), kPrefix, out);
      break;
    case SortedFormula::Kind::DiaUp:
      out += "<u>";
      print_to(*f.lhs(), kPrefix, out);
      break;
    case SortedFormula::Kind::DiaDown:
      out += "<d>";
      print_to(*f.lhs(), kPrefix, out);
      break;
    case SortedFormula::Kind::And:
      print_to(*f.lhs(), kAnd, out);
      out += " & ";
      print_to(*f.rhs(), kAnd + 1, out);
      break;
    case SortedFormula::Kind::Or:
      print_to(*f.lhs(), kOr, out);
      out += " | ";
      print_to(*f.rhs(), kOr + 1, out);
      break;
    case SortedFormula::Kind::Odot:
      print_to(*f.lhs(), kFuse, out);
      out += " * ";
      print_to(*f.rhs(), kFuse + 1, out);
      break;
    case SortedFormula::Kind::RSpoon:
      print_to(*f.lhs(), kImp + 1, out);
      out += " -> ";
      print_to(*f.rhs(), kImp, out);
      break;
    case SortedFormula::Kind::LSpoon:
      print_to(*f.lhs(),
               f.lhs()->kind() == SortedFormula::Kind::RSpoon ? kImp + 1 : kImp, out);
      out += " <- ";
      print_to(*f.rhs(), kImp + 1, out);
      break;
  }
  if (parens) out += ')';
}

}  // namespace detail

inline std::string print_formula(const Formula& f) {
  std::string out;
  detail::print_to(f, 0, out);
  return out;
}

inline std::string print_formula(const SortedFormula& f) {
  std::string out;
  detail::print_to(f, 0, out);
  return out;
}

inline std::string print_formula(const FormulaPtr& f) { return print_formula(*f); }
inline std::string print_formula(const SortedFormulaPtr& f) { return print_formula(*f); }

}  // namespace polarity
