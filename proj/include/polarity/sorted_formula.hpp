#pragma once

#include <memory>
#include <set>
#include <string>
#include <utility>

#include "common.hpp"

namespace polarity {

// The two point sorts of a polarity frame. Sort One ranges over X, sort Two over Y.
enum class Sort { One, Two };

inline Sort other_sort(Sort s) { return s == Sort::One ? Sort::Two : Sort::One; }
inline const char* sort_name(Sort s) { return s == Sort::One ? "1" : "2"; }

class SortedFormula;
using SortedFormulaPtr = std::shared_ptr<const SortedFormula>;

// AST of the sorted modal language. Every node carries its sort; the factory
// functions enforce the sort each constructor demands of its children.
//
//   box_down  [d] : sort 2 -> sort 1        box_up   [u] : sort 1 -> sort 2
//   dia_up    <u> : sort 1 -> sort 2        dia_down <d> : sort 2 -> sort 1
//
// The diamonds are first-class nodes; evaluation expands them to the two
// negations around the opposite box.
class SortedFormula {
 public:
  enum class Kind {
    Atom,
    Top,
    Bot,
    Neg,
    And,
    Or,
    BoxDown,
    BoxUp,
    DiaUp,
    DiaDown,
    Odot,
    RSpoon,
    LSpoon
  };

  static SortedFormulaPtr atom1(int index) { return leaf(Kind::Atom, Sort::One, index); }
  static SortedFormulaPtr atom2(int index) { return leaf(Kind::Atom, Sort::Two, index); }
  static SortedFormulaPtr top(Sort s) { return leaf(Kind::Top, s, -1); }
  static SortedFormulaPtr bot(Sort s) { return leaf(Kind::Bot, s, -1); }

  static SortedFormulaPtr neg(SortedFormulaPtr a) {
    Sort s = a->sort();
    return make(Kind::Neg, s, std::move(a), nullptr);
  }
  static SortedFormulaPtr conj(SortedFormulaPtr l, SortedFormulaPtr r) {
    return boolean(Kind::And, std::move(l), std::move(r));
  }
  static SortedFormulaPtr disj(SortedFormulaPtr l, SortedFormulaPtr r) {
    return boolean(Kind::Or, std::move(l), std::move(r));
  }

  static SortedFormulaPtr box_down(SortedFormulaPtr a) {
    return modal(Kind::BoxDown, Sort::Two, Sort::One, std::move(a), "[d]");
  }
  static SortedFormulaPtr box_up(SortedFormulaPtr a) {
    return modal(Kind::BoxUp, Sort::One, Sort::Two, std::move(a), "[u]");
  }
  static SortedFormulaPtr dia_up(SortedFormulaPtr a) {
    return modal(Kind::DiaUp, Sort::One, Sort::Two, std::move(a), "<u>");
  }
  static SortedFormulaPtr dia_down(SortedFormulaPtr a) {
    return modal(Kind::DiaDown, Sort::Two, Sort::One, std::move(a), "<d>");
  }

  static SortedFormulaPtr odot(SortedFormulaPtr l, SortedFormulaPtr r) {
    return fusion(Kind::Odot, std::move(l), std::move(r), "*");
  }
  // rspoon(a, b) is a -> b; lspoon(a, b) is a <- b. Both demand sort-1 operands.
  static SortedFormulaPtr rspoon(SortedFormulaPtr l, SortedFormulaPtr r) {
    return fusion(Kind::RSpoon, std::move(l), std::move(r), "->");
  }
  static SortedFormulaPtr lspoon(SortedFormulaPtr l, SortedFormulaPtr r) {
    return fusion(Kind::LSpoon, std::move(l), std::move(r), "<-");
  }

  Kind kind() const { return kind_; }
  Sort sort() const { return sort_; }
  int atom_index() const { return atom_; }
  const SortedFormulaPtr& lhs() const { return lhs_; }
  const SortedFormulaPtr& rhs() const { return rhs_; }
  bool is_leaf() const { return lhs_ == nullptr; }
  bool is_unary() const { return lhs_ != nullptr && rhs_ == nullptr; }

 private:
  SortedFormula(Kind k, Sort s, int a, SortedFormulaPtr l, SortedFormulaPtr r)
      : kind_(k), sort_(s), atom_(a), lhs_(std::move(l)), rhs_(std::move(r)) {}

  static SortedFormulaPtr make(Kind k, Sort s, SortedFormulaPtr l, SortedFormulaPtr r) {
    return SortedFormulaPtr(new SortedFormula(k, s, -1, std::move(l), std::move(r)));
  }
  static SortedFormulaPtr leaf(Kind k, Sort s, int a) {
    return SortedFormulaPtr(new SortedFormula(k, s, a, nullptr, nullptr));
  }
  static SortedFormulaPtr boolean(Kind k, SortedFormulaPtr l, SortedFormulaPtr r) {
    if (l->sort() != r->sort())
      throw SortError(std::string(k == Kind::And ? "&" : "|") +
                      " applied to operands of different sorts");
    Sort s = l->sort();
    return make(k, s, std::move(l), std::move(r));
  }
  static SortedFormulaPtr modal(Kind k, Sort child, Sort result, SortedFormulaPtr a,
                                const char* tok) {
    if (a->sort() != child)
      throw SortError(std::string(tok) + " applied to a sort-" + sort_name(a->sort()) + " term");
    return make(k, result, std::move(a), nullptr);
  }
  static SortedFormulaPtr fusion(Kind k, SortedFormulaPtr l, SortedFormulaPtr r, const char* tok) {
    if (l->sort() != Sort::One || r->sort() != Sort::One)
      throw SortError(std::string(tok) + " applied to a sort-2 term");
    return make(k, Sort::One, std::move(l), std::move(r));
  }

  Kind kind_;
  Sort sort_;
  int atom_;
  SortedFormulaPtr lhs_, rhs_;
};

inline bool same_formula(const SortedFormula& a, const SortedFormula& b) {
  if (a.kind() != b.kind() || a.sort() != b.sort()) return false;
  if (a.kind() == SortedFormula::Kind::Atom) return a.atom_index() == b.atom_index();
  if (a.is_leaf()) return true;
  if (!same_formula(*a.lhs(), *b.lhs())) return false;
  if (a.rhs() == nullptr) return b.rhs() == nullptr;
  return b.rhs() != nullptr && same_formula(*a.rhs(), *b.rhs());
}

// Atom indices used per sort.
inline void collect_atoms(const SortedFormula& f, std::set<int>& sort1, std::set<int>& sort2) {
  if (f.kind() == SortedFormula::Kind::Atom) {
    (f.sort() == Sort::One ? sort1 : sort2).insert(f.atom_index());
  }
  if (f.lhs()) collect_atoms(*f.lhs(), sort1, sort2);
  if (f.rhs()) collect_atoms(*f.rhs(), sort1, sort2);
}

}  // namespace polarity
