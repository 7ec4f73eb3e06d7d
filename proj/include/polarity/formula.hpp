#pragma once

#include <memory>
#include <set>
#include <vector>

#include "common.hpp"

namespace polarity {

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

// AST of the substructural language: atoms, top, bot, meet, join, fusion and
// the two residual implications. Trees are immutable and freely shared.
class Formula {
 public:
  enum class Kind { Atom, Top, Bot, And, Or, Fuse, RImp, LImp };

  static FormulaPtr atom(int index) {
    if (index < 0) throw std::invalid_argument("atom index must be a natural number");
    return make(Kind::Atom, index, nullptr, nullptr);
  }
  static FormulaPtr top() { return make(Kind::Top, -1, nullptr, nullptr); }
  static FormulaPtr bot() { return make(Kind::Bot, -1, nullptr, nullptr); }
  static FormulaPtr conj(FormulaPtr l, FormulaPtr r) { return make(Kind::And, -1, l, r); }
  static FormulaPtr disj(FormulaPtr l, FormulaPtr r) { return make(Kind::Or, -1, l, r); }
  static FormulaPtr fuse(FormulaPtr l, FormulaPtr r) { return make(Kind::Fuse, -1, l, r); }
  // rimp(a, b) is a -> b; limp(a, b) is a <- b.
  static FormulaPtr rimp(FormulaPtr l, FormulaPtr r) { return make(Kind::RImp, -1, l, r); }
  static FormulaPtr limp(FormulaPtr l, FormulaPtr r) { return make(Kind::LImp, -1, l, r); }

  Kind kind() const { return kind_; }
  int atom_index() const { return atom_; }
  const FormulaPtr& lhs() const { return lhs_; }
  const FormulaPtr& rhs() const { return rhs_; }
  bool is_leaf() const { return lhs_ == nullptr; }

 private:
  Formula(Kind k, int a, FormulaPtr l, FormulaPtr r)
      : kind_(k), atom_(a), lhs_(std::move(l)), rhs_(std::move(r)) {}
  static FormulaPtr make(Kind k, int a, FormulaPtr l, FormulaPtr r) {
    return FormulaPtr(new Formula(k, a, std::move(l), std::move(r)));
  }

  Kind kind_;
  int atom_;
  FormulaPtr lhs_, rhs_;
};

inline bool same_formula(const Formula& a, const Formula& b) {
  if (a.kind() != b.kind()) return false;
  if (a.kind() == Formula::Kind::Atom) return a.atom_index() == b.atom_index();
  if (a.is_leaf()) return true;
  return same_formula(*a.lhs(), *b.lhs()) && same_formula(*a.rhs(), *b.rhs());
}

inline void collect_atoms(const Formula& f, std::set<int>& out) {
  if (f.kind() == Formula::Kind::Atom) out.insert(f.atom_index());
  if (!f.is_leaf()) {
    collect_atoms(*f.lhs(), out);
    collect_atoms(*f.rhs(), out);
  }
}

inline std::vector<int> atom_indices(const Formula& f) {
  std::set<int> s;
  collect_atoms(f, s);
  return std::vector<int>(s.begin(), s.end());
}

inline int formula_depth(const Formula& f) {
  if (f.is_leaf()) return 0;
  return 1 + std::max(formula_depth(*f.lhs()), formula_depth(*f.rhs()));
}

}  // namespace polarity
