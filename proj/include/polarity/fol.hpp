#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "common.hpp"

namespace polarity {

// Variable sorts of the two-sorted first-order language; Unified is the
// single sort left after sort reduction.
enum class VSort { X, Y, Unified };

struct FOLVar {
  int id;
  VSort sort;
  friend bool operator==(const FOLVar& a, const FOLVar& b) {
    return a.id == b.id && a.sort == b.sort;
  }
};

// Predicate symbols: the sorted atoms, the incidence relation I, the ternary
// relation R, and the carrier predicates of the reduced language.
enum class PredSym { P, Q, I, R, T1, T2 };

inline std::string pred_name(PredSym s, int index) {
  switch (s) {
    case PredSym::P: return "p" + std::to_string(index);
    case PredSym::Q: return "q" + std::to_string(index);
    case PredSym::I: return "i";
    case PredSym::R: return "r";
    case PredSym::T1: return "t1";
    case PredSym::T2: return "t2";
  }
  return "?";
}

class FOLFormula;
using FOLPtr = std::shared_ptr<const FOLFormula>;

class FOLFormula {
 public:
  enum class Kind { Pred, Eq, Neg, And, Or, Imp, Forall, Exists };

  static FOLPtr pred(PredSym sym, int index, std::vector<FOLVar> args) {
    auto* f = new FOLFormula(Kind::Pred);
    f->sym_ = sym;
    f->index_ = index;
    f->args_ = std::move(args);
    return FOLPtr(f);
  }
  static FOLPtr eq(FOLVar a, FOLVar b) {
    auto* f = new FOLFormula(Kind::Eq);
    f->args_ = {a, b};
    return FOLPtr(f);
  }
  static FOLPtr neg(FOLPtr a) { return unary(Kind::Neg, std::move(a)); }
  static FOLPtr conj(FOLPtr a, FOLPtr b) { return binary(Kind::And, std::move(a), std::move(b)); }
  static FOLPtr disj(FOLPtr a, FOLPtr b) { return binary(Kind::Or, std::move(a), std::move(b)); }
  static FOLPtr imp(FOLPtr a, FOLPtr b) { return binary(Kind::Imp, std::move(a), std::move(b)); }
  static FOLPtr forall(FOLVar v, FOLPtr body) { return quant(Kind::Forall, v, std::move(body)); }
  static FOLPtr exists(FOLVar v, FOLPtr body) { return quant(Kind::Exists, v, std::move(body)); }

  Kind kind() const { return kind_; }
  PredSym sym() const { return sym_; }
  int index() const { return index_; }
  const std::vector<FOLVar>& args() const { return args_; }
  FOLVar qvar() const { return qvar_; }
  const FOLPtr& lhs() const { return lhs_; }
  const FOLPtr& rhs() const { return rhs_; }

 private:
  explicit FOLFormula(Kind k) : kind_(k) {}
  static FOLPtr unary(Kind k, FOLPtr a) {
    auto* f = new FOLFormula(k);
    f->lhs_ = std::move(a);
    return FOLPtr(f);
  }
  static FOLPtr binary(Kind k, FOLPtr a, FOLPtr b) {
    auto* f = new FOLFormula(k);
    f->lhs_ = std::move(a);
    f->rhs_ = std::move(b);
    return FOLPtr(f);
  }
  static FOLPtr quant(Kind k, FOLVar v, FOLPtr body) {
    auto* f = new FOLFormula(k);
    f->qvar_ = v;
    f->lhs_ = std::move(body);
    return FOLPtr(f);
  }

  Kind kind_;
  PredSym sym_ = PredSym::P;
  int index_ = -1;
  std::vector<FOLVar> args_;  // Pred arguments, or the two sides of Eq
  FOLVar qvar_{-1, VSort::X};
  FOLPtr lhs_, rhs_;
};

namespace detail {

inline void free_vars_rec(const FOLFormula& f, std::vector<int>& bound,
                          std::vector<FOLVar>& out) {
  auto is_bound = [&](int id) {
    for (int b : bound)
      if (b == id) return true;
    return false;
  };
  auto add = [&](FOLVar v) {
    if (is_bound(v.id)) return;
    for (const FOLVar& w : out)
      if (w.id == v.id) return;
    out.push_back(v);
  };
  switch (f.kind()) {
    case FOLFormula::Kind::Pred:
    case FOLFormula::Kind::Eq:
      for (const FOLVar& v : f.args()) add(v);
      return;
    case FOLFormula::Kind::Neg:
      free_vars_rec(*f.lhs(), bound, out);
      return;
    case FOLFormula::Kind::And:
    case FOLFormula::Kind::Or:
    case FOLFormula::Kind::Imp:
      free_vars_rec(*f.lhs(), bound, out);
      free_vars_rec(*f.rhs(), bound, out);
      return;
    case FOLFormula::Kind::Forall:
    case FOLFormula::Kind::Exists:
      bound.push_back(f.qvar().id);
      free_vars_rec(*f.lhs(), bound, out);
      bound.pop_back();
      return;
  }
}

inline bool alpha_rec(const FOLFormula& a, const FOLFormula& b, std::map<int, int>& la,
                      std::map<int, int>& lb, int depth) {
  if (a.kind() != b.kind()) return false;
  auto var_eq = [&](FOLVar va, FOLVar vb) {
    auto ia = la.find(va.id);
    auto ib = lb.find(vb.id);
    if ((ia == la.end()) != (ib == lb.end())) return false;
    if (ia != la.end()) return ia->second == ib->second;
    return va == vb;  // both free
  };
  switch (a.kind()) {
    case FOLFormula::Kind::Pred:
      if (a.sym() != b.sym() || a.index() != b.index()) return false;
      [[fallthrough]];
    case FOLFormula::Kind::Eq: {
      if (a.args().size() != b.args().size()) return false;
      for (size_t i = 0; i < a.args().size(); ++i)
        if (!var_eq(a.args()[i], b.args()[i])) return false;
      return true;
    }
    case FOLFormula::Kind::Neg:
      return alpha_rec(*a.lhs(), *b.lhs(), la, lb, depth);
    case FOLFormula::Kind::And:
    case FOLFormula::Kind::Or:
    case FOLFormula::Kind::Imp:
      return alpha_rec(*a.lhs(), *b.lhs(), la, lb, depth) &&
             alpha_rec(*a.rhs(), *b.rhs(), la, lb, depth);
    case FOLFormula::Kind::Forall:
    case FOLFormula::Kind::Exists: {
      if (a.qvar().sort != b.qvar().sort) return false;
      auto sa = la.find(a.qvar().id), sb = lb.find(b.qvar().id);
      bool had_a = sa != la.end(), had_b = sb != lb.end();
      int old_a = had_a ? sa->second : 0, old_b = had_b ? sb->second : 0;
      la[a.qvar().id] = depth;
      lb[b.qvar().id] = depth;
      bool ok = alpha_rec(*a.lhs(), *b.lhs(), la, lb, depth + 1);
      if (had_a) la[a.qvar().id] = old_a; else la.erase(a.qvar().id);
      if (had_b) lb[b.qvar().id] = old_b; else lb.erase(b.qvar().id);
      return ok;
    }
  }
  return false;
}

}  // namespace detail

// Free variables in first-occurrence order.
inline std::vector<FOLVar> free_vars(const FOLFormula& f) {
  std::vector<int> bound;
  std::vector<FOLVar> out;
  detail::free_vars_rec(f, bound, out);
  return out;
}

// Equality up to renaming of bound variables. Free variables and quantifier
// sorts must match exactly.
inline bool alpha_equal(const FOLFormula& a, const FOLFormula& b) {
  std::map<int, int> la, lb;
  return detail::alpha_rec(a, b, la, lb, 1);
}

inline std::string var_display(FOLVar v) {
  switch (v.sort) {
    case VSort::X: return "x" + std::to_string(v.id);
    case VSort::Y: return "y" + std::to_string(v.id);
    case VSort::Unified: return "v" + std::to_string(v.id);
  }
  return "?";
}

// Human-readable rendering, fully parenthesized at binary nodes.
inline std::string fol_text(const FOLFormula& f) {
  switch (f.kind()) {
    case FOLFormula::Kind::Pred: {
      std::string s = pred_name(f.sym(), f.index()) + "(";
      for (size_t i = 0; i < f.args().size(); ++i) {
        if (i) s += ",";
        s += var_display(f.args()[i]);
      }
      return s + ")";
    }
    case FOLFormula::Kind::Eq:
      return var_display(f.args()[0]) + " = " + var_display(f.args()[1]);
    case FOLFormula::Kind::Neg:
      if (f.lhs()->kind() == FOLFormula::Kind::Eq)
        return var_display(f.lhs()->args()[0]) + " != " + var_display(f.lhs()->args()[1]);
      return "~" + fol_text(*f.lhs());
    case FOLFormula::Kind::And:
      return "(" + fol_text(*f.lhs()) + " & " + fol_text(*f.rhs()) + ")";
    case FOLFormula::Kind::Or:
      return "(" + fol_text(*f.lhs()) + " | " + fol_text(*f.rhs()) + ")";
    case FOLFormula::Kind::Imp:
      return "(" + fol_text(*f.lhs()) + " -> " + fol_text(*f.rhs()) + ")";
    case FOLFormula::Kind::Forall:
      return "forall " + var_display(f.qvar()) + ". " + fol_text(*f.lhs());
    case FOLFormula::Kind::Exists:
      return "exists " + var_display(f.qvar()) + ". " + fol_text(*f.lhs());
  }
  return "?";
}

// Argument-sort discipline of the two-sorted language.
inline void check_well_sorted(const FOLFormula& f) {
  switch (f.kind()) {
    case FOLFormula::Kind::Pred: {
      const auto& a = f.args();
      auto want = [&](size_t n) {
        if (a.size() != n) throw SortError("predicate arity mismatch in " + fol_text(f));
      };
      auto need = [&](size_t i, VSort s) {
        if (a[i].sort != s && a[i].sort != VSort::Unified)
          throw SortError("ill-sorted argument in " + fol_text(f));
      };
      switch (f.sym()) {
        case PredSym::P: want(1); need(0, VSort::X); break;
        case PredSym::Q: want(1); need(0, VSort::Y); break;
        case PredSym::I: want(2); need(0, VSort::X); need(1, VSort::Y); break;
        case PredSym::R: want(3); need(0, VSort::X); need(1, VSort::X); need(2, VSort::X); break;
        case PredSym::T1:
        case PredSym::T2: want(1); break;
      }
      return;
    }
    case FOLFormula::Kind::Eq:
      if (f.args()[0].sort != f.args()[1].sort)
        throw SortError("equality between different sorts in " + fol_text(f));
      return;
    case FOLFormula::Kind::Neg:
      check_well_sorted(*f.lhs());
      return;
    case FOLFormula::Kind::And:
    case FOLFormula::Kind::Or:
    case FOLFormula::Kind::Imp:
      check_well_sorted(*f.lhs());
      check_well_sorted(*f.rhs());
      return;
    case FOLFormula::Kind::Forall:
    case FOLFormula::Kind::Exists:
      check_well_sorted(*f.lhs());
      return;
  }
}

inline bool is_reduced(const FOLFormula& f) {
  switch (f.kind()) {
    case FOLFormula::Kind::Pred:
    case FOLFormula::Kind::Eq: {
      for (const FOLVar& v : f.args())
        if (v.sort != VSort::Unified) return false;
      return true;
    }
    case FOLFormula::Kind::Neg:
      return is_reduced(*f.lhs());
    case FOLFormula::Kind::And:
    case FOLFormula::Kind::Or:
    case FOLFormula::Kind::Imp:
      return is_reduced(*f.lhs()) && is_reduced(*f.rhs());
    case FOLFormula::Kind::Forall:
    case FOLFormula::Kind::Exists:
      return f.qvar().sort == VSort::Unified && is_reduced(*f.lhs());
  }
  return false;
}

}  // namespace polarity
