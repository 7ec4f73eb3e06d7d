#pragma once

#include <map>
#include <string>

#include "algebra.hpp"
#include "formula.hpp"
#include "frame.hpp"
#include "printer.hpp"
#include "sorted_formula.hpp"

namespace polarity {

// A denotation: the extent and its polar. The intent is always a co-stable
// set; the extent is a closure fixpoint exactly when the pair is a formal
// concept.
struct ConceptDenotation {
  Mask extent;
  Mask intent;
};

// Substructural model: a valuation into stable subsets of X. Non-stable
// entries are rejected at construction; `closing` wraps arbitrary subsets
// with the closure first.
class SubModel {
 public:
  SubModel(const TwoSortedFrame& f, std::map<int, Mask> vals)
      : frame_(&f), ops_(f), vals_(std::move(vals)) {
    for (const auto& [atom, m] : vals_)
      if (!f.stable_x(m))
        throw EvalError("valuation of p" + std::to_string(atom) + " = " + f.x_set_text(m) +
                        " is not Galois stable");
  }

  static SubModel closing(const TwoSortedFrame& f, const std::map<int, Mask>& vals) {
    std::map<int, Mask> closed;
    for (const auto& [atom, m] : vals) closed[atom] = f.closure_x(m);
    return SubModel(f, std::move(closed));
  }

  const TwoSortedFrame& frame() const { return *frame_; }
  const SetOps& ops() const { return ops_; }
  const std::map<int, Mask>& vals() const { return vals_; }

  Mask val(int atom) const {
    auto it = vals_.find(atom);
    if (it == vals_.end()) throw EvalError("unbound atom p" + std::to_string(atom));
    return it->second;
  }

 private:
  const TwoSortedFrame* frame_;
  SetOps ops_;
  std::map<int, Mask> vals_;
};

// Sorted modal model: arbitrary subsets per sort, no stability requirement.
class ML2Model {
 public:
  ML2Model(const TwoSortedFrame& f, std::map<int, Mask> iota1, std::map<int, Mask> iota2)
      : frame_(&f), iota1_(std::move(iota1)), iota2_(std::move(iota2)) {
    for (const auto& [atom, m] : iota1_)
      if (!subset_of(m, f.x_all())) throw EvalError("interpretation of P" + std::to_string(atom) + " out of range");
    for (const auto& [atom, m] : iota2_)
      if (!subset_of(m, f.y_all())) throw EvalError("interpretation of Q" + std::to_string(atom) + " out of range");
  }

  const TwoSortedFrame& frame() const { return *frame_; }
  const std::map<int, Mask>& iota1() const { return iota1_; }
  const std::map<int, Mask>& iota2() const { return iota2_; }

  Mask iota(Sort s, int atom) const {
    const auto& m = s == Sort::One ? iota1_ : iota2_;
    auto it = m.find(atom);
    if (it == m.end())
      throw EvalError(std::string("unbound atom ") + (s == Sort::One ? "P" : "Q") +
                      std::to_string(atom));
    return it->second;
  }

 private:
  const TwoSortedFrame* frame_;
  std::map<int, Mask> iota1_, iota2_;
};

namespace detail {

inline Mask eval_sub_extent(const SubModel& m, const Formula& f) {
  const TwoSortedFrame& fr = m.frame();
  const SetOps& ops = m.ops();
  switch (f.kind()) {
    case Formula::Kind::Atom:
      return m.val(f.atom_index());
    case Formula::Kind::Top:
      return fr.x_all();
    case Formula::Kind::Bot:
      return fr.polar_left(fr.y_all());
    case Formula::Kind::And:
      return eval_sub_extent(m, *f.lhs()) & eval_sub_extent(m, *f.rhs());
    case Formula::Kind::Or:
      return ops.join_x(eval_sub_extent(m, *f.lhs()), eval_sub_extent(m, *f.rhs()));
    case Formula::Kind::Fuse:
      return fr.closure_x(ops.odot(eval_sub_extent(m, *f.lhs()), eval_sub_extent(m, *f.rhs())));
    case Formula::Kind::RImp:
      return ops.rres(eval_sub_extent(m, *f.lhs()), eval_sub_extent(m, *f.rhs()));
    case Formula::Kind::LImp:
      return ops.lres(eval_sub_extent(m, *f.lhs()), eval_sub_extent(m, *f.rhs()));
  }
  return 0;
}

}  // namespace detail

// Extent-recursive evaluator: fusion and join are closed, the implications
// take the raw residuals, the intent is the polar of the extent. On frames
// whose residuals carry stable sets to stable sets this lands on formal
// concepts and agrees with the clause-by-clause reference evaluator below;
// on twisted relations an implication extent may fall outside the stable
// lattice, and then only the intent side is a closed set.
inline ConceptDenotation eval_sub(const SubModel& m, const Formula& f) {
  Mask e = detail::eval_sub_extent(m, f);
  Mask i = m.frame().polar_right(e);
  return {e, i};
}

// Reference evaluator: the literal point-wise satisfaction and
// co-satisfaction clauses, one clause per connective, the other component
// recovered through the polars.
inline ConceptDenotation eval_sub_reference(const SubModel& m, const Formula& f) {
  const TwoSortedFrame& fr = m.frame();
  int nx = fr.x_size(), ny = fr.y_size();
  switch (f.kind()) {
    case Formula::Kind::Atom: {
      Mask e = m.val(f.atom_index());
      return {e, fr.polar_right(e)};
    }
    case Formula::Kind::Top: {
      Mask e = fr.x_all();
      return {e, fr.polar_right(e)};
    }
    case Formula::Kind::Bot: {
      Mask i = fr.y_all();
      return {fr.polar_left(i), i};
    }
    case Formula::Kind::And: {
      ConceptDenotation l = eval_sub_reference(m, *f.lhs());
      ConceptDenotation r = eval_sub_reference(m, *f.rhs());
      Mask e = l.extent & r.extent;
      return {e, fr.polar_right(e)};
    }
    case Formula::Kind::Or: {
      ConceptDenotation l = eval_sub_reference(m, *f.lhs());
      ConceptDenotation r = eval_sub_reference(m, *f.rhs());
      Mask i = l.intent & r.intent;
      return {fr.polar_left(i), i};
    }
    case Formula::Kind::Fuse: {
      // y co-satisfies phi o psi iff z |- phi and x |- psi force y in Rdual(z, x).
      ConceptDenotation l = eval_sub_reference(m, *f.lhs());
      ConceptDenotation r = eval_sub_reference(m, *f.rhs());
      Mask i = 0;
      for (int y = 0; y < ny; ++y) {
        bool ok = true;
        for (int z = 0; z < nx && ok; ++z)
          for (int x = 0; x < nx && ok; ++x)
            if (mask_has(l.extent, z) && mask_has(r.extent, x) && !mask_has(fr.r_dual(z, x), y))
              ok = false;
        if (ok) i |= unit_mask(y);
      }
      return {fr.polar_left(i), i};
    }
    case Formula::Kind::RImp: {
      ConceptDenotation l = eval_sub_reference(m, *f.lhs());
      ConceptDenotation r = eval_sub_reference(m, *f.rhs());
      Mask e = 0;
      for (int x = 0; x < nx; ++x) {
        bool ok = true;
        for (int z = 0; z < nx && ok; ++z)
          for (int y = 0; y < ny && ok; ++y)
            if (mask_has(l.extent, z) && mask_has(r.intent, y) && !mask_has(fr.r_dual(z, x), y))
              ok = false;
        if (ok) e |= unit_mask(x);
      }
      return {e, fr.polar_right(e)};
    }
    case Formula::Kind::LImp: {
      // x |- psi <- phi iff y co-sat psi and z |- phi force y in Rdual(x, z).
      ConceptDenotation l = eval_sub_reference(m, *f.lhs());
      ConceptDenotation r = eval_sub_reference(m, *f.rhs());
      Mask e = 0;
      for (int x = 0; x < nx; ++x) {
        bool ok = true;
        for (int y = 0; y < ny && ok; ++y)
          for (int z = 0; z < nx && ok; ++z)
            if (mask_has(l.intent, y) && mask_has(r.extent, z) && !mask_has(fr.r_dual(x, z), y))
              ok = false;
        if (ok) e |= unit_mask(x);
      }
      return {e, fr.polar_right(e)};
    }
  }
  return {0, 0};
}

// Sorted modal evaluation; the derived diamonds are expanded to the two
// differently-sorted negations around the opposite box.
inline Mask eval_ml2(const ML2Model& m, const SortedFormula& a) {
  const TwoSortedFrame& fr = m.frame();
  Mask carrier = a.sort() == Sort::One ? fr.x_all() : fr.y_all();
  switch (a.kind()) {
    case SortedFormula::Kind::Atom:
      return m.iota(a.sort(), a.atom_index());
    case SortedFormula::Kind::Top:
      return carrier;
    case SortedFormula::Kind::Bot:
      return 0;
    case SortedFormula::Kind::Neg:
      return carrier & ~eval_ml2(m, *a.lhs());
    case SortedFormula::Kind::And:
      return eval_ml2(m, *a.lhs()) & eval_ml2(m, *a.rhs());
    case SortedFormula::Kind::Or:
      return eval_ml2(m, *a.lhs()) | eval_ml2(m, *a.rhs());
    case SortedFormula::Kind::BoxDown:
      return fr.box_down(eval_ml2(m, *a.lhs()));
    case SortedFormula::Kind::BoxUp:
      return fr.box_up(eval_ml2(m, *a.lhs()));
    case SortedFormula::Kind::DiaUp:
      return fr.y_all() & ~fr.box_up(fr.x_all() & ~eval_ml2(m, *a.lhs()));
    case SortedFormula::Kind::DiaDown:
      return fr.x_all() & ~fr.box_down(fr.y_all() & ~eval_ml2(m, *a.lhs()));
    case SortedFormula::Kind::Odot:
      return SetOps(fr).odot(eval_ml2(m, *a.lhs()), eval_ml2(m, *a.rhs()));
    case SortedFormula::Kind::RSpoon:
      return SetOps(fr).rres(eval_ml2(m, *a.lhs()), eval_ml2(m, *a.rhs()));
    case SortedFormula::Kind::LSpoon:
      return SetOps(fr).lres(eval_ml2(m, *a.lhs()), eval_ml2(m, *a.rhs()));
  }
  return 0;
}

struct Entailment {
  bool holds;
  int witness;  // least failing point in declaration order; -1 when it holds
};

inline Entailment entails_sub(const SubModel& m, const Formula& lhs, const Formula& rhs) {
  Mask l = eval_sub(m, lhs).extent;
  Mask r = eval_sub(m, rhs).extent;
  if (subset_of(l, r)) return {true, -1};
  return {false, first_point(l & ~r)};
}

inline Entailment entails_ml2(const ML2Model& m, const SortedFormula& lhs,
                              const SortedFormula& rhs) {
  if (lhs.sort() != rhs.sort())
    throw SortError("entailment between formulas of different sorts: " + print_formula(lhs) +
                    " vs " + print_formula(rhs));
  Mask l = eval_ml2(m, lhs);
  Mask r = eval_ml2(m, rhs);
  if (subset_of(l, r)) return {true, -1};
  return {false, first_point(l & ~r)};
}

}  // namespace polarity
