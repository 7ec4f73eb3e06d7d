#pragma once

#include <string>
#include <vector>

#include "semantics.hpp"

namespace polarity {

// Extent translation into the sorted modal language.
inline SortedFormulaPtr bullet(const Formula& f);
// Intent co-translation.
inline SortedFormulaPtr circ(const Formula& f);

inline SortedFormulaPtr bullet(const Formula& f) {
  using S = SortedFormula;
  switch (f.kind()) {
    case Formula::Kind::Atom:
      return S::box_down(S::dia_up(S::atom1(f.atom_index())));
    case Formula::Kind::Top:
      return S::top(Sort::One);
    case Formula::Kind::Bot:
      return S::bot(Sort::One);
    case Formula::Kind::And:
      return S::conj(bullet(*f.lhs()), bullet(*f.rhs()));
    case Formula::Kind::Or:
      return S::box_down(S::disj(S::dia_up(bullet(*f.lhs())), S::dia_up(bullet(*f.rhs()))));
    case Formula::Kind::Fuse:
      return S::box_down(S::dia_up(S::odot(bullet(*f.lhs()), bullet(*f.rhs()))));
    case Formula::Kind::RImp:
      return S::rspoon(bullet(*f.lhs()), bullet(*f.rhs()));
    case Formula::Kind::LImp:
      return S::lspoon(bullet(*f.lhs()), bullet(*f.rhs()));
  }
  return nullptr;
}

inline SortedFormulaPtr circ(const Formula& f) {
  using S = SortedFormula;
  switch (f.kind()) {
    case Formula::Kind::Atom:
      return S::box_up(S::neg(S::atom1(f.atom_index())));
    case Formula::Kind::Top:
      return S::bot(Sort::Two);
    case Formula::Kind::Bot:
      return S::top(Sort::Two);
    case Formula::Kind::And:
      return S::box_up(S::disj(S::dia_down(circ(*f.lhs())), S::dia_down(circ(*f.rhs()))));
    case Formula::Kind::Or:
      return S::conj(circ(*f.lhs()), circ(*f.rhs()));
    case Formula::Kind::Fuse:
      return S::box_up(S::neg(S::odot(bullet(*f.lhs()), bullet(*f.rhs()))));
    case Formula::Kind::RImp:
    case Formula::Kind::LImp:
      return S::box_up(S::neg(bullet(f)));
  }
  return nullptr;
}

// The substructural model a sorted model induces: same frame, each atom
// interpreted by the closure of its sort-1 interpretation.
inline SubModel induce_sub_model(const ML2Model& m) {
  std::map<int, Mask> vals;
  for (const auto& [atom, mask] : m.iota1())
    vals[atom] = m.frame().box_down(m.frame().dia_up(mask));
  return SubModel(m.frame(), std::move(vals));
}

struct IdentityCheck {
  std::string name;
  bool pass;
  Mask lhs, rhs;
  int witness;  // least point where the sides differ; -1 when equal
};

// The four extent identities and three intent identities relating a formula's
// concept denotation to its two modal images.
struct FaithfulnessReport {
  std::vector<IdentityCheck> checks;
  bool all_pass = true;
};

inline FaithfulnessReport verify_faithfulness(const ML2Model& m, const Formula& f) {
  SubModel induced = induce_sub_model(m);
  ConceptDenotation den = eval_sub(induced, f);

  SortedFormulaPtr fb = bullet(f);
  SortedFormulaPtr fc = circ(f);
  using S = SortedFormula;
  Mask e_bullet = eval_ml2(m, *fb);
  Mask e_boxneg = eval_ml2(m, *S::box_down(S::neg(fc)));
  Mask e_closure = eval_ml2(m, *S::box_down(S::dia_up(fb)));
  Mask i_circ = eval_ml2(m, *fc);
  Mask i_boxneg = eval_ml2(m, *S::box_up(S::neg(fb)));
  Mask i_closure = eval_ml2(m, *S::box_up(S::dia_down(fc)));

  FaithfulnessReport rep;
  auto add = [&rep](const std::string& name, Mask l, Mask r) {
    IdentityCheck c{name, l == r, l, r, l == r ? -1 : first_point(l ^ r)};
    rep.all_pass = rep.all_pass && c.pass;
    rep.checks.push_back(std::move(c));
  };
  add("extent sub = bullet", den.extent, e_bullet);
  add("extent sub = boxdown neg circ", den.extent, e_boxneg);
  add("extent sub = closure bullet", den.extent, e_closure);
  add("extent bullet = closure bullet", e_bullet, e_closure);
  add("intent sub = circ", den.intent, i_circ);
  add("intent sub = boxup neg bullet", den.intent, i_boxneg);
  add("intent sub = coclosure circ", den.intent, i_closure);
  return rep;
}

// One sequent judged three ways: in the induced substructural model, through
// the extent translation, and (contravariantly) through the co-translation.
struct SequentTransfer {
  Entailment sub;
  Entailment bullet_route;
  Entailment circ_route;
  bool agree() const {
    return sub.holds == bullet_route.holds && sub.holds == circ_route.holds;
  }
};

inline SequentTransfer sequent_transfer(const ML2Model& m, const Formula& lhs,
                                        const Formula& rhs) {
  SubModel induced = induce_sub_model(m);
  SequentTransfer st{entails_sub(induced, lhs, rhs),
                     entails_ml2(m, *bullet(lhs), *bullet(rhs)),
                     entails_ml2(m, *circ(rhs), *circ(lhs))};
  return st;
}

}  // namespace polarity
