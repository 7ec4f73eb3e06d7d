#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "fol.hpp"
#include "formula.hpp"
#include "semantics.hpp"
#include "sorted_formula.hpp"
#include "translate.hpp"

namespace polarity {

// Fresh-variable source; one counter per translation call.
struct VarGen {
  int next = 0;
  FOLVar fresh(VSort s) { return {next++, s}; }
};

inline VSort vsort_of(Sort s) { return s == Sort::One ? VSort::X : VSort::Y; }

// Standard translation of the sorted modal language at the designated
// variable v. The falsum of either sort translates through the incidence
// relation (everything I-related is self-distinct), which keeps the
// composed translations of the substructural constants in their tabled form.
inline FOLPtr st_ml2(const SortedFormula& a, FOLVar v, VarGen& gen) {
  using F = FOLFormula;
  if ((a.sort() == Sort::One) != (v.sort == VSort::X))
    throw SortError("standard translation at a variable of the wrong sort");
  switch (a.kind()) {
    case SortedFormula::Kind::Atom:
      return F::pred(a.sort() == Sort::One ? PredSym::P : PredSym::Q, a.atom_index(), {v});
    case SortedFormula::Kind::Top:
      return F::eq(v, v);
    case SortedFormula::Kind::Bot: {
      if (a.sort() == Sort::One) {
        FOLVar y = gen.fresh(VSort::Y);
        return F::forall(y, F::imp(F::pred(PredSym::I, -1, {v, y}), F::neg(F::eq(y, y))));
      }
      FOLVar x = gen.fresh(VSort::X);
      return F::forall(x, F::imp(F::pred(PredSym::I, -1, {x, v}), F::neg(F::eq(x, x))));
    }
    case SortedFormula::Kind::Neg:
      return F::neg(st_ml2(*a.lhs(), v, gen));
    case SortedFormula::Kind::And:
      return F::conj(st_ml2(*a.lhs(), v, gen), st_ml2(*a.rhs(), v, gen));
    case SortedFormula::Kind::Or:
      return F::disj(st_ml2(*a.lhs(), v, gen), st_ml2(*a.rhs(), v, gen));
    case SortedFormula::Kind::BoxDown: {
      FOLVar y = gen.fresh(VSort::Y);
      return F::forall(y, F::imp(F::pred(PredSym::I, -1, {v, y}), st_ml2(*a.lhs(), y, gen)));
    }
    case SortedFormula::Kind::BoxUp: {
      FOLVar x = gen.fresh(VSort::X);
      return F::forall(x, F::imp(F::pred(PredSym::I, -1, {x, v}), st_ml2(*a.lhs(), x, gen)));
    }
    case SortedFormula::Kind::DiaUp: {
      FOLVar x = gen.fresh(VSort::X);
      return F::exists(x, F::conj(F::pred(PredSym::I, -1, {x, v}), st_ml2(*a.lhs(), x, gen)));
    }
    case SortedFormula::Kind::DiaDown: {
      FOLVar y = gen.fresh(VSort::Y);
      return F::exists(y, F::conj(F::pred(PredSym::I, -1, {v, y}), st_ml2(*a.lhs(), y, gen)));
    }
    case SortedFormula::Kind::Odot: {
      FOLVar z = gen.fresh(VSort::X), zp = gen.fresh(VSort::X);
      return F::exists(
          z, F::exists(zp, F::conj(F::pred(PredSym::R, -1, {v, z, zp}),
                                   F::conj(st_ml2(*a.lhs(), z, gen), st_ml2(*a.rhs(), zp, gen)))));
    }
    case SortedFormula::Kind::RSpoon: {
      FOLVar z = gen.fresh(VSort::X), zp = gen.fresh(VSort::X);
      return F::forall(
          z, F::forall(zp, F::imp(F::conj(st_ml2(*a.lhs(), z, gen),
                                          F::pred(PredSym::R, -1, {zp, z, v})),
                                  st_ml2(*a.rhs(), zp, gen))));
    }
    case SortedFormula::Kind::LSpoon: {
      FOLVar z = gen.fresh(VSort::X), zp = gen.fresh(VSort::X);
      return F::forall(
          z, F::forall(zp, F::imp(F::conj(st_ml2(*a.rhs(), z, gen),
                                          F::pred(PredSym::R, -1, {zp, v, z})),
                                  st_ml2(*a.lhs(), zp, gen))));
    }
  }
  return nullptr;
}

// First-order translations of the substructural language, by composition
// with the modal translation and co-translation.
inline FOLPtr st_sub_bullet(const Formula& f, FOLVar x, VarGen& gen) {
  return st_ml2(*bullet(f), x, gen);
}
inline FOLPtr st_sub_circ(const Formula& f, FOLVar y, VarGen& gen) {
  return st_ml2(*circ(f), y, gen);
}

namespace detail {

inline FOLVar unified(FOLVar v) { return {v.id, VSort::Unified}; }

inline FOLPtr sort_reduce_rec(const FOLFormula& f, std::set<int>& bound) {
  using F = FOLFormula;
  switch (f.kind()) {
    case F::Kind::Pred: {
      std::vector<FOLVar> args;
      for (FOLVar v : f.args()) args.push_back(unified(v));
      FOLPtr atom = F::pred(f.sym(), f.index(), args);
      // A sorted atom whose variable stays free carries its own carrier guard.
      if ((f.sym() == PredSym::P || f.sym() == PredSym::Q) && !bound.count(f.args()[0].id)) {
        PredSym guard = f.sym() == PredSym::P ? PredSym::T1 : PredSym::T2;
        return F::conj(F::pred(guard, -1, {args[0]}), atom);
      }
      return atom;
    }
    case F::Kind::Eq:
      return F::eq(unified(f.args()[0]), unified(f.args()[1]));
    case F::Kind::Neg:
      return F::neg(sort_reduce_rec(*f.lhs(), bound));
    case F::Kind::And:
      return F::conj(sort_reduce_rec(*f.lhs(), bound), sort_reduce_rec(*f.rhs(), bound));
    case F::Kind::Or:
      return F::disj(sort_reduce_rec(*f.lhs(), bound), sort_reduce_rec(*f.rhs(), bound));
    case F::Kind::Imp:
      return F::imp(sort_reduce_rec(*f.lhs(), bound), sort_reduce_rec(*f.rhs(), bound));
    case F::Kind::Forall:
    case F::Kind::Exists: {
      FOLVar v = f.qvar();
      PredSym guard = v.sort == VSort::Y ? PredSym::T2 : PredSym::T1;
      bool fresh = bound.insert(v.id).second;
      FOLPtr body = sort_reduce_rec(*f.lhs(), bound);
      if (fresh) bound.erase(v.id);
      FOLPtr g = F::pred(guard, -1, {unified(v)});
      if (f.kind() == F::Kind::Forall) return F::forall(unified(v), F::imp(g, body));
      return F::exists(unified(v), F::conj(g, body));
    }
  }
  return nullptr;
}

}  // namespace detail

// Sort reduction: quantifiers get carrier guards, sorted atoms on free
// variables are relativized, everything lands in the one-sorted language.
inline FOLPtr sort_reduce(const FOLFormula& f) {
  std::set<int> bound;
  return detail::sort_reduce_rec(f, bound);
}

// A sorted model viewed as a first-order structure; `reduced` selects the
// one-sorted view whose carrier is X followed by Y.
class FOStructure {
 public:
  FOStructure(const TwoSortedFrame& f, std::map<int, Mask> iota1, std::map<int, Mask> iota2,
              bool reduced)
      : frame_(&f), iota1_(std::move(iota1)), iota2_(std::move(iota2)), reduced_(reduced) {}

  static FOStructure from_model(const ML2Model& m, bool reduced) {
    return FOStructure(m.frame(), m.iota1(), m.iota2(), reduced);
  }

  const TwoSortedFrame& frame() const { return *frame_; }
  bool reduced() const { return reduced_; }
  int nx() const { return frame_->x_size(); }
  int ny() const { return frame_->y_size(); }
  int union_x(int xi) const { return xi; }
  int union_y(int yi) const { return nx() + yi; }

  int domain_size(VSort s) const {
    switch (s) {
      case VSort::X:
        if (reduced_) throw EvalError("sorted quantifier evaluated on the reduced structure");
        return nx();
      case VSort::Y:
        if (reduced_) throw EvalError("sorted quantifier evaluated on the reduced structure");
        return ny();
      case VSort::Unified:
        if (!reduced_) throw EvalError("reduced quantifier evaluated on the two-sorted structure");
        return nx() + ny();
    }
    return 0;
  }

  // Tarskian evaluation; assignments name the free variables. Subformula
  // values are memoized per call on the values of their free variables.
  bool eval(const FOLFormula& f, const std::vector<std::pair<FOLVar, int>>& assignment) const {
    Evaluator ev(*this, f);
    return ev.run(assignment);
  }

 private:
  bool pred_holds(PredSym sym, int index, const std::vector<int>& vals) const {
    const TwoSortedFrame& fr = *frame_;
    if (!reduced_) {
      switch (sym) {
        case PredSym::P: return mask_has(atom_mask(iota1_, 'P', index), vals[0]);
        case PredSym::Q: return mask_has(atom_mask(iota2_, 'Q', index), vals[0]);
        case PredSym::I: return fr.i_rel(vals[0], vals[1]);
        case PredSym::R: return fr.r_has(vals[0], vals[1], vals[2]);
        case PredSym::T1:
        case PredSym::T2:
          throw EvalError("carrier predicate in a two-sorted formula");
      }
      return false;
    }
    int n = nx();
    switch (sym) {
      case PredSym::P:
        return vals[0] < n && mask_has(atom_mask(iota1_, 'P', index), vals[0]);
      case PredSym::Q:
        return vals[0] >= n && mask_has(atom_mask(iota2_, 'Q', index), vals[0] - n);
      case PredSym::I:
        return vals[0] < n && vals[1] >= n && fr.i_rel(vals[0], vals[1] - n);
      case PredSym::R:
        return vals[0] < n && vals[1] < n && vals[2] < n &&
               fr.r_has(vals[0], vals[1], vals[2]);
      case PredSym::T1:
        return vals[0] < n;
      case PredSym::T2:
        return vals[0] >= n;
    }
    return false;
  }

  static Mask atom_mask(const std::map<int, Mask>& m, char which, int index) {
    auto it = m.find(index);
    if (it == m.end())
      throw EvalError(std::string("unbound predicate ") + which + std::to_string(index));
    return it->second;
  }

  class Evaluator {
   public:
    Evaluator(const FOStructure& s, const FOLFormula& f) : s_(s), root_(&f) {
      index(f);
    }

    bool run(const std::vector<std::pair<FOLVar, int>>& assignment) {
      env_.assign(max_id_ + 1, -1);
      for (const auto& [v, val] : assignment) {
        if (v.id >= 0 && v.id <= max_id_) env_[v.id] = val;
      }
      return ev(*root_);
    }

   private:
    void index(const FOLFormula& f) {
      if (free_.count(&f)) return;
      std::vector<FOLVar> fv = free_vars(f);
      std::vector<int> ids;
      for (const FOLVar& v : fv) {
        ids.push_back(v.id);
        max_id_ = std::max(max_id_, v.id);
      }
      std::sort(ids.begin(), ids.end());
      free_[&f] = std::move(ids);
      if (f.kind() == FOLFormula::Kind::Forall || f.kind() == FOLFormula::Kind::Exists)
        max_id_ = std::max(max_id_, f.qvar().id);
      if (f.lhs()) index(*f.lhs());
      if (f.rhs()) index(*f.rhs());
    }

    std::uint64_t key(const FOLFormula& f) const {
      std::uint64_t k = 1;
      for (int id : free_.at(&f)) k = k * 64 + (std::uint64_t)(env_[id] + 1);
      return k;
    }

    bool ev(const FOLFormula& f) {
      using K = FOLFormula::Kind;
      bool memoizable = f.kind() == K::Forall || f.kind() == K::Exists;
      std::uint64_t k = 0;
      if (memoizable) {
        k = key(f);
        auto& slot = memo_[&f];
        auto it = slot.find(k);
        if (it != slot.end()) return it->second;
      }
      bool result = false;
      switch (f.kind()) {
        case K::Pred: {
          std::vector<int> vals;
          for (const FOLVar& v : f.args()) vals.push_back(value(v));
          result = s_.pred_holds(f.sym(), f.index(), vals);
          break;
        }
        case K::Eq:
          result = value(f.args()[0]) == value(f.args()[1]);
          break;
        case K::Neg:
          result = !ev(*f.lhs());
          break;
        case K::And:
          result = ev(*f.lhs()) && ev(*f.rhs());
          break;
        case K::Or:
          result = ev(*f.lhs()) || ev(*f.rhs());
          break;
        case K::Imp:
          result = !ev(*f.lhs()) || ev(*f.rhs());
          break;
        case K::Forall:
        case K::Exists: {
          int n = s_.domain_size(f.qvar().sort);
          int saved = env_[f.qvar().id];
          bool all = true, some = false;
          for (int d = 0; d < n; ++d) {
            env_[f.qvar().id] = d;
            bool b = ev(*f.lhs());
            all = all && b;
            some = some || b;
            if (f.kind() == K::Forall ? !all : some) break;
          }
          env_[f.qvar().id] = saved;
          result = f.kind() == K::Forall ? all : some;
          break;
        }
      }
      if (memoizable) memo_[&f][k] = result;
      return result;
    }

    int value(const FOLVar& v) {
      int val = v.id >= 0 && v.id <= max_id_ ? env_[v.id] : -1;
      if (val < 0) throw EvalError("unbound free variable " + var_display(v));
      return val;
    }

    const FOStructure& s_;
    const FOLFormula* root_;
    std::map<const FOLFormula*, std::vector<int>> free_;
    std::map<const FOLFormula*, std::unordered_map<std::uint64_t, bool>> memo_;
    std::vector<int> env_;
    int max_id_ = 0;
  };

  const TwoSortedFrame* frame_;
  std::map<int, Mask> iota1_, iota2_;
  bool reduced_;
};

// ---------------------------------------------------------------------------
// TPTP emission and a reader for the emitted fragment.

namespace detail {

inline std::string tptp_var(FOLVar v) {
  switch (v.sort) {
    case VSort::X: return "X" + std::to_string(v.id);
    case VSort::Y: return "Y" + std::to_string(v.id);
    case VSort::Unified: return "V" + std::to_string(v.id);
  }
  return "?";
}

inline std::string tptp_formula(const FOLFormula& f, bool typed) {
  using K = FOLFormula::Kind;
  switch (f.kind()) {
    case K::Pred: {
      std::string s = pred_name(f.sym(), f.index()) + "(";
      for (size_t i = 0; i < f.args().size(); ++i) {
        if (i) s += ",";
        s += tptp_var(f.args()[i]);
      }
      return s + ")";
    }
    case K::Eq:
      return tptp_var(f.args()[0]) + " = " + tptp_var(f.args()[1]);
    case K::Neg:
      if (f.lhs()->kind() == K::Eq)
        return tptp_var(f.lhs()->args()[0]) + " != " + tptp_var(f.lhs()->args()[1]);
      if (f.lhs()->kind() == K::Pred) return "~" + tptp_formula(*f.lhs(), typed);
      return "~(" + tptp_formula(*f.lhs(), typed) + ")";
    case K::And:
      return "(" + tptp_formula(*f.lhs(), typed) + " & " + tptp_formula(*f.rhs(), typed) + ")";
    case K::Or:
      return "(" + tptp_formula(*f.lhs(), typed) + " | " + tptp_formula(*f.rhs(), typed) + ")";
    case K::Imp:
      return "(" + tptp_formula(*f.lhs(), typed) + " => " + tptp_formula(*f.rhs(), typed) + ")";
    case K::Forall:
    case K::Exists: {
      std::string q = f.kind() == K::Forall ? "!" : "?";
      std::string v = tptp_var(f.qvar());
      if (typed) v += f.qvar().sort == VSort::Y ? ": sy" : ": sx";
      return q + " [" + v + "] : (" + tptp_formula(*f.lhs(), typed) + ")";
    }
  }
  return "?";
}

inline void collect_preds(const FOLFormula& f, std::set<std::pair<int, int>>& out) {
  if (f.kind() == FOLFormula::Kind::Pred) out.insert({(int)f.sym(), f.index()});
  if (f.lhs()) collect_preds(*f.lhs(), out);
  if (f.rhs()) collect_preds(*f.rhs(), out);
}

}  // namespace detail

// One annotated formula. Typed output uses the TFF dialect with the two
// carrier types; untyped output is FOF and expects a sort-reduced formula.
inline std::string emit_tptp(const FOLFormula& f, const std::string& name,
                             const std::string& role, bool typed = false) {
  if (!typed && !is_reduced(f))
    throw SortError("fof emission expects a sort-reduced formula; run sort reduction first");
  if (typed && is_reduced(f))
    throw SortError("tff emission expects the two-sorted formula");
  return std::string(typed ? "tff" : "fof") + "(" + name + ", " + role + ", " +
         detail::tptp_formula(f, typed) + ").\n";
}

struct TptpUnit {
  std::string name;
  std::string role;
  FOLPtr formula;
};

inline std::string emit_tptp_problem(const std::vector<TptpUnit>& units, bool typed) {
  std::string out;
  if (typed) {
    out += "tff(sx_type, type, sx: $tType).\n";
    out += "tff(sy_type, type, sy: $tType).\n";
    std::set<std::pair<int, int>> preds;
    for (const auto& u : units) detail::collect_preds(*u.formula, preds);
    for (const auto& [sym_i, index] : preds) {
      PredSym sym = (PredSym)sym_i;
      std::string nm = pred_name(sym, index);
      std::string sig;
      switch (sym) {
        case PredSym::P: sig = "sx > $o"; break;
        case PredSym::Q: sig = "sy > $o"; break;
        case PredSym::I: sig = "(sx * sy) > $o"; break;
        case PredSym::R: sig = "(sx * sx * sx) > $o"; break;
        case PredSym::T1:
        case PredSym::T2:
          throw SortError("carrier predicates do not belong in typed output");
      }
      out += "tff(" + nm + "_type, type, " + nm + ": " + sig + ").\n";
    }
  }
  for (const auto& u : units) out += emit_tptp(*u.formula, u.name, u.role, typed);
  return out;
}

// ---------------------------------------------------------------------------
// Reader for the FOF fragment this module emits.

namespace detail {

class TptpParser {
 public:
  explicit TptpParser(const std::string& s) : s_(s) {}

  std::vector<TptpUnit> parse_units() {
    std::vector<TptpUnit> out;
    skip_ws();
    while (i_ < s_.size()) {
      out.push_back(parse_unit());
      skip_ws();
    }
    return out;
  }

  FOLPtr parse_formula_only() {
    FOLPtr f = formula();
    skip_ws();
    if (i_ != s_.size()) throw ParseError((int)i_, "unexpected trailing input");
    return f;
  }

 private:
  void skip_ws() {
    while (i_ < s_.size()) {
      if (std::isspace((unsigned char)s_[i_])) {
        ++i_;
      } else if (s_[i_] == '%') {
        while (i_ < s_.size() && s_[i_] != '\n') ++i_;
      } else {
        break;
      }
    }
  }
  bool accept(const std::string& tok) {
    skip_ws();
    if (s_.compare(i_, tok.size(), tok) == 0) {
      i_ += tok.size();
      return true;
    }
    return false;
  }
  void expect(const std::string& tok) {
    if (!accept(tok)) throw ParseError((int)i_, "expected '" + tok + "'");
  }
  std::string ident() {
    skip_ws();
    size_t j = i_;
    while (j < s_.size() && (std::isalnum((unsigned char)s_[j]) || s_[j] == '_' || s_[j] == '$'))
      ++j;
    if (j == i_) throw ParseError((int)i_, "identifier expected");
    std::string r = s_.substr(i_, j - i_);
    i_ = j;
    return r;
  }

  TptpUnit parse_unit() {
    std::string lang = ident();
    if (lang != "fof") throw ParseError((int)i_, "only fof units are readable");
    expect("(");
    std::string name = ident();
    expect(",");
    std::string role = ident();
    expect(",");
    FOLPtr f = formula();
    expect(")");
    expect(".");
    return {name, role, f};
  }

  FOLVar var(const std::string& name, bool bind) {
    auto it = vars_.find(name);
    if (it != vars_.end()) return it->second;
    if (!bind) throw ParseError((int)i_, "unquantified variable " + name);
    VSort s = name[0] == 'X' ? VSort::X : name[0] == 'Y' ? VSort::Y : VSort::Unified;
    FOLVar v{next_id_++, s};
    vars_[name] = v;
    return v;
  }

  FOLPtr formula() {
    FOLPtr f = unit();
    skip_ws();
    if (accept("&")) {
      FOLPtr r = unit();
      f = FOLFormula::conj(f, r);
      while (accept("&")) f = FOLFormula::conj(f, unit());
      return f;
    }
    if (accept("|")) {
      FOLPtr r = unit();
      f = FOLFormula::disj(f, r);
      while (accept("|")) f = FOLFormula::disj(f, unit());
      return f;
    }
    if (accept("=>")) return FOLFormula::imp(f, unit());
    return f;
  }

  FOLPtr unit() {
    skip_ws();
    if (i_ >= s_.size()) throw ParseError((int)i_, "formula expected");
    char c = s_[i_];
    if (c == '~') {
      ++i_;
      return FOLFormula::neg(unit());
    }
    if (c == '!' || c == '?') {
      ++i_;
      expect("[");
      std::vector<std::string> names;
      names.push_back(ident());
      while (accept(",")) names.push_back(ident());
      expect("]");
      expect(":");
      std::vector<FOLVar> vs;
      for (const auto& n : names) {
        VSort srt = n[0] == 'X' ? VSort::X : n[0] == 'Y' ? VSort::Y : VSort::Unified;
        FOLVar v{next_id_++, srt};
        shadow_.push_back({n, vars_.count(n) ? std::optional<FOLVar>(vars_[n]) : std::nullopt});
        vars_[n] = v;
        vs.push_back(v);
      }
      FOLPtr body = unit();
      for (size_t k = names.size(); k-- > 0;) {
        auto [n, old] = shadow_.back();
        shadow_.pop_back();
        if (old) vars_[n] = *old; else vars_.erase(n);
      }
      for (size_t k = vs.size(); k-- > 0;)
        body = c == '!' ? FOLFormula::forall(vs[k], body) : FOLFormula::exists(vs[k], body);
      return body;
    }
    if (c == '(') {
      ++i_;
      FOLPtr f = formula();
      expect(")");
      return f;
    }
    if (std::isupper((unsigned char)c)) {
      std::string v1 = ident();
      if (accept("!=")) return FOLFormula::neg(FOLFormula::eq(var(v1, false), var(ident(), false)));
      expect("=");
      return FOLFormula::eq(var(v1, false), var(ident(), false));
    }
    // predicate atom
    std::string nm = ident();
    expect("(");
    std::vector<FOLVar> args;
    args.push_back(var(ident(), false));
    while (accept(",")) args.push_back(var(ident(), false));
    expect(")");
    PredSym sym;
    int index = -1;
    if (nm == "i") sym = PredSym::I;
    else if (nm == "r") sym = PredSym::R;
    else if (nm == "t1") sym = PredSym::T1;
    else if (nm == "t2") sym = PredSym::T2;
    else if (nm.size() >= 2 && (nm[0] == 'p' || nm[0] == 'q')) {
      sym = nm[0] == 'p' ? PredSym::P : PredSym::Q;
      index = std::stoi(nm.substr(1));
    } else {
      throw ParseError((int)i_, "unknown predicate " + nm);
    }
    return FOLFormula::pred(sym, index, args);
  }

  std::string s_;
  size_t i_ = 0;
  std::map<std::string, FOLVar> vars_;
  std::vector<std::pair<std::string, std::optional<FOLVar>>> shadow_;
  int next_id_ = 0;
};

}  // namespace detail

inline std::vector<TptpUnit> parse_tptp(const std::string& text) {
  return detail::TptpParser(text).parse_units();
}

// ---------------------------------------------------------------------------
// Frame conditions as first-order axioms.

inline std::vector<TptpUnit> frame_axioms(FrameClassLabel label, bool reduced) {
  using F = FOLFormula;
  std::vector<TptpUnit> out;
  auto I = [](FOLVar a, FOLVar b) { return F::pred(PredSym::I, -1, {a, b}); };
  auto R = [](FOLVar a, FOLVar b, FOLVar c) { return F::pred(PredSym::R, -1, {a, b, c}); };
  FOLVar x{0, VSort::X}, y{1, VSort::Y};
  out.push_back({"d_x", "axiom", F::forall(x, F::exists(y, I(x, y)))});
  out.push_back({"d_y", "axiom", F::forall(y, F::exists(x, I(x, y)))});
  std::set<int> active;
  for (FrameCondition c : class_conditions(label)) active.insert((int)c);
  if (active.count((int)FrameCondition::C1)) {
    FOLVar w{0, VSort::X}, z{1, VSort::X}, u{2, VSort::X}, v{3, VSort::X}, e{4, VSort::X};
    FOLPtr one = F::exists(e, F::conj(R(e, u, v), R(z, e, w)));
    FOLPtr two = F::exists(e, F::conj(R(e, v, w), R(z, u, e)));
    FOLPtr iff = F::conj(F::imp(one, two), F::imp(two, one));
    out.push_back(
        {"c1", "axiom", F::forall(w, F::forall(z, F::forall(u, F::forall(v, iff))))});
  }
  if (active.count((int)FrameCondition::C2)) {
    FOLVar a{0, VSort::X}, b{1, VSort::X}, c{2, VSort::X};
    out.push_back({"c2", "axiom",
                   F::forall(a, F::forall(b, F::forall(c, F::imp(R(a, b, c), R(a, c, b)))))});
  }
  if (active.count((int)FrameCondition::C3)) {
    FOLVar a{0, VSort::X}, b{1, VSort::X}, c{2, VSort::X}, yy{3, VSort::Y};
    FOLPtr below = F::forall(yy, F::imp(F::neg(I(c, yy)), F::neg(I(a, yy))));
    out.push_back(
        {"c3", "axiom", F::forall(a, F::forall(b, F::forall(c, F::imp(R(a, b, c), below))))});
  }
  if (active.count((int)FrameCondition::C4)) {
    FOLVar a{0, VSort::X};
    out.push_back({"c4", "axiom", F::forall(a, R(a, a, a))});
  }
  if (reduced)
    for (auto& u : out) u.formula = sort_reduce(*u.formula);
  return out;
}

}  // namespace polarity
