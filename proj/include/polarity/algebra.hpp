#pragma once

#include <optional>
#include <string>
#include <vector>

#include "frame.hpp"

namespace polarity {

// Set operators a frame's ternary relation generates: the additive fusion on
// arbitrary subsets of X with its residuals, and their stable-set companions
// (fusion closed after the fact, residuals restricted). Stable-set operators
// reject non-stable arguments instead of closing them silently.
class SetOps {
 public:
  explicit SetOps(const TwoSortedFrame& f, int stable_bound = 12)
      : f_(&f), bound_(stable_bound) {}

  const TwoSortedFrame& frame() const { return *f_; }

  // U (.) U' = union of R z z' over z in U, z' in U'.
  Mask odot(Mask u, Mask up) const {
    Mask acc = 0;
    for_each_point(u, [&](int z) {
      for_each_point(up, [&](int zp) { acc |= f_->r_result(z, zp); });
    });
    return acc;
  }

  // U => W: points x such that z in U and z' R z x force z' in W.
  Mask rres(Mask u, Mask w) const {
    Mask acc = 0;
    for (int x = 0; x < f_->x_size(); ++x) {
      bool ok = true;
      for_each_point(u, [&](int z) { ok = ok && subset_of(f_->r_result(z, x), w); });
      if (ok) acc |= unit_mask(x);
    }
    return acc;
  }

  // W <= U: points x such that z in U and z' R x z force z' in W.
  Mask lres(Mask w, Mask u) const {
    Mask acc = 0;
    for (int x = 0; x < f_->x_size(); ++x) {
      bool ok = true;
      for_each_point(u, [&](int z) { ok = ok && subset_of(f_->r_result(x, z), w); });
      if (ok) acc |= unit_mask(x);
    }
    return acc;
  }

  Mask overt(Mask a, Mask c) const {
    require_stable(a, "left");
    require_stable(c, "right");
    Mask r = f_->closure_x(odot(a, c));
    internal_check(f_->stable_x(r), "overt produced a non-stable set");
    return r;
  }

  Mask overt_dual(Mask b, Mask d) const {
    require_costable(b, "left");
    require_costable(d, "right");
    Mask la = f_->polar_left(b), lc = f_->polar_left(d);
    Mask r = f_->polar_right(f_->closure_x(odot(la, lc)));
    if (kInternalChecks) {
      Mask meet = f_->y_all();
      for_each_point(la, [&](int u) {
        for_each_point(lc, [&](int up) { meet &= f_->r_dual(u, up); });
      });
      internal_check(r == meet, "overt_dual: polar route differs from intersection route");
    }
    return r;
  }

  // The residuals of stable arguments need not be stable themselves: a
  // twisted ternary relation can carry a point of the closure outside the
  // raw residual (see residual_closed below). The residuation triple over
  // stable sets holds regardless, so these only demand stable inputs.
  Mask sres_r(Mask a, Mask c) const {
    require_stable(a, "left");
    require_stable(c, "right");
    Mask r = rres(a, c);
    if (kInternalChecks) {
      Mask lemma = 0;
      Mask cp = f_->polar_right(c);
      for (int x = 0; x < f_->x_size(); ++x) {
        bool ok = true;
        for_each_point(a, [&](int z) { ok = ok && subset_of(cp, f_->r_dual(z, x)); });
        if (ok) lemma |= unit_mask(x);
      }
      internal_check(r == lemma, "sres_r: residual differs from its dual-relation form");
    }
    return r;
  }

  Mask sres_l(Mask c, Mask a) const {
    require_stable(c, "left");
    require_stable(a, "right");
    Mask r = lres(c, a);
    if (kInternalChecks) {
      Mask lemma = 0;
      Mask cp = f_->polar_right(c);
      for (int x = 0; x < f_->x_size(); ++x) {
        bool ok = true;
        for_each_point(a, [&](int z) { ok = ok && subset_of(cp, f_->r_dual(x, z)); });
        if (ok) lemma |= unit_mask(x);
      }
      internal_check(r == lemma, "sres_l: residual differs from its dual-relation form");
    }
    return r;
  }

  // Whether both residuals carry stable pairs back to stable sets. Canonical
  // frames of lattices always do; arbitrary ternary relations may not, and on
  // frames where this fails the residuals of the stable-set fusion exist only
  // as subsets, not as members, of the stable lattice.
  bool residual_closed() const {
    for (Mask a : stable_sets())
      for (Mask c : stable_sets())
        if (!f_->stable_x(rres(a, c)) || !f_->stable_x(lres(a, c))) return false;
    return true;
  }

  // Join in the stable-set lattice: closure of the union.
  Mask join_x(Mask a, Mask c) const { return f_->closure_x(a | c); }

  const std::vector<Mask>& stable_sets() const {
    if (!stables_) stables_ = f_->stable_sets(bound_);
    return *stables_;
  }
  const std::vector<Mask>& costable_sets() const {
    if (!costables_) costables_ = f_->costable_sets(bound_);
    return *costables_;
  }

  struct LawViolation {
    std::string law;
    std::vector<Mask> sets;
  };
  using LawResult = std::optional<LawViolation>;

  // Additivity reduces the powerset laws below to singleton generators.
  LawResult odot_associative() const {
    int n = f_->x_size();
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        for (int w = 0; w < n; ++w) {
          Mask l = odot(odot(unit_mask(u), unit_mask(v)), unit_mask(w));
          Mask r = odot(unit_mask(u), odot(unit_mask(v), unit_mask(w)));
          if (l != r)
            return LawViolation{"odot associativity",
                                {unit_mask(u), unit_mask(v), unit_mask(w)}};
        }
    return std::nullopt;
  }

  LawResult odot_commutative() const {
    int n = f_->x_size();
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (odot(unit_mask(u), unit_mask(v)) != odot(unit_mask(v), unit_mask(u)))
          return LawViolation{"odot commutativity", {unit_mask(u), unit_mask(v)}};
    return std::nullopt;
  }

  LawResult odot_contractive() const {
    int n = f_->x_size();
    for (int x = 0; x < n; ++x)
      if (!mask_has(odot(unit_mask(x), unit_mask(x)), x))
        return LawViolation{"odot contraction", {unit_mask(x)}};
    return std::nullopt;
  }

  // U (.) W included in W for all preorder-increasing U, W.
  LawResult odot_thinning_on_increasing() const {
    Mask all = f_->x_all();
    for (Mask u = 0; u <= all; ++u) {
      if (!f_->increasing_x(u)) continue;
      for (Mask w = 0; w <= all; ++w) {
        if (!f_->increasing_x(w)) continue;
        if (!subset_of(odot(u, w), w)) return LawViolation{"odot thinning", {u, w}};
      }
    }
    return std::nullopt;
  }

  // U (.) W included in U&W for all subsets. Even under C2 and C3 this can
  // fail off the preorder-increasing sets, so the guarded variant below is
  // the one the frame conditions deliver.
  LawResult odot_meet_bounded() const {
    Mask all = f_->x_all();
    for (Mask u = 0; u <= all; ++u)
      for (Mask w = 0; w <= all; ++w)
        if (!subset_of(odot(u, w), u & w)) return LawViolation{"odot meet bound", {u, w}};
    return std::nullopt;
  }

  LawResult odot_meet_bounded_on_increasing() const {
    Mask all = f_->x_all();
    for (Mask u = 0; u <= all; ++u) {
      if (!f_->increasing_x(u)) continue;
      for (Mask w = 0; w <= all; ++w) {
        if (!f_->increasing_x(w)) continue;
        if (!subset_of(odot(u, w), u & w)) return LawViolation{"odot meet bound", {u, w}};
      }
    }
    return std::nullopt;
  }

  LawResult overt_associative() const {
    for (Mask a : stable_sets())
      for (Mask c : stable_sets())
        for (Mask e : stable_sets())
          if (overt(overt(a, c), e) != overt(a, overt(c, e)))
            return LawViolation{"overt associativity", {a, c, e}};
    return std::nullopt;
  }

  LawResult overt_commutative() const {
    for (Mask a : stable_sets())
      for (Mask c : stable_sets())
        if (overt(a, c) != overt(c, a)) return LawViolation{"overt commutativity", {a, c}};
    return std::nullopt;
  }

  LawResult overt_contractive() const {
    for (Mask a : stable_sets())
      for (Mask c : stable_sets())
        if (!subset_of(a & c, overt(a, c))) return LawViolation{"overt contraction", {a, c}};
    return std::nullopt;
  }

  LawResult overt_thinning() const {
    for (Mask a : stable_sets())
      for (Mask c : stable_sets())
        if (!subset_of(overt(a, c), c)) return LawViolation{"overt thinning", {a, c}};
    return std::nullopt;
  }

  // Residuation triple over stable sets: A (.) F <= C iff F <= A=>C iff A <= C<=F.
  LawResult stable_residuation_triple() const {
    for (Mask a : stable_sets())
      for (Mask fset : stable_sets())
        for (Mask c : stable_sets()) {
          bool p = subset_of(overt(a, fset), c);
          bool q = subset_of(fset, sres_r(a, c));
          bool r = subset_of(a, sres_l(c, fset));
          if (p != q || q != r) return LawViolation{"stable residuation", {a, fset, c}};
        }
    return std::nullopt;
  }

 private:
  void require_stable(Mask m, const char* side) const {
    if (!f_->stable_x(m))
      throw EvalError(std::string("stable-set operator applied to a non-stable ") + side +
                      " argument " + f_->x_set_text(m));
  }
  void require_costable(Mask m, const char* side) const {
    if (!f_->costable_y(m))
      throw EvalError(std::string("co-stable-set operator applied to a non-co-stable ") + side +
                      " argument " + f_->y_set_text(m));
  }

  const TwoSortedFrame* f_;
  int bound_;
  mutable std::optional<std::vector<Mask>> stables_, costables_;
};

}  // namespace polarity
