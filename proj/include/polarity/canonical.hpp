#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "frame.hpp"
#include "lattice.hpp"

namespace polarity {

// All proper filters (non-empty, proper, upward closed, meet closed) in
// ascending mask order. Finite filters are principal, so each is named by its
// least element when used as a frame point.
inline std::vector<Mask> proper_filters(const ResiduatedLattice& L) {
  int n = L.size();
  std::vector<Mask> out;
  for (Mask s = 1; s < full_mask(n); ++s) {
    bool ok = true;
    for_each_point(s, [&](int a) {
      if (!ok) return;
      for (int b = 0; b < n && ok; ++b) {
        if (L.leq(a, b) && !mask_has(s, b)) ok = false;
      }
    });
    for_each_point(s, [&](int a) {
      for_each_point(s, [&](int b) {
        if (!mask_has(s, L.meet(a, b))) ok = false;
      });
    });
    if (ok) out.push_back(s);
  }
  return out;
}

inline std::vector<Mask> proper_ideals(const ResiduatedLattice& L) {
  int n = L.size();
  std::vector<Mask> out;
  for (Mask s = 1; s < full_mask(n); ++s) {
    bool ok = true;
    for_each_point(s, [&](int a) {
      if (!ok) return;
      for (int b = 0; b < n && ok; ++b) {
        if (L.leq(b, a) && !mask_has(s, b)) ok = false;
      }
    });
    for_each_point(s, [&](int a) {
      for_each_point(s, [&](int b) {
        if (!mask_has(s, L.join(a, b))) ok = false;
      });
    });
    if (ok) out.push_back(s);
  }
  return out;
}

inline int filter_least(const ResiduatedLattice& L, Mask f) {
  int m = -1;
  for_each_point(f, [&](int a) { m = m < 0 ? a : L.meet(m, a); });
  return m;
}

inline int ideal_greatest(const ResiduatedLattice& L, Mask f) {
  int m = -1;
  for_each_point(f, [&](int a) { m = m < 0 ? a : L.join(m, a); });
  return m;
}

struct PointFuse {
  Mask filter;
  bool proper;
};

// Filter generated by the pairwise fusions of two filters; improper when the
// generating set meets down to the bottom.
inline PointFuse point_fuse(const ResiduatedLattice& L, Mask f, Mask g) {
  int m = -1;
  for_each_point(f, [&](int a) {
    for_each_point(g, [&](int b) { m = m < 0 ? L.fuse(a, b) : L.meet(m, L.fuse(a, b)); });
  });
  if (m < 0) throw LatticeError("point fusion of an empty filter");
  Mask up = 0;
  for (int c = 0; c < L.size(); ++c)
    if (L.leq(m, c)) up |= unit_mask(c);
  return {up, m != L.bottom()};
}

struct CanonicalFrame {
  TwoSortedFrame frame;
  std::vector<Mask> filters;  // X point i is filters[i]
  std::vector<Mask> ideals;   // Y point i is ideals[i]
};

// X = proper filters, Y = proper ideals, Galois relation = non-empty
// intersection, ternary relation = point-fusion inclusion.
inline CanonicalFrame canonical_frame(const ResiduatedLattice& L) {
  if (L.size() < 2) throw LatticeError("canonical frame needs at least two elements");
  std::vector<Mask> filters = proper_filters(L);
  std::vector<Mask> ideals = proper_ideals(L);
  if ((int)filters.size() > kMaxPoints || (int)ideals.size() > kMaxPoints)
    throw LatticeError("canonical frame too large");
  std::vector<std::string> xn, yn;
  for (Mask f : filters) xn.push_back("f" + L.name(filter_least(L, f)));
  for (Mask d : ideals) yn.push_back("i" + L.name(ideal_greatest(L, d)));
  std::vector<std::pair<int, int>> gal;
  for (size_t x = 0; x < filters.size(); ++x)
    for (size_t y = 0; y < ideals.size(); ++y)
      if ((filters[x] & ideals[y]) != 0) gal.push_back({(int)x, (int)y});
  std::vector<Triple> triples;
  for (size_t z = 0; z < filters.size(); ++z)
    for (size_t zp = 0; zp < filters.size(); ++zp) {
      PointFuse pf = point_fuse(L, filters[z], filters[zp]);
      if (!pf.proper) continue;  // no proper filter lies above an improper value
      for (size_t x = 0; x < filters.size(); ++x)
        if (subset_of(pf.filter, filters[x])) triples.push_back({(int)x, (int)z, (int)zp});
    }
  return {TwoSortedFrame::make(xn, yn, gal, triples), filters, ideals};
}

// Canonical image of a lattice element: the filters containing it.
inline Mask represent(const ResiduatedLattice&, const CanonicalFrame& cf, int element) {
  Mask out = 0;
  for (size_t x = 0; x < cf.filters.size(); ++x)
    if (mask_has(cf.filters[x], element)) out |= unit_mask((int)x);
  internal_check(cf.frame.stable_x(out), "canonical image is not stable");
  return out;
}

struct EmbeddingCheck {
  std::string name;
  bool pass;
  std::string detail;
};

struct EmbeddingReport {
  std::string lattice;
  std::vector<EmbeddingCheck> checks;
  std::vector<std::string> notes;
  bool all_pass = true;

  void add(const std::string& name, bool pass, const std::string& detail = "") {
    checks.push_back({name, pass, detail});
    all_pass = all_pass && pass;
  }

  std::string text() const {
    std::ostringstream os;
    os << "lattice: " << lattice << '\n';
    for (const auto& c : checks) {
      os << c.name << ": " << (c.pass ? "ok" : "FAIL");
      if (!c.detail.empty()) os << " (" << c.detail << ")";
      os << '\n';
    }
    for (const auto& n : notes) os << "note: " << n << '\n';
    os << "verdict: " << (all_pass ? "pass" : "fail") << '\n';
    return os.str();
  }
};

// Desk-scale representation check: the canonical image embeds the lattice,
// operation by operation, and the frame lands in the class matching the
// fusion's equational laws.
inline EmbeddingReport verify_embedding(const ResiduatedLattice& L) {
  EmbeddingReport rep;
  rep.lattice = L.describe().empty() ? "(unnamed)" : L.describe();
  CanonicalFrame cf = canonical_frame(L);
  SetOps ops(cf.frame, kMaxPoints);
  int n = L.size();

  std::vector<Mask> alpha(n);
  for (int a = 0; a < n; ++a) alpha[a] = represent(L, cf, a);

  bool injective = true;
  std::string inj_detail;
  for (int a = 0; a < n && injective; ++a)
    for (int b = a + 1; b < n && injective; ++b)
      if (alpha[a] == alpha[b]) {
        injective = false;
        inj_detail = L.name(a) + " and " + L.name(b) + " share an image";
      }
  rep.add("alpha injective", injective, inj_detail);

  bool separated = true;
  for (size_t a = 0; a < cf.filters.size() && separated; ++a)
    for (size_t b = a + 1; b < cf.filters.size() && separated; ++b)
      if (cf.frame.gal_row((int)a) == cf.frame.gal_row((int)b)) separated = false;
  rep.add("frame separated", separated);

  auto binary_check = [&](const std::string& name, auto lattice_op, auto set_op) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        Mask want = alpha[lattice_op(a, b)];
        Mask got = set_op(alpha[a], alpha[b]);
        if (want != got) {
          rep.add(name, false, "at (" + L.name(a) + ", " + L.name(b) + ")");
          return;
        }
      }
    rep.add(name, true);
  };
  binary_check("alpha meet", [&](int a, int b) { return L.meet(a, b); },
               [&](Mask a, Mask b) { return a & b; });
  binary_check("alpha join", [&](int a, int b) { return L.join(a, b); },
               [&](Mask a, Mask b) { return ops.join_x(a, b); });
  binary_check("alpha fuse", [&](int a, int b) { return L.fuse(a, b); },
               [&](Mask a, Mask b) { return ops.overt(a, b); });
  binary_check("alpha rimp", [&](int a, int b) { return L.rimp(a, b); },
               [&](Mask a, Mask b) { return ops.sres_r(a, b); });
  binary_check("alpha limp", [&](int a, int b) { return L.limp(a, b); },
               [&](Mask a, Mask b) { return ops.sres_l(a, b); });

  bool principal = true;
  std::string pf_detail;
  for (int a = 0; a < n && principal; ++a)
    for (int b = 0; b < n && principal; ++b) {
      Mask up_a = 0, up_b = 0, up_ab = 0;
      for (int c = 0; c < n; ++c) {
        if (L.leq(a, c)) up_a |= unit_mask(c);
        if (L.leq(b, c)) up_b |= unit_mask(c);
        if (L.leq(L.fuse(a, b), c)) up_ab |= unit_mask(c);
      }
      if (point_fuse(L, up_a, up_b).filter != up_ab) {
        principal = false;
        pf_detail = "at (" + L.name(a) + ", " + L.name(b) + ")";
      }
    }
  rep.add("point fusion preserves principal filters", principal, pf_detail);

  const auto& laws = L.laws();
  bool c1 = cf.frame.check_condition(FrameCondition::C1).holds;
  bool c2 = cf.frame.check_condition(FrameCondition::C2).holds;
  bool c3 = cf.frame.check_condition(FrameCondition::C3).holds;
  bool c4 = cf.frame.check_condition(FrameCondition::C4).holds;
  rep.add("exchange iff C2", laws.exchange == c2);
  rep.add("weakening iff C3", laws.weakening == c3);
  rep.add("contraction iff C4", laws.contraction == c4);
  rep.add("associativity implies C1", !laws.associative || c1);
  if (c1 && !laws.associative)
    rep.notes.push_back("C1 holds although fusion is not associative");
  return rep;
}

}  // namespace polarity
