#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "parser.hpp"
#include "printer.hpp"
#include "semantics.hpp"
#include "translate.hpp"

namespace polarity {

struct SearchBudget {
  int max_x = 2;
  int max_y = 2;
  std::uint64_t seed = 1;
  int samples = 500;  // random draws per oversized carrier size
  int workers = 1;
  int stable_bound = 12;
};

namespace detail {

inline TwoSortedFrame decode_frame(int nx, int ny, std::uint64_t gal_bits,
                                   std::uint64_t r_bits) {
  std::vector<std::string> xn, yn;
  for (int i = 0; i < nx; ++i) xn.push_back("x" + std::to_string(i));
  for (int j = 0; j < ny; ++j) yn.push_back("y" + std::to_string(j));
  std::vector<std::pair<int, int>> gal;
  for (int x = 0; x < nx; ++x)
    for (int y = 0; y < ny; ++y)
      if ((gal_bits >> (x * ny + y)) & 1) gal.push_back({x, y});
  std::vector<Triple> triples;
  for (int x = 0; x < nx; ++x)
    for (int z = 0; z < nx; ++z)
      for (int zp = 0; zp < nx; ++zp)
        if ((r_bits >> ((x * nx + z) * nx + zp)) & 1) triples.push_back({x, z, zp});
  return TwoSortedFrame::make(xn, yn, gal, triples);
}

inline bool d_ok(int nx, int ny, std::uint64_t gal_bits) {
  for (int x = 0; x < nx; ++x) {
    std::uint64_t row = (gal_bits >> (x * ny)) & ((1u << ny) - 1);
    if (row == ((1u << ny) - 1u)) return false;
  }
  for (int y = 0; y < ny; ++y) {
    bool full = true;
    for (int x = 0; x < nx && full; ++x)
      if (!((gal_bits >> (x * ny + y)) & 1)) full = false;
    if (full) return false;
  }
  return true;
}

// Associative multiplication tables used as structured ternary relations at
// carrier sizes beyond the exhaustive range.
inline std::vector<std::vector<std::vector<int>>> structured_monoids(int n) {
  std::vector<std::vector<std::vector<int>>> out;
  auto push = [&](std::vector<std::vector<int>> t) { out.push_back(std::move(t)); };
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  if (n <= 2) {
    // all associative tables, ascending code
    long total = 1;
    for (int i = 0; i < n * n; ++i) total *= n;
    for (long code = 0; code < total; ++code) {
      long c = code;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          t[i][j] = (int)(c % n);
          c /= n;
        }
      bool assoc = true;
      for (int a = 0; a < n && assoc; ++a)
        for (int b = 0; b < n && assoc; ++b)
          for (int d = 0; d < n && assoc; ++d)
            if (t[t[a][b]][d] != t[a][t[b][d]]) assoc = false;
      if (assoc) push(t);
    }
    return out;
  }
  // fixed family: constant, left/right projection, cyclic addition, min
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = 0;
  push(t);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = i;
  push(t);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = j;
  push(t);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  push(t);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = std::min(i, j);
  push(t);
  return out;
}

inline std::uint64_t monoid_r_bits(const std::vector<std::vector<int>>& t) {
  int n = (int)t.size();
  std::uint64_t bits = 0;
  for (int z = 0; z < n; ++z)
    for (int zp = 0; zp < n; ++zp) {
      int x = t[z][zp];
      bits |= std::uint64_t{1} << ((x * n + z) * n + zp);
    }
  return bits;
}

}  // namespace detail

// Deterministic frame stream: carrier sizes ascending by total then |X|;
// within a size, exhaustive over both relations when |X|,|Y| <= 2, otherwise
// a structured pass (every D-passing Galois relation crossed with a fixed
// ternary-relation family) followed by seeded uniform sampling. Every frame
// delivered satisfies the D-conditions and the class conditions a sink
// returning false stops the stream.
inline void enumerate_frames(const SearchBudget& budget, FrameClassLabel label,
                             const std::function<bool(const TwoSortedFrame&)>& sink) {
  for (int total = 2; total <= budget.max_x + budget.max_y; ++total) {
    for (int nx = 1; nx <= budget.max_x; ++nx) {
      int ny = total - nx;
      if (ny < 1 || ny > budget.max_y) continue;
      std::uint64_t gal_count = std::uint64_t{1} << (nx * ny);
      auto try_frame = [&](std::uint64_t g, std::uint64_t r) -> std::optional<bool> {
        if (!detail::d_ok(nx, ny, g)) return std::nullopt;
        TwoSortedFrame f = detail::decode_frame(nx, ny, g, r);
        if (!f.in_class(label)) return std::nullopt;
        return sink(f);
      };
      if (nx <= 2 && ny <= 2) {
        std::uint64_t r_count = std::uint64_t{1} << (nx * nx * nx);
        for (std::uint64_t g = 0; g < gal_count; ++g) {
          if (!detail::d_ok(nx, ny, g)) continue;
          for (std::uint64_t r = 0; r < r_count; ++r)
            if (auto cont = try_frame(g, r); cont && !*cont) return;
        }
        continue;
      }
      std::vector<std::uint64_t> structured{0};
      {
        std::uint64_t diag = 0;
        for (int x = 0; x < nx; ++x) diag |= std::uint64_t{1} << ((x * nx + x) * nx + x);
        structured.push_back(diag);
        for (const auto& t : detail::structured_monoids(nx))
          structured.push_back(detail::monoid_r_bits(t));
      }
      for (std::uint64_t g = 0; g < gal_count; ++g) {
        if (!detail::d_ok(nx, ny, g)) continue;
        for (std::uint64_t r : structured)
          if (auto cont = try_frame(g, r); cont && !*cont) return;
      }
      std::mt19937_64 rng(budget.seed * 0x9e3779b97f4a7c15ull + (std::uint64_t)(nx * 64 + ny));
      std::uint64_t r_all = (nx * nx * nx >= 64) ? ~std::uint64_t{0}
                                                 : ((std::uint64_t{1} << (nx * nx * nx)) - 1);
      for (int s = 0; s < budget.samples; ++s) {
        std::uint64_t g = rng() & (gal_count - 1);
        std::uint64_t r = rng() & r_all;
        if (auto cont = try_frame(g, r); cont && !*cont) return;
      }
    }
  }
}

// Frame from an associative multiplication table: x R z z' iff x = z * z'.
inline TwoSortedFrame monoid_frame(const std::vector<std::vector<int>>& mul,
                                   const std::vector<std::string>& x_names,
                                   const std::vector<std::string>& y_names,
                                   const std::vector<std::pair<int, int>>& gal) {
  int n = (int)mul.size();
  for (const auto& row : mul)
    if ((int)row.size() != n) throw FrameError("multiplication table is not square");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (mul[mul[a][b]][c] != mul[a][mul[b][c]])
          throw FrameError("multiplication table is not associative");
  std::vector<Triple> triples;
  for (int z = 0; z < n; ++z)
    for (int zp = 0; zp < n; ++zp) triples.push_back({mul[z][zp], z, zp});
  TwoSortedFrame f = TwoSortedFrame::make(x_names, y_names, gal, triples);
  internal_check(f.check_condition(FrameCondition::C1).holds,
                 "monoid frame misses the associativity condition");
  return f;
}

struct Countermodel {
  ModelFile model;
  int witness;
};

struct SearchVerdict {
  std::optional<Countermodel> countermodel;
  std::uint64_t frames_examined = 0;
  std::uint64_t models_examined = 0;
  std::string summary;
};

namespace detail {

// Deterministic parallel first hit: frames are buffered in blocks, workers
// scan interleaved indices, the least hit index wins.
class BlockScanner {
 public:
  BlockScanner(int workers, std::function<std::optional<Countermodel>(const TwoSortedFrame&)> fn)
      : workers_(workers < 1 ? 1 : workers), fn_(std::move(fn)) {}

  // Returns false once a hit is recorded (stops the stream).
  bool feed(const TwoSortedFrame& f) {
    block_.push_back(f);
    if ((int)block_.size() >= 64 * workers_) return !flush();
    return true;
  }

  std::optional<Countermodel> finish() {
    flush();
    return hit_;
  }

 private:
  bool flush() {
    if (block_.empty() || hit_) {
      block_.clear();
      return hit_.has_value();
    }
    std::vector<std::optional<Countermodel>> found(block_.size());
    if (workers_ == 1) {
      for (size_t i = 0; i < block_.size(); ++i) {
        found[i] = fn_(block_[i]);
        if (found[i]) break;
      }
    } else {
      std::atomic<size_t> first_hit{block_.size()};
      std::vector<std::thread> pool;
      for (int w = 0; w < workers_; ++w) {
        pool.emplace_back([&, w] {
          for (size_t i = (size_t)w; i < block_.size(); i += (size_t)workers_) {
            if (i > first_hit.load(std::memory_order_relaxed)) continue;
            found[i] = fn_(block_[i]);
            if (found[i]) {
              size_t cur = first_hit.load();
              while (i < cur && !first_hit.compare_exchange_weak(cur, i)) {
              }
            }
          }
        });
      }
      for (auto& t : pool) t.join();
    }
    for (size_t i = 0; i < block_.size(); ++i)
      if (found[i]) {
        hit_ = found[i];
        break;
      }
    block_.clear();
    return hit_.has_value();
  }

  int workers_;
  std::function<std::optional<Countermodel>(const TwoSortedFrame&)> fn_;
  std::vector<TwoSortedFrame> block_;
  std::optional<Countermodel> hit_;
};

}  // namespace detail

// Bounded countermodel search for a substructural sequent: every frame of the
// class in budget order, every valuation of the sequent's atoms by stable
// sets. A returned countermodel has been re-loaded from its own printed form
// and re-checked before being handed back.
inline SearchVerdict find_countermodel(FrameClassLabel label, const Formula& lhs,
                                       const Formula& rhs, const SearchBudget& budget) {
  std::set<int> atom_set;
  collect_atoms(lhs, atom_set);
  collect_atoms(rhs, atom_set);
  std::vector<int> atoms(atom_set.begin(), atom_set.end());

  SearchVerdict verdict;
  std::atomic<std::uint64_t> frames{0}, models{0};

  auto scan_frame = [&](const TwoSortedFrame& f) -> std::optional<Countermodel> {
    frames.fetch_add(1, std::memory_order_relaxed);
    SetOps ops(f, budget.stable_bound);
    const std::vector<Mask>& stables = ops.stable_sets();
    std::vector<size_t> pick(atoms.size(), 0);
    for (;;) {
      std::map<int, Mask> vals;
      for (size_t i = 0; i < atoms.size(); ++i) vals[atoms[i]] = stables[pick[i]];
      SubModel m(f, vals);
      models.fetch_add(1, std::memory_order_relaxed);
      Entailment e = entails_sub(m, lhs, rhs);
      if (!e.holds) {
        ModelFile mf{f, vals, {}, {}};
        return Countermodel{mf, e.witness};
      }
      size_t i = atoms.size();
      while (i > 0) {
        --i;
        if (++pick[i] < stables.size()) break;
        pick[i] = 0;
        if (i == 0) return std::nullopt;
      }
      if (atoms.empty()) return std::nullopt;
    }
  };

  detail::BlockScanner scanner(budget.workers, scan_frame);
  enumerate_frames(budget, label, [&](const TwoSortedFrame& f) { return scanner.feed(f); });
  verdict.countermodel = scanner.finish();
  verdict.frames_examined = frames.load();
  verdict.models_examined = models.load();

  if (verdict.countermodel) {
    // Round-trip through the printed form, then re-check everything.
    ModelFile reloaded = load_model_text(model_to_text(verdict.countermodel->model));
    if (!reloaded.frame.in_class(label))
      throw InternalCheckError("countermodel frame left its class after reload");
    SubModel m(reloaded.frame, reloaded.sub_vals);
    Entailment e = entails_sub(m, lhs, rhs);
    if (e.holds || e.witness != verdict.countermodel->witness)
      throw InternalCheckError("countermodel did not re-check after reload");
    verdict.countermodel->model = reloaded;
    std::ostringstream os;
    os << "countermodel with |X| = " << reloaded.frame.x_size()
       << ", |Y| = " << reloaded.frame.y_size() << ", witness "
       << reloaded.frame.x_name(verdict.countermodel->witness);
    verdict.summary = os.str();
  } else {
    std::ostringstream os;
    os << "no counterexample up to |X| <= " << budget.max_x << ", |Y| <= " << budget.max_y
       << " (seed " << budget.seed << ", samples " << budget.samples << ")";
    verdict.summary = os.str();
  }
  return verdict;
}

// ML2 countermodel search over arbitrary interpretations of the sequent's
// atoms; an optional extra frame filter narrows the population.
inline std::optional<std::pair<ModelFile, int>> find_ml2_countermodel(
    FrameClassLabel label, const SortedFormula& lhs, const SortedFormula& rhs,
    const SearchBudget& budget,
    const std::function<bool(const TwoSortedFrame&)>& frame_filter = nullptr) {
  std::set<int> s1, s2;
  collect_atoms(lhs, s1, s2);
  collect_atoms(rhs, s1, s2);
  std::vector<int> atoms1(s1.begin(), s1.end()), atoms2(s2.begin(), s2.end());

  std::optional<std::pair<ModelFile, int>> result;
  enumerate_frames(budget, label, [&](const TwoSortedFrame& f) {
    if (frame_filter && !frame_filter(f)) return true;
    size_t n1 = atoms1.size(), n2 = atoms2.size();
    std::uint64_t combos = 1;
    for (size_t i = 0; i < n1; ++i) combos *= (std::uint64_t)f.x_all() + 1;
    for (size_t i = 0; i < n2; ++i) combos *= (std::uint64_t)f.y_all() + 1;
    for (std::uint64_t code = 0; code < combos; ++code) {
      std::uint64_t c = code;
      std::map<int, Mask> i1, i2;
      for (size_t i = 0; i < n1; ++i) {
        i1[atoms1[i]] = (Mask)(c % ((std::uint64_t)f.x_all() + 1));
        c /= (std::uint64_t)f.x_all() + 1;
      }
      for (size_t i = 0; i < n2; ++i) {
        i2[atoms2[i]] = (Mask)(c % ((std::uint64_t)f.y_all() + 1));
        c /= (std::uint64_t)f.y_all() + 1;
      }
      ML2Model m(f, i1, i2);
      Entailment e = entails_ml2(m, lhs, rhs);
      if (!e.holds) {
        result = {ModelFile{f, {}, i1, i2}, e.witness};
        return false;
      }
    }
    return true;
  });
  return result;
}

// ---------------------------------------------------------------------------
// Axiom suites.

struct AxiomSequent {
  std::string name;
  SortedFormulaPtr lhs, rhs;
};

// The proof-system axioms of the sorted companion of the given class,
// instantiated at atoms (interpretations range over all subsets, so atom
// instances carry scheme validity).
inline std::vector<AxiomSequent> ml2_axioms(FrameClassLabel label) {
  auto ax = [](const char* name, const char* seq) {
    auto [l, r] = parse_ml2_sequent(seq);
    return AxiomSequent{name, l, r};
  };
  std::vector<AxiomSequent> out{
      ax("closure", "P0 |- [d]<u>P0"),
      ax("coclosure", "<u>[d]Q0 |- Q0"),
      ax("d-boxdown", "[d]Q0 |- <d>Q0"),
      ax("d-boxup", "[u]P0 |- <u>P0"),
      ax("top-boxdown", "top@1 |- [d]top@2"),
      ax("top-boxup", "top@2 |- [u]top@1"),
      ax("boxup-meet", "[u]P0 & [u]P1 |- [u](P0 & P1)"),
      ax("boxdown-meet", "[d]Q0 & [d]Q1 |- [d](Q0 & Q1)"),
      ax("counit-r", "P0 * (P0 -> P1) |- P1"),
      ax("unit-r", "P1 |- P0 -> (P0 * P1)"),
      ax("unit-l", "P0 |- (P0 * P1) <- P1"),
      ax("counit-l", "(P1 <- P0) * P0 |- P1"),
  };
  switch (label) {
    case FrameClassLabel::NFL:
      break;
    case FrameClassLabel::FL:
      out.push_back(ax("assoc-lr", "P0 * (P1 * P2) |- (P0 * P1) * P2"));
      out.push_back(ax("assoc-rl", "(P0 * P1) * P2 |- P0 * (P1 * P2)"));
      break;
    case FrameClassLabel::BCI:
      out.push_back(ax("assoc-lr", "P0 * (P1 * P2) |- (P0 * P1) * P2"));
      out.push_back(ax("assoc-rl", "(P0 * P1) * P2 |- P0 * (P1 * P2)"));
      out.push_back(ax("comm", "P0 * P1 |- P1 * P0"));
      break;
    case FrameClassLabel::BCK:
      out.push_back(ax("assoc-lr", "P0 * (P1 * P2) |- (P0 * P1) * P2"));
      out.push_back(ax("assoc-rl", "(P0 * P1) * P2 |- P0 * (P1 * P2)"));
      out.push_back(ax("comm", "P0 * P1 |- P1 * P0"));
      out.push_back(ax("controlled-weakening", "[d]Q0 * [d]Q1 |- [d]Q1"));
      break;
    case FrameClassLabel::BCW:
      out.push_back(ax("assoc-lr", "P0 * (P1 * P2) |- (P0 * P1) * P2"));
      out.push_back(ax("assoc-rl", "(P0 * P1) * P2 |- P0 * (P1 * P2)"));
      out.push_back(ax("comm", "P0 * P1 |- P1 * P0"));
      out.push_back(ax("contraction", "P0 & P1 |- P0 * P1"));
      break;
  }
  return out;
}

struct SubLawCheck {
  std::string name;
  bool pass;
  std::string detail;
};

struct AxiomSuiteReport {
  std::vector<std::string> lines;
  bool all_valid = true;
  std::string text() const {
    std::string out;
    for (const auto& l : lines) out += l + "\n";
    return out;
  }
};

// Validity sweep: every axiom of the class's companion system on every
// enumerated frame of the class, interpretations exhaustive over the axiom's
// atoms at the exhaustive sizes and seeded elsewhere; plus the stable-set
// laws the class guarantees on the same frames.
inline AxiomSuiteReport check_axiom_suite(FrameClassLabel label, const SearchBudget& budget) {
  AxiomSuiteReport rep;
  std::vector<AxiomSequent> axioms = ml2_axioms(label);
  std::vector<std::uint64_t> axiom_models(axioms.size(), 0);
  std::vector<std::string> axiom_fail(axioms.size());
  std::uint64_t frames = 0;
  std::uint64_t law_fail = 0;
  std::vector<std::string> law_lines;

  enumerate_frames(budget, label, [&](const TwoSortedFrame& f) {
    ++frames;
    for (size_t ai = 0; ai < axioms.size(); ++ai) {
      std::set<int> s1, s2;
      collect_atoms(*axioms[ai].lhs, s1, s2);
      collect_atoms(*axioms[ai].rhs, s1, s2);
      std::vector<int> a1(s1.begin(), s1.end()), a2(s2.begin(), s2.end());
      std::uint64_t x_opts = (std::uint64_t)f.x_all() + 1, y_opts = (std::uint64_t)f.y_all() + 1;
      std::uint64_t combos = 1;
      for (size_t i = 0; i < a1.size(); ++i) combos *= x_opts;
      for (size_t i = 0; i < a2.size(); ++i) combos *= y_opts;
      bool exhaustive = combos <= 4096;
      std::mt19937_64 rng(budget.seed ^ (0xabcdull + ai));
      std::uint64_t tries = exhaustive ? combos : 256;
      for (std::uint64_t t = 0; t < tries; ++t) {
        std::uint64_t code = exhaustive ? t : rng();
        std::map<int, Mask> i1, i2;
        for (size_t i = 0; i < a1.size(); ++i) {
          i1[a1[i]] = (Mask)(code % x_opts);
          code /= x_opts;
        }
        for (size_t i = 0; i < a2.size(); ++i) {
          i2[a2[i]] = (Mask)(code % y_opts);
          code /= y_opts;
        }
        ML2Model m(f, i1, i2);
        Entailment e = entails_ml2(m, *axioms[ai].lhs, *axioms[ai].rhs);
        ++axiom_models[ai];
        if (!e.holds && axiom_fail[ai].empty()) {
          axiom_fail[ai] = "fails on frame\n" + f.to_text();
          rep.all_valid = false;
        }
      }
    }
    // Stable-set laws of the class.
    SetOps ops(f, budget.stable_bound);
    auto law = [&](const char* name, SetOps::LawResult r) {
      if (r) {
        ++law_fail;
        rep.all_valid = false;
        law_lines.push_back(std::string("law ") + name + ": FAIL");
      }
    };
    law("stable residuation triple", ops.stable_residuation_triple());
    auto conds = class_conditions(label);
    auto has = [&](FrameCondition c) {
      for (FrameCondition k : conds)
        if (k == c) return true;
      return false;
    };
    if (has(FrameCondition::C1)) law("overt associativity", ops.overt_associative());
    if (has(FrameCondition::C2)) law("overt commutativity", ops.overt_commutative());
    if (has(FrameCondition::C3)) law("overt thinning", ops.overt_thinning());
    if (has(FrameCondition::C4)) law("overt contraction", ops.overt_contractive());
    return true;
  });

  rep.lines.push_back("class: " + std::string(label_name(label)));
  rep.lines.push_back("frames: " + std::to_string(frames));
  for (size_t ai = 0; ai < axioms.size(); ++ai) {
    if (axiom_fail[ai].empty()) {
      rep.lines.push_back("axiom " + axioms[ai].name + ": valid on " +
                          std::to_string(axiom_models[ai]) + " models");
    } else {
      rep.lines.push_back("axiom " + axioms[ai].name + ": " + axiom_fail[ai]);
    }
  }
  for (const auto& l : law_lines) rep.lines.push_back(l);
  if (law_lines.empty()) rep.lines.push_back("stable-set laws: all hold");
  rep.lines.push_back(std::string("verdict: ") + (rep.all_valid ? "valid" : "violations found"));
  return rep;
}

}  // namespace polarity
