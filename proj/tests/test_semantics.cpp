#include <catch2/catch_amalgamated.hpp>

#include <functional>

#include "polarity/parser.hpp"
#include "polarity/semantics.hpp"
#include "support/gen.hpp"

using namespace polarity;

namespace {
Mask pts(std::initializer_list<int> xs) {
  Mask m = 0;
  for (int x : xs) m |= unit_mask(x);
  return m;
}

SubModel fm3_model() {
  static TwoSortedFrame f = testgen::fm3();
  return SubModel(f, {{0, pts({0})}, {1, pts({1})}, {2, pts({2})}});
}
}  // namespace

TEST_CASE("constants denote the full carriers") {
  SubModel m = fm3_model();
  ConceptDenotation top = eval_sub(m, *parse_sub("top"));
  CHECK(top.extent == m.frame().x_all());
  ConceptDenotation bot = eval_sub(m, *parse_sub("bot"));
  CHECK(bot.intent == m.frame().y_all());
  CHECK(bot.extent == 0u);  // forced by the D-conditions
}

TEST_CASE("distribution fails in the M3 stable lattice") {
  SubModel m = fm3_model();
  CHECK(eval_sub(m, *parse_sub("(p0 | p1) & p2")).extent == pts({2}));
  CHECK(eval_sub(m, *parse_sub("(p0 & p2) | (p1 & p2)")).extent == 0u);
  Entailment e = entails_sub(m, *parse_sub("(p0 | p1) & p2"), *parse_sub("(p0 & p2) | (p1 & p2)"));
  CHECK_FALSE(e.holds);
  CHECK(e.witness == 2);
  CHECK(m.frame().x_name(e.witness) == "x3");
}

TEST_CASE("fusion and implication through the stable operators") {
  TwoSortedFrame f = testgen::f1r();
  SubModel m(f, {{0, pts({0})}});
  CHECK(eval_sub(m, *parse_sub("p0 * p0")).extent == pts({0}));
  CHECK(eval_sub(m, *parse_sub("p0 -> p0")).extent == f.x_all());
  SetOps ops(f);
  CHECK(eval_sub(m, *parse_sub("p0 * p0")).extent == ops.overt(pts({0}), pts({0})));
  CHECK(eval_sub(m, *parse_sub("p0 -> p0")).extent == ops.sres_r(pts({0}), pts({0})));
  CHECK(eval_sub(m, *parse_sub("p0 <- p0")).extent == ops.sres_l(pts({0}), pts({0})));
}

TEST_CASE("weakening fails on the crossed frame with a twist") {
  TwoSortedFrame f = testgen::fw();
  SubModel m(f, {{0, pts({0})}});
  Entailment e = entails_sub(m, *parse_sub("p0 * p0"), *parse_sub("p0"));
  CHECK_FALSE(e.holds);
  CHECK(f.x_name(e.witness) == "x1");
  CHECK(entails_sub(m, *parse_sub("p0 * p0"), *parse_sub("top")).holds);
}

TEST_CASE("valuations must be stable, the closing helper closes") {
  TwoSortedFrame f = testgen::f1();
  CHECK_THROWS_AS(SubModel(f, {{0, pts({1})}}), EvalError);
  SubModel closed = SubModel::closing(f, {{0, pts({1})}});
  CHECK(closed.val(0) == f.x_all());
  SubModel m(f, {{0, pts({0})}});
  CHECK_THROWS_AS(eval_sub(m, *parse_sub("p7")), EvalError);
}

namespace {

// True when every subformula's extent is a closure fixpoint; on such inputs
// the denotations are genuine formal concepts and the extent-recursive and
// clause-by-clause evaluators must coincide.
bool subextents_stable(const SubModel& m, const Formula& f) {
  if (!m.frame().stable_x(eval_sub(m, f).extent)) return false;
  if (f.is_leaf()) return true;
  return subextents_stable(m, *f.lhs()) && subextents_stable(m, *f.rhs());
}

}  // namespace

TEST_CASE("the fast and reference evaluators agree on concept-valued inputs") {
  std::vector<FormulaPtr> formulas = testgen::sample_sub_formulas(60, 3, 2, 777);
  std::uint64_t agreements = 0, gated = 0;
  auto check_model = [&](const SubModel& m) {
    const TwoSortedFrame& f = m.frame();
    for (const auto& phi : formulas) {
      ConceptDenotation fast = eval_sub(m, *phi);
      ConceptDenotation ref = eval_sub_reference(m, *phi);
      REQUIRE(fast.intent == f.polar_right(fast.extent));
      REQUIRE(f.costable_y(fast.intent));
      if (subextents_stable(m, *phi)) {
        REQUIRE(fast.extent == ref.extent);
        REQUIRE(fast.intent == ref.intent);
        REQUIRE(f.stable_x(fast.extent));
        ++agreements;
      } else {
        ++gated;
      }
    }
  };
  for (std::uint64_t g : testgen::d_passing_gals(2, 2))
    for (std::uint64_t r = 0; r < 256; r += 5) {
      TwoSortedFrame f = testgen::frame_from_bits(2, 2, g, r);
      SetOps ops(f);
      for (Mask v0 : ops.stable_sets())
        for (Mask v1 : ops.stable_sets()) check_model(SubModel(f, {{0, v0}, {1, v1}}));
    }
  // sampled larger frames
  std::mt19937_64 rng(31337);
  auto gals = testgen::d_passing_gals(3, 3);
  for (int round = 0; round < 40; ++round) {
    TwoSortedFrame f = testgen::frame_from_bits(
        3, 3, gals[rng() % gals.size()], rng() & ((std::uint64_t{1} << 27) - 1));
    SetOps ops(f);
    const auto& st = ops.stable_sets();
    check_model(SubModel(f, {{0, st[rng() % st.size()]}, {1, st[rng() % st.size()]}}));
  }
  CHECK(agreements > 1000);            // the gate leaves plenty of cases
  CHECK(gated < agreements);           // and only trims the twisted minority
}

TEST_CASE("the evaluators agree everywhere on residual-closed frames") {
  std::vector<FormulaPtr> formulas = testgen::sample_sub_formulas(40, 3, 2, 777);
  int frames = 0;
  for (std::uint64_t g : testgen::d_passing_gals(2, 2))
    for (std::uint64_t r = 0; r < 256; r += 3) {
      TwoSortedFrame f = testgen::frame_from_bits(2, 2, g, r);
      SetOps ops(f);
      if (!ops.residual_closed()) continue;
      ++frames;
      for (Mask v0 : ops.stable_sets())
        for (Mask v1 : ops.stable_sets()) {
          SubModel m(f, {{0, v0}, {1, v1}});
          for (const auto& phi : formulas) {
            ConceptDenotation fast = eval_sub(m, *phi);
            ConceptDenotation ref = eval_sub_reference(m, *phi);
            REQUIRE(fast.extent == ref.extent);
            REQUIRE(fast.intent == ref.intent);
            REQUIRE(f.stable_x(fast.extent));
          }
        }
    }
  CHECK(frames > 0);
}

TEST_CASE("a twisted relation can push an implication extent off the stable sets") {
  // The pinned witness: with the only triple at x0 and bottom on the right,
  // the raw residual keeps exactly x1, whose closure is the whole carrier.
  TwoSortedFrame f = testgen::f1r();
  SubModel m(f, {{0, pts({0})}});
  FormulaPtr phi = parse_sub("p0 -> bot");
  ConceptDenotation fast = eval_sub(m, *phi);
  CHECK(fast.extent == pts({1}));
  CHECK_FALSE(f.stable_x(fast.extent));
  // The clause-by-clause route reads the antecedent through the intent and
  // lands on the closure instead once the formula is nested deeper.
  ConceptDenotation ref = eval_sub_reference(m, *phi);
  CHECK(ref.extent == fast.extent);
  FormulaPtr nested = parse_sub("p0 -> (p0 -> bot)");
  CHECK(eval_sub(m, *nested).extent != eval_sub_reference(m, *nested).extent);
}

TEST_CASE("sorted modal evaluation") {
  TwoSortedFrame f = testgen::fneq();
  ML2Model m(f, {{0, pts({0})}}, {});
  CHECK(eval_ml2(m, *parse_ml2("<u>P0")) == pts({0}));
  CHECK(eval_ml2(m, *parse_ml2("[d]<u>P0")) == pts({0}));
  CHECK(eval_ml2(m, *parse_ml2("~P0")) == pts({1}));
  CHECK(eval_ml2(m, *parse_ml2("top@2")) == f.y_all());
  CHECK(eval_ml2(m, *parse_ml2("bot@1")) == 0u);

  TwoSortedFrame g = testgen::f1r();
  ML2Model m2(g, {{0, pts({0})}, {1, pts({0})}}, {});
  CHECK(eval_ml2(m2, *parse_ml2("P0 * P1")) == pts({0}));
  CHECK_THROWS_AS(eval_ml2(m2, *parse_ml2("Q5")), EvalError);
}

TEST_CASE("derived diamonds equal their negation expansions") {
  std::mt19937_64 rng(2100);
  auto gals = testgen::d_passing_gals(2, 2);
  for (int round = 0; round < 60; ++round) {
    TwoSortedFrame f = testgen::frame_from_bits(2, 2, gals[rng() % gals.size()],
                                                rng() & 255u);
    ML2Model m(f, {{0, (Mask)(rng() & f.x_all())}}, {{0, (Mask)(rng() & f.y_all())}});
    SortedFormulaPtr p = SortedFormula::atom1(0), q = SortedFormula::atom2(0);
    CHECK(eval_ml2(m, *SortedFormula::dia_up(p)) ==
          eval_ml2(m, *SortedFormula::neg(SortedFormula::box_up(SortedFormula::neg(p)))));
    CHECK(eval_ml2(m, *SortedFormula::dia_down(q)) ==
          eval_ml2(m, *SortedFormula::neg(SortedFormula::box_down(SortedFormula::neg(q)))));
  }
}

TEST_CASE("entailment includes sort checking and trivial laws") {
  SubModel m = fm3_model();
  CHECK(entails_sub(m, *parse_sub("p0 & p1"), *parse_sub("top")).holds);
  TwoSortedFrame f = testgen::fneq();
  ML2Model m2(f, {{0, pts({0})}}, {{0, pts({1})}});
  CHECK_THROWS_AS(entails_ml2(m2, *parse_ml2("P0"), *parse_ml2("Q0")), SortError);
  CHECK(entails_ml2(m2, *parse_ml2("P0"), *parse_ml2("[d]<u>P0")).holds);
}

TEST_CASE("monotone fragments are monotone in the valuation") {
  std::mt19937_64 rng(8842);
  auto gals = testgen::d_passing_gals(2, 2);
  std::vector<FormulaPtr> formulas;
  for (const auto& f : testgen::sample_sub_formulas(200, 3, 2, 31)) {
    bool has_imp = false;
    std::function<void(const Formula&)> scan = [&](const Formula& n) {
      if (n.kind() == Formula::Kind::RImp || n.kind() == Formula::Kind::LImp) has_imp = true;
      if (!n.is_leaf()) {
        scan(*n.lhs());
        scan(*n.rhs());
      }
    };
    scan(*f);
    if (!has_imp) formulas.push_back(f);
  }
  REQUIRE(formulas.size() > 10);
  for (int round = 0; round < 100; ++round) {
    TwoSortedFrame f = testgen::frame_from_bits(2, 2, gals[rng() % gals.size()], rng() & 255u);
    SetOps ops(f);
    const auto& st = ops.stable_sets();
    Mask small0 = st[rng() % st.size()], small1 = st[rng() % st.size()];
    // grow each valuation to a stable superset
    std::vector<Mask> bigger0, bigger1;
    for (Mask s : st) {
      if (subset_of(small0, s)) bigger0.push_back(s);
      if (subset_of(small1, s)) bigger1.push_back(s);
    }
    SubModel lo(f, {{0, small0}, {1, small1}});
    SubModel hi(f, {{0, bigger0[rng() % bigger0.size()]}, {1, bigger1[rng() % bigger1.size()]}});
    for (const auto& phi : formulas)
      CHECK(subset_of(eval_sub(lo, *phi).extent, eval_sub(hi, *phi).extent));
  }
}
