#include <catch2/catch_amalgamated.hpp>

#include "polarity/parser.hpp"
#include "polarity/translate.hpp"
#include "support/gen.hpp"

using namespace polarity;

namespace {
Mask pts(std::initializer_list<int> xs) {
  Mask m = 0;
  for (int x : xs) m |= unit_mask(x);
  return m;
}

std::string bullet_text(const char* sub) { return print_formula(bullet(*parse_sub(sub))); }
std::string circ_text(const char* sub) { return print_formula(circ(*parse_sub(sub))); }
}  // namespace

TEST_CASE("extent translation, row by row") {
  CHECK(bullet_text("p0") == "[d]<u>P0");
  CHECK(bullet_text("top") == "top@1");
  CHECK(bullet_text("bot") == "bot@1");
  CHECK(bullet_text("p0 & p1") == "[d]<u>P0 & [d]<u>P1");
  CHECK(bullet_text("p0 | p1") == "[d](<u>[d]<u>P0 | <u>[d]<u>P1)");
  CHECK(bullet_text("p0 * p1") == "[d]<u>([d]<u>P0 * [d]<u>P1)");
  CHECK(bullet_text("p0 -> p1") == "[d]<u>P0 -> [d]<u>P1");
  CHECK(bullet_text("p1 <- p0") == "[d]<u>P1 <- [d]<u>P0");
}

TEST_CASE("intent co-translation, row by row") {
  CHECK(circ_text("p0") == "[u]~P0");
  CHECK(circ_text("top") == "bot@2");
  CHECK(circ_text("bot") == "top@2");
  CHECK(circ_text("p0 & p1") == "[u](<d>[u]~P0 | <d>[u]~P1)");
  CHECK(circ_text("p0 | p1") == "[u]~P0 & [u]~P1");
  CHECK(circ_text("p0 * p1") == "[u]~([d]<u>P0 * [d]<u>P1)");
  CHECK(circ_text("p0 -> p1") == "[u]~([d]<u>P0 -> [d]<u>P1)");
  CHECK(circ_text("p1 <- p0") == "[u]~([d]<u>P1 <- [d]<u>P0)");
}

TEST_CASE("translation output re-parses and stays well sorted") {
  std::mt19937_64 rng(99182);
  for (int i = 0; i < 200; ++i) {
    FormulaPtr f = testgen::random_sub(rng, (int)(rng() % 4), 3);
    SortedFormulaPtr b = bullet(*f);
    SortedFormulaPtr c = circ(*f);
    CHECK(b->sort() == Sort::One);
    CHECK(c->sort() == Sort::Two);
    CHECK(same_formula(*parse_ml2(print_formula(b)), *b));
    CHECK(same_formula(*parse_ml2(print_formula(c)), *c));
  }
}

TEST_CASE("the induced substructural model closes the interpretations") {
  TwoSortedFrame f = testgen::fneq();
  ML2Model m(f, {{0, pts({0})}}, {});
  CHECK(induce_sub_model(m).val(0) == pts({0}));

  ML2Model m0(f, {{0, 0u}}, {});
  CHECK(induce_sub_model(m0).val(0) == f.closure_x(0));

  TwoSortedFrame g = testgen::f1();
  ML2Model m1(g, {{0, pts({1})}}, {});
  CHECK(induce_sub_model(m1).val(0) == g.x_all());
}

TEST_CASE("faithfulness identities on the pinned examples") {
  TwoSortedFrame f = testgen::fneq();
  ML2Model m(f, {{0, pts({0})}, {1, pts({1})}}, {});
  FaithfulnessReport top_rep = verify_faithfulness(m, *parse_sub("top"));
  CHECK(top_rep.all_pass);
  for (const auto& c : top_rep.checks)
    if (c.name.rfind("extent", 0) == 0) CHECK(c.lhs == f.x_all());

  TwoSortedFrame m3 = testgen::fm3();
  ML2Model mm(m3, {{0, pts({0})}, {1, pts({1})}}, {});
  FaithfulnessReport disj = verify_faithfulness(mm, *parse_sub("p0 | p1"));
  CHECK(disj.all_pass);
  CHECK(disj.checks[0].lhs == m3.x_all());

  TwoSortedFrame f1r = testgen::f1r();
  ML2Model mf(f1r, {{0, pts({0})}, {1, pts({0})}}, {});
  FaithfulnessReport fuse_rep = verify_faithfulness(mf, *parse_sub("p0 * p1"));
  CHECK(fuse_rep.all_pass);
  for (const auto& c : fuse_rep.checks)
    if (c.name.rfind("extent", 0) == 0) CHECK(c.lhs == pts({0}));
}

TEST_CASE("sequent transfer agrees along all three routes") {
  TwoSortedFrame f = testgen::fneq();
  ML2Model m(f, {{0, pts({0})}}, {});
  SequentTransfer same = sequent_transfer(m, *parse_sub("p0"), *parse_sub("p0"));
  CHECK(same.sub.holds);
  CHECK(same.bullet_route.holds);
  CHECK(same.circ_route.holds);

  TwoSortedFrame m3 = testgen::fm3();
  ML2Model mm(m3, {{0, pts({0})}, {1, pts({1})}, {2, pts({2})}}, {});
  SequentTransfer dist =
      sequent_transfer(mm, *parse_sub("(p0 | p1) & p2"), *parse_sub("(p0 & p2) | (p1 & p2)"));
  CHECK_FALSE(dist.sub.holds);
  CHECK_FALSE(dist.bullet_route.holds);
  CHECK_FALSE(dist.circ_route.holds);

  TwoSortedFrame w = testgen::fw();
  ML2Model mw(w, {{0, pts({0})}, {1, pts({0})}}, {});
  SequentTransfer weak = sequent_transfer(mw, *parse_sub("p0 * p1"), *parse_sub("p1"));
  CHECK_FALSE(weak.sub.holds);
  CHECK_FALSE(weak.bullet_route.holds);
  CHECK_FALSE(weak.circ_route.holds);
}

TEST_CASE("faithfulness identities across a generated population") {
  std::vector<FormulaPtr> formulas = testgen::sample_sub_formulas(40, 3, 2, 424242);
  std::mt19937_64 rng(88);
  std::uint64_t closed_frames = 0;
  for (std::uint64_t g : testgen::d_passing_gals(2, 2))
    for (int rr = 0; rr < 24; ++rr) {
      std::uint64_t r = rng() & 255u;
      TwoSortedFrame f = testgen::frame_from_bits(2, 2, g, r);
      SetOps ops(f);
      bool closed = ops.residual_closed();
      if (closed) ++closed_frames;
      for (Mask i0 = 0; i0 <= f.x_all(); ++i0)
        for (Mask i1 = 0; i1 <= f.x_all(); ++i1) {
          ML2Model m(f, {{0, i0}, {1, i1}}, {});
          for (const auto& phi : formulas) {
            FaithfulnessReport rep = verify_faithfulness(m, *phi);
            INFO(print_formula(phi));
            INFO(f.to_text());
            // the extent identity with the translation and the complement
            // form of the intent hold on every frame
            REQUIRE(rep.checks[0].pass);
            REQUIRE(rep.checks[5].pass);
            // on residual-closed frames all seven identities hold
            if (closed) REQUIRE(rep.all_pass);
          }
          SequentTransfer st = sequent_transfer(m, *formulas[rr % formulas.size()],
                                                *formulas[(rr + 7) % formulas.size()]);
          REQUIRE(st.sub.holds == st.bullet_route.holds);
          if (closed) REQUIRE(st.agree());
        }
    }
  CHECK(closed_frames > 0);
}

TEST_CASE("the closure identities pick out the residual-closed frames") {
  // Pinned witness: one triple at x0, bottom as consequent. The translated
  // extent is not a closure fixpoint, so the two closure identities and the
  // co-translation identity break while the direct ones survive.
  TwoSortedFrame f = testgen::f1r();
  ML2Model m(f, {{0, pts({0})}}, {});
  FaithfulnessReport rep = verify_faithfulness(m, *parse_sub("p0 -> bot"));
  CHECK_FALSE(rep.all_pass);
  CHECK(rep.checks[0].pass);        // extent sub = bullet
  CHECK_FALSE(rep.checks[2].pass);  // extent sub = closure bullet
  CHECK_FALSE(rep.checks[3].pass);  // extent bullet = closure bullet
  CHECK(rep.checks[5].pass);        // intent sub = boxup neg bullet
  SetOps ops(f);
  CHECK_FALSE(ops.residual_closed());
}
