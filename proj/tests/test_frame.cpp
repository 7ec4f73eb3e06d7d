#include <catch2/catch_amalgamated.hpp>

#include "polarity/frame.hpp"
#include "support/gen.hpp"
#include "support/oracle.hpp"

using namespace polarity;

namespace {
Mask pts(std::initializer_list<int> xs) {
  Mask m = 0;
  for (int x : xs) m |= unit_mask(x);
  return m;
}
}  // namespace

TEST_CASE("polars on the crossed fixture act as complementation") {
  TwoSortedFrame f = testgen::fneq();
  CHECK(f.polar_right(pts({0})) == pts({1}));
  CHECK(f.polar_right(pts({1})) == pts({0}));
  CHECK(f.polar_right(0) == f.y_all());
  CHECK(f.polar_left(pts({1})) == pts({0}));
}

TEST_CASE("polars on the chain fixture") {
  TwoSortedFrame f = testgen::f1();
  CHECK(f.polar_right(pts({0})) == pts({0}));
  CHECK(f.polar_left(pts({0})) == pts({0}));
  CHECK(f.polar_right(pts({1})) == 0u);
  CHECK(f.polar_left(0) == f.x_all());
}

TEST_CASE("residuated modalities and closure") {
  TwoSortedFrame f = testgen::fneq();
  // I is the diagonal here.
  CHECK(f.dia_up(pts({0})) == pts({0}));
  CHECK(f.box_down(pts({0})) == pts({0}));
  CHECK(f.dia_up(0) == 0u);
  CHECK(f.box_down(f.y_all()) == f.x_all());

  TwoSortedFrame g = testgen::f1();
  CHECK(g.closure_x(pts({1})) == g.x_all());
  CHECK(g.closure_x(g.x_all()) == g.x_all());
  CHECK(g.closure_x(0) == 0u);
  for (Mask u = 0; u <= g.x_all(); ++u) {
    CHECK(subset_of(u, g.box_down(g.dia_up(u))));
    CHECK(g.closure_x(g.closure_x(u)) == g.closure_x(u));
  }
}

TEST_CASE("stable set enumeration") {
  CHECK(testgen::f1().stable_sets() == std::vector<Mask>{0u, pts({0}), pts({0, 1})});
  CHECK(testgen::fneq().stable_sets() == std::vector<Mask>{0u, pts({0}), pts({1}), pts({0, 1})});
  // Three incomparable atoms over bottom and top: the M3 shape.
  CHECK(testgen::fm3().stable_sets() ==
        std::vector<Mask>{0u, pts({0}), pts({1}), pts({2}), pts({0, 1, 2})});
  TwoSortedFrame big = testgen::fm3();
  CHECK_THROWS_AS(big.stable_sets(2), FrameError);
}

TEST_CASE("preorder and upsets") {
  TwoSortedFrame f = testgen::f1();
  CHECK(f.preceq_x(1, 0));
  CHECK_FALSE(f.preceq_x(0, 1));
  CHECK(f.gamma_x(1) == pts({0, 1}));
  CHECK(f.gamma_x(0) == pts({0}));
  TwoSortedFrame g = testgen::fneq();
  CHECK(g.gamma_x(0) == pts({0}));
  for (int x = 0; x < g.x_size(); ++x) CHECK(g.preceq_x(x, x));
}

TEST_CASE("dual relation at a pair of points") {
  TwoSortedFrame f = testgen::f1r();
  CHECK(f.r_dual(0, 0) == pts({0}));
  CHECK(f.r_dual(0, 1) == f.y_all());  // empty relation row: polar of the empty set
  TwoSortedFrame m = testgen::fm3({{0, 1, 2}});
  CHECK(m.r_dual(1, 2) == pts({0}));
}

TEST_CASE("frame conditions with deterministic witnesses") {
  TwoSortedFrame f = testgen::f1r();
  CHECK(f.check_condition(FrameCondition::C1).holds);
  CHECK(f.check_condition(FrameCondition::C2).holds);
  CHECK(f.check_condition(FrameCondition::C3).holds);
  auto c4 = f.check_condition(FrameCondition::C4);
  CHECK_FALSE(c4.holds);
  CHECK(c4.witness == std::vector<int>{1});

  TwoSortedFrame empty_r = testgen::f1();
  CHECK(empty_r.check_condition(FrameCondition::C1).holds);
  CHECK(empty_r.check_condition(FrameCondition::C2).holds);
  CHECK(empty_r.check_condition(FrameCondition::C3).holds);
  auto c4e = empty_r.check_condition(FrameCondition::C4);
  CHECK_FALSE(c4e.holds);
  CHECK(c4e.witness == std::vector<int>{0});

  TwoSortedFrame diag =
      TwoSortedFrame::make({"x0", "x1"}, {"y0", "y1"}, {{0, 0}}, {{0, 0, 0}, {1, 1, 1}});
  CHECK(diag.check_condition(FrameCondition::C4).holds);

  // The Boolean-strength thinning variant is stronger than C3.
  TwoSortedFrame bck =
      TwoSortedFrame::make({"x0", "x1"}, {"y0", "y1"}, {{0, 0}}, {{0, 1, 1}});
  CHECK(bck.check_condition(FrameCondition::C3).holds);
  CHECK_FALSE(bck.check_c3_boolean().holds);
}

TEST_CASE("classification") {
  auto labels = testgen::f1r().classify();
  CHECK(labels == std::vector<FrameClassLabel>{FrameClassLabel::NFL, FrameClassLabel::FL,
                                               FrameClassLabel::BCI, FrameClassLabel::BCK});
  CHECK(testgen::f1().classify() ==
        std::vector<FrameClassLabel>{FrameClassLabel::NFL, FrameClassLabel::FL,
                                     FrameClassLabel::BCI, FrameClassLabel::BCK});
  CHECK(testgen::fw().in_class(FrameClassLabel::NFL));
  CHECK_FALSE(testgen::fw().in_class(FrameClassLabel::BCK));
}

TEST_CASE("frame files load, validate and report line numbers") {
  ModelFile mf = load_model_text(
      "# crossed fixture\n"
      "frame\n"
      "X x0 x1\n"
      "Y y0 y1\n"
      "G x0 y1\n"
      "G x1 y0\n"
      "R x0 x0 x0\n"
      "val p0 = x0\n"
      "end\n");
  CHECK(mf.frame.x_size() == 2);
  CHECK(mf.frame.gal(0, 1));
  CHECK(mf.frame.r_has(0, 0, 0));
  CHECK(mf.sub_vals.at(0) == pts({0}));

  auto fails_at = [](const std::string& text, int line) {
    try {
      load_model_text(text);
    } catch (const FrameError& e) {
      return e.line == line;
    }
    return false;
  };
  CHECK(fails_at("frame\nX x0\nY y0\nG x0 y9\nend\n", 4));
  CHECK(fails_at("frame\nX x0\nY y0\nZ x0\nend\n", 4));
  CHECK(fails_at("frame\nX x0\nY y0\nR x0 x0\nend\n", 4));
  CHECK_THROWS_AS(load_model_text("frame\nX x0\nY y0\n"), FrameError);       // missing end
  CHECK_THROWS_AS(load_model_text("frame\nX x0 x0\nY y0\nend\n"), FrameError);

  // Violating the D-conditions is a hard load error.
  CHECK_THROWS_WITH(load_model_text("frame\nX x0\nY y0\nG x0 y0\nend\n"),
                    Catch::Matchers::ContainsSubstring("condition D"));
}

TEST_CASE("model files round-trip through their printed form") {
  TwoSortedFrame f = testgen::f1r();
  ModelFile mf{f, {{0, pts({0})}}, {{0, pts({1})}}, {{1, pts({0, 1})}}};
  ModelFile back = load_model_text(model_to_text(mf));
  CHECK(back.frame.to_text() == f.to_text());
  CHECK(back.sub_vals == mf.sub_vals);
  CHECK(back.iota1 == mf.iota1);
  CHECK(back.iota2 == mf.iota2);
}

TEST_CASE("galois laws hold exhaustively on small frames") {
  for (int nx = 1; nx <= 3; ++nx)
    for (int ny = 1; ny <= 3; ++ny)
      for (std::uint64_t g : testgen::d_passing_gals(nx, ny)) {
        TwoSortedFrame f = testgen::frame_from_bits(nx, ny, g, 0);
        for (Mask u = 0; u <= f.x_all(); ++u) {
          CHECK(f.polar_right(u) == f.box_up(f.x_all() & ~u));
          for (Mask v = 0; v <= f.y_all(); ++v) {
            bool l = subset_of(u, f.polar_left(v));
            bool r = subset_of(v, f.polar_right(u));
            CHECK(l == r);
          }
        }
        for (Mask v = 0; v <= f.y_all(); ++v)
          CHECK(f.box_down(v) == f.polar_left(f.y_all() & ~v));
        // D-conditions force box below diamond.
        for (Mask v = 0; v <= f.y_all(); ++v) CHECK(subset_of(f.box_down(v), f.dia_down(v)));
        for (Mask u = 0; u <= f.x_all(); ++u) CHECK(subset_of(f.box_up(u), f.dia_up(u)));
        // Stable sets: increasing, intersection-closed, containing X.
        std::vector<Mask> stables = f.stable_sets();
        CHECK(stables == oracle::stable_sets(f));
        CHECK(std::find(stables.begin(), stables.end(), f.x_all()) != stables.end());
        for (Mask a : stables) {
          CHECK(f.increasing_x(a));
          for (Mask b : stables)
            CHECK(std::find(stables.begin(), stables.end(), a & b) != stables.end());
        }
        std::vector<Mask> costables = f.costable_sets();
        CHECK(std::find(costables.begin(), costables.end(), f.y_all()) != costables.end());
        for (Mask a : costables)
          for (Mask b : costables)
            CHECK(std::find(costables.begin(), costables.end(), a & b) != costables.end());
      }
}

TEST_CASE("mask operators agree with the comprehension oracles") {
  std::mt19937_64 rng(99);
  for (int round = 0; round < 200; ++round) {
    int nx = 1 + (int)(rng() % 4), ny = 1 + (int)(rng() % 4);
    auto gals = testgen::d_passing_gals(nx, ny);
    std::uint64_t g = gals[rng() % gals.size()];
    std::uint64_t r = rng() & ((std::uint64_t{1} << (nx * nx * nx)) - 1);
    TwoSortedFrame f = testgen::frame_from_bits(nx, ny, g, r);
    for (int i = 0; i < 8; ++i) {
      Mask u = (Mask)(rng() & f.x_all());
      Mask v = (Mask)(rng() & f.y_all());
      CHECK(f.polar_right(u) == oracle::polar_right(f, u));
      CHECK(f.polar_left(v) == oracle::polar_left(f, v));
      CHECK(f.closure_x(u) == oracle::closure_x(f, u));
    }
  }
}
