#include <catch2/catch_amalgamated.hpp>

#include "polarity/algebra.hpp"
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

TEST_CASE("powerset fusion from the ternary relation") {
  TwoSortedFrame f = testgen::f1r();
  SetOps ops(f);
  CHECK(ops.odot(pts({0}), pts({0})) == pts({0}));
  CHECK(ops.odot(pts({0}), 0) == 0u);
  CHECK(ops.odot(0, pts({0})) == 0u);

  TwoSortedFrame w = testgen::fw();
  SetOps wops(w);
  CHECK(wops.odot(pts({0}), pts({0})) == pts({1}));
}

TEST_CASE("powerset residuals") {
  TwoSortedFrame f = testgen::f1r();
  SetOps ops(f);
  CHECK(ops.rres(pts({0}), pts({0})) == f.x_all());
  CHECK(ops.rres(0, pts({0})) == f.x_all());

  // Frozen by evaluating the comprehension by hand: only x1 survives,
  // because x1 R x0 x0 puts x1 outside {x0} at the point x0.
  TwoSortedFrame w = testgen::fw();
  SetOps wops(w);
  CHECK(wops.rres(pts({0}), pts({0})) == pts({1}));
  CHECK(wops.rres(pts({0}), pts({0})) == oracle::rres(w, pts({0}), pts({0})));
}

TEST_CASE("residuation triple in the powerset algebra, exhaustively") {
  for (std::uint64_t g : testgen::d_passing_gals(2, 2))
    for (std::uint64_t r = 0; r < 256; ++r) {
      TwoSortedFrame f = testgen::frame_from_bits(2, 2, g, r);
      SetOps ops(f);
      for (Mask u = 0; u <= f.x_all(); ++u)
        for (Mask up = 0; up <= f.x_all(); ++up)
          for (Mask w = 0; w <= f.x_all(); ++w) {
            bool a = subset_of(ops.odot(u, up), w);
            bool b = subset_of(up, ops.rres(u, w));
            bool c = subset_of(u, ops.lres(w, up));
            REQUIRE(a == b);
            REQUIRE(b == c);
          }
    }
}

TEST_CASE("powerset operators match the comprehension oracles") {
  std::mt19937_64 rng(4242);
  for (int round = 0; round < 150; ++round) {
    int nx = 1 + (int)(rng() % 3), ny = 1 + (int)(rng() % 3);
    auto gals = testgen::d_passing_gals(nx, ny);
    TwoSortedFrame f = testgen::frame_from_bits(
        nx, ny, gals[rng() % gals.size()],
        rng() & ((std::uint64_t{1} << (nx * nx * nx)) - 1));
    SetOps ops(f);
    for (Mask u = 0; u <= f.x_all(); ++u)
      for (Mask w = 0; w <= f.x_all(); ++w) {
        CHECK(ops.odot(u, w) == oracle::odot(f, u, w));
        CHECK(ops.rres(u, w) == oracle::rres(f, u, w));
        CHECK(ops.lres(u, w) == oracle::lres(f, u, w));
      }
  }
}

TEST_CASE("stable fusion closes the powerset fusion") {
  TwoSortedFrame f = testgen::f1r();
  SetOps ops(f);
  CHECK(ops.overt(pts({0}), pts({0})) == pts({0}));
  CHECK(ops.overt(pts({0}), 0) == f.closure_x(0));
  CHECK(ops.sres_r(pts({0}), pts({0})) == f.x_all());
  CHECK(ops.sres_r(pts({0}), f.x_all()) == f.x_all());

  TwoSortedFrame m = testgen::fm3({{0, 0, 1}});
  SetOps mops(m);
  CHECK(mops.overt(pts({0}), pts({1})) == pts({0}));
  CHECK_FALSE(mops.stable_residuation_triple().has_value());

  // Stable operators refuse non-stable arguments.
  TwoSortedFrame g = testgen::f1();
  SetOps gops(g);
  CHECK_THROWS_AS(gops.overt(pts({1}), pts({0})), EvalError);
  CHECK_THROWS_AS(gops.sres_r(pts({1}), pts({0})), EvalError);
}

TEST_CASE("dual fusion agrees along both defining routes") {
  TwoSortedFrame f = testgen::f1r();
  SetOps ops(f);
  CHECK(ops.overt_dual(pts({0}), pts({0})) == pts({0}));
  CHECK(ops.overt_dual(f.y_all(), f.y_all()) ==
        f.polar_right(f.closure_x(ops.odot(f.polar_left(f.y_all()), f.polar_left(f.y_all())))));

  // Exhaustive cross-check of the polar form against the intersection form.
  for (std::uint64_t g : testgen::d_passing_gals(2, 2))
    for (std::uint64_t r = 0; r < 256; r += 7) {
      TwoSortedFrame fr = testgen::frame_from_bits(2, 2, g, r);
      SetOps o(fr);
      for (Mask b : o.costable_sets())
        for (Mask d : o.costable_sets()) {
          Mask la = fr.polar_left(b), lc = fr.polar_left(d);
          Mask meet = fr.y_all();
          for_each_point(la, [&](int u) {
            for_each_point(lc, [&](int up) { meet &= fr.r_dual(u, up); });
          });
          CHECK(o.overt_dual(b, d) == meet);
        }
    }
}

TEST_CASE("frame conditions correspond to fusion laws, exhaustively at two points") {
  int checked = 0;
  for (std::uint64_t g : testgen::d_passing_gals(2, 2))
    for (std::uint64_t r = 0; r < 256; ++r) {
      TwoSortedFrame f = testgen::frame_from_bits(2, 2, g, r);
      SetOps ops(f);
      bool c1 = f.check_condition(FrameCondition::C1).holds;
      bool c2 = f.check_condition(FrameCondition::C2).holds;
      bool c3 = f.check_condition(FrameCondition::C3).holds;
      bool c4 = f.check_condition(FrameCondition::C4).holds;
      REQUIRE(c1 == oracle::odot_associative_full(f));
      REQUIRE(c2 == oracle::odot_commutative_full(f));
      REQUIRE(c4 == oracle::odot_contractive_full(f));
      if (c3) REQUIRE(oracle::odot_thinning_on_increasing_full(f));
      if (c2 && c3) REQUIRE(oracle::odot_meet_bounded_on_increasing_full(f));
      // The singleton-generated law checkers agree with the full quantification.
      REQUIRE((ops.odot_associative() == std::nullopt) == c1);
      REQUIRE((ops.odot_commutative() == std::nullopt) == c2);
      REQUIRE((ops.odot_contractive() == std::nullopt) == c4);
      ++checked;
    }
  CHECK(checked == 7 * 256);
}

TEST_CASE("the meet bound needs the increasing restriction") {
  // C2 and C3 hold here, yet fusing the non-increasing singleton {x1} with
  // itself lands on x0.
  TwoSortedFrame f =
      TwoSortedFrame::make({"x0", "x1"}, {"y0", "y1"}, {{0, 0}}, {{0, 1, 1}});
  CHECK(f.check_condition(FrameCondition::C2).holds);
  CHECK(f.check_condition(FrameCondition::C3).holds);
  SetOps ops(f);
  CHECK(ops.odot_meet_bounded().has_value());
  CHECK_FALSE(ops.odot_meet_bounded_on_increasing().has_value());
}

TEST_CASE("powerset laws transfer to stable sets") {
  for (std::uint64_t g : testgen::d_passing_gals(2, 2))
    for (std::uint64_t r = 0; r < 256; ++r) {
      TwoSortedFrame f = testgen::frame_from_bits(2, 2, g, r);
      SetOps ops(f);
      if (!ops.odot_associative()) CHECK_FALSE(ops.overt_associative().has_value());
      if (!ops.odot_commutative()) CHECK_FALSE(ops.overt_commutative().has_value());
      if (!ops.odot_contractive()) CHECK_FALSE(ops.overt_contractive().has_value());
      if (!ops.odot_thinning_on_increasing()) CHECK_FALSE(ops.overt_thinning().has_value());
      CHECK_FALSE(ops.stable_residuation_triple().has_value());
    }
}

TEST_CASE("stable fusion distributes over stable joins") {
  for (std::uint64_t g : testgen::d_passing_gals(2, 2))
    for (std::uint64_t r = 0; r < 256; r += 3) {
      TwoSortedFrame f = testgen::frame_from_bits(2, 2, g, r);
      SetOps ops(f);
      for (Mask a : ops.stable_sets())
        for (Mask c : ops.stable_sets())
          for (Mask cp : ops.stable_sets()) {
            CHECK(ops.overt(a, ops.join_x(c, cp)) ==
                  ops.join_x(ops.overt(a, c), ops.overt(a, cp)));
            CHECK(ops.overt(ops.join_x(c, cp), a) ==
                  ops.join_x(ops.overt(c, a), ops.overt(cp, a)));
          }
    }
}
