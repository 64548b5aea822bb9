#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "precond/error.hpp"
#include "precond/selection.hpp"
#include "support.hpp"

using namespace precond;
using support::at;
using support::catalog_op;

namespace {

std::vector<std::string> worlds(std::size_t k) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < k; ++i) out.push_back(std::to_string(i));
  return out;
}

ErrorCode thrown(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Parse;
}

}  // namespace

TEST(Selection, WellOrderRelations) {
  const auto f = from_well_order(worlds(3), {0, 1, 2});
  const WorldSet a = 0b110;
  EXPECT_EQ(f.successors(a, 0), WorldSet{0b010});
  EXPECT_EQ(f.successors(a, 1), WorldSet{0b010});
  EXPECT_EQ(f.successors(a, 2), WorldSet{0b100});
  for (std::size_t w = 0; w < 3; ++w) EXPECT_EQ(f.successors(0, w), WorldSet{0});
  for (WorldSet s = 0; s < 8; ++s)
    for (std::size_t w = 0; w < 3; ++w)
      if (s >> w & 1) EXPECT_TRUE(f.related(s, w, w));
}

TEST(Selection, WellOrdersPassAllProperties) {
  for (std::size_t k = 1; k <= 4; ++k) {
    std::vector<std::size_t> order(k);
    std::iota(order.begin(), order.end(), 0);
    do {
      const auto f = from_well_order(worlds(k), order);
      EXPECT_TRUE(check_frame(f).all_pass());
      EXPECT_TRUE(is_preconditional(selection_op(f)));
    } while (std::next_permutation(order.begin(), order.end()));
  }
}

TEST(Selection, WellOrderArrow) {
  const auto f = from_well_order(worlds(3), {0, 1, 2});
  EXPECT_EQ(arrow_selection(f, 0b110, 0b010), WorldSet{0b011});
  // No successor: vacuously in every A→B.
  for (WorldSet b = 0; b < 8; ++b) EXPECT_EQ(arrow_selection(f, 0, b), f.all());
}

TEST(Selection, ArrowMatchesDefinition) {
  const auto f = from_well_order(worlds(4), {2, 0, 3, 1});
  for (WorldSet a = 0; a < 16; ++a)
    for (WorldSet b = 0; b < 16; ++b) {
      WorldSet expected = 0;
      for (std::size_t w = 0; w < 4; ++w) {
        bool all = true;
        for (std::size_t v = 0; v < 4; ++v)
          if (f.related(a, w, v) && !(b >> v & 1)) all = false;
        if (all) expected |= WorldSet{1} << w;
      }
      EXPECT_EQ(arrow_selection(f, a, b), expected);
      EXPECT_EQ(selection_op(f)(a, b), expected);
    }
}

TEST(Selection, DensityFailureFixture) {
  const auto& f = catalog_selection_frame("density-failure").doc.frame;
  const auto r = check_frame(f);
  EXPECT_TRUE(r.success.pass);
  EXPECT_TRUE(r.centering.pass);
  EXPECT_TRUE(r.functionality.pass);
  ASSERT_FALSE(r.strong_density.pass);
  EXPECT_EQ(r.strong_density.witness->w, 0u);
  EXPECT_EQ(r.strong_density.witness->a, WorldSet{0b110});
  EXPECT_EQ(r.strong_density.witness->c, WorldSet{0b100});
  const auto op = selection_op(f);
  const auto p5 = check_axiom(op, AxiomId::P5);
  EXPECT_FALSE(p5.pass);
  EXPECT_EQ(all_counterexamples(op, AxiomId::P5).size(), 8u);
  for (AxiomId a : {AxiomId::P1, AxiomId::P2, AxiomId::P3, AxiomId::P4}) EXPECT_TRUE(check_axiom(op, a).pass);
}

TEST(Selection, SuccessFailure) {
  SelectionFrame f(worlds(3));
  f.set_centered_minimum();
  f.relate(0b001, 1, 2);
  const auto r = check_frame(f);
  EXPECT_FALSE(r.success.pass);
  EXPECT_EQ(r.success.witness->v, 2u);
}

TEST(Selection, CenteringFailure) {
  SelectionFrame f(worlds(2));
  f.set_centered_minimum();
  f.relate(0b11, 0, 1);
  EXPECT_FALSE(check_frame(f).centering.pass);
}

TEST(Selection, TooManyWorlds) {
  EXPECT_EQ(thrown([] { SelectionFrame f(worlds(kMaxWorlds + 1)); }), ErrorCode::TooLarge);
  EXPECT_EQ(thrown([] { from_well_order(worlds(3), {0, 0, 1}); }), ErrorCode::InvalidSpec);
}

TEST(Selection, FourElementMaterial) {
  const auto& op = catalog_op("b2-material");
  const auto& l = op.lattice();
  const auto bs = ba_to_selection(op);
  ASSERT_EQ(bs.atoms.size(), 2u);
  const Elem p = at(l, "p");
  const Elem np = at(l, "~p");
  EXPECT_EQ(bs.atoms, (std::vector<Elem>{p, np}));
  // World 0 is p, world 1 is ~p; p̂ = {0}.
  EXPECT_EQ(bs.frame.successors(0b01, 0), WorldSet{0b01});
  EXPECT_EQ(bs.frame.successors(0b01, 1), WorldSet{0});
  EXPECT_TRUE(bs.properties.all_pass());
}

TEST(Selection, EightElementWellOrderRoundTrip) {
  const auto& op = catalog_op("b3-wellorder");
  const auto bs = ba_to_selection(op);
  EXPECT_EQ(bs.frame, from_well_order(bs.frame.names(), {0, 1, 2}));
  const auto& l = op.lattice();
  for (WorldSet s = 0; s < 8; ++s)
    for (WorldSet t = 0; t < 8; ++t)
      EXPECT_EQ(bs.mask_to_element[arrow_selection(bs.frame, s, t)], op(bs.mask_to_element[s], bs.mask_to_element[t]));
  EXPECT_EQ(bs.mask_to_element[7], l.top());
}

TEST(Selection, WellOrderTransportedThroughPowerset) {
  // selection_op lives on the powerset; ba_to_selection must recover the same frame.
  for (const auto& order : std::vector<std::vector<std::size_t>>{{0, 1, 2}, {2, 0, 1}, {1, 2, 0}}) {
    const auto f = from_well_order(worlds(3), order);
    const auto bs = ba_to_selection(selection_op(f));
    EXPECT_EQ(bs.frame, from_well_order(bs.frame.names(), order));
  }
}

TEST(Selection, NonFunctionalFrameFailsNegationGate) {
  auto f = from_well_order(worlds(3), {0, 1, 2});
  f.relate(0b110, 0, 2);
  const auto r = check_frame(f);
  EXPECT_TRUE(r.strong_density.pass);
  EXPECT_FALSE(r.functionality.pass);
  const auto op = selection_op(f);
  EXPECT_TRUE(is_preconditional(op));
  EXPECT_TRUE(boolean_negation_import_failure(op).has_value());
  try {
    ba_to_selection(op);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::PreconditionFailed);
    EXPECT_NE(std::string(e.what()).find("NEGIMP"), std::string::npos);
  }
}

TEST(Selection, RequiresBooleanLattice) {
  EXPECT_EQ(thrown([] { ba_to_selection(catalog_op("chain3-heyting")); }), ErrorCode::NotBoolean);
}

TEST(Selection, FormatSet) {
  const SelectionFrame f(worlds(3));
  EXPECT_EQ(f.format_set(0b101), "{0,2}");
  EXPECT_EQ(f.format_set(0), "{}");
}
