#include <gtest/gtest.h>

#include <random>

#include "precond/error.hpp"
#include "support.hpp"

using namespace precond;

namespace {

const RelationalFrame& relframe() { return catalog_frame("relframe").doc.frame; }

PointSet set_of(const RelationalFrame& f, std::initializer_list<const char*> names) {
  PointSet s = f.empty_set();
  for (const char* n : names)
    for (std::size_t i = 0; i < f.size(); ++i)
      if (f.names()[i] == n) s.set(i);
  return s;
}

// The defining formula read literally: x is in A→B iff every y ◁ x that lies
// in A sees some z ∈ A∩B.
PointSet literal_arrow(const RelationalFrame& f, const PointSet& a, const PointSet& b) {
  PointSet out = f.empty_set();
  for (std::size_t x = 0; x < f.size(); ++x) {
    bool ok = true;
    for (std::size_t y = 0; y < f.size() && ok; ++y) {
      if (!f.related(y, x) || !a.test(y)) continue;
      bool seen = false;
      for (std::size_t z = 0; z < f.size() && !seen; ++z) seen = f.related(y, z) && a.test(z) && b.test(z);
      ok = seen;
    }
    out[x] = ok;
  }
  return out;
}

RelationalFrame random_frame(std::mt19937_64& rng, std::size_t m) {
  std::bernoulli_distribution edge(0.35);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < m; ++i) names.push_back("p" + std::to_string(i));
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t y = 0; y < m; ++y)
    for (std::size_t x = 0; x < m; ++x)
      if (edge(rng)) edges.emplace_back(y, x);
  return RelationalFrame("random", names, edges);
}

}  // namespace

TEST(Frames, ArrowMatchesLiteralDefinition) {
  std::mt19937_64 rng(3);
  std::vector<RelationalFrame> frames = {relframe()};
  for (int i = 0; i < 30; ++i) frames.push_back(random_frame(rng, 1 + i % 5));
  for (const auto& f : frames) {
    const std::size_t subsets = std::size_t{1} << f.size();
    for (std::size_t a = 0; a < subsets; ++a)
      for (std::size_t b = 0; b < subsets; ++b) {
        const PointSet sa(f.size(), a), sb(f.size(), b);
        ASSERT_EQ(arrow(f, sa, sb), literal_arrow(f, sa, sb));
      }
  }
}

TEST(Frames, RelframeEntries) {
  const auto& f = relframe();
  EXPECT_EQ(arrow(f, set_of(f, {"x", "y"}), set_of(f, {"x"})), set_of(f, {"x", "z"}));
  for (const auto& b : {f.empty_set(), set_of(f, {"x"}), f.full_set()}) EXPECT_EQ(arrow(f, f.empty_set(), b), f.full_set());
  EXPECT_EQ(arrow(f, f.full_set(), f.full_set()), f.full_set());
}

TEST(Frames, Closure) {
  const auto& f = relframe();
  EXPECT_EQ(closure(f, set_of(f, {"x"})), set_of(f, {"x"}));
  EXPECT_EQ(closure(f, f.empty_set()), f.empty_set());
  EXPECT_EQ(closure(f, f.full_set()), f.full_set());
  EXPECT_EQ(closure(f, set_of(f, {"y"})), set_of(f, {"x", "y"}));
}

TEST(Frames, SinglePointWithoutRelation) {
  const RelationalFrame f("lonely", {"p"}, {});
  EXPECT_EQ(closure(f, f.empty_set()), f.full_set());
  const auto fp = fixpoints(f);
  ASSERT_EQ(fp.size(), 1u);
  EXPECT_EQ(fp.set_of(0), f.full_set());
  EXPECT_TRUE(check_induced_preconditional(f).all_pass());
}

TEST(Frames, RelframeFixpoints) {
  const auto& f = relframe();
  const auto fp = fixpoints(f);
  const std::vector<PointSet> expected = {f.empty_set(),          set_of(f, {"x"}),      set_of(f, {"z"}),
                                          set_of(f, {"x", "y"}),  set_of(f, {"x", "z"}), set_of(f, {"w", "z"}),
                                          f.full_set()};
  EXPECT_EQ(fp.fixpoints(), expected);
  EXPECT_EQ(fp.index_of(set_of(f, {"x", "z"})), Elem{4});
  EXPECT_FALSE(fp.index_of(set_of(f, {"y"})).has_value());
  EXPECT_EQ(fp.arrow_op(), *catalog_entry("relframe-lattice").doc.op);
}

TEST(Frames, FixpointLatticeOperations) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 40; ++i) {
    const auto f = random_frame(rng, 1 + i % 6);
    const auto fp = fixpoints(f);
    const auto& l = *fp.lattice();
    for (Elem a = 0; a < fp.size(); ++a) {
      EXPECT_EQ(closure(f, fp.set_of(a)), fp.set_of(a));
      for (Elem b = 0; b < fp.size(); ++b) {
        EXPECT_EQ(fp.set_of(l.meet(a, b)), fp.set_of(a) & fp.set_of(b));
        EXPECT_EQ(fp.set_of(l.join(a, b)), closure(f, fp.set_of(a) | fp.set_of(b)));
        EXPECT_EQ(fp.set_of(fp.arrow_op()(a, b)), arrow(f, fp.set_of(a), fp.set_of(b)));
        EXPECT_EQ(l.leq(a, b), fp.set_of(a).is_subset_of(fp.set_of(b)));
      }
    }
    std::size_t count = 0;
    for (std::size_t s = 0; s < (std::size_t{1} << f.size()); ++s) {
      const PointSet set(f.size(), s);
      if (literal_arrow(f, f.full_set(), set) == set) ++count;
    }
    EXPECT_EQ(count, fp.size());
  }
}

TEST(Frames, InducedPreconditional) {
  EXPECT_TRUE(check_induced_preconditional(relframe()).all_pass());
  const RelationalFrame empty("empty", {"a", "b", "c"}, {});
  EXPECT_TRUE(check_induced_preconditional(empty).all_pass());
}

TEST(Frames, Generation) {
  const auto& f = relframe();
  const auto full = fixpoints(f);
  const auto gen = generate_from(f, {set_of(f, {"x"}), set_of(f, {"z"})});
  EXPECT_EQ(gen.fixpoints(), full.fixpoints());
  const auto bounds = generate_from(f, {});
  EXPECT_EQ(bounds.size(), 2u);
  EXPECT_EQ(fixpoints_by_generation(f).fixpoints(), full.fixpoints());
  EXPECT_EQ(fixpoints_by_generation(f).arrow_op(), full.arrow_op());
  EXPECT_THROW(generate_from(f, {set_of(f, {"x"})}, 3), Error);
}

TEST(Frames, GenerationAgreesWithEnumeration) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 40; ++i) {
    const auto f = random_frame(rng, 1 + i % 7);
    EXPECT_EQ(fixpoints_by_generation(f).fixpoints(), fixpoints(f).fixpoints());
  }
}

TEST(Frames, CanonicalOrderAndFormatting) {
  const auto& f = relframe();
  EXPECT_TRUE(canonical_less(set_of(f, {"z"}), set_of(f, {"x", "y"})));
  EXPECT_TRUE(canonical_less(set_of(f, {"x", "z"}), set_of(f, {"w", "z"})));
  EXPECT_EQ(format_set(f, set_of(f, {"x", "w"})), "{x,w}");
  EXPECT_EQ(format_set(f, f.empty_set()), "{}");
}

TEST(Frames, Errors) {
  const auto& f = relframe();
  try {
    arrow(f, PointSet(3), f.full_set());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::WidthMismatch);
  }
  try {
    fixpoints(f, FrameLimits{3, 4096});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TooLarge);
  }
}
