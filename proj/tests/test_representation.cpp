#include <gtest/gtest.h>

#include <set>

#include "precond/error.hpp"
#include "precond/representation.hpp"
#include "support.hpp"

using namespace precond;
using support::catalog_op;

namespace {

std::vector<const WitnessEntry*> preconditional_entries() {
  std::vector<const WitnessEntry*> out;
  for (const auto& e : catalog_entries())
    if (is_preconditional(*e.doc.op)) out.push_back(&e);
  return out;
}

// Consonance read off the definition: for all a, b with f ≤ a and a∧b ≤ i,
// a→b ≤ i.
bool consonant_oracle(const ConditionalOp& op, Elem f, Elem i) {
  const auto& l = op.lattice();
  for (Elem a = 0; a < l.size(); ++a)
    for (Elem b = 0; b < l.size(); ++b)
      if (l.leq(f, a) && l.leq(l.meet(a, b), i) && !l.leq(op(a, b), i)) return false;
  return true;
}

}  // namespace

TEST(PairFrame, TwoChainMaterial) {
  const auto& op = catalog_op("chain2-material");
  const auto pf = build_pair_frame(op);
  EXPECT_EQ(pf.points, (std::vector<std::pair<Elem, Elem>>{{0, 1}, {1, 0}, {1, 1}}));
}

TEST(PairFrame, RelationIsCNotBelowB) {
  for (const auto* e : preconditional_entries()) {
    const auto pf = build_pair_frame(*e->doc.op);
    const auto& l = *e->doc.lattice;
    std::set<std::pair<Elem, Elem>> expected;
    for (Elem x = 0; x < l.size(); ++x)
      for (Elem y = 0; y < l.size(); ++y) expected.emplace(x, (*e->doc.op)(x, y));
    EXPECT_EQ((std::set<std::pair<Elem, Elem>>(pf.points.begin(), pf.points.end())), expected) << e->name;
    EXPECT_LE(pf.points.size(), l.size() * l.size());
    for (std::size_t p = 0; p < pf.points.size(); ++p)
      for (std::size_t q = 0; q < pf.points.size(); ++q)
        EXPECT_EQ(pf.frame.related(p, q), !l.leq(pf.points[q].first, pf.points[p].second));
  }
}

TEST(PairFrame, EmbeddingVerifiedForCatalog) {
  const auto entries = preconditional_entries();
  EXPECT_GE(entries.size(), 15u);
  for (const auto* e : entries) {
    const auto r = verify_pair_embedding(*e->doc.op);
    EXPECT_TRUE(r.candidate.ok()) << e->name << ": " << r.candidate.failure;
    EXPECT_FALSE(r.searched) << e->name;
    EXPECT_TRUE(r.verified()) << e->name;
    EXPECT_EQ(r.fixpoint_count, e->doc.lattice->size()) << e->name;
    EXPECT_NO_THROW(require_pair_embedding(r));
  }
}

TEST(PairFrame, WrongCandidateFallsBackToSearch) {
  const auto& op = catalog_op("relframe-lattice");
  const PairCandidate everything = [](const PairFrame& pf, Elem) { return pf.frame.full_set(); };
  const auto r = verify_pair_embedding(op, everything);
  EXPECT_FALSE(r.candidate.ok());
  EXPECT_FALSE(r.candidate.failure.empty());
  EXPECT_TRUE(r.searched);
  ASSERT_TRUE(r.verified());
  EXPECT_EQ(r.mapping->size(), 7u);
}

TEST(PairFrame, RejectsNonPreconditional) {
  try {
    build_pair_frame(catalog_op("fact1-p4"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotAPreconditional);
  }
}

TEST(PairFrame, RequireThrowsOnFailure) {
  PairEmbeddingReport bad;
  bad.candidate.injective = false;
  bad.candidate.failure = "injective";
  try {
    require_pair_embedding(bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::EmbeddingNotVerified);
  }
}

TEST(FilterIdeal, TwoChainMaterialHasThreePoints) {
  const auto& op = catalog_op("chain2-material");
  const auto fi = build_fi_space(op);
  EXPECT_EQ(fi.points, (std::vector<std::pair<Elem, Elem>>{{0, 1}, {1, 0}, {1, 1}}));
  EXPECT_FALSE(is_consonant(op, 0, 0));
  EXPECT_EQ(fi.basis[1], fi.frame.full_set());
  PointSet zero_hat(3);
  zero_hat.set(0);
  EXPECT_EQ(fi.basis[0], zero_hat);
}

TEST(FilterIdeal, PointsAreExactlyConsonantPairs) {
  for (const auto* e : preconditional_entries()) {
    const auto& op = *e->doc.op;
    const auto& l = op.lattice();
    const auto fi = build_fi_space(op);
    std::vector<std::pair<Elem, Elem>> expected;
    for (Elem f = 0; f < l.size(); ++f)
      for (Elem i = 0; i < l.size(); ++i) {
        EXPECT_EQ(is_consonant(op, f, i), consonant_oracle(op, f, i));
        if (consonant_oracle(op, f, i)) expected.emplace_back(f, i);
      }
    EXPECT_EQ(fi.points, expected) << e->name;
    for (Elem b = 0; b < l.size(); ++b)
      EXPECT_NE(std::find(fi.points.begin(), fi.points.end(), std::make_pair(l.top(), b)), fi.points.end());
    for (Elem a = 0; a < l.size(); ++a)
      for (Elem b = 0; b < l.size(); ++b) EXPECT_EQ(fi.basis[l.meet(a, b)], fi.basis[a] & fi.basis[b]);
  }
}

TEST(FilterIdeal, EmbeddingAndSpaceConditionsForCatalog) {
  for (const auto* e : preconditional_entries()) {
    const auto r = verify_fi_embedding(*e->doc.op);
    EXPECT_TRUE(r.ok()) << e->name << ": " << r.embedding.failure;
    EXPECT_EQ(r.compact_open_count, e->doc.lattice->size());
    EXPECT_NO_THROW(require_fi_embedding(r));
    const auto space = check_space_conditions(as_space(build_fi_space(*e->doc.op)));
    EXPECT_TRUE(space.separation) << e->name;
    EXPECT_TRUE(space.closed_and_basis) << e->name;
    EXPECT_TRUE(space.realization) << e->name;
    EXPECT_TRUE(space.relation_matches) << e->name;
  }
}

TEST(FilterIdeal, OneElementLattice) {
  const auto& op = catalog_op("trivial");
  EXPECT_EQ(build_fi_space(op).points.size(), 1u);
  EXPECT_TRUE(verify_pair_embedding(op).verified());
  EXPECT_TRUE(check_space_conditions(as_space(build_fi_space(op))).all_pass());
}

TEST(Space, DuplicatedPointsBreakSeparation) {
  const RelationalFrame frame("twins", {"p", "q"}, {{0, 1}, {1, 0}}, true);
  const FrameSpace space{frame, {frame.full_set()}};
  const auto r = check_space_conditions(space);
  EXPECT_FALSE(r.separation);
  EXPECT_FALSE(r.all_pass());
}

TEST(Space, OnePointPasses) {
  const RelationalFrame frame("one", {"p"}, {});
  const FrameSpace space{frame, {frame.full_set()}};
  EXPECT_TRUE(check_space_conditions(space).all_pass());
}

TEST(Space, ReflexivePointMissesAConsonantPair) {
  // c(∅) = ∅ here, so the fixpoints form a 2-chain with three consonant
  // pairs but only one point to realize them.
  const RelationalFrame frame("loop", {"p"}, {}, true);
  const FrameSpace space{frame, {frame.full_set()}};
  const auto r = check_space_conditions(space);
  EXPECT_EQ(r.cofix.size(), 2u);
  EXPECT_TRUE(r.closed_and_basis);
  EXPECT_FALSE(r.realization);
}

TEST(Space, OpenSetsOfTwoChainSpace) {
  const auto fi = build_fi_space(catalog_op("chain2-material"));
  const auto opens = open_sets(as_space(fi));
  // ∅, 0̂ and X.
  EXPECT_EQ(opens.size(), 3u);
  EXPECT_EQ(compact_open_fixpoints(as_space(fi)).size(), 2u);
}
