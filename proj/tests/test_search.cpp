#include <gtest/gtest.h>

#include <algorithm>

#include "precond/error.hpp"
#include "precond/search.hpp"
#include "support.hpp"

using namespace precond;
using support::chain;

namespace {

const std::vector<AxiomId> kPool = {AxiomId::P1, AxiomId::P2, AxiomId::P3, AxiomId::P4,
                                    AxiomId::P5, AxiomId::MP, AxiomId::WM};

std::vector<AxiomId> all_but(AxiomId skip) {
  std::vector<AxiomId> out;
  for (AxiomId a : kPreconditionalAxioms)
    if (a != skip) out.push_back(a);
  return out;
}

bool satisfies(const ConditionalOp& op, const std::vector<AxiomId>& require, const std::vector<AxiomId>& forbid) {
  for (AxiomId a : require)
    if (!support::oracle_holds(op, a)) return false;
  for (AxiomId a : forbid)
    if (support::oracle_holds(op, a)) return false;
  return true;
}

}  // namespace

TEST(Search, ConstantOneBreaksP1) {
  SearchSpec spec;
  spec.lattice = chain(2);
  spec.require = all_but(AxiomId::P1);
  spec.forbid = {AxiomId::P1};
  spec.find_all = true;
  const auto r = find_witness(spec);
  const auto one = ConditionalOp::from_function(spec.lattice, [](Elem, Elem) -> Elem { return 1; });
  EXPECT_NE(std::find(r.witnesses.begin(), r.witnesses.end(), one), r.witnesses.end());
  EXPECT_TRUE(r.exhausted);
}

TEST(Search, MeetBreaksWeakMonotonicity) {
  SearchSpec spec;
  spec.lattice = chain(2);
  spec.require = {AxiomId::P1, AxiomId::P2, AxiomId::P3, AxiomId::P4, AxiomId::P5, AxiomId::MP};
  spec.forbid = {AxiomId::WM};
  const auto r = find_witness(spec);
  ASSERT_EQ(r.witnesses.size(), 1u);
  EXPECT_EQ(r.witnesses[0], ConditionalOp::from_function(spec.lattice, [](Elem a, Elem b) { return std::min(a, b); }));
}

TEST(Search, TwoChainCannotBreakP4) {
  SearchSpec spec;
  spec.lattice = chain(2);
  spec.require = all_but(AxiomId::P4);
  spec.forbid = {AxiomId::P4};
  spec.find_all = true;
  const auto r = find_witness(spec);
  EXPECT_TRUE(r.witnesses.empty());
  EXPECT_TRUE(r.exhausted);
}

TEST(Search, MinimalWitnessForP4IsOnThreeChain) {
  const auto mw = minimal_witness(all_but(AxiomId::P4), {AxiomId::P4});
  ASSERT_TRUE(mw.witness.has_value());
  EXPECT_EQ(mw.witness->lattice().size(), 3u);
  EXPECT_TRUE(satisfies(*mw.witness, all_but(AxiomId::P4), {AxiomId::P4}));
  ASSERT_GE(mw.attempts.size(), 3u);
  EXPECT_TRUE(mw.attempts[1].exhausted);
}

TEST(Search, MinimalWitnessesForEachAxiom) {
  for (AxiomId a : kPreconditionalAxioms) {
    const auto mw = minimal_witness(all_but(a), {a});
    ASSERT_TRUE(mw.witness.has_value()) << to_string(a);
    EXPECT_LE(mw.witness->lattice().size(), 3u);
    EXPECT_TRUE(satisfies(*mw.witness, all_but(a), {a}));
  }
}

TEST(Search, ContradictorySpecRejected) {
  try {
    minimal_witness({AxiomId::P3, AxiomId::P4, AxiomId::MP, AxiomId::WM}, {AxiomId::P4});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidSpec);
  }
}

TEST(Search, BooleanNegationImportWithoutWeakMonotonicity) {
  const std::vector<AxiomId> require = {AxiomId::P1, AxiomId::P2, AxiomId::P3, AxiomId::P4, AxiomId::P5,
                                        AxiomId::MP, AxiomId::ID, AxiomId::NORM, AxiomId::NEGIMP};
  const auto mw = minimal_witness(require, {AxiomId::WM}, [](const FiniteLattice& l) { return l.is_boolean(); });
  ASSERT_TRUE(mw.witness.has_value());
  EXPECT_EQ(mw.witness->lattice().name(), "B2");
  EXPECT_TRUE(satisfies(*mw.witness, require, {AxiomId::WM}));
  // The 2-chain was searched first and ruled out.
  ASSERT_GE(mw.attempts.size(), 2u);
  EXPECT_EQ(mw.attempts[1].lattice, "chain-2");
  EXPECT_TRUE(mw.attempts[1].exhausted);
}

TEST(Search, TwoChainCompleteness) {
  const auto l = chain(2);
  std::vector<ConditionalOp> tables;
  for (std::uint64_t code = 0; code < 16; ++code) tables.push_back(support::table_from_code(l, code));
  int specs = 1;
  for (std::size_t i = 0; i < kPool.size(); ++i) specs *= 3;
  for (int code = 0; code < specs; ++code) {
    SearchSpec spec;
    spec.lattice = l;
    spec.find_all = true;
    int c = code;
    for (AxiomId a : kPool) {
      if (c % 3 == 1) spec.require.push_back(a);
      if (c % 3 == 2) spec.forbid.push_back(a);
      c /= 3;
    }
    std::vector<ConditionalOp> expected;
    for (const auto& t : tables)
      if (satisfies(t, spec.require, spec.forbid)) expected.push_back(t);
    const auto r = find_witness(spec);
    ASSERT_TRUE(r.exhausted);
    ASSERT_EQ(r.witnesses, expected) << code;
  }
}

TEST(Search, BudgetExhaustion) {
  SearchSpec spec;
  spec.lattice = lattice_inventory()[5];
  spec.require = {AxiomId::P1};
  spec.forbid = {AxiomId::P2};
  spec.find_all = true;
  spec.node_budget = 100;
  try {
    find_witness(spec);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BudgetExhausted);
  }
}

TEST(Search, FixedEntriesArePinned) {
  SearchSpec spec;
  spec.lattice = chain(3);
  spec.require = {AxiomId::P1, AxiomId::P2, AxiomId::P3, AxiomId::P4, AxiomId::P5};
  spec.fixed.assign(9, std::nullopt);
  spec.fixed[0] = 1;
  spec.find_all = true;
  const auto r = find_witness(spec);
  for (const auto& w : r.witnesses) EXPECT_EQ(w(0, 0), 1u);
  spec.fixed.resize(4);
  EXPECT_THROW(find_witness(spec), Error);
}

TEST(Search, Deterministic) {
  SearchSpec spec;
  spec.lattice = chain(3);
  spec.require = {AxiomId::P1, AxiomId::P2, AxiomId::P3, AxiomId::P4, AxiomId::P5, AxiomId::MP};
  spec.find_all = true;
  const auto a = find_witness(spec);
  const auto b = find_witness(spec);
  EXPECT_EQ(a.witnesses, b.witnesses);
  EXPECT_EQ(a.nodes, b.nodes);
  for (const auto& w : a.witnesses) EXPECT_TRUE(satisfies(w, spec.require, {}));
}

TEST(Search, InventoryOrder) {
  const auto& inv = lattice_inventory();
  ASSERT_EQ(inv.size(), 10u);
  for (std::size_t i = 1; i < inv.size(); ++i) EXPECT_LE(inv[i - 1]->size(), inv[i]->size());
}
