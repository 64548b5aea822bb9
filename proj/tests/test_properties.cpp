#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "precond/frames.hpp"
#include "precond/search.hpp"
#include "precond/selection.hpp"
#include "support.hpp"

using namespace precond;

namespace {

RelationalFrame random_frame(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> size(1, 8);
  std::uniform_real_distribution<double> density(0.0, 1.0);
  const std::size_t m = size(rng);
  std::bernoulli_distribution edge(density(rng));
  std::vector<std::string> names;
  for (std::size_t i = 0; i < m; ++i) names.push_back("p" + std::to_string(i));
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t y = 0; y < m; ++y)
    for (std::size_t x = 0; x < m; ++x)
      if (edge(rng)) edges.emplace_back(y, x);
  return RelationalFrame("random", names, edges);
}

// Horizontal sum of k four-element Boolean blocks: 0, a1, ~a1, ..., 1.
std::pair<LatticePtr, UnaryOp> mo(std::size_t k) {
  std::vector<std::string> names = {"0"};
  std::vector<std::pair<std::string, std::string>> covers;
  for (std::size_t i = 0; i < k; ++i)
    for (const std::string& n : {"a" + std::to_string(i), "~a" + std::to_string(i)}) {
      names.push_back(n);
      covers.emplace_back("0", n);
      covers.emplace_back(n, "1");
    }
  names.push_back("1");
  auto l = support::share(make_from_covers("MO" + std::to_string(k), names, covers));
  std::vector<Elem> neg(l->size());
  for (Elem e = 0; e < l->size(); ++e) {
    const std::string& n = l->names()[e];
    if (n == "0") neg[e] = support::at(*l, "1");
    else if (n == "1") neg[e] = support::at(*l, "0");
    else neg[e] = support::at(*l, n[0] == '~' ? n.substr(1) : "~" + n);
  }
  return {l, UnaryOp(l, neg)};
}

}  // namespace

TEST(Properties, RandomFramesClosureLaws) {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 1000; ++i) {
    const auto f = random_frame(rng);
    const std::size_t subsets = std::size_t{1} << f.size();
    for (std::size_t s = 0; s < subsets; s += 1 + subsets / 16) {
      const PointSet a(f.size(), s);
      const PointSet ca = closure(f, a);
      ASSERT_TRUE(a.is_subset_of(ca));
      ASSERT_EQ(closure(f, ca), ca);
      const PointSet b(f.size(), (s * 7 + 3) % subsets);
      if (a.is_subset_of(b)) ASSERT_TRUE(ca.is_subset_of(closure(f, b)));
    }
    const auto fp = fixpoints(f);
    ASSERT_TRUE(is_preconditional(fp.arrow_op()));
    ASSERT_TRUE(check_induced_preconditional(f).all_pass());
  }
}

TEST(Properties, StronglyDenseSelectionFramesArePreconditional) {
  std::mt19937_64 rng(77);
  int tested = 0;
  for (int i = 0; i < 500; ++i) {
    const std::size_t k = 1 + rng() % 4;
    std::vector<std::string> names;
    for (std::size_t w = 0; w < k; ++w) names.push_back(std::to_string(w));
    std::vector<std::size_t> order(k);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    SelectionFrame f = from_well_order(names, order);
    if (rng() % 2 && k > 1) {
      // A cyclic variant: w's nearest A-world is the next one going round.
      f = SelectionFrame(names);
      for (WorldSet a = 1; a <= f.all(); ++a)
        for (std::size_t w = 0; w < k; ++w)
          for (std::size_t step = 0; step < k; ++step) {
            const std::size_t v = (w + step) % k;
            if (a >> v & 1) {
              f.relate(a, w, v);
              break;
            }
          }
    }
    const auto report = check_frame(f);
    ASSERT_TRUE(report.strong_density.pass);
    ASSERT_TRUE(report.success.pass && report.centering.pass);
    ASSERT_TRUE(is_preconditional(selection_op(f)));
    ++tested;
  }
  EXPECT_EQ(tested, 500);
}

TEST(Properties, CatalogNegationsArePrecomplementations) {
  for (const auto& e : catalog_entries()) {
    if (!e.doc.neg) continue;
    EXPECT_TRUE(check_precomplementation(*e.doc.neg).all_pass()) << e.name;
    const auto op = from_precomplementation(*e.doc.neg);
    EXPECT_TRUE(support::oracle_holds(op, AxiomId::P1)) << e.name;
    EXPECT_TRUE(support::oracle_holds(op, AxiomId::P2)) << e.name;
    EXPECT_TRUE(support::oracle_holds(op, AxiomId::P3)) << e.name;
  }
}

TEST(Properties, SasakiHookOnHorizontalSums) {
  for (std::size_t k = 1; k <= 5; ++k) {
    auto [l, neg] = mo(k);
    const auto oc = Orthocomplement::make(neg);
    EXPECT_TRUE(is_orthomodular(oc).orthomodular);
    const auto op = sasaki_hook(oc);
    for (AxiomId a : {AxiomId::P1, AxiomId::P2, AxiomId::P3, AxiomId::P4, AxiomId::P5, AxiomId::MP, AxiomId::ID,
                      AxiomId::SEMI, AxiomId::INV})
      EXPECT_TRUE(support::oracle_holds(op, a)) << k << " " << to_string(a);
    EXPECT_EQ(derive_negation(op), neg);
    if (k >= 2) EXPECT_FALSE(support::oracle_holds(op, AxiomId::WM));
  }
}

TEST(Properties, PreconditionalCheckerAgreesWithOracle) {
  std::mt19937_64 rng(31);
  const auto& inv = lattice_inventory();
  for (int i = 0; i < 3000; ++i) {
    const auto& l = inv[rng() % inv.size()];
    std::vector<Elem> table(l->size() * l->size());
    for (auto& v : table) v = static_cast<Elem>(rng() % l->size());
    const ConditionalOp op(l, table);
    for (AxiomId a : kAllAxioms) ASSERT_EQ(check_axiom(op, a).pass, support::oracle_holds(op, a));
  }
}
