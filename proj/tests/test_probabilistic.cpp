#include <gtest/gtest.h>

#include <random>

#include "precond/error.hpp"
#include "precond/probabilistic.hpp"

using namespace precond;

namespace {

WorldSet interval(std::size_t lo, std::size_t hi) {
  WorldSet s = 0;
  for (std::size_t w = lo; w <= hi; ++w) s |= WorldSet{1} << w;
  return s;
}

// μ_w(B|A) ≥ t computed with rationals from scratch.
bool oracle_accepts(std::size_t n, Rational self, Rational t, std::size_t w, WorldSet a, WorldSet b) {
  const Rational other = n == 1 ? Rational(0) : (Rational(1) - self) / static_cast<std::int64_t>(n - 1);
  auto mu = [&](WorldSet s) {
    Rational m = 0;
    for (std::size_t v = 0; v < n; ++v)
      if (s >> v & 1) m += v == w ? self : other;
    return m;
  };
  if (mu(a) == Rational(0)) return true;
  return mu(a & b) / mu(a) >= t;
}

}  // namespace

TEST(Probabilistic, ConditionalProbabilities) {
  const auto s = ConfidenceSpace::standard();
  EXPECT_EQ(cond_prob(s, 0, interval(1, 9), interval(1, 10)), Rational(9, 10));
  EXPECT_EQ(cond_prob(s, 0, interval(0, 0), s.all()), Rational(9, 10));
  EXPECT_EQ(cond_prob(s, 0, interval(2, 9), interval(1, 10)), Rational(4, 5));
  EXPECT_EQ(s.other_mass(), Rational(1, 100));
}

TEST(Probabilistic, MeasuresAreProbabilities) {
  const auto s = ConfidenceSpace::standard();
  for (std::size_t w = 0; w < s.size(); ++w) {
    EXPECT_EQ(s.measure(w, s.all()), Rational(1));
    EXPECT_EQ(s.measure(w, WorldSet{1} << w), Rational(9, 10));
  }
}

TEST(Probabilistic, ConditioningOnNull) {
  try {
    cond_prob(ConfidenceSpace::standard(), 0, 1, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ConditioningOnNull);
  }
}

TEST(Probabilistic, PublishedArrowMemberships) {
  const auto s = ConfidenceSpace::standard();
  EXPECT_FALSE(arrow_prob(s, interval(1, 10), interval(2, 9)) & 1U);
  EXPECT_TRUE(arrow_prob(s, interval(1, 10), interval(1, 9)) & 1U);
  EXPECT_TRUE(arrow_prob(s, interval(1, 10), interval(2, 10)) & 1U);
  for (WorldSet a : {WorldSet{1}, interval(3, 7), s.all()}) EXPECT_EQ(arrow_prob(s, a, a), s.all());
  const auto w = standard_normality_witness();
  EXPECT_EQ(w[0], interval(1, 10));
  EXPECT_EQ(w[1], interval(1, 9));
  EXPECT_EQ(w[2], interval(2, 10));
}

TEST(Probabilistic, EmptyAntecedentKnob) {
  const ConfidenceSpace all(4, Rational(1, 2), Rational(3, 4));
  const ConfidenceSpace none(4, Rational(1, 2), Rational(3, 4), EmptyAntecedent::NoWorlds);
  EXPECT_EQ(arrow_prob(all, 0, 0b0011), all.all());
  EXPECT_EQ(arrow_prob(none, 0, 0b0011), WorldSet{0});
}

TEST(Probabilistic, ArrowMatchesRationalOracle) {
  const std::pair<Rational, Rational> configs[] = {
      {Rational(9, 10), Rational(9, 10)}, {Rational(1, 2), Rational(2, 3)}, {Rational(1, 3), Rational(1, 2)}};
  for (const auto& [self, t] : configs) {
    const std::size_t n = 5;
    const ConfidenceSpace s(n, self, t);
    for (WorldSet a = 0; a < 32; ++a)
      for (WorldSet b = 0; b < 32; ++b)
        for (std::size_t w = 0; w < n; ++w) ASSERT_EQ(s.accepts(w, a, b), oracle_accepts(n, self, t, w, a, b));
  }
}

TEST(Probabilistic, TableMatchesDirectEvaluation) {
  const auto s = ConfidenceSpace::standard();
  const auto table = arrow_prob_table(s);
  ASSERT_EQ(table.size(), std::size_t{1} << 22);
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<WorldSet> pick(0, s.all());
  for (int i = 0; i < 20000; ++i) {
    const WorldSet a = pick(rng), b = pick(rng);
    ASSERT_EQ(table[(std::size_t{a} << 11) | b], arrow_prob(s, a, b));
  }
}

TEST(Probabilistic, AxiomsOnStandardSpace) {
  ProbVerifyOptions o;
  o.samples = 20000;
  o.priority_triples = {standard_normality_witness()};
  const auto r = verify_axioms(ConfidenceSpace::standard(), o);
  for (AxiomId a : {AxiomId::P1, AxiomId::P2, AxiomId::P3, AxiomId::P4, AxiomId::P5, AxiomId::MP})
    EXPECT_TRUE(r.passes(a)) << to_string(a);
  const auto* norm = r.find(AxiomId::NORM);
  ASSERT_NE(norm, nullptr);
  ASSERT_FALSE(norm->pass);
  const auto w = standard_normality_witness();
  EXPECT_EQ(norm->counterexample->vars, (std::array<Elem, 3>{w[0], w[1], w[2]}));
  EXPECT_FALSE(r.find(AxiomId::MP)->sampled);
}

TEST(Probabilistic, ExhaustiveOnSmallSpace) {
  ProbVerifyOptions o;
  o.exhaustive = true;
  const auto r = verify_axioms(ConfidenceSpace(5, Rational(9, 10), Rational(9, 10)), o);
  for (AxiomId a : {AxiomId::P1, AxiomId::P2, AxiomId::P3, AxiomId::P4, AxiomId::P5, AxiomId::MP})
    EXPECT_TRUE(r.passes(a)) << to_string(a);
  EXPECT_EQ(r.find(AxiomId::P4)->instances, std::uint64_t{1} << 15);
}

TEST(Probabilistic, InvalidConfigurations) {
  EXPECT_THROW(ConfidenceSpace(0, Rational(1), Rational(1)), Error);
  EXPECT_THROW(ConfidenceSpace(kMaxWorlds + 1, Rational(1, 2), Rational(1, 2)), Error);
  EXPECT_THROW(ConfidenceSpace(3, Rational(3, 2), Rational(1, 2)), Error);
  EXPECT_THROW(ConfidenceSpace(3, Rational(1, 2), Rational(-1, 2)), Error);
  EXPECT_THROW(ConfidenceSpace(1, Rational(1, 2), Rational(1, 2)), Error);
  EXPECT_NO_THROW(ConfidenceSpace(1, Rational(1), Rational(1, 2)));
}
