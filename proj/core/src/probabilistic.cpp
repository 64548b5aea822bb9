#include "precond/probabilistic.hpp"

#include <bit>
#include <numeric>
#include <random>

#include "axiom_eval.hpp"
#include "precond/error.hpp"

namespace precond {

namespace {

struct PowersetView {
  WorldSet full;
  bool leq(Elem a, Elem b) const { return (a & ~b) == 0; }
  Elem meet(Elem a, Elem b) const { return a & b; }
  Elem bottom() const { return 0; }
  Elem top() const { return full; }
};

WorldSet interval(std::size_t i, std::size_t j) {
  return static_cast<WorldSet>(((std::uint64_t{1} << j) - 1) & ~((std::uint64_t{1} << i) - 1));
}

}  // namespace

ConfidenceSpace::ConfidenceSpace(std::size_t worlds, Rational self_mass, Rational threshold,
                                 EmptyAntecedent empty)
    : n_(worlds), self_(self_mass), threshold_(threshold), empty_(empty) {
  if (n_ < 1 || n_ > kMaxWorlds) {
    throw Error(ErrorCode::InvalidSpec, "world count must be between 1 and " + std::to_string(kMaxWorlds));
  }
  if (self_ < Rational(0) || self_ > Rational(1)) throw Error(ErrorCode::InvalidSpec, "self mass must lie in [0, 1]");
  if (threshold_ < Rational(0) || threshold_ > Rational(1)) throw Error(ErrorCode::InvalidSpec, "threshold must lie in [0, 1]");
  if (n_ == 1 && self_ != Rational(1)) throw Error(ErrorCode::InvalidSpec, "a single world must carry mass 1");
  other_ = n_ == 1 ? Rational(0) : (Rational(1) - self_) / static_cast<std::int64_t>(n_ - 1);
  const std::int64_t den = std::lcm(self_.denominator(), other_.denominator());
  self_units_ = self_.numerator() * (den / self_.denominator());
  other_units_ = other_.numerator() * (den / other_.denominator());
  threshold_num_ = threshold_.numerator();
  threshold_den_ = threshold_.denominator();
}

ConfidenceSpace ConfidenceSpace::standard() { return ConfidenceSpace(11, Rational(9, 10), Rational(9, 10)); }

Rational ConfidenceSpace::measure(std::size_t w, WorldSet a) const {
  const bool in = (a >> w) & 1U;
  return self_ * static_cast<std::int64_t>(in) +
         other_ * static_cast<std::int64_t>(std::popcount(a) - static_cast<int>(in));
}

bool ConfidenceSpace::accepts(std::size_t w, WorldSet a, WorldSet b) const {
  auto units = [&](WorldSet s) {
    const std::int64_t in = (s >> w) & 1U;
    return self_units_ * in + other_units_ * (std::popcount(s) - in);
  };
  const std::int64_t mu_a = units(a);
  if (mu_a == 0) return empty_ == EmptyAntecedent::AllWorlds;
  return units(a & b) * threshold_den_ >= threshold_num_ * mu_a;
}

Rational cond_prob(const ConfidenceSpace& space, std::size_t w, WorldSet b, WorldSet a) {
  const Rational mu_a = space.measure(w, a);
  if (mu_a.numerator() == 0) throw Error(ErrorCode::ConditioningOnNull, "antecedent has measure 0 at world " + std::to_string(w));
  return space.measure(w, a & b) / mu_a;
}

WorldSet arrow_prob(const ConfidenceSpace& space, WorldSet a, WorldSet b) {
  WorldSet out = 0;
  for (std::size_t w = 0; w < space.size(); ++w)
    if (space.accepts(w, a, b)) out |= WorldSet{1} << w;
  return out;
}

std::vector<std::uint16_t> arrow_prob_table(const ConfidenceSpace& space) {
  const std::size_t n = space.size();
  if (n > 12) throw Error(ErrorCode::TooLarge, "arrow table limited to 12 worlds");
  const std::size_t subsets = std::size_t{1} << n;
  std::vector<std::uint16_t> table(subsets * subsets);
  for (std::size_t a = 0; a < subsets; ++a)
    for (std::size_t b = 0; b < subsets; ++b)
      table[a << n | b] = static_cast<std::uint16_t>(arrow_prob(space, static_cast<WorldSet>(a), static_cast<WorldSet>(b)));
  return table;
}

std::array<WorldSet, 3> standard_normality_witness() {
  return {interval(1, 11), interval(1, 10), interval(2, 11)};
}

AxiomReport verify_axioms(const ConfidenceSpace& space, const ProbVerifyOptions& options) {
  const std::size_t n = space.size();
  const PowersetView view{space.all()};
  std::vector<std::uint16_t> table;
  if (n <= 12) table = arrow_prob_table(space);
  auto imp = [&](Elem a, Elem b) -> std::optional<Elem> {
    if (!table.empty()) return table[static_cast<std::size_t>(a) << n | b];
    return arrow_prob(space, a, b);
  };
  const std::uint64_t subsets = std::uint64_t{1} << n;

  std::vector<WorldSet> intervals;
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = i; j <= n; ++j)
      if (i < j || i == 0) intervals.push_back(interval(i, j));

  AxiomReport report;
  for (AxiomId axiom : {AxiomId::P1, AxiomId::P2, AxiomId::P3, AxiomId::P4, AxiomId::P5, AxiomId::MP,
                        AxiomId::NORM}) {
    AxiomResult result;
    result.axiom = axiom;
    const int k = arity(axiom);
    auto visit = [&](Elem a, Elem b, Elem c) {
      ++result.instances;
      const auto sides = detail::evaluate(axiom, view, imp, a, b, c);
      if (sides->holds) return true;
      result.pass = false;
      result.counterexample = Counterexample{{a, b, c}, k, sides->lhs, sides->rhs};
      return false;
    };

    if (k < 3) {
      const std::uint64_t rb = k == 2 ? subsets : 1;
      for (std::uint64_t a = 0; a < subsets && result.pass; ++a)
        for (std::uint64_t b = 0; b < rb; ++b)
          if (!visit(static_cast<Elem>(a), static_cast<Elem>(b), 0)) break;
      report.results.push_back(result);
      continue;
    }

    for (const auto& t : options.priority_triples)
      if (!visit(t[0], t[1], t[2])) break;
    if (options.exhaustive) {
      for (std::uint64_t a = 0; a < subsets && result.pass; ++a)
        for (std::uint64_t b = 0; b < subsets && result.pass; ++b)
          for (std::uint64_t c = 0; c < subsets; ++c)
            if (!visit(static_cast<Elem>(a), static_cast<Elem>(b), static_cast<Elem>(c))) break;
    } else {
      for (WorldSet a : intervals) {
        if (!result.pass) break;
        for (WorldSet b : intervals) {
          if (!result.pass) break;
          for (WorldSet c : intervals)
            if (!visit(a, b, c)) break;
        }
      }
      result.sampled = true;
      std::mt19937_64 rng(options.seed);
      std::uniform_int_distribution<std::uint64_t> pick(0, subsets - 1);
      for (std::uint64_t i = 0; i < options.samples && result.pass; ++i) {
        const auto a = static_cast<Elem>(pick(rng));
        const auto b = static_cast<Elem>(pick(rng));
        const auto c = static_cast<Elem>(pick(rng));
        visit(a, b, c);
      }
    }
    report.results.push_back(result);
  }
  return report;
}

}  // namespace precond
