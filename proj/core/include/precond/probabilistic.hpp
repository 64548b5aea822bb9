#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include <boost/rational.hpp>

#include "precond/cond_ops.hpp"
#include "precond/selection.hpp"

namespace precond {

using Rational = boost::rational<std::int64_t>;

/// What A→B contains at worlds where μ_w(A) = 0 (only A = ∅).
enum class EmptyAntecedent { AllWorlds, NoWorlds };

/// Worlds 0..n-1 with measures μ_w({w}) = self_mass and
/// μ_w({v}) = (1 - self_mass)/(n-1) for v ≠ w; A→B collects the worlds
/// where μ_w(B|A) ≥ threshold.
class ConfidenceSpace {
 public:
  /// Throws Error{InvalidSpec} unless 1 ≤ n ≤ kMaxWorlds, 0 ≤ self_mass ≤ 1
  /// and 0 ≤ threshold ≤ 1.
  ConfidenceSpace(std::size_t worlds, Rational self_mass, Rational threshold,
                  EmptyAntecedent empty = EmptyAntecedent::AllWorlds);

  /// 11 worlds, self mass 9/10, other mass 1/100, threshold 9/10.
  static ConfidenceSpace standard();

  std::size_t size() const noexcept { return n_; }
  WorldSet all() const noexcept { return static_cast<WorldSet>((std::uint64_t{1} << n_) - 1); }
  Rational self_mass() const noexcept { return self_; }
  Rational other_mass() const noexcept { return other_; }
  Rational threshold() const noexcept { return threshold_; }
  EmptyAntecedent empty_antecedent() const noexcept { return empty_; }

  /// μ_w(A)
  Rational measure(std::size_t w, WorldSet a) const;
  /// w ∈ A→B, decided in integer arithmetic.
  bool accepts(std::size_t w, WorldSet a, WorldSet b) const;

 private:
  std::size_t n_;
  Rational self_;
  Rational other_;
  Rational threshold_;
  EmptyAntecedent empty_;
  // Masses and threshold over common denominators.
  std::int64_t self_units_;
  std::int64_t other_units_;
  std::int64_t threshold_num_;
  std::int64_t threshold_den_;
};

/// μ_w(B|A) = μ_w(A∩B)/μ_w(A). Throws Error{ConditioningOnNull} when μ_w(A) = 0.
Rational cond_prob(const ConfidenceSpace& space, std::size_t w, WorldSet b, WorldSet a);

/// {w : μ_w(B|A) ≥ threshold}
WorldSet arrow_prob(const ConfidenceSpace& space, WorldSet a, WorldSet b);

/// Complete table of A→B indexed [A << n | B]; n ≤ 12.
std::vector<std::uint16_t> arrow_prob_table(const ConfidenceSpace& space);

/// ({1..10}, {1..9}, {2..10}): world 0 is in the first two conditionals but
/// not in {1..10}→{2..9}.
std::array<WorldSet, 3> standard_normality_witness();

struct ProbVerifyOptions {
  std::uint64_t samples = 1000000;
  std::uint64_t seed = 1;
  /// Enumerate all triples for P4, P5 and NORM instead of sampling.
  bool exhaustive = false;
  /// Triples evaluated first for every 3-variable axiom.
  std::vector<std::array<WorldSet, 3>> priority_triples;
};

/// P1, P2, P3, MP exhaustively; P4, P5, NORM on the priority triples, all
/// triples of index intervals [i, j) and `samples` uniform triples (or
/// exhaustively). Counterexample variables are world masks.
AxiomReport verify_axioms(const ConfidenceSpace& space, const ProbVerifyOptions& options = {});

}  // namespace precond
