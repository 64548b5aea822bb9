#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "precond/lattice.hpp"

namespace precond {

using LatticePtr = std::shared_ptr<const FiniteLattice>;

/// A total binary operation on a lattice; table[a*n+b] = a→b.
class ConditionalOp {
 public:
  /// Throws Error{InvalidSpec} if the table is not n×n or has out-of-range entries.
  ConditionalOp(LatticePtr lattice, std::vector<Elem> table);

  template <class F>
  static ConditionalOp from_function(LatticePtr lattice, F&& f) {
    const auto n = static_cast<Elem>(lattice->size());
    std::vector<Elem> table(static_cast<std::size_t>(n) * n);
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) table[a * n + b] = f(a, b);
    return ConditionalOp(std::move(lattice), std::move(table));
  }

  Elem operator()(Elem a, Elem b) const noexcept { return table_[a * lattice_->size() + b]; }
  const FiniteLattice& lattice() const noexcept { return *lattice_; }
  const LatticePtr& lattice_ptr() const noexcept { return lattice_; }
  std::span<const Elem> table() const noexcept { return table_; }

  friend bool operator==(const ConditionalOp& a, const ConditionalOp& b) {
    return *a.lattice_ == *b.lattice_ && a.table_ == b.table_;
  }

 private:
  LatticePtr lattice_;
  std::vector<Elem> table_;
};

/// A total unary operation on a lattice.
class UnaryOp {
 public:
  UnaryOp(LatticePtr lattice, std::vector<Elem> table);

  Elem operator()(Elem a) const noexcept { return table_[a]; }
  const FiniteLattice& lattice() const noexcept { return *lattice_; }
  const LatticePtr& lattice_ptr() const noexcept { return lattice_; }
  std::span<const Elem> table() const noexcept { return table_; }

  friend bool operator==(const UnaryOp& a, const UnaryOp& b) {
    return *a.lattice_ == *b.lattice_ && a.table_ == b.table_;
  }

 private:
  LatticePtr lattice_;
  std::vector<Elem> table_;
};

enum class AxiomId {
  P1,       // 1→a ≤ a
  P2,       // a∧b ≤ a→b
  P3,       // a→b ≤ a→(a∧b)
  P4,       // a→(b∧c) ≤ a→b
  P5,       // a→((a∧b)→c) ≤ (a∧b)→c
  MP,       // a∧(a→b) ≤ b
  WM,       // b ≤ a→b
  SEMI,     // a∧(a→0) = 0
  INV,      // (a→0)→0 = a
  ID,       // a→a = 1
  NORM,     // (a→b)∧(a→c) ≤ a→(b∧c)
  NEGIMP,   // ¬(a→b) ≤ a→¬b
  FLAT,     // a→((a∧b)→c) = (a∧b)→c
  PC_ANTI,  // a ≤ b implies ¬b ≤ ¬a
  PC_TOP,   // ¬1 = 0
};

inline constexpr std::array<AxiomId, 15> kAllAxioms = {
    AxiomId::P1,  AxiomId::P2,   AxiomId::P3,     AxiomId::P4,   AxiomId::P5,
    AxiomId::MP,  AxiomId::WM,   AxiomId::SEMI,   AxiomId::INV,  AxiomId::ID,
    AxiomId::NORM, AxiomId::NEGIMP, AxiomId::FLAT, AxiomId::PC_ANTI, AxiomId::PC_TOP};

inline constexpr std::array<AxiomId, 5> kPreconditionalAxioms = {
    AxiomId::P1, AxiomId::P2, AxiomId::P3, AxiomId::P4, AxiomId::P5};

std::string_view to_string(AxiomId axiom);
/// Accepts the names printed by to_string, case-insensitive, '-' or '_'.
std::optional<AxiomId> parse_axiom(std::string_view text);
/// Number of universally quantified variables (0..3).
int arity(AxiomId axiom);
/// Human-readable formula, e.g. "a∧b ≤ a→b".
std::string_view formula(AxiomId axiom);

struct Counterexample {
  std::array<Elem, 3> vars{};
  int arity = 0;
  Elem lhs = 0;
  Elem rhs = 0;
};

struct AxiomResult {
  AxiomId axiom{};
  bool pass = true;
  std::optional<Counterexample> counterexample;
  std::uint64_t instances = 0;
  /// True when the tuple space was sampled instead of enumerated.
  bool sampled = false;
};

struct AxiomReport {
  std::vector<AxiomResult> results;

  bool all_pass() const;
  const AxiomResult* find(AxiomId axiom) const;
  /// False if the axiom was not part of the report.
  bool passes(AxiomId axiom) const;
};

struct CheckOptions {
  /// Above this lattice size, 3-variable axioms are sampled.
  std::size_t exhaustive_limit = 16;
  std::uint64_t samples = 200000;
  std::uint64_t seed = 1;
};

AxiomResult check_axiom(const ConditionalOp& op, AxiomId axiom, const CheckOptions& options = {});
/// Every failing instance in lexicographic order, at most `max` of them.
std::vector<Counterexample> all_counterexamples(const ConditionalOp& op, AxiomId axiom,
                                                std::size_t max = SIZE_MAX);
AxiomReport check_axioms(const ConditionalOp& op, std::span<const AxiomId> axioms,
                         const CheckOptions& options = {});
/// Runs P1..P5; `all_pass()` is the preconditional verdict.
AxiomReport check_preconditional(const ConditionalOp& op, const CheckOptions& options = {});
bool is_preconditional(const ConditionalOp& op, const CheckOptions& options = {});

/// ¬a := a→0.
UnaryOp derive_negation(const ConditionalOp& op);
/// Checks PC_ANTI over all pairs and PC_TOP.
AxiomReport check_precomplementation(const UnaryOp& neg);
/// a→b := ¬a ∨ (a∧b). Throws Error{NotAPrecomplementation}.
ConditionalOp from_precomplementation(const UnaryOp& neg);

/// A unary operation verified to be antitone, semicomplementing and involutive.
class Orthocomplement {
 public:
  /// Throws Error{NotAnOrthocomplementation} naming the failing property.
  static Orthocomplement make(UnaryOp neg);

  const UnaryOp& op() const noexcept { return neg_; }
  Elem operator()(Elem a) const noexcept { return neg_(a); }
  const FiniteLattice& lattice() const noexcept { return neg_.lattice(); }

 private:
  explicit Orthocomplement(UnaryOp neg) : neg_(std::move(neg)) {}
  UnaryOp neg_;
};

/// a →s b = ¬a ∨ (a∧b). Both displayed forms are computed and compared.
ConditionalOp sasaki_hook(const Orthocomplement& neg);

/// b→c = ⋁{a : a∧b ≤ c}, returned only if residuation holds.
/// Throws Error{NotResiduated} with the failing triple.
ConditionalOp heyting_residual(LatticePtr lattice);

/// True iff a∧b ≤ c ⟺ a ≤ b→c for all triples.
bool satisfies_residuation(const ConditionalOp& op);

struct OrthomodularityVerdict {
  bool orthomodular = true;
  /// First (a, b) with a ≤ b and b ≠ a∨(¬a∧b).
  std::optional<std::pair<Elem, Elem>> law_witness;
  /// First (a, b) with a∧(¬a∨(a∧b)) ≰ b.
  std::optional<std::pair<Elem, Elem>> sasaki_mp_witness;
};

/// Evaluates the orthomodular law and Sasaki modus ponens; throws
/// Error{InternalInconsistency} if they disagree.
OrthomodularityVerdict is_orthomodular(const Orthocomplement& neg);

enum class ClassLabel {
  None,
  Preconditional,
  PreconditionalWithSemicomp,
  PreconditionalWithMP,
  ProtoHeyting,
  Heyting,
  SasakiOL,
  SasakiOML,
  ClassicalMaterial,
};

std::string_view to_string(ClassLabel label);
std::optional<ClassLabel> parse_class_label(std::string_view text);

struct Classification {
  ClassLabel label = ClassLabel::None;
  AxiomReport profile;
};

/// Full axiom profile plus the most specific class. Sasaki and Heyting
/// labels are cross-checked against their characterizations.
Classification classify(const ConditionalOp& op, const CheckOptions& options = {});

struct FlatteningReport {
  AxiomResult equation;       // FLAT
  AxiomResult left_to_right;  // P5
  AxiomResult right_to_left;  // (a∧b)→c ≤ a→((a∧b)→c), reported under AxiomId::FLAT
};

FlatteningReport check_flattening(const ConditionalOp& op, const CheckOptions& options = {});

/// "(a,b,c) lhs=x rhs=y" using element names.
std::string describe_counterexample(const FiniteLattice& lattice, const Counterexample& cx);

/// Row/column table of an operation using element names.
std::string format_table(const ConditionalOp& op);

}  // namespace precond
