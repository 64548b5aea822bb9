#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "precond/cond_ops.hpp"
#include "precond/frames.hpp"

namespace precond {

/// Points (x, x→y), deduplicated and sorted, with (a,b) ◁ (c,d) iff c ≰ b.
struct PairFrame {
  ConditionalOp op;
  std::vector<std::pair<Elem, Elem>> points;
  RelationalFrame frame;
};

/// Throws Error{NotAPreconditional}.
PairFrame build_pair_frame(const ConditionalOp& op, const CheckOptions& options = {});

/// Maps each lattice element to a set of pair-frame points.
using PairCandidate = std::function<PointSet(const PairFrame&, Elem)>;

/// a ↦ {(x, x→y) ∈ P : x ≤ a}
PointSet default_pair_candidate(const PairFrame& pf, Elem a);

struct EmbeddingCheck {
  bool fixpoints = true;
  bool injective = true;
  bool meets = true;
  bool joins = true;
  bool arrows = true;
  bool surjective = true;
  /// First failing property and arguments, empty when everything holds.
  std::string failure;

  bool ok() const { return fixpoints && injective && meets && joins && arrows && surjective; }
};

struct PairEmbeddingReport {
  EmbeddingCheck candidate;
  /// True when the candidate failed and an isomorphism search ran.
  bool searched = false;
  /// Element → fixpoint index of the verified isomorphism, if any.
  std::optional<std::vector<Elem>> mapping;
  std::size_t fixpoint_count = 0;

  bool verified() const { return mapping.has_value(); }
};

/// Computes the fixpoint lattice of the pair frame, tries `candidate` (the
/// default map when empty) and falls back to an isomorphism search.
PairEmbeddingReport verify_pair_embedding(const ConditionalOp& op,
                                          const PairCandidate& candidate = {},
                                          const CheckOptions& options = {});

/// Throws Error{EmbeddingNotVerified} describing the candidate failure.
void require_pair_embedding(const PairEmbeddingReport& report);

/// Consonant pairs (↑f, ↓i) with (F,I) ◁ (F',I') iff f' ≰ i and basis
/// â = {(f,i) : f ≤ a}.
struct FilterIdealSpace {
  ConditionalOp op;
  std::vector<std::pair<Elem, Elem>> points;
  RelationalFrame frame;
  /// basis[a] = â
  std::vector<PointSet> basis;
};

/// For all a, b: f ≤ a and a∧b ≤ i imply a→b ≤ i.
bool is_consonant(const ConditionalOp& op, Elem f, Elem i);

/// Throws Error{NotAPreconditional}; throws Error{InternalInconsistency} if
/// some (↑x, ↓x→y) is not consonant.
FilterIdealSpace build_fi_space(const ConditionalOp& op, const CheckOptions& options = {});

struct FiEmbeddingReport {
  EmbeddingCheck embedding;
  /// {â} equals the compact open fixpoints of the space.
  bool compact_open_image = true;
  std::size_t compact_open_count = 0;

  bool ok() const { return embedding.ok() && compact_open_image; }
};

FiEmbeddingReport verify_fi_embedding(const ConditionalOp& op, const CheckOptions& options = {});

/// Throws Error{EmbeddingNotVerified} with the failing pair.
void require_fi_embedding(const FiEmbeddingReport& report);

/// A finite relational frame with the topology generated by `basis`.
struct FrameSpace {
  RelationalFrame frame;
  std::vector<PointSet> basis;
};

FrameSpace as_space(const FilterIdealSpace& space);

/// Open sets: unions of finite intersections of basis sets (including ∅ and
/// X). Throws Error{BudgetExceeded} past `budget` opens.
std::vector<PointSet> open_sets(const FrameSpace& space, std::size_t budget = 1 << 16);

/// Opens that are c◁-fixpoints, in canonical order. Every subset of a
/// finite space is compact, so these are the compact open fixpoints.
std::vector<PointSet> compact_open_fixpoints(const FrameSpace& space,
                                             std::size_t budget = 1 << 16);

struct SpaceReport {
  std::vector<PointSet> cofix;
  /// f_sets[x] and i_sets[x] are indicator sets over `cofix`.
  std::vector<boost::dynamic_bitset<>> f_sets;
  std::vector<boost::dynamic_bitset<>> i_sets;

  bool separation = false;          // x = y iff (F(x),I(x)) = (F(y),I(y))
  bool closed_and_basis = false;    // closed under ∩, ⋁◁, →◁ and a basis
  bool realization = false;         // every consonant pair is some (F(x),I(x))
  bool relation_matches = false;    // x ◁ y iff I(x) ∩ F(y) = ∅
  std::vector<std::string> notes;

  bool all_pass() const { return separation && closed_and_basis && realization && relation_matches; }
};

SpaceReport check_space_conditions(const FrameSpace& space, std::size_t budget = 1 << 16);

}  // namespace precond
