#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "precond/cond_ops.hpp"

namespace precond {

/// Subset of a frame's points; width equals the frame's point count.
using PointSet = boost::dynamic_bitset<std::uint64_t>;

/// A set X with an arbitrary binary relation ◁ (no reflexivity or
/// transitivity assumed).
class RelationalFrame {
 public:
  /// `edges` holds pairs (y, x) meaning y ◁ x. With `reflexive`, every
  /// x ◁ x is added.
  RelationalFrame(std::string name, std::vector<std::string> names,
                  const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                  bool reflexive = false);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name() const noexcept { return name_; }
  const std::vector<std::string>& names() const noexcept { return names_; }

  /// y ◁ x.
  bool related(std::size_t y, std::size_t x) const { return pred_[x].test(y); }
  /// {y : y ◁ x}
  const PointSet& predecessors(std::size_t x) const { return pred_[x]; }
  /// {z : y ◁ z}
  const PointSet& successors(std::size_t y) const { return succ_[y]; }

  PointSet empty_set() const { return PointSet(size()); }
  PointSet full_set() const { return ~PointSet(size()); }
  PointSet make_set(std::initializer_list<std::size_t> points) const;

  /// Edge list (y, x) with y ◁ x, row-major.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

 private:
  std::string name_;
  std::vector<std::string> names_;
  std::vector<PointSet> pred_;
  std::vector<PointSet> succ_;
};

/// A →◁ B = {x | ∀y ◁ x (y ∈ A ⇒ ∃z ▷ y: z ∈ A∩B)}.
/// Throws Error{WidthMismatch}.
PointSet arrow(const RelationalFrame& frame, const PointSet& a, const PointSet& b);

/// c◁(A) = X →◁ A.
PointSet closure(const RelationalFrame& frame, const PointSet& a);

/// "{x,y}" with point names; "{}" for the empty set.
std::string format_set(const RelationalFrame& frame, const PointSet& set);

/// Orders by cardinality, then lexicographically by ascending member lists.
bool canonical_less(const PointSet& a, const PointSet& b);

struct FrameLimits {
  /// Largest point count for which all 2^m subsets are enumerated.
  std::size_t exhaustive_points = 20;
  /// Largest fixpoint lattice that is materialized as a FiniteLattice.
  std::size_t max_fixpoints = 4096;
};

/// The c◁-fixpoints of a frame (or a sub-family closed under ∩, ⋁◁, →◁),
/// with the induced lattice and the induced conditional.
class FixpointLattice {
 public:
  /// Builds from a family of fixpoints already closed under the three
  /// operations; throws Error{InternalInconsistency} if it is not.
  FixpointLattice(const RelationalFrame& frame, std::vector<PointSet> family,
                  const FrameLimits& limits = {});

  const std::vector<PointSet>& fixpoints() const noexcept { return sets_; }
  std::size_t size() const noexcept { return sets_.size(); }
  const PointSet& set_of(Elem e) const { return sets_.at(e); }
  std::optional<Elem> index_of(const PointSet& set) const;

  const LatticePtr& lattice() const noexcept { return lattice_; }
  /// →◁ restricted to fixpoints.
  const ConditionalOp& arrow_op() const noexcept { return arrow_; }

 private:
  struct Parts;
  explicit FixpointLattice(Parts parts);
  static Parts build(const RelationalFrame& frame, std::vector<PointSet> family,
                     const FrameLimits& limits);

  std::vector<PointSet> sets_;
  std::map<PointSet, Elem> index_;
  LatticePtr lattice_;
  ConditionalOp arrow_;
};

/// Enumerates all subsets and keeps the fixpoints. Throws Error{TooLarge}
/// when the frame exceeds `limits.exhaustive_points`.
FixpointLattice fixpoints(const RelationalFrame& frame, const FrameLimits& limits = {});

/// P1..P5 for →◁ on the fixpoint lattice.
AxiomReport check_induced_preconditional(const RelationalFrame& frame,
                                         const FrameLimits& limits = {},
                                         const CheckOptions& options = {});

/// Closes c◁ of the generators, plus the bounds c◁(∅) and X, under ∩, ⋁◁
/// and →◁. Throws Error{BudgetExceeded} past `budget` sets.
FixpointLattice generate_from(const RelationalFrame& frame, const std::vector<PointSet>& generators,
                              std::size_t budget = 4096, const FrameLimits& limits = {});

/// The full fixpoint lattice for frames of any size: every fixpoint is the
/// join of the closures of its singletons, so generating from all
/// singletons reaches all of them.
FixpointLattice fixpoints_by_generation(const RelationalFrame& frame, std::size_t budget = 4096,
                                        const FrameLimits& limits = {});

}  // namespace precond
