#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "precond/cond_ops.hpp"

namespace precond {

/// Subset of worlds as a bit mask; bit w is world w.
using WorldSet = std::uint32_t;

inline constexpr std::size_t kMaxWorlds = 16;

/// W with a relation R_A for every A ⊆ W.
class SelectionFrame {
 public:
  /// All relations start empty. Throws Error{TooLarge} above kMaxWorlds.
  explicit SelectionFrame(std::vector<std::string> names);

  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  WorldSet all() const noexcept { return static_cast<WorldSet>((std::uint64_t{1} << size()) - 1); }

  /// {v : w R_A v}
  WorldSet successors(WorldSet a, std::size_t w) const { return succ_[a * size() + w]; }
  bool related(WorldSet a, std::size_t w, std::size_t v) const { return (successors(a, w) >> v) & 1U; }
  void set_successors(WorldSet a, std::size_t w, WorldSet vs) { succ_[a * size() + w] = vs; }
  void relate(WorldSet a, std::size_t w, std::size_t v) { succ_[a * size() + w] |= WorldSet{1} << v; }

  /// Sets R_A to {(w,w) : w ∈ A} for every A: the least relations allowed by
  /// centering.
  void set_centered_minimum();

  std::string format_set(WorldSet s) const;

  friend bool operator==(const SelectionFrame&, const SelectionFrame&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<WorldSet> succ_;
};

struct SelectionWitness {
  WorldSet a = 0;
  /// The subset A∩B for strong density; unused otherwise.
  WorldSet c = 0;
  std::size_t w = 0;
  std::size_t v = 0;
  std::size_t u = 0;
};

struct PropertyVerdict {
  bool pass = true;
  std::optional<SelectionWitness> witness;
};

struct FramePropertyReport {
  PropertyVerdict success;        // w R_A v implies v ∈ A
  PropertyVerdict centering;      // w ∈ A implies (w R_A v iff v = w)
  PropertyVerdict functionality;  // w R_A v and w R_A u imply v = u
  PropertyVerdict strong_density; // w R_{A∩B} v implies ∃u: w R_A u and u R_{A∩B} v

  bool all_pass() const {
    return success.pass && centering.pass && functionality.pass && strong_density.pass;
  }
};

/// Exhaustive check of the four properties. Witnesses are the first
/// failures in (A, A∩B, w, v, u) order.
FramePropertyReport check_frame(const SelectionFrame& frame);

/// w R_A v iff v is the first world of A with w ⩽ v in `order` (a
/// permutation of world indices listing W from least to greatest). When no
/// such world exists, w has no R_A-successor.
SelectionFrame from_well_order(std::vector<std::string> names, const std::vector<std::size_t>& order);

/// A →_R B = {w : every R_A-successor of w is in B}.
WorldSet arrow_selection(const SelectionFrame& frame, WorldSet a, WorldSet b);

/// →_R as an operation on the powerset lattice (element index = mask).
ConditionalOp selection_op(const SelectionFrame& frame);

/// First (a, b) with ¬(a→b) ≰ a→¬b, where ¬ is the lattice complement
/// (not a→0). Assumes a Boolean lattice.
std::optional<std::pair<Elem, Elem>> boolean_negation_import_failure(const ConditionalOp& op);

struct BooleanSelection {
  SelectionFrame frame;
  /// World w is the lattice atom atoms[w], in element-index order.
  std::vector<Elem> atoms;
  FramePropertyReport properties;
  /// mask_to_element[S] = ⋁{atoms[w] : w ∈ S}
  std::vector<Elem> mask_to_element;
};

/// Requires P1..P5, MP, ID, NORM and negation import for the Boolean
/// complement. Builds W = atoms and w R_â v iff for all b, w ≤ a→b implies
/// v ≤ b, then verifies the frame is strongly dense and functional and that →_R
/// transports back to `op`. Throws Error{NotBoolean},
/// Error{PreconditionFailed} naming the missing axiom, or
/// Error{InternalInconsistency} if the round trip fails.
BooleanSelection ba_to_selection(const ConditionalOp& op, const CheckOptions& options = {});

}  // namespace precond
