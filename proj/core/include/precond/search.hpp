#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "precond/cond_ops.hpp"

namespace precond {

struct SearchSpec {
  LatticePtr lattice;
  std::vector<AxiomId> require;
  /// Each of these must fail on a witness.
  std::vector<AxiomId> forbid;
  /// Empty, or n² cells where a value pins the entry.
  std::vector<std::optional<Elem>> fixed;
  std::uint64_t node_budget = 50'000'000;
  bool find_all = false;
  /// Stop collecting after this many witnesses in find_all mode.
  std::size_t max_witnesses = 1'000'000;
};

struct SearchResult {
  std::vector<ConditionalOp> witnesses;
  /// Table entries tried.
  std::uint64_t nodes = 0;
  /// The whole space was explored.
  bool exhausted = false;
};

/// Depth-first search over tables in row-major order, values ascending.
/// Each instance of a required axiom is watched on the first unassigned
/// cell it reads and re-evaluated when that cell is filled. Throws
/// Error{InvalidSpec} when require and forbid overlap or `fixed` is
/// malformed, and Error{BudgetExhausted} when the node budget runs out
/// before a conclusion.
SearchResult find_witness(const SearchSpec& spec);

/// All bounded lattices with at most `max_size` elements, one per
/// isomorphism class, ordered by size.
std::vector<FiniteLattice> enumerate_lattices(std::size_t max_size);

/// The stored inventory of lattices up to 5 elements (1, 1, 1, 2 and 5 per
/// size), ordered by size.
const std::vector<LatticePtr>& lattice_inventory();

struct InventoryAttempt {
  std::string lattice;
  std::uint64_t nodes = 0;
  bool exhausted = false;
};

struct MinimalWitness {
  std::optional<ConditionalOp> witness;
  std::vector<InventoryAttempt> attempts;
};

/// Runs find_witness on each inventory lattice accepted by `filter`, in
/// inventory order, and returns the first hit.
MinimalWitness minimal_witness(const std::vector<AxiomId>& require, const std::vector<AxiomId>& forbid,
                               const std::function<bool(const FiniteLattice&)>& filter = {},
                               std::uint64_t node_budget = 50'000'000);

}  // namespace precond
