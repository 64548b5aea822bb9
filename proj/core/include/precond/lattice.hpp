#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace precond {

/// Dense element index 0..n-1. Names are display metadata only.
using Elem = std::uint32_t;

/// Raw order data as read from a file or built in code, before validation.
struct OrderData {
  enum class Kind { Covers, Leq };

  std::string name;
  std::vector<std::string> names;
  Kind kind = Kind::Covers;
  /// (a, b) means a is covered by b (Covers) or a <= b (Leq).
  std::vector<std::pair<Elem, Elem>> pairs;
};

struct LatticeLimits {
  std::size_t max_elements = 64;
};

/// A finite bounded lattice with precomputed order, meet and join tables.
///
/// Instances are immutable once built and cheap to share through
/// `std::shared_ptr<const FiniteLattice>`.
class FiniteLattice {
 public:
  /// Validates raw order data and computes meet/join tables.
  ///
  /// Covers are closed reflexively and transitively; a Leq relation must
  /// already be reflexive-transitive up to missing diagonal entries.
  /// Throws Error{NotAPartialOrder | MissingBound | NotALattice | TooLarge}.
  static FiniteLattice validate(const OrderData& data, LatticeLimits limits = {});

  /// Builds a lattice whose tables were computed elsewhere (for example the
  /// fixpoint lattice of a frame). Checks that meet/join agree with `leq`
  /// on comparable pairs and that they are commutative lower/upper bounds;
  /// throws Error{NotALattice} otherwise.
  static FiniteLattice from_tables(std::string name, std::vector<std::string> names,
                                   std::vector<std::uint8_t> leq, std::vector<Elem> meet,
                                   std::vector<Elem> join);

  std::size_t size() const noexcept { return n_; }
  const std::string& name() const noexcept { return name_; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name_of(Elem e) const { return names_.at(e); }
  std::optional<Elem> find(std::string_view name) const;

  bool leq(Elem a, Elem b) const noexcept { return leq_[a * n_ + b] != 0; }
  bool lt(Elem a, Elem b) const noexcept { return a != b && leq(a, b); }
  Elem meet(Elem a, Elem b) const noexcept { return meet_[a * n_ + b]; }
  Elem join(Elem a, Elem b) const noexcept { return join_[a * n_ + b]; }
  Elem bottom() const noexcept { return bottom_; }
  Elem top() const noexcept { return top_; }

  /// Elements covering the bottom, in index order.
  std::vector<Elem> atoms() const;
  bool is_distributive() const;
  /// Distributive and every element has a complement.
  bool is_boolean() const;

  friend bool operator==(const FiniteLattice& a, const FiniteLattice& b) {
    return a.n_ == b.n_ && a.leq_ == b.leq_;
  }

 private:
  FiniteLattice() = default;

  std::size_t n_ = 0;
  std::string name_;
  std::vector<std::string> names_;
  std::vector<std::uint8_t> leq_;
  std::vector<Elem> meet_;
  std::vector<Elem> join_;
  Elem bottom_ = 0;
  Elem top_ = 0;
};

/// Principal filter ↑g. In a finite lattice every filter is principal.
struct PrincipalFilter {
  Elem generator;
  bool contains(const FiniteLattice& lattice, Elem x) const { return lattice.leq(generator, x); }
  friend bool operator==(const PrincipalFilter&, const PrincipalFilter&) = default;
};

/// Principal ideal ↓g.
struct PrincipalIdeal {
  Elem generator;
  bool contains(const FiniteLattice& lattice, Elem x) const { return lattice.leq(x, generator); }
  friend bool operator==(const PrincipalIdeal&, const PrincipalIdeal&) = default;
};

/// All n² pairs (↑x, ↓y), ordered by (x, y).
std::vector<std::pair<PrincipalFilter, PrincipalIdeal>> enumerate_filter_ideal_pairs(
    const FiniteLattice& lattice);

/// Cover pairs (a, b), a ⋖ b, sorted by (a, b).
std::vector<std::pair<Elem, Elem>> hasse_edges(const FiniteLattice& lattice);

/// Re-express a lattice as cover data (names preserved).
OrderData to_order_data(const FiniteLattice& lattice);

/// Searches for an order isomorphism from `a` onto `b`. `accept`, if set, is
/// called on every complete candidate map and may reject it. Returns the
/// first accepted map in lexicographic order of images.
std::optional<std::vector<Elem>> find_order_isomorphism(
    const FiniteLattice& a, const FiniteLattice& b,
    const std::function<bool(const std::vector<Elem>&)>& accept = {});

// Convenience builders used by the catalog, tests and benchmarks.

/// Chain 0 < 1 < ... < n-1 with the given display names (defaults to indices).
FiniteLattice make_chain(std::size_t n, std::vector<std::string> names = {});
/// Powerset of a k-element set; element index = subset bit mask.
FiniteLattice make_powerset(std::size_t k);
/// Validates from names and cover pairs given by name.
FiniteLattice make_from_covers(std::string name, std::vector<std::string> names,
                               const std::vector<std::pair<std::string, std::string>>& covers);

/// Graphviz rendering of the Hasse diagram (bottom at the bottom).
std::string hasse_dot(const FiniteLattice& lattice);

}  // namespace precond
