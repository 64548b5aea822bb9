#pragma once

// Single source of truth for the axiom formulas. The accessor `imp(x, y)`
// returns std::optional<Elem>; an empty result means the cell is not known
// yet (used by the search), and evaluation stops there.

#include <optional>

#include "precond/cond_ops.hpp"
#include "precond/lattice.hpp"

namespace precond::detail {

enum class Relation { Leq, Eq };

struct Sides {
  Elem lhs;
  Elem rhs;
  bool holds;
};

template <class Lattice>
Sides compare(const Lattice& l, Relation rel, Elem lhs, Elem rhs) {
  return {lhs, rhs, rel == Relation::Leq ? l.leq(lhs, rhs) : lhs == rhs};
}

#define PRECOND_CELL(var, x, y) \
  const auto var##_cell = imp((x), (y)); \
  if (!var##_cell) return std::nullopt; \
  const Elem var = *var##_cell

// `Lattice` needs leq, meet, bottom and top; FiniteLattice is the usual one.
template <class Lattice, class Imp>
std::optional<Sides> evaluate(AxiomId axiom, const Lattice& l, Imp&& imp, Elem a, Elem b,
                              Elem c) {
  const Elem zero = l.bottom();
  const Elem one = l.top();
  switch (axiom) {
    case AxiomId::P1: {
      PRECOND_CELL(lhs, one, a);
      return compare(l, Relation::Leq, lhs, a);
    }
    case AxiomId::P2: {
      PRECOND_CELL(rhs, a, b);
      return compare(l, Relation::Leq, l.meet(a, b), rhs);
    }
    case AxiomId::P3: {
      PRECOND_CELL(lhs, a, b);
      PRECOND_CELL(rhs, a, l.meet(a, b));
      return compare(l, Relation::Leq, lhs, rhs);
    }
    case AxiomId::P4: {
      PRECOND_CELL(lhs, a, l.meet(b, c));
      PRECOND_CELL(rhs, a, b);
      return compare(l, Relation::Leq, lhs, rhs);
    }
    case AxiomId::P5:
    case AxiomId::FLAT: {
      PRECOND_CELL(inner, l.meet(a, b), c);
      PRECOND_CELL(lhs, a, inner);
      return compare(l, axiom == AxiomId::P5 ? Relation::Leq : Relation::Eq, lhs, inner);
    }
    case AxiomId::MP: {
      PRECOND_CELL(ab, a, b);
      return compare(l, Relation::Leq, l.meet(a, ab), b);
    }
    case AxiomId::WM: {
      PRECOND_CELL(rhs, a, b);
      return compare(l, Relation::Leq, b, rhs);
    }
    case AxiomId::SEMI: {
      PRECOND_CELL(neg, a, zero);
      return compare(l, Relation::Eq, l.meet(a, neg), zero);
    }
    case AxiomId::INV: {
      PRECOND_CELL(neg, a, zero);
      PRECOND_CELL(lhs, neg, zero);
      return compare(l, Relation::Eq, lhs, a);
    }
    case AxiomId::ID: {
      PRECOND_CELL(lhs, a, a);
      return compare(l, Relation::Eq, lhs, one);
    }
    case AxiomId::NORM: {
      PRECOND_CELL(ab, a, b);
      PRECOND_CELL(ac, a, c);
      PRECOND_CELL(rhs, a, l.meet(b, c));
      return compare(l, Relation::Leq, l.meet(ab, ac), rhs);
    }
    case AxiomId::NEGIMP: {
      PRECOND_CELL(ab, a, b);
      PRECOND_CELL(lhs, ab, zero);
      PRECOND_CELL(nb, b, zero);
      PRECOND_CELL(rhs, a, nb);
      return compare(l, Relation::Leq, lhs, rhs);
    }
    case AxiomId::PC_ANTI: {
      PRECOND_CELL(nb, b, zero);
      PRECOND_CELL(na, a, zero);
      const Sides s = compare(l, Relation::Leq, nb, na);
      return Sides{s.lhs, s.rhs, !l.leq(a, b) || s.holds};
    }
    case AxiomId::PC_TOP: {
      PRECOND_CELL(lhs, one, zero);
      return compare(l, Relation::Eq, lhs, zero);
    }
  }
  return std::nullopt;
}

#undef PRECOND_CELL

}  // namespace precond::detail
