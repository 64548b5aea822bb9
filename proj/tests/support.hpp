#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

#include "precond/catalog.hpp"

namespace support {

using namespace precond;

inline LatticePtr share(FiniteLattice l) { return std::make_shared<const FiniteLattice>(std::move(l)); }

inline Elem at(const FiniteLattice& l, std::string_view name) {
  const auto e = l.find(name);
  if (!e) throw std::runtime_error("no element " + std::string(name));
  return *e;
}

inline const ConditionalOp& catalog_op(std::string_view name) { return *catalog_entry(name).doc.op; }

inline LatticePtr chain(std::size_t n) { return share(make_chain(n)); }

// Straight transcription of each axiom, kept separate from the library's
// evaluator so the two can be compared.
inline bool oracle_holds(const ConditionalOp& op, AxiomId axiom) {
  const FiniteLattice& l = op.lattice();
  const Elem n = static_cast<Elem>(l.size());
  const Elem zero = l.bottom();
  const Elem one = l.top();
  auto imp = [&](Elem x, Elem y) { return op(x, y); };
  auto neg = [&](Elem x) { return op(x, zero); };
  auto le = [&](Elem x, Elem y) { return l.leq(x, y); };
  auto m = [&](Elem x, Elem y) { return l.meet(x, y); };
  for (Elem a = 0; a < n; ++a) {
    switch (axiom) {
      case AxiomId::P1: if (!le(imp(one, a), a)) return false; continue;
      case AxiomId::SEMI: if (m(a, neg(a)) != zero) return false; continue;
      case AxiomId::INV: if (neg(neg(a)) != a) return false; continue;
      case AxiomId::ID: if (imp(a, a) != one) return false; continue;
      case AxiomId::PC_TOP: if (neg(one) != zero) return false; continue;
      default: break;
    }
    for (Elem b = 0; b < n; ++b) {
      switch (axiom) {
        case AxiomId::P2: if (!le(m(a, b), imp(a, b))) return false; continue;
        case AxiomId::P3: if (!le(imp(a, b), imp(a, m(a, b)))) return false; continue;
        case AxiomId::MP: if (!le(m(a, imp(a, b)), b)) return false; continue;
        case AxiomId::WM: if (!le(b, imp(a, b))) return false; continue;
        case AxiomId::NEGIMP: if (!le(neg(imp(a, b)), imp(a, neg(b)))) return false; continue;
        case AxiomId::PC_ANTI: if (le(a, b) && !le(neg(b), neg(a))) return false; continue;
        default: break;
      }
      for (Elem c = 0; c < n; ++c) {
        switch (axiom) {
          case AxiomId::P4: if (!le(imp(a, m(b, c)), imp(a, b))) return false; break;
          case AxiomId::P5: if (!le(imp(a, imp(m(a, b), c)), imp(m(a, b), c))) return false; break;
          case AxiomId::FLAT: if (imp(a, imp(m(a, b), c)) != imp(m(a, b), c)) return false; break;
          case AxiomId::NORM: if (!le(m(imp(a, b), imp(a, c)), imp(a, m(b, c)))) return false; break;
          default: break;
        }
      }
    }
  }
  return true;
}

/// Tables with entries drawn from a code in base n, cell 0 most significant.
inline ConditionalOp table_from_code(const LatticePtr& l, std::uint64_t code) {
  const std::size_t n = l->size();
  std::vector<Elem> table(n * n);
  for (std::size_t i = table.size(); i-- > 0;) {
    table[i] = static_cast<Elem>(code % n);
    code /= n;
  }
  return ConditionalOp(l, std::move(table));
}

}  // namespace support
