#include "precond/selection.hpp"

#include <bit>

#include "precond/error.hpp"

namespace precond {

namespace {

WorldSet bit(std::size_t w) { return WorldSet{1} << w; }

void first_failure(PropertyVerdict& verdict, SelectionWitness witness) {
  if (verdict.pass) {
    verdict.pass = false;
    verdict.witness = witness;
  }
}

}  // namespace

SelectionFrame::SelectionFrame(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.size() > kMaxWorlds) {
    throw Error(ErrorCode::TooLarge, std::to_string(names_.size()) + " worlds exceed the limit of " +
                                         std::to_string(kMaxWorlds));
  }
  succ_.assign((std::size_t{1} << names_.size()) * names_.size(), 0);
}

void SelectionFrame::set_centered_minimum() {
  for (WorldSet a = 0; a <= all(); ++a) {
    for (std::size_t w = 0; w < size(); ++w) set_successors(a, w, a & bit(w));
    if (a == all()) break;
  }
}

std::string SelectionFrame::format_set(WorldSet s) const {
  std::string out = "{";
  bool first = true;
  for (std::size_t w = 0; w < size(); ++w) {
    if (s & bit(w)) {
      out += (first ? "" : ",") + names_[w];
      first = false;
    }
  }
  return out + "}";
}

FramePropertyReport check_frame(const SelectionFrame& frame) {
  FramePropertyReport report;
  const std::size_t k = frame.size();
  const std::uint64_t subsets = std::uint64_t{1} << k;
  for (std::uint64_t am = 0; am < subsets; ++am) {
    const auto a = static_cast<WorldSet>(am);
    for (std::size_t w = 0; w < k; ++w) {
      const WorldSet s = frame.successors(a, w);
      if (s & ~a) {
        first_failure(report.success, {a, 0, w, static_cast<std::size_t>(std::countr_zero(s & ~a)), 0});
      }
      if ((a & bit(w)) && s != bit(w)) {
        const WorldSet bad = s ^ bit(w);
        first_failure(report.centering,
                      {a, 0, w, static_cast<std::size_t>(std::countr_zero(bad)), 0});
      }
      if (std::popcount(s) > 1) {
        const auto v = static_cast<std::size_t>(std::countr_zero(s));
        const auto u = static_cast<std::size_t>(std::countr_zero(s & (s - 1)));
        first_failure(report.functionality, {a, 0, w, v, u});
      }
    }
    if (!report.strong_density.pass) continue;
    // Every C ⊆ A arises as A∩B for B = C.
    WorldSet c = a;
    while (true) {
      for (std::size_t w = 0; w < k && report.strong_density.pass; ++w) {
        const WorldSet via = frame.successors(a, w);
        WorldSet targets = frame.successors(c, w);
        while (targets) {
          const auto v = static_cast<std::size_t>(std::countr_zero(targets));
          targets &= targets - 1;
          bool found = false;
          for (WorldSet us = via; us && !found; us &= us - 1) {
            found = frame.related(c, static_cast<std::size_t>(std::countr_zero(us)), v);
          }
          if (!found) {
            first_failure(report.strong_density, {a, c, w, v, 0});
            break;
          }
        }
      }
      if (c == 0 || !report.strong_density.pass) break;
      c = (c - 1) & a;
    }
  }
  return report;
}

SelectionFrame from_well_order(std::vector<std::string> names, const std::vector<std::size_t>& order) {
  const std::size_t k = names.size();
  std::vector<bool> seen(k, false);
  if (order.size() != k) throw Error(ErrorCode::InvalidSpec, "order must list every world once");
  for (std::size_t w : order) {
    if (w >= k || seen[w]) throw Error(ErrorCode::InvalidSpec, "order must list every world once");
    seen[w] = true;
  }
  std::vector<std::size_t> rank(k);
  for (std::size_t i = 0; i < k; ++i) rank[order[i]] = i;

  SelectionFrame frame(std::move(names));
  for (std::uint64_t am = 0; am < (std::uint64_t{1} << k); ++am) {
    const auto a = static_cast<WorldSet>(am);
    for (std::size_t w = 0; w < k; ++w) {
      for (std::size_t i = rank[w]; i < k; ++i) {
        if (a & bit(order[i])) {
          frame.relate(a, w, order[i]);
          break;
        }
      }
    }
  }
  return frame;
}

WorldSet arrow_selection(const SelectionFrame& frame, WorldSet a, WorldSet b) {
  WorldSet out = 0;
  for (std::size_t w = 0; w < frame.size(); ++w)
    if ((frame.successors(a, w) & ~b) == 0) out |= bit(w);
  return out;
}

std::optional<std::pair<Elem, Elem>> boolean_negation_import_failure(const ConditionalOp& op) {
  const FiniteLattice& l = op.lattice();
  const auto n = static_cast<Elem>(l.size());
  std::vector<Elem> comp(n, l.top());
  for (Elem a = 0; a < n; ++a) {
    for (Elem c = 0; c < n; ++c) {
      if (l.meet(a, c) == l.bottom() && l.join(a, c) == l.top()) {
        comp[a] = c;
        break;
      }
    }
  }
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (!l.leq(comp[op(a, b)], op(a, comp[b]))) return std::make_pair(a, b);
  return std::nullopt;
}

ConditionalOp selection_op(const SelectionFrame& frame) {
  auto lattice = std::make_shared<const FiniteLattice>(make_powerset(frame.size()));
  return ConditionalOp::from_function(lattice, [&](Elem a, Elem b) {
    return static_cast<Elem>(arrow_selection(frame, a, b));
  });
}

BooleanSelection ba_to_selection(const ConditionalOp& op, const CheckOptions& options) {
  const FiniteLattice& l = op.lattice();
  if (!l.is_boolean()) throw Error(ErrorCode::NotBoolean, l.name() + " is not a Boolean lattice");
  static constexpr AxiomId required[] = {AxiomId::P1, AxiomId::P2, AxiomId::P3, AxiomId::P4,
                                         AxiomId::P5, AxiomId::MP, AxiomId::ID, AxiomId::NORM};
  for (AxiomId ax : required) {
    const AxiomResult r = check_axiom(op, ax, options);
    if (!r.pass) {
      std::string msg = std::string(to_string(ax)) + " fails";
      if (r.counterexample) msg += " at " + describe_counterexample(l, *r.counterexample);
      throw Error(ErrorCode::PreconditionFailed, msg);
    }
  }
  if (const auto cx = boolean_negation_import_failure(op)) {
    throw Error(ErrorCode::PreconditionFailed,
                "NEGIMP fails at (" + l.name_of(cx->first) + "," + l.name_of(cx->second) + ")");
  }

  BooleanSelection out{SelectionFrame(std::vector<std::string>{}), l.atoms(), {}, {}};
  const std::size_t k = out.atoms.size();
  std::vector<std::string> names;
  for (Elem atom : out.atoms) names.push_back(l.name_of(atom));
  out.frame = SelectionFrame(std::move(names));

  const std::size_t subsets = std::size_t{1} << k;
  out.mask_to_element.assign(subsets, l.bottom());
  for (std::size_t s = 0; s < subsets; ++s)
    for (std::size_t w = 0; w < k; ++w)
      if (s & bit(w)) out.mask_to_element[s] = l.join(out.mask_to_element[s], out.atoms[w]);

  const auto n = static_cast<Elem>(l.size());
  for (std::size_t s = 0; s < subsets; ++s) {
    const Elem a = out.mask_to_element[s];
    for (std::size_t w = 0; w < k; ++w) {
      for (std::size_t v = 0; v < k; ++v) {
        bool rel = true;
        for (Elem b = 0; b < n && rel; ++b)
          if (l.leq(out.atoms[w], op(a, b)) && !l.leq(out.atoms[v], b)) rel = false;
        if (rel) out.frame.relate(static_cast<WorldSet>(s), w, v);
      }
    }
  }

  out.properties = check_frame(out.frame);
  if (!out.properties.all_pass()) {
    throw Error(ErrorCode::InternalInconsistency,
                "frame built from " + l.name() + " is not a strongly dense functional selection frame");
  }
  for (std::size_t s = 0; s < subsets; ++s) {
    for (std::size_t t = 0; t < subsets; ++t) {
      const WorldSet r = arrow_selection(out.frame, static_cast<WorldSet>(s), static_cast<WorldSet>(t));
      if (out.mask_to_element[r] != op(out.mask_to_element[s], out.mask_to_element[t])) {
        throw Error(ErrorCode::InternalInconsistency,
                    "round trip differs at " + out.frame.format_set(static_cast<WorldSet>(s)) + " → " +
                        out.frame.format_set(static_cast<WorldSet>(t)));
      }
    }
  }
  return out;
}

}  // namespace precond
