#include "precond/frames.hpp"

#include <algorithm>
#include <set>

#include "precond/error.hpp"

namespace precond {

namespace {

void require_width(const RelationalFrame& frame, const PointSet& s) {
  if (s.size() != frame.size()) {
    throw Error(ErrorCode::WidthMismatch, "set of width " + std::to_string(s.size()) +
                                              " on a frame of " + std::to_string(frame.size()) +
                                              " points");
  }
}

}  // namespace

RelationalFrame::RelationalFrame(std::string name, std::vector<std::string> names,
                                 const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                                 bool reflexive)
    : name_(std::move(name)), names_(std::move(names)) {
  const std::size_t m = names_.size();
  pred_.assign(m, PointSet(m));
  succ_.assign(m, PointSet(m));
  for (auto [y, x] : edges) {
    if (y >= m || x >= m) throw Error(ErrorCode::InvalidSpec, "edge references unknown point");
    pred_[x].set(y);
    succ_[y].set(x);
  }
  if (reflexive) {
    for (std::size_t x = 0; x < m; ++x) {
      pred_[x].set(x);
      succ_[x].set(x);
    }
  }
}

PointSet RelationalFrame::make_set(std::initializer_list<std::size_t> points) const {
  PointSet s(size());
  for (std::size_t p : points) s.set(p);
  return s;
}

std::vector<std::pair<std::size_t, std::size_t>> RelationalFrame::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t y = 0; y < size(); ++y)
    for (auto x = succ_[y].find_first(); x != PointSet::npos; x = succ_[y].find_next(x))
      out.emplace_back(y, x);
  return out;
}

PointSet arrow(const RelationalFrame& frame, const PointSet& a, const PointSet& b) {
  require_width(frame, a);
  require_width(frame, b);
  const PointSet both = a & b;
  // Points of A none of whose successors lie in A∩B.
  PointSet blocked(frame.size());
  for (auto y = a.find_first(); y != PointSet::npos; y = a.find_next(y))
    if (!frame.successors(y).intersects(both)) blocked.set(y);
  PointSet out(frame.size());
  for (std::size_t x = 0; x < frame.size(); ++x)
    if (!frame.predecessors(x).intersects(blocked)) out.set(x);
  return out;
}

PointSet closure(const RelationalFrame& frame, const PointSet& a) {
  return arrow(frame, frame.full_set(), a);
}

std::string format_set(const RelationalFrame& frame, const PointSet& set) {
  std::string out = "{";
  bool first = true;
  for (auto i = set.find_first(); i != PointSet::npos; i = set.find_next(i)) {
    out += (first ? "" : ",") + frame.names()[i];
    first = false;
  }
  return out + "}";
}

bool canonical_less(const PointSet& a, const PointSet& b) {
  const auto ca = a.count();
  const auto cb = b.count();
  if (ca != cb) return ca < cb;
  auto i = a.find_first();
  auto j = b.find_first();
  while (i != PointSet::npos && j != PointSet::npos) {
    if (i != j) return i < j;
    i = a.find_next(i);
    j = b.find_next(j);
  }
  return false;
}

struct FixpointLattice::Parts {
  std::vector<PointSet> sets;
  std::map<PointSet, Elem> index;
  LatticePtr lattice;
  std::vector<Elem> table;
};

FixpointLattice::FixpointLattice(const RelationalFrame& frame, std::vector<PointSet> family,
                                 const FrameLimits& limits)
    : FixpointLattice(build(frame, std::move(family), limits)) {}

FixpointLattice::FixpointLattice(Parts parts)
    : sets_(std::move(parts.sets)),
      index_(std::move(parts.index)),
      lattice_(parts.lattice),
      arrow_(std::move(parts.lattice), std::move(parts.table)) {}

FixpointLattice::Parts FixpointLattice::build(const RelationalFrame& frame,
                                              std::vector<PointSet> family,
                                              const FrameLimits& limits) {
  Parts parts;
  auto& sets = parts.sets;
  sets = std::move(family);
  std::sort(sets.begin(), sets.end(), canonical_less);
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  const std::size_t n = sets.size();
  if (n == 0) throw Error(ErrorCode::InternalInconsistency, "empty fixpoint family");
  if (n > limits.max_fixpoints) {
    throw Error(ErrorCode::TooLarge, std::to_string(n) + " fixpoints exceed the limit of " +
                                         std::to_string(limits.max_fixpoints));
  }
  for (std::size_t i = 0; i < n; ++i) {
    require_width(frame, sets[i]);
    if (closure(frame, sets[i]) != sets[i]) {
      throw Error(ErrorCode::InternalInconsistency, format_set(frame, sets[i]) + " is not a fixpoint");
    }
    parts.index.emplace(sets[i], static_cast<Elem>(i));
  }

  auto lookup = [&](const PointSet& s, const char* what) {
    auto it = parts.index.find(s);
    if (it == parts.index.end()) {
      throw Error(ErrorCode::InternalInconsistency,
                  std::string("family not closed under ") + what + ": " + format_set(frame, s));
    }
    return it->second;
  };

  std::vector<std::string> names;
  names.reserve(n);
  for (const auto& s : sets) names.push_back(format_set(frame, s));
  std::vector<std::uint8_t> leq(n * n);
  std::vector<Elem> meet(n * n);
  std::vector<Elem> join(n * n);
  parts.table.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      leq[i * n + j] = sets[i].is_subset_of(sets[j]);
      if (j < i) {
        meet[i * n + j] = meet[j * n + i];
        join[i * n + j] = join[j * n + i];
      } else {
        meet[i * n + j] = lookup(sets[i] & sets[j], "intersection");
        join[i * n + j] = lookup(closure(frame, sets[i] | sets[j]), "join");
      }
      parts.table[i * n + j] = lookup(arrow(frame, sets[i], sets[j]), "arrow");
    }
  }
  parts.lattice = std::make_shared<const FiniteLattice>(FiniteLattice::from_tables(
      frame.name() + "-fixpoints", std::move(names), std::move(leq), std::move(meet),
      std::move(join)));
  return parts;
}

std::optional<Elem> FixpointLattice::index_of(const PointSet& set) const {
  auto it = index_.find(set);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

FixpointLattice fixpoints(const RelationalFrame& frame, const FrameLimits& limits) {
  const std::size_t m = frame.size();
  if (m > limits.exhaustive_points || m > 63) {
    throw Error(ErrorCode::TooLarge, std::to_string(m) +
                                         " points exceed the exhaustive fixpoint limit of " +
                                         std::to_string(limits.exhaustive_points));
  }
  // One-word masks: c(A) = {x : no predecessor of x is a point without successors in A}.
  std::vector<std::uint64_t> pred(m);
  std::vector<std::uint64_t> succ(m);
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = 0; y < m; ++y) {
      if (frame.related(y, x)) {
        pred[x] |= std::uint64_t{1} << y;
        succ[y] |= std::uint64_t{1} << x;
      }
    }
  }
  std::vector<PointSet> found;
  const std::uint64_t count = std::uint64_t{1} << m;
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    std::uint64_t blocked = 0;
    for (std::size_t y = 0; y < m; ++y)
      if ((succ[y] & mask) == 0) blocked |= std::uint64_t{1} << y;
    std::uint64_t closed = 0;
    for (std::size_t x = 0; x < m; ++x)
      if ((pred[x] & blocked) == 0) closed |= std::uint64_t{1} << x;
    if (closed == mask) {
      if (found.size() >= limits.max_fixpoints) {
        throw Error(ErrorCode::TooLarge, "more than " + std::to_string(limits.max_fixpoints) +
                                             " fixpoints");
      }
      found.emplace_back(m, mask);
    }
  }
  return FixpointLattice(frame, std::move(found), limits);
}

AxiomReport check_induced_preconditional(const RelationalFrame& frame, const FrameLimits& limits,
                                         const CheckOptions& options) {
  return check_preconditional(fixpoints(frame, limits).arrow_op(), options);
}

FixpointLattice generate_from(const RelationalFrame& frame, const std::vector<PointSet>& generators,
                              std::size_t budget, const FrameLimits& limits) {
  std::set<PointSet> seen;
  std::vector<PointSet> family;
  auto add = [&](PointSet s) {
    if (seen.insert(s).second) {
      if (family.size() >= budget) {
        throw Error(ErrorCode::BudgetExceeded,
                    "closure exceeds the budget of " + std::to_string(budget) + " sets");
      }
      family.push_back(std::move(s));
    }
  };
  add(closure(frame, frame.empty_set()));
  add(frame.full_set());
  for (const auto& g : generators) {
    require_width(frame, g);
    add(closure(frame, g));
  }
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      const PointSet a = family[i];
      const PointSet b = family[j];
      add(a & b);
      add(closure(frame, a | b));
      add(arrow(frame, a, b));
      add(arrow(frame, b, a));
    }
  }
  return FixpointLattice(frame, std::move(family), limits);
}

FixpointLattice fixpoints_by_generation(const RelationalFrame& frame, std::size_t budget,
                                        const FrameLimits& limits) {
  std::vector<PointSet> singletons;
  for (std::size_t p = 0; p < frame.size(); ++p) {
    PointSet s(frame.size());
    s.set(p);
    singletons.push_back(std::move(s));
  }
  return generate_from(frame, singletons, budget, limits);
}

}  // namespace precond
