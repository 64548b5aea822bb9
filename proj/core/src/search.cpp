#include "precond/search.hpp"

#include <algorithm>
#include <array>

#include "axiom_eval.hpp"
#include "precond/error.hpp"

namespace precond {

namespace {

struct Instance {
  AxiomId axiom;
  std::array<Elem, 3> vars;
};

class Searcher {
 public:
  explicit Searcher(const SearchSpec& spec)
      : spec_(spec), lattice_(*spec.lattice), n_(lattice_.size()), cells_(n_ * n_) {
    table_.assign(cells_, kUnset);
    watches_.resize(cells_);
    for (AxiomId axiom : spec.require) {
      const int k = arity(axiom);
      const Elem ra = k >= 1 ? static_cast<Elem>(n_) : 1;
      const Elem rb = k >= 2 ? static_cast<Elem>(n_) : 1;
      const Elem rc = k >= 3 ? static_cast<Elem>(n_) : 1;
      for (Elem a = 0; a < ra; ++a)
        for (Elem b = 0; b < rb; ++b)
          for (Elem c = 0; c < rc; ++c) instances_.push_back({axiom, {a, b, c}});
    }
  }

  SearchResult run() {
    for (std::size_t i = 0; i < instances_.size(); ++i) {
      const Status s = evaluate(i);
      if (s == Status::Fails) {
        result_.exhausted = true;
        return result_;
      }
      if (s == Status::Blocked) watches_[blocked_].push_back(i);
    }
    const bool stopped = dfs(0);
    result_.exhausted = !stopped;
    return result_;
  }

 private:
  static constexpr Elem kUnset = static_cast<Elem>(-1);
  enum class Status { Holds, Fails, Blocked };

  Status evaluate(std::size_t index) {
    const Instance& inst = instances_[index];
    auto imp = [&](Elem x, Elem y) -> std::optional<Elem> {
      const std::size_t cell = x * n_ + y;
      if (table_[cell] == kUnset) {
        blocked_ = cell;
        return std::nullopt;
      }
      return table_[cell];
    };
    const auto sides = detail::evaluate(inst.axiom, lattice_, imp, inst.vars[0], inst.vars[1], inst.vars[2]);
    if (!sides) return Status::Blocked;
    return sides->holds ? Status::Holds : Status::Fails;
  }

  // Returns true when the search should stop.
  bool dfs(std::size_t cell) {
    if (cell == cells_) return accept();
    Elem lo = 0;
    Elem hi = static_cast<Elem>(n_ - 1);
    if (!spec_.fixed.empty() && spec_.fixed[cell]) lo = hi = *spec_.fixed[cell];
    for (Elem v = lo; v <= hi; ++v) {
      if (++result_.nodes > spec_.node_budget) {
        throw Error(ErrorCode::BudgetExhausted,
                    "node budget of " + std::to_string(spec_.node_budget) + " reached after " +
                        std::to_string(result_.witnesses.size()) + " witnesses");
      }
      table_[cell] = v;
      const std::size_t mark = trail_.size();
      bool ok = true;
      for (std::size_t index : watches_[cell]) {
        const Status s = evaluate(index);
        if (s == Status::Fails) {
          ok = false;
          break;
        }
        if (s == Status::Blocked) {
          watches_[blocked_].push_back(index);
          trail_.push_back(blocked_);
        }
      }
      const bool stop = ok && dfs(cell + 1);
      while (trail_.size() > mark) {
        watches_[trail_.back()].pop_back();
        trail_.pop_back();
      }
      table_[cell] = kUnset;
      if (stop) return true;
    }
    return false;
  }

  bool accept() {
    ConditionalOp op(spec_.lattice, table_);
    for (AxiomId axiom : spec_.forbid)
      if (check_axiom(op, axiom).pass) return false;
    const AxiomReport report = check_axioms(op, spec_.require);
    if (!report.all_pass()) {
      throw Error(ErrorCode::InternalInconsistency, "search accepted a table that fails a required axiom");
    }
    result_.witnesses.push_back(std::move(op));
    return !spec_.find_all || result_.witnesses.size() >= spec_.max_witnesses;
  }

  const SearchSpec& spec_;
  const FiniteLattice& lattice_;
  std::size_t n_;
  std::size_t cells_;
  std::vector<Elem> table_;
  std::vector<Instance> instances_;
  std::vector<std::vector<std::size_t>> watches_;
  std::vector<std::size_t> trail_;
  std::size_t blocked_ = 0;
  SearchResult result_;
};

}  // namespace

SearchResult find_witness(const SearchSpec& spec) {
  if (!spec.lattice) throw Error(ErrorCode::InvalidSpec, "search needs a lattice");
  for (AxiomId a : spec.require) {
    if (std::find(spec.forbid.begin(), spec.forbid.end(), a) != spec.forbid.end()) {
      throw Error(ErrorCode::InvalidSpec, std::string(to_string(a)) + " is both required and forbidden");
    }
  }
  const std::size_t n = spec.lattice->size();
  if (!spec.fixed.empty()) {
    if (spec.fixed.size() != n * n) throw Error(ErrorCode::InvalidSpec, "fixed entries must cover n×n cells");
    for (const auto& v : spec.fixed)
      if (v && *v >= n) throw Error(ErrorCode::InvalidSpec, "fixed entry out of range");
  }
  return Searcher(spec).run();
}

MinimalWitness minimal_witness(const std::vector<AxiomId>& require, const std::vector<AxiomId>& forbid,
                               const std::function<bool(const FiniteLattice&)>& filter,
                               std::uint64_t node_budget) {
  MinimalWitness out;
  for (const auto& lattice : lattice_inventory()) {
    if (filter && !filter(*lattice)) continue;
    SearchSpec spec;
    spec.lattice = lattice;
    spec.require = require;
    spec.forbid = forbid;
    spec.node_budget = node_budget;
    InventoryAttempt attempt{lattice->name(), 0, false};
    try {
      SearchResult r = find_witness(spec);
      attempt.nodes = r.nodes;
      attempt.exhausted = r.exhausted;
      out.attempts.push_back(attempt);
      if (!r.witnesses.empty()) {
        out.witness = std::move(r.witnesses.front());
        return out;
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::BudgetExhausted) throw;
      attempt.nodes = node_budget;
      out.attempts.push_back(attempt);
    }
  }
  return out;
}

}  // namespace precond
