#include "precond/lattice.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "precond/error.hpp"

namespace precond {

namespace {

std::string pair_text(const std::vector<std::string>& names, Elem a, Elem b) {
  return "(" + names[a] + ", " + names[b] + ")";
}

}  // namespace

FiniteLattice FiniteLattice::validate(const OrderData& data, LatticeLimits limits) {
  const std::size_t n = data.names.size();
  if (n == 0) throw Error(ErrorCode::NotAPartialOrder, "lattice has no elements");
  if (n > limits.max_elements) {
    throw Error(ErrorCode::TooLarge, std::to_string(n) + " elements exceeds the limit of " +
                                         std::to_string(limits.max_elements));
  }
  {
    std::set<std::string> seen(data.names.begin(), data.names.end());
    if (seen.size() != n) throw Error(ErrorCode::NotAPartialOrder, "duplicate element names");
  }

  std::vector<std::uint8_t> leq(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) leq[i * n + i] = 1;
  for (auto [a, b] : data.pairs) {
    if (a >= n || b >= n) throw Error(ErrorCode::NotAPartialOrder, "pair references unknown element");
    leq[a * n + b] = 1;
  }

  if (data.kind == OrderData::Kind::Covers) {
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        if (leq[i * n + k])
          for (std::size_t j = 0; j < n; ++j)
            if (leq[k * n + j]) leq[i * n + j] = 1;
  } else {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        if (leq[i * n + k])
          for (std::size_t j = 0; j < n; ++j)
            if (leq[k * n + j] && !leq[i * n + j]) {
              throw Error(ErrorCode::NotAPartialOrder,
                          "relation is not transitive at " +
                              pair_text(data.names, static_cast<Elem>(i), static_cast<Elem>(j)));
            }
  }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (leq[i * n + j] && leq[j * n + i]) {
        throw Error(ErrorCode::NotAPartialOrder,
                    "cycle or antisymmetry failure between " +
                        pair_text(data.names, static_cast<Elem>(i), static_cast<Elem>(j)));
      }

  auto is_bottom = [&](std::size_t x) {
    for (std::size_t y = 0; y < n; ++y)
      if (!leq[x * n + y]) return false;
    return true;
  };
  auto is_top = [&](std::size_t x) {
    for (std::size_t y = 0; y < n; ++y)
      if (!leq[y * n + x]) return false;
    return true;
  };
  std::optional<Elem> bottom;
  std::optional<Elem> top;
  for (std::size_t x = 0; x < n; ++x) {
    if (is_bottom(x)) bottom = static_cast<Elem>(x);
    if (is_top(x)) top = static_cast<Elem>(x);
  }
  if (!bottom) throw Error(ErrorCode::MissingBound, "no least element");
  if (!top) throw Error(ErrorCode::MissingBound, "no greatest element");

  std::vector<Elem> meet(n * n);
  std::vector<Elem> join(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      std::optional<Elem> glb;
      std::optional<Elem> lub;
      for (std::size_t c = 0; c < n; ++c) {
        if (leq[c * n + a] && leq[c * n + b]) {
          bool greatest = true;
          for (std::size_t d = 0; d < n && greatest; ++d)
            if (leq[d * n + a] && leq[d * n + b] && !leq[d * n + c]) greatest = false;
          if (greatest) glb = static_cast<Elem>(c);
        }
        if (leq[a * n + c] && leq[b * n + c]) {
          bool least = true;
          for (std::size_t d = 0; d < n && least; ++d)
            if (leq[a * n + d] && leq[b * n + d] && !leq[c * n + d]) least = false;
          if (least) lub = static_cast<Elem>(c);
        }
      }
      if (!glb) {
        throw Error(ErrorCode::NotALattice,
                    "no greatest lower bound for " +
                        pair_text(data.names, static_cast<Elem>(a), static_cast<Elem>(b)));
      }
      if (!lub) {
        throw Error(ErrorCode::NotALattice,
                    "no least upper bound for " +
                        pair_text(data.names, static_cast<Elem>(a), static_cast<Elem>(b)));
      }
      meet[a * n + b] = meet[b * n + a] = *glb;
      join[a * n + b] = join[b * n + a] = *lub;
    }
  }

  FiniteLattice lattice;
  lattice.n_ = n;
  lattice.name_ = data.name;
  lattice.names_ = data.names;
  lattice.leq_ = std::move(leq);
  lattice.meet_ = std::move(meet);
  lattice.join_ = std::move(join);
  lattice.bottom_ = *bottom;
  lattice.top_ = *top;
  return lattice;
}

FiniteLattice FiniteLattice::from_tables(std::string name, std::vector<std::string> names,
                                         std::vector<std::uint8_t> leq, std::vector<Elem> meet,
                                         std::vector<Elem> join) {
  const std::size_t n = names.size();
  if (n == 0 || leq.size() != n * n || meet.size() != n * n || join.size() != n * n) {
    throw Error(ErrorCode::NotALattice, "table sizes do not match element count");
  }
  std::optional<Elem> bottom;
  std::optional<Elem> top;
  for (std::size_t a = 0; a < n; ++a) {
    bool all_above = true;
    bool all_below = true;
    for (std::size_t b = 0; b < n; ++b) {
      const Elem m = meet[a * n + b];
      const Elem j = join[a * n + b];
      if (m >= n || j >= n || m != meet[b * n + a] || j != join[b * n + a] ||
          !leq[m * n + a] || !leq[m * n + b] || !leq[a * n + j] || !leq[b * n + j] ||
          (leq[a * n + b] != 0) != (m == a)) {
        throw Error(ErrorCode::NotALattice, "inconsistent meet/join tables at " +
                                                pair_text(names, static_cast<Elem>(a),
                                                          static_cast<Elem>(b)));
      }
      all_above = all_above && leq[a * n + b];
      all_below = all_below && leq[b * n + a];
    }
    if (all_above) bottom = static_cast<Elem>(a);
    if (all_below) top = static_cast<Elem>(a);
  }
  if (!bottom || !top) throw Error(ErrorCode::MissingBound, "tables lack a bound");

  FiniteLattice lattice;
  lattice.n_ = n;
  lattice.name_ = std::move(name);
  lattice.names_ = std::move(names);
  lattice.leq_ = std::move(leq);
  lattice.meet_ = std::move(meet);
  lattice.join_ = std::move(join);
  lattice.bottom_ = *bottom;
  lattice.top_ = *top;
  return lattice;
}

std::optional<Elem> FiniteLattice::find(std::string_view name) const {
  for (std::size_t i = 0; i < n_; ++i)
    if (names_[i] == name) return static_cast<Elem>(i);
  return std::nullopt;
}

std::vector<Elem> FiniteLattice::atoms() const {
  std::vector<Elem> out;
  for (auto [a, b] : hasse_edges(*this))
    if (a == bottom_) out.push_back(b);
  std::sort(out.begin(), out.end());
  return out;
}

bool FiniteLattice::is_distributive() const {
  for (Elem a = 0; a < n_; ++a)
    for (Elem b = 0; b < n_; ++b)
      for (Elem c = 0; c < n_; ++c)
        if (meet(a, join(b, c)) != join(meet(a, b), meet(a, c))) return false;
  return true;
}

bool FiniteLattice::is_boolean() const {
  if (!is_distributive()) return false;
  for (Elem a = 0; a < n_; ++a) {
    bool complemented = false;
    for (Elem b = 0; b < n_ && !complemented; ++b)
      complemented = meet(a, b) == bottom_ && join(a, b) == top_;
    if (!complemented) return false;
  }
  return true;
}

std::vector<std::pair<PrincipalFilter, PrincipalIdeal>> enumerate_filter_ideal_pairs(
    const FiniteLattice& lattice) {
  std::vector<std::pair<PrincipalFilter, PrincipalIdeal>> out;
  const auto n = static_cast<Elem>(lattice.size());
  out.reserve(static_cast<std::size_t>(n) * n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) out.push_back({PrincipalFilter{x}, PrincipalIdeal{y}});
  return out;
}

std::vector<std::pair<Elem, Elem>> hasse_edges(const FiniteLattice& lattice) {
  std::vector<std::pair<Elem, Elem>> out;
  const auto n = static_cast<Elem>(lattice.size());
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (!lattice.lt(a, b)) continue;
      bool cover = true;
      for (Elem c = 0; c < n && cover; ++c)
        if (lattice.lt(a, c) && lattice.lt(c, b)) cover = false;
      if (cover) out.emplace_back(a, b);
    }
  }
  return out;
}

OrderData to_order_data(const FiniteLattice& lattice) {
  OrderData data;
  data.name = lattice.name();
  data.names = lattice.names();
  data.kind = OrderData::Kind::Covers;
  data.pairs = hasse_edges(lattice);
  return data;
}

std::optional<std::vector<Elem>> find_order_isomorphism(
    const FiniteLattice& a, const FiniteLattice& b,
    const std::function<bool(const std::vector<Elem>&)>& accept) {
  const std::size_t n = a.size();
  if (n != b.size()) return std::nullopt;

  // Elements are matched by (down-set size, up-set size) signatures first.
  auto signature = [](const FiniteLattice& l, Elem x) {
    std::size_t down = 0;
    std::size_t up = 0;
    for (Elem y = 0; y < l.size(); ++y) {
      down += l.leq(y, x);
      up += l.leq(x, y);
    }
    return std::pair{down, up};
  };
  std::vector<std::pair<std::size_t, std::size_t>> sig_a(n);
  std::vector<std::pair<std::size_t, std::size_t>> sig_b(n);
  for (Elem x = 0; x < n; ++x) {
    sig_a[x] = signature(a, x);
    sig_b[x] = signature(b, x);
  }

  std::vector<Elem> map(n);
  std::vector<bool> used(n, false);
  std::optional<std::vector<Elem>> found;
  std::function<void(Elem)> extend = [&](Elem x) {
    if (found) return;
    if (x == n) {
      if (!accept || accept(map)) found = map;
      return;
    }
    for (Elem y = 0; y < n && !found; ++y) {
      if (used[y] || sig_a[x] != sig_b[y]) continue;
      bool consistent = true;
      for (Elem p = 0; p < x && consistent; ++p) {
        consistent = a.leq(p, x) == b.leq(map[p], y) && a.leq(x, p) == b.leq(y, map[p]);
      }
      if (!consistent) continue;
      used[y] = true;
      map[x] = y;
      extend(x + 1);
      used[y] = false;
    }
  };
  extend(0);
  return found;
}

FiniteLattice make_chain(std::size_t n, std::vector<std::string> names) {
  OrderData data;
  data.name = std::to_string(n) + "-chain";
  if (names.empty()) {
    for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
  }
  data.names = std::move(names);
  for (std::size_t i = 1; i < n; ++i)
    data.pairs.emplace_back(static_cast<Elem>(i - 1), static_cast<Elem>(i));
  return FiniteLattice::validate(data, {std::max<std::size_t>(n, 64)});
}

FiniteLattice make_powerset(std::size_t k) {
  const std::size_t n = std::size_t{1} << k;
  OrderData data;
  data.name = "powerset-" + std::to_string(k);
  for (std::size_t mask = 0; mask < n; ++mask) {
    std::string label = "{";
    bool first = true;
    for (std::size_t i = 0; i < k; ++i) {
      if (mask >> i & 1) {
        label += (first ? "" : ",") + std::to_string(i);
        first = false;
      }
    }
    data.names.push_back(label + "}");
  }
  for (std::size_t mask = 0; mask < n; ++mask)
    for (std::size_t i = 0; i < k; ++i)
      if (!(mask >> i & 1))
        data.pairs.emplace_back(static_cast<Elem>(mask), static_cast<Elem>(mask | (std::size_t{1} << i)));
  return FiniteLattice::validate(data, {std::max<std::size_t>(n, 64)});
}

FiniteLattice make_from_covers(std::string name, std::vector<std::string> names,
                               const std::vector<std::pair<std::string, std::string>>& covers) {
  OrderData data;
  data.name = std::move(name);
  data.names = std::move(names);
  auto index = [&](const std::string& s) {
    auto it = std::find(data.names.begin(), data.names.end(), s);
    if (it == data.names.end()) throw Error(ErrorCode::NotAPartialOrder, "unknown element " + s);
    return static_cast<Elem>(it - data.names.begin());
  };
  for (const auto& [a, b] : covers) data.pairs.emplace_back(index(a), index(b));
  return FiniteLattice::validate(data);
}

std::string hasse_dot(const FiniteLattice& lattice) {
  std::ostringstream out;
  out << "digraph \"" << lattice.name() << "\" {\n  rankdir=BT;\n  node [shape=circle];\n";
  for (Elem x = 0; x < lattice.size(); ++x)
    out << "  n" << x << " [label=\"" << lattice.name_of(x) << "\"];\n";
  for (auto [a, b] : hasse_edges(lattice)) out << "  n" << a << " -> n" << b << " [dir=none];\n";
  out << "}\n";
  return out.str();
}

}  // namespace precond
