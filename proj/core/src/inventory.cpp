#include <algorithm>

#include "precond/error.hpp"
#include "precond/search.hpp"

namespace precond {

namespace {

struct StoredLattice {
  const char* name;
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> covers;
};

// Output of enumerate_lattices(5), with readable names.
const std::vector<StoredLattice>& stored() {
  static const std::vector<StoredLattice> data = {
      {"chain-1", {"0"}, {}},
      {"chain-2", {"0", "1"}, {{"0", "1"}}},
      {"chain-3", {"0", "a", "1"}, {{"0", "a"}, {"a", "1"}}},
      {"chain-4", {"0", "a", "b", "1"}, {{"0", "a"}, {"a", "b"}, {"b", "1"}}},
      {"B2", {"0", "a", "b", "1"}, {{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}}},
      {"chain-5", {"0", "a", "b", "c", "1"}, {{"0", "a"}, {"a", "b"}, {"b", "c"}, {"c", "1"}}},
      {"B2-top", {"0", "a", "b", "c", "1"},
       {{"0", "a"}, {"0", "b"}, {"a", "c"}, {"b", "c"}, {"c", "1"}}},
      {"B2-bottom", {"0", "a", "b", "c", "1"},
       {{"0", "a"}, {"a", "b"}, {"a", "c"}, {"b", "1"}, {"c", "1"}}},
      {"N5", {"0", "a", "b", "c", "1"}, {{"0", "a"}, {"a", "b"}, {"0", "c"}, {"b", "1"}, {"c", "1"}}},
      {"M3", {"0", "a", "b", "c", "1"},
       {{"0", "a"}, {"0", "b"}, {"0", "c"}, {"a", "1"}, {"b", "1"}, {"c", "1"}}},
  };
  return data;
}

}  // namespace

std::vector<FiniteLattice> enumerate_lattices(std::size_t max_size) {
  std::vector<FiniteLattice> out;
  for (std::size_t n = 1; n <= max_size; ++n) {
    if (n > 7) throw Error(ErrorCode::TooLarge, "lattice enumeration is limited to 7 elements");
    if (n == 1) {
      out.push_back(make_chain(1));
      continue;
    }
    // Element 0 is the bottom, n-1 the top; enumerate strict orders among the rest.
    const std::size_t m = n - 2;
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        if (i != j) slots.emplace_back(i + 1, j + 1);
    std::vector<FiniteLattice> found;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
      std::vector<std::uint8_t> lt(n * n, 0);
      for (std::size_t x = 1; x < n; ++x) lt[0 * n + x] = 1;
      for (std::size_t x = 0; x + 1 < n; ++x) lt[x * n + (n - 1)] = 1;
      for (std::size_t s = 0; s < slots.size(); ++s)
        if (mask >> s & 1) lt[slots[s].first * n + slots[s].second] = 1;
      bool order = true;
      for (std::size_t x = 0; x < n && order; ++x)
        for (std::size_t y = 0; y < n && order; ++y) {
          if (lt[x * n + y] && lt[y * n + x]) order = false;
          for (std::size_t z = 0; z < n && order; ++z)
            if (lt[x * n + y] && lt[y * n + z] && !lt[x * n + z]) order = false;
        }
      if (!order) continue;
      OrderData data;
      data.kind = OrderData::Kind::Leq;
      data.name = "lattice-" + std::to_string(n) + "-" + std::to_string(found.size());
      for (std::size_t x = 0; x < n; ++x) data.names.push_back(std::to_string(x));
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
          if (x == y || lt[x * n + y]) data.pairs.emplace_back(static_cast<Elem>(x), static_cast<Elem>(y));
      std::optional<FiniteLattice> candidate;
      try {
        candidate = FiniteLattice::validate(data);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::NotALattice) throw;
        continue;
      }
      const bool seen = std::any_of(found.begin(), found.end(), [&](const FiniteLattice& f) {
        return find_order_isomorphism(f, *candidate).has_value();
      });
      if (!seen) found.push_back(std::move(*candidate));
    }
    for (auto& l : found) out.push_back(std::move(l));
  }
  return out;
}

const std::vector<LatticePtr>& lattice_inventory() {
  static const std::vector<LatticePtr> inventory = [] {
    std::vector<LatticePtr> out;
    for (const auto& s : stored()) out.push_back(std::make_shared<const FiniteLattice>(make_from_covers(s.name, s.names, s.covers)));
    return out;
  }();
  return inventory;
}

}  // namespace precond
