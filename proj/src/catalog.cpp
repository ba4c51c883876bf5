#include "geoimp/catalog.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>

#include "geoimp/guard.hpp"

namespace geoimp {

LatticePtr boolean_square() {
  const std::vector<Subset> sets{0b00, 0b01, 0b10, 0b11};
  return lattice_of_sets({"0", "p", "q", "1"}, sets);
}

LatticePtr boolean_lattice(std::size_t atoms) {
  require_within(atoms, 5, "Boolean lattice");
  std::vector<std::string> names;
  std::vector<Subset> sets;
  for (Subset s = 0; s <= full_set(atoms); ++s) {
    sets.push_back(s);
    std::string name;
    for (int i : members(s)) name += static_cast<char>('a' + i);
    names.push_back(name.empty() ? "0" : name);
  }
  return lattice_of_sets(std::move(names), sets);
}

std::vector<NamedLattice> fixture_lattices(std::size_t max_size) {
  std::vector<NamedLattice> out;
  const auto add = [&](std::size_t size, std::string name, LatticePtr l) {
    if (size <= max_size) out.push_back({std::move(name), std::move(l)});
  };
  add(1, "1-element", chain({"0"}));
  add(2, "2-chain", chain({"0", "1"}));
  add(3, "3-chain", chain({"0", "m", "1"}));
  add(4, "4-chain", chain({"0", "a", "b", "1"}));
  add(4, "Boolean square", boolean_square());
  add(5, "5-chain", chain({"0", "a", "b", "c", "1"}));
  {
    const std::vector<Subset> sets{0b000, 0b001, 0b011, 0b101, 0b111};
    add(5, "square with new bottom", lattice_of_sets({"0", "z", "p", "q", "1"}, sets));
  }
  {
    const std::vector<Subset> sets{0b000, 0b010, 0b100, 0b110, 0b111};
    add(5, "square with new top", lattice_of_sets({"0", "p", "q", "u", "1"}, sets));
  }
  return out;
}

std::vector<MonotoneMap> all_monotone_maps(const LatticePtr& source, const LatticePtr& target) {
  std::vector<MonotoneMap> out;
  const std::size_t n = source->size();
  const int m = static_cast<int>(target->size());
  std::vector<Elem> table(n, 0);
  const auto& order = source->linear_extension();
  // Assign along a linear extension so monotonicity prunes early.
  std::function<void(std::size_t)> fill = [&](std::size_t k) {
    if (k == n) {
      out.push_back(MonotoneMap::make(source, target, table));
      return;
    }
    const Elem a = order[k];
    for (Elem v = 0; v < m; ++v) {
      bool ok = true;
      for (std::size_t j = 0; j < k && ok; ++j) {
        const Elem b = order[j];
        if (source->leq(b, a)) ok = target->leq(table[static_cast<std::size_t>(b)], v);
      }
      if (!ok) continue;
      table[static_cast<std::size_t>(a)] = v;
      fill(k + 1);
    }
  };
  fill(0);
  std::sort(out.begin(), out.end(), [](const MonotoneMap& x, const MonotoneMap& y) {
    return std::lexicographical_compare(x.table().begin(), x.table().end(), y.table().begin(), y.table().end());
  });
  return out;
}

std::vector<std::vector<std::vector<bool>>> all_partial_orders(std::size_t n) {
  require_within(n, 4, "poset enumeration");
  std::vector<std::pair<std::size_t, std::size_t>> off;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (x != y) off.emplace_back(x, y);
    }
  }
  std::vector<std::vector<std::vector<bool>>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << off.size()); ++mask) {
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
    for (std::size_t x = 0; x < n; ++x) leq[x][x] = true;
    for (std::size_t k = 0; k < off.size(); ++k) {
      if ((mask >> k) & 1U) leq[off[k].first][off[k].second] = true;
    }
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) {
      for (std::size_t y = 0; y < n && ok; ++y) {
        if (x != y && leq[x][y] && leq[y][x]) ok = false;
        for (std::size_t z = 0; z < n && ok; ++z) {
          if (leq[x][y] && leq[y][z] && !leq[x][z]) ok = false;
        }
      }
    }
    if (ok) out.push_back(std::move(leq));
  }
  return out;
}

std::vector<std::vector<std::pair<int, int>>> compatible_relations(const std::vector<std::vector<bool>>& leq) {
  const std::size_t n = leq.size();
  require_within(n * n, 16, "relation enumeration");
  std::vector<std::vector<std::pair<int, int>>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n * n)); ++mask) {
    const auto r = [&](std::size_t x, std::size_t y) { return ((mask >> (x * n + y)) & 1U) != 0; };
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) {
      for (std::size_t y = 0; y < n && ok; ++y) {
        if (!leq[x][y]) continue;
        for (std::size_t z = 0; z < n && ok; ++z) ok = !r(y, z) || r(x, z);
      }
    }
    if (!ok) continue;
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (r(x, y)) pairs.emplace_back(static_cast<int>(x), static_cast<int>(y));
      }
    }
    out.push_back(std::move(pairs));
  }
  return out;
}

}  // namespace geoimp
