#include "geoimp/geometry.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "geoimp/diagnostic.hpp"
#include "geoimp/guard.hpp"

namespace geoimp {

namespace {

bool same_space(const FinSpace& a, const FinSpace& b) { return a.points() == b.points() && a.opens() == b.opens(); }

std::optional<int> find_map(const std::vector<CategoryMap>& maps, int source, int target, const std::vector<int>& table) {
  for (std::size_t k = 0; k < maps.size(); ++k) {
    if (maps[k].source == source && maps[k].target == target && maps[k].map.table() == table) return static_cast<int>(k);
  }
  return std::nullopt;
}

std::vector<int> identity_table(std::size_t n) {
  std::vector<int> t(n);
  for (std::size_t i = 0; i < n; ++i) t[i] = static_cast<int>(i);
  return t;
}

[[noreturn]] void not_a_category(const std::string& message, const std::string& witness) {
  throw ModelError(ErrorKind::NotACategory, message, witness);
}

}  // namespace

SpaceCategory SpaceCategory::make(std::vector<std::string> names, std::vector<SpacePtr> objects, std::vector<CategoryMap> maps) {
  if (names.size() != objects.size()) not_a_category("object names and spaces differ in number", {});
  {
    std::set<std::string> seen;
    for (const auto& n : names) {
      if (!seen.insert(n).second) not_a_category("duplicate object name", n);
    }
    seen.clear();
    for (const auto& m : maps) {
      if (!seen.insert(m.name).second) not_a_category("duplicate map name", m.name);
    }
  }
  const int count = static_cast<int>(objects.size());
  for (auto& m : maps) {
    if (m.source < 0 || m.source >= count || m.target < 0 || m.target >= count) not_a_category("map endpoint is not an object", m.name);
    const auto& s = objects[static_cast<std::size_t>(m.source)];
    const auto& t = objects[static_cast<std::size_t>(m.target)];
    if (!same_space(m.map.source(), *s) || !same_space(m.map.target(), *t)) {
      not_a_category("map endpoints do not match its declared objects", m.name);
    }
    m.map = ContinuousMap::make(s, t, m.map.table());
  }
  for (int x = 0; x < count; ++x) {
    if (!find_map(maps, x, x, identity_table(objects[static_cast<std::size_t>(x)]->size()))) {
      not_a_category("missing identity", names[static_cast<std::size_t>(x)]);
    }
  }
  for (const auto& f : maps) {
    for (const auto& g : maps) {
      if (g.source != f.target) continue;
      if (!find_map(maps, f.source, g.target, f.map.then(g.map).table())) {
        not_a_category("missing composite", g.name + " ∘ " + f.name);
      }
    }
  }
  SpaceCategory c;
  c.names_ = std::move(names);
  c.objects_ = std::move(objects);
  c.maps_ = std::move(maps);
  return c;
}

int SpaceCategory::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return static_cast<int>(i);
  }
  throw ModelError(ErrorKind::UnknownName, "unknown object", std::string(name));
}

SpaceCategory full_category(std::vector<std::string> names, std::vector<SpacePtr> objects) {
  std::vector<CategoryMap> maps;
  for (std::size_t s = 0; s < objects.size(); ++s) {
    for (std::size_t t = 0; t < objects.size(); ++t) {
      int k = 0;
      for (auto& f : ContinuousMap::all(objects[s], objects[t])) {
        std::string name = s == t && f.table() == identity_table(objects[s]->size())
                               ? "id_" + names[s]
                               : names[s] + "->" + names[t] + "#" + std::to_string(k++);
        maps.push_back({std::move(name), static_cast<int>(s), static_cast<int>(t), std::move(f)});
      }
    }
  }
  return SpaceCategory::make(std::move(names), std::move(objects), std::move(maps));
}

SpaceCategory local_closure(const std::vector<SpacePtr>& generators, bool include_empty) {
  std::vector<SpacePtr> found;
  for (const auto& x : generators) {
    require_within(x->size(), size_guard(), "subspace enumeration");
    for (Subset a = 0; a <= x->all(); ++a) {
      if (a == 0 && !include_empty) continue;
      auto sub = subspace(x, a).space;
      if (std::none_of(found.begin(), found.end(), [&](const SpacePtr& y) { return same_space(*y, *sub); })) {
        found.push_back(std::move(sub));
      }
    }
  }
  std::stable_sort(found.begin(), found.end(), [](const SpacePtr& a, const SpacePtr& b) {
    if (a->size() != b->size()) return a->size() < b->size();
    if (a->points() != b->points()) return a->points() < b->points();
    return std::lexicographical_compare(a->opens().begin(), a->opens().end(), b->opens().begin(), b->opens().end(),
                                        canonical_less);
  });
  std::vector<std::string> names;
  std::map<std::string, int> used;
  for (const auto& y : found) {
    std::string name = y->format(y->all());
    const int k = used[name]++;
    if (k > 0) name += "#" + std::to_string(k);
    names.push_back(std::move(name));
  }
  return full_category(std::move(names), std::move(found));
}

SpaceCategory injective_discrete_category(std::size_t n) {
  std::vector<std::string> names;
  std::vector<SpacePtr> objects;
  for (std::size_t k = 0; k <= n; ++k) {
    std::vector<std::string> points;
    for (std::size_t p = 0; p < k; ++p) points.push_back("p" + std::to_string(p));
    names.push_back("D" + std::to_string(k));
    objects.push_back(discrete_space(std::move(points)));
  }
  std::vector<CategoryMap> maps;
  for (std::size_t s = 0; s <= n; ++s) {
    for (std::size_t t = s; t <= n; ++t) {
      int k = 0;
      for (auto& f : ContinuousMap::all(objects[s], objects[t])) {
        if (!classify_map(f).injective) continue;
        std::string name = s == t && f.table() == identity_table(s) ? "id_" + names[s]
                                                                      : names[s] + "->" + names[t] + "#" + std::to_string(k++);
        maps.push_back({std::move(name), static_cast<int>(s), static_cast<int>(t), std::move(f)});
      }
    }
  }
  return SpaceCategory::make(std::move(names), std::move(objects), std::move(maps));
}

CategoryProps category_props(const SpaceCategory& c, bool empty_subspaces) {
  CategoryProps out;
  const int count = static_cast<int>(c.size());
  const bool inhabited = std::any_of(c.objects().begin(), c.objects().end(), [](const SpacePtr& x) { return x->size() > 0; });
  out.local = inhabited;
  if (!inhabited) out.witness = "no nonempty object";
  for (int x = 0; x < count && out.local; ++x) {
    const auto& space = c.object(x);
    require_within(space->size(), size_guard(), "subspace enumeration");
    for (Subset a = 0; a <= space->all() && out.local; ++a) {
      if (a == 0 && !empty_subspaces) continue;
      const auto sub = subspace(space, a);
      bool present = false;
      for (int y = 0; y < count && !present; ++y) {
        present = same_space(*c.object(y), *sub.space) && find_map(c.maps(), y, x, sub.inclusion.table()).has_value();
      }
      if (!present) {
        out.local = false;
        out.witness = "missing subspace " + space->format(a) + " of " + c.name(x);
      }
    }
  }

  for (int t = 0; t < count; ++t) {
    bool terminal = true;
    for (int x = 0; x < count && terminal; ++x) {
      terminal = std::count_if(c.maps().begin(), c.maps().end(), [&](const CategoryMap& m) { return m.source == x && m.target == t; }) == 1;
    }
    if (terminal) out.terminals.push_back(t);
  }
  out.has_terminal = !out.terminals.empty();

  for (int t = 0; t < count; ++t) {
    bool full = true;
    for (int x = 0; x < count && full; ++x) {
      for (const auto& f : ContinuousMap::all(c.object(x), c.object(t))) {
        if (!find_map(c.maps(), x, t, f.table())) {
          full = false;
          break;
        }
      }
    }
    if (full) out.full_objects.push_back(t);
  }
  return out;
}

// ---------------------------------------------------------------------------

Fiber make_fiber(std::vector<Implication> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end(),
                            [](const Implication& a, const Implication& b) { return a.table() == b.table(); }),
                members.end());
  return members;
}

namespace {

bool matches(const OpTable& cells, const Implication& candidate) {
  for (std::size_t k = 0; k < cells.size(); ++k) {
    if (cells[k] != kUnassigned && cells[k] != candidate.table()[k]) return false;
  }
  return true;
}

void check_fit(const SpaceCategory& c, const FiberAssignment& a) {
  if (a.size() != c.size()) throw ModelError(ErrorKind::FiberMismatch, "assignment does not have one fiber per object");
  for (std::size_t x = 0; x < a.size(); ++x) {
    for (const auto& imp : a[x]) {
      if (!(imp.lattice() == *c.objects()[x]->lattice())) {
        throw ModelError(ErrorKind::FiberMismatch, "fiber implication is not over the object's opens", c.names()[x]);
      }
    }
  }
}

}  // namespace

Geometricity is_geometric(const SpaceCategory& c, const FiberAssignment& a) {
  check_fit(c, a);
  Geometricity out;
  for (std::size_t x = 0; x < a.size(); ++x) {
    if (a[x].empty()) {
      out.holds = false;
      out.witness = GeometricWitness{static_cast<int>(x), std::nullopt, std::nullopt};
      return out;
    }
  }
  for (std::size_t k = 0; k < c.maps().size(); ++k) {
    const auto& m = c.maps()[k];
    const auto& source_fiber = a[static_cast<std::size_t>(m.source)];
    const auto& target_fiber = a[static_cast<std::size_t>(m.target)];
    for (std::size_t i = 0; i < target_fiber.size(); ++i) {
      const auto induced = induced_cells(m.map, target_fiber[i]);
      const bool lifted = !induced.conflict && std::any_of(source_fiber.begin(), source_fiber.end(),
                                                           [&](const Implication& s) { return matches(induced.cells, s); });
      if (!lifted) {
        out.holds = false;
        out.witness = GeometricWitness{std::nullopt, static_cast<int>(k), static_cast<int>(i)};
        return out;
      }
    }
  }
  return out;
}

CanonicalSpec parse_canonical(std::string_view text) {
  if (text == "t") return {CanonicalKind::trivial, 0};
  if (text == "b") return {CanonicalKind::boolean, 0};
  if (text == "bt") return {CanonicalKind::both, 0};
  if (text == "a") return {CanonicalKind::all_wbi, 0};
  if (text.size() > 1 && text[0] == 'c' && std::all_of(text.begin() + 1, text.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
    return {CanonicalKind::bounded_core, static_cast<std::size_t>(std::stoul(std::string(text.substr(1))))};
  }
  throw ModelError(ErrorKind::UnknownName, "unknown canonical kind", std::string(text));
}

std::string to_string(const CanonicalSpec& spec) {
  switch (spec.kind) {
    case CanonicalKind::trivial: return "t";
    case CanonicalKind::boolean: return "b";
    case CanonicalKind::both: return "bt";
    case CanonicalKind::all_wbi: return "a";
    case CanonicalKind::bounded_core: return "c" + std::to_string(spec.n);
  }
  return "t";
}

FiberAssignment canonical_fibers(const SpaceCategory& c, const CanonicalSpec& spec) {
  const bool needs_li = spec.kind == CanonicalKind::boolean || spec.kind == CanonicalKind::both || spec.kind == CanonicalKind::all_wbi;
  for (std::size_t x = 0; x < c.size(); ++x) {
    const auto cls = classify_space(*c.objects()[x]);
    if (needs_li && !cls.locally_indiscrete) {
      throw ModelError(ErrorKind::PreconditionViolated, "object is not locally indiscrete", c.names()[x]);
    }
    if (spec.kind == CanonicalKind::bounded_core && !cls.hausdorff) {
      throw ModelError(ErrorKind::PreconditionViolated, "object is not Hausdorff", c.names()[x]);
    }
  }
  if (spec.kind == CanonicalKind::bounded_core) {
    for (const auto& m : c.maps()) {
      if (!classify_map(m.map).injective) throw ModelError(ErrorKind::PreconditionViolated, "map is not injective", m.name);
    }
  }

  FiberAssignment out;
  for (const auto& space : c.objects()) {
    std::vector<Implication> fiber;
    switch (spec.kind) {
      case CanonicalKind::trivial: fiber.push_back(trivial_implication(space->lattice())); break;
      case CanonicalKind::boolean: fiber.push_back(wbs_from_core(space, 0).imp); break;
      case CanonicalKind::both:
        fiber.push_back(trivial_implication(space->lattice()));
        fiber.push_back(wbs_from_core(space, 0).imp);
        break;
      case CanonicalKind::all_wbi:
      case CanonicalKind::bounded_core:
        for (auto& cored : wbs_enumerate(space)) {
          const auto outside = static_cast<std::size_t>(cardinality(space->all() & ~cored.core));
          if (spec.kind == CanonicalKind::all_wbi || outside <= spec.n) fiber.push_back(std::move(cored.strong.imp));
        }
        break;
    }
    out.push_back(make_fiber(std::move(fiber)));
  }
  if (!is_geometric(c, out).holds) throw InvariantError("canonical assignment " + to_string(spec) + " is not geometric");
  return out;
}

// ---------------------------------------------------------------------------

bool assignment_less(const FiberAssignment& a, const FiberAssignment& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), [](const Fiber& x, const Fiber& y) {
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
  });
}

GeometricSearch enumerate_geometric(const SpaceCategory& c, const GeometricOptions& options) {
  GeometricSearch out;
  const std::size_t count = c.size();
  std::string sizes;
  bool too_large = false;
  for (const auto& space : c.objects()) {
    std::vector<Implication> universe;
    EnumerateOptions all;
    all.limit = options.universe_cap + 1;
    for_each_implication(space->lattice(), all, [&](const Implication& imp) {
      universe.push_back(imp);
      return true;
    });
    sizes += (sizes.empty() ? "" : ", ") + space->format(space->all()) + ": " +
             (universe.size() > options.universe_cap ? ">" + std::to_string(options.universe_cap) : std::to_string(universe.size()));
    too_large = too_large || universe.size() > options.universe_cap;
    out.universe.push_back(std::move(universe));
  }
  if (too_large) throw ModelError(ErrorKind::TooLarge, "fiber universe exceeds the cap", sizes);
  out.local = category_props(c, options.empty_subspaces).local;

  // Members with no pullback candidate along some map can never occur.
  std::vector<std::vector<bool>> alive(count);
  for (std::size_t x = 0; x < count; ++x) alive[x].assign(out.universe[x].size(), true);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k < c.maps().size(); ++k) {
      const auto& m = c.maps()[k];
      const auto s = static_cast<std::size_t>(m.source);
      const auto t = static_cast<std::size_t>(m.target);
      for (std::size_t i = 0; i < out.universe[t].size(); ++i) {
        if (!alive[t][i]) continue;
        const auto induced = induced_cells(m.map, out.universe[t][i]);
        bool lifted = false;
        if (!induced.conflict) {
          for (std::size_t j = 0; j < out.universe[s].size() && !lifted; ++j) {
            lifted = alive[s][j] && matches(induced.cells, out.universe[s][j]);
          }
        }
        if (!lifted) {
          alive[t][i] = false;
          out.eliminations.push_back({static_cast<int>(t), static_cast<int>(i), static_cast<int>(k)});
          changed = true;
        }
      }
    }
  }
  out.survivors.resize(count);
  for (std::size_t x = 0; x < count; ++x) {
    for (std::size_t i = 0; i < alive[x].size(); ++i) {
      if (alive[x][i]) out.survivors[x].push_back(static_cast<int>(i));
    }
  }
  if (out.local) {
    for (std::size_t x = 0; x < count; ++x) {
      for (int i : out.survivors[x]) {
        if (!classify(out.universe[x][static_cast<std::size_t>(i)]).weakly_boolean) {
          throw InvariantError("a non-WBI survived elimination over a local category");
        }
      }
    }
  }

  double product = 1;
  for (const auto& s : out.survivors) product *= static_cast<double>((std::size_t{1} << std::min<std::size_t>(s.size(), 62)) - 1);
  if (product > static_cast<double>(options.candidate_cap)) {
    throw ModelError(ErrorKind::TooLarge, "too many candidate assignments after elimination", sizes);
  }
  if (product == 0) return out;

  std::vector<std::uint64_t> masks(count, 1);
  while (true) {
    FiberAssignment candidate(count);
    for (std::size_t x = 0; x < count; ++x) {
      std::vector<Implication> fiber;
      for (std::size_t b = 0; b < out.survivors[x].size(); ++b) {
        if ((masks[x] >> b) & 1U) fiber.push_back(out.universe[x][static_cast<std::size_t>(out.survivors[x][b])]);
      }
      candidate[x] = make_fiber(std::move(fiber));
    }
    ++out.candidates;
    if (is_geometric(c, candidate).holds) out.assignments.push_back(std::move(candidate));

    std::size_t x = 0;
    for (; x < count; ++x) {
      if (++masks[x] < (std::uint64_t{1} << out.survivors[x].size())) break;
      masks[x] = 1;
    }
    if (x == count) break;
  }
  std::sort(out.assignments.begin(), out.assignments.end(), assignment_less);
  return out;
}

}  // namespace geoimp
