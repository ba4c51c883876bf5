#include "geoimp/topology.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "geoimp/diagnostic.hpp"
#include "geoimp/guard.hpp"

namespace geoimp {

namespace {

bool canonical_list_less(const std::vector<Subset>& a, const std::vector<Subset>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), canonical_less);
}

std::vector<std::string> open_names(const std::vector<std::string>& points, const std::vector<Subset>& opens) {
  std::vector<std::string> names;
  names.reserve(opens.size());
  for (Subset u : opens) names.push_back(format_set(points, u));
  return names;
}

}  // namespace

SpacePtr FinSpace::make(std::vector<std::string> points, std::vector<Subset> opens) {
  require_within(points.size(), kMaxCarrier - 1, "space");
  {
    std::set<std::string> seen;
    for (const auto& p : points) {
      if (!seen.insert(p).second) throw ModelError(ErrorKind::NotATopology, "duplicate point", p);
    }
  }
  const Subset all = full_set(points.size());
  for (Subset u : opens) {
    if (!is_subset(u, all)) throw ModelError(ErrorKind::NotATopology, "open set mentions an unknown point");
  }
  std::sort(opens.begin(), opens.end(), canonical_less);
  opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
  const auto has = [&](Subset s) { return std::binary_search(opens.begin(), opens.end(), s, canonical_less); };
  if (!has(0)) throw ModelError(ErrorKind::NotATopology, "the empty set is not open");
  if (!has(all)) throw ModelError(ErrorKind::NotATopology, "the whole space is not open", format_set(points, all));
  for (Subset u : opens) {
    for (Subset v : opens) {
      if (!has(u | v)) {
        throw ModelError(ErrorKind::NotATopology, "union of opens is not open",
                         format_set(points, u) + " ∪ " + format_set(points, v));
      }
      if (!has(u & v)) {
        throw ModelError(ErrorKind::NotATopology, "intersection of opens is not open",
                         format_set(points, u) + " ∩ " + format_set(points, v));
      }
    }
  }
  auto space = std::shared_ptr<FinSpace>(new FinSpace());
  space->lattice_ = lattice_of_sets(open_names(points, opens), opens);
  space->points_ = std::move(points);
  space->opens_ = std::move(opens);
  return space;
}

int FinSpace::at_point(std::string_view name) const {
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (points_[i] == name) return static_cast<int>(i);
  }
  throw ModelError(ErrorKind::UnknownName, "unknown point", std::string(name));
}

std::optional<Elem> FinSpace::open_index(Subset s) const {
  auto it = std::lower_bound(opens_.begin(), opens_.end(), s, canonical_less);
  if (it == opens_.end() || *it != s) return std::nullopt;
  return static_cast<Elem>(it - opens_.begin());
}

std::vector<Subset> FinSpace::closeds() const {
  std::vector<Subset> out;
  for (Subset u : opens_) out.push_back(all() & ~u);
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

Subset FinSpace::interior(Subset s) const {
  Subset out = 0;
  for (Subset u : opens_) {
    if (is_subset(u, s)) out |= u;
  }
  return out;
}

Subset FinSpace::closure(Subset s) const { return all() & ~interior(all() & ~s); }

// ---------------------------------------------------------------------------

SpacePtr discrete_space(std::vector<std::string> points) {
  require_within(points.size(), size_guard(), "discrete space");
  std::vector<Subset> opens;
  for (Subset s = 0; s <= full_set(points.size()); ++s) opens.push_back(s);
  return FinSpace::make(std::move(points), std::move(opens));
}

SpacePtr indiscrete_space(std::vector<std::string> points) {
  const Subset all = full_set(points.size());
  return FinSpace::make(std::move(points), {0, all});
}

SpacePtr sierpinski_space() { return FinSpace::make({"a", "b"}, {0, 0b01, 0b11}); }
SpacePtr point_space() { return FinSpace::make({"*"}, {0, 1}); }
SpacePtr empty_space() { return FinSpace::make({}, {0}); }

std::vector<SpacePtr> all_topologies(const std::vector<std::string>& points) {
  require_within(points.size(), 4, "topology enumeration");
  const Subset all = full_set(points.size());
  std::vector<Subset> proper;
  for (Subset s = 1; s < all; ++s) proper.push_back(s);

  std::vector<std::vector<Subset>> families;
  const std::uint64_t count = std::uint64_t{1} << proper.size();
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    std::vector<Subset> opens{0, all};
    if (all == 0) opens.pop_back();
    for (std::size_t i = 0; i < proper.size(); ++i) {
      if ((mask >> i) & 1U) opens.push_back(proper[i]);
    }
    bool closed = true;
    for (Subset u : opens) {
      for (Subset v : opens) {
        if (std::find(opens.begin(), opens.end(), u | v) == opens.end() ||
            std::find(opens.begin(), opens.end(), u & v) == opens.end()) {
          closed = false;
          break;
        }
      }
      if (!closed) break;
    }
    if (!closed) continue;
    std::sort(opens.begin(), opens.end(), canonical_less);
    families.push_back(std::move(opens));
  }
  std::sort(families.begin(), families.end(), canonical_list_less);
  std::vector<SpacePtr> out;
  for (auto& f : families) out.push_back(FinSpace::make(points, std::move(f)));
  return out;
}

// ---------------------------------------------------------------------------

ContinuousMap::ContinuousMap(SpacePtr source, SpacePtr target, std::vector<int> table)
    : source_(std::move(source)), target_(std::move(target)), table_(std::move(table)) {
  std::vector<Elem> inverse;
  for (Subset v : target_->opens()) inverse.push_back(*source_->open_index(preimage(v)));
  inverse_ = std::make_shared<const MonotoneMap>(
      MonotoneMap::make(target_->lattice(), source_->lattice(), std::move(inverse)));
}

ContinuousMap ContinuousMap::make(SpacePtr source, SpacePtr target, std::vector<int> table) {
  if (table.size() != source->size()) throw ModelError(ErrorKind::Discontinuous, "map does not cover the source points");
  for (int v : table) {
    if (v < 0 || static_cast<std::size_t>(v) >= target->size()) {
      throw ModelError(ErrorKind::Discontinuous, "map value outside the target space");
    }
  }
  for (Subset v : target->opens()) {
    Subset pre = 0;
    for (std::size_t p = 0; p < table.size(); ++p) {
      if (contains(v, table[p])) pre |= bit(static_cast<int>(p));
    }
    if (!source->is_open(pre)) {
      throw ModelError(ErrorKind::Discontinuous, "preimage of an open set is not open", target->format(v));
    }
  }
  return ContinuousMap(std::move(source), std::move(target), std::move(table));
}

ContinuousMap ContinuousMap::identity(SpacePtr space) {
  std::vector<int> table(space->size());
  for (std::size_t i = 0; i < table.size(); ++i) table[i] = static_cast<int>(i);
  return ContinuousMap(space, space, std::move(table));
}

ContinuousMap ContinuousMap::from_names(SpacePtr source, SpacePtr target,
                                        const std::vector<std::pair<std::string, std::string>>& assignments) {
  std::vector<int> table(source->size(), -1);
  for (const auto& [from, to] : assignments) {
    const int p = source->at_point(from);
    if (table[static_cast<std::size_t>(p)] != -1) throw ModelError(ErrorKind::Discontinuous, "point mapped twice", from);
    table[static_cast<std::size_t>(p)] = target->at_point(to);
  }
  for (std::size_t p = 0; p < table.size(); ++p) {
    if (table[p] == -1) throw ModelError(ErrorKind::Discontinuous, "point left unmapped", source->point(static_cast<int>(p)));
  }
  return make(std::move(source), std::move(target), std::move(table));
}

std::vector<ContinuousMap> ContinuousMap::all(const SpacePtr& source, const SpacePtr& target) {
  std::vector<ContinuousMap> out;
  const std::size_t n = source->size();
  const std::size_t m = target->size();
  if (m == 0) {
    if (n == 0) out.push_back(ContinuousMap(source, target, {}));
    return out;
  }
  std::vector<int> table(n, 0);
  while (true) {
    bool continuous = true;
    for (Subset v : target->opens()) {
      Subset pre = 0;
      for (std::size_t p = 0; p < n; ++p) {
        if (contains(v, table[p])) pre |= bit(static_cast<int>(p));
      }
      if (!source->is_open(pre)) {
        continuous = false;
        break;
      }
    }
    if (continuous) out.push_back(ContinuousMap(source, target, table));
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (++table[i] < static_cast<int>(m)) break;
      table[i] = 0;
      if (i == 0) return out;
    }
    if (n == 0) return out;
  }
}

Subset ContinuousMap::image(Subset s) const {
  Subset out = 0;
  for (int p : members(s)) out |= bit((*this)(p));
  return out;
}

Subset ContinuousMap::preimage(Subset s) const {
  Subset out = 0;
  for (std::size_t p = 0; p < table_.size(); ++p) {
    if (contains(s, table_[p])) out |= bit(static_cast<int>(p));
  }
  return out;
}

ContinuousMap ContinuousMap::then(const ContinuousMap& next) const {
  if (target_ != next.source_ && !(target_->points() == next.source().points() && target_->opens() == next.source().opens())) {
    throw ModelError(ErrorKind::NotACategory, "maps are not composable");
  }
  std::vector<int> table;
  for (int v : table_) table.push_back(next(v));
  return ContinuousMap(source_, next.target_, std::move(table));
}

// ---------------------------------------------------------------------------

namespace {

// Any two nonempty members of `family` meeting inside `within` do meet there.
bool relatively_irreducible(const std::vector<Subset>& family, Subset within) {
  for (Subset a : family) {
    if ((a & within) == 0) continue;
    for (Subset b : family) {
      if ((b & within) != 0 && (a & b & within) == 0) return false;
    }
  }
  return true;
}

bool images_commute_with_meets(const ContinuousMap& f, const std::vector<Subset>& family) {
  for (Subset a : family) {
    for (Subset b : family) {
      if ((f.image(a) & f.image(b)) != f.image(a & b)) return false;
    }
  }
  return true;
}

bool fibers_irreducible(const ContinuousMap& f, const std::vector<Subset>& family) {
  for (int y = 0; y < static_cast<int>(f.target().size()); ++y) {
    if (!relatively_irreducible(family, f.preimage(bit(y)))) return false;
  }
  return true;
}

}  // namespace

MapClass classify_map(const ContinuousMap& f) {
  const FinSpace& x = f.source();
  const FinSpace& y = f.target();
  MapClass out;
  out.injective = true;
  for (std::size_t p = 0; p < x.size(); ++p) {
    for (std::size_t q = p + 1; q < x.size(); ++q) {
      if (f(static_cast<int>(p)) == f(static_cast<int>(q))) out.injective = false;
    }
  }
  out.surjective = f.image(x.all()) == y.all();
  out.open = std::all_of(x.opens().begin(), x.opens().end(), [&](Subset u) { return y.is_open(f.image(u)); });
  const auto closeds = x.closeds();
  out.closed = std::all_of(closeds.begin(), closeds.end(), [&](Subset c) { return y.is_closed(f.image(c)); });

  bool initial = true;
  for (Subset u : x.opens()) {
    const bool restricted = std::any_of(y.opens().begin(), y.opens().end(), [&](Subset v) { return f.preimage(v) == u; });
    initial = initial && restricted;
  }
  out.embedding = out.injective && initial;

  const bool open_meets = images_commute_with_meets(f, x.opens());
  if (open_meets != fibers_irreducible(f, x.opens())) throw InvariantError("open-irreducibility disagrees with its fiber criterion");
  const bool closed_meets = images_commute_with_meets(f, closeds);
  if (closed_meets != fibers_irreducible(f, closeds)) throw InvariantError("closed-irreducibility disagrees with its fiber criterion");
  out.open_irreducible = out.open && open_meets;
  out.closed_irreducible = out.closed && closed_meets;
  return out;
}

SpaceClass classify_space(const FinSpace& x) {
  SpaceClass out;
  const Subset all = x.all();
  const auto& opens = x.opens();
  out.discrete = x.size() < 63 && opens.size() == (std::size_t{1} << x.size());
  out.indiscrete = std::all_of(opens.begin(), opens.end(), [&](Subset u) { return u == 0 || u == all; });

  const auto closeds = x.closeds();
  const bool closed_are_open = std::all_of(closeds.begin(), closeds.end(), [&](Subset c) { return x.is_open(c); });
  bool pointwise = true;
  for (int p = 0; p < static_cast<int>(x.size()); ++p) {
    bool found = false;
    for (Subset u : opens) {
      if (!contains(u, p)) continue;
      found = std::all_of(opens.begin(), opens.end(), [&](Subset w) { return (w & u) == 0 || (w & u) == u; });
      if (found) break;
    }
    pointwise = pointwise && found;
  }
  if (closed_are_open != pointwise) throw InvariantError("the two local indiscreteness tests disagree");
  out.locally_indiscrete = pointwise;

  out.t0 = true;
  out.hausdorff = true;
  for (int p = 0; p < static_cast<int>(x.size()); ++p) {
    for (int q = p + 1; q < static_cast<int>(x.size()); ++q) {
      const bool separated = std::any_of(opens.begin(), opens.end(), [&](Subset u) { return contains(u, p) != contains(u, q); });
      bool disjoint = false;
      for (Subset u : opens) {
        if (!contains(u, p)) continue;
        for (Subset v : opens) disjoint = disjoint || (contains(v, q) && (u & v) == 0);
      }
      out.t0 = out.t0 && separated;
      out.hausdorff = out.hausdorff && disjoint;
    }
  }
  if (out.hausdorff != out.discrete) throw InvariantError("finite Hausdorff space that is not discrete");

  out.open_irreducible = relatively_irreducible(opens, all);
  out.closed_irreducible = relatively_irreducible(closeds, all);
  return out;
}

ImageAdjoints image_adjoints(const ContinuousMap& f) {
  const FinSpace& x = f.source();
  const FinSpace& y = f.target();
  const auto cls = classify_map(f);
  ImageAdjoints out;
  if (cls.open) {
    std::vector<Elem> table;
    for (Subset u : x.opens()) table.push_back(*y.open_index(f.image(u)));
    out.lower = MonotoneMap::make(x.lattice(), y.lattice(), std::move(table));
    for (Subset u : x.opens()) {
      for (Subset v : y.opens()) {
        if (is_subset(f.image(u), v) != is_subset(u, f.preimage(v))) throw InvariantError("f_! is not left adjoint to f⁻¹");
      }
    }
    if (out.lower->preserves_binary_meets() != cls.open_irreducible) {
      throw InvariantError("f_! meet preservation disagrees with open-irreducibility");
    }
  }
  if (cls.closed) {
    std::vector<Elem> table;
    for (Subset u : x.opens()) table.push_back(*y.open_index(y.all() & ~f.image(x.all() & ~u)));
    out.upper = MonotoneMap::make(x.lattice(), y.lattice(), std::move(table));
    for (Elem u = 0; u < static_cast<Elem>(x.opens().size()); ++u) {
      for (Subset v : y.opens()) {
        if (is_subset(f.preimage(v), x.open(u)) != is_subset(v, y.open((*out.upper)(u)))) {
          throw InvariantError("f_* is not right adjoint to f⁻¹");
        }
      }
    }
    if (out.upper->preserves_binary_joins() != cls.closed_irreducible) {
      throw InvariantError("f_* join preservation disagrees with closed-irreducibility");
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

StrongSpace StrongSpace::make(SpacePtr space, Implication imp) {
  if (imp.lattice_ptr() == space->lattice()) return StrongSpace{std::move(space), std::move(imp)};
  if (!(imp.lattice() == *space->lattice())) {
    throw ModelError(ErrorKind::TableMismatch, "implication is not over the open-set lattice of the space");
  }
  auto rebased = Implication::unchecked(space->lattice(), imp.table());
  return StrongSpace{std::move(space), std::move(rebased)};
}

Subset StrongSpace::operator()(Subset u, Subset v) const {
  const auto a = space->open_index(u);
  const auto b = space->open_index(v);
  if (!a || !b) throw ModelError(ErrorKind::NotInAlgebra, "argument is not an open set", space->format(a ? v : u));
  return space->open(imp(*a, *b));
}

StrongSpace wbs_from_core(const SpacePtr& space, Subset core) {
  const FinSpace& x = *space;
  if (!x.is_open(core)) throw ModelError(ErrorKind::InvalidCore, "core is not open", x.format(core));

  const bool rest_li = classify_space(*subspace(space, x.all() & ~core).space).locally_indiscrete;
  std::optional<Subset> bad;
  for (Subset k : x.closeds()) {
    if (!x.is_open(k | core)) {
      bad = k;
      break;
    }
  }
  if (rest_li == bad.has_value()) throw InvariantError("core validity tests disagree");
  if (bad) throw ModelError(ErrorKind::InvalidCore, "complement of the core is not locally indiscrete", x.format(*bad));

  const std::size_t n = x.opens().size();
  OpTable table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const Subset value = (x.all() & ~x.opens()[a]) | x.opens()[b] | core;
      const auto idx = x.open_index(value);
      if (!idx) throw InvariantError("Uᶜ ∪ V ∪ M is not open for a valid core");
      table[a * n + b] = *idx;
    }
  }
  auto imp = Implication::validate(space->lattice(), std::move(table));
  const auto cls = classify(imp);
  if (!cls.weakly_boolean || x.open(*cls.core) != core) throw InvariantError("space built from a core is not weakly Boolean with that core");
  return StrongSpace{space, std::move(imp)};
}

std::vector<CoredSpace> wbs_enumerate(const SpacePtr& space) {
  std::vector<CoredSpace> out;
  for (Subset m : space->opens()) {
    try {
      out.push_back({m, wbs_from_core(space, m)});
    } catch (const ModelError& e) {
      if (e.kind() != ErrorKind::InvalidCore) throw;
    }
  }
  EnumerateOptions options;
  options.filter = ClassFilter::weakly_boolean();
  const auto found = enumerate_implications(space->lattice(), options);
  if (found.size() != out.size()) throw InvariantError("core scan and WBI enumeration differ in size");
  for (const auto& imp : found) {
    const Subset core = space->open(wbi_decompose(imp));
    const auto match = std::find_if(out.begin(), out.end(), [&](const CoredSpace& c) { return c.core == core; });
    if (match == out.end() || match->strong.imp.table() != imp.table()) {
      throw InvariantError("enumerated WBI has no matching core");
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<Subset> test_sets(const FinSpace& x, LocalMode mode) {
  return mode == LocalMode::open ? x.opens() : x.closeds();
}

}  // namespace

Localizability localizability(const StrongSpace& s, LocalMode mode) {
  const FinSpace& x = *s.space;
  const auto n = static_cast<Elem>(x.opens().size());
  Localizability out;
  for (Subset z : test_sets(x, mode)) {
    std::map<std::pair<Subset, Subset>, std::pair<Elem, Elem>> seen;
    for (Elem a = 0; a < n && out.holds; ++a) {
      for (Elem b = 0; b < n; ++b) {
        const auto key = std::make_pair(x.open(a) & z, x.open(b) & z);
        const auto [it, fresh] = seen.emplace(key, std::make_pair(a, b));
        if (fresh) continue;
        const auto [a0, b0] = it->second;
        if ((x.open(s.imp(a0, b0)) & z) != (x.open(s.imp(a, b)) & z)) {
          out.holds = false;
          out.witness = LocalizabilityWitness{z, x.open(a0), x.open(b0), x.open(a), x.open(b)};
          break;
        }
      }
    }
    if (!out.holds) break;
  }
  const auto cls = classify(s.imp);
  if (out.holds != (mode == LocalMode::open ? cls.open : cls.closed)) {
    throw InvariantError("localizability disagrees with the implication class");
  }
  return out;
}

std::function<bool(std::span<const Elem>, Elem, Elem)> localizability_constraint(const SpacePtr& space, LocalMode mode) {
  return [space, zs = test_sets(*space, mode)](std::span<const Elem> t, Elem a, Elem b) {
    const FinSpace& x = *space;
    const auto n = static_cast<Elem>(x.opens().size());
    const Subset value = x.open(t[static_cast<std::size_t>(a * n + b)]);
    for (Subset z : zs) {
      const Subset ua = x.open(a) & z;
      const Subset vb = x.open(b) & z;
      for (Elem c = 0; c < n; ++c) {
        if ((x.open(c) & z) != ua) continue;
        for (Elem d = 0; d < n; ++d) {
          const Elem w = t[static_cast<std::size_t>(c * n + d)];
          if (w == kUnassigned || (x.open(d) & z) != vb) continue;
          if ((x.open(w) & z) != (value & z)) return false;
        }
      }
    }
    return true;
  };
}

Subspace subspace(const SpacePtr& space, Subset a) {
  const FinSpace& x = *space;
  if (!is_subset(a, x.all())) throw ModelError(ErrorKind::NotAnEmbedding, "subset mentions an unknown point");
  const auto kept = members(a);
  std::vector<std::string> names;
  for (int p : kept) names.push_back(x.point(p));
  std::vector<Subset> opens;
  for (Subset u : x.opens()) {
    Subset r = 0;
    for (std::size_t k = 0; k < kept.size(); ++k) {
      if (contains(u, kept[k])) r |= bit(static_cast<int>(k));
    }
    opens.push_back(r);
  }
  auto sub = FinSpace::make(std::move(names), std::move(opens));
  auto inclusion = ContinuousMap::make(sub, space, kept);
  const auto cls = classify_map(inclusion);
  if (!cls.embedding || cls.open != x.is_open(a) || cls.closed != x.is_closed(a)) {
    throw InvariantError("subspace inclusion misclassified");
  }
  return Subspace{std::move(sub), std::move(inclusion)};
}

InducedCells induced_cells(const ContinuousMap& f, const Implication& on_target) {
  const MonotoneMap& pre = f.inverse_image();
  const std::size_t nx = f.source().opens().size();
  const auto ny = static_cast<Elem>(f.target().opens().size());
  InducedCells out{OpTable(nx * nx, kUnassigned), std::nullopt};
  std::vector<std::pair<Elem, Elem>> origin(nx * nx);
  for (Elem u = 0; u < ny; ++u) {
    for (Elem v = 0; v < ny; ++v) {
      const std::size_t k = static_cast<std::size_t>(pre(u)) * nx + static_cast<std::size_t>(pre(v));
      const Elem value = pre(on_target(u, v));
      if (out.cells[k] == kUnassigned) {
        out.cells[k] = value;
        origin[k] = {u, v};
      } else if (out.cells[k] != value) {
        out.conflict = PullbackConflict{origin[k].first, origin[k].second, u, v};
        return out;
      }
    }
  }
  return out;
}

Pullback pullback_along_embedding(const ContinuousMap& j, const Implication& on_target) {
  if (!classify_map(j).embedding) throw ModelError(ErrorKind::NotAnEmbedding, "map is not an embedding");
  auto induced = induced_cells(j, on_target);
  if (induced.conflict) return Pullback{std::nullopt, induced.conflict};
  if (std::find(induced.cells.begin(), induced.cells.end(), kUnassigned) != induced.cells.end()) {
    throw InvariantError("inverse image of an embedding is not onto the subspace opens");
  }
  if (auto v = definition_violation(*j.source().lattice(), induced.cells)) {
    throw InvariantError("well-defined pullback is not an implication: " + describe(*j.source().lattice(), *v));
  }
  return Pullback{Implication::validate(j.source().lattice(), std::move(induced.cells)), std::nullopt};
}

std::function<bool(std::span<const Elem>, Elem, Elem)> pullback_constraint(std::vector<ContinuousMap> maps) {
  return [maps = std::move(maps)](std::span<const Elem> t, Elem a, Elem b) {
    if (maps.empty()) return true;
    const auto n = static_cast<Elem>(maps.front().target().opens().size());
    const Elem value = t[static_cast<std::size_t>(a * n + b)];
    for (const auto& f : maps) {
      const MonotoneMap& pre = f.inverse_image();
      for (Elem c = 0; c < n; ++c) {
        if (pre(c) != pre(a)) continue;
        for (Elem d = 0; d < n; ++d) {
          const Elem w = t[static_cast<std::size_t>(c * n + d)];
          if (w != kUnassigned && pre(d) == pre(b) && pre(w) != pre(value)) return false;
        }
      }
    }
    return true;
  };
}

}  // namespace geoimp
