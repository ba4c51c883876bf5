#include <doctest.h>

#include <set>

#include "geoimp/diagnostic.hpp"
#include "geoimp/geometry.hpp"

using namespace geoimp;

namespace {

// f⁻¹(U → V) = f⁻¹U → f⁻¹V for all opens U, V of the target.
bool pulls_back(const ContinuousMap& f, const Implication& on_target, const Implication& on_source) {
  const auto& x = f.source();
  const auto& y = f.target();
  for (Subset u : y.opens()) {
    for (Subset v : y.opens()) {
      const Subset lhs = f.preimage(y.open(on_target(*y.open_index(u), *y.open_index(v))));
      const Elem rhs = on_source(*x.open_index(f.preimage(u)), *x.open_index(f.preimage(v)));
      if (lhs != x.open(rhs)) return false;
    }
  }
  return true;
}

bool geometric_by_definition(const SpaceCategory& c, const FiberAssignment& a) {
  for (const auto& fiber : a) {
    if (fiber.empty()) return false;
  }
  for (const auto& m : c.maps()) {
    for (const auto& t : a[static_cast<std::size_t>(m.target)]) {
      bool found = false;
      for (const auto& s : a[static_cast<std::size_t>(m.source)]) found = found || pulls_back(m.map, t, s);
      if (!found) return false;
    }
  }
  return true;
}

std::vector<Implication> all_on(const SpacePtr& x) { return enumerate_implications(x->lattice()); }

std::vector<Implication> wbis_on(const SpacePtr& x) {
  EnumerateOptions o;
  o.filter = ClassFilter::weakly_boolean();
  return enumerate_implications(x->lattice(), o);
}

FiberAssignment trivial_assignment(const SpaceCategory& c) {
  FiberAssignment out;
  for (const auto& x : c.objects()) out.push_back(make_fiber({trivial_implication(x->lattice())}));
  return out;
}

// Sierpiński with its subspaces, identities and inclusions only.
SpaceCategory sierpinski_inclusions() {
  const auto s = sierpinski_space();
  const auto a = subspace(s, bit(0));
  const auto b = subspace(s, bit(1));
  const auto e = empty_space();
  const std::vector<SpacePtr> objects{e, a.space, b.space, s};
  std::vector<CategoryMap> maps;
  for (int k = 0; k < 4; ++k) maps.push_back({"id" + std::to_string(k), k, k, ContinuousMap::identity(objects[static_cast<std::size_t>(k)])});
  for (int k = 1; k < 4; ++k) maps.push_back({"empty" + std::to_string(k), 0, k, ContinuousMap::make(e, objects[static_cast<std::size_t>(k)], {})});
  maps.push_back({"open_a", 1, 3, a.inclusion});
  maps.push_back({"closed_b", 2, 3, b.inclusion});
  return SpaceCategory::make({"empty", "{a}", "{b}", "S"}, objects, std::move(maps));
}

// Visits every choice of one nonempty subset per object from `pools`.
template <class F>
void for_each_choice(const std::vector<std::vector<Implication>>& pools, F&& visit) {
  const std::size_t count = pools.size();
  std::vector<std::uint64_t> masks(count, 1);
  for (const auto& p : pools) {
    if (p.empty()) return;
  }
  while (true) {
    FiberAssignment a(count);
    for (std::size_t x = 0; x < count; ++x) {
      std::vector<Implication> fiber;
      for (std::size_t b = 0; b < pools[x].size(); ++b) {
        if ((masks[x] >> b) & 1U) fiber.push_back(pools[x][b]);
      }
      a[x] = make_fiber(std::move(fiber));
    }
    visit(a);
    std::size_t x = 0;
    for (; x < count; ++x) {
      if (++masks[x] < (std::uint64_t{1} << pools[x].size())) break;
      masks[x] = 1;
    }
    if (x == count) return;
  }
}

std::set<std::vector<std::vector<OpTable>>> keys(const std::vector<FiberAssignment>& as) {
  std::set<std::vector<std::vector<OpTable>>> out;
  for (const auto& a : as) {
    std::vector<std::vector<OpTable>> k;
    for (const auto& f : a) {
      std::vector<OpTable> tables;
      for (const auto& i : f) tables.push_back(i.table());
      k.push_back(tables);
    }
    out.insert(k);
  }
  return out;
}

void check_eliminations(const SpaceCategory& c, const GeometricSearch& s) {
  std::vector<std::vector<bool>> alive;
  for (const auto& u : s.universe) alive.emplace_back(u.size(), true);
  for (const auto& e : s.eliminations) {
    const auto& m = c.maps()[static_cast<std::size_t>(e.map)];
    REQUIRE(m.target == e.object);
    const auto& member = s.universe[static_cast<std::size_t>(e.object)][static_cast<std::size_t>(e.member)];
    const auto src = static_cast<std::size_t>(m.source);
    for (std::size_t j = 0; j < s.universe[src].size(); ++j) {
      if (alive[src][j]) CHECK_FALSE(pulls_back(m.map, member, s.universe[src][j]));
    }
    alive[static_cast<std::size_t>(e.object)][static_cast<std::size_t>(e.member)] = false;
  }
  for (std::size_t x = 0; x < alive.size(); ++x) {
    std::vector<int> expected;
    for (std::size_t i = 0; i < alive[x].size(); ++i) {
      if (alive[x][i]) expected.push_back(static_cast<int>(i));
    }
    CHECK(s.survivors[x] == expected);
  }
}

void check_output(const SpaceCategory& c, const GeometricSearch& s) {
  for (std::size_t k = 1; k < s.assignments.size(); ++k) CHECK(assignment_less(s.assignments[k - 1], s.assignments[k]));
  for (const auto& a : s.assignments) {
    CHECK(geometric_by_definition(c, a));
    for (std::size_t x = 0; x < a.size(); ++x) {
      for (const auto& i : a[x]) CHECK(classify(i).weakly_boolean);
    }
    for (const auto& m : c.maps()) {
      const auto& xs = *c.object(m.source);
      const auto& ys = *c.object(m.target);
      std::set<Subset> source_cores;
      for (const auto& i : a[static_cast<std::size_t>(m.source)]) source_cores.insert(xs.open(*classify(i).core));
      for (const auto& i : a[static_cast<std::size_t>(m.target)]) {
        CHECK(source_cores.count(m.map.preimage(ys.open(*classify(i).core))) == 1);
      }
    }
  }
}

}  // namespace

TEST_CASE("category property examples") {
  const auto p = local_closure({point_space()});
  const auto pp = category_props(p);
  CHECK(pp.local);
  REQUIRE(pp.terminals.size() == 1);
  CHECK(p.object(pp.terminals[0])->size() == 1);

  std::vector<SpacePtr> two_point;
  for (auto& x : all_topologies({"a", "b"})) two_point.push_back(x);
  const auto all2 = local_closure(two_point);
  const auto ap = category_props(all2);
  CHECK(ap.local);
  CHECK(ap.has_terminal);
  CHECK(ap.full_objects.size() == all2.size());

  const auto d = discrete_space({"a", "b"});
  const auto lonely = SpaceCategory::make({"D"}, {d}, {{"id", 0, 0, ContinuousMap::identity(d)}});
  const auto lp = category_props(lonely);
  CHECK_FALSE(lp.local);
  CHECK_FALSE(lp.witness.empty());
}

TEST_CASE("categories must contain identities and composites") {
  const auto s = sierpinski_space();
  CHECK_THROWS_AS(SpaceCategory::make({"S"}, {s}, {}), ModelError);
  const auto p = point_space();
  try {
    SpaceCategory::make({"P", "S"}, {p, s},
                        {{"idP", 0, 0, ContinuousMap::identity(p)},
                         {"idS", 1, 1, ContinuousMap::identity(s)},
                         {"pick", 0, 1, ContinuousMap::make(p, s, {0})},
                         {"crush", 1, 0, ContinuousMap::make(s, p, {0, 0})}});
    FAIL("accepted a category without the composite S -> P -> S");
  } catch (const ModelError& e) {
    CHECK(e.kind() == ErrorKind::NotACategory);
  }
}

TEST_CASE("geometricity examples") {
  SUBCASE("trivial fibers are geometric") {
    for (const auto& c : {local_closure({sierpinski_space()}), injective_discrete_category(2), sierpinski_inclusions()}) {
      CHECK(is_geometric(c, trivial_assignment(c)).holds);
    }
  }
  SUBCASE("Heyting on the Sierpinski space has no pullback along the closed point") {
    const auto c = sierpinski_inclusions();
    FiberAssignment a;
    for (int x = 0; x < 3; ++x) a.push_back(make_fiber(all_on(c.object(x))));
    a.push_back(make_fiber({heyting_implication(c.object(3)->lattice())}));
    const auto g = is_geometric(c, a);
    CHECK_FALSE(g.holds);
    REQUIRE(g.witness);
    REQUIRE(g.witness->map);
    CHECK(c.maps()[static_cast<std::size_t>(*g.witness->map)].name == "closed_b");
    CHECK_FALSE(geometric_by_definition(c, a));
  }
  SUBCASE("all weakly Boolean fibers over locally indiscrete spaces") {
    const auto c = local_closure({discrete_space({"a", "b"}), indiscrete_space({"a", "b"})});
    FiberAssignment a;
    for (const auto& x : c.objects()) a.push_back(make_fiber(wbis_on(x)));
    CHECK(is_geometric(c, a).holds);
    CHECK(geometric_by_definition(c, a));
  }
  SUBCASE("an empty fiber fails") {
    const auto c = local_closure({point_space()});
    auto a = trivial_assignment(c);
    a.back().clear();
    const auto g = is_geometric(c, a);
    CHECK_FALSE(g.holds);
    REQUIRE(g.witness);
    CHECK(g.witness->empty_object);
  }
}

TEST_CASE("canonical fiber examples") {
  const auto c = local_closure({sierpinski_space()});
  const auto t = canonical_fibers(c, parse_canonical("t"));
  CHECK(keys({t}) == keys({trivial_assignment(c)}));

  const auto ind = local_closure({indiscrete_space({"a", "b"})});
  const auto b = canonical_fibers(ind, parse_canonical("b"));
  const int whole = ind.find("{a,b}");
  const auto& fiber = b[static_cast<std::size_t>(whole)];
  REQUIRE(fiber.size() == 1);
  CHECK(fiber[0].table() == OpTable{1, 1, 0, 1});

  try {
    canonical_fibers(c, parse_canonical("b"));
    FAIL("Boolean fibers accepted on the Sierpinski space");
  } catch (const ModelError& e) {
    CHECK(e.kind() == ErrorKind::PreconditionViolated);
  }
  CHECK(to_string(parse_canonical("c3")) == "c3");
  CHECK_THROWS_AS(parse_canonical("x"), ModelError);
}

TEST_CASE("bounded-core fibers grow strictly once a two-point object exists") {
  const auto c = injective_discrete_category(2);
  const auto c1 = canonical_fibers(c, parse_canonical("c1"));
  const auto c2 = canonical_fibers(c, parse_canonical("c2"));
  CHECK(is_geometric(c, c1).holds);
  CHECK(is_geometric(c, c2).holds);
  bool strict = false;
  for (std::size_t x = 0; x < c.size(); ++x) {
    std::set<OpTable> s, l;
    for (const auto& i : c1[x]) s.insert(i.table());
    for (const auto& i : c2[x]) l.insert(i.table());
    CHECK(std::includes(l.begin(), l.end(), s.begin(), s.end()));
    strict = strict || s.size() < l.size();
  }
  CHECK(strict);
}

TEST_CASE("classification over the point, the Sierpinski space and the discrete pair") {
  struct Case {
    SpacePtr generator;
    std::size_t expected;
  };
  for (const auto& [gen, expected] : {Case{point_space(), 3}, Case{sierpinski_space(), 1}, Case{discrete_space({"a", "b"}), 4}}) {
    for (const bool with_empty : {true, false}) {
      const auto c = local_closure({gen}, with_empty);
      GeometricOptions o;
      o.empty_subspaces = with_empty;
      const auto s = enumerate_geometric(c, o);
      CHECK(s.local);
      CHECK(s.assignments.size() == expected);
      check_eliminations(c, s);
      check_output(c, s);
      std::vector<std::vector<Implication>> pools;
      for (std::size_t x = 0; x < c.size(); ++x) {
        std::vector<Implication> pool;
        for (int i : s.survivors[x]) pool.push_back(s.universe[x][static_cast<std::size_t>(i)]);
        pools.push_back(pool);
      }
      std::vector<FiberAssignment> found;
      for_each_choice(pools, [&](const FiberAssignment& a) {
        if (geometric_by_definition(c, a)) found.push_back(a);
      });
      CHECK(keys(found) == keys(s.assignments));
    }
  }
}

TEST_CASE("full audit over the whole fiber universe for small categories") {
  for (const auto& gen : {point_space(), sierpinski_space()}) {
    const auto c = local_closure({gen});
    const auto s = enumerate_geometric(c);
    std::vector<FiberAssignment> found;
    std::size_t visited = 0;
    for_each_choice(s.universe, [&](const FiberAssignment& a) {
      ++visited;
      const bool g = is_geometric(c, a).holds;
      CHECK(g == geometric_by_definition(c, a));
      if (g) found.push_back(a);
    });
    CHECK(visited > 0);
    CHECK(keys(found) == keys(s.assignments));
  }
}

TEST_CASE("enumeration over an inclusion-only category and the caps") {
  const auto c = sierpinski_inclusions();
  const auto s = enumerate_geometric(c);
  CHECK(s.local);
  for (const auto& a : s.assignments) CHECK(geometric_by_definition(c, a));

  const auto d = discrete_space({"a", "b"});
  const auto lonely = SpaceCategory::make({"D"}, {d}, {{"id", 0, 0, ContinuousMap::identity(d)}});
  CHECK_THROWS_AS(enumerate_geometric(lonely), ModelError);

  GeometricOptions tight;
  tight.universe_cap = 5;
  CHECK_THROWS_AS(enumerate_geometric(local_closure({sierpinski_space()}), tight), ModelError);
}
