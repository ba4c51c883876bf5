#include <doctest.h>

#include <set>

#include "geoimp/acceptance.hpp"
#include "geoimp/catalog.hpp"
#include "geoimp/diagnostic.hpp"
#include "geoimp/implication.hpp"
#include "oracles.hpp"

using namespace geoimp;

namespace {

OpTable named_table(const FinLattice& l, const std::vector<std::vector<std::string>>& rows) {
  OpTable t;
  for (const auto& row : rows) {
    for (const auto& e : row) t.push_back(l.at(e));
  }
  return t;
}

Implication classical_square() {
  const auto sq = boolean_square();
  return Implication::validate(sq, named_table(*sq, {{"1", "1", "1", "1"}, {"q", "1", "q", "1"}, {"p", "p", "1", "1"}, {"0", "p", "q", "1"}}));
}

Implication classical_two() {
  const auto two = chain({"0", "1"});
  return Implication::validate(two, {1, 1, 0, 1});
}

std::set<OpTable> tables(const std::vector<Implication>& imps) {
  std::set<OpTable> out;
  for (const auto& i : imps) out.insert(i.table());
  return out;
}

std::vector<Implication> wbis(const LatticePtr& l) {
  EnumerateOptions o;
  o.filter = ClassFilter::weakly_boolean();
  return enumerate_implications(l, o);
}

}  // namespace

TEST_CASE("validation examples on the two-element chain") {
  const auto two = chain({"0", "1"});
  CHECK_NOTHROW(Implication::validate(two, {1, 1, 1, 1}));
  CHECK_NOTHROW(Implication::validate(two, {1, 1, 0, 1}));
  CHECK(oracle::first_axioms(*two, {1, 1, 0, 1}));
  CHECK(oracle::second_axioms(*two, {1, 1, 0, 1}));
  try {
    Implication::validate(two, {0, 1, 0, 1});
    FAIL("accepted 0 → 0 = 0");
  } catch (const ModelError& e) {
    CHECK(e.kind() == ErrorKind::NotAnImplication);
    const auto v = definition_violation(*two, OpTable{0, 1, 0, 1});
    REQUIRE(v);
    CHECK(v->law == "internal reflexivity");
    CHECK(v->witness == std::vector<Elem>{0});
  }
}

TEST_CASE("both axiomatizations agree on every table over small lattices") {
  for (const auto& [name, l] : fixture_lattices(3)) {
    const int n = static_cast<int>(l->size());
    std::size_t total = 1;
    for (int k = 0; k < n * n; ++k) total *= static_cast<std::size_t>(n);
    OpTable t(static_cast<std::size_t>(n * n));
    for (std::size_t code = 0; code < total; ++code) {
      std::size_t rest = code;
      for (auto& cell : t) {
        cell = static_cast<Elem>(rest % static_cast<std::size_t>(n));
        rest /= static_cast<std::size_t>(n);
      }
      const bool d = !definition_violation(*l, t);
      const bool a = !alternative_violation(*l, t);
      CHECK(d == a);
      CHECK(d == oracle::first_axioms(*l, t));
      CHECK(a == oracle::second_axioms(*l, t));
    }
  }
}

TEST_CASE("the joint sweep passes and a build without the transitivity check fails it") {
  const auto fixtures = fixture_lattices(4);
  const auto good = check_axiomatizations(fixtures, definition_violation, alternative_violation);
  CHECK(good.passed);
  const AxiomChecker sabotaged = [](const FinLattice& l, std::span<const Elem> t) -> std::optional<AxiomViolation> {
    auto v = definition_violation(l, t);
    if (v && v->law == "internal transitivity") return std::nullopt;
    return v;
  };
  const auto bad = check_axiomatizations(fixtures, sabotaged, alternative_violation);
  CHECK_FALSE(bad.passed);
  CHECK_FALSE(bad.witness.empty());
  MESSAGE("sabotaged sweep witness: " << bad.witness);
}

TEST_CASE("classification examples") {
  SUBCASE("trivial implications are open, closed and weakly Boolean with core 1") {
    for (const auto& [name, l] : fixture_lattices(5)) {
      const auto c = classify(trivial_implication(l));
      CHECK(c.open);
      CHECK(c.closed);
      CHECK(c.weakly_boolean);
      CHECK(c.core == l->top());
    }
  }
  SUBCASE("Heyting on the three-element chain is open and not closed") {
    const auto three = chain({"0", "m", "1"});
    const auto c = classify(heyting_implication(three));
    CHECK(c.open);
    CHECK_FALSE(c.closed);
    REQUIRE(c.not_closed_witness);
    const auto [a, b] = *c.not_closed_witness;
    const auto h = heyting_implication(three);
    CHECK(three->join(h(three->join(a, b), a), b) == three->at("m"));
  }
  SUBCASE("the classical square is weakly Boolean with core 0") {
    const auto c = classify(classical_square());
    CHECK(c.weakly_boolean);
    CHECK(c.core == 0);
  }
}

TEST_CASE("classification flags match the quantified definitions") {
  for (const auto& [name, l] : fixture_lattices(5)) {
    for (const auto& imp : enumerate_implications(l)) {
      const auto c = classify(imp);
      CHECK(c.open == oracle::open_by_definition(*l, imp.table()));
      CHECK(c.closed == oracle::closed_by_definition(*l, imp.table()));
      CHECK(c.weakly_boolean == (c.open && c.closed));
      CHECK(c.core.has_value() == c.weakly_boolean);
    }
  }
}

TEST_CASE("consequences of openness and closedness hold on every enumerated implication") {
  for (const auto& [name, l] : fixture_lattices(5)) {
    const int n = static_cast<int>(l->size());
    for (const auto& imp : enumerate_implications(l)) {
      const auto c = classify(imp);
      for (Elem a = 0; a < n; ++a) {
        for (Elem b = 0; b < n; ++b) {
          if (c.closed) {
            CHECK(l->join(b, imp.neg(b)) == l->top());
            for (Elem x = 0; x < n; ++x) {
              if (l->leq(l->meet(x, a), b)) CHECK(l->leq(x, l->join(imp.neg(a), b)));
            }
          }
          if (c.open) {
            CHECK(l->leq(a, imp(b, a)));
            CHECK(l->meet(a, imp.neg(l->top())) == l->meet(a, imp.neg(a)));
          }
        }
      }
    }
  }
}

TEST_CASE("a finite implication that is neither open nor closed exists") {
  std::optional<Implication> found;
  for (const auto& [name, l] : fixture_lattices(5)) {
    for (const auto& imp : enumerate_implications(l)) {
      const auto c = classify(imp);
      if (!c.open && !c.closed) {
        found = imp;
        break;
      }
    }
    if (found) break;
  }
  REQUIRE(found);
  CHECK(found->lattice().size() == 3);
  CHECK_FALSE(oracle::open_by_definition(found->lattice(), found->table()));
  CHECK_FALSE(oracle::closed_by_definition(found->lattice(), found->table()));
  MESSAGE("neither open nor closed: " << format_table(*found));
}

TEST_CASE("trivial implication examples") {
  const auto two = chain({"0", "1"});
  CHECK(trivial_implication(two).table() == OpTable{1, 1, 1, 1});
  const auto one = chain({"0"});
  CHECK(trivial_implication(one).table() == OpTable{0});
  const auto c = classify(trivial_implication(boolean_square()));
  CHECK(c.weakly_boolean);
  CHECK(c.core == boolean_square()->top());
}

TEST_CASE("weakly Boolean implications from cores") {
  CHECK(wbi_from_core(boolean_square(), 0).table() == classical_square().table());
  const auto three = chain({"0", "m", "1"});
  const Elem m = three->at("m");
  const auto w = wbi_from_core(three, m);
  CHECK(w(three->at("1"), three->at("0")) == m);
  CHECK(w(three->at("1"), m) == m);
  for (Elem b = 0; b < 3; ++b) {
    CHECK(w(three->at("0"), b) == three->top());
    CHECK(w(m, b) == three->top());
  }
  try {
    wbi_from_core(three, three->at("0"));
    FAIL("accepted a non-Boolean interval");
  } catch (const ModelError& e) {
    CHECK(e.kind() == ErrorKind::IntervalNotBoolean);
  }
}

TEST_CASE("decomposition examples and round trips") {
  const auto three = chain({"0", "m", "1"});
  CHECK(wbi_decompose(trivial_implication(three)) == three->top());
  CHECK(wbi_decompose(classical_square()) == 0);
  CHECK(wbi_decompose(wbi_from_core(three, three->at("m"))) == three->at("m"));
  CHECK_THROWS_AS(wbi_decompose(heyting_implication(three)), ModelError);
  for (const auto& [name, l] : fixture_lattices(5)) {
    std::set<OpTable> built;
    for (Elem m = 0; m < static_cast<Elem>(l->size()); ++m) {
      if (interval_boolean_obstruction(*l, m)) continue;
      const auto w = wbi_from_core(l, m);
      CHECK(wbi_decompose(w) == m);
      built.insert(w.table());
    }
    CHECK(tables(wbis(l)) == built);
  }
}

TEST_CASE("transport examples") {
  const auto two = chain({"0", "1"});
  const auto sq = boolean_square();
  SUBCASE("identities") {
    const auto id = MonotoneMap::identity(sq);
    const auto r = transport(id, id, classical_square());
    CHECK(r.implication.table() == classical_square().table());
    CHECK(r.open_transferred);
    CHECK(r.closed_transferred);
  }
  SUBCASE("two-element chain into the square with a retraction") {
    const auto f = MonotoneMap::make(two, sq, {sq->at("0"), sq->at("1")});
    const auto g = MonotoneMap::make(sq, two, {0, 1, 0, 1});
    const auto r = transport(f, g, classical_square());
    CHECK(r.implication.table() == classical_two().table());
    CHECK(r.open_transferred);
  }
  SUBCASE("a strict gf(a) < a withholds the open flag") {
    const auto three = chain({"0", "m", "1"});
    const auto f = MonotoneMap::make(three, two, {0, 0, 1});
    const auto g = MonotoneMap::make(two, three, {three->at("0"), three->at("1")});
    const auto r = transport(f, g, classical_two());
    CHECK_FALSE(r.open_transferred);
    CHECK(oracle::first_axioms(*three, r.implication.table()));
  }
  SUBCASE("g must preserve meets") {
    const auto f = MonotoneMap::identity(sq);
    const auto g = MonotoneMap::make(sq, sq, {0, 3, 3, 3});
    CHECK_THROWS_AS(transport(f, g, classical_square()), ModelError);
  }
}

TEST_CASE("transport always yields an implication and honours its flags") {
  for (const auto& [an, a] : fixture_lattices(3)) {
    for (const auto& [bn, b] : fixture_lattices(3)) {
      const auto on_b = enumerate_implications(b);
      for (const auto& f : all_monotone_maps(a, b)) {
        for (const auto& g : all_monotone_maps(b, a)) {
          if (g.meet_obstruction()) continue;
          for (const auto& s : on_b) {
            const auto r = transport(f, g, s);
            CHECK(oracle::first_axioms(*a, r.implication.table()));
            if (r.open_transferred) CHECK(oracle::open_by_definition(*a, r.implication.table()));
            if (r.closed_transferred) CHECK(oracle::closed_by_definition(*a, r.implication.table()));
          }
        }
      }
    }
  }
}

TEST_CASE("lifting along a map with a left inverse") {
  const auto two = chain({"0", "1"});
  const auto three = chain({"0", "m", "1"});
  const auto sq = boolean_square();
  SUBCASE("identity") {
    const auto id = MonotoneMap::identity(sq);
    CHECK(lift_left_inverse(id, id, classical_square()).table() == classical_square().table());
  }
  SUBCASE("two-element chain inside the three-element chain") {
    const auto f = MonotoneMap::make(two, three, {three->at("0"), three->at("1")});
    const auto g = MonotoneMap::make(three, two, {0, 1, 1});
    const auto lifted = lift_left_inverse(f, g, classical_two());
    CHECK(is_strong_map(f, classical_two(), lifted));
  }
  SUBCASE("two-element chain into the square") {
    const auto f = MonotoneMap::make(two, sq, {sq->at("0"), sq->at("1")});
    const auto g = MonotoneMap::make(sq, two, {0, 1, 0, 1});
    const auto lifted = lift_left_inverse(f, g, classical_two());
    CHECK(is_strong_map(f, classical_two(), lifted));
    CHECK(oracle::first_axioms(*sq, lifted.table()));
  }
}

TEST_CASE("lifting weakly Boolean implications along surjections") {
  const auto two = chain({"0", "1"});
  const auto sq = boolean_square();
  const auto f = MonotoneMap::make(sq, two, {0, 1, 0, 1});
  const auto lifted = lift_wbi(f, classical_square());
  CHECK(lifted.table() == classical_two().table());
  CHECK(wbi_decompose(lifted) == f(0));
  CHECK(lift_wbi(f, trivial_implication(sq)).table() == trivial_implication(two).table());
  const auto id = MonotoneMap::identity(sq);
  CHECK(lift_wbi(id, classical_square()).table() == classical_square().table());
  std::size_t strong = 0;
  for (const auto& t : wbis(two)) strong += is_strong_map(f, classical_square(), t) ? 1 : 0;
  CHECK(strong == 1);
}

TEST_CASE("enumeration examples") {
  CHECK(enumerate_implications(chain({"0", "1"})).size() == 2);
  const auto three = chain({"0", "m", "1"});
  const auto w = wbis(three);
  REQUIRE(w.size() == 2);
  std::set<Elem> cores;
  for (const auto& i : w) cores.insert(*classify(i).core);
  CHECK(cores == std::set<Elem>{three->at("m"), three->at("1")});
  CHECK(enumerate_implications(chain({"0"})).size() == 1);
}

TEST_CASE("enumeration matches brute force on lattices up to three elements") {
  for (const auto& [name, l] : fixture_lattices(3)) {
    const auto brute = oracle::all_implications(*l);
    CHECK(tables(enumerate_implications(l)) == std::set<OpTable>(brute.begin(), brute.end()));
  }
}

TEST_CASE("enumeration counts, filters, limits and determinism") {
  const auto sq = boolean_square();
  const auto all = enumerate_implications(sq);
  CHECK(all.size() == 169);
  std::size_t open = 0, closed = 0;
  for (const auto& i : all) {
    CHECK(oracle::first_axioms(*sq, i.table()));
    open += classify(i).open ? 1 : 0;
    closed += classify(i).closed ? 1 : 0;
  }
  EnumerateOptions o;
  o.filter = ClassFilter::open();
  CHECK(enumerate_implications(sq, o).size() == open);
  o.filter = ClassFilter::closed();
  CHECK(enumerate_implications(sq, o).size() == closed);
  EnumerateOptions lim;
  lim.limit = 10;
  const auto first = enumerate_implications(sq, lim);
  REQUIRE(first.size() == 10);
  for (std::size_t k = 0; k < 10; ++k) CHECK(first[k].table() == all[k].table());
  CHECK(enumerate_implications(chain({"0", "a", "b", "1"})).size() == 64);
}

TEST_CASE("fixed cells restrict the search") {
  const auto three = chain({"0", "m", "1"});
  EnumerateOptions o;
  o.fixed.assign(9, kUnassigned);
  o.fixed[static_cast<std::size_t>(2 * 3 + 0)] = three->at("0");
  for (const auto& i : enumerate_implications(three, o)) CHECK(i(2, 0) == 0);
}
