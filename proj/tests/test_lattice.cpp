#include <doctest.h>

#include <set>

#include "geoimp/catalog.hpp"
#include "geoimp/diagnostic.hpp"
#include "geoimp/lattice.hpp"
#include "oracles.hpp"

using namespace geoimp;

namespace {

LatticePtr from_order(std::vector<std::string> names, const std::function<bool(int, int)>& leq) {
  const std::size_t n = names.size();
  std::vector<std::vector<bool>> m(n, std::vector<bool>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) m[a][b] = leq(static_cast<int>(a), static_cast<int>(b));
  }
  return make_lattice(std::move(names), m);
}

// Every distributive lattice with six elements, up to isomorphism.
std::vector<LatticePtr> six_element_lattices() {
  std::vector<LatticePtr> out;
  out.push_back(chain({"0", "1", "2", "3", "4", "5"}));
  out.push_back(from_order({"00", "01", "02", "10", "11", "12"}, [](int a, int b) {
    return a / 3 <= b / 3 && a % 3 <= b % 3;
  }));
  // Squares stacked with extra chain links; a square is two incomparable
  // middle elements between a bottom and a top.
  const auto square_stack = [](std::vector<std::string> names, int square_bottom) {
    return from_order(std::move(names), [=](int a, int b) {
      if (a == b) return true;
      const int p = square_bottom + 1, q = square_bottom + 2;
      if ((a == p && b == q) || (a == q && b == p)) return false;
      return a < b;
    });
  };
  out.push_back(square_stack({"0", "1", "p", "q", "4", "5"}, 1));
  out.push_back(square_stack({"0", "p", "q", "3", "4", "5"}, 0));
  out.push_back(square_stack({"0", "1", "2", "p", "q", "5"}, 2));
  return out;
}

std::vector<LatticePtr> audit_lattices() {
  std::vector<LatticePtr> out;
  for (const auto& f : fixture_lattices(5)) out.push_back(f.lattice);
  for (auto& l : six_element_lattices()) out.push_back(std::move(l));
  return out;
}

}  // namespace

TEST_CASE("a two-element chain is valid with the expected bounds") {
  const auto l = chain({"0", "1"});
  CHECK(l->bottom() == l->at("0"));
  CHECK(l->top() == l->at("1"));
}

TEST_CASE("the diamond M3 is rejected as not distributive with a triple") {
  const auto m3 = [] {
    return from_order({"0", "a", "b", "c", "1"}, [](int x, int y) { return x == y || x == 0 || y == 4; });
  };
  try {
    m3();
    FAIL("M3 was accepted");
  } catch (const ModelError& e) {
    CHECK(e.kind() == ErrorKind::NotDistributive);
    CHECK(std::count(e.witness().begin(), e.witness().end(), ',') == 2);
  }
}

TEST_CASE("the Boolean square is valid") {
  const auto l = boolean_square();
  CHECK(l->size() == 4);
  CHECK(l->meet(l->at("p"), l->at("q")) == l->at("0"));
  CHECK(l->join(l->at("p"), l->at("q")) == l->at("1"));
}

TEST_CASE("a non-transitive order is rejected with a witness") {
  CHECK_THROWS_AS(make_lattice({"0", "m", "1"}, {{true, true, false}, {false, true, true}, {false, false, true}}), ModelError);
  try {
    make_lattice({"0", "m", "1"}, {{true, true, false}, {false, true, true}, {false, false, true}});
  } catch (const ModelError& e) {
    CHECK(e.kind() == ErrorKind::NotAPoset);
    CHECK(e.witness() == "0, m, 1");
  }
}

TEST_CASE("six-element fixtures are pairwise distinct distributive lattices") {
  const auto ls = six_element_lattices();
  REQUIRE(ls.size() == 5);
  std::set<std::vector<int>> shapes;
  for (const auto& l : ls) {
    std::vector<int> up_sizes;
    for (Elem a = 0; a < 6; ++a) up_sizes.push_back(cardinality(l->up(a)));
    std::sort(up_sizes.begin(), up_sizes.end());
    shapes.insert(up_sizes);
  }
  CHECK(shapes.size() == 5);
}

TEST_CASE("Heyting implication examples") {
  const auto two = chain({"0", "1"});
  CHECK(two->heyting(two->at("1"), two->at("0")) == two->at("0"));
  CHECK(two->heyting(two->at("0"), two->at("1")) == two->at("1"));
  const auto three = chain({"0", "m", "1"});
  CHECK(three->heyting(three->at("1"), three->at("m")) == three->at("m"));
  CHECK(three->heyting(three->at("m"), three->at("0")) == three->at("0"));
  const auto sq = boolean_square();
  CHECK(sq->heyting(sq->at("p"), sq->at("q")) == sq->join(sq->at("q"), *oracle::complement(*sq, sq->at("p"))));
}

TEST_CASE("meet, join and Heyting tables match the order-only oracle") {
  for (const auto& l : audit_lattices()) {
    const int n = static_cast<int>(l->size());
    CHECK(l->top() == oracle::top(*l));
    CHECK(l->bottom() == oracle::bottom(*l));
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        CHECK(l->meet(a, b) == oracle::meet(*l, a, b));
        CHECK(l->join(a, b) == oracle::join(*l, a, b));
        CHECK(l->heyting(a, b) == oracle::heyting(*l, a, b));
        for (Elem c = 0; c < n; ++c) CHECK(l->leq(l->meet(a, b), c) == l->leq(a, l->heyting(b, c)));
      }
    }
  }
}

TEST_CASE("Boolean structure examples") {
  const auto sq = boolean_square();
  const auto d = boolean_structure(*sq);
  REQUIRE(d.complement);
  CHECK((*d.complement)[static_cast<std::size_t>(sq->at("p"))] == sq->at("q"));
  const auto three = chain({"0", "m", "1"});
  const auto e = boolean_structure(*three);
  CHECK_FALSE(e.complement);
  REQUIRE(e.witness);
  CHECK(*e.witness == three->at("m"));
  const auto two = chain({"0", "1"});
  CHECK((*boolean_structure(*two).complement)[0] == two->at("1"));
}

TEST_CASE("Boolean structure exists iff the Heyting negation complements") {
  for (const auto& l : audit_lattices()) {
    bool negation_complements = true;
    for (Elem a = 0; a < static_cast<Elem>(l->size()); ++a) {
      const Elem n = l->heyting(a, l->bottom());
      negation_complements = negation_complements && l->join(a, n) == l->top();
      CHECK(oracle::complement(*l, a).has_value() == (l->join(a, n) == l->top()));
    }
    CHECK(boolean_structure(*l).complement.has_value() == negation_complements);
  }
}

TEST_CASE("interval complement examples") {
  const auto three = chain({"0", "m", "1"});
  CHECK(interval_complement(*three, three->at("m"), three->at("0")) == three->at("1"));
  CHECK_FALSE(interval_complement(*three, three->at("0"), three->at("m")));
  for (const auto& l : audit_lattices()) {
    for (Elem a = 0; a < static_cast<Elem>(l->size()); ++a) CHECK(interval_complement(*l, l->top(), a) == l->top());
  }
}

TEST_CASE("prime filter examples") {
  const auto two = chain({"0", "1"});
  CHECK(prime_filters(two).filters == std::vector<Subset>{bit(two->at("1"))});
  const auto three = chain({"0", "m", "1"});
  CHECK(prime_filters(three).filters == std::vector<Subset>{bit(2), bit(1) | bit(2)});
  const auto sq = boolean_square();
  CHECK(prime_filters(sq).filters == std::vector<Subset>{sq->up(sq->at("p")), sq->up(sq->at("q"))});
}

TEST_CASE("prime filters pass a full powerset audit up to six elements") {
  for (const auto& l : audit_lattices()) {
    const auto found = prime_filters(l).filters;
    std::vector<Subset> expected;
    for (Subset s = 0; s <= l->all(); ++s) {
      if (oracle::prime_filter(*l, s)) expected.push_back(s);
    }
    std::sort(expected.begin(), expected.end(), canonical_less);
    CHECK(found == expected);
  }
}

TEST_CASE("separate examples") {
  const auto three = chain({"0", "m", "1"});
  const auto p = separate(*three, bit(2), bit(0));
  REQUIRE(p);
  CHECK(three->is_prime_filter(*p));
  CHECK_FALSE(separate(*three, three->all(), bit(0)));
  const auto sq = boolean_square();
  CHECK(separate(*sq, sq->up(sq->at("p")), sq->down(sq->at("q"))) == sq->up(sq->at("p")));
}

TEST_CASE("separate fails exactly on intersecting filter and ideal") {
  for (const auto& l : audit_lattices()) {
    for (Subset f = 1; f <= l->all(); ++f) {
      if (!l->is_filter(f)) continue;
      for (Subset i = 1; i <= l->all(); ++i) {
        if (!l->is_ideal(i)) continue;
        const auto p = separate(*l, f, i);
        CHECK(p.has_value() == ((f & i) == 0));
        if (p) {
          CHECK(oracle::prime_filter(*l, *p));
          CHECK(is_subset(f, *p));
          CHECK((*p & i) == 0);
        }
      }
    }
  }
}

TEST_CASE("adjoint examples") {
  const auto three = chain({"0", "m", "1"});
  const auto id = MonotoneMap::identity(three);
  const auto a = adjoints(id);
  REQUIRE(a.right);
  REQUIRE(a.left);
  CHECK(*a.right == id);
  CHECK(*a.left == id);

  const auto two = chain({"0", "1"});
  const auto h = MonotoneMap::make(two, three, {three->at("0"), three->at("m")});
  const auto b = adjoints(h);
  REQUIRE(b.right);
  CHECK((*b.right)(three->at("0")) == two->at("0"));
  CHECK((*b.right)(three->at("m")) == two->at("1"));
  CHECK((*b.right)(three->at("1")) == two->at("1"));
  CHECK_FALSE(b.left);
  REQUIRE(b.left_obstruction);
  CHECK(*b.left_obstruction == 0);

  const auto sq = boolean_square();
  const auto collapse = MonotoneMap::make(sq, two, {0, 1, 1, 1});
  const auto c = adjoints(collapse);
  REQUIRE(c.right);
  CHECK((*c.right)(0) == sq->at("0"));
  CHECK((*c.right)(1) == sq->at("1"));
}

TEST_CASE("returned adjoints satisfy the adjunction on every pair") {
  const auto ls = fixture_lattices(4);
  for (const auto& [an, a] : ls) {
    for (const auto& [bn, b] : ls) {
      for (const auto& h : all_monotone_maps(a, b)) {
        const auto adj = adjoints(h);
        CHECK(adj.right.has_value() == !h.join_obstruction().has_value());
        CHECK(adj.left.has_value() == !h.meet_obstruction().has_value());
        for (Elem c = 0; c < static_cast<Elem>(a->size()); ++c) {
          for (Elem d = 0; d < static_cast<Elem>(b->size()); ++d) {
            if (adj.right) CHECK(b->leq(h(c), d) == a->leq(c, (*adj.right)(d)));
            if (adj.left) CHECK(b->leq(d, h(c)) == a->leq((*adj.left)(d), c));
          }
        }
      }
    }
  }
}

TEST_CASE("non-monotone tables are rejected") {
  const auto two = chain({"0", "1"});
  CHECK_THROWS_AS(MonotoneMap::make(two, two, {1, 0}), ModelError);
}
