#include <doctest.h>

#include "geoimp/catalog.hpp"
#include "geoimp/diagnostic.hpp"
#include "geoimp/represent.hpp"
#include "oracles.hpp"

using namespace geoimp;

namespace {

MonotoneMap by_names(const LatticePtr& l, std::vector<std::string> images) {
  std::vector<Elem> t;
  for (const auto& n : images) t.push_back(l->at(n));
  return MonotoneMap::make(l, l, t);
}

OpTable adjoint_oracle(const AdjointData& d) {
  const auto& l = d.lattice();
  OpTable t;
  for (Elem a = 0; a < oracle::size(l); ++a) {
    for (Elem b = 0; b < oracle::size(l); ++b) {
      t.push_back(*oracle::greatest(l, [&](Elem c) { return l.leq(oracle::meet(l, d.nabla()(c), d.f()(a)), d.f()(b)); }));
    }
  }
  return t;
}

OpTable nabla_oracle(const MonotoneMap& nabla) {
  const auto& l = nabla.source();
  OpTable t;
  for (Elem a = 0; a < oracle::size(l); ++a) {
    for (Elem b = 0; b < oracle::size(l); ++b) {
      t.push_back(*oracle::greatest(l, [&](Elem c) { return l.leq(oracle::meet(l, nabla(c), a), b); }));
    }
  }
  return t;
}

std::vector<MonotoneMap> join_preserving(const LatticePtr& l) {
  std::vector<MonotoneMap> out;
  for (auto& m : all_monotone_maps(l, l)) {
    if (!m.join_obstruction()) out.push_back(std::move(m));
  }
  return out;
}

void check_report(const AdjointData& d, const RepresentationReport& r) {
  const auto& l = d.lattice();
  CHECK(r.checks.size() == 6);
  for (std::size_t k = 0; k < r.filters.size(); ++k) CHECK(oracle::prime_filter(l, r.filters[k]));
  for (Elem a = 0; a < oracle::size(l); ++a) {
    Subset expected = 0;
    for (std::size_t k = 0; k < r.filters.size(); ++k) {
      if (contains(r.filters[k], a)) expected |= bit(static_cast<int>(k));
    }
    CHECK(r.embedding[static_cast<std::size_t>(a)] == expected);
  }
  for (std::size_t p = 0; p < r.filters.size(); ++p) {
    Subset image = 0;
    for (int a : members(r.filters[p])) image |= bit(d.nabla()(a));
    for (std::size_t q = 0; q < r.filters.size(); ++q) {
      CHECK(r.frame.related(static_cast<int>(p), static_cast<int>(q)) == is_subset(image, r.filters[q]));
      CHECK(r.frame.leq(static_cast<int>(p), static_cast<int>(q)) == is_subset(r.filters[p], r.filters[q]));
    }
  }
}

}  // namespace

TEST_CASE("implications from adjoint data") {
  const auto three = chain({"0", "m", "1"});
  SUBCASE("identity data gives Heyting") {
    const auto id = MonotoneMap::identity(three);
    const auto imp = implication_from_adjoints(AdjointData::make(id, id));
    CHECK(imp.table() == heyting_implication(three).table());
  }
  SUBCASE("constant top F gives the trivial implication") {
    const auto imp = implication_from_adjoints(AdjointData::make(MonotoneMap::identity(three), by_names(three, {"1", "1", "1"})));
    CHECK(imp.table() == trivial_implication(three).table());
  }
  SUBCASE("F collapsing m to 1") {
    const auto d = AdjointData::make(MonotoneMap::identity(three), by_names(three, {"0", "1", "1"}));
    const auto imp = implication_from_adjoints(d);
    CHECK(imp.table() == adjoint_oracle(d));
    CHECK(imp(three->at("1"), three->at("m")) == three->top());
    CHECK(imp(three->at("m"), three->at("0")) == three->at("0"));
    for (Elem a = 0; a < 3; ++a) {
      for (Elem b = 0; b < 3; ++b) {
        for (Elem c = 0; c < 3; ++c) CHECK(three->leq(three->meet(c, d.f()(a)), d.f()(b)) == three->leq(c, imp(a, b)));
      }
    }
  }
}

TEST_CASE("adjoint data requires a join-preserving nabla") {
  const auto sq = boolean_square();
  const auto id = MonotoneMap::identity(sq);
  try {
    AdjointData::make(by_names(sq, {"0", "p", "p", "1"}), id);
    FAIL("accepted a nabla that breaks p ∨ q");
  } catch (const ModelError& e) {
    CHECK(e.kind() == ErrorKind::NotJoinPreserving);
  }
  CHECK_THROWS_AS(AdjointData::make(by_names(sq, {"p", "p", "1", "1"}), id), ModelError);
}

TEST_CASE("nabla implication examples") {
  const auto three = chain({"0", "m", "1"});
  CHECK(nabla_implication(MonotoneMap::identity(three)).table() == heyting_implication(three).table());
  CHECK(nabla_implication(by_names(three, {"0", "0", "0"})).table() == trivial_implication(three).table());
  const auto nabla = by_names(three, {"0", "1", "1"});
  const auto delta = adjoints(nabla).right;
  REQUIRE(delta);
  CHECK((*delta)(three->at("0")) == three->at("0"));
  CHECK((*delta)(three->at("m")) == three->at("0"));
  CHECK((*delta)(three->at("1")) == three->at("1"));
  const auto imp = nabla_implication(nabla);
  CHECK(imp.table() == nabla_oracle(nabla));
  CHECK(imp(three->at("m"), three->at("0")) == three->at("0"));
  CHECK(imp(three->at("1"), three->at("m")) == three->at("0"));
}

TEST_CASE("representation of the two-element chain") {
  const auto two = chain({"0", "1"});
  const auto id = MonotoneMap::identity(two);
  const auto d = AdjointData::make(id, id);
  const auto r = build_representation(d, implication_from_adjoints(d));
  CHECK(r.frame.size() == 1);
  CHECK(r.ok());
  check_report(d, r);
}

TEST_CASE("representation of the three-element chain with Heyting") {
  const auto three = chain({"0", "m", "1"});
  const auto id = MonotoneMap::identity(three);
  const auto d = AdjointData::make(id, id);
  const auto r = build_representation(d, implication_from_adjoints(d));
  REQUIRE(r.filters.size() == 2);
  CHECK(r.filters[0] == bit(three->at("1")));
  CHECK(r.frame.leq(0, 1));
  CHECK(r.ok());
  for (const auto& c : r.checks) CHECK(c.status == CheckStatus::pass);
  check_report(d, r);
}

TEST_CASE("representation of the Boolean square") {
  const auto sq = boolean_square();
  const auto id = MonotoneMap::identity(sq);
  const auto d = AdjointData::make(id, id);
  const auto r = build_representation(d, implication_from_adjoints(d));
  REQUIRE(r.filters.size() == 2);
  CHECK_FALSE(r.frame.leq(0, 1));
  CHECK_FALSE(r.frame.leq(1, 0));
  CHECK(r.ok());
  check_report(d, r);
}

TEST_CASE("a mismatched implication is rejected") {
  const auto three = chain({"0", "m", "1"});
  const auto id = MonotoneMap::identity(three);
  CHECK_THROWS_AS(build_representation(AdjointData::make(id, id), trivial_implication(three)), ModelError);
}

TEST_CASE("adjoint data over lattices up to five elements") {
  std::size_t reports = 0;
  for (const auto& [name, l] : fixture_lattices(5)) {
    const auto nablas = join_preserving(l);
    const auto fs = all_monotone_maps(l, l);
    const std::size_t stride = l->size() <= 4 ? 1 : 7;
    for (const auto& nabla : nablas) {
      const auto ni = nabla_implication(nabla);
      CHECK(ni.table() == nabla_oracle(nabla));
      for (std::size_t k = 0; k < fs.size(); k += stride) {
        const auto d = AdjointData::make(nabla, fs[k]);
        const auto imp = implication_from_adjoints(d);
        CHECK(imp.table() == adjoint_oracle(d));
        CHECK(oracle::first_axioms(*l, imp.table()));
        const auto r = build_representation(d, imp);
        for (std::size_t c = 0; c < 5; ++c) CHECK(r.checks[c].status == CheckStatus::pass);
        CHECK(r.checks[5].status == (classify(imp).open ? CheckStatus::pass : CheckStatus::skipped));
        if (l->size() <= 3) check_report(d, r);
        ++reports;
      }
    }
  }
  CHECK(reports > 1000);
}
