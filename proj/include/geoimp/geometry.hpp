#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "geoimp/implication.hpp"
#include "geoimp/topology.hpp"

namespace geoimp {

struct CategoryMap {
  std::string name;
  int source = 0;
  int target = 0;
  ContinuousMap map;
};

/// A finite category of spaces: named objects and named continuous maps
/// between them.
class SpaceCategory {
 public:
  /// Checks names, endpoints, identities and composites. Throws
  /// ModelError(NotACategory) naming the missing identity or composite.
  static SpaceCategory make(std::vector<std::string> names, std::vector<SpacePtr> objects, std::vector<CategoryMap> maps);

  std::size_t size() const { return objects_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int x) const { return names_[static_cast<std::size_t>(x)]; }
  const std::vector<SpacePtr>& objects() const { return objects_; }
  const SpacePtr& object(int x) const { return objects_[static_cast<std::size_t>(x)]; }
  const std::vector<CategoryMap>& maps() const { return maps_; }
  int find(std::string_view name) const;

 private:
  SpaceCategory() = default;

  std::vector<std::string> names_;
  std::vector<SpacePtr> objects_;
  std::vector<CategoryMap> maps_;
};

/// Every continuous map between the given objects.
SpaceCategory full_category(std::vector<std::string> names, std::vector<SpacePtr> objects);

/// The full category on every subspace of the given spaces (each subspace is
/// identified by its point names and opens), optionally without the empty
/// space. Objects are named by their point sets, e.g. "{a,b}".
SpaceCategory local_closure(const std::vector<SpacePtr>& generators, bool include_empty = true);

/// Discrete spaces with 0..n points and every injective map between them.
SpaceCategory injective_discrete_category(std::size_t n);

struct CategoryProps {
  bool local = false;
  bool has_terminal = false;
  std::vector<int> terminals;
  std::vector<int> full_objects;
  /// Why the category is not local.
  std::string witness;
};

/// Locality asks for every subspace inclusion, the empty one included when
/// `empty_subspaces` is set.
CategoryProps category_props(const SpaceCategory& category, bool empty_subspaces = true);

/// Sorted, duplicate-free implications over one object.
using Fiber = std::vector<Implication>;

/// One fiber per object, in object order.
using FiberAssignment = std::vector<Fiber>;

Fiber make_fiber(std::vector<Implication> members);

struct GeometricWitness {
  /// The object with an empty fiber, when that is the failure.
  std::optional<int> empty_object;
  /// Otherwise the map and the index of the target-fiber implication that has
  /// no pullback in the source fiber.
  std::optional<int> map;
  std::optional<int> target_member;
};

struct Geometricity {
  bool holds = true;
  std::optional<GeometricWitness> witness;
};

/// Throws ModelError(FiberMismatch) if the assignment does not fit the objects.
Geometricity is_geometric(const SpaceCategory& category, const FiberAssignment& assignment);

enum class CanonicalKind { trivial, boolean, both, all_wbi, bounded_core };

struct CanonicalSpec {
  CanonicalKind kind = CanonicalKind::trivial;
  /// For bounded_core: at most this many points outside the core.
  std::size_t n = 0;
};

/// Parses "t", "b", "bt", "a" and "c<n>".
CanonicalSpec parse_canonical(std::string_view text);
std::string to_string(const CanonicalSpec& spec);

/// Throws ModelError(PreconditionViolated) naming the offending object or
/// map; the produced assignment is asserted geometric.
FiberAssignment canonical_fibers(const SpaceCategory& category, const CanonicalSpec& spec);

struct Elimination {
  int object = 0;
  /// Index into the object's universe.
  int member = 0;
  /// The map along which it has no available pullback.
  int map = 0;
};

struct GeometricSearch {
  std::vector<FiberAssignment> assignments;
  /// Every implication per object, in enumeration order.
  std::vector<std::vector<Implication>> universe;
  /// Indices into the universe that survive elimination.
  std::vector<std::vector<int>> survivors;
  /// In elimination order.
  std::vector<Elimination> eliminations;
  bool local = false;
  std::size_t candidates = 0;
};

struct GeometricOptions {
  bool empty_subspaces = true;
  std::size_t universe_cap = 4096;
  std::size_t candidate_cap = std::size_t{1} << 20;
};

/// Every geometric assignment over the category, canonically sorted. Members
/// with no pullback along some map are eliminated first; each survivor
/// combination is then judged by is_geometric.
GeometricSearch enumerate_geometric(const SpaceCategory& category, const GeometricOptions& options = {});

/// Canonical comparison of assignments.
bool assignment_less(const FiberAssignment& a, const FiberAssignment& b);

}  // namespace geoimp
