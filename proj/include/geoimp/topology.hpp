#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "geoimp/implication.hpp"
#include "geoimp/lattice.hpp"

namespace geoimp {

class FinSpace;
using SpacePtr = std::shared_ptr<const FinSpace>;

/// A finite topological space. Opens are kept in canonical subset order, and
/// element i of `lattice()` is `opens()[i]`, named like "{a,b}".
class FinSpace {
 public:
  /// Verifies ∅, the whole set and closure under ∪ and ∩; duplicates are
  /// merged. Throws ModelError(NotATopology) with the offending pair.
  static SpacePtr make(std::vector<std::string> points, std::vector<Subset> opens);

  std::size_t size() const { return points_.size(); }
  const std::vector<std::string>& points() const { return points_; }
  const std::string& point(int p) const { return points_[static_cast<std::size_t>(p)]; }
  int at_point(std::string_view name) const;
  Subset all() const { return full_set(size()); }

  const std::vector<Subset>& opens() const { return opens_; }
  Subset open(Elem e) const { return opens_[static_cast<std::size_t>(e)]; }
  std::optional<Elem> open_index(Subset s) const;
  bool is_open(Subset s) const { return open_index(s).has_value(); }
  bool is_closed(Subset s) const { return is_open(all() & ~s); }
  /// Closed sets in canonical order.
  std::vector<Subset> closeds() const;
  Subset interior(Subset s) const;
  Subset closure(Subset s) const;

  const LatticePtr& lattice() const { return lattice_; }
  std::string format(Subset s) const { return format_set(points_, s); }

 private:
  FinSpace() = default;

  std::vector<std::string> points_;
  std::vector<Subset> opens_;
  LatticePtr lattice_;
};

SpacePtr discrete_space(std::vector<std::string> points);
SpacePtr indiscrete_space(std::vector<std::string> points);
/// Points a, b with opens ∅, {a}, {a,b}.
SpacePtr sierpinski_space();
SpacePtr point_space();
SpacePtr empty_space();
/// Every topology on the given points, ordered by canonical open lists.
std::vector<SpacePtr> all_topologies(const std::vector<std::string>& points);

class ContinuousMap {
 public:
  /// Throws ModelError(Discontinuous) naming an open whose preimage is not open.
  static ContinuousMap make(SpacePtr source, SpacePtr target, std::vector<int> table);
  static ContinuousMap identity(SpacePtr space);
  static ContinuousMap from_names(SpacePtr source, SpacePtr target,
                                  const std::vector<std::pair<std::string, std::string>>& assignments);
  /// Every continuous map between the two spaces, in lexicographic table order.
  static std::vector<ContinuousMap> all(const SpacePtr& source, const SpacePtr& target);

  int operator()(int p) const { return table_[static_cast<std::size_t>(p)]; }
  Subset image(Subset s) const;
  Subset preimage(Subset s) const;
  /// f⁻¹ as a lattice map O(target) → O(source).
  const MonotoneMap& inverse_image() const { return *inverse_; }

  const FinSpace& source() const { return *source_; }
  const FinSpace& target() const { return *target_; }
  const SpacePtr& source_ptr() const { return source_; }
  const SpacePtr& target_ptr() const { return target_; }
  const std::vector<int>& table() const { return table_; }

  /// `next ∘ this`.
  ContinuousMap then(const ContinuousMap& next) const;

  bool operator==(const ContinuousMap& other) const {
    return source_ == other.source_ && target_ == other.target_ && table_ == other.table_;
  }

 private:
  ContinuousMap(SpacePtr source, SpacePtr target, std::vector<int> table);

  SpacePtr source_;
  SpacePtr target_;
  std::vector<int> table_;
  std::shared_ptr<const MonotoneMap> inverse_;
};

struct MapClass {
  bool continuous = true;
  bool injective = false;
  bool surjective = false;
  bool open = false;
  bool closed = false;
  bool embedding = false;
  bool open_irreducible = false;
  bool closed_irreducible = false;
};

/// The irreducibility flags are cross-checked against the fiber criterion.
MapClass classify_map(const ContinuousMap& f);

struct SpaceClass {
  bool discrete = false;
  bool indiscrete = false;
  bool locally_indiscrete = false;
  bool t0 = false;
  bool hausdorff = false;
  /// Any two nonempty opens meet (vacuous on the empty space).
  bool open_irreducible = false;
  /// Any two nonempty closed sets meet.
  bool closed_irreducible = false;
};

SpaceClass classify_space(const FinSpace& space);

struct ImageAdjoints {
  /// f_!(U) = f[U], present iff f is open.
  std::optional<MonotoneMap> lower;
  /// f_*(U) = f[Uᶜ]ᶜ, present iff f is closed.
  std::optional<MonotoneMap> upper;
};

ImageAdjoints image_adjoints(const ContinuousMap& f);

/// A space with an implication over its open lattice.
struct StrongSpace {
  SpacePtr space;
  Implication imp;

  /// Throws ModelError(TableMismatch) if imp is over another lattice.
  static StrongSpace make(SpacePtr space, Implication imp);
  Subset operator()(Subset u, Subset v) const;
};

/// U → V = Uᶜ ∪ V ∪ M. Throws ModelError(InvalidCore) with a closed set K for
/// which K ∪ M is not open.
StrongSpace wbs_from_core(const SpacePtr& space, Subset core);

struct CoredSpace {
  Subset core;
  StrongSpace strong;
};

/// Every valid core in canonical order, cross-checked against the weakly
/// Boolean implications found by enumeration.
std::vector<CoredSpace> wbs_enumerate(const SpacePtr& space);

enum class LocalMode { open, closed };

struct LocalizabilityWitness {
  Subset z, u1, v1, u2, v2;
};

struct Localizability {
  bool holds = true;
  std::optional<LocalizabilityWitness> witness;
};

/// Does (U → V) ∩ Z depend only on U ∩ Z and V ∩ Z, for every open (or
/// closed) Z? Asserted equal to the matching classify flag.
Localizability localizability(const StrongSpace& s, LocalMode mode);

/// The same condition as an enumeration constraint on partial tables over
/// space->lattice().
std::function<bool(std::span<const Elem>, Elem, Elem)> localizability_constraint(const SpacePtr& space,
                                                                                LocalMode mode);

struct Subspace {
  SpacePtr space;
  ContinuousMap inclusion;
};

/// The induced topology on A, points in their original order.
Subspace subspace(const SpacePtr& space, Subset a);

/// Two pairs of target opens with equal preimages but different preimages
/// of their implications.
struct PullbackConflict {
  Elem u1, v1, u2, v2;
};

struct InducedCells {
  /// Over the source open lattice; kUnassigned where (U', V') is not a pair of
  /// preimages.
  OpTable cells;
  std::optional<PullbackConflict> conflict;
};

/// f⁻¹(U) → f⁻¹(V) := f⁻¹(U → V) wherever that is well defined.
InducedCells induced_cells(const ContinuousMap& f, const Implication& on_target);

struct Pullback {
  std::optional<Implication> implication;
  std::optional<PullbackConflict> conflict;
};

/// The implication induced along an embedding, when well defined. Throws
/// ModelError(NotAnEmbedding).
Pullback pullback_along_embedding(const ContinuousMap& j, const Implication& on_target);

/// Enumeration constraint: every map's induced cells stay conflict-free.
std::function<bool(std::span<const Elem>, Elem, Elem)> pullback_constraint(std::vector<ContinuousMap> maps);

}  // namespace geoimp
