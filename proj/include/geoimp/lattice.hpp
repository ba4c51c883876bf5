#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "geoimp/subset.hpp"

namespace geoimp {

/// Index of an element inside its lattice.
using Elem = int;

/// A finite bounded distributive lattice, stored by its order matrix. Meet,
/// join and Heyting tables are derived once at validation.
class FinLattice {
 public:
  /// Checks the poset laws, existence of all binary meets and joins and of the
  /// bounds, and distributivity, in that order. Throws ModelError naming the
  /// first violated law with a witness.
  static FinLattice validate(std::vector<std::string> names, const std::vector<std::vector<bool>>& leq);

  std::size_t size() const { return names_.size(); }
  bool leq(Elem a, Elem b) const { return leq_[index(a, b)] != 0; }
  Elem meet(Elem a, Elem b) const { return meet_[index(a, b)]; }
  Elem join(Elem a, Elem b) const { return join_[index(a, b)]; }
  /// b ⇒ c, the largest a with a ∧ b ≤ c.
  Elem heyting(Elem b, Elem c) const { return heyting_[index(b, c)]; }
  Elem bottom() const { return bottom_; }
  Elem top() const { return top_; }

  Elem meet_of(Subset s) const;
  Elem join_of(Subset s) const;

  Subset up(Elem a) const { return up_[static_cast<std::size_t>(a)]; }
  Subset down(Elem a) const { return down_[static_cast<std::size_t>(a)]; }
  Subset all() const { return full_set(size()); }

  bool is_upset(Subset s) const;
  bool is_filter(Subset s) const;
  bool is_ideal(Subset s) const;
  bool is_prime_filter(Subset s) const;

  const std::string& name(Elem a) const { return names_[static_cast<std::size_t>(a)]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<Elem> find(std::string_view name) const;
  /// Like find, but throws ModelError(UnknownName).
  Elem at(std::string_view name) const;
  std::string format(Subset s) const { return format_set(names_, s); }

  /// Elements sorted so that a < b in the order implies a comes first; ties
  /// are broken by index.
  const std::vector<Elem>& linear_extension() const { return linear_; }

  bool operator==(const FinLattice& other) const {
    return names_ == other.names_ && leq_ == other.leq_;
  }

 private:
  FinLattice() = default;
  std::size_t index(Elem a, Elem b) const {
    return static_cast<std::size_t>(a) * names_.size() + static_cast<std::size_t>(b);
  }

  std::vector<std::string> names_;
  std::vector<unsigned char> leq_;
  std::vector<Elem> meet_;
  std::vector<Elem> join_;
  std::vector<Elem> heyting_;
  std::vector<Subset> up_;
  std::vector<Subset> down_;
  std::vector<Elem> linear_;
  Elem bottom_ = 0;
  Elem top_ = 0;
};

using LatticePtr = std::shared_ptr<const FinLattice>;

LatticePtr make_lattice(std::vector<std::string> names, const std::vector<std::vector<bool>>& leq);

/// The lattice of the given sets ordered by inclusion; `names[i]` names `sets[i]`.
LatticePtr lattice_of_sets(std::vector<std::string> names, std::span<const Subset> sets);

/// Chain with the given names listed bottom to top.
LatticePtr chain(std::vector<std::string> names);

/// Order-preserving map between finite lattices.
class MonotoneMap {
 public:
  /// Throws ModelError(NotMonotone) with the offending pair.
  static MonotoneMap make(LatticePtr source, LatticePtr target, std::vector<Elem> table);
  static MonotoneMap identity(LatticePtr lattice);
  static MonotoneMap from_names(LatticePtr source, LatticePtr target,
                                const std::vector<std::pair<std::string, std::string>>& assignments);

  Elem operator()(Elem a) const { return table_[static_cast<std::size_t>(a)]; }
  const FinLattice& source() const { return *source_; }
  const FinLattice& target() const { return *target_; }
  const LatticePtr& source_ptr() const { return source_; }
  const LatticePtr& target_ptr() const { return target_; }
  std::span<const Elem> table() const { return table_; }

  /// A set of source elements whose join is not preserved (the empty set when
  /// bottom is not preserved), or nothing when all joins are preserved.
  std::optional<Subset> join_obstruction() const;
  std::optional<Subset> meet_obstruction() const;
  bool preserves_binary_meets() const;
  bool preserves_binary_joins() const;
  bool preserves_top() const { return (*this)(source_->top()) == target_->top(); }
  bool preserves_bottom() const { return (*this)(source_->bottom()) == target_->bottom(); }
  bool is_lattice_map() const {
    return preserves_top() && preserves_bottom() && preserves_binary_meets() && preserves_binary_joins();
  }
  bool is_surjective() const;

  /// `next ∘ this`.
  MonotoneMap then(const MonotoneMap& next) const;

  bool operator==(const MonotoneMap& other) const { return table_ == other.table_; }

 private:
  MonotoneMap(LatticePtr source, LatticePtr target, std::vector<Elem> table)
      : source_(std::move(source)), target_(std::move(target)), table_(std::move(table)) {}

  LatticePtr source_;
  LatticePtr target_;
  std::vector<Elem> table_;
};

struct Adjoints {
  std::optional<MonotoneMap> right;
  std::optional<MonotoneMap> left;
  /// Present exactly when `right` is absent.
  std::optional<Subset> right_obstruction;
  /// Present exactly when `left` is absent.
  std::optional<Subset> left_obstruction;
};

/// Right adjoint Δ(b) = ⋁{c | h(c) ≤ b} when h preserves all joins, left
/// adjoint dually. Each returned adjoint is verified on all pairs.
Adjoints adjoints(const MonotoneMap& h);

struct BooleanDiagnosis {
  std::optional<std::vector<Elem>> complement;
  /// First element without a complement, when `complement` is absent.
  std::optional<Elem> witness;
};

BooleanDiagnosis boolean_structure(const FinLattice& lattice);

/// The complement of a ∨ m inside the interval [m, 1], if it exists.
std::optional<Elem> interval_complement(const FinLattice& lattice, Elem m, Elem a);

/// First element of [m, 1] without a complement in [m, 1], or nothing when
/// the interval is Boolean.
std::optional<Elem> interval_boolean_obstruction(const FinLattice& lattice, Elem m);

struct PrimeFilterSet {
  LatticePtr lattice;
  /// In canonical subset order.
  std::vector<Subset> filters;
};

PrimeFilterSet prime_filters(const LatticePtr& lattice);

/// A prime filter containing `filter` and disjoint from `ideal`: the first in
/// canonical order. Nothing when the two meet. Throws when the inputs are not
/// a filter and an ideal.
std::optional<Subset> separate(const FinLattice& lattice, Subset filter, Subset ideal);

}  // namespace geoimp
