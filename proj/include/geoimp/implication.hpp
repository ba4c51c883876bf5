#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "geoimp/lattice.hpp"

namespace geoimp {

/// Marks an unassigned cell in a partial operation table.
inline constexpr Elem kUnassigned = -1;

/// A binary operation table over a lattice: row = first argument.
using OpTable = std::vector<Elem>;

/// An implication over a finite distributive lattice: antitone in the first
/// argument, monotone in the second, with a → a = 1 and
/// (a → b) ∧ (b → c) ≤ a → c.
class Implication {
 public:
  /// Validates under both axiom sets (see `definition_violation` and
  /// `alternative_violation`). Throws ModelError(NotAnImplication) on a
  /// violation and InvariantError if the two verdicts differ.
  static Implication validate(LatticePtr lattice, OpTable table);

  /// For tables produced by this library's own constructions and searches,
  /// which establish the axioms themselves.
  static Implication unchecked(LatticePtr lattice, OpTable table) {
    return Implication(std::move(lattice), std::move(table));
  }

  Elem operator()(Elem a, Elem b) const {
    return table_[static_cast<std::size_t>(a) * lattice_->size() + static_cast<std::size_t>(b)];
  }
  /// ¬a := a → 0.
  Elem neg(Elem a) const { return (*this)(a, lattice_->bottom()); }

  const FinLattice& lattice() const { return *lattice_; }
  const LatticePtr& lattice_ptr() const { return lattice_; }
  const OpTable& table() const { return table_; }

  bool operator==(const Implication& other) const {
    return table_ == other.table_ && (lattice_ == other.lattice_ || *lattice_ == *other.lattice_);
  }
  bool operator<(const Implication& other) const { return table_ < other.table_; }

 private:
  Implication(LatticePtr lattice, OpTable table) : lattice_(std::move(lattice)), table_(std::move(table)) {}

  LatticePtr lattice_;
  OpTable table_;
};

using StrongAlgebra = Implication;

struct AxiomViolation {
  /// Which law fails, e.g. "internal reflexivity".
  std::string law;
  std::vector<Elem> witness;
};

/// Checks antitone/monotone, a → a = 1 and internal transitivity. Cells set
/// to kUnassigned are skipped, so partial tables can be checked; every
/// reported violation involves only assigned cells.
std::optional<AxiomViolation> definition_violation(const FinLattice& lattice, std::span<const Elem> table);

/// Checks the alternative axiom set: a ≤ b implies a → b = 1, together with
/// internal transitivity. Partial tables as above.
std::optional<AxiomViolation> alternative_violation(const FinLattice& lattice, std::span<const Elem> table);

std::string describe(const FinLattice& lattice, const AxiomViolation& violation);

struct ImplicationClass {
  bool open = false;
  bool closed = false;
  bool weakly_boolean = false;
  bool meet_internalizing = false;
  bool join_internalizing = false;
  /// ¬1, present iff weakly_boolean.
  std::optional<Elem> core;
  /// (a, b) with a ≰ b → (a ∧ b).
  std::optional<std::pair<Elem, Elem>> not_open_witness;
  /// (a, b) with (a ∨ b → a) ∨ b ≠ 1.
  std::optional<std::pair<Elem, Elem>> not_closed_witness;
};

/// Computes each flag by its single-inequality criterion and by the
/// quantified definition; throws InvariantError if they disagree.
ImplicationClass classify(const Implication& imp);

Implication trivial_implication(const LatticePtr& lattice);
Implication heyting_implication(const LatticePtr& lattice);

/// a → b = n(a) ∨ b where n(a) is the complement of a ∨ m in [m, 1].
/// Throws ModelError(IntervalNotBoolean) when [m, 1] is not Boolean.
Implication wbi_from_core(const LatticePtr& lattice, Elem m);

/// Returns the core ¬1 of a weakly Boolean implication, after checking that
/// [¬1, 1] is Boolean and a → b = ¬a ∨ b. Throws ModelError(NotWbi) otherwise.
Elem wbi_decompose(const Implication& imp);

struct TransportResult {
  Implication implication;
  bool open_transferred = false;
  bool closed_transferred = false;
};

/// a →_A b := g(f(a) →_B f(b)) for f: A → B monotone and g: B → A preserving
/// finite meets. The transfer flags report when the sufficient conditions for
/// openness / closedness of the result hold; the result is then checked.
TransportResult transport(const MonotoneMap& f, const MonotoneMap& g, const Implication& on_target);

/// c →_B d := f(g(c) →_A g(d)) for a bounded lattice map f: A → B with a
/// monotone left inverse g. f becomes a strong algebra map.
Implication lift_left_inverse(const MonotoneMap& f, const MonotoneMap& g, const Implication& on_source);

/// The unique weakly Boolean implication on B making the surjective lattice
/// morphism f: A → B strong (surjectivity may be dropped when B is Boolean).
Implication lift_wbi(const MonotoneMap& f, const Implication& on_source);

/// Does f(a →_A b) = f(a) →_B f(b) hold for all a, b?
bool is_strong_map(const MonotoneMap& f, const Implication& on_source, const Implication& on_target);

struct ClassFilter {
  bool require_open = false;
  bool require_closed = false;

  static ClassFilter any() { return {}; }
  static ClassFilter open() { return {true, false}; }
  static ClassFilter closed() { return {false, true}; }
  static ClassFilter weakly_boolean() { return {true, true}; }
};

struct EnumerateOptions {
  ClassFilter filter;
  /// Optional pre-assigned cells (kUnassigned = free); empty means none.
  OpTable fixed;
  /// Stop after this many results; 0 = no limit.
  std::size_t limit = 0;
  /// Extra constraint consulted after each assignment of cell (a, b) on the
  /// partial table; must only reject on assigned cells.
  std::function<bool(std::span<const Elem> partial, Elem a, Elem b)> extra;
};

/// All implications on the lattice passing the filter, by backtracking with
/// monotonicity and transitivity propagation. Results come in search order:
/// cells by first argument descending along the linear extension, second
/// argument ascending; values tried bottom-up.
std::vector<Implication> enumerate_implications(const LatticePtr& lattice, const EnumerateOptions& options = {});

/// Streams the same search to `visit` without storing results; the visitor
/// returns false to stop. Returns the number of tables visited.
std::size_t for_each_implication(const LatticePtr& lattice, const EnumerateOptions& options,
                                 const std::function<bool(const Implication&)>& visit);

/// Renders the table with element names, one row per first argument.
std::string format_table(const Implication& imp);

}  // namespace geoimp
