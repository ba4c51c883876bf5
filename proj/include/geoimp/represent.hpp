#pragma once

#include <optional>
#include <string>
#include <vector>

#include "geoimp/implication.hpp"
#include "geoimp/knframe.hpp"
#include "geoimp/lattice.hpp"

namespace geoimp {

/// A join-preserving ∇ and a monotone F on one lattice.
class AdjointData {
 public:
  /// Throws ModelError(NotJoinPreserving) with a subset whose join ∇ breaks.
  static AdjointData make(MonotoneMap nabla, MonotoneMap f);

  const FinLattice& lattice() const { return nabla_.source(); }
  const LatticePtr& lattice_ptr() const { return nabla_.source_ptr(); }
  const MonotoneMap& nabla() const { return nabla_; }
  const MonotoneMap& f() const { return f_; }

 private:
  AdjointData(MonotoneMap nabla, MonotoneMap f) : nabla_(std::move(nabla)), f_(std::move(f)) {}

  MonotoneMap nabla_;
  MonotoneMap f_;
};

/// a → b = ⋁{c | ∇c ∧ F(a) ≤ F(b)}; asserts ∇c ∧ F(a) ≤ F(b) ⇔ c ≤ a → b.
Implication implication_from_adjoints(const AdjointData& data);

/// a →_∇ b = Δ(a ⇒ b) with Δ right adjoint to ∇; asserts c ≤ a →_∇ b ⇔
/// ∇c ∧ a ≤ b. Throws ModelError(NoRightAdjoint).
Implication nabla_implication(const MonotoneMap& nabla);

enum class CheckStatus { pass, fail, skipped };

std::string_view to_string(CheckStatus status);

struct NamedCheck {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  std::string witness;
};

struct RepresentationReport {
  /// Points are the prime filters in canonical order.
  KNFrame frame;
  std::vector<Subset> filters;
  /// i(a) as a set of frame points, indexed by element.
  std::vector<Subset> embedding;
  std::vector<NamedCheck> checks;

  bool ok() const;
  const NamedCheck* first_failure() const;
};

/// The prime-filter frame with R = {(P, Q) | ∇[P] ⊆ Q} and
/// N(P) = {U | ∃a. i(a) ⊆ U ∧ F(a) ∈ P}, plus the six embedding checks. All
/// checks run; failures are reported, not thrown. Throws
/// ModelError(TableMismatch) if `s` is not the implication of the data.
RepresentationReport build_representation(const AdjointData& data, const Implication& s);

}  // namespace geoimp
