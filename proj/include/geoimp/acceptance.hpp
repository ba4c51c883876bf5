#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "geoimp/catalog.hpp"
#include "geoimp/implication.hpp"

namespace geoimp {

struct CriterionResult {
  std::string id;
  std::string title;
  std::string group;
  bool passed = false;
  std::string detail;
  /// Set on failure.
  std::string witness;
  double seconds = 0;
};

using AxiomChecker = std::function<std::optional<AxiomViolation>(const FinLattice&, std::span<const Elem>)>;

/// Sweeps every table over each lattice, pruning a partial table only when
/// both checkers already reject it, and compares the accepted sets with each
/// other and with enumerate_implications.
CriterionResult check_axiomatizations(const std::vector<NamedLattice>& lattices, const AxiomChecker& definition,
                                      const AxiomChecker& alternative);

/// The criterion ids A1..A11 with their groups.
std::vector<std::pair<std::string, std::string>> acceptance_criteria();

/// True for "", an id such as "A5", or a group name.
bool is_acceptance_selector(std::string_view selector);

/// Runs the criteria matching the selector, in id order. Failures, including
/// thrown errors, become failed results.
std::vector<CriterionResult> run_acceptance(std::string_view selector = {});

}  // namespace geoimp
