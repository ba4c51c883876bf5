#pragma once

#include <string>
#include <utility>
#include <vector>

#include "geoimp/lattice.hpp"

namespace geoimp {

struct NamedLattice {
  std::string name;
  LatticePtr lattice;
};

LatticePtr boolean_square();
/// The distributive lattice of subsets of a set of the given size.
LatticePtr boolean_lattice(std::size_t atoms);

/// One distributive lattice per isomorphism class up to the given size
/// (at most 5): chains, the Boolean square and the two five-element lattices
/// obtained by adding a new bottom or top to it.
std::vector<NamedLattice> fixture_lattices(std::size_t max_size);

/// Every monotone map between the two lattices, in lexicographic table order.
std::vector<MonotoneMap> all_monotone_maps(const LatticePtr& source, const LatticePtr& target);

/// Every partial order on n labelled points (n ≤ 4) as a ≤-matrix.
std::vector<std::vector<std::vector<bool>>> all_partial_orders(std::size_t n);

/// Every relation R with x ≤ y ∧ yRz ⇒ xRz, as pair lists.
std::vector<std::vector<std::pair<int, int>>> compatible_relations(const std::vector<std::vector<bool>>& leq);

}  // namespace geoimp
