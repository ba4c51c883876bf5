#include "geoimp/lattice.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "geoimp/diagnostic.hpp"

namespace geoimp {

namespace {

std::string triple(const std::vector<std::string>& names, int a, int b, int c) {
  return names[static_cast<std::size_t>(a)] + ", " + names[static_cast<std::size_t>(b)] + ", " +
         names[static_cast<std::size_t>(c)];
}

std::string pair(const std::vector<std::string>& names, int a, int b) {
  return names[static_cast<std::size_t>(a)] + ", " + names[static_cast<std::size_t>(b)];
}

}  // namespace

FinLattice FinLattice::validate(std::vector<std::string> names, const std::vector<std::vector<bool>>& leq) {
  const std::size_t n = names.size();
  if (n > kMaxCarrier) {
    throw ModelError(ErrorKind::TooLarge, "lattices are limited to " + std::to_string(kMaxCarrier) + " elements");
  }
  {
    std::set<std::string> seen;
    for (const auto& name : names) {
      if (!seen.insert(name).second) throw ModelError(ErrorKind::NotAPoset, "duplicate element name", name);
    }
  }
  if (leq.size() != n) throw ModelError(ErrorKind::NotAPoset, "order matrix is not square over the element list");
  for (const auto& row : leq) {
    if (row.size() != n) throw ModelError(ErrorKind::NotAPoset, "order matrix is not square over the element list");
  }

  const int size = static_cast<int>(n);
  auto le = [&](int a, int b) { return leq[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; };
  for (int a = 0; a < size; ++a) {
    if (!le(a, a)) throw ModelError(ErrorKind::NotAPoset, "order is not reflexive", names[static_cast<std::size_t>(a)]);
  }
  for (int a = 0; a < size; ++a) {
    for (int b = a + 1; b < size; ++b) {
      if (le(a, b) && le(b, a)) throw ModelError(ErrorKind::NotAPoset, "order is not antisymmetric", pair(names, a, b));
    }
  }
  for (int a = 0; a < size; ++a) {
    for (int b = 0; b < size; ++b) {
      if (!le(a, b)) continue;
      for (int c = 0; c < size; ++c) {
        if (le(b, c) && !le(a, c)) {
          throw ModelError(ErrorKind::NotAPoset, "order is not transitive", triple(names, a, b, c));
        }
      }
    }
  }

  FinLattice lattice;
  lattice.names_ = std::move(names);
  const auto& nm = lattice.names_;
  lattice.leq_.resize(n * n);
  lattice.up_.assign(n, 0);
  lattice.down_.assign(n, 0);
  for (int a = 0; a < size; ++a) {
    for (int b = 0; b < size; ++b) {
      const bool v = le(a, b);
      lattice.leq_[lattice.index(a, b)] = v ? 1 : 0;
      if (v) {
        lattice.up_[static_cast<std::size_t>(a)] |= bit(b);
        lattice.down_[static_cast<std::size_t>(b)] |= bit(a);
      }
    }
  }

  // Greatest element of a set of candidates, if any.
  auto greatest = [&](Subset s) -> std::optional<Elem> {
    for (int x : members(s)) {
      if (is_subset(s, lattice.down_[static_cast<std::size_t>(x)])) return x;
    }
    return std::nullopt;
  };
  auto least = [&](Subset s) -> std::optional<Elem> {
    for (int x : members(s)) {
      if (is_subset(s, lattice.up_[static_cast<std::size_t>(x)])) return x;
    }
    return std::nullopt;
  };

  const Subset all = full_set(n);
  const auto bottom = least(all);
  if (!bottom) throw ModelError(ErrorKind::MissingBound, "no bottom element (empty join)");
  const auto top = greatest(all);
  if (!top) throw ModelError(ErrorKind::MissingBound, "no top element (empty meet)");
  lattice.bottom_ = *bottom;
  lattice.top_ = *top;

  lattice.meet_.resize(n * n);
  lattice.join_.resize(n * n);
  for (int a = 0; a < size; ++a) {
    for (int b = 0; b < size; ++b) {
      const auto m = greatest(lattice.down_[static_cast<std::size_t>(a)] & lattice.down_[static_cast<std::size_t>(b)]);
      if (!m) throw ModelError(ErrorKind::MissingBound, "pair has no meet", pair(nm, a, b));
      const auto j = least(lattice.up_[static_cast<std::size_t>(a)] & lattice.up_[static_cast<std::size_t>(b)]);
      if (!j) throw ModelError(ErrorKind::MissingBound, "pair has no join", pair(nm, a, b));
      lattice.meet_[lattice.index(a, b)] = *m;
      lattice.join_[lattice.index(a, b)] = *j;
    }
  }

  for (int a = 0; a < size; ++a) {
    for (int b = 0; b < size; ++b) {
      for (int c = 0; c < size; ++c) {
        if (lattice.meet(a, lattice.join(b, c)) != lattice.join(lattice.meet(a, b), lattice.meet(a, c))) {
          throw ModelError(ErrorKind::NotDistributive, "a∧(b∨c) ≠ (a∧b)∨(a∧c)", triple(nm, a, b, c));
        }
      }
    }
  }

  lattice.heyting_.resize(n * n);
  for (int b = 0; b < size; ++b) {
    for (int c = 0; c < size; ++c) {
      Subset below = 0;
      for (int a = 0; a < size; ++a) {
        if (lattice.leq(lattice.meet(a, b), c)) below |= bit(a);
      }
      lattice.heyting_[lattice.index(b, c)] = lattice.join_of(below);
    }
  }

  Subset placed = 0;
  while (lattice.linear_.size() < n) {
    for (int a = 0; a < size; ++a) {
      if (contains(placed, a)) continue;
      if (is_subset(lattice.down_[static_cast<std::size_t>(a)] & ~bit(a), placed)) {
        lattice.linear_.push_back(a);
        placed |= bit(a);
        break;
      }
    }
  }
  return lattice;
}

Elem FinLattice::meet_of(Subset s) const {
  Elem acc = top_;
  for (int x : members(s)) acc = meet(acc, x);
  return acc;
}

Elem FinLattice::join_of(Subset s) const {
  Elem acc = bottom_;
  for (int x : members(s)) acc = join(acc, x);
  return acc;
}

bool FinLattice::is_upset(Subset s) const {
  for (int x : members(s)) {
    if (!is_subset(up(x), s)) return false;
  }
  return true;
}

bool FinLattice::is_filter(Subset s) const {
  if (!contains(s, top_) || !is_upset(s)) return false;
  for (int a : members(s)) {
    for (int b : members(s)) {
      if (!contains(s, meet(a, b))) return false;
    }
  }
  return true;
}

bool FinLattice::is_ideal(Subset s) const {
  if (!contains(s, bottom_)) return false;
  for (int x : members(s)) {
    if (!is_subset(down(x), s)) return false;
  }
  for (int a : members(s)) {
    for (int b : members(s)) {
      if (!contains(s, join(a, b))) return false;
    }
  }
  return true;
}

bool FinLattice::is_prime_filter(Subset s) const {
  if (!is_filter(s) || contains(s, bottom_)) return false;
  const int n = static_cast<int>(size());
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (contains(s, join(a, b)) && !contains(s, a) && !contains(s, b)) return false;
    }
  }
  return true;
}

std::optional<Elem> FinLattice::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return static_cast<Elem>(i);
  }
  return std::nullopt;
}

Elem FinLattice::at(std::string_view name) const {
  if (auto e = find(name)) return *e;
  throw ModelError(ErrorKind::UnknownName, "no such lattice element", std::string(name));
}

LatticePtr make_lattice(std::vector<std::string> names, const std::vector<std::vector<bool>>& leq) {
  return std::make_shared<const FinLattice>(FinLattice::validate(std::move(names), leq));
}

LatticePtr lattice_of_sets(std::vector<std::string> names, std::span<const Subset> sets) {
  std::vector<std::vector<bool>> leq(sets.size(), std::vector<bool>(sets.size()));
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = 0; j < sets.size(); ++j) leq[i][j] = is_subset(sets[i], sets[j]);
  }
  return make_lattice(std::move(names), leq);
}

LatticePtr chain(std::vector<std::string> names) {
  const std::size_t n = names.size();
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) leq[i][j] = true;
  }
  return make_lattice(std::move(names), leq);
}

// ---------------------------------------------------------------------------

MonotoneMap MonotoneMap::make(LatticePtr source, LatticePtr target, std::vector<Elem> table) {
  if (table.size() != source->size()) {
    throw ModelError(ErrorKind::NotMonotone, "map table does not cover the source lattice");
  }
  const int n = static_cast<int>(source->size());
  for (Elem v : table) {
    if (v < 0 || static_cast<std::size_t>(v) >= target->size()) {
      throw ModelError(ErrorKind::NotMonotone, "map value outside the target lattice");
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (source->leq(a, b) && !target->leq(table[static_cast<std::size_t>(a)], table[static_cast<std::size_t>(b)])) {
        throw ModelError(ErrorKind::NotMonotone, "a ≤ b but h(a) ≰ h(b)", source->name(a) + ", " + source->name(b));
      }
    }
  }
  return MonotoneMap(std::move(source), std::move(target), std::move(table));
}

MonotoneMap MonotoneMap::identity(LatticePtr lattice) {
  std::vector<Elem> table(lattice->size());
  for (std::size_t i = 0; i < table.size(); ++i) table[i] = static_cast<Elem>(i);
  return MonotoneMap(lattice, lattice, std::move(table));
}

MonotoneMap MonotoneMap::from_names(LatticePtr source, LatticePtr target,
                                    const std::vector<std::pair<std::string, std::string>>& assignments) {
  std::vector<Elem> table(source->size(), -1);
  for (const auto& [from, to] : assignments) table[static_cast<std::size_t>(source->at(from))] = target->at(to);
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i] < 0) throw ModelError(ErrorKind::NotMonotone, "map is not total", source->name(static_cast<Elem>(i)));
  }
  return make(std::move(source), std::move(target), std::move(table));
}

std::optional<Subset> MonotoneMap::join_obstruction() const {
  if (!preserves_bottom()) return Subset{0};
  const int n = static_cast<int>(source_->size());
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if ((*this)(source_->join(a, b)) != target_->join((*this)(a), (*this)(b))) return bit(a) | bit(b);
    }
  }
  return std::nullopt;
}

std::optional<Subset> MonotoneMap::meet_obstruction() const {
  if (!preserves_top()) return Subset{0};
  const int n = static_cast<int>(source_->size());
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if ((*this)(source_->meet(a, b)) != target_->meet((*this)(a), (*this)(b))) return bit(a) | bit(b);
    }
  }
  return std::nullopt;
}

bool MonotoneMap::preserves_binary_meets() const {
  const int n = static_cast<int>(source_->size());
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if ((*this)(source_->meet(a, b)) != target_->meet((*this)(a), (*this)(b))) return false;
    }
  }
  return true;
}

bool MonotoneMap::preserves_binary_joins() const {
  const int n = static_cast<int>(source_->size());
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if ((*this)(source_->join(a, b)) != target_->join((*this)(a), (*this)(b))) return false;
    }
  }
  return true;
}

bool MonotoneMap::is_surjective() const {
  Subset hit = 0;
  for (Elem v : table_) hit |= bit(v);
  return hit == target_->all();
}

MonotoneMap MonotoneMap::then(const MonotoneMap& next) const {
  std::vector<Elem> table(table_.size());
  for (std::size_t i = 0; i < table.size(); ++i) table[i] = next(table_[i]);
  return MonotoneMap(source_, next.target_, std::move(table));
}

Adjoints adjoints(const MonotoneMap& h) {
  const FinLattice& src = h.source();
  const FinLattice& tgt = h.target();
  const int ns = static_cast<int>(src.size());
  const int nt = static_cast<int>(tgt.size());
  Adjoints out;

  out.right_obstruction = h.join_obstruction();
  if (!out.right_obstruction) {
    std::vector<Elem> table(static_cast<std::size_t>(nt));
    for (int b = 0; b < nt; ++b) {
      Subset below = 0;
      for (int c = 0; c < ns; ++c) {
        if (tgt.leq(h(c), b)) below |= bit(c);
      }
      table[static_cast<std::size_t>(b)] = src.join_of(below);
    }
    auto right = MonotoneMap::make(h.target_ptr(), h.source_ptr(), std::move(table));
    for (int c = 0; c < ns; ++c) {
      for (int b = 0; b < nt; ++b) {
        if (tgt.leq(h(c), b) != src.leq(c, right(b))) throw InvariantError("right adjoint fails h(c) ≤ b ⇔ c ≤ Δ(b)");
      }
    }
    out.right = std::move(right);
  }

  out.left_obstruction = h.meet_obstruction();
  if (!out.left_obstruction) {
    std::vector<Elem> table(static_cast<std::size_t>(nt));
    for (int b = 0; b < nt; ++b) {
      Subset above = 0;
      for (int c = 0; c < ns; ++c) {
        if (tgt.leq(b, h(c))) above |= bit(c);
      }
      table[static_cast<std::size_t>(b)] = src.meet_of(above);
    }
    auto left = MonotoneMap::make(h.target_ptr(), h.source_ptr(), std::move(table));
    for (int c = 0; c < ns; ++c) {
      for (int b = 0; b < nt; ++b) {
        if (tgt.leq(b, h(c)) != src.leq(left(b), c)) throw InvariantError("left adjoint fails b ≤ h(c) ⇔ L(b) ≤ c");
      }
    }
    out.left = std::move(left);
  }
  return out;
}

// ---------------------------------------------------------------------------

BooleanDiagnosis boolean_structure(const FinLattice& lattice) {
  const int n = static_cast<int>(lattice.size());
  std::vector<Elem> complement(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) {
    std::optional<Elem> found;
    for (int b = 0; b < n && !found; ++b) {
      if (lattice.join(a, b) == lattice.top() && lattice.meet(a, b) == lattice.bottom()) found = b;
    }
    if (!found) return BooleanDiagnosis{std::nullopt, a};
    complement[static_cast<std::size_t>(a)] = *found;
  }
  return BooleanDiagnosis{std::move(complement), std::nullopt};
}

std::optional<Elem> interval_complement(const FinLattice& lattice, Elem m, Elem a) {
  const Elem am = lattice.join(a, m);
  for (int x : members(lattice.up(m))) {
    if (lattice.join(x, am) == lattice.top() && lattice.meet(x, am) == m) return x;
  }
  return std::nullopt;
}

std::optional<Elem> interval_boolean_obstruction(const FinLattice& lattice, Elem m) {
  for (int x : members(lattice.up(m))) {
    if (!interval_complement(lattice, m, x)) return x;
  }
  return std::nullopt;
}

namespace {

// In a finite distributive lattice every prime filter is ↑j for a join-irreducible j.
std::vector<Subset> prime_filter_list(const FinLattice& l) {
  const int n = static_cast<int>(l.size());
  std::vector<Subset> out;
  for (int j = 0; j < n; ++j) {
    if (j == l.bottom()) continue;
    bool irreducible = true;
    for (int a = 0; a < n && irreducible; ++a) {
      for (int b = 0; b < n; ++b) {
        if (l.join(a, b) == j && a != j && b != j) {
          irreducible = false;
          break;
        }
      }
    }
    if (!irreducible) continue;
    const Subset filter = l.up(j);
    if (!l.is_prime_filter(filter)) throw InvariantError("principal filter of a join-irreducible is not prime");
    out.push_back(filter);
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

}  // namespace

PrimeFilterSet prime_filters(const LatticePtr& lattice) {
  return PrimeFilterSet{lattice, prime_filter_list(*lattice)};
}

std::optional<Subset> separate(const FinLattice& lattice, Subset filter, Subset ideal) {
  if (!lattice.is_filter(filter)) throw ModelError(ErrorKind::NotAFilter, "first argument is not a filter", lattice.format(filter));
  if (!lattice.is_ideal(ideal)) throw ModelError(ErrorKind::NotAnIdeal, "second argument is not an ideal", lattice.format(ideal));
  if ((filter & ideal) != 0) return std::nullopt;
  for (Subset p : prime_filter_list(lattice)) {
    if (is_subset(filter, p) && (p & ideal) == 0) return p;
  }
  throw InvariantError("disjoint filter and ideal admit no separating prime filter");
}

}  // namespace geoimp
