#pragma once

// Brute-force reference computations that use only the order relation of a
// lattice, never its cached tables.

#include <functional>
#include <optional>
#include <vector>

#include "geoimp/lattice.hpp"
#include "geoimp/implication.hpp"

namespace oracle {

using geoimp::Elem;
using geoimp::FinLattice;
using geoimp::OpTable;
using geoimp::Subset;

inline int size(const FinLattice& l) { return static_cast<int>(l.size()); }

inline std::optional<Elem> greatest(const FinLattice& l, const std::function<bool(Elem)>& pred) {
  for (Elem c = 0; c < size(l); ++c) {
    if (!pred(c)) continue;
    bool top = true;
    for (Elem d = 0; d < size(l); ++d) top = top && (!pred(d) || l.leq(d, c));
    if (top) return c;
  }
  return std::nullopt;
}

inline std::optional<Elem> least(const FinLattice& l, const std::function<bool(Elem)>& pred) {
  for (Elem c = 0; c < size(l); ++c) {
    if (!pred(c)) continue;
    bool bottom = true;
    for (Elem d = 0; d < size(l); ++d) bottom = bottom && (!pred(d) || l.leq(c, d));
    if (bottom) return c;
  }
  return std::nullopt;
}

inline Elem meet(const FinLattice& l, Elem a, Elem b) {
  return *greatest(l, [&](Elem c) { return l.leq(c, a) && l.leq(c, b); });
}

inline Elem join(const FinLattice& l, Elem a, Elem b) {
  return *least(l, [&](Elem c) { return l.leq(a, c) && l.leq(b, c); });
}

inline Elem top(const FinLattice& l) { return *greatest(l, [](Elem) { return true; }); }
inline Elem bottom(const FinLattice& l) { return *least(l, [](Elem) { return true; }); }

inline Elem heyting(const FinLattice& l, Elem a, Elem b) {
  return *greatest(l, [&](Elem c) { return l.leq(meet(l, c, a), b); });
}

inline std::optional<Elem> complement(const FinLattice& l, Elem a) {
  for (Elem c = 0; c < size(l); ++c) {
    if (meet(l, a, c) == bottom(l) && join(l, a, c) == top(l)) return c;
  }
  return std::nullopt;
}

inline Elem at(const FinLattice& l, const OpTable& t, Elem a, Elem b) {
  return t[static_cast<std::size_t>(a * size(l) + b)];
}

// Monotonicity, reflexivity and transitivity.
inline bool first_axioms(const FinLattice& l, const OpTable& t) {
  const int n = size(l);
  for (Elem a = 0; a < n; ++a) {
    if (at(l, t, a, a) != top(l)) return false;
    for (Elem b = 0; b < n; ++b) {
      for (Elem c = 0; c < n; ++c) {
        if (l.leq(a, b) && !l.leq(at(l, t, b, c), at(l, t, a, c))) return false;
        if (l.leq(b, c) && !l.leq(at(l, t, a, b), at(l, t, a, c))) return false;
        if (!l.leq(meet(l, at(l, t, a, b), at(l, t, b, c)), at(l, t, a, c))) return false;
      }
    }
  }
  return true;
}

// a ≤ b forces a → b = 1, plus transitivity.
inline bool second_axioms(const FinLattice& l, const OpTable& t) {
  const int n = size(l);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (l.leq(a, b) && at(l, t, a, b) != top(l)) return false;
      for (Elem c = 0; c < n; ++c) {
        if (!l.leq(meet(l, at(l, t, a, b), at(l, t, b, c)), at(l, t, a, c))) return false;
      }
    }
  }
  return true;
}

// a ∧ b ≤ c implies a ≤ b → c.
inline bool open_by_definition(const FinLattice& l, const OpTable& t) {
  const int n = size(l);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      for (Elem c = 0; c < n; ++c) {
        if (l.leq(meet(l, a, b), c) && !l.leq(a, at(l, t, b, c))) return false;
      }
    }
  }
  return true;
}

// a ≤ b ∨ c implies (a → b) ∨ c = 1.
inline bool closed_by_definition(const FinLattice& l, const OpTable& t) {
  const int n = size(l);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      for (Elem c = 0; c < n; ++c) {
        if (l.leq(a, join(l, b, c)) && join(l, at(l, t, a, b), c) != top(l)) return false;
      }
    }
  }
  return true;
}

// Every table on a lattice of at most three elements, filtered by the first axioms.
inline std::vector<OpTable> all_implications(const FinLattice& l) {
  const int n = size(l);
  std::vector<OpTable> out;
  OpTable t(static_cast<std::size_t>(n * n), 0);
  std::size_t total = 1;
  for (int k = 0; k < n * n; ++k) total *= static_cast<std::size_t>(n);
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t rest = code;
    for (auto& cell : t) {
      cell = static_cast<Elem>(rest % static_cast<std::size_t>(n));
      rest /= static_cast<std::size_t>(n);
    }
    if (first_axioms(l, t)) out.push_back(t);
  }
  return out;
}

inline bool prime_filter(const FinLattice& l, Subset s) {
  if (!geoimp::contains(s, top(l)) || geoimp::contains(s, bottom(l))) return false;
  for (Elem a = 0; a < size(l); ++a) {
    for (Elem b = 0; b < size(l); ++b) {
      const bool ia = geoimp::contains(s, a), ib = geoimp::contains(s, b);
      if (ia && l.leq(a, b) && !ib) return false;
      if (ia && ib && !geoimp::contains(s, meet(l, a, b))) return false;
      if (geoimp::contains(s, join(l, a, b)) && !ia && !ib) return false;
    }
  }
  return true;
}

}  // namespace oracle
