#include "geoimp/implication.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "geoimp/diagnostic.hpp"
#include "geoimp/guard.hpp"

namespace geoimp {

namespace {

std::size_t cell(std::size_t n, Elem a, Elem b) { return static_cast<std::size_t>(a) * n + static_cast<std::size_t>(b); }

std::optional<AxiomViolation> transitivity_violation(const FinLattice& l, std::span<const Elem> t) {
  const std::size_t n = l.size();
  const int size = static_cast<int>(n);
  for (int a = 0; a < size; ++a) {
    for (int b = 0; b < size; ++b) {
      const Elem ab = t[cell(n, a, b)];
      if (ab == kUnassigned) continue;
      for (int c = 0; c < size; ++c) {
        const Elem bc = t[cell(n, b, c)];
        const Elem ac = t[cell(n, a, c)];
        if (bc == kUnassigned || ac == kUnassigned) continue;
        if (!l.leq(l.meet(ab, bc), ac)) return AxiomViolation{"internal transitivity", {a, b, c}};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<AxiomViolation> definition_violation(const FinLattice& l, std::span<const Elem> t) {
  const std::size_t n = l.size();
  const int size = static_cast<int>(n);
  for (int a = 0; a < size; ++a) {
    const Elem aa = t[cell(n, a, a)];
    if (aa != kUnassigned && aa != l.top()) return AxiomViolation{"internal reflexivity", {a}};
  }
  for (int a = 0; a < size; ++a) {
    for (int a2 = 0; a2 < size; ++a2) {
      if (a == a2 || !l.leq(a, a2)) continue;
      for (int b = 0; b < size; ++b) {
        const Elem lo = t[cell(n, a2, b)];
        const Elem hi = t[cell(n, a, b)];
        if (lo != kUnassigned && hi != kUnassigned && !l.leq(lo, hi)) {
          return AxiomViolation{"antitone in the first argument", {a, a2, b}};
        }
      }
    }
  }
  for (int a = 0; a < size; ++a) {
    for (int b = 0; b < size; ++b) {
      for (int b2 = 0; b2 < size; ++b2) {
        if (b == b2 || !l.leq(b, b2)) continue;
        const Elem lo = t[cell(n, a, b)];
        const Elem hi = t[cell(n, a, b2)];
        if (lo != kUnassigned && hi != kUnassigned && !l.leq(lo, hi)) {
          return AxiomViolation{"monotone in the second argument", {a, b, b2}};
        }
      }
    }
  }
  return transitivity_violation(l, t);
}

std::optional<AxiomViolation> alternative_violation(const FinLattice& l, std::span<const Elem> t) {
  const std::size_t n = l.size();
  const int size = static_cast<int>(n);
  for (int a = 0; a < size; ++a) {
    for (int b = 0; b < size; ++b) {
      const Elem ab = t[cell(n, a, b)];
      if (ab != kUnassigned && l.leq(a, b) && ab != l.top()) return AxiomViolation{"a ≤ b forces a → b = 1", {a, b}};
    }
  }
  return transitivity_violation(l, t);
}

std::string describe(const FinLattice& lattice, const AxiomViolation& violation) {
  std::string out = violation.law + " fails at (";
  for (std::size_t i = 0; i < violation.witness.size(); ++i) {
    if (i) out += ", ";
    out += lattice.name(violation.witness[i]);
  }
  return out + ")";
}

Implication Implication::validate(LatticePtr lattice, OpTable table) {
  const std::size_t n = lattice->size();
  if (table.size() != n * n) throw ModelError(ErrorKind::NotAnImplication, "table is not total over L×L");
  for (Elem v : table) {
    if (v < 0 || static_cast<std::size_t>(v) >= n) {
      throw ModelError(ErrorKind::NotAnImplication, "table entry outside the lattice");
    }
  }
  const auto first = definition_violation(*lattice, table);
  const auto second = alternative_violation(*lattice, table);
  if (first.has_value() != second.has_value()) {
    const auto& v = first ? *first : *second;
    throw InvariantError("the two implication axiomatizations disagree: " + describe(*lattice, v));
  }
  if (first) {
    std::string witness;
    for (Elem e : first->witness) witness += (witness.empty() ? "" : ", ") + lattice->name(e);
    throw ModelError(ErrorKind::NotAnImplication, first->law + " fails", witness);
  }
  return Implication(std::move(lattice), std::move(table));
}

// ---------------------------------------------------------------------------

ImplicationClass classify(const Implication& imp) {
  const FinLattice& l = imp.lattice();
  const int n = static_cast<int>(l.size());
  ImplicationClass out;

  for (int a = 0; a < n && !out.not_open_witness; ++a) {
    for (int b = 0; b < n; ++b) {
      if (!l.leq(a, imp(b, l.meet(a, b)))) {
        out.not_open_witness = std::make_pair(a, b);
        break;
      }
    }
  }
  for (int a = 0; a < n && !out.not_closed_witness; ++a) {
    for (int b = 0; b < n; ++b) {
      if (l.join(imp(l.join(a, b), a), b) != l.top()) {
        out.not_closed_witness = std::make_pair(a, b);
        break;
      }
    }
  }
  out.open = !out.not_open_witness;
  out.closed = !out.not_closed_witness;

  bool open_def = true;
  bool closed_def = true;
  out.meet_internalizing = true;
  out.join_internalizing = true;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        if (l.leq(l.meet(a, b), c) && !l.leq(a, imp(b, c))) open_def = false;
        if (l.leq(a, l.join(b, c)) && l.join(imp(a, b), c) != l.top()) closed_def = false;
        if (imp(a, l.meet(b, c)) != l.meet(imp(a, b), imp(a, c))) out.meet_internalizing = false;
        if (imp(l.join(a, b), c) != l.meet(imp(a, c), imp(b, c))) out.join_internalizing = false;
      }
    }
  }
  if (open_def != out.open) throw InvariantError("open criterion disagrees with the quantified definition");
  if (closed_def != out.closed) throw InvariantError("closed criterion disagrees with the quantified definition");

  out.weakly_boolean = out.open && out.closed;
  if (out.weakly_boolean) out.core = imp.neg(l.top());
  return out;
}

Implication trivial_implication(const LatticePtr& lattice) {
  const std::size_t n = lattice->size();
  return Implication::unchecked(lattice, OpTable(n * n, lattice->top()));
}

Implication heyting_implication(const LatticePtr& lattice) {
  const std::size_t n = lattice->size();
  OpTable table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = lattice->heyting(static_cast<Elem>(a), static_cast<Elem>(b));
  }
  return Implication::validate(lattice, std::move(table));
}

Implication wbi_from_core(const LatticePtr& lattice, Elem m) {
  const FinLattice& l = *lattice;
  if (auto bad = interval_boolean_obstruction(l, m)) {
    throw ModelError(ErrorKind::IntervalNotBoolean,
                     "[" + l.name(m) + ", " + l.name(l.top()) + "] is not Boolean", l.name(*bad));
  }
  const std::size_t n = l.size();
  OpTable table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    const Elem na = *interval_complement(l, m, static_cast<Elem>(a));
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = l.join(na, static_cast<Elem>(b));
  }
  auto imp = Implication::validate(lattice, std::move(table));
  const auto cls = classify(imp);
  if (!cls.weakly_boolean || cls.core != m) throw InvariantError("implication built from a core is not a WBI with that core");
  return imp;
}

Elem wbi_decompose(const Implication& imp) {
  const auto cls = classify(imp);
  if (!cls.weakly_boolean) throw ModelError(ErrorKind::NotWbi, "implication is not both open and closed");
  const FinLattice& l = imp.lattice();
  const Elem m = *cls.core;
  if (interval_boolean_obstruction(l, m)) throw InvariantError("[¬1, 1] is not Boolean for a WBI");
  const int n = static_cast<int>(l.size());
  for (int a = 0; a < n; ++a) {
    if (interval_complement(l, m, a) != imp.neg(a)) throw InvariantError("¬a is not the complement of a ∨ ¬1 in [¬1, 1]");
    for (int b = 0; b < n; ++b) {
      if (imp(a, b) != l.join(imp.neg(a), b)) throw InvariantError("a WBI fails a → b = ¬a ∨ b");
    }
  }
  if (wbi_from_core(imp.lattice_ptr(), m).table() != imp.table()) throw InvariantError("WBI does not round-trip through its core");
  return m;
}

// ---------------------------------------------------------------------------

bool is_strong_map(const MonotoneMap& f, const Implication& on_source, const Implication& on_target) {
  const int n = static_cast<int>(f.source().size());
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (f(on_source(a, b)) != on_target(f(a), f(b))) return false;
    }
  }
  return true;
}

namespace {

void require_same(const FinLattice& expected, const FinLattice& actual, const char* what) {
  if (!(expected == actual)) throw ModelError(ErrorKind::TableMismatch, std::string(what) + " is over a different lattice");
}

Implication validated_construction(const LatticePtr& lattice, OpTable table, const char* what) {
  if (auto v = definition_violation(*lattice, table)) {
    throw InvariantError(std::string(what) + " did not produce an implication: " + describe(*lattice, *v));
  }
  return Implication::validate(lattice, std::move(table));
}

}  // namespace

TransportResult transport(const MonotoneMap& f, const MonotoneMap& g, const Implication& on_target) {
  const FinLattice& a_lat = f.source();
  const FinLattice& b_lat = f.target();
  require_same(b_lat, on_target.lattice(), "target implication");
  require_same(b_lat, g.source(), "g");
  require_same(a_lat, g.target(), "g's codomain");
  if (auto obstruction = g.meet_obstruction()) {
    throw ModelError(ErrorKind::NotMeetPreserving, "g does not preserve finite meets", b_lat.format(*obstruction));
  }

  const std::size_t n = a_lat.size();
  OpTable table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = g(on_target(f(static_cast<Elem>(a)), f(static_cast<Elem>(b))));
  }
  TransportResult out{validated_construction(f.source_ptr(), std::move(table), "transport"), false, false};

  const auto target_class = classify(on_target);
  const int na = static_cast<int>(n);
  const int nb = static_cast<int>(b_lat.size());
  bool unit_inflationary = true;
  for (int a = 0; a < na; ++a) unit_inflationary = unit_inflationary && a_lat.leq(a, g(f(a)));
  bool reflects_cover = true;
  for (int a = 0; a < na && reflects_cover; ++a) {
    for (int c = 0; c < nb; ++c) {
      if (b_lat.join(c, f(a)) == b_lat.top() && a_lat.join(g(c), a) != a_lat.top()) {
        reflects_cover = false;
        break;
      }
    }
  }
  out.open_transferred = target_class.open && f.preserves_binary_meets() && unit_inflationary;
  out.closed_transferred = target_class.closed && f.preserves_binary_joins() && reflects_cover;
  const auto result_class = classify(out.implication);
  if (out.open_transferred && !result_class.open) throw InvariantError("transport hypotheses hold but the result is not open");
  if (out.closed_transferred && !result_class.closed) throw InvariantError("transport hypotheses hold but the result is not closed");
  return out;
}

Implication lift_left_inverse(const MonotoneMap& f, const MonotoneMap& g, const Implication& on_source) {
  require_same(f.source(), on_source.lattice(), "source implication");
  require_same(f.target(), g.source(), "g");
  require_same(f.source(), g.target(), "g's codomain");
  if (!f.is_lattice_map()) throw ModelError(ErrorKind::NotLatticeMap, "f is not a bounded lattice map");
  const int na = static_cast<int>(f.source().size());
  for (int a = 0; a < na; ++a) {
    if (g(f(a)) != a) throw ModelError(ErrorKind::NotLeftInverse, "g ∘ f is not the identity", f.source().name(a));
  }
  const std::size_t n = f.target().size();
  OpTable table(n * n);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t d = 0; d < n; ++d) table[c * n + d] = f(on_source(g(static_cast<Elem>(c)), g(static_cast<Elem>(d))));
  }
  auto lifted = validated_construction(f.target_ptr(), std::move(table), "lifting along a left inverse");
  if (!is_strong_map(f, on_source, lifted)) throw InvariantError("lifted implication does not make f strong");
  return lifted;
}

Implication lift_wbi(const MonotoneMap& f, const Implication& on_source) {
  require_same(f.source(), on_source.lattice(), "source implication");
  if (!f.is_lattice_map()) throw ModelError(ErrorKind::NotLatticeMap, "f is not a bounded lattice map");
  const auto cls = classify(on_source);
  if (!cls.weakly_boolean) throw ModelError(ErrorKind::NotWbi, "source implication is not weakly Boolean");
  if (!f.is_surjective() && !boolean_structure(f.target()).complement) {
    throw ModelError(ErrorKind::NotSurjective, "f is not surjective and the target is not Boolean");
  }
  const Elem n = f(*cls.core);
  auto lifted = wbi_from_core(f.target_ptr(), n);
  if (!is_strong_map(f, on_source, lifted)) throw InvariantError("lifted WBI does not make f strong");

  std::size_t strong = 0;
  EnumerateOptions wbis;
  wbis.filter = ClassFilter::weakly_boolean();
  for (const auto& candidate : enumerate_implications(f.target_ptr(), wbis)) {
    if (is_strong_map(f, on_source, candidate)) {
      ++strong;
      if (candidate.table() != lifted.table()) throw InvariantError("a second WBI makes f strong");
    }
  }
  if (strong != 1) throw InvariantError("lifted WBI missing from the enumeration");
  return lifted;
}

// ---------------------------------------------------------------------------

namespace {

class Enumerator {
 public:
  using Visitor = std::function<bool(const Implication&)>;

  Enumerator(const LatticePtr& lattice, const EnumerateOptions& options, Visitor visit)
      : lattice_(lattice), l_(*lattice), n_(lattice->size()), options_(options), visit_(std::move(visit)) {
    const auto& order = l_.linear_extension();
    for (auto a = order.rbegin(); a != order.rend(); ++a) {
      for (Elem b : order) cells_.push_back({*a, b});
    }
    table_.assign(n_ * n_, kUnassigned);
    domains_.resize(cells_.size());
    for (std::size_t k = 0; k < cells_.size(); ++k) domains_[k] = domain(cells_[k].first, cells_[k].second);
  }

  std::size_t run() {
    search(0);
    return count_;
  }

 private:
  std::vector<Elem> domain(Elem a, Elem b) const {
    std::vector<Elem> out;
    const bool has_fixed = !options_.fixed.empty() && options_.fixed[cell(n_, a, b)] != kUnassigned;
    for (Elem v : l_.linear_extension()) {
      if (has_fixed && v != options_.fixed[cell(n_, a, b)]) continue;
      if (l_.leq(a, b) && v != l_.top()) continue;
      // Open iff every entry lies above the Heyting implication.
      if (options_.filter.require_open && !l_.leq(l_.heyting(a, b), v)) continue;
      if (options_.filter.require_closed && l_.leq(b, a) && !closed_compatible(a, b, v)) continue;
      out.push_back(v);
    }
    return out;
  }

  // Closed criterion restricted to the cell (x, y) with y ≤ x: every c with
  // y ∨ c = x must satisfy (x → y) ∨ c = 1.
  bool closed_compatible(Elem x, Elem y, Elem v) const {
    for (int c = 0; c < static_cast<int>(n_); ++c) {
      if (l_.join(y, c) == x && l_.join(v, c) != l_.top()) return false;
    }
    return true;
  }

  Elem at(Elem a, Elem b) const { return table_[cell(n_, a, b)]; }

  bool consistent(Elem a, Elem b, Elem v) const {
    const int n = static_cast<int>(n_);
    for (int a2 = 0; a2 < n; ++a2) {
      const bool above = l_.leq(a2, a);
      const bool below = l_.leq(a, a2);
      if (!above && !below) continue;
      for (int b2 = 0; b2 < n; ++b2) {
        const Elem w = at(a2, b2);
        if (w == kUnassigned) continue;
        if (above && l_.leq(b, b2) && !l_.leq(v, w)) return false;
        if (below && l_.leq(b2, b) && !l_.leq(w, v)) return false;
      }
    }
    for (int x = 0; x < n; ++x) {
      // (a→b) ∧ (b→x) ≤ a→x
      const Elem bx = at(b, x);
      const Elem ax = at(a, x);
      if (bx != kUnassigned && ax != kUnassigned && !l_.leq(l_.meet(v, bx), ax)) return false;
      // (x→a) ∧ (a→b) ≤ x→b
      const Elem xa = at(x, a);
      const Elem xb = at(x, b);
      if (xa != kUnassigned && xb != kUnassigned && !l_.leq(l_.meet(xa, v), xb)) return false;
      // (a→x) ∧ (x→b) ≤ a→b
      const Elem xb2 = at(x, b);
      if (ax != kUnassigned && xb2 != kUnassigned && !l_.leq(l_.meet(ax, xb2), v)) return false;
    }
    return true;
  }

  bool done() const { return stopped_ || (options_.limit != 0 && count_ >= options_.limit); }

  void search(std::size_t k) {
    if (done()) return;
    if (k == cells_.size()) {
      ++count_;
      if (!visit_(Implication::unchecked(lattice_, table_))) stopped_ = true;
      return;
    }
    const auto [a, b] = cells_[k];
    for (Elem v : domains_[k]) {
      if (!consistent(a, b, v)) continue;
      table_[cell(n_, a, b)] = v;
      if (options_.extra && !options_.extra(table_, a, b)) {
        table_[cell(n_, a, b)] = kUnassigned;
        continue;
      }
      search(k + 1);
      table_[cell(n_, a, b)] = kUnassigned;
      if (done()) return;
    }
  }

  LatticePtr lattice_;
  const FinLattice& l_;
  std::size_t n_;
  const EnumerateOptions& options_;
  std::vector<std::pair<Elem, Elem>> cells_;
  std::vector<std::vector<Elem>> domains_;
  Visitor visit_;
  OpTable table_;
  std::size_t count_ = 0;
  bool stopped_ = false;
};

void check_options(const LatticePtr& lattice, const EnumerateOptions& options) {
  require_within(lattice->size(), size_guard(), "lattice");
  if (!options.fixed.empty() && options.fixed.size() != lattice->size() * lattice->size()) {
    throw ModelError(ErrorKind::NotAnImplication, "fixed-cell table is not sized L×L");
  }
}

}  // namespace

std::vector<Implication> enumerate_implications(const LatticePtr& lattice, const EnumerateOptions& options) {
  check_options(lattice, options);
  std::vector<Implication> results;
  Enumerator(lattice, options, [&](const Implication& imp) {
    results.push_back(imp);
    return true;
  }).run();
  if (options.filter.require_open || options.filter.require_closed) {
    for (const auto& imp : results) {
      const auto cls = classify(imp);
      if ((options.filter.require_open && !cls.open) || (options.filter.require_closed && !cls.closed)) {
        throw InvariantError("enumeration pruning admitted an implication outside the filter");
      }
    }
  }
  return results;
}

std::size_t for_each_implication(const LatticePtr& lattice, const EnumerateOptions& options,
                                 const std::function<bool(const Implication&)>& visit) {
  check_options(lattice, options);
  return Enumerator(lattice, options, visit).run();
}

std::string format_table(const Implication& imp) {
  const FinLattice& l = imp.lattice();
  const int n = static_cast<int>(l.size());
  std::string out;
  for (int a = 0; a < n; ++a) {
    out += l.name(a) + " ->";
    for (int b = 0; b < n; ++b) out += " " + l.name(imp(a, b));
    out += "\n";
  }
  return out;
}

}  // namespace geoimp
