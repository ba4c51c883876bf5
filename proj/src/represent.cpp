#include "geoimp/represent.hpp"

#include <algorithm>

#include "geoimp/diagnostic.hpp"

namespace geoimp {

AdjointData AdjointData::make(MonotoneMap nabla, MonotoneMap f) {
  if (!(nabla.source() == nabla.target()) || !(f.source() == f.target()) || !(nabla.source() == f.source())) {
    throw ModelError(ErrorKind::TableMismatch, "∇ and F must be endomaps of one lattice");
  }
  if (auto bad = nabla.join_obstruction()) {
    throw ModelError(ErrorKind::NotJoinPreserving, "∇ does not preserve joins", nabla.source().format(*bad));
  }
  return AdjointData(std::move(nabla), std::move(f));
}

Implication implication_from_adjoints(const AdjointData& data) {
  const FinLattice& l = data.lattice();
  const auto& nabla = data.nabla();
  const auto& f = data.f();
  const int n = static_cast<int>(l.size());
  OpTable table(static_cast<std::size_t>(n * n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      Subset below = 0;
      for (int c = 0; c < n; ++c) {
        if (l.leq(l.meet(nabla(c), f(a)), f(b))) below |= bit(c);
      }
      table[static_cast<std::size_t>(a * n + b)] = l.join_of(below);
    }
  }
  auto imp = Implication::validate(data.lattice_ptr(), std::move(table));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        if (l.leq(l.meet(nabla(c), f(a)), f(b)) != l.leq(c, imp(a, b))) {
          throw InvariantError("adjoint implication fails its defining equivalence");
        }
      }
    }
  }
  return imp;
}

Implication nabla_implication(const MonotoneMap& nabla) {
  const FinLattice& l = nabla.source();
  const auto adj = adjoints(nabla);
  if (!adj.right) throw ModelError(ErrorKind::NoRightAdjoint, "∇ has no right adjoint", l.format(*adj.right_obstruction));
  const auto& delta = *adj.right;
  const int n = static_cast<int>(l.size());
  OpTable table(static_cast<std::size_t>(n * n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) table[static_cast<std::size_t>(a * n + b)] = delta(l.heyting(a, b));
  }
  auto imp = Implication::validate(nabla.source_ptr(), std::move(table));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        if (l.leq(c, imp(a, b)) != l.leq(l.meet(nabla(c), a), b)) {
          throw InvariantError("→_∇ fails its defining equivalence");
        }
      }
    }
  }
  return imp;
}

std::string_view to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped: return "skipped";
  }
  return "fail";
}

bool RepresentationReport::ok() const { return first_failure() == nullptr; }

const NamedCheck* RepresentationReport::first_failure() const {
  for (const auto& c : checks) {
    if (c.status == CheckStatus::fail) return &c;
  }
  return nullptr;
}

RepresentationReport build_representation(const AdjointData& data, const Implication& s) {
  const FinLattice& l = data.lattice();
  const auto expected = implication_from_adjoints(data);
  if (!(s.lattice() == l) || s.table() != expected.table()) {
    throw ModelError(ErrorKind::TableMismatch, "implication is not the one determined by ∇ and F");
  }
  const auto& nabla = data.nabla();
  const auto& f = data.f();
  const int n = static_cast<int>(l.size());
  const auto filters = prime_filters(data.lattice_ptr()).filters;
  const int m = static_cast<int>(filters.size());

  std::vector<Subset> i(static_cast<std::size_t>(n), 0);
  for (int a = 0; a < n; ++a) {
    for (int p = 0; p < m; ++p) {
      if (contains(filters[static_cast<std::size_t>(p)], a)) i[static_cast<std::size_t>(a)] |= bit(p);
    }
  }
  const auto in = [&](int p, Elem a) { return contains(filters[static_cast<std::size_t>(p)], a); };

  RawFrame raw;
  for (Subset filter : filters) raw.points.push_back(l.format(filter));
  raw.leq.assign(static_cast<std::size_t>(m), std::vector<bool>(static_cast<std::size_t>(m)));
  for (int p = 0; p < m; ++p) {
    Subset image = 0;
    for (int a : members(filters[static_cast<std::size_t>(p)])) image |= bit(nabla(a));
    for (int q = 0; q < m; ++q) {
      raw.leq[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] =
          is_subset(filters[static_cast<std::size_t>(p)], filters[static_cast<std::size_t>(q)]);
      if (is_subset(image, filters[static_cast<std::size_t>(q)])) raw.relation.emplace_back(p, q);
    }
  }
  std::vector<Subset> upsets;
  for (Subset u = 0; u <= full_set(static_cast<std::size_t>(m)); ++u) {
    bool up = true;
    for (int p : members(u)) {
      for (int q = 0; q < m; ++q) up = up && (!raw.leq[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] || contains(u, q));
    }
    if (up) upsets.push_back(u);
  }
  raw.neighbourhoods.emplace(static_cast<std::size_t>(m));
  for (int p = 0; p < m; ++p) {
    for (Subset u : upsets) {
      bool member = false;
      for (int a = 0; a < n && !member; ++a) member = is_subset(i[static_cast<std::size_t>(a)], u) && in(p, f(a));
      if (member) (*raw.neighbourhoods)[static_cast<std::size_t>(p)].push_back(u);
    }
  }

  RepresentationReport report{KNFrame::validate(raw), filters, i, {}};
  const KNFrame& frame = report.frame;
  const auto name = [&](Elem a) { return l.name(a); };
  const auto add = [&](std::string check, std::string witness) {
    report.checks.push_back({std::move(check), witness.empty() ? CheckStatus::pass : CheckStatus::fail, std::move(witness)});
  };

  {
    std::string w;
    const auto at = [&](Elem a) { return i[static_cast<std::size_t>(a)]; };
    if (at(l.bottom()) != 0) w = "i(0) ≠ ∅";
    if (w.empty() && at(l.top()) != frame.all()) w = "i(1) ≠ X";
    for (int a = 0; a < n && w.empty(); ++a) {
      for (int b = 0; b < n && w.empty(); ++b) {
        if (at(l.meet(a, b)) != (at(a) & at(b))) w = "meet at " + name(a) + ", " + name(b);
        else if (at(l.join(a, b)) != (at(a) | at(b))) w = "join at " + name(a) + ", " + name(b);
        else if (a != b && at(a) == at(b)) w = "not injective at " + name(a) + ", " + name(b);
      }
    }
    add("i is a bounded lattice embedding", w);
  }
  {
    std::string w;
    for (int a = 0; a < n && w.empty(); ++a) {
      for (int p = 0; p < m && w.empty(); ++p) {
        if (frame.in_neighbourhood(p, i[static_cast<std::size_t>(a)]) != in(p, f(a))) w = name(a) + " at " + frame.point(p);
      }
    }
    add("i(a) ∈ N(P) iff F(a) ∈ P", w);
  }
  {
    std::string w;
    for (int a = 0; a < n && w.empty(); ++a) {
      if (frame.j(i[static_cast<std::size_t>(a)]) != i[static_cast<std::size_t>(f(a))]) w = name(a);
    }
    add("j(i(a)) = i(F(a))", w);
  }
  const auto nabla_imp = nabla_implication(nabla);
  {
    std::string w;
    for (int a = 0; a < n && w.empty(); ++a) {
      for (int b = 0; b < n && w.empty(); ++b) {
        const Subset lhs = frame.diamond(i[static_cast<std::size_t>(a)] & ~i[static_cast<std::size_t>(b)]);
        const Subset rhs = frame.all() & ~i[static_cast<std::size_t>(nabla_imp(a, b))];
        if (lhs != rhs) w = name(a) + ", " + name(b);
      }
    }
    add("◇_R(i(a) ∩ i(b)ᶜ) = i(a →_∇ b)ᶜ", w);
  }
  const auto algebra = frame_algebra(frame);
  {
    std::string w;
    for (int a = 0; a < n && w.empty(); ++a) {
      for (int b = 0; b < n && w.empty(); ++b) {
        if (i[static_cast<std::size_t>(s(a, b))] != algebra(i[static_cast<std::size_t>(a)], i[static_cast<std::size_t>(b)])) {
          w = name(a) + ", " + name(b);
        }
      }
    }
    add("i(a → b) = i(a) → i(b)", w);
  }
  if (classify(s).open) {
    const auto cls = frame_class(frame);
    std::string w;
    if (cls.not_open) {
      const auto& fw = *cls.not_open;
      w = frame.point(fw.x) + ", " + frame.point(fw.y) + ", " + frame.format(fw.u) + ", " + frame.format(fw.v);
    }
    add("open algebra gives an open frame", w);
  } else {
    report.checks.push_back({"open algebra gives an open frame", CheckStatus::skipped, {}});
  }
  return report;
}

}  // namespace geoimp
