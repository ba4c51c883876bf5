#include "geoimp/knframe.hpp"

#include <algorithm>
#include <set>

#include "geoimp/diagnostic.hpp"
#include "geoimp/guard.hpp"

namespace geoimp {

namespace {

constexpr std::size_t kMaxFramePoints = 12;

[[noreturn]] void invalid(const std::string& message, const std::string& witness = {}) {
  throw ModelError(ErrorKind::InvalidFrame, message, witness);
}

void sort_canonical(std::vector<Subset>& v) {
  std::sort(v.begin(), v.end(), canonical_less);
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

bool has(const std::vector<Subset>& sorted, Subset s) {
  return std::binary_search(sorted.begin(), sorted.end(), s, canonical_less);
}

}  // namespace

KNFrame KNFrame::validate(const RawFrame& raw) {
  const std::size_t n = raw.points.size();
  if (!raw.algebra) require_within(n, kMaxFramePoints, "full frame");
  require_within(n, kMaxCarrier - 1, "frame");
  KNFrame k;
  k.points_ = raw.points;
  {
    std::set<std::string> seen;
    for (const auto& p : raw.points) {
      if (!seen.insert(p).second) invalid("duplicate point", p);
    }
  }
  if (raw.leq.size() != n) invalid("order matrix is not square over the points");
  for (const auto& row : raw.leq) {
    if (row.size() != n) invalid("order matrix is not square over the points");
  }
  const auto le = [&](std::size_t x, std::size_t y) { return static_cast<bool>(raw.leq[x][y]); };
  for (std::size_t x = 0; x < n; ++x) {
    if (!le(x, x)) invalid("order is not reflexive", raw.points[x]);
    for (std::size_t y = 0; y < n; ++y) {
      if (x != y && le(x, y) && le(y, x)) invalid("order is not antisymmetric", raw.points[x] + ", " + raw.points[y]);
      for (std::size_t z = 0; z < n; ++z) {
        if (le(x, y) && le(y, z) && !le(x, z)) {
          invalid("order is not transitive", raw.points[x] + ", " + raw.points[y] + ", " + raw.points[z]);
        }
      }
    }
  }
  k.up_.assign(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (le(x, y)) k.up_[x] |= bit(static_cast<int>(y));
    }
  }

  k.successors_.assign(n, 0);
  for (const auto& [x, y] : raw.relation) {
    if (x < 0 || y < 0 || static_cast<std::size_t>(x) >= n || static_cast<std::size_t>(y) >= n) {
      invalid("relation mentions an unknown point");
    }
    k.successors_[static_cast<std::size_t>(x)] |= bit(y);
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (!le(x, y)) continue;
      const Subset missing = k.successors_[y] & ~k.successors_[x];
      if (missing) {
        const int z = members(missing).front();
        invalid("relation is not compatible with the order",
                raw.points[x] + " ≤ " + raw.points[y] + ", (" + raw.points[y] + "," + raw.points[static_cast<std::size_t>(z)] +
                    ") ∈ R, (" + raw.points[x] + "," + raw.points[static_cast<std::size_t>(z)] + ") ∉ R");
      }
    }
  }

  const Subset all = full_set(n);
  if (raw.algebra) {
    k.algebra_ = *raw.algebra;
    for (Subset s : k.algebra_) {
      if (!is_subset(s, all)) invalid("algebra member mentions an unknown point");
    }
    sort_canonical(k.algebra_);
    k.full_ = k.algebra_.size() == (std::size_t{1} << n);
    if (!has(k.algebra_, 0)) invalid("algebra does not contain the empty set");
    if (!has(k.algebra_, all)) invalid("algebra does not contain the whole frame");
    for (Subset u : k.algebra_) {
      if (!has(k.algebra_, all & ~u)) invalid("algebra is not closed under complement", k.format(u));
      if (!has(k.algebra_, k.diamond(u))) invalid("algebra is not closed under ◇_R", k.format(u));
      for (Subset v : k.algebra_) {
        if (!has(k.algebra_, u | v)) invalid("algebra is not closed under union", k.format(u) + ", " + k.format(v));
      }
    }
  } else {
    k.full_ = true;
    for (Subset s = 0; s <= all; ++s) k.algebra_.push_back(s);
    sort_canonical(k.algebra_);
  }
  for (Subset u : k.algebra_) {
    if (k.is_upset(u)) k.upsets_.push_back(u);
  }

  k.neighbourhoods_.assign(n, {});
  if (raw.neighbourhoods) {
    if (raw.neighbourhoods->size() != n) invalid("neighbourhood map does not cover the points");
    for (std::size_t x = 0; x < n; ++x) {
      auto nx = (*raw.neighbourhoods)[x];
      for (Subset u : nx) {
        if (!has(k.upsets_, u)) invalid("neighbourhood member is not an upset in B", raw.points[x] + ": " + k.format(u));
      }
      sort_canonical(nx);
      k.neighbourhoods_[x] = std::move(nx);
    }
  } else {
    for (std::size_t x = 0; x < n; ++x) {
      for (Subset u : k.upsets_) {
        if (contains(u, static_cast<int>(x))) k.neighbourhoods_[x].push_back(u);
      }
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (Subset u : k.neighbourhoods_[x]) {
      for (Subset v : k.upsets_) {
        if (is_subset(u, v) && !has(k.neighbourhoods_[x], v)) {
          invalid("neighbourhoods are not upward closed", raw.points[x] + ": " + k.format(u) + " ⊆ " + k.format(v));
        }
      }
    }
  }
  for (Subset u : k.upsets_) {
    if (!has(k.algebra_, k.j(u))) invalid("j(U) is not in B", k.format(u));
  }
  return k;
}

int KNFrame::at_point(std::string_view name) const {
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (points_[i] == name) return static_cast<int>(i);
  }
  throw ModelError(ErrorKind::UnknownName, "unknown point", std::string(name));
}

bool KNFrame::is_upset(Subset s) const {
  for (int x : members(s)) {
    if (!is_subset(up_[static_cast<std::size_t>(x)], s)) return false;
  }
  return true;
}

bool KNFrame::in_algebra(Subset s) const { return is_subset(s, all()) && has(algebra_, s); }

bool KNFrame::in_neighbourhood(int x, Subset u) const { return has(neighbourhoods_[static_cast<std::size_t>(x)], u); }

Subset KNFrame::diamond(Subset u) const {
  Subset out = 0;
  for (std::size_t x = 0; x < size(); ++x) {
    if (successors_[x] & u) out |= bit(static_cast<int>(x));
  }
  return out;
}

Subset KNFrame::j(Subset u) const {
  Subset out = 0;
  for (std::size_t x = 0; x < size(); ++x) {
    if (in_neighbourhood(static_cast<int>(x), u)) out |= bit(static_cast<int>(x));
  }
  return out;
}

RawFrame KNFrame::raw() const {
  RawFrame r;
  r.points = points_;
  r.leq.assign(size(), std::vector<bool>(size()));
  for (std::size_t x = 0; x < size(); ++x) {
    for (std::size_t y = 0; y < size(); ++y) {
      r.leq[x][y] = leq(static_cast<int>(x), static_cast<int>(y));
      if (related(static_cast<int>(x), static_cast<int>(y))) r.relation.emplace_back(x, y);
    }
  }
  if (!full_) r.algebra = algebra_;
  r.neighbourhoods = neighbourhoods_;
  return r;
}

// ---------------------------------------------------------------------------

ModalValues modal_operators(const KNFrame& frame, Subset u) {
  if (!frame.in_algebra(u)) throw ModelError(ErrorKind::NotInAlgebra, "set is not in B", frame.format(u));
  ModalValues out;
  out.diamond = frame.diamond(u);
  if (frame.is_upset(u)) out.j = frame.j(u);
  return out;
}

Elem FrameAlgebra::index(Subset u) const {
  auto it = std::lower_bound(upsets.begin(), upsets.end(), u, canonical_less);
  if (it == upsets.end() || *it != u) throw ModelError(ErrorKind::NotInAlgebra, "set is not an upset in B");
  return static_cast<Elem>(it - upsets.begin());
}

Subset FrameAlgebra::operator()(Subset u, Subset v) const { return upsets[static_cast<std::size_t>(implication(index(u), index(v)))]; }

FrameAlgebra frame_algebra(const KNFrame& frame) {
  const auto& ups = frame.upsets();
  std::vector<std::string> names;
  for (Subset u : ups) names.push_back(frame.format(u));
  auto lattice = lattice_of_sets(std::move(names), ups);

  const std::size_t n = ups.size();
  OpTable table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      Subset value = 0;
      for (int x = 0; x < static_cast<int>(frame.size()); ++x) {
        bool holds = true;
        for (int y : members(frame.successors(x))) {
          if (frame.in_neighbourhood(y, ups[a]) && !frame.in_neighbourhood(y, ups[b])) {
            holds = false;
            break;
          }
        }
        if (holds) value |= bit(x);
      }
      const Subset complement = frame.diamond(frame.j(ups[a]) & ~frame.j(ups[b]));
      if ((frame.all() & ~value) != complement) throw InvariantError("(U → V)ᶜ differs from ◇_R(j(U) ∩ j(V)ᶜ)");
      auto it = std::lower_bound(ups.begin(), ups.end(), value, canonical_less);
      if (it == ups.end() || *it != value) throw InvariantError("frame implication left the upsets in B");
      table[a * n + b] = static_cast<Elem>(it - ups.begin());
    }
  }
  return FrameAlgebra{lattice, ups, Implication::validate(lattice, std::move(table))};
}

FrameClass frame_class(const KNFrame& frame) {
  FrameClass out;
  const auto& ups = frame.upsets();
  for (int x = 0; x < static_cast<int>(frame.size()); ++x) {
    for (int y : members(frame.successors(x))) {
      for (Subset u : ups) {
        for (Subset v : ups) {
          if (!out.not_open && contains(u, x) && frame.in_neighbourhood(y, v) && !frame.in_neighbourhood(y, u & v)) {
            out.not_open = FrameWitness{x, y, u, v};
          }
          if (!out.not_closed && !contains(u, x) && frame.in_neighbourhood(y, u | v) && !frame.in_neighbourhood(y, v)) {
            out.not_closed = FrameWitness{x, y, u, v};
          }
        }
      }
    }
  }
  out.open_frame = !out.not_open;
  out.closed_frame = !out.not_closed;
  const auto cls = classify(frame_algebra(frame).implication);
  if (out.open_frame && !cls.open) throw InvariantError("open frame with a non-open algebra");
  if (out.closed_frame && !cls.closed) throw InvariantError("closed frame with a non-closed algebra");
  return out;
}

KNFrame standard_frame(std::vector<std::string> points, std::vector<std::vector<bool>> leq,
                       std::vector<std::pair<int, int>> relation) {
  RawFrame raw;
  raw.points = std::move(points);
  raw.leq = std::move(leq);
  raw.relation = std::move(relation);
  return KNFrame::validate(raw);
}

Fullification fullify(const KNFrame& frame) {
  RawFrame raw = frame.raw();
  raw.algebra.reset();
  std::vector<Subset> all_upsets;
  for (Subset s = 0; s <= frame.all(); ++s) {
    if (frame.is_upset(s)) all_upsets.push_back(s);
  }
  std::vector<std::vector<Subset>> nf(frame.size());
  for (std::size_t x = 0; x < frame.size(); ++x) {
    for (Subset u : all_upsets) {
      const auto& nx = frame.neighbourhoods(static_cast<int>(x));
      if (std::any_of(nx.begin(), nx.end(), [&](Subset v) { return is_subset(v, u); })) nf[x].push_back(u);
    }
  }
  raw.neighbourhoods = std::move(nf);
  KNFrame full = KNFrame::validate(raw);

  for (int x = 0; x < static_cast<int>(frame.size()); ++x) {
    for (Subset u : frame.upsets()) {
      if (frame.in_neighbourhood(x, u) != full.in_neighbourhood(x, u)) {
        throw InvariantError("fullification changed a neighbourhood on an upset of B");
      }
    }
  }
  const auto small = frame_algebra(frame);
  const auto big = frame_algebra(full);
  std::vector<Elem> table;
  for (Subset u : small.upsets) table.push_back(big.index(u));
  auto inclusion = MonotoneMap::make(small.lattice, big.lattice, std::move(table));
  if (!inclusion.is_lattice_map()) throw InvariantError("upset inclusion is not a lattice map");
  if (!is_strong_map(inclusion, small.implication, big.implication)) {
    throw InvariantError("fullification does not preserve the implication");
  }
  return Fullification{std::move(full), std::move(inclusion)};
}

}  // namespace geoimp
