#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "geoimp/implication.hpp"
#include "geoimp/lattice.hpp"

namespace geoimp {

// Kripke-neighbourhood frames (K, ≤, R, B, N) on at most 12 points when B is
// the full powerset.

struct RawFrame {
  std::vector<std::string> points;
  std::vector<std::vector<bool>> leq;
  std::vector<std::pair<int, int>> relation;
  /// Omitted: every subset.
  std::optional<std::vector<Subset>> algebra;
  /// Omitted: N(k) = upsets in B containing k.
  std::optional<std::vector<std::vector<Subset>>> neighbourhoods;
};

class KNFrame {
 public:
  /// Checks the poset, order compatibility of R, closure of B, upward closure
  /// of each N(x) and j(U) ∈ B. Throws ModelError(InvalidFrame).
  static KNFrame validate(const RawFrame& raw);

  std::size_t size() const { return points_.size(); }
  const std::vector<std::string>& points() const { return points_; }
  const std::string& point(int x) const { return points_[static_cast<std::size_t>(x)]; }
  int at_point(std::string_view name) const;
  Subset all() const { return full_set(size()); }

  bool leq(int x, int y) const { return contains(up_[static_cast<std::size_t>(x)], y); }
  bool related(int x, int y) const { return contains(successors_[static_cast<std::size_t>(x)], y); }
  Subset successors(int x) const { return successors_[static_cast<std::size_t>(x)]; }
  bool is_upset(Subset s) const;

  bool full() const { return full_; }
  /// B in canonical order.
  const std::vector<Subset>& algebra() const { return algebra_; }
  bool in_algebra(Subset s) const;
  /// Upsets in B, canonical order.
  const std::vector<Subset>& upsets() const { return upsets_; }
  const std::vector<Subset>& neighbourhoods(int x) const { return neighbourhoods_[static_cast<std::size_t>(x)]; }
  bool in_neighbourhood(int x, Subset u) const;

  Subset diamond(Subset u) const;
  Subset j(Subset u) const;

  std::string format(Subset s) const { return format_set(points_, s); }
  /// A raw description that validates back to this frame.
  RawFrame raw() const;

 private:
  KNFrame() = default;

  std::vector<std::string> points_;
  std::vector<Subset> up_;
  std::vector<Subset> successors_;
  bool full_ = false;
  std::vector<Subset> algebra_;
  std::vector<Subset> upsets_;
  std::vector<std::vector<Subset>> neighbourhoods_;
};

struct ModalValues {
  Subset diamond = 0;
  /// Present when the argument is an upset.
  std::optional<Subset> j;
};

/// Throws ModelError(NotInAlgebra) when U is not in B.
ModalValues modal_operators(const KNFrame& frame, Subset u);

struct FrameAlgebra {
  /// Element i is upsets[i].
  LatticePtr lattice;
  std::vector<Subset> upsets;
  Implication implication;

  Elem index(Subset u) const;
  Subset operator()(Subset u, Subset v) const;
};

/// Upsets in B with U →_K V = {x | ∀y. xRy ∧ U ∈ N(y) ⇒ V ∈ N(y)}, checked
/// against (U →_K V)ᶜ = ◇_R(j(U) ∩ j(V)ᶜ).
FrameAlgebra frame_algebra(const KNFrame& frame);

struct FrameWitness {
  int x, y;
  Subset u, v;
};

struct FrameClass {
  bool open_frame = false;
  bool closed_frame = false;
  std::optional<FrameWitness> not_open;
  std::optional<FrameWitness> not_closed;
};

/// Pointwise frame conditions. A frame flag forces the matching class of the
/// frame algebra, which is asserted.
FrameClass frame_class(const KNFrame& frame);

/// B = powerset, N(k) = upsets containing k.
KNFrame standard_frame(std::vector<std::string> points, std::vector<std::vector<bool>> leq,
                       std::vector<std::pair<int, int>> relation);

struct Fullification {
  KNFrame frame;
  /// Inclusion of the upset lattice of the original frame into that of the full one.
  MonotoneMap inclusion;
};

/// K^f with B = powerset and N^f(x) = upsets above some member of N(x). The
/// inclusion is asserted to be a lattice map preserving →.
Fullification fullify(const KNFrame& frame);

}  // namespace geoimp
