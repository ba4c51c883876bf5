#include "geoimp/diagnostic.hpp"

#include <cstdlib>
#include <string>

#include "geoimp/guard.hpp"
#include "geoimp/subset.hpp"

namespace geoimp {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotAPoset: return "not-a-poset";
    case ErrorKind::MissingBound: return "missing-bound";
    case ErrorKind::NotDistributive: return "not-distributive";
    case ErrorKind::TooLarge: return "size-guard-exceeded";
    case ErrorKind::NotMonotone: return "not-monotone";
    case ErrorKind::NotAFilter: return "not-a-filter";
    case ErrorKind::NotAnIdeal: return "not-an-ideal";
    case ErrorKind::NotAnImplication: return "not-an-implication";
    case ErrorKind::NotMeetPreserving: return "not-meet-preserving";
    case ErrorKind::NotLatticeMap: return "not-a-lattice-map";
    case ErrorKind::NotLeftInverse: return "not-a-left-inverse";
    case ErrorKind::NotSurjective: return "not-surjective";
    case ErrorKind::NotWbi: return "not-wbi";
    case ErrorKind::IntervalNotBoolean: return "interval-not-boolean";
    case ErrorKind::NotATopology: return "not-a-topology";
    case ErrorKind::Discontinuous: return "discontinuous";
    case ErrorKind::InvalidCore: return "core-invalid";
    case ErrorKind::NotAnEmbedding: return "not-an-embedding";
    case ErrorKind::InvalidFrame: return "invalid-frame";
    case ErrorKind::NotInAlgebra: return "not-in-algebra";
    case ErrorKind::NotJoinPreserving: return "not-join-preserving";
    case ErrorKind::NoRightAdjoint: return "no-right-adjoint";
    case ErrorKind::TableMismatch: return "table-mismatch";
    case ErrorKind::NotACategory: return "not-a-category";
    case ErrorKind::FiberMismatch: return "fiber-index-mismatch";
    case ErrorKind::PreconditionViolated: return "precondition-violated";
    case ErrorKind::ParseError: return "parse-error";
    case ErrorKind::UnknownName: return "unknown-name";
  }
  return "unknown";
}

ModelError::ModelError(ErrorKind kind, const std::string& message, std::string witness)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message +
                         (witness.empty() ? std::string() : " [witness: " + witness + "]")),
      kind_(kind),
      message_(message),
      witness_(std::move(witness)) {}

std::vector<int> members(Subset s) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(std::popcount(s)));
  while (s != 0) {
    out.push_back(std::countr_zero(s));
    s &= s - 1;
  }
  return out;
}

bool canonical_less(Subset a, Subset b) {
  const int ca = std::popcount(a);
  const int cb = std::popcount(b);
  if (ca != cb) return ca < cb;
  while (a != b) {
    const int la = std::countr_zero(a);
    const int lb = std::countr_zero(b);
    if (la != lb) return la < lb;
    a &= a - 1;
    b &= b - 1;
  }
  return false;
}

std::string format_set(std::span<const std::string> names, Subset s) {
  std::string out = "{";
  bool first = true;
  for (int i : members(s)) {
    if (!first) out += ",";
    out += names[static_cast<std::size_t>(i)];
    first = false;
  }
  out += "}";
  return out;
}

std::size_t size_guard() {
  static const std::size_t guard = [] {
    if (const char* env = std::getenv("GEOIMP_SIZE_GUARD")) {
      char* end = nullptr;
      const unsigned long value = std::strtoul(env, &end, 10);
      if (end != env && *end == '\0' && value > 0) return static_cast<std::size_t>(value);
    }
    return std::size_t{20};
  }();
  return guard;
}

void require_within(std::size_t size, std::size_t limit, std::string_view what) {
  if (size > limit) {
    throw ModelError(ErrorKind::TooLarge,
                     std::string(what) + " has " + std::to_string(size) + " entries; limit is " +
                         std::to_string(limit));
  }
}

}  // namespace geoimp
