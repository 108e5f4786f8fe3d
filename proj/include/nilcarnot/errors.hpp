#pragma once

#include <stdexcept>
#include <string>

namespace nilcarnot {

/// v or sub lies outside the claimed ambient space.
struct MembershipError : std::domain_error {
  explicit MembershipError(const std::string& what) : std::domain_error(what) {}
};

/// Lower central series stabilized at a nonzero subspace.
struct NonNilpotentError : std::domain_error {
  explicit NonNilpotentError(const std::string& what) : std::domain_error(what) {}
};

/// Map shapes or gradings do not line up.
struct ShapeError : std::domain_error {
  explicit ShapeError(const std::string& what) : std::domain_error(what) {}
};

/// Packing instance violates a precondition; names the first bad sample.
struct InstanceInvalidError : std::domain_error {
  explicit InstanceInvalidError(const std::string& what) : std::domain_error(what) {}
};

/// The abelianized map is surjective, so no annihilating functional exists.
struct NoFunctionalError : std::domain_error {
  explicit NoFunctionalError(const std::string& what) : std::domain_error(what) {}
};

/// Malformed input file; message carries the location when known.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// BFS or search hit its element budget.
struct BudgetError : std::runtime_error {
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace nilcarnot
