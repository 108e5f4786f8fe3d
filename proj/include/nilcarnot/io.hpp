#pragma once

#include <optional>
#include <string>

#include "nilcarnot/group.hpp"
#include "nilcarnot/lie_algebra.hpp"

namespace nilcarnot {

/// Optional "hom" block: a dense rational matrix, row-major, target×source,
/// mapping this file's algebra into the algebra of `target_path`.
struct HomBlock {
  std::string target_path;
  std::vector<std::vector<Rational>> matrix;
};

/// Optional "packing" block; coordinates refer to the Carnot model of the
/// file's algebra.
struct PackingBlock {
  Vector ell;
  Vector h;
  Vector x;
  Rational eps;
  Rational mu;
  std::vector<Vector> samples;
};

/// A parsed .nilg file: a named rational nilpotent Lie algebra, optionally a
/// lattice generating set in exponential coordinates, optionally hom/packing
/// blocks, optionally the layer dimensions when the file carries a graded
/// algebra.
struct NilpotentGroupSpec {
  std::string name;
  LieAlgebra algebra;
  std::optional<std::vector<std::size_t>> layers;
  std::vector<Vector> generators;
  std::optional<HomBlock> hom;
  std::optional<PackingBlock> packing;
};

/// Parses .nilg JSON. `origin` is used in error messages.
NilpotentGroupSpec parse_nilg(const std::string& text, const std::string& origin);

/// Loads from a file path, or resolves a compiled-in preset name.
NilpotentGroupSpec load_group(const std::string& path_or_preset);

/// Canonical serialization: brackets with i < j ascending, k ascending,
/// rationals as lowest-term strings. Re-parsing yields an equal algebra.
std::string serialize_nilg(const NilpotentGroupSpec& spec);

/// `radius,count` rows for every covered radius.
std::string ball_csv(const BallRecord& rec);

}  // namespace nilcarnot
