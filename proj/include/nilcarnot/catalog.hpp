#pragma once

#include <optional>
#include <string>

#include "nilcarnot/group.hpp"
#include "nilcarnot/lie_algebra.hpp"

namespace nilcarnot {
namespace catalog {

/// Compiled-in presets, addressable by name anywhere a group file is
/// expected:
///   ab1..ab6      abelian Q^k
///   h3            Heisenberg, [e1,e2] = e3
///   h5            5-dim Heisenberg, [e1,e2] = [e3,e4] = e5
///   h3_plus_ab2   h3 ⊕ Q^2
///   filiform4     [e1,e2] = e3, [e1,e3] = e4
///   free32        free step-3 on 2 generators
///   twostep_d7    [e1,e2] = e4, [e1,e3] = e5
std::optional<LieAlgebra> preset(const std::string& name);

std::vector<std::string> preset_names();

/// Default lattice generating set for a preset: exp(±e_i) over the first
/// lower-central-series layer's canonical complement (for the presets this is
/// the leading coordinate block).
GeneratingSet default_generators(const LieAlgebra& L);

}  // namespace catalog
}  // namespace nilcarnot
