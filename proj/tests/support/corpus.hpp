#pragma once

// Generators for randomized-but-deterministic test corpora: valid
// homomorphisms into Carnot targets, graded automorphisms, transported
// (scrambled) copies of catalog algebras.

#include <string>
#include <utility>
#include <vector>

#include "nilcarnot/catalog.hpp"
#include "nilcarnot/iso.hpp"
#include "support/oracles.hpp"

namespace testsupport {

using nilcarnot::GradedLieAlgebra;
using nilcarnot::Homomorphism;

// names of the non-abelian catalog presets plus ab2/ab4, as Carnot models
std::vector<std::pair<std::string, GradedLieAlgebra>> carnot_models();

// pullback of L along the invertible basis change whose column a is the new
// basis vector f_a in old coordinates: bracket'(u,v) = P^{-1}[Pu, Pv]
nilcarnot::LieAlgebra transport(const nilcarnot::LieAlgebra& L, const nilcarnot::Matrix& P);

// same for a graded algebra with a layer-block-diagonal P
GradedLieAlgebra transport_graded(const GradedLieAlgebra& G, const nilcarnot::Matrix& P);

// random invertible layer-block-diagonal basis change
nilcarnot::Matrix random_graded_basis_change(const GradedLieAlgebra& G, Rng& rng);

// random graded endomorphism candidates of G obtained by inducing random
// first-layer blocks; only candidates whose induction succeeds and that pass
// validate_hom are returned
std::vector<Homomorphism> random_graded_endos(const GradedLieAlgebra& G, std::size_t attempts,
                                              Rng& rng, bool force_singular);

// valid homomorphisms into Carnot targets: graded endomorphisms, quotients,
// inclusions, central maps from abelian sources, and their conjugates by
// inner automorphisms (which are valid but non-graded). Every entry passes
// validate_hom; the mix contains both surjective and non-surjective maps.
std::vector<Homomorphism> homs_into_carnot_corpus(std::size_t min_count, std::uint64_t seed);

// valid graded homomorphisms with non-surjective abelianization
std::vector<Homomorphism> nonsurjective_graded_corpus(std::size_t min_count, std::uint64_t seed);

}  // namespace testsupport
