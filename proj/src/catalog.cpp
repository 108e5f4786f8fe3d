#include "nilcarnot/catalog.hpp"

namespace nilcarnot {
namespace catalog {

namespace {

Vector ek(std::size_t dim, std::size_t k) { return unit(dim, k); }

LieAlgebra abelian(std::size_t k) { return LieAlgebra::from_brackets(k, {}); }

LieAlgebra h3() { return LieAlgebra::from_brackets(3, {{0, 1, ek(3, 2)}}); }

LieAlgebra h5() {
  return LieAlgebra::from_brackets(5, {{0, 1, ek(5, 4)}, {2, 3, ek(5, 4)}});
}

LieAlgebra h3_plus_ab2() { return LieAlgebra::from_brackets(5, {{0, 1, ek(5, 2)}}); }

LieAlgebra filiform4() {
  return LieAlgebra::from_brackets(4, {{0, 1, ek(4, 2)}, {0, 2, ek(4, 3)}});
}

LieAlgebra free32() {
  return LieAlgebra::from_brackets(
      5, {{0, 1, ek(5, 2)}, {0, 2, ek(5, 3)}, {1, 2, ek(5, 4)}});
}

LieAlgebra twostep_d7() {
  return LieAlgebra::from_brackets(5, {{0, 1, ek(5, 3)}, {0, 2, ek(5, 4)}});
}

}  // namespace

std::optional<LieAlgebra> preset(const std::string& name) {
  if (name == "h3") return h3();
  if (name == "h5") return h5();
  if (name == "h3_plus_ab2") return h3_plus_ab2();
  if (name == "filiform4") return filiform4();
  if (name == "free32") return free32();
  if (name == "twostep_d7") return twostep_d7();
  if (name.size() == 3 && name.starts_with("ab") && name[2] >= '1' && name[2] <= '6')
    return abelian(static_cast<std::size_t>(name[2] - '0'));
  return std::nullopt;
}

std::vector<std::string> preset_names() {
  return {"ab1", "ab2", "ab3",       "ab4",    "ab5",        "ab6",
          "h3",  "h5",  "h3_plus_ab2", "filiform4", "free32", "twostep_d7"};
}

GeneratingSet default_generators(const LieAlgebra& L) {
  SeriesReport lcs = lower_central_series(L);
  Matrix comp = complement_basis(lcs.terms[0], lcs.terms.size() > 1 ? lcs.terms[1]
                                                                    : Subspace::zero(L.dim()));
  std::vector<GroupElement> gens;
  for (std::size_t r = 0; r < comp.rows(); ++r) gens.push_back({comp.row(r)});
  return GeneratingSet(L, std::move(gens), true);
}

}  // namespace catalog
}  // namespace nilcarnot
