#pragma once

#include "nilcarnot/io.hpp"
#include "nilcarnot/iso.hpp"

namespace nilcarnot {

enum class Conclusion {
  ObstructedBothDirections,
  NotApplicable_GrowthDiffers,
  NotApplicable_ConesIsomorphic,
  Inconclusive_IsoUnknown,
};

std::string conclusion_name(Conclusion c);

/// The verdict is a pure function of the growth comparison and the cone
/// isomorphism verdict; exposed separately so it can be tested exhaustively.
Conclusion conclude(bool growth_equal, IsoVerdict::Kind cone_verdict);

/// Machine-readable verdict with certificates. When growth differs, the
/// group with larger homogeneous dimension cannot act translation-like on
/// the smaller one; the opposite direction is outside the theorem's scope
/// and is reported as such, never as allowed.
struct ObstructionReport {
  std::string gamma_name, delta_name;
  std::uint64_t d_gamma = 0, d_delta = 0;
  std::vector<std::size_t> gamma_layer_ranks, delta_layer_ranks;
  IsoVerdict cone_verdict{IsoVerdict::Kind::Unknown, std::nullopt, std::nullopt, std::nullopt};
  Conclusion conclusion = Conclusion::Inconclusive_IsoUnknown;
  std::string blocked_direction;  // nonempty for the growth branch
  std::string note;

  std::string to_json() const;  // canonical: byte-identical for equal inputs
  std::string to_text() const;
};

ObstructionReport obstruction_verdict(const NilpotentGroupSpec& gamma,
                                      const NilpotentGroupSpec& delta,
                                      const IsoSearchOptions& opts = {});

}  // namespace nilcarnot
