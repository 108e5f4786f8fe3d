#include "nilcarnot/obstruction.hpp"

#include <sstream>

#include <json.hpp>

#include "nilcarnot/errors.hpp"
#include "nilcarnot/growth.hpp"

namespace nilcarnot {

std::string conclusion_name(Conclusion c) {
  switch (c) {
    case Conclusion::ObstructedBothDirections: return "ObstructedBothDirections";
    case Conclusion::NotApplicable_GrowthDiffers: return "NotApplicable_GrowthDiffers";
    case Conclusion::NotApplicable_ConesIsomorphic: return "NotApplicable_ConesIsomorphic";
    case Conclusion::Inconclusive_IsoUnknown: return "Inconclusive_IsoUnknown";
  }
  return "?";
}

Conclusion conclude(bool growth_equal, IsoVerdict::Kind cone_verdict) {
  if (!growth_equal) return Conclusion::NotApplicable_GrowthDiffers;
  switch (cone_verdict) {
    case IsoVerdict::Kind::NonIsomorphic: return Conclusion::ObstructedBothDirections;
    case IsoVerdict::Kind::Isomorphic: return Conclusion::NotApplicable_ConesIsomorphic;
    case IsoVerdict::Kind::Unknown: return Conclusion::Inconclusive_IsoUnknown;
  }
  return Conclusion::Inconclusive_IsoUnknown;
}

ObstructionReport obstruction_verdict(const NilpotentGroupSpec& gamma,
                                      const NilpotentGroupSpec& delta,
                                      const IsoSearchOptions& opts) {
  ObstructionReport rep;
  rep.gamma_name = gamma.name;
  rep.delta_name = delta.name;

  GrowthReport gg = growth_report(gamma.algebra), gd = growth_report(delta.algebra);
  rep.d_gamma = gg.d;
  rep.d_delta = gd.d;
  rep.gamma_layer_ranks = gg.layer_ranks;
  rep.delta_layer_ranks = gd.layer_ranks;

  if (gg.d != gd.d) {
    rep.conclusion = Conclusion::NotApplicable_GrowthDiffers;
    const std::string& big = gg.d > gd.d ? gamma.name : delta.name;
    const std::string& small = gg.d > gd.d ? delta.name : gamma.name;
    rep.blocked_direction = big + " cannot act translation-like on " + small +
                            " (growth degree " + std::to_string(std::max(gg.d, gd.d)) + " > " +
                            std::to_string(std::min(gg.d, gd.d)) + ")";
    rep.note = "the theorem needs equal growth; whether " + small +
               " can act translation-like on " + big + " is outside the theorem's scope";
    return rep;
  }

  GradedLieAlgebra cg = associated_graded(gamma.algebra);
  GradedLieAlgebra cd = associated_graded(delta.algebra);
  rep.cone_verdict = iso_verdict(cg, cd, opts);
  rep.conclusion = conclude(true, rep.cone_verdict.kind);
  switch (rep.cone_verdict.kind) {
    case IsoVerdict::Kind::NonIsomorphic:
      rep.note = "equal growth, non-isomorphic Carnot completions: no Lipschitz injection and "
                 "no translation-like action in either direction";
      break;
    case IsoVerdict::Kind::Isomorphic:
      rep.note = "Carnot completions are isomorphic; the theorem does not apply";
      break;
    case IsoVerdict::Kind::Unknown:
      rep.note = "isomorphism undecided within budget; theorem not applied";
      break;
  }
  return rep;
}

namespace {

nlohmann::ordered_json verdict_json(const IsoVerdict& v) {
  nlohmann::ordered_json j;
  switch (v.kind) {
    case IsoVerdict::Kind::Isomorphic: j["kind"] = "Isomorphic"; break;
    case IsoVerdict::Kind::NonIsomorphic: j["kind"] = "NonIsomorphic"; break;
    case IsoVerdict::Kind::Unknown: j["kind"] = "Unknown"; break;
  }
  if (v.certificate) j["certificate"] = *v.certificate;
  if (v.witness) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    const Matrix& m = v.witness->matrix;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      nlohmann::ordered_json row = nlohmann::ordered_json::array();
      for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).str());
      rows.push_back(std::move(row));
    }
    j["witness"] = std::move(rows);
  }
  if (v.note) j["note"] = *v.note;
  return j;
}

}  // namespace

std::string ObstructionReport::to_json() const {
  nlohmann::ordered_json j;
  j["gamma"] = gamma_name;
  j["delta"] = delta_name;
  j["d_gamma"] = d_gamma;
  j["d_delta"] = d_delta;
  j["gamma_layer_ranks"] = gamma_layer_ranks;
  j["delta_layer_ranks"] = delta_layer_ranks;
  j["cone_verdict"] = verdict_json(cone_verdict);
  j["conclusion"] = conclusion_name(conclusion);
  if (!blocked_direction.empty()) j["blocked_direction"] = blocked_direction;
  j["note"] = note;
  return j.dump(2) + "\n";
}

std::string ObstructionReport::to_text() const {
  std::ostringstream os;
  os << "gamma: " << gamma_name << "  d = " << d_gamma << "\n";
  os << "delta: " << delta_name << "  d = " << d_delta << "\n";
  if (conclusion != Conclusion::NotApplicable_GrowthDiffers) {
    os << "cone verdict: ";
    switch (cone_verdict.kind) {
      case IsoVerdict::Kind::Isomorphic: os << "Isomorphic (witness verified)"; break;
      case IsoVerdict::Kind::NonIsomorphic:
        os << "NonIsomorphic (" << cone_verdict.certificate.value_or("") << ")";
        break;
      case IsoVerdict::Kind::Unknown: os << "Unknown"; break;
    }
    os << "\n";
  }
  os << "conclusion: " << conclusion_name(conclusion) << "\n";
  if (!blocked_direction.empty()) os << "blocked: " << blocked_direction << "\n";
  if (!note.empty()) os << "note: " << note << "\n";
  return os.str();
}

}  // namespace nilcarnot
