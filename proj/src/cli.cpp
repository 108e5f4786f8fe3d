#include "nilcarnot/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "nilcarnot/catalog.hpp"
#include "nilcarnot/errors.hpp"
#include "nilcarnot/growth.hpp"
#include "nilcarnot/morphisms.hpp"
#include "nilcarnot/obstruction.hpp"
#include "nilcarnot/packing.hpp"

namespace nilcarnot {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kInvalidInput = 1;
constexpr int kInconclusive = 2;
constexpr int kBudget = 3;

std::uint64_t seed_from_env() {
  if (const char* s = std::getenv("NILCARNOT_SEED")) return std::strtoull(s, nullptr, 10);
  return 0;
}

Vector parse_coords(const std::string& s, std::size_t dim, const std::string& what) {
  Vector v;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) v.push_back(Rational::parse(tok));
  if (v.size() != dim)
    throw ParseError(what + ": expected " + std::to_string(dim) + " comma-separated rationals");
  return v;
}

std::string layers_str(const std::vector<std::size_t>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

int cmd_validate(const std::string& file, bool as_json, std::ostream& out) {
  NilpotentGroupSpec spec = load_group(file);
  ValidationReport rep = validate(spec.algebra);
  if (as_json) {
    ordered_json j;
    j["name"] = spec.name;
    j["passed"] = rep.passed();
    j["jacobi_ok"] = rep.jacobi_ok;
    if (rep.first_jacobi_violation) {
      auto [i, jj, k] = *rep.first_jacobi_violation;
      j["first_jacobi_violation"] = {i + 1, jj + 1, k + 1};
    }
    j["nilpotent"] = rep.nilpotent;
    if (rep.passed()) {
      j["step"] = rep.step;
      j["layer_ranks"] = rep.layer_ranks;
    }
    out << j.dump(2) << "\n";
  } else {
    out << spec.name << ": " << rep.describe() << "\n";
  }
  return rep.passed() ? kOk : kInvalidInput;
}

int cmd_series(const std::string& file, bool derived, bool as_json, std::ostream& out) {
  NilpotentGroupSpec spec = load_group(file);
  SeriesReport lcs = lower_central_series(spec.algebra);
  SeriesReport der = derived_series(spec.algebra);
  Subspace z = center(spec.algebra);
  if (as_json) {
    ordered_json j;
    j["name"] = spec.name;
    ordered_json dims = ordered_json::array();
    for (const auto& t : lcs.terms) dims.push_back(t.dim());
    j["lower_central_dims"] = std::move(dims);
    j["step"] = lcs.step;
    j["layer_ranks"] = lcs.layer_ranks;
    ordered_json ddims = ordered_json::array();
    for (const auto& t : der.terms) ddims.push_back(t.dim());
    j["derived_dims"] = std::move(ddims);
    j["center_dim"] = z.dim();
    out << j.dump(2) << "\n";
  } else {
    out << spec.name << ": step " << lcs.step << ", layer ranks " << layers_str(lcs.layer_ranks)
        << "\n";
    out << "lower central series dims:";
    for (const auto& t : lcs.terms) out << " " << t.dim();
    out << "\n";
    if (derived) {
      out << "derived series dims:";
      for (const auto& t : der.terms) out << " " << t.dim();
      out << "\n";
    }
    out << "center dim: " << z.dim() << "\n";
  }
  return kOk;
}

int cmd_carnot(const std::string& file, const std::string& out_path, std::ostream& out) {
  NilpotentGroupSpec spec = load_group(file);
  GradedLieAlgebra G = associated_graded(spec.algebra);
  NilpotentGroupSpec graded_spec;
  graded_spec.name = spec.name + "_carnot";
  graded_spec.algebra = G.algebra();
  graded_spec.layers = G.layer_dims();
  std::string text = serialize_nilg(graded_spec);
  if (!out_path.empty()) {
    std::ofstream f(out_path);
    if (!f) throw ParseError(out_path + ": cannot open for writing");
    f << text;
    out << "wrote " << out_path << " (layers " << layers_str(G.layer_dims()) << ", carnot="
        << (is_carnot(G) ? "yes" : "no") << ")\n";
  } else {
    out << text;
  }
  return kOk;
}

int cmd_growth(const std::string& file, long ball_radius, const std::string& csv_path,
               bool estimate, bool as_json, std::ostream& out) {
  NilpotentGroupSpec spec = load_group(file);
  std::optional<BallRecord> ball;
  if (ball_radius >= 0) {
    if (spec.generators.empty())
      throw ParseError(file + ": ball enumeration needs a generating set");
    std::vector<GroupElement> gens;
    for (const auto& g : spec.generators) gens.push_back({g});
    GeneratingSet S(spec.algebra, std::move(gens), true);
    ball = word_ball(spec.algebra, S, static_cast<std::size_t>(ball_radius));
    if (ball->truncated_by_budget)
      throw BudgetError("ball enumeration exceeded the element budget at radius " +
                        std::to_string(ball->radius));
  }
  GrowthReport rep = growth_report(spec.algebra, ball ? &*ball : nullptr);
  if (!csv_path.empty()) {
    if (!ball) throw ParseError("--csv needs --ball");
    std::ofstream f(csv_path);
    if (!f) throw ParseError(csv_path + ": cannot open for writing");
    f << ball_csv(*ball);
  }
  if (as_json) {
    ordered_json j;
    j["name"] = spec.name;
    j["homogeneous_dimension"] = rep.d;
    j["rank"] = rep.rank;
    j["layer_ranks"] = rep.layer_ranks;
    if (ball) {
      j["ball_counts"] = ball->counts;
      if (estimate) j["growth_exponent_estimate"] = estimate_growth_exponent(*ball);
    }
    out << j.dump(2) << "\n";
  } else {
    out << spec.name << ": homogeneous dimension d = " << rep.d << ", rank = " << rep.rank
        << ", layer ranks " << layers_str(rep.layer_ranks) << "\n";
    if (ball) {
      out << "ball counts:";
      for (auto c : ball->counts) out << " " << c;
      out << "\n";
      if (estimate)
        out << "doubling estimate (diagnostic, inexact): " << estimate_growth_exponent(*ball)
            << "\n";
    }
  }
  return kOk;
}

void print_verdict(const IsoVerdict& v, bool as_json, std::ostream& out) {
  if (as_json) {
    ordered_json j;
    j["kind"] = v.kind == IsoVerdict::Kind::Isomorphic      ? "Isomorphic"
                : v.kind == IsoVerdict::Kind::NonIsomorphic ? "NonIsomorphic"
                                                            : "Unknown";
    if (v.certificate) j["certificate"] = *v.certificate;
    if (v.witness) {
      ordered_json rows = ordered_json::array();
      for (std::size_t r = 0; r < v.witness->matrix.rows(); ++r) {
        ordered_json row = ordered_json::array();
        for (std::size_t c = 0; c < v.witness->matrix.cols(); ++c)
          row.push_back(v.witness->matrix.at(r, c).str());
        rows.push_back(std::move(row));
      }
      j["witness"] = std::move(rows);
    }
    if (v.note) j["note"] = *v.note;
    out << j.dump(2) << "\n";
    return;
  }
  switch (v.kind) {
    case IsoVerdict::Kind::Isomorphic:
      out << "Isomorphic; witness (graded, bracket-compatible, bijective):\n"
          << v.witness->matrix;
      break;
    case IsoVerdict::Kind::NonIsomorphic:
      out << "NonIsomorphic: " << *v.certificate << "\n";
      break;
    case IsoVerdict::Kind::Unknown:
      out << "Unknown: " << *v.note << "\n";
      break;
  }
}

int cmd_iso(const std::string& f1, const std::string& f2, std::uint64_t budget, bool as_json,
            std::ostream& out) {
  NilpotentGroupSpec a = load_group(f1), b = load_group(f2);
  IsoSearchOptions opts{budget, seed_from_env()};
  IsoVerdict v = iso_verdict(associated_graded(a.algebra), associated_graded(b.algebra), opts);
  print_verdict(v, as_json, out);
  return v.kind == IsoVerdict::Kind::Unknown ? kInconclusive : kOk;
}

int cmd_obstruct(const std::string& f1, const std::string& f2, std::uint64_t budget, bool as_json,
                 std::ostream& out) {
  NilpotentGroupSpec a = load_group(f1), b = load_group(f2);
  IsoSearchOptions opts{budget, seed_from_env()};
  ObstructionReport rep = obstruction_verdict(a, b, opts);
  out << (as_json ? rep.to_json() : rep.to_text());
  return rep.conclusion == Conclusion::Inconclusive_IsoUnknown ? kInconclusive : kOk;
}

int cmd_pansu(const std::string& file, const std::string& g_str, const std::string& x_str,
              const std::string& s_str, std::ostream& out) {
  NilpotentGroupSpec spec = load_group(file);
  if (!spec.hom) throw ParseError(file + ": pansu needs a \"hom\" block");
  NilpotentGroupSpec target = load_group(spec.hom->target_path);

  GradedLieAlgebra src = associated_graded(spec.algebra);
  GradedLieAlgebra tgt = associated_graded(target.algebra);
  Matrix m(spec.hom->matrix.size(), spec.algebra.dim());
  if (m.rows() != tgt.dim())
    throw ParseError(file + ": hom matrix must have one row per target basis vector");
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) m.at(r, c) = spec.hom->matrix[r][c];
  Homomorphism F = make_graded_hom(src, tgt, m);
  if (!validate_hom(F)) throw ParseError(file + ": hom block is not a graded Lie morphism");

  GroupElement g{parse_coords(g_str, src.dim(), "--g")};
  GroupElement x{parse_coords(x_str, src.dim(), "--x")};
  Rational s = Rational::parse(s_str);
  GroupElement q = pansu_quotient(F, g, x, s);
  GroupElement fx = F.apply(x);
  out << "difference quotient at s=" << s << ": " << vector_str(q.coords) << "\n";
  out << "F(x):                       " << vector_str(fx.coords) << "\n";
  out << (q == fx ? "equal (exact)" : "DIFFER") << "\n";
  return kOk;
}

int cmd_pack(const std::string& file, bool as_json, std::ostream& out) {
  NilpotentGroupSpec spec = load_group(file);
  if (!spec.packing) throw ParseError(file + ": pack needs a \"packing\" block");
  GradedLieAlgebra G = associated_graded(spec.algebra);
  PackingInstance inst;
  inst.G = G;
  inst.ell.covector = spec.packing->ell;
  inst.ell.norm_square = dot(spec.packing->ell, spec.packing->ell);
  inst.h = {spec.packing->h};
  inst.x = {spec.packing->x};
  inst.eps = spec.packing->eps;
  inst.mu = spec.packing->mu;
  for (const auto& s : spec.packing->samples) inst.samples.push_back({s});
  PackingReport rep = build_packing(inst);
  if (as_json) {
    ordered_json j;
    j["name"] = spec.name;
    j["count"] = rep.count;
    j["pairwise_disjoint"] = rep.pairwise_disjoint;
    j["radius_bound_ok"] = rep.radius_bound_ok;
    j["ell_of_conjugate"] = rep.ell_of_conjugate.str();
    ordered_json ws = ordered_json::array();
    for (const auto& w : rep.intervals) {
      ordered_json e;
      e["j"] = w.j;
      e["interval"] = {w.lo.str(), w.hi.str()};
      ordered_json vals = ordered_json::array();
      for (const auto& v : w.ell_values) vals.push_back(v.str());
      e["ell_values"] = std::move(vals);
      ws.push_back(std::move(e));
    }
    j["intervals"] = std::move(ws);
    out << j.dump(2) << "\n";
  } else {
    out << spec.name << ": " << rep.count << " translates, disjoint="
        << (rep.pairwise_disjoint ? "yes" : "no")
        << ", gauge radius bound ok=" << (rep.radius_bound_ok ? "yes" : "no")
        << ", ℓ(h_eps)=" << rep.ell_of_conjugate << "\n";
    for (const auto& w : rep.intervals)
      out << "  j=" << w.j << "  ℓ-interval (" << w.lo << ", " << w.hi << ")\n";
  }
  return kOk;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact toolkit for growth and Carnot-completion obstructions to "
               "translation-like actions on nilpotent groups"};
  app.require_subcommand(1);

  std::string file1, file2, out_path, csv_path;
  std::string g_str, x_str, s_str = "1";
  bool as_json = false, derived = false, estimate = false;
  long ball_radius = -1;
  std::uint64_t budget = 5000;

  auto* validate_cmd = app.add_subcommand("validate", "check Jacobi and nilpotency");
  validate_cmd->add_option("file", file1, "group file or preset")->required();
  validate_cmd->add_flag("--json", as_json);

  auto* series_cmd = app.add_subcommand("series", "lower central series, step, layer ranks");
  series_cmd->add_option("file", file1)->required();
  series_cmd->add_flag("--derived", derived, "also print the derived series");
  series_cmd->add_flag("--json", as_json);

  auto* carnot_cmd = app.add_subcommand("carnot", "associated graded algebra with layers block");
  carnot_cmd->add_option("file", file1)->required();
  carnot_cmd->add_option("-o,--output", out_path, "write .nilg here instead of stdout");

  auto* growth_cmd = app.add_subcommand("growth", "homogeneous dimension and ball counts");
  growth_cmd->add_option("file", file1)->required();
  growth_cmd->add_option("--ball", ball_radius, "enumerate word balls to this radius");
  growth_cmd->add_option("--csv", csv_path, "write radius,count rows here");
  growth_cmd->add_flag("--estimate", estimate, "print the doubling exponent estimate");
  growth_cmd->add_flag("--json", as_json);

  auto* iso_cmd = app.add_subcommand("iso", "graded isomorphism verdict for Carnot completions");
  iso_cmd->add_option("file1", file1)->required();
  iso_cmd->add_option("file2", file2)->required();
  iso_cmd->add_option("--budget", budget, "search candidates to try");
  iso_cmd->add_flag("--json", as_json);

  auto* obstruct_cmd = app.add_subcommand("obstruct", "full obstruction verdict for a pair");
  obstruct_cmd->add_option("file1", file1)->required();
  obstruct_cmd->add_option("file2", file2)->required();
  obstruct_cmd->add_option("--budget", budget);
  obstruct_cmd->add_flag("--json", as_json);

  auto* pansu_cmd = app.add_subcommand("pansu", "difference quotient of the file's hom block");
  pansu_cmd->add_option("file", file1)->required();
  pansu_cmd->add_option("--g", g_str, "base point coordinates, comma-separated")->required();
  pansu_cmd->add_option("--x", x_str, "argument coordinates")->required();
  pansu_cmd->add_option("--s", s_str, "positive rational scale (default 1)");

  auto* pack_cmd = app.add_subcommand("pack", "build the file's packing block");
  pack_cmd->add_option("file", file1)->required();
  pack_cmd->add_flag("--json", as_json);

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return kOk;
    }
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }

  try {
    if (validate_cmd->parsed()) return cmd_validate(file1, as_json, out);
    if (series_cmd->parsed()) return cmd_series(file1, derived, as_json, out);
    if (carnot_cmd->parsed()) return cmd_carnot(file1, out_path, out);
    if (growth_cmd->parsed())
      return cmd_growth(file1, ball_radius, csv_path, estimate, as_json, out);
    if (iso_cmd->parsed()) return cmd_iso(file1, file2, budget, as_json, out);
    if (obstruct_cmd->parsed()) return cmd_obstruct(file1, file2, budget, as_json, out);
    if (pansu_cmd->parsed()) return cmd_pansu(file1, g_str, x_str, s_str, out);
    if (pack_cmd->parsed()) return cmd_pack(file1, as_json, out);
  } catch (const BudgetError& e) {
    err << "budget: " << e.what() << "\n";
    return kBudget;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }
  err << "error: no subcommand\n";
  return kInvalidInput;
}

}  // namespace nilcarnot
