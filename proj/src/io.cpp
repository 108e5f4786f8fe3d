#include "nilcarnot/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "nilcarnot/catalog.hpp"
#include "nilcarnot/errors.hpp"

namespace nilcarnot {

namespace {

using json = nlohmann::ordered_json;

Rational parse_rational_at(const json& j, const std::string& where) {
  if (!j.is_string())
    throw ParseError(where + ": rationals must be strings like \"3\" or \"-1/2\"");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw ParseError(where + ": " + e.what());
  }
}

Vector parse_vector_at(const json& j, std::size_t expect_len, const std::string& where) {
  if (!j.is_array() || j.size() != expect_len)
    throw ParseError(where + ": expected an array of " + std::to_string(expect_len) +
                     " rational strings");
  Vector v;
  for (std::size_t i = 0; i < j.size(); ++i)
    v.push_back(parse_rational_at(j[i], where + "[" + std::to_string(i) + "]"));
  return v;
}

}  // namespace

NilpotentGroupSpec parse_nilg(const std::string& text, const std::string& origin) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(origin + ": " + e.what());
  }
  if (!doc.is_object()) throw ParseError(origin + ": top level must be an object");

  NilpotentGroupSpec spec;
  if (!doc.contains("name") || !doc["name"].is_string())
    throw ParseError(origin + ": missing string field \"name\"");
  spec.name = doc["name"].get<std::string>();

  if (!doc.contains("dimension") || !doc["dimension"].is_number_unsigned())
    throw ParseError(origin + ": missing nonnegative integer field \"dimension\"");
  std::size_t dim = doc["dimension"].get<std::size_t>();

  std::vector<BracketSpec> brackets;
  if (doc.contains("brackets")) {
    const json& bs = doc["brackets"];
    if (!bs.is_array()) throw ParseError(origin + ": \"brackets\" must be an array");
    for (std::size_t b = 0; b < bs.size(); ++b) {
      std::string where = origin + ": brackets[" + std::to_string(b) + "]";
      const json& e = bs[b];
      if (!e.is_object() || !e.contains("i") || !e.contains("j") || !e.contains("c"))
        throw ParseError(where + ": expected {\"i\", \"j\", \"c\"}");
      if (!e["i"].is_number_unsigned() || !e["j"].is_number_unsigned())
        throw ParseError(where + ": i and j must be positive integers");
      std::size_t i = e["i"].get<std::size_t>(), j = e["j"].get<std::size_t>();
      if (i < 1 || j < 1 || i >= j || j > dim)
        throw ParseError(where + ": need 1 <= i < j <= dimension");
      Vector coeffs(dim);
      if (!e["c"].is_array()) throw ParseError(where + ": \"c\" must be an array");
      for (const json& t : e["c"]) {
        if (!t.is_object() || !t.contains("k") || !t.contains("q") ||
            !t["k"].is_number_unsigned())
          throw ParseError(where + ": coefficients must be {\"k\": int, \"q\": \"p/q\"}");
        std::size_t k = t["k"].get<std::size_t>();
        if (k < 1 || k > dim) throw ParseError(where + ": k out of range");
        coeffs[k - 1] = parse_rational_at(t["q"], where + ".q");
      }
      brackets.push_back({i - 1, j - 1, std::move(coeffs)});
    }
  }
  spec.algebra = LieAlgebra::from_brackets(dim, brackets);

  if (doc.contains("layers")) {
    const json& ls = doc["layers"];
    if (!ls.is_array()) throw ParseError(origin + ": \"layers\" must be an array of integers");
    std::vector<std::size_t> layers;
    for (const json& l : ls) {
      if (!l.is_number_unsigned()) throw ParseError(origin + ": layer dims must be integers");
      layers.push_back(l.get<std::size_t>());
    }
    spec.layers = std::move(layers);
  }

  if (doc.contains("generators")) {
    const json& gs = doc["generators"];
    if (!gs.is_array()) throw ParseError(origin + ": \"generators\" must be an array");
    for (std::size_t g = 0; g < gs.size(); ++g)
      spec.generators.push_back(
          parse_vector_at(gs[g], dim, origin + ": generators[" + std::to_string(g) + "]"));
  }

  if (doc.contains("hom")) {
    const json& h = doc["hom"];
    if (!h.is_object() || !h.contains("target") || !h["target"].is_string() ||
        !h.contains("matrix") || !h["matrix"].is_array())
      throw ParseError(origin + ": \"hom\" must be {\"target\": file, \"matrix\": [[...]]}");
    HomBlock hb;
    hb.target_path = h["target"].get<std::string>();
    for (std::size_t r = 0; r < h["matrix"].size(); ++r) {
      const json& row = h["matrix"][r];
      std::string where = origin + ": hom.matrix[" + std::to_string(r) + "]";
      if (!row.is_array() || row.size() != dim)
        throw ParseError(where + ": each row needs one entry per source basis vector");
      std::vector<Rational> rv;
      for (std::size_t c = 0; c < row.size(); ++c)
        rv.push_back(parse_rational_at(row[c], where + "[" + std::to_string(c) + "]"));
      hb.matrix.push_back(std::move(rv));
    }
    spec.hom = std::move(hb);
  }

  if (doc.contains("packing")) {
    const json& p = doc["packing"];
    std::string where = origin + ": packing";
    for (const char* field : {"ell", "h", "x", "eps", "mu", "samples"})
      if (!p.contains(field))
        throw ParseError(where + ": missing field \"" + std::string(field) + "\"");
    PackingBlock pb;
    pb.ell = parse_vector_at(p["ell"], dim, where + ".ell");
    pb.h = parse_vector_at(p["h"], dim, where + ".h");
    pb.x = parse_vector_at(p["x"], dim, where + ".x");
    pb.eps = parse_rational_at(p["eps"], where + ".eps");
    pb.mu = parse_rational_at(p["mu"], where + ".mu");
    if (!p["samples"].is_array()) throw ParseError(where + ".samples: expected an array");
    for (std::size_t s = 0; s < p["samples"].size(); ++s)
      pb.samples.push_back(
          parse_vector_at(p["samples"][s], dim, where + ".samples[" + std::to_string(s) + "]"));
    spec.packing = std::move(pb);
  }

  return spec;
}

NilpotentGroupSpec load_group(const std::string& path_or_preset) {
  if (!std::filesystem::exists(path_or_preset)) {
    if (auto L = catalog::preset(path_or_preset)) {
      NilpotentGroupSpec spec;
      spec.name = path_or_preset;
      spec.algebra = *L;
      // presets carry lattice generators for the leading layer
      GeneratingSet gens = catalog::default_generators(*L);
      for (const auto& g : gens.elements()) spec.generators.push_back(g.coords);
      return spec;
    }
    throw ParseError(path_or_preset + ": no such file and not a preset name");
  }
  std::ifstream in(path_or_preset);
  if (!in) throw ParseError(path_or_preset + ": cannot open");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_nilg(buf.str(), path_or_preset);
}

std::string serialize_nilg(const NilpotentGroupSpec& spec) {
  json doc;
  doc["name"] = spec.name;
  doc["dimension"] = spec.algebra.dim();
  json brackets = json::array();
  std::size_t n = spec.algebra.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector c = spec.algebra.bracket_basis(i, j);
      if (is_zero(c)) continue;
      json entry;
      entry["i"] = i + 1;
      entry["j"] = j + 1;
      json terms = json::array();
      for (std::size_t k = 0; k < n; ++k) {
        if (c[k].is_zero()) continue;
        terms.push_back(json{{"k", k + 1}, {"q", c[k].str()}});
      }
      entry["c"] = std::move(terms);
      brackets.push_back(std::move(entry));
    }
  doc["brackets"] = std::move(brackets);
  if (spec.layers) doc["layers"] = *spec.layers;
  if (!spec.generators.empty()) {
    json gens = json::array();
    for (const auto& g : spec.generators) {
      json coords = json::array();
      for (const auto& x : g) coords.push_back(x.str());
      gens.push_back(std::move(coords));
    }
    doc["generators"] = std::move(gens);
  }
  if (spec.hom) {
    json h;
    h["target"] = spec.hom->target_path;
    json rows = json::array();
    for (const auto& r : spec.hom->matrix) {
      json row = json::array();
      for (const auto& x : r) row.push_back(x.str());
      rows.push_back(std::move(row));
    }
    h["matrix"] = std::move(rows);
    doc["hom"] = std::move(h);
  }
  if (spec.packing) {
    auto vec = [](const Vector& v) {
      json a = json::array();
      for (const auto& x : v) a.push_back(x.str());
      return a;
    };
    json p;
    p["ell"] = vec(spec.packing->ell);
    p["h"] = vec(spec.packing->h);
    p["x"] = vec(spec.packing->x);
    p["eps"] = spec.packing->eps.str();
    p["mu"] = spec.packing->mu.str();
    json samples = json::array();
    for (const auto& s : spec.packing->samples) samples.push_back(vec(s));
    p["samples"] = std::move(samples);
    doc["packing"] = std::move(p);
  }
  return doc.dump(2) + "\n";
}

std::string ball_csv(const BallRecord& rec) {
  std::ostringstream os;
  os << "radius,count\n";
  for (std::size_t k = 0; k < rec.counts.size(); ++k) os << k << "," << rec.counts[k] << "\n";
  return os.str();
}

}  // namespace nilcarnot
