#pragma once

#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "qpbw/catalog.hpp"
#include "qpbw/parse.hpp"

namespace qpbw {

inline std::vector<std::string> presentationNames(const Presentation& p) {
  std::vector<std::string> names;
  names.reserve(p.generators.size());
  for (const auto& g : p.generators) names.push_back(g.name);
  return names;
}

/// Names for the doubled alphabet of a smash product: base names then the
/// barred copies.
inline std::vector<std::string> idNamesDoubled(const Presentation& base) {
  std::vector<std::string> names = presentationNames(base);
  std::size_t T = names.size();
  for (std::size_t k = 0; k < T; ++k) {
    std::string s = names[k];
    std::size_t d = 0;
    while (d < s.size() && !std::isdigit((unsigned char)s[d])) ++d;
    names.push_back(s.substr(0, d) + "b" + s.substr(d));
  }
  return names;
}

/// Coefficient as expression text; +-qhat is printed by name.
inline std::string coefficientToString(const LaurentPoly& c, bool* negOut) {
  LaurentPoly qh = LaurentPoly::qhat();
  if (c == qh) {
    *negOut = false;
    return "qhat";
  }
  if (c == -qh) {
    *negOut = true;
    return "qhat";
  }
  if (c.isMonomial()) {
    const auto& [e, r] = *c.terms().begin();
    *negOut = r < 0;
    LaurentPoly abs = LaurentPoly::monomial(e, ratAbs(r));
    return abs.str();
  }
  *negOut = false;
  return "(" + c.str() + ")";
}

/// Render an element over a named alphabet; terms in storage order, so the
/// output is deterministic and reparses to the same element.
inline std::string elementToString(const Element& x, const std::vector<std::string>& names) {
  if (x.isZero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : x.terms()) {
    bool neg = false;
    std::string cs = coefficientToString(c, &neg);
    os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
    bool coeffIsOne = cs == "1";
    if (w.empty()) {
      os << cs;
    } else {
      if (!coeffIsOne) os << cs << "*";
      for (std::size_t k = 0; k < w.size(); ++k) {
        if (k) os << "*";
        if (w[k] < 0 || w[k] >= (int)names.size())
          fail(Err::AlphabetMismatch, "element uses a generator without a name");
        os << names[w[k]];
      }
    }
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Presentation file format (JSON, versioned, strict).

inline nlohmann::ordered_json presentationToJson(const Presentation& p) {
  nlohmann::ordered_json j;
  j["format"] = "qpbw-presentation";
  j["version"] = 1;
  j["name"] = p.name;
  j["provenance"] = p.provenance;
  j["family"] = familyName(p.lattice.family());
  j["rank"] = p.rank;
  nlohmann::ordered_json gens = nlohmann::ordered_json::array();
  for (const auto& g : p.generators) {
    nlohmann::ordered_json e = nlohmann::ordered_json::object();
    e["id"] = g.id;
    e["name"] = g.name;
    e["e"] = g.degree.e;
    e["delta"] = g.degree.delta;
    gens.push_back(e);
  }
  j["generators"] = gens;
  nlohmann::ordered_json rels = nlohmann::ordered_json::array();
  for (const auto& r : p.relations) {
    nlohmann::ordered_json rel = nlohmann::ordered_json::array();
    for (const auto& [w, c] : r.terms()) {
      nlohmann::ordered_json term = nlohmann::ordered_json::array();
      term.push_back(c.str());
      term.push_back(w);
      rel.push_back(term);
    }
    rels.push_back(rel);
  }
  j["relations"] = rels;
  return j;
}

inline std::string presentationToText(const Presentation& p) {
  return presentationToJson(p).dump(2) + "\n";
}

namespace detail {

inline void requireKeys(const nlohmann::ordered_json& j,
                        const std::vector<std::string>& keys, const std::string& where) {
  for (const auto& k : keys)
    if (!j.contains(k)) fail(Err::FormatError, where + ": missing field '" + k + "'");
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool known = false;
    for (const auto& k : keys) known = known || it.key() == k;
    if (!known)
      fail(Err::FormatError,
           where + ": unknown field '" + it.key() + "' (format version 1)");
  }
}

}  // namespace detail

inline Presentation presentationFromText(const std::string& text) {
  nlohmann::ordered_json j;
  try {
    j = nlohmann::ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(Err::FormatError, std::string("invalid presentation file: ") + e.what());
  }
  detail::requireKeys(
      j, {"format", "version", "name", "provenance", "family", "rank", "generators", "relations"},
      "presentation");
  if (j["format"] != "qpbw-presentation") fail(Err::FormatError, "not a presentation file");
  if (j["version"] != 1)
    fail(Err::FormatError, "unsupported presentation format version " + j["version"].dump());

  Presentation p;
  try {
    p.name = j["name"].get<std::string>();
    p.provenance = j["provenance"].get<std::string>();
    p.rank = j["rank"].get<int>();
    p.lattice = RootSystemSpec::make(familyFromName(j["family"].get<std::string>()), p.rank);
    for (const auto& g : j["generators"]) {
      detail::requireKeys(g, {"id", "name", "e", "delta"}, "generator");
      GeneratorInfo info;
      info.id = g["id"].get<int>();
      info.name = g["name"].get<std::string>();
      info.degree.e = g["e"].get<std::vector<std::int64_t>>();
      info.degree.delta = g["delta"].get<std::int64_t>();
      p.generators.push_back(info);
    }
    for (const auto& rel : j["relations"]) {
      Element e;
      for (const auto& term : rel) {
        if (!term.is_array() || term.size() != 2)
          fail(Err::FormatError, "relation term must be [coefficient, [ids...]]");
        LaurentPoly c = parseCoefficient(term[0].get<std::string>());
        Word w;
        for (const auto& idv : term[1]) w.push_back(idv.get<std::int32_t>());
        e.add(w, c);
      }
      p.relations.push_back(e);
    }
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    fail(Err::FormatError, std::string("invalid presentation file: ") + e.what());
  }
  for (std::size_t i = 0; i < p.generators.size(); ++i)
    if (p.generators[i].id != (int)i)
      fail(Err::FormatError, "generator ids must be consecutive from 0");
  return p;
}

inline void writePresentationFile(const Presentation& p, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Err::FormatError, "cannot open '" + path + "' for writing");
  out << presentationToText(p);
}

inline Presentation readPresentationFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Err::FormatError, "cannot open '" + path + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return presentationFromText(ss.str());
}

// R-matrix export: sparse [s, t, i, j, coefficient] list.
inline nlohmann::ordered_json rMatrixToJson(const RMatrix& R) {
  nlohmann::ordered_json j;
  j["format"] = "qpbw-rmatrix";
  j["version"] = 1;
  j["N"] = R.N;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& [key, c] : R.entries) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (int k = 0; k < 4; ++k) row.push_back(key[k]);
    row.push_back(c.str());
    rows.push_back(row);
  }
  j["entries"] = rows;
  return j;
}

}  // namespace qpbw
