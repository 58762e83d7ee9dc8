#pragma once

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <string>
#include <vector>

#include "exhall/degen.hpp"
#include "exhall/docparse.hpp"
#include "exhall/exact.hpp"
#include "exhall/fqrep.hpp"
#include "exhall/hall.hpp"
#include "json.hpp"

namespace exhall {

using OrderedJson = nlohmann::ordered_json;

// Resolve an indecomposable label: a canonical dimension-vector string
// ("1.1.0"), an alias declared in the quiver document, or the catalog
// number "Mk" that the listing commands print. Aliases and dimension
// vectors win over catalog numbers if they ever collide.
inline int indec_id(const Catalog& cat, const std::string& label) {
  std::string dim = label;
  if (auto it = cat.q.aliases.find(label); it != cat.q.aliases.end()) dim = it->second;
  for (int i = 0; i < cat.n; ++i)
    if (dim_label(cat.ar.ind[i].dim) == dim) return i;
  if (label.size() >= 2 && label[0] == 'M' &&
      std::all_of(label.begin() + 1, label.end(), [](unsigned char ch) { return std::isdigit(ch); })) {
    const long k = std::strtol(label.c_str() + 1, nullptr, 10);
    if (k >= 1 && k <= cat.n) return int(k - 1);
  }
  throw InputError("unknown indecomposable label '" + label + "'");
}

// Parse a multiset of indecomposables: "0" for the zero object, otherwise
// labels joined by '+', each with an optional '^multiplicity'.
inline ObjClass parse_class(const Catalog& cat, const std::string& text) {
  ObjClass out = zero_class(cat.n);
  if (text == "0") return out;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t next = text.find('+', pos);
    if (next == std::string::npos) next = text.size();
    std::string part = text.substr(pos, next - pos);
    if (part.empty()) throw InputError("empty summand in object '" + text + "'");
    int mult = 1;
    if (size_t caret = part.find('^'); caret != std::string::npos) {
      const std::string m = part.substr(caret + 1);
      try {
        mult = std::stoi(m);
      } catch (const std::exception&) {
        throw InputError("bad multiplicity '" + m + "' in object '" + text + "'");
      }
      if (mult < 1) throw InputError("multiplicity must be >= 1 in object '" + text + "'");
      part = part.substr(0, caret);
    }
    out.m[indec_id(cat, part)] += mult;
    pos = next + 1;
    if (next == text.size()) break;
  }
  return out;
}

// Structure selector grammar: "max", "add", or comma-separated 1-based mesh ids.
inline ExactStructure parse_structure(const ARQuiver& ar, const std::string& text) {
  if (text == "max") return structure_max(ar);
  if (text == "add") return structure_add(ar);
  std::vector<int> ids;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t next = text.find(',', pos);
    if (next == std::string::npos) next = text.size();
    const std::string part = text.substr(pos, next - pos);
    if (part.empty()) throw InputError("empty mesh index in structure '" + text + "'");
    int idx = 0;
    try {
      idx = std::stoi(part);
    } catch (const std::exception&) {
      throw InputError("bad mesh index '" + part + "' in structure '" + text + "'");
    }
    ids.push_back(idx - 1);
    pos = next + 1;
    if (next == text.size()) break;
  }
  return structure_from_meshes(ar, ids);
}

// Valuation document: a map from indecomposable labels to non-negative integer
// weights; absent labels default to zero.
inline Valuation valuation_from_text(const Catalog& cat, const std::string& text) {
  const DocValue doc = parse_document(text);
  if (!doc.is_map()) throw InputError("valuation file must be a map of label: weight");
  Valuation out = zero_valuation(cat);
  for (const auto& [label, value] : doc.map) {
    if (!value.is_atom()) throw InputError("weight for '" + label + "' must be an integer");
    int w = 0;
    try {
      w = std::stoi(value.atom);
    } catch (const std::exception&) {
      throw InputError("weight for '" + label + "' must be an integer");
    }
    if (w < 0) throw InputError("weight for '" + label + "' must be non-negative");
    out.w[indec_id(cat, label)] = w;
  }
  return out;
}

inline OrderedJson product_json(const Catalog& cat, const ExactStructure& e, const ObjClass& a,
                                const ObjClass& c, int p, const QElt& prod) {
  OrderedJson rec;
  rec["a"] = class_label(cat, a);
  rec["c"] = class_label(cat, c);
  rec["structure"] = structure_name(e);
  rec["q"] = p;
  OrderedJson terms = OrderedJson::array();
  for (const auto& [b, coeff] : prod.terms) {
    OrderedJson t;
    t["b"] = class_label(cat, b);
    t["coeff"] = rat_str(coeff);
    terms.push_back(std::move(t));
  }
  rec["terms"] = std::move(terms);
  return rec;
}

inline OrderedJson kclass_json(const std::vector<long long>& v) {
  OrderedJson out = OrderedJson::array();
  for (long long x : v) out.push_back(x);
  return out;
}

}  // namespace exhall
