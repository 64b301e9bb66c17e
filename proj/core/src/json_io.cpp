#include "scottmax/json_io.hpp"

#include <set>

#include "json.hpp"

namespace scottmax {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

json parse_document(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what(), e.byte);
  }
}

void only_keys(const json& obj, std::initializer_list<const char*> allowed, const std::string& where) {
  if (!obj.is_object()) throw InputError(where + ": expected an object");
  std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [key, _] : obj.items())
    if (!ok.contains(key)) throw InputError(where + ": unknown key '" + key + "'");
}

const json& require(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw InputError(where + ": missing '" + key + "'");
  return *it;
}

Nat positive(const json& v, const std::string& where) {
  if (!v.is_number_unsigned() || v.get<Nat>() == 0) throw InputError(where + ": expected a positive integer");
  return v.get<Nat>();
}

std::string text_of(const json& v, const std::string& where) {
  if (!v.is_string()) throw InputError(where + ": expected a string");
  return v.get<std::string>();
}

GenFamily gen_family(const json& f, const std::string& where) {
  const std::string kind = text_of(require(f, "kind", where), where + ".kind");
  if (kind == "single") {
    only_keys(f, {"kind", "elem"}, where);
    return GenFamily::single(parse_elem(text_of(require(f, "elem", where), where + ".elem")));
  }
  if (kind == "x_rank_at_least" || kind == "sigma_len_at_least" || kind == "star_len_at_least") {
    only_keys(f, {"kind", "k"}, where);
    const Nat k = positive(require(f, "k", where), where + ".k");
    if (kind == "x_rank_at_least") return GenFamily::x_rank_at_least(k);
    if (kind == "sigma_len_at_least") return GenFamily::sigma_len_at_least(k);
    return GenFamily::star_len_at_least(k);
  }
  if (kind == "x_column") {
    only_keys(f, {"kind", "m", "min_n"}, where);
    return GenFamily::x_column(positive(require(f, "m", where), where + ".m"),
                               positive(require(f, "min_n", where), where + ".min_n"));
  }
  if (kind == "explicit_list") {
    only_keys(f, {"kind", "elems"}, where);
    const json& list = require(f, "elems", where);
    if (!list.is_array()) throw InputError(where + ".elems: expected an array");
    std::vector<LElem> elems;
    for (std::size_t i = 0; i < list.size(); ++i)
      elems.push_back(parse_elem(text_of(list[i], where + ".elems[" + std::to_string(i) + "]")));
    return GenFamily::explicit_list(std::move(elems));
  }
  throw InputError(where + ": unknown family kind '" + kind + "'");
}

}  // namespace

Relation relation_from_json(std::string_view text) {
  const json doc = parse_document(text);
  only_keys(doc, {"elements", "leq"}, "poset");
  const json& elems = require(doc, "elements", "poset");
  if (!elems.is_array()) throw InputError("poset.elements: expected an array");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < elems.size(); ++i)
    labels.push_back(text_of(elems[i], "poset.elements[" + std::to_string(i) + "]"));

  Relation r(std::move(labels));
  const json& pairs = require(doc, "leq", "poset");
  if (!pairs.is_array()) throw InputError("poset.leq: expected an array");
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const std::string where = "poset.leq[" + std::to_string(i) + "]";
    if (!pairs[i].is_array() || pairs[i].size() != 2) throw InputError(where + ": expected a pair");
    r.set(r.index_of(text_of(pairs[i][0], where)), r.index_of(text_of(pairs[i][1], where)));
  }
  return r;
}

FinitePoset poset_from_json(std::string_view text) {
  Relation r = relation_from_json(text);
  r.add_reflexive();
  r.close_transitively();
  return FinitePoset(std::move(r));
}

GenFamily gen_family_from_json(std::string_view text) { return gen_family(parse_document(text), "family"); }

IndexedFamily family_from_json(std::string_view text, const std::string& fallback_name) {
  const json doc = parse_document(text);
  if (!doc.is_object()) throw InputError("family file: expected an object");
  if (doc.contains("kind")) {
    only_keys(doc, {"kind"}, "family file");
    if (text_of(doc["kind"], "family file.kind") != "canonical")
      throw InputError("family file: only the 'canonical' shorthand is supported");
    return IndexedFamily::canonical();
  }
  only_keys(doc, {"name", "opens"}, "family file");
  std::string name = doc.contains("name") ? text_of(doc["name"], "family file.name") : fallback_name;

  const json& opens = require(doc, "opens", "family file");
  if (!opens.is_array() || opens.empty()) throw InputError("family file.opens: expected a nonempty array");
  std::vector<OpenDesc> descs;
  for (std::size_t i = 0; i < opens.size(); ++i) {
    const std::string where = "opens[" + std::to_string(i) + "]";
    only_keys(opens[i], {"families"}, where);
    const json& fams = require(opens[i], "families", where);
    if (!fams.is_array() || fams.empty()) throw InputError(where + ".families: expected a nonempty array");
    std::vector<GenFamily> gf;
    for (std::size_t j = 0; j < fams.size(); ++j)
      gf.push_back(gen_family(fams[j], where + ".families[" + std::to_string(j) + "]"));
    descs.emplace_back(std::move(gf));
  }
  return IndexedFamily::from_list(std::move(name), std::move(descs));
}

std::string certificate_to_json(const DiagCertificate& cert) {
  ordered_json doc;
  doc["family"] = cert.family;
  doc["depth"] = cert.depth;
  ordered_json levels = ordered_json::array();
  for (const DiagLevel& l : cert.levels) {
    ordered_json lv;
    lv["k"] = l.k;
    lv["n"] = l.n;
    lv["gen"] = l.generator.to_string();
    levels.push_back(std::move(lv));
  }
  doc["levels"] = std::move(levels);
  doc["prefix"] = cert.prefix;
  return doc.dump();
}

DiagCertificate certificate_from_json(std::string_view text) {
  const json doc = parse_document(text);
  only_keys(doc, {"family", "depth", "levels", "prefix"}, "certificate");
  DiagCertificate cert;
  cert.family = text_of(require(doc, "family", "certificate"), "certificate.family");
  cert.depth = positive(require(doc, "depth", "certificate"), "certificate.depth");

  const json& levels = require(doc, "levels", "certificate");
  if (!levels.is_array()) throw InputError("certificate.levels: expected an array");
  for (std::size_t i = 0; i < levels.size(); ++i) {
    const std::string where = "certificate.levels[" + std::to_string(i) + "]";
    only_keys(levels[i], {"k", "n", "gen"}, where);
    cert.levels.push_back({positive(require(levels[i], "k", where), where + ".k"),
                           positive(require(levels[i], "n", where), where + ".n"),
                           parse_elem(text_of(require(levels[i], "gen", where), where + ".gen"))});
  }
  const json& prefix = require(doc, "prefix", "certificate");
  if (!prefix.is_array()) throw InputError("certificate.prefix: expected an array");
  for (std::size_t i = 0; i < prefix.size(); ++i)
    cert.prefix.push_back(positive(prefix[i], "certificate.prefix[" + std::to_string(i) + "]"));
  return cert;
}

}  // namespace scottmax
