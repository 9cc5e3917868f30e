#include "wonder/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "wonder/linalg.hpp"
#include "wonder/util.hpp"

namespace wonder {

using json = nlohmann::ordered_json;

namespace {

json parse_json(const std::string& text) {
  json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) fail(Err::BadInput, "malformed JSON");
  return j;
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    fail(Err::BadInput, "missing field", key);
  return j[key];
}

std::vector<std::string> string_list(const json& j, const char* what) {
  if (!j.is_array()) fail(Err::BadInput, "expected a string list", what);
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string()) fail(Err::BadInput, "expected a string list", what);
    out.push_back(e.get<std::string>());
  }
  return out;
}

long long int_entry(const json& j, const char* what) {
  if (!j.is_number_integer())
    fail(Err::BadInput, "expected an integer", what);
  return j.get<long long>();
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string save_lattice(const LatticeFile& f) {
  json j;
  j["elements"] = f.l.p.labels;
  auto pairs = f.l.p.cover_pairs();
  std::sort(pairs.begin(), pairs.end());
  json covers = json::array();
  for (const auto& [lo, hi] : pairs) covers.push_back({lo, hi});
  j["covers"] = std::move(covers);
  if (f.codim) {
    if (static_cast<int>(f.codim->size()) != f.l.n())
      fail(Err::BadInput, "codim list does not match element count");
    json cd = json::object();
    for (int i = 0; i < f.l.n(); ++i)
      cd[f.l.label(i)] = (*f.codim)[i].convert_to<long long>();
    j["codim"] = std::move(cd);
  }
  if (f.building) j["building"] = *f.building;
  return dump(j);
}

LatticeFile load_lattice(const std::string& text) {
  json j = parse_json(text);
  LatticeFile out;
  auto labels = string_list(field(j, "elements"), "elements");
  std::set<std::string> seen(labels.begin(), labels.end());
  if (seen.size() != labels.size())
    fail(Err::BadInput, "duplicate element label");
  const json& covers = field(j, "covers");
  if (!covers.is_array()) fail(Err::BadInput, "covers must be a list");
  std::vector<std::pair<std::string, std::string>> rels;
  for (const auto& c : covers) {
    if (!c.is_array() || c.size() != 2 || !c[0].is_string() ||
        !c[1].is_string())
      fail(Err::BadInput, "each cover must be a [lower, upper] pair");
    if (!seen.count(c[0].get<std::string>()) ||
        !seen.count(c[1].get<std::string>()))
      fail(Err::BadInput, "cover mentions an unknown element",
           c[0].get<std::string>() + "," + c[1].get<std::string>());
    rels.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
  }
  out.l = build_semilattice(labels, rels);
  if (j.contains("codim")) {
    const json& cd = j["codim"];
    if (!cd.is_object()) fail(Err::BadInput, "codim must be an object");
    std::vector<Int> v(labels.size());
    for (size_t i = 0; i < labels.size(); ++i) {
      if (!cd.contains(labels[i]))
        fail(Err::BadInput, "codim missing an element", labels[i]);
      v[i] = Int(int_entry(cd[labels[i]], "codim"));
    }
    if (cd.size() != labels.size())
      fail(Err::BadInput, "codim mentions an unknown element");
    out.codim = std::move(v);
  }
  if (j.contains("building")) {
    auto b = string_list(j["building"], "building");
    for (const auto& lbl : b)
      if (!seen.count(lbl))
        fail(Err::BadInput, "building set mentions an unknown element", lbl);
    out.building = std::move(b);
  }
  return out;
}

std::string save_arrangement(const QSubspaceArrangement& a) {
  json j;
  j["dim"] = a.ambient;
  json subs = json::array();
  for (const auto& s : a.subspaces) {
    json rows = json::array();
    for (int r = 0; r < s.eq.rows; ++r) {
      json row = json::array();
      for (int c = 0; c < s.eq.cols; ++c) row.push_back(rat_to_string(s.eq.at(r, c)));
      rows.push_back(std::move(row));
    }
    subs.push_back(json{{"equations", std::move(rows)}});
  }
  j["subspaces"] = std::move(subs);
  return dump(j);
}

QSubspaceArrangement load_arrangement(const std::string& text) {
  json j = parse_json(text);
  long long dim = int_entry(field(j, "dim"), "dim");
  if (dim < 1 || dim > 64) fail(Err::BadInput, "dim out of range");
  QSubspaceArrangement a;
  a.ambient = static_cast<int>(dim);
  const json& subs = field(j, "subspaces");
  if (!subs.is_array()) fail(Err::BadInput, "subspaces must be a list");
  for (const auto& s : subs) {
    const json& eq = field(s, "equations");
    if (!eq.is_array()) fail(Err::BadInput, "equations must be a list");
    std::vector<std::vector<Rat>> rows;
    for (const auto& r : eq) {
      auto entries = string_list(r, "equation row");
      if (static_cast<long long>(entries.size()) != dim)
        fail(Err::BadInput, "equation row has wrong length");
      std::vector<Rat> row;
      for (const auto& e : entries) row.push_back(rat_from_string(e));
      rows.push_back(std::move(row));
    }
    a.subspaces.push_back(subspace_from_equations(a.ambient, rows));
  }
  return a;
}

std::string save_complex(const SimplicialComplex& k) {
  json j;
  j["vertices"] = k.vertices;
  auto fs = k.facets();
  std::sort(fs.begin(), fs.end());
  j["facets"] = fs;
  return dump(j);
}

SimplicialComplex load_complex(const std::string& text) {
  json j = parse_json(text);
  auto verts = string_list(field(j, "vertices"), "vertices");
  std::set<std::string> seen(verts.begin(), verts.end());
  if (seen.size() != verts.size()) fail(Err::BadInput, "duplicate vertex label");
  const json& fs = field(j, "facets");
  if (!fs.is_array()) fail(Err::BadInput, "facets must be a list");
  std::vector<std::vector<int>> faces;
  for (const auto& f : fs) {
    if (!f.is_array()) fail(Err::BadInput, "each facet must be an index list");
    std::vector<int> face;
    for (const auto& v : f) {
      long long idx = int_entry(v, "facet entry");
      if (idx < 0 || idx >= static_cast<long long>(verts.size()))
        fail(Err::BadInput, "facet index out of range");
      face.push_back(static_cast<int>(idx));
    }
    faces.push_back(std::move(face));
  }
  return make_complex(verts, faces);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Err::BadInput, "cannot read file", path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(Err::BadInput, "cannot write file", path);
  out << text;
  if (!out) fail(Err::BadInput, "write failed", path);
}

}  // namespace wonder
