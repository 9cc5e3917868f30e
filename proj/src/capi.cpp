#include "wonder_c.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "wonder/algebra.hpp"
#include "wonder/arrangement.hpp"
#include "wonder/blowup.hpp"
#include "wonder/building.hpp"
#include "wonder/fan.hpp"
#include "wonder/group.hpp"
#include "wonder/io.hpp"
#include "wonder/poset.hpp"
#include "wonder/util.hpp"

using json = nlohmann::ordered_json;

struct wonder_lattice {
  wonder::MeetSemilattice l;
  std::optional<std::vector<wonder::Int>> codim;
  std::optional<std::vector<std::string>> building;
};

struct wonder_arrangement {
  wonder::QSubspaceArrangement a;
};

namespace {

thread_local std::string g_last_error;

wonder_status status_of(wonder::Err e) {
  switch (e) {
    case wonder::Err::BadInput:
    case wonder::Err::BadCycle:
    case wonder::Err::ElementOutOfRange:
      return WONDER_ERR_BAD_INPUT;
    default:
      return WONDER_ERR_DOMAIN;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename F>
wonder_status run(F&& f) {
  try {
    f();
    g_last_error.clear();
    return WONDER_OK;
  } catch (const wonder::WonderError& e) {
    g_last_error = std::string(wonder::err_name(e.code)) + ": " + e.what();
    if (!e.witness.empty()) g_last_error += " [" + e.witness + "]";
    return status_of(e.code);
  } catch (const std::exception& e) {
    g_last_error = std::string("error: ") + e.what();
    return WONDER_ERR_BAD_INPUT;
  }
}

void require(bool cond, const char* msg) {
  if (!cond) wonder::fail(wonder::Err::BadInput, msg);
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  for (auto& t : out) {
    while (!t.empty() && t.front() == ' ') t.erase(t.begin());
    while (!t.empty() && t.back() == ' ') t.pop_back();
  }
  return out;
}

// "min", "max", or a comma-separated label list -> carrier indices.
std::vector<int> carrier_from_spec(const wonder::MeetSemilattice& l,
                                   const std::string& spec) {
  if (spec == "min") return wonder::minimal_building_set(l).carrier;
  if (spec == "max") {
    std::vector<int> all;
    for (int i = 0; i < l.n(); ++i)
      if (i != l.bottom) all.push_back(i);
    return all;
  }
  std::vector<int> out;
  for (const auto& label : split_commas(spec)) out.push_back(l.at(label));
  std::sort(out.begin(), out.end());
  return out;
}

// Parses the selector string and validates it as a building set.
wonder::BuildingSet building_from_spec(const wonder::MeetSemilattice& l,
                                       const std::string& spec) {
  auto carrier = carrier_from_spec(l, spec);
  auto check = wonder::is_building_set(l, carrier);
  if (!check.ok)
    wonder::fail(wonder::Err::NotABuildingSet,
                 "the given set is not a building set",
                 check.witness >= 0 ? l.label(check.witness) : "");
  return *check.building;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// Splits a generator list on commas outside parentheses, e.g.
// "(1 2)(3 4),(1 3)" -> two permutations.
std::vector<std::string> split_generators(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

void push_rat_vector(json& arr, const std::vector<wonder::Rat>& v) {
  json row = json::array();
  for (const auto& r : v) row.push_back(wonder::rat_to_string(r));
  arr.push_back(std::move(row));
}

}  // namespace

extern "C" {

const char* wonder_last_error(void) { return g_last_error.c_str(); }

void wonder_string_free(char* s) { std::free(s); }

wonder_status wonder_lattice_from_json(const char* text, wonder_lattice** out) {
  return run([&] {
    require(text && out, "null argument");
    auto f = wonder::load_lattice(text);
    *out = new wonder_lattice{std::move(f.l), std::move(f.codim),
                              std::move(f.building)};
  });
}

wonder_status wonder_lattice_standard(const char* kind, int n,
                                      wonder_lattice** out) {
  return run([&] {
    require(kind && out, "null argument");
    *out = new wonder_lattice{wonder::standard_lattice(kind, n), std::nullopt,
                              std::nullopt};
  });
}

void wonder_lattice_free(wonder_lattice* l) { delete l; }

wonder_status wonder_lattice_to_json(const wonder_lattice* l, char** out_json) {
  return run([&] {
    require(l && out_json, "null argument");
    *out_json = dup_string(
        wonder::save_lattice(wonder::LatticeFile{l->l, l->codim, l->building}));
  });
}

wonder_status wonder_lattice_stats(const wonder_lattice* l, char** out_json) {
  return run([&] {
    require(l && out_json, "null argument");
    json j;
    j["elements"] = l->l.n();
    j["atoms"] = static_cast<int>(l->l.atoms.size());
    bool has_top = l->l.top.has_value();
    j["has_top"] = has_top;
    if (has_top) j["mobius"] = wonder::mobius(l->l).str();
    *out_json = dup_string(dump(j));
  });
}

wonder_status wonder_building_min(const wonder_lattice* l, char** out_json) {
  return run([&] {
    require(l && out_json, "null argument");
    auto g = wonder::minimal_building_set(l->l);
    json j = json::array();
    for (int x : g.carrier) j.push_back(l->l.label(x));
    *out_json = dup_string(dump(j));
  });
}

wonder_status wonder_building_check(const wonder_lattice* l, const char* spec,
                                    char** out_json) {
  return run([&] {
    require(l && spec && out_json, "null argument");
    auto carrier = carrier_from_spec(l->l, spec);
    auto check = wonder::is_building_set(l->l, carrier);
    json j;
    j["ok"] = check.ok;
    j["witness"] = check.witness >= 0 ? l->l.label(check.witness) : "";
    json factors = json::object();
    if (check.ok) {
      for (int i = 0; i < l->l.n(); ++i) {
        if (i == l->l.bottom) continue;
        json fs = json::array();
        for (int f : check.building->factor_map[i]) fs.push_back(l->l.label(f));
        factors[l->l.label(i)] = std::move(fs);
      }
    }
    j["factors"] = std::move(factors);
    *out_json = dup_string(dump(j));
  });
}

wonder_status wonder_building_enumerate(const wonder_lattice* l,
                                        char** out_json) {
  return run([&] {
    require(l && out_json, "null argument");
    auto all = wonder::enumerate_building_sets(l->l);
    json j = json::array();
    for (const auto& g : all) {
      json one = json::array();
      for (int x : g.carrier) one.push_back(l->l.label(x));
      j.push_back(std::move(one));
    }
    *out_json = dup_string(dump(j));
  });
}

wonder_status wonder_nested_complex(const wonder_lattice* l, const char* spec,
                                    int strip_top, char** out_json) {
  return run([&] {
    require(l && spec && out_json, "null argument");
    auto g = building_from_spec(l->l, spec);
    auto k = wonder::nested_set_complex(l->l, g);
    if (strip_top) {
      for (int m : l->l.p.maximal_elements()) {
        const std::string& label = l->l.label(m);
        auto it = std::find(k.vertices.begin(), k.vertices.end(), label);
        if (it == k.vertices.end()) continue;
        k = wonder::delete_vertex(
            k, static_cast<int>(it - k.vertices.begin()));
      }
    }
    *out_json = dup_string(wonder::save_complex(k));
  });
}

wonder_status wonder_blowup_element(const wonder_lattice* l, const char* label,
                                    wonder_lattice** out) {
  return run([&] {
    require(l && label && out, "null argument");
    auto r = wonder::combinatorial_blowup(l->l, l->l.at(label));
    *out = new wonder_lattice{std::move(r.l), std::nullopt, std::nullopt};
  });
}

wonder_status wonder_resolve(const wonder_lattice* l, const char* spec,
                             const char* order, int verify,
                             wonder_lattice** out) {
  return run([&] {
    require(l && spec && out, "null argument");
    auto carrier = carrier_from_spec(l->l, spec);
    std::vector<int> ord;
    if (order && *order)
      for (const auto& label : split_commas(order)) ord.push_back(l->l.at(label));
    auto resolved = wonder::resolve(l->l, carrier, ord);
    if (verify) {
      auto check = wonder::is_building_set(l->l, carrier);
      auto fp =
          wonder::face_poset(wonder::nested_set_complex(l->l, *check.building));
      if (!wonder::poset_isomorphic(resolved.p, fp.p))
        wonder::fail(wonder::Err::CheckDisagreement,
                     "resolution is not isomorphic to the face poset of the "
                     "nested-set complex");
    }
    *out = new wonder_lattice{std::move(resolved), std::nullopt, std::nullopt};
  });
}

wonder_status wonder_algebra(const wonder_lattice* l, const char* spec,
                             const char* what, int doubled, char** out_text) {
  return run([&] {
    require(l && spec && what && out_text, "null argument");
    auto g = building_from_spec(l->l, spec);
    std::string w = what;
    std::ostringstream os;
    if (w == "presentation") {
      auto pres = wonder::algebra_presentation(l->l, g);
      os << "variables:";
      for (const auto& v : pres.ctx.var_labels) os << " " << v;
      os << "\n";
      os << "monomial relations:\n";
      for (const auto& m : pres.monomial_relations) {
        wonder::Poly p;
        p[m] = 1;
        os << "  " << wonder::poly_to_string(p, pres.ctx.var_labels) << "\n";
      }
      os << "linear relations:\n";
      for (size_t i = 0; i < pres.linear_relations.size(); ++i)
        os << "  atom " << pres.atom_labels[i] << ": "
           << wonder::poly_to_string(pres.linear_relations[i],
                                     pres.ctx.var_labels)
           << "\n";
    } else if (w == "groebner") {
      auto gb = wonder::groebner_basis(l->l, g);
      os << "order: " << gb.order_descriptor << "\n";
      os << "members: " << gb.members.size() << "\n";
      for (const auto& p : gb.members)
        os << "  " << wonder::poly_to_string(p, gb.ctx.var_labels) << "\n";
    } else if (w == "basis") {
      auto b = wonder::monomial_basis(l->l, g);
      for (size_t d = 0; d < b.by_degree.size(); ++d) {
        os << "degree " << (doubled ? 2 * d : d) << ":";
        for (const auto& m : b.by_degree[d]) {
          wonder::Poly p;
          p[m] = 1;
          os << " " << wonder::poly_to_string(p, b.ctx.var_labels);
        }
        os << "\n";
      }
    } else if (w == "hilbert") {
      auto h = wonder::hilbert_series(l->l, g);
      bool first = true;
      for (size_t d = 0; d < h.size(); ++d) {
        if (!first) os << " ";
        if (doubled && d > 0) os << "0 ";
        os << h[d].str();
        first = false;
      }
      os << "\n";
    } else {
      wonder::fail(wonder::Err::BadInput,
                   "what must be presentation|groebner|basis|hilbert", w);
    }
    *out_text = dup_string(os.str());
  });
}

wonder_status wonder_fan(const wonder_lattice* l, const char* spec, int verify,
                         char** out_text) {
  return run([&] {
    require(l && spec && out_text, "null argument");
    auto g = building_from_spec(l->l, spec);
    auto fan = wonder::nested_fan(l->l, g);
    if (verify) {
      auto check = wonder::verify_fan(fan);
      if (!check.ok)
        wonder::fail(wonder::Err::CheckDisagreement, check.detail,
                     "cones " + std::to_string(check.cone_a) + "," +
                         std::to_string(check.cone_b));
    }
    *out_text = dup_string(wonder::export_fan(fan));
  });
}

wonder_status wonder_arrangement_from_json(const char* text,
                                           wonder_arrangement** out) {
  return run([&] {
    require(text && out, "null argument");
    *out = new wonder_arrangement{wonder::load_arrangement(text)};
  });
}

void wonder_arrangement_free(wonder_arrangement* a) { delete a; }

wonder_status wonder_arrangement_to_json(const wonder_arrangement* a,
                                         char** out_json) {
  return run([&] {
    require(a && out_json, "null argument");
    *out_json = dup_string(wonder::save_arrangement(a->a));
  });
}

wonder_status wonder_braid(int n, wonder_arrangement** out) {
  return run([&] {
    require(out != nullptr, "null argument");
    *out = new wonder_arrangement{wonder::braid_arrangement(n)};
  });
}

wonder_status wonder_arrangement_lattice(const wonder_arrangement* a,
                                         char** out_json) {
  return run([&] {
    require(a && out_json, "null argument");
    auto il = wonder::intersection_lattice(a->a);
    std::vector<wonder::Int> codim(il.codim.begin(), il.codim.end());
    *out_json = dup_string(wonder::save_lattice(
        wonder::LatticeFile{il.l, std::move(codim), std::nullopt}));
  });
}

wonder_status wonder_truncate(const wonder_arrangement* a, int k,
                              wonder_arrangement** out) {
  return run([&] {
    require(a && out, "null argument");
    require(k >= 0, "k must be nonnegative");
    auto il = wonder::intersection_lattice(a->a);
    *out = new wonder_arrangement{wonder::truncate(il, k)};
  });
}

wonder_status wonder_abelianize(const char* cycles, int dim, int samples,
                                unsigned long long seed, char** out_json) {
  return run([&] {
    require(cycles && out_json, "null argument");
    require(dim >= 1 && dim <= 64, "dim out of range");
    std::vector<wonder::Perm> gens;
    for (const auto& tok : split_generators(cycles))
      gens.push_back(wonder::parse_cycles(tok, dim));
    auto g = wonder::perm_group(dim, gens);
    auto report = wonder::abelianization_audit(g, samples, seed);
    json j;
    j["group_order"] = static_cast<long long>(g.elements.size());
    j["strata"] = report.strata;
    j["sampled"] = report.sampled;
    j["exhausted"] = report.exhausted;
    j["all_elementary_abelian_2"] = report.all_elementary_abelian_2;
    json rows = json::array();
    for (const auto& r : report.rows) {
      json row;
      row["chain"] = r.chain;
      row["sample_ok"] = r.sample_ok;
      row["sampling_exhausted"] = r.sampling_exhausted;
      json x = json::array();
      for (const auto& c : r.x) x.push_back(wonder::rat_to_string(c));
      row["x"] = std::move(x);
      json lines = json::array();
      for (const auto& line : r.lines) push_rat_vector(lines, line);
      row["lines"] = std::move(lines);
      row["stabilizer_order"] =
          static_cast<long long>(r.stabilizer_elements.size());
      row["stabilizer"] = r.stabilizer_elements;
      row["elementary_abelian_2"] = r.elementary_abelian_2;
      rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    *out_json = dup_string(dump(j));
  });
}

}  // extern "C"
