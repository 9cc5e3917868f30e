// Command-line front end; talks to the library exclusively through the C API.
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wonder_c.h"

using json = nlohmann::ordered_json;

namespace {

int read_text_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "cannot read file: " << path << "\n";
    return 2;
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return 0;
}

// Prints the C-API error and maps the status to the process exit code
// (1 = a checked property failed, 2 = malformed input).
int report_error(wonder_status st) {
  std::cerr << wonder_last_error() << "\n";
  return static_cast<int>(st);
}

std::string take(char* s) {
  std::string out = s ? s : "";
  wonder_string_free(s);
  return out;
}

// ---- text renderings of the JSON payloads ----

void print_lattice_text(const std::string& text) {
  json j = json::parse(text);
  std::cout << "elements:";
  for (const auto& e : j["elements"]) std::cout << " " << e.get<std::string>();
  std::cout << "\n";
  for (const auto& c : j["covers"])
    std::cout << "cover: " << c[0].get<std::string>() << " "
              << c[1].get<std::string>() << "\n";
  if (j.contains("codim"))
    for (const auto& [k, v] : j["codim"].items())
      std::cout << "codim: " << k << " " << v.get<long long>() << "\n";
  if (j.contains("building")) {
    std::cout << "building:";
    for (const auto& e : j["building"])
      std::cout << " " << e.get<std::string>();
    std::cout << "\n";
  }
}

void print_complex_text(const std::string& text) {
  json j = json::parse(text);
  std::cout << "vertices:";
  for (const auto& v : j["vertices"]) std::cout << " " << v.get<std::string>();
  std::cout << "\n";
  std::vector<std::string> verts;
  for (const auto& v : j["vertices"]) verts.push_back(v.get<std::string>());
  for (const auto& f : j["facets"]) {
    std::cout << "facet:";
    for (const auto& i : f) std::cout << " " << verts[i.get<size_t>()];
    std::cout << "\n";
  }
}

void print_arrangement_text(const std::string& text) {
  json j = json::parse(text);
  std::cout << "dim: " << j["dim"].get<int>() << "\n";
  for (const auto& s : j["subspaces"]) {
    std::cout << "subspace:";
    bool first_row = true;
    for (const auto& row : s["equations"]) {
      if (!first_row) std::cout << " ;";
      for (const auto& e : row) std::cout << " " << e.get<std::string>();
      first_row = false;
    }
    std::cout << "\n";
  }
}

void print_object_text(const std::string& text) {
  json j = json::parse(text);
  for (const auto& [k, v] : j.items()) {
    if (v.is_structured()) continue;  // rows etc. get their own renderings
    std::cout << k << ": "
              << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  }
}

void print_audit_text(const std::string& text) {
  json j = json::parse(text);
  print_object_text(text);
  for (const auto& r : j["rows"]) {
    std::string chain;
    for (const auto& c : r["chain"]) {
      if (!chain.empty()) chain += ">";
      chain += c.get<std::string>();
    }
    if (chain.empty()) chain = "(generic)";
    std::cout << "stratum: " << chain
              << " sample_ok=" << (r["sample_ok"].get<bool>() ? 1 : 0)
              << " stabilizer=" << r["stabilizer_order"].get<long long>()
              << " elementary_abelian_2="
              << (r["elementary_abelian_2"].get<bool>() ? 1 : 0) << "\n";
  }
}

void print_label_list_text(const std::string& text) {
  json j = json::parse(text);
  for (const auto& e : j) std::cout << e.get<std::string>() << "\n";
}

void print_label_lists_text(const std::string& text) {
  json j = json::parse(text);
  for (const auto& set : j) {
    bool first = true;
    for (const auto& e : set) {
      if (!first) std::cout << ",";
      std::cout << e.get<std::string>();
      first = false;
    }
    std::cout << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"combinatorics of wonderful models of subspace arrangements"};
  app.require_subcommand(1);

  int rc = 0;
  auto run = [&rc](std::function<int()> f) {
    return [&rc, f = std::move(f)]() { rc = f(); };
  };

  // Every leaf command takes --format.
  auto add_format = [](CLI::App* cmd, std::string* fmt) {
    *fmt = "json";
    cmd->add_option("--format", *fmt, "output format")
        ->check(CLI::IsMember({"json", "text"}));
  };

  // ---- lattice ----
  auto* lattice = app.add_subcommand("lattice", "load, validate, or generate lattices");
  lattice->require_subcommand(1);

  {
    auto* check = lattice->add_subcommand("check", "validate a lattice file and print stats");
    auto file = std::make_shared<std::string>();
    auto fmt = std::make_shared<std::string>();
    check->add_option("file", *file, "lattice JSON file")->required();
    add_format(check, fmt.get());
    check->callback(run([file, fmt]() {
      std::string text;
      if (int e = read_text_file(*file, text)) return e;
      wonder_lattice* l = nullptr;
      if (auto st = wonder_lattice_from_json(text.c_str(), &l))
        return report_error(st);
      char* out = nullptr;
      auto st = wonder_lattice_stats(l, &out);
      wonder_lattice_free(l);
      if (st) return report_error(st);
      std::string s = take(out);
      if (*fmt == "text")
        print_object_text(s);
      else
        std::cout << s;
      return 0;
    }));
  }

  {
    auto* standard = lattice->add_subcommand("standard", "emit a standard lattice");
    auto part = std::make_shared<int>(0);
    auto boole = std::make_shared<int>(0);
    auto fmt = std::make_shared<std::string>();
    auto* po = standard->add_option("--partition", *part, "partition lattice on n elements");
    auto* bo = standard->add_option("--boolean", *boole, "boolean lattice on n letters");
    po->excludes(bo);
    bo->excludes(po);
    add_format(standard, fmt.get());
    standard->callback(run([part, boole, po, bo, fmt]() {
      if (po->count() == 0 && bo->count() == 0) {
        std::cerr << "one of --partition or --boolean is required\n";
        return 2;
      }
      const char* kind = po->count() ? "partition" : "boolean";
      int n = po->count() ? *part : *boole;
      wonder_lattice* l = nullptr;
      if (auto st = wonder_lattice_standard(kind, n, &l))
        return report_error(st);
      char* out = nullptr;
      auto st = wonder_lattice_to_json(l, &out);
      wonder_lattice_free(l);
      if (st) return report_error(st);
      std::string s = take(out);
      if (*fmt == "text")
        print_lattice_text(s);
      else
        std::cout << s;
      return 0;
    }));
  }

  // ---- building ----
  auto* building = app.add_subcommand("building", "building sets of a lattice");
  building->require_subcommand(1);

  auto load_lattice_arg = [](const std::string& path, wonder_lattice** l,
                             int* err) {
    std::string text;
    if (int e = read_text_file(path, text)) {
      *err = e;
      return false;
    }
    if (auto st = wonder_lattice_from_json(text.c_str(), l)) {
      *err = report_error(st);
      return false;
    }
    return true;
  };

  {
    auto* min = building->add_subcommand("min", "minimal building set");
    auto file = std::make_shared<std::string>();
    auto fmt = std::make_shared<std::string>();
    min->add_option("file", *file, "lattice JSON file")->required();
    add_format(min, fmt.get());
    min->callback(run([file, fmt, load_lattice_arg]() {
      wonder_lattice* l = nullptr;
      int err = 0;
      if (!load_lattice_arg(*file, &l, &err)) return err;
      char* out = nullptr;
      auto st = wonder_building_min(l, &out);
      wonder_lattice_free(l);
      if (st) return report_error(st);
      std::string s = take(out);
      if (*fmt == "text")
        print_label_list_text(s);
      else
        std::cout << s;
      return 0;
    }));
  }

  {
    auto* check = building->add_subcommand("check", "test whether a set of elements is building");
    auto file = std::make_shared<std::string>();
    auto spec = std::make_shared<std::string>();
    auto fmt = std::make_shared<std::string>();
    check->add_option("file", *file, "lattice JSON file")->required();
    check->add_option("--building", *spec, "min | max | comma-separated labels")
        ->required();
    add_format(check, fmt.get());
    check->callback(run([file, spec, fmt, load_lattice_arg]() {
      wonder_lattice* l = nullptr;
      int err = 0;
      if (!load_lattice_arg(*file, &l, &err)) return err;
      char* out = nullptr;
      auto st = wonder_building_check(l, spec->c_str(), &out);
      wonder_lattice_free(l);
      if (st) return report_error(st);
      std::string s = take(out);
      json j = json::parse(s);
      bool ok = j["ok"].get<bool>();
      if (*fmt == "text") {
        if (ok)
          std::cout << "ok\n";
        else
          std::cout << "not a building set; witness: "
                    << j["witness"].get<std::string>() << "\n";
      } else {
        std::cout << s;
      }
      return ok ? 0 : 1;
    }));
  }

  {
    auto* enumerate = building->add_subcommand("enumerate", "list all building sets");
    auto file = std::make_shared<std::string>();
    auto fmt = std::make_shared<std::string>();
    enumerate->add_option("file", *file, "lattice JSON file")->required();
    add_format(enumerate, fmt.get());
    enumerate->callback(run([file, fmt, load_lattice_arg]() {
      wonder_lattice* l = nullptr;
      int err = 0;
      if (!load_lattice_arg(*file, &l, &err)) return err;
      char* out = nullptr;
      auto st = wonder_building_enumerate(l, &out);
      wonder_lattice_free(l);
      if (st) return report_error(st);
      std::string s = take(out);
      if (*fmt == "text")
        print_label_lists_text(s);
      else
        std::cout << s;
      return 0;
    }));
  }

  // ---- nested ----
  auto* nested = app.add_subcommand("nested", "nested-set complexes");
  nested->require_subcommand(1);
  {
    auto* complex_cmd = nested->add_subcommand("complex", "emit the nested-set complex");
    auto file = std::make_shared<std::string>();
    auto spec = std::make_shared<std::string>();
    auto strip = std::make_shared<bool>(false);
    auto fmt = std::make_shared<std::string>();
    complex_cmd->add_option("file", *file, "lattice JSON file")->required();
    complex_cmd
        ->add_option("--building", *spec, "min | max | comma-separated labels")
        ->required();
    complex_cmd->add_flag("--strip-top", *strip,
                          "delete the maximal lattice elements from the complex");
    add_format(complex_cmd, fmt.get());
    complex_cmd->callback(run([file, spec, strip, fmt, load_lattice_arg]() {
      wonder_lattice* l = nullptr;
      int err = 0;
      if (!load_lattice_arg(*file, &l, &err)) return err;
      char* out = nullptr;
      auto st = wonder_nested_complex(l, spec->c_str(), *strip ? 1 : 0, &out);
      wonder_lattice_free(l);
      if (st) return report_error(st);
      std::string s = take(out);
      if (*fmt == "text")
        print_complex_text(s);
      else
        std::cout << s;
      return 0;
    }));
  }

  // ---- blowup ----
  {
    auto* blowup = app.add_subcommand("blowup", "blow up one element or resolve along a building set");
    auto file = std::make_shared<std::string>();
    auto element = std::make_shared<std::string>();
    auto spec = std::make_shared<std::string>();
    auto order = std::make_shared<std::string>();
    auto verify = std::make_shared<bool>(false);
    auto fmt = std::make_shared<std::string>();
    blowup->add_option("file", *file, "lattice JSON file")->required();
    auto* eo = blowup->add_option("--element", *element, "blow up this one element");
    auto* bo = blowup->add_option("--building", *spec,
                                  "resolve along this building set");
    eo->excludes(bo);
    bo->excludes(eo);
    blowup->add_option("--order", *order,
                       "comma-separated blowup order (default: rank descending)");
    blowup->add_flag("--verify", *verify,
                     "check the result against the nested-set face poset");
    add_format(blowup, fmt.get());
    blowup->callback(run([file, element, spec, order, verify, fmt, eo, bo,
                          load_lattice_arg]() {
      if (eo->count() == 0 && bo->count() == 0) {
        std::cerr << "one of --element or --building is required\n";
        return 2;
      }
      wonder_lattice* l = nullptr;
      int err = 0;
      if (!load_lattice_arg(*file, &l, &err)) return err;
      wonder_lattice* result = nullptr;
      wonder_status st;
      if (eo->count()) {
        st = wonder_blowup_element(l, element->c_str(), &result);
      } else {
        st = wonder_resolve(l, spec->c_str(),
                            order->empty() ? nullptr : order->c_str(),
                            *verify ? 1 : 0, &result);
      }
      wonder_lattice_free(l);
      if (st) return report_error(st);
      if (bo->count() && *verify)
        std::cerr << "verify: result is isomorphic to the face poset of the "
                     "nested-set complex\n";
      char* out = nullptr;
      st = wonder_lattice_to_json(result, &out);
      wonder_lattice_free(result);
      if (st) return report_error(st);
      std::string s = take(out);
      if (*fmt == "text")
        print_lattice_text(s);
      else
        std::cout << s;
      return 0;
    }));
  }

  // ---- algebra ----
  {
    auto* algebra = app.add_subcommand("algebra", "presentation, basis, and series of the nested-set ring");
    auto what = std::make_shared<std::string>();
    auto file = std::make_shared<std::string>();
    auto spec = std::make_shared<std::string>();
    auto doubled = std::make_shared<bool>(false);
    algebra->add_option("what", *what, "presentation | groebner | basis | hilbert")
        ->required()
        ->check(CLI::IsMember({"presentation", "groebner", "basis", "hilbert"}));
    algebra->add_option("file", *file, "lattice JSON file")->required();
    algebra
        ->add_option("--building", *spec, "min | max | comma-separated labels")
        ->required();
    algebra->add_flag("--doubled", *doubled, "report doubled (even) degrees");
    algebra->callback(run([what, file, spec, doubled, load_lattice_arg]() {
      wonder_lattice* l = nullptr;
      int err = 0;
      if (!load_lattice_arg(*file, &l, &err)) return err;
      char* out = nullptr;
      auto st = wonder_algebra(l, spec->c_str(), what->c_str(),
                               *doubled ? 1 : 0, &out);
      wonder_lattice_free(l);
      if (st) return report_error(st);
      std::cout << take(out);
      return 0;
    }));
  }

  // ---- fan ----
  {
    auto* fan = app.add_subcommand("fan", "emit the nested-set fan");
    auto file = std::make_shared<std::string>();
    auto spec = std::make_shared<std::string>();
    auto verify = std::make_shared<bool>(false);
    fan->add_option("file", *file, "lattice JSON file")->required();
    fan->add_option("--building", *spec, "min | max | comma-separated labels")
        ->required();
    fan->add_flag("--verify", *verify, "run the pairwise intersection check");
    fan->callback(run([file, spec, verify, load_lattice_arg]() {
      wonder_lattice* l = nullptr;
      int err = 0;
      if (!load_lattice_arg(*file, &l, &err)) return err;
      char* out = nullptr;
      auto st = wonder_fan(l, spec->c_str(), *verify ? 1 : 0, &out);
      wonder_lattice_free(l);
      if (st) return report_error(st);
      if (*verify) std::cerr << "verify: pairwise cone intersections agree\n";
      std::cout << take(out);
      return 0;
    }));
  }

  // ---- arrangement ----
  auto* arrangement = app.add_subcommand("arrangement", "subspace arrangements and their intersection lattices");
  arrangement->require_subcommand(1);

  auto load_arrangement_arg = [](const std::string& path,
                                 wonder_arrangement** a, int* err) {
    std::string text;
    if (int e = read_text_file(path, text)) {
      *err = e;
      return false;
    }
    if (auto st = wonder_arrangement_from_json(text.c_str(), a)) {
      *err = report_error(st);
      return false;
    }
    return true;
  };

  {
    auto* lat = arrangement->add_subcommand("lattice", "intersection lattice with codimensions");
    auto file = std::make_shared<std::string>();
    auto fmt = std::make_shared<std::string>();
    lat->add_option("file", *file, "arrangement JSON file")->required();
    add_format(lat, fmt.get());
    lat->callback(run([file, fmt, load_arrangement_arg]() {
      wonder_arrangement* a = nullptr;
      int err = 0;
      if (!load_arrangement_arg(*file, &a, &err)) return err;
      char* out = nullptr;
      auto st = wonder_arrangement_lattice(a, &out);
      wonder_arrangement_free(a);
      if (st) return report_error(st);
      std::string s = take(out);
      if (*fmt == "text")
        print_lattice_text(s);
      else
        std::cout << s;
      return 0;
    }));
  }

  {
    auto* braid = arrangement->add_subcommand("braid", "the braid arrangement in Q^n");
    auto n = std::make_shared<int>(0);
    auto fmt = std::make_shared<std::string>();
    braid->add_option("n", *n, "number of coordinates")->required();
    add_format(braid, fmt.get());
    braid->callback(run([n, fmt]() {
      wonder_arrangement* a = nullptr;
      if (auto st = wonder_braid(*n, &a)) return report_error(st);
      char* out = nullptr;
      auto st = wonder_arrangement_to_json(a, &out);
      wonder_arrangement_free(a);
      if (st) return report_error(st);
      std::string s = take(out);
      if (*fmt == "text")
        print_arrangement_text(s);
      else
        std::cout << s;
      return 0;
    }));
  }

  {
    auto* trunc = arrangement->add_subcommand("truncate", "inclusion-maximal flats of codimension >= k");
    auto file = std::make_shared<std::string>();
    auto k = std::make_shared<int>(0);
    auto fmt = std::make_shared<std::string>();
    trunc->add_option("file", *file, "arrangement JSON file")->required();
    trunc->add_option("--codim", *k, "codimension threshold")->required();
    add_format(trunc, fmt.get());
    trunc->callback(run([file, k, fmt, load_arrangement_arg]() {
      wonder_arrangement* a = nullptr;
      int err = 0;
      if (!load_arrangement_arg(*file, &a, &err)) return err;
      wonder_arrangement* t = nullptr;
      auto st = wonder_truncate(a, *k, &t);
      wonder_arrangement_free(a);
      if (st) return report_error(st);
      char* out = nullptr;
      st = wonder_arrangement_to_json(t, &out);
      wonder_arrangement_free(t);
      if (st) return report_error(st);
      std::string s = take(out);
      if (*fmt == "text")
        print_arrangement_text(s);
      else
        std::cout << s;
      return 0;
    }));
  }

  // ---- abelianize ----
  {
    auto* ab = app.add_subcommand("abelianize", "stabilizer audit over sampled model points");
    auto group = std::make_shared<std::string>();
    auto dim = std::make_shared<int>(0);
    auto samples = std::make_shared<int>(5);
    auto seed = std::make_shared<unsigned long long>(0);
    auto fmt = std::make_shared<std::string>();
    ab->add_option("--group", *group, "generators in cycle notation, comma-separated")
        ->required();
    ab->add_option("--dim", *dim, "number of permuted coordinates")->required();
    ab->add_option("--samples", *samples, "samples per stratum (default 5)");
    ab->add_option("--seed", *seed, "random seed (default 0)");
    add_format(ab, fmt.get());
    ab->callback(run([group, dim, samples, seed, fmt]() {
      char* out = nullptr;
      auto st = wonder_abelianize(group->c_str(), *dim, *samples, *seed, &out);
      if (st) return report_error(st);
      std::string s = take(out);
      if (*fmt == "text")
        print_audit_text(s);
      else
        std::cout << s;
      return 0;
    }));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  return rc;
}
