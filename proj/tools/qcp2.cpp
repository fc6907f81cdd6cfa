// Command-line front end: characteristic-number queries, table generation,
// verification suites, base-data management and the ring presentation.
//
// Exit codes: 0 success, 1 verification failure, 2 missing base data (or a
// base file that cannot be read), 3 invalid input.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qcp2/charnum.hpp"
#include "qcp2/verify.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace qcp2;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitMissingBase = 2;
constexpr int kExitInvalidInput = 3;

json key_json(const CharKey& k) {
  return json{{"d", k.d}, {"a", k.a}, {"b", k.b}, {"c", k.c}};
}

template <typename Keys>
json missing_error_json(const Keys& keys) {
  json j;
  j["error"] = "missing-base-data";
  json arr = json::array();
  for (const auto& k : keys) arr.push_back(key_json(k));
  j["missing"] = std::move(arr);
  return j;
}

json class_p2_json(const ClassP2& x) {
  json arr = json::array();
  for (const auto& c : x.c) arr.push_back(c.str());
  return arr;
}

json class_i_json(const ClassI& x) {
  json arr = json::array();
  for (const auto& c : x.t) arr.push_back(c.str());
  return arr;
}

json series_json(const MaskedSeries& s, int up_to_order) {
  json coeffs = json::object();
  for (const auto& [m, c] : s.known().terms())
    if (m.total_degree() <= up_to_order) coeffs[m.str()] = c.str();
  return coeffs;
}

BaseStore resolve_base(const std::optional<std::string>& path) {
  if (path) return load_base(*path);
  return default_base();
}

struct Options {
  std::optional<std::string> base_path;
  std::string format = "text";
  int order = 6;
};

// "d,a,b,c=p/q" -> pinned evaluation cell (diagnostic corruption drill)
std::pair<CharKey, Rational> parse_pin(const std::string& spec) {
  const auto eq = spec.find('=');
  if (eq == std::string::npos)
    throw std::invalid_argument("--pin expects d,a,b,c=value");
  CharKey key;
  if (std::sscanf(spec.substr(0, eq).c_str(), "%d,%d,%d,%d", &key.d, &key.a,
                  &key.b, &key.c) != 4)
    throw std::invalid_argument("--pin expects d,a,b,c=value");
  if (!key.dimension_ok()) throw InvalidKey(key);
  return {key, Rational::from_string(spec.substr(eq + 1))};
}

int run_charnum(const Options& opt, const CharKey& key) {
  CharNumEngine engine(resolve_base(opt.base_path));
  const auto outcome = engine.try_value(key);  // throws InvalidKey
  if (!outcome.value) {
    std::cout << missing_error_json(outcome.missing).dump(2) << "\n";
    return kExitMissingBase;
  }
  if (opt.format == "json") {
    json j = key_json(key);
    j["value"] = outcome.value->str();
    std::cout << j.dump(2) << "\n";
  } else if (opt.format == "csv") {
    std::cout << "d,a,b,c,value\n"
              << key.d << "," << key.a << "," << key.b << "," << key.c << ","
              << outcome.value->str() << "\n";
  } else {
    std::cout << outcome.value->str() << "\n";
  }
  return kExitOk;
}

int run_table(const Options& opt, int max_d, bool c0_only) {
  CharNumEngine engine(resolve_base(opt.base_path));
  json rows = json::array();
  for (int d = 1; d <= max_d; ++d) {
    const int dim = 3 * d - 1;
    for (int c = 0; 2 * c <= dim && (!c0_only || c == 0); ++c) {
      for (int a = dim - 2 * c; a >= 0; --a) {
        const CharKey key{d, a, dim - 2 * c - a, c};
        const auto outcome = engine.try_value(key);
        json row = key_json(key);
        if (outcome.value) {
          row["value"] = outcome.value->str();
        } else {
          row["value"] = "needs-base-data";
          json missing = json::array();
          for (const auto& k : outcome.missing) missing.push_back(key_json(k));
          row["missing"] = std::move(missing);
        }
        rows.push_back(std::move(row));
      }
    }
  }
  if (opt.format == "json") {
    std::cout << rows.dump(2) << "\n";
  } else {
    // csv is the default table format; "text" renders the same way.
    std::cout << "d,a,b,c,value\n";
    for (const auto& row : rows)
      std::cout << row["d"] << "," << row["a"] << "," << row["b"] << ","
                << row["c"] << "," << row["value"].get<std::string>() << "\n";
  }
  return kExitOk;
}

int report_exit(const std::vector<Report>& reports) {
  bool any_failed = false;
  bool any_checked = false;
  for (const auto& r : reports) {
    any_failed |= !r.pass;
    any_checked |= !r.nothing_checked();
  }
  if (any_failed) return kExitVerifyFailed;
  if (!any_checked) return kExitMissingBase;
  return kExitOk;
}

int run_verify(const Options& opt, const std::string& which,
               const std::string& specialize,
               const std::vector<std::string>& pins) {
  std::map<CharKey, Rational> pinned;
  for (const auto& p : pins) pinned.insert(parse_pin(p));

  std::vector<Report> reports;
  json extra;

  if (which == "quantum") {
    // pins on a = 3d-1, b = c = 0 keys corrupt the point-count provider
    PointCountProvider n_d = [pinned](int d) {
      if (auto it = pinned.find(CharKey{d, 3 * d - 1, 0, 0});
          it != pinned.end())
        return it->second;
      return kontsevich_direct(d);
    };
    const std::vector<ClassP2> deltas = {
        ClassP2::zero(), ClassP2::h(), ClassP2::h2(),
        ClassP2::h() + ClassP2::h2()};
    json delta_list = json::array();
    for (const auto& delta : deltas) {
      reports.push_back(verify_quantum_associativity(opt.order, delta, n_d));
      delta_list.push_back(class_p2_json(delta));
    }
    extra["deltas"] = std::move(delta_list);
  } else {
    CharNumEngine engine(resolve_base(opt.base_path), pinned);
    if (which == "pde") {
      PdeRestriction r = PdeRestriction::none;
      if (specialize == "points-lines") r = PdeRestriction::no_y3_y5;
      if (specialize == "points") r = PdeRestriction::no_y3_y4_y5;
      reports.push_back(verify_pde(opt.order, engine, r));
    } else if (which == "assoc") {
      reports.push_back(verify_contact_associativity(opt.order, engine));
      json basis = json::array();
      for (int i = 0; i < 6; ++i) basis.push_back(class_i_json(ClassI::basis(i)));
      extra["incidence_basis"] = std::move(basis);
    } else if (which == "presentation") {
      reports.push_back(verify_presentation(opt.order, engine));
    } else {
      std::cerr << "unknown verifier '" << which
                << "' (expected pde|assoc|quantum|presentation)\n";
      return kExitInvalidInput;
    }
  }

  if (opt.format == "json") {
    json out;
    out["reports"] = json::array();
    for (const auto& r : reports)
      out["reports"].push_back(json::parse(r.json()));
    for (auto& [k, v] : extra.items()) out[k] = v;
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& r : reports) std::cout << r.summary() << "\n";
  }
  return report_exit(reports);
}

int run_presentation(const Options& opt, bool strict, bool quantum_slice) {
  CharNumEngine engine(resolve_base(opt.base_path));
  RingPresentation xi = ring_presentation(opt.order, engine);

  if (strict) {
    std::set<CharKey> missing;
    for (const MaskedSeries* s : {&xi.xi0, &xi.xi1, &xi.xi2}) {
      const auto keys = s->missing_keys(xi.order);
      missing.insert(keys.begin(), keys.end());
    }
    if (!missing.empty()) {
      std::cout << missing_error_json(missing).dump(2) << "\n";
      return kExitMissingBase;
    }
  }
  if (quantum_slice) {
    xi.xi0 = xi.xi0.slice_zero({Var::y3, Var::y4, Var::y5});
    xi.xi1 = xi.xi1.slice_zero({Var::y3, Var::y4, Var::y5});
    xi.xi2 = xi.xi2.slice_zero({Var::y3, Var::y4, Var::y5});
  }

  json j;
  j["order"] = xi.order;
  j["xi0"] = series_json(xi.xi0, xi.order);
  j["xi1"] = series_json(xi.xi1, xi.order);
  j["xi2"] = series_json(xi.xi2, xi.order);
  json skipped = json::array();
  static const char* names[3] = {"xi0", "xi1", "xi2"};
  const MaskedSeries* series[3] = {&xi.xi0, &xi.xi1, &xi.xi2};
  for (int i = 0; i < 3; ++i)
    for (const auto& [m, keys] : series[i]->mask()) {
      if (m.total_degree() > xi.order) continue;
      json e;
      e["series"] = names[i];
      e["monomial"] = m.str();
      json ks = json::array();
      for (const auto& k : keys) ks.push_back(key_json(k));
      e["missing"] = std::move(ks);
      skipped.push_back(std::move(e));
    }
  j["skipped"] = std::move(skipped);
  std::cout << j.dump(2) << "\n";
  return kExitOk;
}

int run_base_export(const Options& opt, const std::optional<std::string>& out) {
  const BaseStore store = resolve_base(opt.base_path);
  if (out) {
    save_base(store, *out);
    return kExitOk;
  }
  json entries = json::array();
  for (const auto& [key, entry] : store.entries()) {
    json e = key_json(key);
    e["value"] = entry.value.str();
    e["source"] = entry.source;
    entries.push_back(std::move(e));
  }
  json j;
  j["schema"] = "charnum-base/1";
  j["entries"] = std::move(entries);
  std::cout << j.dump(2) << "\n";
  return kExitOk;
}

int run_base_import(const Options& opt, const std::string& file,
                    const std::optional<std::string>& out) {
  (void)opt;
  const BaseStore store = load_base(file);
  if (out) {
    save_base(store, *out);
  } else {
    std::cout << "loaded " << store.entries().size() << " entries\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computation of characteristic numbers of rational "
               "plane curves and of the deformed products they define"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--base", opt.base_path,
                 "Base-data file merged over the shipped defaults");
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--order", opt.order, "Truncation order for series builds")
      ->check(CLI::PositiveNumber);

  CharKey key;
  auto* cmd_charnum =
      app.add_subcommand("charnum", "One characteristic number N_d(a,b,c)");
  cmd_charnum->add_option("--d", key.d, "degree")->required();
  cmd_charnum->add_option("--a", key.a, "point conditions")->required();
  cmd_charnum->add_option("--b", key.b, "tangent-line conditions")->required();
  cmd_charnum->add_option("--c", key.c, "flag conditions")->required();

  int max_d = 3;
  bool c0_only = false;
  auto* cmd_table =
      app.add_subcommand("table", "All keys up to a degree bound");
  cmd_table->add_option("--max-d", max_d, "largest degree")->required();
  cmd_table->add_flag("--c0-only", c0_only, "suppress flag conditions");

  std::string which;
  std::string specialize = "none";
  std::vector<std::string> pins;
  auto* cmd_verify =
      app.add_subcommand("verify", "Run one verification suite");
  cmd_verify->add_option("which", which, "pde|assoc|quantum|presentation")
      ->required();
  cmd_verify
      ->add_option("--specialize", specialize,
                   "restrict the pde check to a classical slice")
      ->check(CLI::IsMember({"none", "points-lines", "points"}));
  cmd_verify->add_option(
      "--pin", pins,
      "corrupt one evaluation cell, d,a,b,c=value (diagnostic drill; "
      "repeatable)");

  bool strict = false;
  bool quantum_slice = false;
  auto* cmd_presentation = app.add_subcommand(
      "presentation", "Coefficients of the cubic ring relation");
  cmd_presentation->add_flag(
      "--strict", strict, "fail (exit 2) if any coefficient is undetermined");
  cmd_presentation->add_flag("--quantum-slice", quantum_slice,
                             "restrict to the y3 = y4 = y5 = 0 slice");

  auto* cmd_base = app.add_subcommand("base", "Base-data management");
  cmd_base->require_subcommand(1);
  std::optional<std::string> out_path;
  auto* cmd_export = cmd_base->add_subcommand(
      "export", "Write the merged store as a base file");
  cmd_export->add_option("--out", out_path, "output path (default stdout)");
  std::string import_file;
  auto* cmd_import =
      cmd_base->add_subcommand("import", "Validate and re-emit a base file");
  cmd_import->add_option("file", import_file, "base file")->required();
  cmd_import->add_option("--out", out_path, "output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInvalidInput;
  }

  try {
    if (cmd_charnum->parsed()) return run_charnum(opt, key);
    if (cmd_table->parsed()) return run_table(opt, max_d, c0_only);
    if (cmd_verify->parsed())
      return run_verify(opt, which, specialize, pins);
    if (cmd_presentation->parsed())
      return run_presentation(opt, strict, quantum_slice);
    if (cmd_export->parsed()) return run_base_export(opt, out_path);
    if (cmd_import->parsed())
      return run_base_import(opt, import_file, out_path);
  } catch (const InvalidKey& e) {
    std::cerr << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const MissingBaseData& e) {
    std::cout << missing_error_json(e.keys).dump(2) << "\n";
    return kExitMissingBase;
  } catch (const ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitMissingBase;
  } catch (const SchemaViolation& e) {
    std::cerr << e.what() << "\n";
    return kExitMissingBase;
  } catch (const InvalidDegree& e) {
    std::cerr << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }
  return kExitOk;
}
