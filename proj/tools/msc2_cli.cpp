#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "msc2/census.hpp"
#include "msc2/iso.hpp"

using json = nlohmann::ordered_json;
using namespace msc2;

namespace {

int default_workers() {
  if (const char* e = std::getenv("MSC2_WORKERS")) {
    int v = std::atoi(e);
    if (v >= 1) return v;
  }
  return 1;
}

Msc<AnyField> msc_arg(const AnyField& f, const std::string& text) {
  auto m = parse_msc(f, text);
  if (!m) throw error("bad MSC \"" + text + "\": want a1,a2,a3,a4;b1,b2,b3,b4 over " + f.desc_str());
  return *m;
}

std::string witness_str(const AnyField& f, const Mat2<AnyField>& g) {
  return f.str(g[0]) + "," + f.str(g[1]) + "," + f.str(g[2]) + "," + f.str(g[3]);
}

// Substitute p0,p1,... with the entry's display parameter names.
std::string with_names(std::string s, const std::vector<std::string>& names) {
  for (std::size_t i = names.size(); i-- > 0;) {
    std::string tok = "p" + std::to_string(i);
    std::size_t pos = 0;
    while ((pos = s.find(tok, pos)) != std::string::npos) {
      s.replace(pos, tok.size(), names[i]);
      pos += names[i].size();
    }
  }
  return s;
}

std::string entry_template(const CatalogEntry& e) {
  std::string s;
  for (int i = 0; i < 8; ++i) {
    if (i == 4)
      s += ";";
    else if (i)
      s += ",";
    s += expr_str(*e.tmpl[i]);
  }
  return with_names(s, e.param_names);
}

json census_json(const CensusReport& r) {
  json j;
  j["field"] = r.field;
  j["ext_field"] = r.ext_field;
  j["commutative"] = r.commutative;
  j["sampled"] = r.sampled;
  j["total"] = r.total;
  j["member_count"] = r.member_count;
  j["pa_count"] = r.pa_count;
  j["sweep_base"] = r.sweep_base;
  j["sweep_ext"] = r.sweep_ext;
  j["orbits"] = json::array();
  for (const auto& o : r.orbits) {
    json m = json::array();
    for (const auto& x : o.matches)
      m.push_back({{"entry", x.entry}, {"params", x.params}, {"ext_degree", x.ext_degree}});
    j["orbits"].push_back({{"rep", o.rep},
                           {"rep_code", o.rep_code},
                           {"size", o.size},
                           {"trivial", o.trivial},
                           {"matches", m}});
  }
  j["unmatched"] = r.unmatched;
  j["collisions"] = json::array();
  for (const auto& c : r.collisions)
    j["collisions"].push_back({{"orbit", c.orbit}, {"identities", c.identities}});
  return j;
}

void print_census_text(const CensusReport& r) {
  std::printf("field %s  mode %s%s\n", r.field.c_str(),
              r.commutative ? "commutative" : "jordan", r.sampled ? "  (sampled)" : "");
  std::printf("scanned %llu  members %llu  power_associative %llu\n",
              (unsigned long long)r.total, (unsigned long long)r.member_count,
              (unsigned long long)r.pa_count);
  if (r.sampled) return;
  std::printf("sweep sizes: %s %llu", r.field.c_str(), (unsigned long long)r.sweep_base);
  if (!r.ext_field.empty())
    std::printf("  %s %llu", r.ext_field.c_str(), (unsigned long long)r.sweep_ext);
  std::printf("\n");
  for (std::size_t k = 0; k < r.orbits.size(); ++k) {
    const auto& o = r.orbits[k];
    std::printf("orbit %zu: rep (%s) size %llu%s  matches [", k, o.rep.c_str(),
                (unsigned long long)o.size, o.trivial ? " TRIVIAL" : "");
    for (std::size_t i = 0; i < o.matches.size(); ++i)
      std::printf("%s%s(%s)@%d", i ? " " : "", o.matches[i].entry.c_str(),
                  o.matches[i].params.c_str(), o.matches[i].ext_degree);
    std::printf("]\n");
  }
  std::printf("UNMATCHED:");
  for (std::size_t k : r.unmatched) std::printf(" %zu", k);
  std::printf("\nCOLLISIONS:");
  for (const auto& c : r.collisions) {
    std::printf(" orbit %zu {", c.orbit);
    for (std::size_t i = 0; i < c.identities.size(); ++i)
      std::printf("%s%s", i ? " " : "", c.identities[i].c_str());
    std::printf("}");
  }
  std::printf("\n");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact classifier for two-dimensional algebras given by 2x4 structure matrices"};
  app.require_subcommand(1);

  std::string field_desc, msc_a, msc_b, out_path, format = "text";
  std::string group_name, char_name;
  int height = 4, max_ext = 2, workers = default_workers();
  std::uint64_t sample = 200000;
  bool commutative = false;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "output format: text or structured")
        ->check(CLI::IsMember({"text", "structured"}));
  };

  CLI::App* check = app.add_subcommand("check", "evaluate the defining predicates of one MSC");
  check->add_option("--field", field_desc, "field descriptor (Q, Q(sqrt:D), GF:P, GF:P^2)")
      ->required();
  check->add_option("msc", msc_a, "structure matrix a1,a2,a3,a4;b1,b2,b3,b4")->required();
  add_format(check);

  CLI::App* classify_cmd = app.add_subcommand("classify", "match one MSC against the Jordan tables");
  classify_cmd->add_option("--field", field_desc, "field descriptor")->required();
  classify_cmd->add_option("msc", msc_a, "structure matrix")->required();
  classify_cmd->add_option("--height", height, "characteristic-0 search height (default 4)");
  classify_cmd->add_option("--max-ext", max_ext, "max extension degree 1 or 2 (default 2)")
      ->check(CLI::Range(1, 2));
  classify_cmd->add_option("--workers", workers, "worker threads for finite-field scans");
  add_format(classify_cmd);

  CLI::App* iso = app.add_subcommand("iso", "search for a basis change carrying one MSC to another");
  iso->add_option("--field", field_desc, "field descriptor")->required();
  iso->add_option("a", msc_a, "source structure matrix")->required();
  iso->add_option("b", msc_b, "target structure matrix")->required();
  iso->add_option("--height", height, "characteristic-0 search height (default 4)");
  iso->add_option("--workers", workers, "worker threads for finite-field scans");
  add_format(iso);

  CLI::App* census_cmd = app.add_subcommand("census", "enumerate and classify all MSCs over a small finite field");
  census_cmd->add_option("--field", field_desc, "finite field (full run: GF:2, GF:3, GF:5)")
      ->required();
  census_cmd->add_flag("--commutative", commutative, "restrict to commutative members");
  census_cmd->add_option("--max-ext", max_ext, "max extension degree 1 or 2 (default 2)")
      ->check(CLI::Range(1, 2));
  census_cmd->add_option("--workers", workers, "worker threads");
  census_cmd->add_option("--sample", sample, "sample size for 5 < q <= 9 (default 200000)");
  census_cmd->add_option("--out", out_path, "also write the structured report to this path");
  add_format(census_cmd);

  CLI::App* catalog_cmd = app.add_subcommand("catalog", "list classification table entries");
  catalog_cmd->add_option("--group", group_name,
                          "general-closed, jordan-closed, commutative-closed, real-general, "
                          "real-jordan, commutative-real, wallace");
  catalog_cmd->add_option("--char", char_name, "not235, char2, char3, char5, real");
  add_format(catalog_cmd);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*check) {
      AnyField f = parse_field(field_desc);
      auto A = msc_arg(f, msc_a);
      bool j = is_jordan(f, A);
      bool c = is_commutative(f, A);
      bool p = is_power_associative(f, A);
      int viol = j ? 0 : first_violated(f, A);
      if (format == "structured") {
        json out = {{"field", f.desc_str()},   {"msc", msc_str(f, A)},
                    {"jordan", j},             {"violated_equation", nullptr},
                    {"commutative", c},        {"power_associative", p}};
        if (!j) out["violated_equation"] = viol;
        std::cout << out.dump(2) << "\n";
      } else {
        std::printf("jordan: %s\n", j ? "true" : "false");
        if (!j) std::printf("violated_equation: %d\n", viol);
        std::printf("commutative: %s\n", c ? "true" : "false");
        std::printf("power_associative: %s\n", p ? "true" : "false");
      }
      return 0;
    }

    if (*classify_cmd) {
      AnyField f = parse_field(field_desc);
      auto A = msc_arg(f, msc_a);
      Classification r = classify(f, A, {.height = height, .workers = workers, .max_ext = max_ext});
      if (format == "structured") {
        json out = {{"field", f.desc_str()},  {"msc", msc_str(f, A)},
                    {"resolved", r.resolved}, {"family", nullptr},
                    {"params", nullptr},      {"witness", nullptr},
                    {"witness_field", r.field}, {"ext_degree", r.ext_degree},
                    {"height", r.height}};
        if (r.resolved) {
          out["family"] = r.family;
          out["params"] = r.params;
          out["witness"] = r.witness;
        }
        std::cout << out.dump(2) << "\n";
      } else if (r.resolved) {
        std::printf("family: %s\n", r.family.c_str());
        std::printf("params: %s\n", detail::join_params(r.params).c_str());
        std::printf("witness: %s,%s,%s,%s\n", r.witness[0].c_str(), r.witness[1].c_str(),
                    r.witness[2].c_str(), r.witness[3].c_str());
        std::printf("field: %s\n", r.field.c_str());
        std::printf("ext_degree: %d\n", r.ext_degree);
      } else if (f.characteristic() == 0) {
        std::printf("unresolved at height %d\n", r.height);
      } else {
        std::printf("unresolved (no match within the field or its quadratic extension)\n");
      }
      return r.resolved ? 0 : 2;
    }

    if (*iso) {
      AnyField f = parse_field(field_desc);
      auto A = msc_arg(f, msc_a);
      auto B = msc_arg(f, msc_b);
      std::optional<Mat2<AnyField>> w;
      bool decided;
      if (f.finite()) {
        w = iso_exhaustive(f, A, B, workers);
        decided = true;
      } else {
        // Escalate so a witness of small height is found before the big boxes.
        for (int h = 1; h <= height && !w; ++h) w = iso_char0(f, A, B, h);
        decided = w.has_value();
      }
      if (format == "structured") {
        json out = {{"field", f.desc_str()}, {"a", msc_str(f, A)}, {"b", msc_str(f, B)},
                    {"found", w.has_value()}, {"decided", decided}, {"witness", nullptr},
                    {"height", nullptr}};
        if (w) out["witness"] = json::array({f.str((*w)[0]), f.str((*w)[1]), f.str((*w)[2]),
                                             f.str((*w)[3])});
        if (!f.finite()) out["height"] = height;
        std::cout << out.dump(2) << "\n";
      } else if (w) {
        std::printf("witness: %s\n", witness_str(f, *w).c_str());
      } else if (decided) {
        std::printf("none\n");
      } else {
        std::printf("none found at height %d\n", height);
      }
      return decided ? 0 : 2;
    }

    if (*census_cmd) {
      AnyField f = parse_field(field_desc);
      CensusOptions opts{.workers = workers, .max_ext = max_ext, .commutative = commutative,
                         .sample_target = sample};
      CensusReport r = std::visit(
          [&](const auto& fld) -> CensusReport {
            using T = std::decay_t<decltype(fld)>;
            if constexpr (std::is_same_v<T, PrimeField> || std::is_same_v<T, PrimeQuadField>)
              return census(fld, opts);
            else
              throw error("census needs a finite field");
          },
          f.impl());
      json j = census_json(r);
      if (!out_path.empty()) {
        std::ofstream os(out_path);
        if (!os) throw error("cannot write " + out_path);
        os << j.dump(2) << "\n";
      }
      if (format == "structured")
        std::cout << j.dump(2) << "\n";
      else
        print_census_text(r);
      return 0;
    }

    if (*catalog_cmd) {
      std::optional<Group> g;
      std::optional<Regime> reg;
      if (!group_name.empty()) {
        g = parse_group(group_name);
        if (!g) throw error("unknown group \"" + group_name + "\"");
      }
      if (!char_name.empty()) {
        reg = parse_regime(char_name);
        if (!reg) throw error("unknown characteristic regime \"" + char_name + "\"");
      }
      json out = json::array();
      std::size_t count = 0;
      for (const CatalogEntry& e : all_entries()) {
        if (g && e.group != *g) continue;
        if (reg && e.regime != *reg) continue;
        ++count;
        if (format == "structured") {
          json row = {{"id", e.id},
                      {"group", group_str(e.group)},
                      {"regime", regime_str(e.regime)},
                      {"params", e.param_names},
                      {"template", entry_template(e)},
                      {"constraints", json::array()},
                      {"identification", e.identification},
                      {"crosswalk", e.crosswalk}};
          for (const auto& c : e.constraints) row["constraints"].push_back(c.text);
          out.push_back(row);
          continue;
        }
        std::string params;
        for (std::size_t i = 0; i < e.param_names.size(); ++i)
          params += (i ? "," : "") + e.param_names[i];
        std::printf("%s(%s)  [%s/%s]  %s", e.id.c_str(), params.c_str(),
                    group_str(e.group).c_str(), regime_str(e.regime).c_str(),
                    entry_template(e).c_str());
        for (const auto& c : e.constraints) std::printf("  {%s}", c.text.c_str());
        if (!e.identification.empty()) std::printf("  ident: %s", e.identification.c_str());
        if (!e.crosswalk.empty()) std::printf("  crosswalk: %s", e.crosswalk.c_str());
        std::printf("\n");
      }
      if (format == "structured")
        std::cout << out.dump(2) << "\n";
      else
        std::printf("%zu entries\n", count);
      return 0;
    }
  } catch (const error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 1;
}
