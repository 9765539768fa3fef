#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "flagcalc/cache.hpp"
#include "flagcalc/errors.hpp"
#include "flagcalc/harness.hpp"

using namespace flagcalc;
using json = nlohmann::ordered_json;

namespace {

struct Options {
  std::string type;
  int rank = 0;
  std::optional<std::string> parabolic;
  std::optional<std::string> case_name;
  std::optional<int> max_degree;
  int q_order = 3;
  unsigned jobs = 0;
  std::uint64_t seed = 1;
  std::string format = "md";
  std::optional<std::string> cache_dir;
  std::optional<std::string> output;
  bool timing = true;
  std::size_t max_group = kDefaultGroupBound;
};

HarnessConfig make_config(const Options& o, std::vector<std::string> suites) {
  HarnessConfig c;
  c.suites = std::move(suites);
  if (!o.type.empty()) {
    if (o.type.size() != 1) throw InputError("--type takes one letter A-G");
    c.family = family_from_letter(o.type[0]);
  }
  if (o.rank > 0) c.rank = o.rank;
  if (o.parabolic) {
    if (!c.family || !c.rank) throw UsageError("--parabolic needs --type and --rank");
    c.levi = parse_root_list(*o.parabolic, *c.rank);
  }
  c.case_name = o.case_name;
  c.max_degree = o.max_degree;
  c.q_order = o.q_order;
  c.jobs = o.jobs;
  c.seed = o.seed;
  c.cache_dir = cache_directory(o.cache_dir);
  c.max_group_size = o.max_group;
  return c;
}

void emit(const Options& o, const std::string& text) {
  if (o.output) {
    std::ofstream f(*o.output);
    if (!f) throw UsageError("cannot write " + *o.output);
    f << text;
  } else {
    std::cout << text;
  }
}

int run_report(const Options& o, std::vector<std::string> suites) {
  const Report r = run_suites(make_config(o, std::move(suites)));
  emit(o,
       o.format == "json" ? report_json(r, o.timing).dump(2) + "\n" : report_markdown(r, o.timing));
  return r.exit_code();
}

struct Space {
  std::unique_ptr<WeylGroup> group;
  std::unique_ptr<FlagVariety> fv;
};

Space open_space(const Options& o) {
  const HarnessConfig c = make_config(o, {});
  if (!c.family || !c.rank) throw UsageError("--type and --rank are required");
  Space s;
  s.group = std::make_unique<WeylGroup>(
      load_or_build_group(*c.family, *c.rank, c.cache_dir, nullptr, c.max_group_size));
  s.fv = std::make_unique<FlagVariety>(*s.group, c.levi.value_or(std::vector<int>{}));
  return s;
}

int run_info(const Options& o) {
  const Space s = open_space(o);
  const FlagVariety& fv = *s.fv;
  const WeylGroup& g = *s.group;
  json j;
  j["variety"] = fv.name();
  j["weyl_group_order"] = g.size();
  j["fixed_points"] = fv.num_points();
  j["dimension"] = fv.dimension();
  json coords = json::array(), c1 = json::array();
  for (std::size_t i = 0; i < fv.degree_size(); ++i) {
    coords.push_back(fv.parabolic().non_levi()[i] + 1);
    Degree d = Degree::zero(fv.degree_size());
    d.coords[i] = 1;
    c1.push_back(fv.chern_degree(d));
  }
  j["degree_coordinates"] = coords;
  j["c1"] = c1;
  json comin = json::array();
  for (const auto& ce : cominuscule_elements(g))
    comin.push_back({{"gamma", ce.gamma + 1}, {"w", word_string(g, ce.element)}});
  j["cominuscule"] = comin;
  j["group_digest"] = group_digest(g);
  if (o.format == "json") {
    emit(o, j.dump(2) + "\n");
  } else {
    std::string text;
    for (const auto& [k, v] : j.items()) text += k + ": " + v.dump() + "\n";
    emit(o, text);
  }
  return 0;
}

int run_tables(const Options& o) {
  const Space s = open_space(o);
  const auto rows = seidel_extended_table(*s.fv, o.max_degree.value_or(2));
  emit(o, o.format == "json" ? seidel_table_json(*s.fv, rows).dump(2) + "\n"
                             : seidel_table_markdown(*s.fv, rows));
  return 0;
}

void add_common(CLI::App* app, Options& o) {
  app->add_option("--type", o.type, "Cartan type letter A-G");
  app->add_option("--rank", o.rank, "rank");
  app->add_option("--parabolic", o.parabolic,
                  "Levi simple roots of P, comma-separated, 1-based (empty for G/B)");
  app->add_option("--max-degree", o.max_degree, "degree coordinate bound");
  app->add_option("--q-order", o.q_order, "total q-degree truncation for Psi")
      ->check(CLI::NonNegativeNumber);
  app->add_option("--jobs", o.jobs, "worker threads (0: all cores)");
  app->add_option("--seed", o.seed, "seed for associativity sampling");
  app->add_option("--format", o.format, "json or md")->check(CLI::IsMember({"json", "md"}));
  app->add_option("--cache-dir", o.cache_dir,
                  std::string("cache directory (else $") + kCacheDirEnv + ")");
  app->add_option("-o,--output", o.output, "write to a file instead of stdout");
  app->add_option("--max-group-size", o.max_group, "Weyl group enumeration bound");
  app->add_flag("!--no-timing", o.timing, "omit timings from reports");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equivariant and quantum Schubert calculus checks on flag varieties"};
  app.require_subcommand(1);
  Options o;

  auto* info = app.add_subcommand("info", "summary of a flag variety");
  add_common(info, o);

  auto* verify = app.add_subcommand("verify", "run one verification suite");
  verify->require_subcommand(1);
  std::vector<std::pair<CLI::App*, std::string>> suites;
  for (const auto& name : suite_names()) {
    auto* sub = verify->add_subcommand(name);
    add_common(sub, o);
    if (name == "projrich") sub->add_option("--case", o.case_name, "LG24, OG48, B4Q7, D5Q8, Fl145");
    suites.emplace_back(sub, name);
  }

  auto* tables = app.add_subcommand("tables", "conjectural right-hand side tables");
  tables->require_subcommand(1);
  auto* seidel_ext = tables->add_subcommand("seidel-extended", "Gamma_e(w^-1.X^(wu)) per (w,u,e)");
  add_common(seidel_ext, o);

  auto* report = app.add_subcommand("report", "run every suite");
  add_common(report, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*info) return run_info(o);
    if (*seidel_ext) return run_tables(o);
    if (*report) return run_report(o, {});
    for (const auto& [sub, name] : suites)
      if (*sub) return run_report(o, {name});
  } catch (const ResourceError& e) {
    std::cerr << "resource bound: " << e.what() << "\n";
    return 3;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const InputError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const ConfigError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
