#include "gammasym/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "gammasym/admissible.hpp"
#include "gammasym/antipodal.hpp"
#include "gammasym/gamma.hpp"
#include "gammasym/report.hpp"
#include "gammasym/suite.hpp"

namespace gammasym::cli {

namespace {

constexpr const char* kFlagPreset = "a-r-flag-example";

struct RawArgs {
  std::string family;
  int rank = 0;
  std::string set;
  std::string format = "json";
  bool enumerate = false;
  std::uint64_t budget = 0;
  bool strict = false;
  bool all = false;
  std::string preset;
  std::string params;
  std::string generators;
  std::string fixtures_dir;
  std::string dump;
};

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    const std::string token = text.substr(pos, comma - pos);
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(token, &used));
      if (used != token.size()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      throw UsageError("malformed integer '" + token + "' in '" + text + "'");
    }
    pos = comma + 1;
  }
  return out;
}

std::uint64_t default_budget() {
  if (const char* env = std::getenv(kBudgetEnv)) {
    try {
      const auto v = std::stoull(env);
      if (v > 0) return v;
    } catch (const std::exception&) {
    }
    throw UsageError(std::string(kBudgetEnv) + " must be a positive integer");
  }
  return kDefaultOrbitBudget;
}

void emit(const Json& j, Format format, std::ostream& out) {
  if (format == Format::json) {
    out << j.dump(2) << "\n";
    return;
  }
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string value = it->is_string() ? it->get<std::string>() : it->dump();
    if (format == Format::markdown) {
      out << "- **" << it.key() << "**: " << value << "\n";
    } else {
      out << it.key() << ": " << value << "\n";
    }
  }
}

int report_budget(const OrbitResult& result, const RunConfig& config, std::ostream& err) {
  if (!result.budget_exceeded) return kOk;
  err << "warning: " << result.note << "\n";
  return config.strict ? kBudgetExceeded : kOk;
}

int run_classify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::vector<RootSystemType> types;
  if (config.all) {
    types = classification_types(8);
  } else {
    types.push_back(*config.type);
  }
  bool agrees = true;
  Json all = Json::array();
  for (const auto& type : types) {
    const auto system = build(type);
    const auto report = verify_classification(system);
    for (const auto& d : report.witness_discrepancies) {
      agrees = false;
      err << "discrepancy: " << type.name() << " " << d.set.to_string() << " closed form "
          << (d.expected ? "admissible" : "not admissible") << ", brute force "
          << (d.got ? "admissible" : "not admissible") << "\n";
    }
    switch (config.format) {
      case Format::json: all.push_back(to_json(report, system)); break;
      case Format::markdown: out << to_markdown(report, system); break;
      case Format::plain: out << to_plain(report); break;
    }
  }
  if (config.format == Format::json) out << (config.all ? all : all.front()).dump(2) << "\n";
  return agrees ? kOk : kDiscrepancy;
}

int run_check(const RunConfig& config, std::ostream& out) {
  const auto system = build(*config.type);
  const auto witness = admissibility_witness(system, *config.set);
  Json j;
  j["type"] = system.type().name();
  j["rank"] = system.rank();
  j["I"] = to_json(*config.set);
  j["admissible"] = !witness.has_value();
  if (witness) j["witness"] = to_json(*witness);
  emit(j, config.format, out);
  return kOk;
}

int run_orbit(const RunConfig& config, bool two_number_only, std::ostream& out, std::ostream& err) {
  const auto system = build(*config.type);
  const IndexSet I = *config.set;
  if (two_number_only) {
    if (auto witness = admissibility_witness(system, I)) {
      throw NotAdmissibleError("index set " + I.to_string() + " is not admissible for " + system.type().name() +
                               ": root " + witness->to_string() +
                               " has even coefficients on every index of the set and is nonzero on it");
    }
  }
  OrbitOptions options;
  options.enumerate = config.enumerate;
  options.keep_elements = !two_number_only;
  options.budget = config.budget;
  const auto result = orbit(system, I, options);

  if (config.dump_path) {
    if (!result.elements) {
      err << "warning: no elements enumerated; dump not written\n";
    } else {
      std::ofstream file(*config.dump_path, std::ios::binary);
      if (!file) throw std::runtime_error("cannot open " + *config.dump_path);
      write_orbit_dump(file, *result.elements);
    }
  }
  emit(to_json(result, system, I), config.format, out);
  return report_budget(result, config, err);
}

int run_subgroups(const RunConfig& config, std::ostream& out) {
  const auto system = build(*config.type);
  const int r = system.rank();

  if (config.preset) {
    const auto& p = config.params;
    const IndexSet I = IndexSet::of(p);
    const auto sub = GammaSubgroup::span({IndexSet::of({p[0], p[2]}), IndexSet::of({p[1]})}, r);
    Json j = triple_json(system, I, sub);
    j["preset"] = *config.preset;
    j["gamma_I_order"] = GammaSubgroup::of_index_set(I, r).order();
    j["proper_subgroup"] = sub.subgroup_of(GammaSubgroup::of_index_set(I, r)) && sub.dimension() < I.size();
    emit(j, config.format, out);
    return kOk;
  }

  const IndexSet I = *config.set;
  if (config.generators) {
    const auto sub = GammaSubgroup::span(*config.generators, r);
    Json j = triple_json(system, I, sub);
    j["inside_gamma_I"] = sub.support().subset_of(I);
    emit(j, config.format, out);
    return kOk;
  }

  Json j = triple_json(system, I, GammaSubgroup::of_index_set(I, r));
  j["admissible"] = is_admissible(system, I);
  if (j["admissible"].get<bool>() && I.size() <= kDefaultMinimalSubgroupBound) {
    Json minimal;
    minimal["exploratory"] = true;
    Json list = Json::array();
    for (const auto& g : minimal_triple_subgroups(system, I)) {
      Json basis = Json::array();
      for (IndexSet b : g.basis()) basis.push_back(to_json(b));
      list.push_back({{"basis", std::move(basis)}, {"order", g.order()}});
    }
    minimal["subgroups"] = std::move(list);
    j["minimal_triple_subgroups"] = std::move(minimal);
  }
  emit(j, config.format, out);
  return kOk;
}

void write_fixtures(const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir / "roots");
  for (const auto& type : classification_types(8)) {
    std::ofstream file(dir / "roots" / (type.name() + ".json"));
    if (!file) throw std::runtime_error("cannot write fixtures under " + dir.string());
    file << to_json(build(type)).dump(1) << "\n";
  }
  std::ofstream doc(dir / "classification.md");
  if (!doc) throw std::runtime_error("cannot write fixtures under " + dir.string());
  doc << classification_document(8);
}

int run_verify_all(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (config.fixtures_dir) {
    write_fixtures(*config.fixtures_dir);
    err << "fixtures written to " << *config.fixtures_dir << "\n";
  }
  const auto results = run_suite();
  bool all_passed = true;
  Json j = Json::array();
  if (config.format == Format::markdown) out << "| # | criterion | result | seconds | detail |\n|---|---|---|---|---|\n";
  for (const auto& c : results) {
    all_passed = all_passed && c.passed;
    char seconds[32];
    std::snprintf(seconds, sizeof seconds, "%.2f", c.seconds);
    switch (config.format) {
      case Format::json:
        j.push_back({{"id", c.id}, {"title", c.title}, {"passed", c.passed}, {"detail", c.detail}});
        break;
      case Format::markdown:
        out << "| " << c.id << " | " << c.title << " | " << (c.passed ? "PASS" : "FAIL") << " | " << seconds
            << " | " << c.detail << " |\n";
        break;
      case Format::plain:
        out << (c.passed ? "[PASS] " : "[FAIL] ") << c.id << " " << c.title << " (" << seconds << " s) "
            << c.detail << "\n";
        break;
    }
  }
  if (config.format == Format::json) out << j.dump(2) << "\n";
  return all_passed ? kOk : kDiscrepancy;
}

}  // namespace

RunConfig parse_args(const std::vector<std::string>& args, std::string* help_text) {
  CLI::App app{"Admissible index sets, antipodal orbits and subgroup triples of root systems", "gammasym"};
  app.require_subcommand(1, 1);
  RawArgs raw;

  struct Sub {
    const char* name;
    Command command;
    const char* help;
    bool type_required;
  };
  const Sub subs[] = {
      {"classify", Command::classify, "list admissible index sets and check them against the closed form", false},
      {"check", Command::check, "decide admissibility of one index set, with a witness root", true},
      {"two-number", Command::two_number, "size of a maximal antipodal set", true},
      {"orbit", Command::orbit, "Weyl orbit of xi_I, optionally enumerated", true},
      {"subgroups", Command::subgroups, "subgroup triple analysis", true},
      {"verify-all", Command::verify_all, "run every acceptance criterion", false},
  };
  std::vector<std::pair<CLI::App*, Command>> handles;
  for (const auto& s : subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    handles.emplace_back(sub, s.command);
    if (s.command != Command::verify_all) {
      sub->add_option("family", raw.family, "A, B, C, D, E, F, G or BC")->required(s.type_required);
      sub->add_option("rank", raw.rank, "rank of the root system")->required(s.type_required);
    }
    sub->add_option("--format", raw.format, "json, markdown or plain")
        ->check(CLI::IsMember({"json", "markdown", "plain"}));
    switch (s.command) {
      case Command::classify:
        sub->add_flag("--all", raw.all, "every type within the default rank bounds");
        break;
      case Command::check:
        sub->add_option("--set", raw.set, "1-indexed comma list")->required();
        break;
      case Command::two_number:
      case Command::orbit:
        sub->add_option("--set", raw.set, "1-indexed comma list")->required();
        sub->add_flag("--enumerate", raw.enumerate, "walk the orbit instead of using the order formula only");
        sub->add_option("--budget", raw.budget, "maximum number of orbit elements to enumerate");
        sub->add_flag("--strict", raw.strict, "exit 3 when the budget refuses enumeration");
        if (s.command == Command::orbit) sub->add_option("--dump", raw.dump, "binary element dump path");
        break;
      case Command::subgroups:
        sub->add_option("--set", raw.set, "1-indexed comma list");
        sub->add_option("--generators", raw.generators, "subgroup generators, e.g. \"1,3;2\"");
        sub->add_option("--preset", raw.preset, "named scenario")->check(CLI::IsMember({kFlagPreset}));
        sub->add_option("--params", raw.params, "preset parameters, e.g. 1,2,3");
        break;
      case Command::verify_all:
        sub->add_option("--fixtures-dir", raw.fixtures_dir, "regenerate golden files into this directory");
        break;
    }
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    if (help_text) *help_text = app.help();
    return {};
  } catch (const CLI::ParseError& e) {
    if (help_text) {
      // Help on a subcommand arrives as CallForHelp too, but keep the message.
      if (e.get_exit_code() == 0) {
        *help_text = app.help();
        return {};
      }
    }
    throw UsageError(e.what());
  }

  RunConfig config;
  CLI::App* chosen = nullptr;
  for (const auto& [sub, command] : handles) {
    if (sub->parsed()) {
      chosen = sub;
      config.command = command;
    }
  }
  if (!chosen) throw UsageError("no command given");

  try {
    if (!raw.family.empty()) config.type = RootSystemType(parse_family(raw.family), raw.rank);
    const CLI::Option* set_option = chosen->get_option_no_throw("--set");
    if (set_option && set_option->count() > 0) config.set = IndexSet::parse(raw.set);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  config.format = raw.format == "markdown" ? Format::markdown : raw.format == "plain" ? Format::plain : Format::json;
  config.enumerate = raw.enumerate;
  const CLI::Option* budget_option = chosen->get_option_no_throw("--budget");
  if (budget_option && budget_option->count() > 0 && raw.budget == 0) throw UsageError("--budget must be positive");
  config.budget = raw.budget;
  config.strict = raw.strict;
  config.all = raw.all;
  if (!raw.preset.empty()) config.preset = raw.preset;
  if (!raw.params.empty()) config.params = parse_int_list(raw.params);
  if (config.command == Command::subgroups && chosen->count("--generators") > 0) {
    std::vector<IndexSet> gens;
    std::size_t pos = 0;
    while (!raw.generators.empty() && pos <= raw.generators.size()) {
      std::size_t semi = raw.generators.find(';', pos);
      if (semi == std::string::npos) semi = raw.generators.size();
      try {
        gens.push_back(IndexSet::parse(raw.generators.substr(pos, semi - pos)));
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      pos = semi + 1;
    }
    config.generators = std::move(gens);
  }
  if (!raw.fixtures_dir.empty()) config.fixtures_dir = raw.fixtures_dir;
  if (!raw.dump.empty()) config.dump_path = raw.dump;

  if (config.preset && config.params.size() == 3 && config.type) {
    config.set = IndexSet::of(config.params);
  }
  validate(config);
  return config;
}

void validate(const RunConfig& config) {
  const bool needs_type = config.command != Command::verify_all && !(config.command == Command::classify && config.all);
  if (needs_type && !config.type) throw UsageError("a root system type and rank are required");
  if (config.command == Command::classify && config.all && config.type) {
    throw UsageError("classify takes either a type or --all, not both");
  }
  const bool needs_set = config.command == Command::check || config.command == Command::two_number ||
                         config.command == Command::orbit || config.command == Command::subgroups;
  if (needs_set && !config.set) throw UsageError("--set is required for this command");
  if (config.set) {
    if (config.set->empty()) throw UsageError("--set must be non-empty");
    if (config.type && !config.set->fits(config.type->rank())) {
      throw UsageError("--set " + config.set->to_string() + " exceeds rank " + std::to_string(config.type->rank()));
    }
  }
  if (config.preset) {
    const auto& p = config.params;
    if (!config.type || config.type->family() != Family::A) throw UsageError("preset a-r-flag-example needs type A");
    if (p.size() != 3 || !(1 <= p[0] && p[0] < p[1] && p[1] < p[2] && p[2] <= config.type->rank())) {
      throw UsageError("preset a-r-flag-example needs --params i1,i2,i3 with 1 <= i1 < i2 < i3 <= r");
    }
    if (config.generators) throw UsageError("--preset and --generators are exclusive");
  }
  if (config.generators && config.type) {
    for (IndexSet g : *config.generators) {
      if (!g.fits(config.type->rank())) throw UsageError("generator " + g.to_string() + " exceeds the rank");
    }
  }
}

int run(const RunConfig& input, std::ostream& out, std::ostream& err) {
  try {
    RunConfig config = input;
    validate(config);
    if (config.budget == 0) config.budget = default_budget();
    switch (config.command) {
      case Command::classify: return run_classify(config, out, err);
      case Command::check: return run_check(config, out);
      case Command::two_number: return run_orbit(config, true, out, err);
      case Command::orbit: return run_orbit(config, false, out, err);
      case Command::subgroups: return run_subgroups(config, out);
      case Command::verify_all: return run_verify_all(config, out, err);
    }
  } catch (const DiscrepancyError& e) {
    err << "discrepancy: " << e.what() << "\n";
    return kDiscrepancy;
  } catch (const NotAdmissibleError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kDiscrepancy;
  }
  return kOk;
}

int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::string help;
  RunConfig config;
  try {
    config = parse_args(args, &help);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\nRun 'gammasym --help' for usage.\n";
    return kUsage;
  }
  if (!help.empty()) {
    out << help;
    return kOk;
  }
  return run(config, out, err);
}

}  // namespace gammasym::cli
