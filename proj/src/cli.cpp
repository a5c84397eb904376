#include "flagflux/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "flagflux/errors.hpp"

namespace flagflux::cli {
namespace {

const std::vector<std::string> kCommands = {
    "root-system", "nilradical", "dualize", "correspond", "selfdual",
    "gcs-transport"};

[[noreturn]] void usage(const std::string& message) {
  throw ParseError(ParseError::Kind::syntax, 0, message);
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) usage("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(ParseError::Kind::syntax, e.byte,
                     path.string() + ": " + e.what());
  }
}

int parse_rank_bound(const std::string& text, const std::string& origin) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) {
    usage(origin + " is not an integer: \"" + text + "\"");
  }
  return value;
}

const FlagSpec& require_spec(const JobConfig& config) {
  if (!config.has_spec) usage(config.command + " needs --rank (and --theta)");
  return config.spec;
}

const std::vector<int>& require_ideal(const JobConfig& config) {
  if (!config.ideal) usage(config.command + " needs --ideal");
  return *config.ideal;
}

Json summands_json(const std::vector<IsotropySummand>& summands) {
  Json out = Json::array();
  for (const auto& s : summands) {
    Json roots = Json::array();
    for (const Root& r : s.roots) roots.push_back(r.coeffs);
    out.push_back(Json{{"signature", s.signature},
                       {"dim", s.dim()},
                       {"roots", std::move(roots)}});
  }
  return out;
}

Json integrability_json(const IntegrabilityReport& report) {
  Json types = Json::array();
  for (const auto& summand : report.types) {
    Json names = Json::array();
    for (BlockType t : summand) names.push_back(to_string(t));
    types.push_back(std::move(names));
  }
  return Json{{"passed", report.passed},
              {"types", std::move(types)},
              {"mixed_summands", report.mixed}};
}

void merge(Json& out, const Json& fields) {
  for (const auto& [key, value] : fields.items()) out[key] = value;
}

Json cmd_root_system(const JobConfig& config) {
  FlagSpec spec = require_spec(config);
  spec.validate();
  const RootSystem roots = build_root_system(spec.series, spec.rank);
  Json complementary = Json::array();
  for (const Root& r : complementary_positive_roots(roots, spec.theta)) {
    complementary.push_back(r.coeffs);
  }
  return Json{{"command", config.command},
              {"spec", to_json(spec)},
              {"name", pretty_name(spec)},
              {"root_system", to_json(roots)},
              {"complementary", std::move(complementary)},
              {"flag_dim", flag_dimension(spec)},
              {"summands", summands_json(isotropy_summands(roots, spec.theta))}};
}

Json cmd_nilradical(const JobConfig& config) {
  const Nilradical nil = nilradical_presentation(require_spec(config));
  const JacobiReport jacobi = jacobi_check(nil.presentation);
  Json first = nullptr;
  if (jacobi.first_failure) first = *jacobi.first_failure;
  return Json{{"command", config.command},
              {"nilradical", to_json(nil)},
              {"jacobi", Json{{"passed", jacobi.passed}, {"first_failure", first}}}};
}

AdmissibleTriple triple_from_config(const JobConfig& config) {
  AdmissibleTriple triple;
  if (!config.algebra.empty()) {
    triple.algebra = parse_malcev(config.algebra, config.dim);
  } else if (config.has_spec) {
    triple.algebra = nilradical_presentation(config.spec).presentation;
  } else {
    usage("dualize needs --algebra or a flag (--rank, --theta)");
  }
  triple.ideal = require_ideal(config);
  triple.flux = parse_form(config.flux, 3, triple.algebra.dim());
  return triple;
}

Json cmd_dualize(const JobConfig& config) {
  const AdmissibleTriple triple = triple_from_config(config);
  const AdmissibilityReport admissibility = check_admissible(triple);
  const DualizationResult result = dualize(triple);
  const CertificateReport certificate = duality_certificate(result);
  Json out{{"command", config.command},
           {"input", to_json(triple)},
           {"admissibility", to_json(admissibility)}};
  merge(out, to_json(result));
  out["certificate"] = certificate.passed;
  out["certificate_detail"] = to_json(certificate);
  return out;
}

Json cmd_correspond(const JobConfig& config) {
  const FlagSpec& spec = require_spec(config);
  FlowingFlag flag{spec, Form(3)};
  const Nilradical nil = nilradical_presentation(spec);
  flag.flux = parse_form(config.flux, 3, nil.presentation.dim());
  const CorrespondenceResult result =
      correspond(flag, require_ideal(config), config.rank_bound);
  Json out{{"command", config.command}};
  merge(out, to_json(result));
  out["rank_bound_source"] = config.rank_bound_source;
  out["certificate_detail"] = to_json(result.certificate);
  return out;
}

Json cmd_selfdual(const JobConfig& config) {
  Json out{{"command", config.command}};
  merge(out, to_json(selfdual_flux(require_spec(config))));
  return out;
}

Json cmd_gcs_transport(const JobConfig& config) {
  const Nilradical nil = nilradical_presentation(require_spec(config));
  if (!config.blocks.is_array()) usage("\"blocks\" must be an array");
  std::vector<GcsBlock> blocks, transported;
  for (const auto& spec : config.blocks) {
    blocks.push_back(block_from_json(spec));
    transported.push_back(phi_conjugate(blocks.back()));
  }
  const IntegrabilityReport source =
      integrability_necessary(blocks, nil.summands);

  Json per_root = Json::array();
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    per_root.push_back(Json{{"root", nil.legend[i].root.coeffs},
                            {"summand", nil.legend[i].summand},
                            {"block", to_json(blocks[i])},
                            {"transported", to_json(transported[i])}});
  }
  Json out{{"command", config.command},
           {"source", to_json(nil.spec)},
           {"source_name", pretty_name(nil.spec)},
           {"blocks", std::move(per_root)},
           {"source_integrability", integrability_json(source)}};
  if (config.target) {
    FlagSpec target = *config.target;
    target.validate();
    const auto summands = isotropy_summands(
        build_root_system(target.series, target.rank), target.theta);
    out["target"] = to_json(target);
    out["target_name"] = pretty_name(target);
    out["target_integrability"] =
        integrability_json(integrability_necessary(transported, summands));
  }
  return out;
}

Json error_json(const char* kind, const std::exception& e,
                std::optional<std::size_t> position = {}) {
  Json error{{"kind", kind}, {"message", e.what()}};
  if (position) error["position"] = *position;
  return Json{{"error", std::move(error)}};
}

void emit(std::ostream& out, const Json& report, const std::string& format) {
  if (format == "text") {
    out << render_text(report);
  } else {
    out << report.dump(2) << "\n";
  }
}

void render(std::ostringstream& out, const Json& value, int indent) {
  const std::string pad(indent, ' ');
  auto scalar = [](const Json& v) {
    return v.is_string() ? v.get<std::string>() : v.dump();
  };
  auto flat = [](const Json& v) {
    return std::none_of(v.begin(), v.end(),
                        [](const Json& e) { return e.is_structured(); });
  };
  for (const auto& [key, v] : value.items()) {
    if (!v.is_structured()) {
      out << pad << key << ": " << scalar(v) << "\n";
    } else if (v.is_array() && flat(v)) {
      out << pad << key << ": [";
      bool first = true;
      for (const auto& e : v) {
        out << (first ? "" : ", ") << scalar(e);
        first = false;
      }
      out << "]\n";
    } else {
      out << pad << key << ":\n";
      render(out, v, indent + 2);
    }
  }
}

}  // namespace

void apply_config_file(JobConfig& config, const Json& file,
                       const std::vector<std::string>& flags_given,
                       std::vector<std::string>& warnings) {
  if (!file.is_object()) usage("config file must hold a JSON object");
  auto overrides = [&](const std::string& key, const std::string& flag) {
    if (!file.contains(key)) return false;
    if (std::find(flags_given.begin(), flags_given.end(), flag) !=
        flags_given.end()) {
      warnings.push_back("config file overrides --" + flag);
    }
    return true;
  };
  auto string_field = [&](const char* key) {
    if (!file.at(key).is_string()) {
      usage(std::string("\"") + key + "\" must be a string");
    }
    return file.at(key).get<std::string>();
  };

  if (file.contains("command")) {
    const std::string command = string_field("command");
    if (!config.command.empty() && command != config.command) {
      warnings.push_back("config file command \"" + command +
                         "\" replaces \"" + config.command + "\"");
    }
    config.command = command;
  }
  const bool series = overrides("series", "series");
  const bool rank = overrides("rank", "rank");
  const bool theta = overrides("theta", "theta");
  if (series || rank || theta) {
    Json spec{{"series", config.spec.series}, {"rank", config.spec.rank},
              {"theta", config.spec.theta}};
    for (const char* key : {"series", "rank", "theta"}) {
      if (file.contains(key)) spec[key] = file.at(key);
    }
    config.spec = flag_spec_from_json(spec);
    config.has_spec = true;
  }
  if (overrides("ideal", "ideal")) {
    const Json& ideal = file.at("ideal");
    if (!ideal.is_array()) usage("\"ideal\" must be an array");
    std::vector<int> slots;
    for (const auto& v : ideal) {
      if (!v.is_number_integer()) usage("\"ideal\" must hold integers");
      slots.push_back(v.get<int>());
    }
    config.ideal = slots;
  }
  if (overrides("algebra", "algebra")) config.algebra = string_field("algebra");
  if (overrides("dim", "dim")) {
    if (!file.at("dim").is_number_integer()) usage("\"dim\" must be an integer");
    config.dim = file.at("dim").get<int>();
  }
  if (overrides("flux", "flux")) config.flux = string_field("flux");
  if (overrides("rank_bound", "rank-bound")) {
    if (!file.at("rank_bound").is_number_integer()) {
      usage("\"rank_bound\" must be an integer");
    }
    config.rank_bound = file.at("rank_bound").get<int>();
    config.rank_bound_source = "config";
  }
  if (overrides("format", "format")) config.format = string_field("format");
  if (overrides("blocks", "blocks")) config.blocks = file.at("blocks");
  if (file.contains("target")) config.target = flag_spec_from_json(file.at("target"));
}

Json execute(const JobConfig& config) {
  if (config.rank_bound < 1) throw DomainError("rank bound must be at least 1");
  if (config.command == "root-system") return cmd_root_system(config);
  if (config.command == "nilradical") return cmd_nilradical(config);
  if (config.command == "dualize") return cmd_dualize(config);
  if (config.command == "correspond") return cmd_correspond(config);
  if (config.command == "selfdual") return cmd_selfdual(config);
  if (config.command == "gcs-transport") return cmd_gcs_transport(config);
  usage("unknown command \"" + config.command + "\"");
}

std::string render_text(const Json& report) {
  std::ostringstream out;
  render(out, report, 0);
  return out.str();
}

std::string job_report(const std::filesystem::path& job_file) {
  Json report;
  try {
    JobConfig config;
    std::vector<std::string> warnings;
    apply_config_file(config, read_json_file(job_file), {}, warnings);
    report = execute(config);
  } catch (const ParseError& e) {
    report = error_json("parse", e, e.position());
  } catch (const DomainError& e) {
    report = error_json("domain", e);
  }
  return report.dump(2) + "\n";
}

std::vector<GoldenOutcome> run_golden(const std::filesystem::path& dir,
                                      bool update) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) usage("no job directory " + dir.string());
  std::vector<fs::path> jobs;
  for (const auto& entry : fs::directory_iterator(dir)) {
    const std::string name = entry.path().filename().string();
    if (entry.path().extension() == ".json" &&
        name.find(".expected.") == std::string::npos) {
      jobs.push_back(entry.path());
    }
  }
  std::sort(jobs.begin(), jobs.end());

  std::vector<GoldenOutcome> outcomes;
  for (const auto& job : jobs) {
    GoldenOutcome outcome{job.stem().string(), false, ""};
    const std::string actual = job_report(job);
    fs::path expected_path = job;
    expected_path.replace_extension(".expected.json");
    if (update) {
      std::ofstream(expected_path) << actual;
      outcome.matched = true;
      outcome.detail = "updated";
    } else {
      std::ifstream in(expected_path);
      if (!in) {
        outcome.detail = "missing " + expected_path.filename().string();
      } else {
        std::stringstream stored;
        stored << in.rdbuf();
        outcome.matched = stored.str() == actual;
        if (!outcome.matched) outcome.detail = "report differs";
      }
    }
    outcomes.push_back(std::move(outcome));
  }
  return outcomes;
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"flagflux: flowing-flags correspondence engine"};
  app.require_subcommand(1);

  JobConfig config;
  std::string series = "A";
  int rank = 0;
  std::vector<int> theta, ideal;
  std::string config_path, blocks_path;
  int rank_bound = 0;

  struct Registered {
    CLI::App* app;
    std::vector<std::pair<std::string, CLI::Option*>> options;
  };
  std::vector<Registered> subcommands;
  for (const std::string& name : kCommands) {
    CLI::App* sub = app.add_subcommand(name);
    Registered reg{sub, {}};
    auto add = [&](const std::string& flag, CLI::Option* option) {
      reg.options.emplace_back(flag, option);
    };
    add("series", sub->add_option("--series", series, "root system series (A)"));
    add("rank", sub->add_option("--rank", rank, "rank l of the root system"));
    add("theta", sub->add_option("--theta", theta, "simple roots in Theta, e.g. 1,3,5")
                     ->delimiter(','));
    add("ideal", sub->add_option("--ideal", ideal, "ideal slots, e.g. 4,5,6")
                     ->delimiter(','));
    add("algebra", sub->add_option("--algebra", config.algebra, "Malcev tuple"));
    add("dim", sub->add_option("--dim", config.dim, "declared dimension of --algebra"));
    add("flux", sub->add_option("--flux", config.flux, "3-form H, e.g. e^{123}"));
    add("rank-bound", sub->add_option("--rank-bound", rank_bound,
                                      "largest rank searched for targets"));
    add("format", sub->add_option("--format", config.format, "json or text")
                      ->check(CLI::IsMember({"json", "text"})));
    add("blocks", sub->add_option("--blocks", blocks_path, "JSON file of per-root blocks"));
    add("config", sub->add_option("--config", config_path, "JSON job file"));
    subcommands.push_back(std::move(reg));
  }
  CLI::App* golden = app.add_subcommand("golden", "run checked-in jobs against expected reports");
  std::string golden_dir = "jobs";
  bool update = false;
  golden->add_option("--dir", golden_dir, "job directory");
  golden->add_flag("--update", update, "rewrite expected reports");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseError;
  }

  if (golden->parsed()) {
    try {
      const auto outcomes = run_golden(golden_dir, update);
      int failures = 0;
      for (const auto& o : outcomes) {
        out << (o.matched ? "PASS " : "FAIL ") << o.job;
        if (!o.detail.empty()) out << " (" << o.detail << ")";
        out << "\n";
        failures += !o.matched;
      }
      out << outcomes.size() - failures << "/" << outcomes.size()
          << " golden reports match\n";
      return failures == 0 ? kOk : kDomainError;
    } catch (const ParseError& e) {
      err << "error: " << e.what() << "\n";
      return kParseError;
    }
  }

  const Registered* active = nullptr;
  for (const auto& reg : subcommands) {
    if (reg.app->parsed()) active = &reg;
  }
  config.command = active->app->get_name();
  std::vector<std::string> given;
  for (const auto& [flag, option] : active->options) {
    if (option->count() > 0) given.push_back(flag);
  }
  auto was_given = [&](const std::string& flag) {
    return std::find(given.begin(), given.end(), flag) != given.end();
  };

  try {
    if (was_given("rank") || was_given("theta") || was_given("series")) {
      config.spec = FlagSpec{series, rank, theta};
      config.has_spec = true;
    }
    if (was_given("ideal")) config.ideal = ideal;
    if (const char* env = std::getenv("FLAGFLUX_RANK_BOUND"); env && *env) {
      config.rank_bound = parse_rank_bound(env, "FLAGFLUX_RANK_BOUND");
      config.rank_bound_source = "env";
    }
    if (was_given("rank-bound")) {
      config.rank_bound = rank_bound;
      config.rank_bound_source = "flag";
    }
    if (was_given("blocks")) {
      Json blocks = read_json_file(blocks_path);
      config.blocks = blocks.is_object() && blocks.contains("blocks")
                          ? blocks.at("blocks")
                          : blocks;
    }
    if (!config_path.empty()) {
      std::vector<std::string> warnings;
      apply_config_file(config, read_json_file(config_path), given, warnings);
      for (const auto& w : warnings) err << "warning: " << w << "\n";
      if (config.format != "json" && config.format != "text") {
        usage("format must be json or text");
      }
    }
    emit(out, execute(config), config.format);
    return kOk;
  } catch (const ParseError& e) {
    emit(out, error_json("parse", e, e.position()), config.format);
    return kParseError;
  } catch (const DomainError& e) {
    emit(out, error_json("domain", e), config.format);
    return kDomainError;
  } catch (const std::invalid_argument& e) {
    emit(out, error_json("domain", e), config.format);
    return kDomainError;
  }
}

}  // namespace flagflux::cli
