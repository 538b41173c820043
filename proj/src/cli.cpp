#include "pingpong/cli.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "pingpong/config.hpp"
#include "pingpong/diagram.hpp"
#include "pingpong/json_io.hpp"
#include "pingpong/orders.hpp"
#include "pingpong/realize.hpp"
#include "pingpong/search.hpp"
#include "pingpong/surface.hpp"

namespace pingpong {

namespace {

struct Failure {
  int code;
  std::string message;
};

CommandResult emit(const Json& doc) { return {0, doc.dump() + "\n", ""}; }

CommandResult fail(int code, const std::string& message, Json doc = Json::object()) {
  doc["error"] = message;
  return {code, doc.dump() + "\n", message + "\n"};
}

std::string word_text(const Word& w) { return w.is_identity() ? "1" : w.to_string(); }

Layout parse_layout(const std::string& name) { return name == "perturbed" ? Layout::perturbed : Layout::standard; }

Configuration load_config(const std::string& path) { return config_from_json(read_json_file(path)); }

std::string pretty_verdict(const Configuration& cfg, const Verdict& v) {
  std::ostringstream os;
  os << "word            " << word_string(cfg) << "\n";
  os << "boundary count  " << v.boundary_count << "\n";
  os << "euler char      " << v.chi << "\n";
  os << "genus           " << v.genus << "\n";
  os << "isolated        " << (v.isolated ? "yes" : "no") << "\n";
  for (const auto& cycle : v.boundary_cycles) {
    os << "cycle          ";
    for (GapId g : cycle) os << " " << g.value;
    os << "\n";
  }
  return os.str();
}

std::string pretty_report(const SurveyReport& report) {
  std::ostringstream os;
  os << "configurations  " << report.total << "\n";
  os << "boundary  count\n";
  for (const auto& [b, n] : report.histogram) os << std::setw(8) << b << "  " << n << "\n";
  os << "isolated        " << report.isolated.size() << "\n";
  for (const auto& e : report.isolated) {
    os << "  " << word_string(e.config) << "  offsets";
    for (int o : e.config.offsets) os << " " << o;
    os << "  genus " << e.verdict.genus << "\n";
  }
  os << "parity violations " << report.parity_violations.size() << "\n";
  return os.str();
}

CommandResult cmd_validate(const std::string& path, bool pretty) {
  const Configuration cfg = load_config(path);
  const auto violations = validate(cfg);
  if (pretty) {
    std::string out = violations.empty() ? "valid\n" : "invalid\n";
    for (const auto& v : violations) out += "  " + v.message + "\n";
    return {violations.empty() ? 0 : 1, out, ""};
  }
  Json doc;
  doc["valid"] = violations.empty();
  doc["violations"] = violations_to_json(violations);
  CommandResult res = emit(doc);
  if (!violations.empty()) {
    res.exit_code = 1;
    for (const auto& v : violations) res.err += v.message + "\n";
  }
  return res;
}

CommandResult cmd_classify(const std::string& path, bool pretty) {
  const Configuration cfg = load_config(path);
  const Verdict v = classify(cfg);
  if (pretty) return {0, pretty_verdict(cfg, v), ""};
  return emit(verdict_to_json(v));
}

CommandResult cmd_realize(const std::string& path, const std::string& layout) {
  const Realization r = standard_realization(load_config(path), parse_layout(layout));
  return emit(action_to_json(r.action()));
}

CommandResult cmd_extract(const std::string& path) {
  const Action action = action_from_json(read_json_file(path));
  return emit(config_to_json(extract_config(action)));
}

CommandResult cmd_order(const std::string& path, const std::vector<std::string>& words,
                        const std::vector<std::string>& linear, const std::string& layout) {
  const Configuration cfg = load_config(path);
  const Realization r = standard_realization(cfg, parse_layout(layout));
  Json doc;
  try {
    if (!linear.empty()) {
      const CentralElement u = CentralElement::parse(cfg.rank, linear[0]);
      const CentralElement v = CentralElement::parse(cfg.rank, linear[1]);
      doc["mode"] = "linear";
      doc["elements"] = Json::array({u.to_string(), v.to_string()});
      doc["value"] = linear_compare(r, u, v);
    } else {
      if (words.size() != 3) throw Failure{2, "order needs exactly three words or --linear"};
      const Word g1 = Word::parse(cfg.rank, words[0]);
      const Word g2 = Word::parse(cfg.rank, words[1]);
      const Word g3 = Word::parse(cfg.rank, words[2]);
      doc["mode"] = "circular";
      doc["elements"] = Json::array({word_text(g1), word_text(g2), word_text(g3)});
      doc["value"] = to_int(circular_order(r, g1, g2, g3));
    }
  } catch (const std::invalid_argument& e) {
    throw Failure{2, e.what()};
  }
  return emit(doc);
}

CommandResult cmd_survey(int rank, std::optional<int> max_k, std::optional<int> bound, std::uint64_t ceiling,
                         std::optional<int> sample, unsigned long seed, bool pretty) {
  SearchBound b{rank, max_k, bound};
  SurveyReport report;
  if (sample) {
    if (!max_k) throw Failure{2, "--sample needs --max-k"};
    std::mt19937_64 rng(seed);
    std::vector<Configuration> configs;
    for (int i = 0; i < *sample; ++i) configs.push_back(random_configuration(rank, *max_k, rng));
    report = survey_list(configs, false);
  } else {
    try {
      report = survey(b, ceiling, false);
    } catch (const BoundTooLarge& e) {
      throw Failure{1, e.what()};
    } catch (const std::invalid_argument& e) {
      throw Failure{2, e.what()};
    }
  }
  const int code = report.parity_violations.empty() ? 0 : 1;
  std::string err = code == 0 ? "" : "parity violations found\n";
  if (pretty) return {code, pretty_report(report), err};
  Json doc;
  doc["rank"] = rank;
  doc["max_k"] = max_k ? Json(*max_k) : Json(nullptr);
  doc["bound"] = bound ? Json(*bound) : Json(nullptr);
  if (sample) {
    doc["sample"] = *sample;
    doc["seed"] = seed;
  }
  const Json body = report_to_json(report);
  for (const auto& [key, value] : body.items()) doc[key] = value;
  return {code, doc.dump() + "\n", err};
}

CommandResult cmd_diagram(const std::string& path, const std::string& out_path, const std::string& layout) {
  const Realization r = standard_realization(load_config(path), parse_layout(layout));
  DiagramSummary summary;
  const std::string svg = render_svg(r, &summary);
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw Failure{1, "cannot write " + out_path};
  out << svg;
  Json doc;
  doc["out"] = out_path;
  doc["arcs"] = summary.arcs;
  doc["labels"] = summary.labels;
  doc["gamma_edges"] = summary.gamma_edges;
  doc["bytes"] = svg.size();
  return emit(doc);
}

}  // namespace

CommandResult run_cli(const std::vector<std::string>& args) {
  CLI::App app{"Ping-pong configurations of free groups acting on the circle", "pingpong"};
  app.require_subcommand(1);
  bool pretty = false;
  app.add_flag("--pretty", pretty, "Human-readable output instead of JSON")->configurable(false);
  const std::vector<std::string> layouts{"standard", "perturbed"};

  std::string path;
  std::string layout = "standard";

  auto* validate_cmd = app.add_subcommand("validate", "Check a configuration file");
  validate_cmd->add_option("config", path, "Configuration JSON")->required();
  validate_cmd->add_flag("--pretty", pretty);

  auto* classify_cmd = app.add_subcommand("classify", "Boundary count, Euler characteristic and isolation");
  classify_cmd->add_option("config", path, "Configuration JSON")->required();
  classify_cmd->add_flag("--pretty", pretty);

  auto* realize_cmd = app.add_subcommand("realize", "Emit an exact piecewise-linear action file");
  realize_cmd->add_option("config", path, "Configuration JSON")->required();
  realize_cmd->add_option("--layout", layout, "Arc layout")->check(CLI::IsMember(layouts));

  auto* extract_cmd = app.add_subcommand("extract", "Read the configuration off an action file");
  extract_cmd->add_option("action", path, "Action JSON")->required();

  std::vector<std::string> words;
  std::vector<std::string> linear;
  auto* order_cmd = app.add_subcommand("order", "Query the induced circular order or its lifted linear order");
  order_cmd->add_option("config", path, "Configuration JSON")->required();
  order_cmd->add_option("words", words, "Three words g1 g2 g3");
  order_cmd->add_option("--linear", linear, "Two elements \"g:m\" \"h:l\" of F_n x Z")->expected(2);
  order_cmd->add_option("--layout", layout, "Arc layout")->check(CLI::IsMember(layouts));

  int rank = 2;
  std::optional<int> max_k;
  std::optional<int> bound;
  std::uint64_t ceiling = kDefaultCeiling;
  std::optional<int> sample;
  unsigned long seed = 1;
  auto* survey_cmd = app.add_subcommand("survey", "Classify every configuration within a bound");
  survey_cmd->add_option("--rank", rank, "Rank n >= 2")->required();
  survey_cmd->add_option("--max-k", max_k, "Maximum arcs per generator");
  survey_cmd->add_option("--bound", bound, "Maximum total arc count m");
  survey_cmd->add_option("--ceiling", ceiling, "Refuse bounds whose estimated size exceeds this");
  survey_cmd->add_option("--sample", sample, "Classify this many random configurations instead");
  survey_cmd->add_option("--seed", seed, "Seed for --sample");
  survey_cmd->add_flag("--pretty", pretty);

  std::string out_path;
  auto* diagram_cmd = app.add_subcommand("diagram", "Draw the domains and graphs as SVG");
  diagram_cmd->add_option("config", path, "Configuration JSON")->required();
  diagram_cmd->add_option("--out", out_path, "Output SVG file")->required();
  diagram_cmd->add_option("--layout", layout, "Arc layout")->check(CLI::IsMember(layouts));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    return {0, app.help(), ""};
  } catch (const CLI::ParseError& e) {
    return fail(2, e.what());
  }

  try {
    if (*validate_cmd) return cmd_validate(path, pretty);
    if (*classify_cmd) return cmd_classify(path, pretty);
    if (*realize_cmd) return cmd_realize(path, layout);
    if (*extract_cmd) return cmd_extract(path);
    if (*order_cmd) return cmd_order(path, words, linear, layout);
    if (*survey_cmd) return cmd_survey(rank, max_k, bound, ceiling, sample, seed, pretty);
    if (*diagram_cmd) return cmd_diagram(path, out_path, layout);
  } catch (const Failure& f) {
    return fail(f.code, f.message);
  } catch (const FormatError& e) {
    return fail(2, e.what());
  } catch (const InvalidConfiguration& e) {
    Json doc;
    doc["violations"] = violations_to_json(e.violations());
    return fail(1, e.what(), doc);
  } catch (const ExtractionError& e) {
    return fail(1, e.what());
  } catch (const InternalError& e) {
    return fail(1, std::string("internal error: ") + e.what());
  }
  return fail(2, "no command");
}

}  // namespace pingpong
