#include "pingpong/json_io.hpp"

#include <fstream>
#include <sstream>

namespace pingpong {

namespace {

std::string key_of(Letter s) { return std::string(1, s.to_char()); }

Letter letter_from_json(const Json& v) {
  if (!v.is_string() || v.get<std::string>().size() != 1) {
    throw FormatError("letters must be one-character strings, got " + v.dump());
  }
  try {
    return Letter::from_char(v.get<std::string>()[0]);
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

Rational rational_from_json(const Json& v) {
  if (!v.is_string()) throw FormatError("rationals must be strings \"p/q\", got " + v.dump());
  try {
    return parse_rational(v.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

int rank_from_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("rank") || !doc["rank"].is_number_integer()) {
    throw FormatError("configuration needs an integer \"rank\"");
  }
  const long rank = doc["rank"].get<long>();
  if (rank < 1 || rank > kMaxRank) throw FormatError("rank out of range: " + std::to_string(rank));
  return static_cast<int>(rank);
}

}  // namespace

Configuration config_from_json(const Json& doc) {
  Configuration cfg;
  cfg.rank = rank_from_json(doc);
  if (!doc.contains("word") || !doc["word"].is_array()) throw FormatError("configuration needs a \"word\" array");
  for (const auto& v : doc["word"]) cfg.word.push_back(letter_from_json(v));
  if (!doc.contains("offsets") || !doc["offsets"].is_object()) {
    throw FormatError("configuration needs an \"offsets\" object");
  }
  cfg.offsets.assign(cfg.rank, 0);
  std::vector<bool> seen(cfg.rank, false);
  for (const auto& [key, value] : doc["offsets"].items()) {
    if (key.size() != 1 || key[0] < 'a' || key[0] - 'a' >= cfg.rank) {
      throw FormatError("offset key \"" + key + "\" is not a generator of rank " + std::to_string(cfg.rank));
    }
    if (!value.is_number_integer()) throw FormatError("offset of " + key + " must be an integer");
    cfg.offsets[key[0] - 'a'] = value.get<int>();
    seen[key[0] - 'a'] = true;
  }
  for (int a = 0; a < cfg.rank; ++a) {
    if (!seen[a]) throw FormatError("missing offset for generator " + key_of(Letter(a, false)));
  }
  return cfg;
}

Json config_to_json(const Configuration& cfg) {
  Json doc;
  doc["rank"] = cfg.rank;
  doc["word"] = Json::array();
  for (Letter s : cfg.word) doc["word"].push_back(key_of(s));
  doc["offsets"] = Json::object();
  for (int a = 0; a < cfg.rank && a < static_cast<int>(cfg.offsets.size()); ++a) {
    doc["offsets"][key_of(Letter(a, false))] = cfg.offsets[a];
  }
  return doc;
}

Json verdict_to_json(const Verdict& v) {
  Json doc;
  doc["boundary_count"] = v.boundary_count;
  doc["chi"] = v.chi;
  doc["genus"] = v.genus;
  doc["isolated"] = v.isolated;
  doc["cycles"] = Json::array();
  for (const auto& cycle : v.boundary_cycles) {
    Json c = Json::array();
    for (GapId g : cycle) c.push_back(g.value);
    doc["cycles"].push_back(std::move(c));
  }
  return doc;
}

Json violations_to_json(const std::vector<Violation>& violations) {
  Json out = Json::array();
  for (const auto& v : violations) {
    Json item;
    item["message"] = v.message;
    item["letter"] = v.letter ? Json(key_of(*v.letter)) : Json(nullptr);
    out.push_back(std::move(item));
  }
  return out;
}

Action action_from_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("generators") || !doc["generators"].is_object() ||
      !doc.contains("domains") || !doc["domains"].is_object()) {
    throw FormatError("action needs \"generators\" and \"domains\" objects");
  }
  Action act;
  act.rank = static_cast<int>(doc["generators"].size());
  if (act.rank < 1 || act.rank > kMaxRank) throw FormatError("action has no generators");
  act.maps.resize(act.rank);
  std::vector<bool> seen(act.rank, false);
  for (const auto& [key, value] : doc["generators"].items()) {
    if (key.size() != 1 || key[0] < 'a' || key[0] - 'a' >= act.rank) {
      throw FormatError("generator keys must be a, b, ... consecutively; got \"" + key + "\"");
    }
    if (!value.is_object() || !value.contains("breakpoints") || !value["breakpoints"].is_array()) {
      throw FormatError("generator " + key + " needs a \"breakpoints\" array");
    }
    std::vector<std::pair<Rational, Rational>> bps;
    for (const auto& pair : value["breakpoints"]) {
      if (!pair.is_array() || pair.size() != 2) throw FormatError("breakpoints are [input, output] pairs");
      bps.emplace_back(rational_from_json(pair[0]), rational_from_json(pair[1]));
    }
    try {
      act.maps[key[0] - 'a'] = PLCircleMap(bps);
    } catch (const std::invalid_argument& e) {
      throw FormatError("generator " + key + ": " + e.what());
    }
    seen[key[0] - 'a'] = true;
  }
  act.domains.assign(2 * act.rank, {});
  for (const auto& [key, value] : doc["domains"].items()) {
    if (key.size() != 1) throw FormatError("domain keys are single letters");
    Letter s;
    try {
      s = Letter::from_char(key[0]);
    } catch (const std::invalid_argument& e) {
      throw FormatError(e.what());
    }
    if (s.generator() >= act.rank) throw FormatError("domain \"" + key + "\" exceeds the rank");
    if (!value.is_array()) throw FormatError("domain " + key + " must be an array of arcs");
    for (const auto& arc : value) {
      if (!arc.is_array() || arc.size() != 2) throw FormatError("domain arcs are [start, end] pairs");
      const Rational from = rational_from_json(arc[0]);
      const Rational to = rational_from_json(arc[1]);
      if (mod1(from) == mod1(to)) throw FormatError("degenerate domain arc in " + key);
      act.domains[s.code()].push_back(CircleInterval::between(from, to));
    }
  }
  return act;
}

Json action_to_json(const Action& action) {
  Json doc;
  doc["generators"] = Json::object();
  for (int a = 0; a < action.rank; ++a) {
    Json bps = Json::array();
    for (const auto& [x, y] : action.maps[a].breakpoints()) bps.push_back(Json::array({to_string(x), to_string(y)}));
    doc["generators"][key_of(Letter(a, false))]["breakpoints"] = std::move(bps);
  }
  doc["domains"] = Json::object();
  for (int code = 0; code < 2 * action.rank; ++code) {
    Json arcs = Json::array();
    for (const auto& arc : action.domains[code]) {
      arcs.push_back(Json::array({to_string(arc.start), to_string(arc.end())}));
    }
    doc["domains"][key_of(Letter::from_code(code))] = std::move(arcs);
  }
  return doc;
}

Json report_to_json(const SurveyReport& report) {
  Json doc;
  doc["total"] = report.total;
  doc["histogram"] = Json::object();
  for (const auto& [count, n] : report.histogram) doc["histogram"][std::to_string(count)] = n;
  auto entries = [](const std::vector<SurveyEntry>& list) {
    Json out = Json::array();
    for (const auto& e : list) {
      Json item = config_to_json(e.config);
      item["boundary_count"] = e.verdict.boundary_count;
      item["genus"] = e.verdict.genus;
      out.push_back(std::move(item));
    }
    return out;
  };
  doc["isolated_count"] = report.isolated.size();
  doc["isolated"] = entries(report.isolated);
  doc["parity_violations"] = entries(report.parity_violations);
  return doc;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return Json::parse(buffer.str());
  } catch (const Json::parse_error& e) {
    throw FormatError(path + ": " + e.what());
  }
}

}  // namespace pingpong
