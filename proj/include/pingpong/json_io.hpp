#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "pingpong/config.hpp"
#include "pingpong/realize.hpp"
#include "pingpong/search.hpp"
#include "pingpong/surface.hpp"

namespace pingpong {

using Json = nlohmann::ordered_json;

/// Malformed document: wrong shape, bad letters, unparsable rationals.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// {"rank": n, "word": ["B","A",...], "offsets": {"a": 0, "b": 1}}.
/// Structural problems throw FormatError; invariant violations are left to validate().
Configuration config_from_json(const Json& doc);
Json config_to_json(const Configuration& cfg);

Json verdict_to_json(const Verdict& v);
Json violations_to_json(const std::vector<Violation>& violations);

/// {"generators": {"a": {"breakpoints": [["p/q","p/q"], ...]}}, "domains": {"a": [["p/q","p/q"]], ...}}.
/// A domain entry [x, y] is the open arc from x counterclockwise to y.
Action action_from_json(const Json& doc);
Json action_to_json(const Action& action);

Json report_to_json(const SurveyReport& report);

/// Reads and parses a JSON file. Throws FormatError.
Json read_json_file(const std::string& path);

}  // namespace pingpong
