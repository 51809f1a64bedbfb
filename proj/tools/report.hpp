#pragma once

#include <iostream>
#include <string>
#include <vector>

#include "json.hpp"

namespace leafsub::cli {

using nlohmann::json;

/// Output of one command. Rendered either as plain text or as the JSON document
/// {command, inputs, results, checks}.
struct Report {
  std::string command;
  json inputs = json::object();
  json results = json::object();
  json checks = json::array();
  std::vector<std::string> lines;  // text mode body

  void check(const std::string& name, bool pass, json expected, json actual) {
    checks.push_back({{"name", name}, {"pass", pass}, {"expected", std::move(expected)}, {"actual", std::move(actual)}});
  }

  bool passed() const {
    for (const auto& c : checks) {
      if (!c.at("pass").get<bool>()) return false;
    }
    return true;
  }

  void print(std::ostream& os, bool as_json) const {
    if (as_json) {
      os << json{{"command", command}, {"inputs", inputs}, {"results", results}, {"checks", checks}}.dump(2) << '\n';
      return;
    }
    for (const auto& l : lines) os << l << '\n';
    for (const auto& c : checks) {
      if (c.at("pass").get<bool>()) {
        os << "pass  " << c.at("name").get<std::string>() << '\n';
      } else {
        os << "FAIL  " << c.at("name").get<std::string>() << ": expected " << c.at("expected").dump() << ", got "
           << c.at("actual").dump() << '\n';
      }
    }
  }
};

}  // namespace leafsub::cli
