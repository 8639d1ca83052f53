// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "taes/trojan.hpp"

namespace taes {

namespace {

std::string strip(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) {
    return {};
  }
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

}  // namespace

std::string trojan_config_to_json(const TrojanConfig& config) {
  nlohmann::json j;
  j["p"] = config.p();
  j["positions"] = config.trigger_positions;
  j["values"] = config.trigger_values;
  j["q_max"] = config.q_max;
  j["polarity"] = polarity_name(config.polarity);
  return j.dump(2) + "\n";
}

TrojanConfig trojan_config_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("trojan config: bad JSON: ") + e.what());
  }
  TrojanConfig config;
  try {
    config.trigger_positions = j.at("positions").get<std::vector<int>>();
    config.trigger_values = j.at("values").get<std::vector<std::uint8_t>>();
    config.q_max = j.at("q_max").get<int>();
    const auto polarity = j.at("polarity").get<std::string>();
    if (polarity == "or") {
      config.polarity = PayloadPolarity::ForceOnes;
    } else if (polarity == "and") {
      config.polarity = PayloadPolarity::ForceZeros;
    } else {
      throw std::invalid_argument("trojan config: polarity must be \"or\" or \"and\"");
    }
    if (j.contains("p") &&
        j.at("p").get<int>() != static_cast<int>(config.trigger_positions.size())) {
      throw std::invalid_argument("trojan config: p disagrees with positions length");
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("trojan config: bad JSON: ") + e.what());
  }
  validate_config(config);
  return config;
}

TrojanConfig load_trojan_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open trojan config: " + path);
  }
  std::ostringstream text;
  text << in.rdbuf();
  return trojan_config_from_json(text.str());
}

void save_trojan_config(const TrojanConfig& config, const std::string& path) {
  validate_config(config);
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot write trojan config: " + path);
  }
  out << trojan_config_to_json(config);
  if (!out) {
    throw std::runtime_error("write failed: " + path);
  }
}

TestPatternSet load_pattern_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open pattern file: " + path);
  }
  TestPatternSet set;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    line = strip(line);
    if (line.empty()) {
      continue;
    }
    try {
      set.patterns.push_back(Block::from_hex(line));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(path + ":" + std::to_string(line_no) + ": " +
                                  e.what());
    }
  }
  return set;
}

}  // namespace taes
