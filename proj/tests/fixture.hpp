#pragma once

#include <fstream>
#include <string>

#include <json.hpp>

inline nlohmann::json load_fixture(const std::string& name) {
  std::ifstream in(std::string(FIXTURE_DIR) + "/" + name);
  if (!in.good()) throw std::runtime_error("missing fixture " + name);
  return nlohmann::json::parse(in);
}
