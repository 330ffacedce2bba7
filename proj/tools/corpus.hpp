#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "pgcycles/json_io.hpp"

namespace pgc::tools {

struct CheckOutcome {
  std::string fixture;
  std::string check;
  std::string tag;  // PAPER, DERIVED or TRIVIAL
  bool passed = false;
  Json expected;
  Json actual;
  std::string error;
};

std::vector<CheckOutcome> run_fixture(const Json& fixture, const std::string& name);
/// Every *.json file in dir, in name order.
std::vector<CheckOutcome> run_corpus(const std::filesystem::path& dir);

}  // namespace pgc::tools
