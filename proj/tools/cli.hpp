#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "geoimp/model_io.hpp"

namespace geoimp::cli {

struct Finding {
  std::string name;
  Json value;
  std::string witness;
};

struct Report {
  std::string command;
  bool ok = true;
  std::vector<Finding> findings;
  double seconds = 0;

  void add(std::string name, Json value, std::string witness = {}) {
    findings.push_back({std::move(name), std::move(value), std::move(witness)});
  }
  void fail(std::string name, Json value, std::string witness) {
    ok = false;
    add(std::move(name), std::move(value), std::move(witness));
  }
};

std::string render_json(const Report& report, bool timing);
std::string render_text(const Report& report, bool timing);

/// Runs one command line (without the program name). Returns the exit code:
/// 0 for an ok report, 1 for a failed one, 2 for usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace geoimp::cli
