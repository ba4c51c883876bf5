#include <cstdio>

#include "geoimp/acceptance.hpp"

int main(int argc, char** argv) {
  const std::string_view only = argc > 1 ? argv[1] : "";
  if (!geoimp::is_acceptance_selector(only)) {
    std::fprintf(stderr, "unknown criterion or group: %s\n", argv[1]);
    return 2;
  }
  int failed = 0;
  for (const auto& r : geoimp::run_acceptance(only)) {
    std::printf("%-4s %s  %s (%.2fs)  %s\n", r.id.c_str(), r.passed ? "PASS" : "FAIL", r.title.c_str(), r.seconds,
                r.passed ? r.detail.c_str() : r.witness.c_str());
    failed += r.passed ? 0 : 1;
  }
  std::fflush(stdout);
  return failed == 0 ? 0 : 1;
}
