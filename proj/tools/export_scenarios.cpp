// Regenerates the checked-in scenario files from the in-library
// definitions. Usage: export-scenarios <output-dir>. The unit tests pin
// the checked-in files byte-for-byte against these definitions, so run
// this after changing a builtin and commit the result.
#include <fstream>
#include <iostream>
#include <string>

#include "embsec/scenario_io.hpp"

namespace {

bool write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) return false;
  out << text;
  return static_cast<bool>(out);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: export-scenarios <output-dir>\n";
    return 2;
  }
  const std::string dir = argv[1];
  bool ok = true;
  for (const auto& id : embsec::builtin_ids()) {
    const auto scenario = embsec::builtin_scenario(id);
    const std::string path = dir + "/" + id + ".json";
    if (!scenario || !write_file(path, embsec::serialize_scenario(*scenario))) {
      std::cerr << "error: failed to write " << path << "\n";
      ok = false;
      continue;
    }
    std::cout << path << "\n";
  }
  const struct {
    const char* name;
    bool with_rule;
  } demos[] = {{"wheel-compensation", true}, {"wheel-compensation-no-rule", false}};
  for (const auto& demo : demos) {
    const std::string path = dir + "/" + demo.name + ".json";
    if (!write_file(path, embsec::serialize_scenario(
                              embsec::wheel_compensation_demo(demo.with_rule)))) {
      std::cerr << "error: failed to write " << path << "\n";
      ok = false;
      continue;
    }
    std::cout << path << "\n";
  }
  return ok ? 0 : 1;
}
