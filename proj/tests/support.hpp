#pragma once

#include <fstream>
#include <sstream>
#include <string>

#ifndef PHYLO_TEST_DATA
#error "PHYLO_TEST_DATA must point at tests/data"
#endif

inline std::string data_path(const std::string& name) { return std::string(PHYLO_TEST_DATA) + "/" + name; }

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline std::string data_file(const std::string& name) { return slurp(data_path(name)); }
