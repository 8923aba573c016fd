#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "gentle/algebra.hpp"
#include "gentle/strings.hpp"

inline std::string read_fixture(const std::string& name) {
  std::ifstream in(std::string(GENTLE_FIXTURE_DIR) + "/" + name);
  if (!in) throw std::runtime_error("missing fixture " + name);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

inline gentle::GentleAlgebra load_algebra(const std::string& name) {
  auto res = gentle::parse_algebra(read_fixture(name));
  if (!res.ok()) throw std::runtime_error("fixture " + name + " failed to parse/validate");
  return *res.algebra;
}

inline gentle::Str str_of(const gentle::GentleAlgebra& A, const std::string& notation) {
  gentle::Str s;
  std::string err;
  if (!gentle::parse_str(A, notation, s, err))
    throw std::runtime_error("bad string '" + notation + "': " + err);
  return s;
}
