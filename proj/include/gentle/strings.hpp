#pragma once

#include <string>
#include <vector>

#include "gentle/algebra.hpp"

namespace gentle {

// Canonical representative of a string: the lexicographic minimum of the
// letter word and its inverse word, letters ordered by (arrow, fwd<bwd).
class Str {
 public:
  Str() = default;
  static Str trivial(int v);
  // Canonicalizes; callers must have checked is_string().
  static Str from_walk(const GentleAlgebra& A, const Walk& w);

  const Walk& walk() const { return w_; }
  bool trivial_str() const { return w_.trivial; }
  std::size_t length() const { return w_.length(); }

  bool operator==(const Str& o) const { return w_ == o.w_; }
  std::vector<int> key() const;

 private:
  Walk w_;
};

bool operator<(const Str& a, const Str& b);

// Relation-avoidance in both readings.
bool is_string(const GentleAlgebra& A, const Walk& w);

struct StringEnumeration {
  std::vector<Str> strings;  // canonical, deterministic order
  bool band_exists = false;  // a cyclic relation-avoiding reduced word <= max_len
};

StringEnumeration enumerate_strings(const GentleAlgebra& A, int max_len);

// String notation: space-separated letters, backward suffixed `~`; `e(<v>)`
// for trivial strings.
std::string format_str(const GentleAlgebra& A, const Str& s);
std::string format_walk(const GentleAlgebra& A, const Walk& w);
bool parse_str(const GentleAlgebra& A, const std::string& text, Str& out, std::string& err);

// Explicit representation data of the string module M_s.
struct StringModule {
  Str str;
  std::vector<int> dims;  // per vertex
  // arrow actions as position pairs: (from position, to position)
  std::vector<std::vector<std::pair<int, int>>> actions;  // per arrow
  std::vector<int> pos_vertex;                            // vertex of each position
};

StringModule string_module(const GentleAlgebra& A, const Str& s);

}  // namespace gentle
