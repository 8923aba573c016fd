#pragma once

#include <optional>
#include <string>
#include <vector>

namespace gentle {

struct Arrow {
  std::string id;
  int src = -1;
  int tgt = -1;
};

struct Violation {
  std::string clause;  // which axiom or format rule failed
  std::string detail;
};

// A quiver with quadratic monomial relations satisfying the gentle axioms.
// Immutable once built; every other component consumes it read-only.
class GentleAlgebra {
 public:
  std::vector<std::string> vertex_ids;           // declaration order
  std::vector<Arrow> arrows;                     // declaration order
  std::vector<std::pair<int, int>> relations;    // (a,b) arrow indices, ab in I

  // Derived continuation tables, one entry per arrow (-1 = none):
  std::vector<int> rel_next;   // b with ab in I
  std::vector<int> rel_prev;   // c with ca in I
  std::vector<int> comp_next;  // b' with ab' a nonzero path
  std::vector<int> comp_prev;  // c' with c'a a nonzero path

  int n_vertices() const { return static_cast<int>(vertex_ids.size()); }
  int n_arrows() const { return static_cast<int>(arrows.size()); }
  int vertex_index(const std::string& id) const;
  int arrow_index(const std::string& id) const;
  bool has_relation(int a, int b) const { return a >= 0 && rel_next[a] == b; }

  std::vector<int> arrows_out(int v) const;
  std::vector<int> arrows_in(int v) const;
  int degree(int v) const;  // total arrows adjacent to v

  void build_tables();
};

struct Letter {
  int arrow = -1;
  bool fwd = true;
  bool operator==(const Letter&) const = default;
};

// Reduced walk: consecutive endpoints match, no immediate backtrack.
struct Walk {
  bool trivial = false;
  int base = -1;                // anchor vertex of a trivial walk
  std::vector<Letter> letters;  // empty iff trivial

  int source(const GentleAlgebra& A) const;
  int target(const GentleAlgebra& A) const;
  std::vector<int> vertex_seq(const GentleAlgebra& A) const;
  std::size_t length() const { return trivial ? 0 : letters.size(); }
  Walk inverse() const;
  static Walk trivial_at(int v);

  bool operator==(const Walk&) const = default;
};

int letter_source(const GentleAlgebra& A, const Letter& l);
int letter_target(const GentleAlgebra& A, const Letter& l);
bool is_valid_walk(const GentleAlgebra& A, const Walk& w, std::string* why = nullptr);

// Maximal full-relation chain (polygon side list) or maximal nonzero path
// (fan); `cyclic` marks a full-relation cycle, which becomes a puncture.
struct Thread {
  std::vector<int> vertices;
  std::vector<int> arrows;
  bool cyclic = false;
  bool trivial() const { return arrows.empty(); }
};

struct ParseError {
  int line = 0;
  int col = 0;
  std::string message;
};

struct ParseResult {
  std::optional<GentleAlgebra> algebra;
  std::optional<ParseError> parse_error;
  std::vector<Violation> violations;  // gentleness failures
  bool ok() const { return algebra.has_value() && !parse_error && violations.empty(); }
};

ParseResult parse_algebra(const std::string& text);
std::string render_algebra_file(const GentleAlgebra& A);

std::vector<Violation> validate_gentle(const GentleAlgebra& raw);

// All direct walks of exactly `len` arrows where every consecutive pair is a
// relation; lexicographic by arrow indices.
std::vector<Walk> full_relation_walks(const GentleAlgebra& A, int len);

std::vector<Thread> forbidden_threads(const GentleAlgebra& A);
std::vector<Thread> permitted_threads(const GentleAlgebra& A);

// True iff the quiver contains a cyclic walk with full relations.
bool has_full_relation_cycle(const GentleAlgebra& A);

// All nonzero paths (direct strings), trivial ones included.
std::vector<Walk> nonzero_paths(const GentleAlgebra& A);

}  // namespace gentle
