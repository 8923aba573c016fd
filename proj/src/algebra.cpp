#include "gentle/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace gentle {

int GentleAlgebra::vertex_index(const std::string& id) const {
  for (int i = 0; i < n_vertices(); ++i)
    if (vertex_ids[i] == id) return i;
  return -1;
}

int GentleAlgebra::arrow_index(const std::string& id) const {
  for (int i = 0; i < n_arrows(); ++i)
    if (arrows[i].id == id) return i;
  return -1;
}

std::vector<int> GentleAlgebra::arrows_out(int v) const {
  std::vector<int> r;
  for (int a = 0; a < n_arrows(); ++a)
    if (arrows[a].src == v) r.push_back(a);
  return r;
}

std::vector<int> GentleAlgebra::arrows_in(int v) const {
  std::vector<int> r;
  for (int a = 0; a < n_arrows(); ++a)
    if (arrows[a].tgt == v) r.push_back(a);
  return r;
}

int GentleAlgebra::degree(int v) const {
  int d = 0;
  for (const auto& a : arrows) {
    if (a.src == v) ++d;
    if (a.tgt == v) ++d;
  }
  return d;
}

void GentleAlgebra::build_tables() {
  int m = n_arrows();
  rel_next.assign(m, -1);
  rel_prev.assign(m, -1);
  comp_next.assign(m, -1);
  comp_prev.assign(m, -1);
  std::set<std::pair<int, int>> rel(relations.begin(), relations.end());
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      if (arrows[a].tgt != arrows[b].src) continue;
      if (rel.count({a, b})) {
        rel_next[a] = b;
        rel_prev[b] = a;
      } else {
        comp_next[a] = b;
        comp_prev[b] = a;
      }
    }
}

int letter_source(const GentleAlgebra& A, const Letter& l) {
  return l.fwd ? A.arrows[l.arrow].src : A.arrows[l.arrow].tgt;
}

int letter_target(const GentleAlgebra& A, const Letter& l) {
  return l.fwd ? A.arrows[l.arrow].tgt : A.arrows[l.arrow].src;
}

Walk Walk::trivial_at(int v) {
  Walk w;
  w.trivial = true;
  w.base = v;
  return w;
}

int Walk::source(const GentleAlgebra& A) const {
  return trivial ? base : letter_source(A, letters.front());
}

int Walk::target(const GentleAlgebra& A) const {
  return trivial ? base : letter_target(A, letters.back());
}

std::vector<int> Walk::vertex_seq(const GentleAlgebra& A) const {
  if (trivial) return {base};
  std::vector<int> vs;
  vs.push_back(letter_source(A, letters.front()));
  for (const auto& l : letters) vs.push_back(letter_target(A, l));
  return vs;
}

Walk Walk::inverse() const {
  if (trivial) return *this;
  Walk w;
  w.letters.reserve(letters.size());
  for (auto it = letters.rbegin(); it != letters.rend(); ++it)
    w.letters.push_back({it->arrow, !it->fwd});
  return w;
}

bool is_valid_walk(const GentleAlgebra& A, const Walk& w, std::string* why) {
  if (w.trivial) {
    if (w.base < 0 || w.base >= A.n_vertices()) {
      if (why) *why = "trivial walk anchored at unknown vertex";
      return false;
    }
    return true;
  }
  if (w.letters.empty()) {
    if (why) *why = "empty non-trivial walk";
    return false;
  }
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    const Letter& l = w.letters[i];
    if (l.arrow < 0 || l.arrow >= A.n_arrows()) {
      if (why) *why = "letter references unknown arrow";
      return false;
    }
    if (i > 0) {
      if (letter_target(A, w.letters[i - 1]) != letter_source(A, l)) {
        if (why) *why = "consecutive letter endpoints do not match";
        return false;
      }
      if (w.letters[i - 1].arrow == l.arrow && w.letters[i - 1].fwd != l.fwd) {
        if (why) *why = "immediate backtrack";
        return false;
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

bool ident_ok(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

}  // namespace

ParseResult parse_algebra(const std::string& text) {
  ParseResult res;
  GentleAlgebra A;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  auto fail = [&](int col, const std::string& msg) {
    res.parse_error = ParseError{lineno, col, msg};
    res.algebra.reset();
  };
  std::set<std::string> seen_ids;
  std::vector<std::pair<std::string, std::string>> rel_ids;
  bool have_vertices = false;

  while (std::getline(is, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::vector<std::string> toks = split_ws(line);
    if (toks.empty()) continue;
    const std::string& head = toks[0];
    if (head == "vertices:") {
      if (have_vertices) return fail(1, "duplicate vertices line"), res;
      have_vertices = true;
      for (std::size_t i = 1; i < toks.size(); ++i) {
        if (!ident_ok(toks[i])) return fail(static_cast<int>(i), "bad vertex identifier '" + toks[i] + "'"), res;
        if (seen_ids.count(toks[i])) return fail(static_cast<int>(i), "duplicate identifier '" + toks[i] + "'"), res;
        seen_ids.insert(toks[i]);
        A.vertex_ids.push_back(toks[i]);
      }
      if (A.vertex_ids.empty()) return fail(1, "vertices line declares no vertices"), res;
    } else if (head == "arrow:") {
      if (toks.size() != 4) return fail(1, "arrow line needs: arrow: <id> <source> <target>"), res;
      if (!ident_ok(toks[1])) return fail(2, "bad arrow identifier '" + toks[1] + "'"), res;
      if (seen_ids.count(toks[1])) return fail(2, "duplicate identifier '" + toks[1] + "'"), res;
      Arrow a;
      a.id = toks[1];
      a.src = A.vertex_index(toks[2]);
      a.tgt = A.vertex_index(toks[3]);
      if (a.src < 0) return fail(3, "undeclared vertex '" + toks[2] + "'"), res;
      if (a.tgt < 0) return fail(4, "undeclared vertex '" + toks[3] + "'"), res;
      seen_ids.insert(a.id);
      A.arrows.push_back(a);
    } else if (head == "rel:") {
      if (toks.size() != 3) return fail(1, "rel line needs: rel: <arrow1> <arrow2>"), res;
      rel_ids.push_back({toks[1], toks[2]});
    } else {
      return fail(1, "unknown directive '" + head + "'"), res;
    }
  }
  if (!have_vertices) return fail(1, "missing vertices line"), res;

  for (const auto& [ia, ib] : rel_ids) {
    int a = A.arrow_index(ia), b = A.arrow_index(ib);
    if (a < 0) return fail(2, "relation references undeclared arrow '" + ia + "'"), res;
    if (b < 0) return fail(3, "relation references undeclared arrow '" + ib + "'"), res;
    if (A.arrows[a].tgt != A.arrows[b].src)
      return fail(2, "relation (" + ia + "," + ib + ") is not composable"), res;
    A.relations.push_back({a, b});
  }
  std::sort(A.relations.begin(), A.relations.end());
  auto dup = std::adjacent_find(A.relations.begin(), A.relations.end());
  if (dup != A.relations.end()) return fail(1, "duplicate relation"), res;

  res.violations = validate_gentle(A);
  if (res.violations.empty()) {
    A.build_tables();
    res.algebra = std::move(A);
  } else {
    res.algebra = std::move(A);  // kept so callers can inspect; not validated
  }
  return res;
}

std::string render_algebra_file(const GentleAlgebra& A) {
  std::ostringstream os;
  os << "vertices:";
  for (const auto& v : A.vertex_ids) os << " " << v;
  os << "\n";
  for (const auto& a : A.arrows)
    os << "arrow: " << a.id << " " << A.vertex_ids[a.src] << " " << A.vertex_ids[a.tgt] << "\n";
  for (const auto& [a, b] : A.relations)
    os << "rel: " << A.arrows[a].id << " " << A.arrows[b].id << "\n";
  return os.str();
}

std::vector<Violation> validate_gentle(const GentleAlgebra& A) {
  std::vector<Violation> out;
  for (int v = 0; v < A.n_vertices(); ++v) {
    if (A.arrows_out(v).size() > 2)
      out.push_back({"at most two arrows out of each vertex", "vertex " + A.vertex_ids[v]});
    if (A.arrows_in(v).size() > 2)
      out.push_back({"at most two arrows into each vertex", "vertex " + A.vertex_ids[v]});
  }
  std::set<std::pair<int, int>> rel(A.relations.begin(), A.relations.end());
  for (int a = 0; a < A.n_arrows(); ++a) {
    int rn = 0, cn = 0, rp = 0, cp = 0;
    for (int b = 0; b < A.n_arrows(); ++b) {
      if (A.arrows[a].tgt == A.arrows[b].src) (rel.count({a, b}) ? rn : cn)++;
      if (A.arrows[b].tgt == A.arrows[a].src) (rel.count({b, a}) ? rp : cp)++;
    }
    const std::string id = A.arrows[a].id;
    if (rn > 1) out.push_back({"at most one arrow b such that 0 != ab in I", "arrow " + id});
    if (cn > 1) out.push_back({"at most one arrow b' such that ab' not in I", "arrow " + id});
    if (rp > 1) out.push_back({"at most one arrow c such that 0 != ca in I", "arrow " + id});
    if (cp > 1) out.push_back({"at most one arrow c' such that c'a not in I", "arrow " + id});
  }
  return out;
}

std::vector<Walk> full_relation_walks(const GentleAlgebra& A, int len) {
  std::vector<Walk> out;
  if (len <= 0) return out;
  for (int a0 = 0; a0 < A.n_arrows(); ++a0) {
    Walk w;
    w.letters.push_back({a0, true});
    int cur = a0;
    bool ok = true;
    for (int i = 1; i < len; ++i) {
      int nxt = A.rel_next[cur];
      if (nxt < 0) { ok = false; break; }
      w.letters.push_back({nxt, true});
      cur = nxt;
    }
    if (ok) out.push_back(std::move(w));
  }
  return out;  // ordered by first arrow index = lexicographic
}

bool has_full_relation_cycle(const GentleAlgebra& A) {
  // rel_next is a partial function; a cycle exists iff following it from some
  // arrow returns to it.
  int m = A.n_arrows();
  for (int a = 0; a < m; ++a) {
    int cur = a;
    for (int steps = 0; steps <= m; ++steps) {
      cur = A.rel_next[cur];
      if (cur < 0) break;
      if (cur == a) return true;
    }
  }
  return false;
}

namespace {

// Shared chain builder: `next` maps each arrow to its unique continuation.
std::vector<Thread> build_threads(const GentleAlgebra& A, const std::vector<int>& next,
                                  const std::vector<int>& prev) {
  std::vector<Thread> out;
  int m = A.n_arrows();
  std::vector<bool> used(m, false);
  // Non-cyclic maximal chains start at arrows without a predecessor.
  for (int a = 0; a < m; ++a) {
    if (used[a] || prev[a] >= 0) continue;
    Thread t;
    int cur = a;
    t.vertices.push_back(A.arrows[cur].src);
    while (cur >= 0 && !used[cur]) {
      used[cur] = true;
      t.arrows.push_back(cur);
      t.vertices.push_back(A.arrows[cur].tgt);
      cur = next[cur];
    }
    out.push_back(std::move(t));
  }
  // Remaining arrows sit on cycles.
  for (int a = 0; a < m; ++a) {
    if (used[a]) continue;
    Thread t;
    t.cyclic = true;
    int cur = a;
    while (!used[cur]) {
      used[cur] = true;
      t.arrows.push_back(cur);
      t.vertices.push_back(A.arrows[cur].src);
      cur = next[cur];
    }
    out.push_back(std::move(t));
  }
  // Slot bookkeeping: each vertex must occur in exactly two side slots.
  std::vector<int> slots(A.n_vertices(), 0);
  for (const auto& t : out)
    for (int v : t.vertices) slots[v]++;
  for (int v = 0; v < A.n_vertices(); ++v) {
    for (int k = slots[v]; k < 2; ++k) {
      Thread t;
      t.vertices.push_back(v);
      out.push_back(std::move(t));
    }
  }
  std::sort(out.begin(), out.end(), [](const Thread& x, const Thread& y) {
    if (x.vertices != y.vertices) return x.vertices < y.vertices;
    return x.arrows < y.arrows;
  });
  return out;
}

}  // namespace

std::vector<Thread> forbidden_threads(const GentleAlgebra& A) {
  return build_threads(A, A.rel_next, A.rel_prev);
}

std::vector<Thread> permitted_threads(const GentleAlgebra& A) {
  return build_threads(A, A.comp_next, A.comp_prev);
}

std::vector<Walk> nonzero_paths(const GentleAlgebra& A) {
  std::vector<Walk> out;
  for (int v = 0; v < A.n_vertices(); ++v) out.push_back(Walk::trivial_at(v));
  // Grow paths arrow by arrow along comp_next.
  std::vector<Walk> frontier;
  for (int a = 0; a < A.n_arrows(); ++a) {
    Walk w;
    w.letters.push_back({a, true});
    frontier.push_back(w);
  }
  while (!frontier.empty()) {
    std::vector<Walk> next;
    for (auto& w : frontier) {
      out.push_back(w);
      int last = w.letters.back().arrow;
      int nxt = A.comp_next[last];
      if (nxt >= 0) {
        Walk e = w;
        e.letters.push_back({nxt, true});
        // Finite dimensionality guarantees termination; guard anyway.
        if (e.letters.size() <= static_cast<std::size_t>(A.n_arrows()) + 1) next.push_back(e);
      }
    }
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end(), [&](const Walk& x, const Walk& y) {
    auto key = [&](const Walk& w) {
      std::vector<int> k;
      k.push_back(static_cast<int>(w.length()));
      if (w.trivial) k.push_back(w.base);
      for (const auto& l : w.letters) k.push_back(l.arrow);
      return k;
    };
    return key(x) < key(y);
  });
  return out;
}

}  // namespace gentle
