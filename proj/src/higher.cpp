#include "gentle/higher.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace gentle {

namespace {

std::vector<Str> corner_summands(const SurfaceModel& S, const Str& s, int m, bool tau_family) {
  if (m < 2) throw std::runtime_error("corner-arc formulas need m >= 2");
  Arc a = Arc::of_string(S, s);
  std::vector<Str> out;
  for (int end = 0; end < 2; ++end) {
    ArcEnd e = end == 0 ? a.end0() : a.end1();
    int sides = S.polygons[e.poly].side_count();
    int w = sides - e.t;
    int t2 = sides - w + m;
    Arc c = tau_family ? corner_arc_tau(S, e.poly, t2) : corner_arc_omega(S, e.poly, t2);
    if (c.zero_arc) continue;
    out.push_back(c.to_string(S));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Str> omega_m(const SurfaceModel& S, const Str& s, int m) {
  std::vector<Str> parts = corner_summands(S, s, m, /*tau_family=*/false);
  std::vector<Str> out;
  for (auto& p : parts)
    if (!is_projective_rep(S.A, rep_of_string_module<Rat>(S.A, p))) out.push_back(p);
  return out;
}

std::vector<Str> tau_m(const SurfaceModel& S, const Str& s, int m) {
  return corner_summands(S, s, m, /*tau_family=*/true);
}

// ---------------------------------------------------------------------------
// tau_n sequences

TauSequenceReport tau_sequences(const GentleAlgebra& A, int n, bool strict_cycle) {
  if (n < 2) throw std::runtime_error("tau_n sequences need n >= 2");
  TauSequenceReport rep;
  auto rs = full_relation_walks(A, n);
  auto ts = nonzero_paths(A);

  // state after a block: (vertex = source of t, first arrow of t or -1)
  struct Edge {
    int r, t;
    int to_state;
  };
  auto state_id = [&](int v, int f) { return v * (A.n_arrows() + 1) + (f + 1); };
  int nstates = A.n_vertices() * (A.n_arrows() + 1);
  std::vector<std::vector<Edge>> from_state(nstates);
  // block usable from state (v, f): r starts at v with first(r) != f; t ends
  // at t(r) with last(t) != last(r) when t is non-trivial
  for (int v = 0; v < A.n_vertices(); ++v)
    for (int f = -1; f < A.n_arrows(); ++f) {
      for (std::size_t ri = 0; ri < rs.size(); ++ri) {
        const Walk& r = rs[ri];
        if (r.source(A) != v) continue;
        if (f >= 0 && r.letters.front().arrow == f) continue;
        for (std::size_t ti = 0; ti < ts.size(); ++ti) {
          const Walk& t = ts[ti];
          if (t.target(A) != r.target(A)) continue;
          int nf = -1;
          if (!t.trivial) {
            if (t.letters.back().arrow == r.letters.back().arrow) continue;
            nf = t.letters.front().arrow;
          }
          from_state[state_id(v, f)].push_back(
              {static_cast<int>(ri), static_cast<int>(ti), state_id(t.source(A), nf)});
        }
      }
    }

  auto blocks_of_path = [&](const std::vector<Edge>& path) {
    std::vector<TauBlock> bs;
    for (const auto& e : path) bs.push_back({rs[e.r], ts[e.t]});
    return bs;
  };

  // cycle search: from (v, -1), reach any state at vertex v in >= 1 block
  for (int v0 = 0; v0 < A.n_vertices(); ++v0) {
    std::map<int, std::pair<int, Edge>> par;  // state -> (prev state, edge)
    std::vector<int> queue;
    int start = state_id(v0, -1);
    std::vector<int> found;
    std::set<int> seen = {start};
    queue.push_back(start);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      int u = queue[qi];
      for (const auto& e : from_state[u]) {
        int w = e.to_state;
        int wv = w / (A.n_arrows() + 1);
        bool fresh = !seen.count(w);
        if (fresh) {
          seen.insert(w);
          par[w] = {u, e};
          queue.push_back(w);
        }
        if (wv == v0) {
          // reconstruct the path ending with this edge
          std::vector<Edge> path = {e};
          int cur = u;
          while (cur != start) {
            path.push_back(par[cur].second);
            cur = par[cur].first;
          }
          std::reverse(path.begin(), path.end());
          if (strict_cycle) {
            // wrap junction: first(r_1) != first(t_m) when t_m non-trivial
            const Walk& t_last = ts[path.back().t];
            const Walk& r_first = rs[path.front().r];
            if (!t_last.trivial &&
                r_first.letters.front().arrow == t_last.letters.front().arrow)
              continue;
          }
          rep.cycle = true;
          rep.witness = blocks_of_path(path);
          return rep;
        }
      }
    }
  }

  // no cycle: the block graph is acyclic on reachable states; longest path
  std::vector<int> memo(nstates, -1);
  std::vector<Edge> best_edge(nstates);
  std::function<int(int)> longest = [&](int u) -> int {
    if (memo[u] >= 0) return memo[u];
    memo[u] = 0;
    for (const auto& e : from_state[u]) {
      int len = 1 + longest(e.to_state);
      if (len > memo[u]) {
        memo[u] = len;
        best_edge[u] = e;
      }
    }
    return memo[u];
  };
  int best = 0, best_state = -1;
  for (int v = 0; v < A.n_vertices(); ++v) {
    int u = state_id(v, -1);
    int len = longest(u);
    if (len > best) {
      best = len;
      best_state = u;
    }
  }
  rep.max_length = best;
  if (best_state >= 0) {
    std::vector<Edge> path;
    int u = best_state;
    for (int i = 0; i < best; ++i) {
      Edge e = best_edge[u];
      path.push_back(e);
      u = e.to_state;
    }
    rep.witness = blocks_of_path(path);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// tau_n closure and finiteness

TauClosureResult tau_closure(const SurfaceModel& S, int n, int max_len_certificate) {
  TauClosureResult res;
  auto seq = tau_sequences(S.A, n);
  if (seq.cycle) {
    res.infinite = true;
    res.cycle_witness = seq;
    return res;
  }
  std::set<std::vector<int>> seen;
  std::vector<Str> frontier;
  for (int v = 0; v < S.A.n_vertices(); ++v) {
    Str inj = injective_string(S.A, v);
    if (seen.insert(inj.key()).second) frontier.push_back(inj);
  }
  res.levels.push_back(frontier);
  res.modules = frontier;
  int guard = 0;
  while (!frontier.empty()) {
    if (++guard > 1000) throw std::runtime_error("tau closure does not terminate");
    std::vector<Str> next;
    for (const auto& s : frontier)
      for (const auto& t : tau_m(S, s, n))
        if (seen.insert(t.key()).second) next.push_back(t);
    if (!next.empty()) {
      res.levels.push_back(next);
      res.modules.insert(res.modules.end(), next.begin(), next.end());
    }
    frontier = std::move(next);
  }
  std::sort(res.modules.begin(), res.modules.end());
  std::vector<Arc> arcs;
  for (const auto& s : res.modules) arcs.push_back(Arc::of_string(S, s));
  res.system = ArcSystem::of(S, arcs);
  res.classification = classify_partial_triangulation(S, res.system);
  res.admissible = is_admissible(S, res.system).ok;
  (void)max_len_certificate;
  return res;
}

TauDimensionReport tau_dimension(const SurfaceModel& S, int n) {
  TauDimensionReport rep;
  auto seq = tau_sequences(S.A, n);
  if (seq.cycle) {
    rep.infinite = true;
    return rep;
  }
  // iterate level sets of tau_n on the injectives
  std::vector<Str> level;
  {
    std::set<std::vector<int>> dedup;
    for (int v = 0; v < S.A.n_vertices(); ++v) {
      Str inj = injective_string(S.A, v);
      if (dedup.insert(inj.key()).second) level.push_back(inj);
    }
  }
  int l = 0;
  int guard = 0;
  while (!level.empty()) {
    if (++guard > 1000) throw std::runtime_error("tau iteration does not terminate");
    std::set<std::vector<int>> dedup;
    std::vector<Str> next;
    for (const auto& s : level)
      for (const auto& t : tau_m(S, s, n))
        if (dedup.insert(t.key()).second) next.push_back(t);
    if (next.empty()) break;
    ++l;
    level = std::move(next);
  }
  rep.max_nonvanishing = l;
  rep.min_vanishing = l + 1;
  return rep;
}

bool is_tau_finite(const SurfaceModel& S, int n) { return !tau_sequences(S.A, n).cycle; }

NCompleteReport is_n_complete(const GentleAlgebra& A, int n) {
  NCompleteReport rep;
  rep.complete = true;
  for (const auto& w : full_relation_walks(A, n)) {
    NCompleteRow row;
    row.walk = w;
    row.source = w.source(A);
    for (int a = 0; a < A.n_arrows(); ++a)
      if (A.arrows[a].src == row.source || A.arrows[a].tgt == row.source)
        row.adjacent_arrows.push_back(a);
    row.degree = static_cast<int>(row.adjacent_arrows.size());
    if (row.degree != 1) rep.complete = false;
    rep.table.push_back(row);
  }
  return rep;
}

namespace {

// polygon of a full-relation walk of n arrows (its thread polygon)
int polygon_of_walk(const SurfaceModel& S, const Walk& w) {
  std::vector<int> arrows;
  for (const auto& l : w.letters) arrows.push_back(l.arrow);
  for (std::size_t p = 0; p < S.polygons.size(); ++p)
    if (S.polygons[p].arrows == arrows) return static_cast<int>(p);
  throw std::runtime_error("full-relation walk is not a maximal chain");
}

}  // namespace

SubcategoryArcSets subcategory_arc_sets(const SurfaceModel& S, int n) {
  auto nc = is_n_complete(S.A, n);
  if (!nc.complete) throw std::runtime_error("algebra is not n-complete");
  SubcategoryArcSets out;
  std::set<std::vector<int>> inj_keys;
  std::vector<Arc> inj;
  for (int v = 0; v < S.A.n_vertices(); ++v)
    inj.push_back(distinguished_arc(S, v, DistinguishedKind::Injective));
  std::vector<int> sources;
  std::vector<Arc> top_corners;
  std::vector<std::vector<Arc>> ladders;
  for (const auto& row : nc.table) {
    int poly = polygon_of_walk(S, row.walk);
    top_corners.push_back(corner_arc_tau(S, poly, n + 1));
    sources.push_back(row.source);
    std::vector<Arc> ladder;
    for (int m = 1; m <= n + 1; ++m) {
      Arc g = corner_arc_tau(S, poly, m);
      if (!g.zero_arc) ladder.push_back(g);
    }
    ladders.push_back(ladder);
  }
  out.p_closure = inj;
  for (const auto& a : top_corners) out.p_closure.push_back(a);
  // delta_T: injective arcs minus the source injectives, plus the corners
  for (int v = 0; v < S.A.n_vertices(); ++v) {
    if (std::find(sources.begin(), sources.end(), v) != sources.end()) continue;
    out.delta_t.push_back(inj[v]);
  }
  for (const auto& a : top_corners) out.delta_t.push_back(a);
  out.p_perp = inj;
  for (const auto& l : ladders)
    for (const auto& a : l) out.p_perp.push_back(a);
  auto dedup = [](std::vector<Arc>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  };
  dedup(out.p_closure);
  dedup(out.delta_t);
  dedup(out.p_perp);
  if (static_cast<int>(out.delta_t.size()) != S.A.n_vertices())
    throw std::runtime_error("tilting set does not have n summands");
  // all pairwise weights in delta_T vanish
  for (std::size_t i = 0; i < out.delta_t.size(); ++i)
    for (std::size_t j = i; j < out.delta_t.size(); ++j)
      for (const auto& oi : oriented_intersections(S, out.delta_t[i], out.delta_t[j]))
        if (oi.weight != 0)
          throw std::runtime_error("tilting dissection carries a nonzero weight");
  return out;
}

GentleAlgebra cone(const GentleAlgebra& A, int n) {
  auto nc = is_n_complete(A, n);
  if (!nc.complete) throw std::runtime_error("cone needs an n-complete algebra");
  GentleAlgebra B = A;
  int k = 0;
  for (const auto& row : nc.table) {
    std::string vid = "c" + std::to_string(k++);
    while (B.vertex_index(vid) >= 0) vid = vid + "x";
    B.vertex_ids.push_back(vid);
    int nv = B.n_vertices() - 1;
    std::string aid = "b" + std::to_string(k - 1);
    while (B.arrow_index(aid) >= 0) aid = aid + "x";
    int last_arrow = row.walk.letters.back().arrow;
    B.arrows.push_back({aid, A.arrows[last_arrow].tgt, nv});
    B.relations.push_back({last_arrow, B.n_arrows() - 1});
  }
  std::sort(B.relations.begin(), B.relations.end());
  auto viol = validate_gentle(B);
  if (!viol.empty()) throw std::runtime_error("cone is not gentle: " + viol.front().clause);
  B.build_tables();
  return B;
}

AbsoluteCompletenessReport is_absolutely_complete(const SurfaceModel& S, int n) {
  auto nc = is_n_complete(S.A, n);
  if (!nc.complete) throw std::runtime_error("not n-complete");
  AbsoluteCompletenessReport rep;
  auto closure = tau_closure(S, n);
  if (closure.infinite) throw std::runtime_error("closure unexpectedly infinite");
  std::set<std::vector<int>> proj;
  for (int v = 0; v < S.A.n_vertices(); ++v) proj.insert(projective_string(S.A, v).key());
  std::set<std::vector<int>> ppart;
  for (const auto& s : closure.modules) {
    if (proj_dim(S.A, rep_of_string_module<Rat>(S.A, s)) < n) {
      rep.p_part.push_back(s);
      ppart.insert(s.key());
    }
  }
  rep.absolute = (ppart == proj);
  return rep;
}

}  // namespace gentle
