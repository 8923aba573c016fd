#include "gentle/homology.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace gentle {

namespace {

// Nonzero paths from v, as arrow index sequences, trivial path first;
// deterministic order (length, then arrow sequence).
std::vector<std::vector<int>> paths_from(const GentleAlgebra& A, int v) {
  std::vector<std::vector<int>> out;
  out.push_back({});
  std::vector<std::vector<int>> frontier;
  for (int a = 0; a < A.n_arrows(); ++a)
    if (A.arrows[a].src == v) frontier.push_back({a});
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (auto& p : frontier) {
      out.push_back(p);
      int nxt = A.comp_next[p.back()];
      if (nxt >= 0) {
        auto e = p;
        e.push_back(nxt);
        next.push_back(std::move(e));
      }
    }
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x < y;
  });
  return out;
}

int path_target(const GentleAlgebra& A, int v, const std::vector<int>& p) {
  return p.empty() ? v : A.arrows[p.back()].tgt;
}

}  // namespace

template <typename F>
Rep<F> rep_of_string_module(const GentleAlgebra& A, const Str& s) {
  StringModule sm = string_module(A, s);
  Rep<F> r;
  r.dims = sm.dims;
  // local index per position
  std::vector<int> local(sm.pos_vertex.size());
  std::vector<int> cnt(A.n_vertices(), 0);
  for (std::size_t i = 0; i < sm.pos_vertex.size(); ++i) local[i] = cnt[sm.pos_vertex[i]]++;
  r.act.resize(A.n_arrows());
  for (int a = 0; a < A.n_arrows(); ++a) {
    Mat<F> m(r.dims[A.arrows[a].tgt], r.dims[A.arrows[a].src]);
    for (auto [from, to] : sm.actions[a]) m(local[to], local[from]) = F(1);
    r.act[a] = m;
  }
  return r;
}

template <typename F>
Rep<F> rep_of_projective(const GentleAlgebra& A, int v) {
  auto paths = paths_from(A, v);
  Rep<F> r;
  r.dims.assign(A.n_vertices(), 0);
  std::vector<int> local(paths.size());
  for (std::size_t i = 0; i < paths.size(); ++i)
    local[i] = r.dims[path_target(A, v, paths[i])]++;
  r.act.resize(A.n_arrows());
  for (int a = 0; a < A.n_arrows(); ++a)
    r.act[a] = Mat<F>(r.dims[A.arrows[a].tgt], r.dims[A.arrows[a].src]);
  for (std::size_t i = 0; i < paths.size(); ++i) {
    int u = path_target(A, v, paths[i]);
    for (int a = 0; a < A.n_arrows(); ++a) {
      if (A.arrows[a].src != u) continue;
      bool nonzero = paths[i].empty() ? true : A.comp_next[paths[i].back()] == a;
      if (!nonzero) continue;
      auto q = paths[i];
      q.push_back(a);
      auto it = std::lower_bound(paths.begin(), paths.end(), q, [](const auto& x, const auto& y) {
        if (x.size() != y.size()) return x.size() < y.size();
        return x < y;
      });
      r.act[a](local[it - paths.begin()], local[i]) = F(1);
    }
  }
  return r;
}

template <typename F>
Rep<F> direct_sum(const Rep<F>& a, const Rep<F>& b) {
  Rep<F> r;
  r.dims.resize(a.dims.size());
  for (std::size_t v = 0; v < a.dims.size(); ++v) r.dims[v] = a.dims[v] + b.dims[v];
  r.act.resize(a.act.size());
  for (std::size_t k = 0; k < a.act.size(); ++k) {
    const Mat<F>&x = a.act[k], &y = b.act[k];
    Mat<F> m(x.rows() + y.rows(), x.cols() + y.cols());
    for (std::size_t i = 0; i < x.rows(); ++i)
      for (std::size_t j = 0; j < x.cols(); ++j) m(i, j) = x(i, j);
    for (std::size_t i = 0; i < y.rows(); ++i)
      for (std::size_t j = 0; j < y.cols(); ++j) m(x.rows() + i, x.cols() + j) = y(i, j);
    r.act[k] = m;
  }
  return r;
}

// Hom(M,N): solve the commuting system for per-vertex matrices.
template <typename F>
std::vector<RepMap<F>> hom_basis(const GentleAlgebra& A, const Rep<F>& M, const Rep<F>& N) {
  // unknowns: entries of phi_v (N.dims[v] x M.dims[v]), flattened
  std::vector<int> offset(A.n_vertices() + 1, 0);
  for (int v = 0; v < A.n_vertices(); ++v)
    offset[v + 1] = offset[v] + N.dims[v] * M.dims[v];
  int nvars = offset[A.n_vertices()];
  // equations: per arrow a: phi_tgt * actM[a] - actN[a] * phi_src = 0
  std::vector<std::vector<F>> rows;
  for (int a = 0; a < A.n_arrows(); ++a) {
    int s = A.arrows[a].src, t = A.arrows[a].tgt;
    for (int i = 0; i < N.dims[t]; ++i)
      for (int j = 0; j < M.dims[s]; ++j) {
        std::vector<F> row(nvars, F(0));
        // (phi_t * actM[a])(i, j) = sum_k phi_t(i,k) actM[a](k,j)
        for (int k = 0; k < M.dims[t]; ++k)
          row[offset[t] + i * M.dims[t] + k] += M.act[a](k, j);
        // (actN[a] * phi_s)(i, j) = sum_k actN[a](i,k) phi_s(k,j)
        for (int k = 0; k < N.dims[s]; ++k)
          row[offset[s] + k * M.dims[s] + j] -= N.act[a](i, k);
        bool nz = false;
        for (auto& x : row)
          if (!is_zero(x)) { nz = true; break; }
        if (nz) rows.push_back(std::move(row));
      }
  }
  Mat<F> sys(rows.size(), nvars);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < nvars; ++j) sys(i, j) = rows[i][j];
  Mat<F> ker = kernel_basis(sys);
  std::vector<RepMap<F>> out;
  for (std::size_t c = 0; c < ker.cols(); ++c) {
    RepMap<F> m;
    m.comp.resize(A.n_vertices());
    for (int v = 0; v < A.n_vertices(); ++v) {
      Mat<F> phi(N.dims[v], M.dims[v]);
      for (int i = 0; i < N.dims[v]; ++i)
        for (int j = 0; j < M.dims[v]; ++j) phi(i, j) = ker(offset[v] + i * M.dims[v] + j, c);
      m.comp[v] = phi;
    }
    out.push_back(std::move(m));
  }
  return out;
}

template <typename F>
int hom_dim(const GentleAlgebra& A, const Rep<F>& M, const Rep<F>& N) {
  return static_cast<int>(hom_basis(A, M, N).size());
}

template <typename F>
Cover<F> minimal_cover(const GentleAlgebra& A, const Rep<F>& M) {
  Cover<F> c;
  // radical at v = span of all arrow images into v; lift a basis of the top
  std::vector<std::vector<std::vector<F>>> lifts(A.n_vertices());
  for (int v = 0; v < A.n_vertices(); ++v) {
    int d = M.dims[v];
    std::vector<std::vector<F>> rad;
    for (int a = 0; a < A.n_arrows(); ++a) {
      if (A.arrows[a].tgt != v) continue;
      for (std::size_t j = 0; j < M.act[a].cols(); ++j) {
        std::vector<F> col(d);
        for (int i = 0; i < d; ++i) col[i] = M.act[a](i, j);
        rad.push_back(col);
      }
    }
    // columns = rad vectors then identity; pivot columns past the rad part
    // give top lifts
    Mat<F> m(d, rad.size() + d);
    for (std::size_t j = 0; j < rad.size(); ++j)
      for (int i = 0; i < d; ++i) m(i, j) = rad[j][i];
    for (int i = 0; i < d; ++i) m(i, rad.size() + i) = F(1);
    auto piv = rref(m);
    for (auto p : piv) {
      if (p < rad.size()) continue;
      int idx = static_cast<int>(p - rad.size());
      std::vector<F> e(d, F(0));
      e[idx] = F(1);
      lifts[v].push_back(e);
    }
  }
  // assemble P = ⊕ P_v^{#lifts[v]} and pi
  Rep<F> P;
  P.dims.assign(A.n_vertices(), 0);
  P.act.resize(A.n_arrows());
  RepMap<F> pi;
  pi.comp.resize(A.n_vertices());
  for (int v = 0; v < A.n_vertices(); ++v) pi.comp[v] = Mat<F>(M.dims[v], 0);
  bool first = true;
  auto append = [&](const Rep<F>& Q, const RepMap<F>& f) {
    if (first) {
      P = Q;
      pi = f;
      first = false;
      return;
    }
    // stack pi columns per vertex alongside existing ones
    RepMap<F> np;
    np.comp.resize(A.n_vertices());
    for (int v = 0; v < A.n_vertices(); ++v) {
      Mat<F> m(M.dims[v], pi.comp[v].cols() + f.comp[v].cols());
      for (int i = 0; i < M.dims[v]; ++i) {
        for (std::size_t j = 0; j < pi.comp[v].cols(); ++j) m(i, j) = pi.comp[v](i, j);
        for (std::size_t j = 0; j < f.comp[v].cols(); ++j)
          m(i, pi.comp[v].cols() + j) = f.comp[v](i, j);
      }
      np.comp[v] = m;
    }
    P = direct_sum(P, Q);
    pi = np;
  };
  for (int v = 0; v < A.n_vertices(); ++v) {
    if (lifts[v].empty()) continue;
    Rep<F> Pv = rep_of_projective<F>(A, v);
    auto paths = paths_from(A, v);
    std::vector<int> local(paths.size());
    {
      std::vector<int> cnt(A.n_vertices(), 0);
      for (std::size_t i = 0; i < paths.size(); ++i)
        local[i] = cnt[path_target(A, v, paths[i])]++;
    }
    for (const auto& lift : lifts[v]) {
      c.shape.summands.push_back(v);
      // pi on this copy: basis (path p) -> lift * actM(p)
      RepMap<F> f;
      f.comp.resize(A.n_vertices());
      for (int u = 0; u < A.n_vertices(); ++u) f.comp[u] = Mat<F>(M.dims[u], Pv.dims[u]);
      for (std::size_t i = 0; i < paths.size(); ++i) {
        std::vector<F> vec = lift;
        int cur = v;
        for (int a : paths[i]) {
          std::vector<F> nv(M.dims[A.arrows[a].tgt], F(0));
          for (std::size_t r = 0; r < nv.size(); ++r)
            for (std::size_t k = 0; k < vec.size(); ++k) nv[r] += M.act[a](r, k) * vec[k];
          vec = nv;
          cur = A.arrows[a].tgt;
        }
        for (std::size_t r = 0; r < vec.size(); ++r) f.comp[cur](r, local[i]) = vec[r];
      }
      append(Pv, f);
    }
  }
  if (first) {
    // zero module: empty cover
    P.dims.assign(A.n_vertices(), 0);
    P.act.resize(A.n_arrows());
    for (int a = 0; a < A.n_arrows(); ++a)
      P.act[a] = Mat<F>(0, 0);
    for (int v = 0; v < A.n_vertices(); ++v) pi.comp[v] = Mat<F>(M.dims[v], 0);
  }
  for (int a = 0; a < A.n_arrows(); ++a)
    if (P.act[a].rows() != static_cast<std::size_t>(P.dims[A.arrows[a].tgt]))
      P.act[a] = Mat<F>(P.dims[A.arrows[a].tgt], P.dims[A.arrows[a].src]);
  c.P = P;
  c.pi = pi;
  std::sort(c.shape.summands.begin(), c.shape.summands.end());
  return c;
}

template <typename F>
Sub<F> kernel_subrep(const GentleAlgebra& A, const RepMap<F>& f, const Rep<F>& dom,
                     const Rep<F>& cod) {
  (void)cod;
  Sub<F> s;
  s.K.dims.assign(A.n_vertices(), 0);
  s.K.act.resize(A.n_arrows());
  s.incl.comp.resize(A.n_vertices());
  std::vector<Mat<F>> kb(A.n_vertices());
  for (int v = 0; v < A.n_vertices(); ++v) {
    kb[v] = kernel_basis(f.comp[v]);
    s.K.dims[v] = static_cast<int>(kb[v].cols());
    s.incl.comp[v] = kb[v];
  }
  for (int a = 0; a < A.n_arrows(); ++a) {
    int sv = A.arrows[a].src, tv = A.arrows[a].tgt;
    // act on kernel basis, re-express in kernel basis of target
    Mat<F> img = dom.act[a] * kb[sv];
    Mat<F> m(s.K.dims[tv], s.K.dims[sv]);
    for (std::size_t j = 0; j < img.cols(); ++j) {
      std::vector<F> b(img.rows());
      for (std::size_t i = 0; i < img.rows(); ++i) b[i] = img(i, j);
      bool ok = true;
      std::vector<F> x = solve(kb[tv], b, ok);
      if (!ok) throw std::runtime_error("kernel not closed under action");
      for (int i = 0; i < s.K.dims[tv]; ++i) m(i, j) = x[i];
    }
    s.K.act[a] = m;
  }
  return s;
}

namespace {

template <typename F>
RepMap<F> compose(const RepMap<F>& g, const RepMap<F>& f) {  // g after f
  RepMap<F> r;
  r.comp.resize(f.comp.size());
  for (std::size_t v = 0; v < f.comp.size(); ++v) r.comp[v] = g.comp[v] * f.comp[v];
  return r;
}

// Express each phi∘d in the span of `basis` (both lists of RepMaps from P to
// N); returns the coefficient matrix of delta in those bases.
template <typename F>
Mat<F> map_matrix_in_basis(const std::vector<RepMap<F>>& images,
                           const std::vector<RepMap<F>>& basis) {
  if (basis.empty()) return Mat<F>(0, images.size());
  // flatten each RepMap to a plain vector
  auto flatten = [](const RepMap<F>& m) {
    std::vector<F> out;
    for (const auto& c : m.comp)
      for (std::size_t i = 0; i < c.rows(); ++i)
        for (std::size_t j = 0; j < c.cols(); ++j) out.push_back(c(i, j));
    return out;
  };
  std::vector<std::vector<F>> bs;
  for (const auto& b : basis) bs.push_back(flatten(b));
  std::size_t dim = bs[0].size();
  Mat<F> bm(dim, bs.size());
  for (std::size_t j = 0; j < bs.size(); ++j)
    for (std::size_t i = 0; i < dim; ++i) bm(i, j) = bs[j][i];
  Mat<F> out(basis.size(), images.size());
  for (std::size_t c = 0; c < images.size(); ++c) {
    auto img = flatten(images[c]);
    bool ok = true;
    std::vector<F> x = solve(bm, img, ok);
    if (!ok) throw std::runtime_error("image not in hom space span");
    for (std::size_t i = 0; i < basis.size(); ++i) out(i, c) = x[i];
  }
  return out;
}

}  // namespace

template <typename F>
std::vector<int> ext_dims(const GentleAlgebra& A, const Rep<F>& M, const Rep<F>& N, int maxk,
                          int depth) {
  // Minimal resolution ... -> P1 -> P0 -> M -> 0, maps d_i : P_i -> P_{i-1}.
  std::vector<Rep<F>> P;
  std::vector<RepMap<F>> d;  // d[i] : P[i] -> P[i-1] (d[0] unused)
  Rep<F> cur = M;
  Cover<F> c0 = minimal_cover(A, cur);
  P.push_back(c0.P);
  RepMap<F> onto = c0.pi;
  Rep<F> prev_dom = M;
  for (int i = 1; i <= maxk + 1; ++i) {
    if (i > depth) throw DepthExceeded{depth};
    Sub<F> K = kernel_subrep(A, onto, P.back(), prev_dom);
    if (K.K.zero()) break;
    Cover<F> c = minimal_cover(A, K.K);
    RepMap<F> di = compose(K.incl, c.pi);
    P.push_back(c.P);
    d.push_back(di);  // d[i-1] holds d_i : P[i] -> P[i-1]
    onto = c.pi;
    prev_dom = K.K;
  }
  // cochain: Hom(P0,N) -> Hom(P1,N) -> ...
  std::vector<std::vector<RepMap<F>>> homs;
  for (const auto& p : P) homs.push_back(hom_basis(A, p, N));
  std::vector<int> ranks;  // rank of delta_i : Hom(P_{i-1},N) -> Hom(P_i,N)
  for (std::size_t i = 1; i < P.size(); ++i) {
    std::vector<RepMap<F>> images;
    for (const auto& phi : homs[i - 1]) images.push_back(compose(phi, d[i - 1]));
    Mat<F> delta = map_matrix_in_basis(images, homs[i]);
    ranks.push_back(static_cast<int>(rank(delta)));
  }
  std::vector<int> out(maxk + 1, 0);
  for (int k = 0; k <= maxk; ++k) {
    if (k >= static_cast<int>(P.size())) { out[k] = 0; continue; }
    int dimk = static_cast<int>(homs[k].size());
    int rk_out = (k < static_cast<int>(ranks.size())) ? ranks[k] : 0;
    int rk_in = (k >= 1) ? ranks[k - 1] : 0;
    out[k] = dimk - rk_out - rk_in;
  }
  return out;
}

int hom_dim_q(const GentleAlgebra& A, const Str& m, const Str& n) {
  return hom_dim(A, rep_of_string_module<Rat>(A, m), rep_of_string_module<Rat>(A, n));
}

int ext_dim_q(const GentleAlgebra& A, const Str& m, const Str& n, int k, int depth) {
  auto v = ext_dims(A, rep_of_string_module<Rat>(A, m), rep_of_string_module<Rat>(A, n), k, depth);
  return v[k];
}

bool is_projective_rep(const GentleAlgebra& A, const Rep<Rat>& M) {
  if (M.zero()) return true;
  Cover<Rat> c = minimal_cover(A, M);
  return c.P.total_dim() == M.total_dim();
}

int proj_dim(const GentleAlgebra& A, const Rep<Rat>& M, int depth) {
  Rep<Rat> cur = M;
  int d = 0;
  while (!is_projective_rep(A, cur)) {
    if (d > depth) throw DepthExceeded{depth};
    Cover<Rat> c = minimal_cover(A, cur);
    Sub<Rat> K = kernel_subrep(A, c.pi, c.P, cur);
    cur = K.K;
    ++d;
  }
  return d;
}

GlobalDim global_dimension(const GentleAlgebra& A, int depth) {
  GlobalDim g;
  if (has_full_relation_cycle(A)) {
    g.infinite = true;
    return g;
  }
  int best = 0;
  for (int v = 0; v < A.n_vertices(); ++v) {
    Rep<Rat> s = rep_of_string_module<Rat>(A, Str::trivial(v));
    best = std::max(best, proj_dim(A, s, depth));
  }
  g.value = best;
  return g;
}

// ---------------------------------------------------------------------------
// Decomposition into string summands

namespace {

// All canonical strings whose dimension vector fits under `budget`.
std::vector<Str> candidate_strings(const GentleAlgebra& A, const std::vector<int>& budget) {
  std::vector<Str> out;
  std::set<std::vector<int>> seen;
  int total = std::accumulate(budget.begin(), budget.end(), 0);
  auto add = [&](const Walk& w) {
    Str s = Str::from_walk(A, w);
    if (seen.insert(s.key()).second) out.push_back(s);
  };
  for (int v = 0; v < A.n_vertices(); ++v)
    if (budget[v] > 0) add(Walk::trivial_at(v));
  std::vector<std::pair<Walk, std::vector<int>>> frontier;
  for (int a = 0; a < A.n_arrows(); ++a)
    for (bool fwd : {true, false}) {
      Walk w;
      w.letters.push_back({a, fwd});
      std::vector<int> used(A.n_vertices(), 0);
      used[letter_source(A, {a, fwd})]++;
      used[letter_target(A, {a, fwd})]++;
      bool ok = true;
      for (int v = 0; v < A.n_vertices(); ++v)
        if (used[v] > budget[v]) ok = false;
      if (ok) frontier.push_back({w, used});
    }
  for (int len = 1; len < total && !frontier.empty(); ++len) {
    std::vector<std::pair<Walk, std::vector<int>>> next;
    for (auto& [w, used] : frontier) {
      add(w);
      int end = w.target(A);
      const Letter& last = w.letters.back();
      for (int a = 0; a < A.n_arrows(); ++a)
        for (bool fwd : {true, false}) {
          Letter l{a, fwd};
          if (letter_source(A, l) != end) continue;
          if (l.arrow == last.arrow && l.fwd != last.fwd) continue;
          if (last.fwd && l.fwd && A.has_relation(last.arrow, l.arrow)) continue;
          if (!last.fwd && !l.fwd && A.has_relation(l.arrow, last.arrow)) continue;
          auto used2 = used;
          used2[letter_target(A, l)]++;
          if (used2[letter_target(A, l)] > budget[letter_target(A, l)]) continue;
          Walk e = w;
          e.letters.push_back(l);
          next.push_back({std::move(e), std::move(used2)});
        }
    }
    frontier = std::move(next);
  }
  for (auto& [w, used] : frontier) add(w);
  std::sort(out.begin(), out.end(), [](const Str& x, const Str& y) {
    if (x.length() != y.length()) return x.length() > y.length();
    return x < y;
  });
  return out;
}

int total_dim_of(const Rep<Rat>& r) { return r.total_dim(); }

// trace of (f * g) acting on ⊕_v X_v
Rat pair_trace(const RepMap<Rat>& f, const RepMap<Rat>& g) {
  Rat t = 0;
  for (std::size_t v = 0; v < f.comp.size(); ++v) {
    Mat<Rat> m = f.comp[v] * g.comp[v];
    for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  }
  return t;
}

// Is z in rad(End X)? In characteristic zero the Jacobson radical of a f.d.
// algebra acting faithfully equals the radical of the trace form.
bool in_radical(const std::vector<RepMap<Rat>>& end_basis, const RepMap<Rat>& z) {
  for (const auto& b : end_basis)
    if (!is_zero(pair_trace(z, b))) return false;
  return true;
}

}  // namespace

bool reps_isomorphic(const GentleAlgebra& A, const Rep<Rat>& X, const Rep<Rat>& Y) {
  if (X.dims != Y.dims) return false;
  if (X.zero()) return true;
  auto fwd = hom_basis(A, X, Y);
  auto bwd = hom_basis(A, Y, X);
  auto endx = hom_basis(A, X, X);
  // For indecomposables with End/rad = k the composition pairing detects an
  // isomorphism; for decomposables used in tests this is still a sound
  // iso test only when one exists pairwise. We use it for indecomposables.
  for (const auto& f : fwd)
    for (const auto& g : bwd) {
      RepMap<Rat> gf = compose(g, f);
      if (!in_radical(endx, gf)) return true;
    }
  return false;
}

std::vector<Summand> peel_into_strings(const GentleAlgebra& A, Rep<Rat> M) {
  std::vector<Summand> out;
  int guard = 0;
  while (!M.zero()) {
    if (++guard > 4096) throw std::runtime_error("peel_into_strings: too many summands");
    auto cands = candidate_strings(A, M.dims);
    bool peeled = false;
    for (const auto& cand : cands) {
      Rep<Rat> X = rep_of_string_module<Rat>(A, cand);
      if (X.total_dim() > total_dim_of(M)) continue;
      auto fwd = hom_basis(A, X, M);
      if (fwd.empty()) continue;
      auto bwd = hom_basis(A, M, X);
      if (bwd.empty()) continue;
      auto endx = hom_basis(A, X, X);
      const RepMap<Rat>* found_f = nullptr;
      const RepMap<Rat>* found_g = nullptr;
      for (const auto& f : fwd) {
        for (const auto& g : bwd) {
          RepMap<Rat> gf = compose(g, f);
          if (!in_radical(endx, gf)) {
            found_f = &f;
            found_g = &g;
            break;
          }
        }
        if (found_f) break;
      }
      if (!found_f) continue;
      // theta = (gf)^{-1} g : M -> X is a retraction of f; M = im f ⊕ ker theta
      RepMap<Rat> gf = compose(*found_g, *found_f);
      RepMap<Rat> theta;
      theta.comp.resize(A.n_vertices());
      for (int v = 0; v < A.n_vertices(); ++v) {
        // invert gf.comp[v]
        std::size_t n = gf.comp[v].rows();
        Mat<Rat> aug(n, 2 * n);
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = 0; j < n; ++j) aug(i, j) = gf.comp[v](i, j);
          aug(i, n + i) = 1;
        }
        auto piv = rref(aug);
        if (piv.size() != n) throw std::runtime_error("retract not invertible");
        Mat<Rat> inv(n, n);
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
        theta.comp[v] = inv * found_g->comp[v];
      }
      Sub<Rat> rest = kernel_subrep(A, theta, M, X);
      out.push_back({cand, false});
      M = rest.K;
      peeled = true;
      break;
    }
    if (!peeled) throw std::runtime_error("representation has a non-string summand");
  }
  for (auto& s : out)
    s.projective = is_projective_rep(A, rep_of_string_module<Rat>(A, s.str));
  std::sort(out.begin(), out.end(), [](const Summand& x, const Summand& y) { return x.str < y.str; });
  return out;
}

std::vector<Summand> syzygy_oracle_rep(const GentleAlgebra& A, const Rep<Rat>& M) {
  Cover<Rat> c = minimal_cover(A, M);
  Sub<Rat> K = kernel_subrep(A, c.pi, c.P, M);
  return peel_into_strings(A, K.K);
}

std::vector<Summand> syzygy_oracle(const GentleAlgebra& A, const Str& s) {
  return syzygy_oracle_rep(A, rep_of_string_module<Rat>(A, s));
}

// ---------------------------------------------------------------------------
// Opposite algebra and D Tr

GentleAlgebra opposite_algebra(const GentleAlgebra& A) {
  GentleAlgebra op;
  op.vertex_ids = A.vertex_ids;
  op.arrows.resize(A.n_arrows());
  for (int a = 0; a < A.n_arrows(); ++a)
    op.arrows[a] = Arrow{A.arrows[a].id, A.arrows[a].tgt, A.arrows[a].src};
  for (auto [a, b] : A.relations) op.relations.push_back({b, a});
  std::sort(op.relations.begin(), op.relations.end());
  op.build_tables();
  return op;
}

namespace {

// multiply path p (arrow list in A, ending at v) by path q (starting at v);
// empty optional = zero in the algebra
std::optional<std::vector<int>> path_mult(const GentleAlgebra& A, const std::vector<int>& p,
                                          const std::vector<int>& q) {
  std::vector<int> r = p;
  for (int a : q) {
    if (!r.empty() && A.comp_next[r.back()] != a) return std::nullopt;
    r.push_back(a);
  }
  return r;
}

}  // namespace

std::optional<Str> tau_oracle(const GentleAlgebra& A, const Str& s) {
  Rep<Rat> M = rep_of_string_module<Rat>(A, s);
  // minimal presentation P1 --d--> P0 --pi--> M -> 0
  Cover<Rat> c0 = minimal_cover(A, M);
  Sub<Rat> K = kernel_subrep(A, c0.pi, c0.P, M);
  if (K.K.zero()) return std::nullopt;  // projective
  Cover<Rat> c1 = minimal_cover(A, K.K);
  RepMap<Rat> d = compose(K.incl, c1.pi);

  // Express d on projective generators: basis of P0/P1 labelled by
  // (summand copy, path from its vertex).
  GentleAlgebra op = opposite_algebra(A);
  struct ProjBasis {
    std::vector<int> verts;                       // summand vertices (sorted)
    std::vector<std::pair<int, std::vector<int>>> labels;  // per global index at each vertex slot
    std::vector<std::vector<int>> index_at;       // vertex -> global basis ids in local order
  };
  auto describe = [&](const CoverShape& shape) {
    ProjBasis pb;
    pb.verts = shape.summands;
    pb.index_at.assign(A.n_vertices(), {});
    std::vector<std::vector<std::pair<int, std::vector<int>>>> at(A.n_vertices());
    for (std::size_t s2 = 0; s2 < pb.verts.size(); ++s2) {
      auto paths = paths_from(A, pb.verts[s2]);
      for (const auto& p : paths) at[path_target(A, pb.verts[s2], p)].push_back({(int)s2, p});
    }
    for (int v = 0; v < A.n_vertices(); ++v)
      for (auto& lp : at[v]) {
        pb.labels.push_back(lp);
        pb.index_at[v].push_back(static_cast<int>(pb.labels.size()) - 1);
      }
    return pb;
  };
  // NB minimal_cover appends copies in vertex order, and paths_from uses the
  // same ordering used to build rep_of_projective, so local indices line up.
  ProjBasis b0 = describe(c0.shape);
  ProjBasis b1 = describe(c1.shape);

  // generator coordinates of P1 summand copies: the trivial path of each copy
  // image under d, expressed as combination of P0 basis (vertex-local).
  // Build Tr = coker over op algebra: D* : ⊕_t P^op_{v_t} -> ⊕_s P^op_{u_s}
  std::vector<int> t_verts = b0.verts;
  std::vector<int> s_verts = b1.verts;
  Rep<Rat> P0op, P1op;
  {
    bool first = true;
    for (int v : t_verts) {
      Rep<Rat> pv = rep_of_projective<Rat>(op, v);
      P0op = first ? pv : direct_sum(P0op, pv);
      first = false;
    }
    if (first) {
      P0op.dims.assign(op.n_vertices(), 0);
      P0op.act.assign(op.n_arrows(), Mat<Rat>(0, 0));
    }
    first = true;
    for (int v : s_verts) {
      Rep<Rat> pv = rep_of_projective<Rat>(op, v);
      P1op = first ? pv : direct_sum(P1op, pv);
      first = false;
    }
    if (first) {
      P1op.dims.assign(op.n_vertices(), 0);
      P1op.act.assign(op.n_arrows(), Mat<Rat>(0, 0));
    }
  }
  // op-basis labelling mirrors describe() but over op
  auto describe_op = [&](const std::vector<int>& verts) {
    std::vector<std::vector<std::pair<int, std::vector<int>>>> at(op.n_vertices());
    for (std::size_t s2 = 0; s2 < verts.size(); ++s2) {
      std::vector<std::vector<int>> ps;
      {
        // paths in op from verts[s2]
        ps.push_back({});
        std::vector<std::vector<int>> frontier;
        for (int a = 0; a < op.n_arrows(); ++a)
          if (op.arrows[a].src == verts[s2]) frontier.push_back({a});
        while (!frontier.empty()) {
          std::vector<std::vector<int>> nx;
          for (auto& p : frontier) {
            ps.push_back(p);
            int n2 = op.comp_next[p.back()];
            if (n2 >= 0) {
              auto e = p;
              e.push_back(n2);
              nx.push_back(std::move(e));
            }
          }
          frontier = std::move(nx);
        }
        std::sort(ps.begin(), ps.end(), [](const auto& x, const auto& y) {
          if (x.size() != y.size()) return x.size() < y.size();
          return x < y;
        });
      }
      for (const auto& p : ps) {
        int tgt = p.empty() ? verts[s2] : op.arrows[p.back()].tgt;
        at[tgt].push_back({(int)s2, p});
      }
    }
    struct OpBasis {
      std::vector<std::vector<std::pair<int, std::vector<int>>>> at;
    } ob{at};
    return ob;
  };
  auto ob0 = describe_op(t_verts);
  auto ob1 = describe_op(s_verts);

  // map D: for op-basis element (t, q) of P0op at vertex w [q = op-path from
  // v_t; as an A-path it is reverse(q) ending at v_t], send to
  // sum over s, p:  lambda_{s,(t,p)} * (s, concat_op)
  // where d(gen_s) = sum lambda * (t,p)-basis of P0, p an A-path v_t -> u_s,
  // and concat corresponds to (reverse(q) * p) in A, reversed into an op path.
  RepMap<Rat> D;
  D.comp.resize(op.n_vertices());
  for (int w = 0; w < op.n_vertices(); ++w)
    D.comp[w] = Mat<Rat>(P1op.dims[w], P0op.dims[w]);
  // d's columns on generators: generator of P1 copy s sits at vertex u_s with
  // local index = position of trivial path among paths at u_s for that copy.
  for (std::size_t s2 = 0; s2 < s_verts.size(); ++s2) {
    int us = s_verts[s2];
    // local index of the generator (s2, trivial path) within P1 at vertex us
    int gen_local = -1;
    for (std::size_t li = 0; li < b1.index_at[us].size(); ++li) {
      auto& lab = b1.labels[b1.index_at[us][li]];
      if (lab.first == (int)s2 && lab.second.empty()) {
        gen_local = static_cast<int>(li);
        break;
      }
    }
    if (gen_local < 0) throw std::runtime_error("generator not found");
    // d(gen) in coordinates of P0 at vertex us
    for (std::size_t li = 0; li < b0.index_at[us].size(); ++li) {
      Rat lambda = d.comp[us](li, gen_local);
      if (is_zero(lambda)) continue;
      auto& lab = b0.labels[b0.index_at[us][li]];
      int t = lab.first;
      const std::vector<int>& p = lab.second;  // A-path v_t -> u_s
      // For every op-basis (t, q) at any vertex w: image += lambda * (s2, q·p)
      for (int w = 0; w < op.n_vertices(); ++w) {
        for (std::size_t qi = 0; qi < ob0.at[w].size(); ++qi) {
          if (ob0.at[w][qi].first != t) continue;
          const std::vector<int>& q_op = ob0.at[w][qi].second;  // op path from v_t
          // as A-path: reverse(q_op), ends at v_t; multiply by p in A
          std::vector<int> qa(q_op.rbegin(), q_op.rend());
          auto prod = path_mult(A, qa, p);
          if (!prod) continue;
          // back to op path from u_s: reverse(prod)
          std::vector<int> r_op(prod->rbegin(), prod->rend());
          // find its index in ob1 at vertex w for copy s2
          int found = -1;
          for (std::size_t ri = 0; ri < ob1.at[w].size(); ++ri)
            if (ob1.at[w][ri].first == (int)s2 && ob1.at[w][ri].second == r_op) {
              found = static_cast<int>(ri);
              break;
            }
          if (found < 0) throw std::runtime_error("op path not found in projective basis");
          D.comp[w](found, qi) += lambda;
        }
      }
    }
  }
  // Tr = coker(D) over op: quotient of P1op by image of D
  Rep<Rat> tr;
  tr.dims.assign(op.n_vertices(), 0);
  tr.act.resize(op.n_arrows());
  std::vector<Mat<Rat>> proj(op.n_vertices());  // quotient projection
  std::vector<Mat<Rat>> lift(op.n_vertices());  // complement basis columns
  for (int w = 0; w < op.n_vertices(); ++w) {
    int dth = P1op.dims[w];
    Mat<Rat> m(dth, D.comp[w].cols() + dth);
    for (std::size_t j = 0; j < D.comp[w].cols(); ++j)
      for (int i = 0; i < dth; ++i) m(i, j) = D.comp[w](i, j);
    for (int i = 0; i < dth; ++i) m(i, D.comp[w].cols() + i) = 1;
    Mat<Rat> mc = m;
    auto piv = rref(mc);
    std::vector<int> comp_idx;
    for (auto p : piv)
      if (p >= D.comp[w].cols()) comp_idx.push_back(static_cast<int>(p - D.comp[w].cols()));
    tr.dims[w] = static_cast<int>(comp_idx.size());
    lift[w] = Mat<Rat>(dth, comp_idx.size());
    for (std::size_t j = 0; j < comp_idx.size(); ++j) lift[w](comp_idx[j], j) = 1;
    // projection: solve [imD | lift] x = v, keep lift coords
    Mat<Rat> full(dth, D.comp[w].cols() + comp_idx.size());
    for (std::size_t j = 0; j < D.comp[w].cols(); ++j)
      for (int i = 0; i < dth; ++i) full(i, j) = D.comp[w](i, j);
    for (std::size_t j = 0; j < comp_idx.size(); ++j) full(comp_idx[j], D.comp[w].cols() + j) = 1;
    proj[w] = Mat<Rat>(comp_idx.size(), dth);
    for (int colv = 0; colv < dth; ++colv) {
      std::vector<Rat> e(dth, Rat(0));
      e[colv] = 1;
      bool ok = true;
      auto x = solve(full, e, ok);
      if (!ok) throw std::runtime_error("cokernel projection failed");
      for (std::size_t j = 0; j < comp_idx.size(); ++j)
        proj[w](j, colv) = x[D.comp[w].cols() + j];
    }
  }
  for (int a = 0; a < op.n_arrows(); ++a) {
    int sv = op.arrows[a].src, tv = op.arrows[a].tgt;
    tr.act[a] = proj[tv] * (P1op.act[a] * lift[sv]);
  }
  // tau M = D(Tr): vector space dual, arrows act by transposes of the
  // corresponding op arrows (same index).
  Rep<Rat> tau;
  tau.dims = tr.dims;
  tau.act.resize(A.n_arrows());
  for (int a = 0; a < A.n_arrows(); ++a) tau.act[a] = tr.act[a].transpose();
  if (tau.zero()) return std::nullopt;
  auto parts = peel_into_strings(A, tau);
  if (parts.size() != 1) throw std::runtime_error("tau of an indecomposable decomposed");
  return parts[0].str;
}

Str injective_string(const GentleAlgebra& A, int v) {
  // maximal nonzero paths ending at v: walk p · q~ (p, q those paths)
  std::vector<std::vector<int>> maximal;
  for (int a = 0; a < A.n_arrows(); ++a) {
    if (A.arrows[a].tgt != v) continue;
    std::vector<int> p = {a};
    while (A.comp_prev[p.front()] >= 0) p.insert(p.begin(), A.comp_prev[p.front()]);
    maximal.push_back(p);
  }
  std::sort(maximal.begin(), maximal.end());
  if (maximal.empty()) return Str::trivial(v);
  Walk w;
  if (maximal.size() == 1) {
    for (int a : maximal[0]) w.letters.push_back({a, true});
    return Str::from_walk(A, w);
  }
  for (int a : maximal[0]) w.letters.push_back({a, true});
  for (auto it = maximal[1].rbegin(); it != maximal[1].rend(); ++it)
    w.letters.push_back({*it, false});
  return Str::from_walk(A, w);
}

Str projective_string(const GentleAlgebra& A, int v) {
  std::vector<std::vector<int>> maximal;
  for (int a = 0; a < A.n_arrows(); ++a) {
    if (A.arrows[a].src != v) continue;
    std::vector<int> p = {a};
    while (A.comp_next[p.back()] >= 0) p.push_back(A.comp_next[p.back()]);
    maximal.push_back(p);
  }
  std::sort(maximal.begin(), maximal.end());
  if (maximal.empty()) return Str::trivial(v);
  Walk w;
  if (maximal.size() == 1) {
    for (int a : maximal[0]) w.letters.push_back({a, true});
    return Str::from_walk(A, w);
  }
  // p~ then q: walk from end of first path back through v then out
  for (auto it = maximal[0].rbegin(); it != maximal[0].rend(); ++it)
    w.letters.push_back({*it, false});
  for (int a : maximal[1]) w.letters.push_back({a, true});
  return Str::from_walk(A, w);
}

// explicit instantiations
template struct Rep<Rat>;
template struct Rep<F5>;
template Rep<Rat> rep_of_string_module<Rat>(const GentleAlgebra&, const Str&);
template Rep<F5> rep_of_string_module<F5>(const GentleAlgebra&, const Str&);
template Rep<Rat> rep_of_projective<Rat>(const GentleAlgebra&, int);
template Rep<F5> rep_of_projective<F5>(const GentleAlgebra&, int);
template Rep<Rat> direct_sum<Rat>(const Rep<Rat>&, const Rep<Rat>&);
template Rep<F5> direct_sum<F5>(const Rep<F5>&, const Rep<F5>&);
template std::vector<RepMap<Rat>> hom_basis<Rat>(const GentleAlgebra&, const Rep<Rat>&,
                                                 const Rep<Rat>&);
template std::vector<RepMap<F5>> hom_basis<F5>(const GentleAlgebra&, const Rep<F5>&,
                                               const Rep<F5>&);
template int hom_dim<Rat>(const GentleAlgebra&, const Rep<Rat>&, const Rep<Rat>&);
template int hom_dim<F5>(const GentleAlgebra&, const Rep<F5>&, const Rep<F5>&);
template Cover<Rat> minimal_cover<Rat>(const GentleAlgebra&, const Rep<Rat>&);
template Cover<F5> minimal_cover<F5>(const GentleAlgebra&, const Rep<F5>&);
template Sub<Rat> kernel_subrep<Rat>(const GentleAlgebra&, const RepMap<Rat>&, const Rep<Rat>&,
                                     const Rep<Rat>&);
template Sub<F5> kernel_subrep<F5>(const GentleAlgebra&, const RepMap<F5>&, const Rep<F5>&,
                                   const Rep<F5>&);
template std::vector<int> ext_dims<Rat>(const GentleAlgebra&, const Rep<Rat>&, const Rep<Rat>&,
                                        int, int);
template std::vector<int> ext_dims<F5>(const GentleAlgebra&, const Rep<F5>&, const Rep<F5>&, int,
                                       int);

}  // namespace gentle
