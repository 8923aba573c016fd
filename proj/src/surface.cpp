#include "gentle/surface.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "gentle/homology.hpp"

namespace gentle {

const Slot& SurfaceModel::other_slot(const Slot& s, int vertex) const {
  const auto& pair = vertex_slots[vertex];
  if (pair[0] == s) return pair[1];
  if (pair[1] == s) return pair[0];
  throw std::runtime_error("slot does not belong to vertex");
}

namespace {

struct UnionFind {
  std::vector<int> up;
  explicit UnionFind(int n) : up(n) { std::iota(up.begin(), up.end(), 0); }
  int find(int x) {
    while (up[x] != x) x = up[x] = up[up[x]];
    return x;
  }
  void unite(int x, int y) { up[find(x)] = find(y); }
};

}  // namespace

SurfaceModel build_surface(const GentleAlgebra& A) {
  SurfaceModel S;
  S.A = A;

  auto threads = forbidden_threads(A);
  for (const auto& t : threads) {
    Polygon P;
    P.sides = t.vertices;
    P.arrows = t.arrows;
    P.puncture = t.cyclic;
    S.polygons.push_back(P);
  }
  for (const auto& f : permitted_threads(A)) S.fans.push_back(f.vertices);

  // vertex -> two side slots
  std::vector<std::vector<Slot>> slots(A.n_vertices());
  for (int p = 0; p < static_cast<int>(S.polygons.size()); ++p) {
    const auto& sides = S.polygons[p].sides;
    for (int i = 0; i < static_cast<int>(sides.size()); ++i)
      slots[sides[i]].push_back({p, i + 1});
  }
  S.vertex_slots.resize(A.n_vertices());
  for (int v = 0; v < A.n_vertices(); ++v) {
    if (slots[v].size() != 2)
      throw std::runtime_error("vertex " + A.vertex_ids[v] + " has " +
                               std::to_string(slots[v].size()) + " side slots");
    std::sort(slots[v].begin(), slots[v].end());
    S.vertex_slots[v] = {slots[v][0], slots[v][1]};
  }

  // arrow -> polygon corner (sides i, i+1 of the chain polygon)
  S.arrow_corner.assign(A.n_arrows(), Slot{});
  for (int p = 0; p < static_cast<int>(S.polygons.size()); ++p) {
    const auto& arr = S.polygons[p].arrows;
    for (int i = 0; i < static_cast<int>(arr.size()); ++i)
      S.arrow_corner[arr[i]] = Slot{p, i + 1};
  }

  // Bullet corner classes. A non-puncture polygon with s sides has corners
  // 0..s (corner 0 before side 1, corner s after side s); a puncture polygon
  // has cyclic corners 0..s-1, corner k between sides k and k+1 (mod s).
  std::vector<int> corner_base(S.polygons.size() + 1, 0);
  for (std::size_t p = 0; p < S.polygons.size(); ++p) {
    int s = S.polygons[p].side_count();
    corner_base[p + 1] = corner_base[p] + (S.polygons[p].puncture ? s : s + 1);
  }
  UnionFind uf(corner_base.back());
  auto corner_id = [&](int poly, int k) {
    const Polygon& P = S.polygons[poly];
    int s = P.side_count();
    if (P.puncture) k = ((k % s) + s) % s;
    return corner_base[poly] + k;
  };
  // Side i of a polygon runs corner (i-1) -> i along the clockwise perimeter;
  // the matching slot of the same algebra vertex runs the other way.
  for (int v = 0; v < A.n_vertices(); ++v) {
    const Slot& s1 = S.vertex_slots[v][0];
    const Slot& s2 = S.vertex_slots[v][1];
    uf.unite(corner_id(s1.poly, s1.idx - 1), corner_id(s2.poly, s2.idx));
    uf.unite(corner_id(s1.poly, s1.idx), corner_id(s2.poly, s2.idx - 1));
  }
  std::vector<int> class_of(corner_base.back(), -1);
  int ncls = 0;
  for (int c = 0; c < corner_base.back(); ++c) {
    int r = uf.find(c);
    if (class_of[r] < 0) class_of[r] = ncls++;
    class_of[c] = class_of[r];
  }
  S.n_bullets = ncls;
  S.corner_class.resize(S.polygons.size());
  for (std::size_t p = 0; p < S.polygons.size(); ++p) {
    int s = S.polygons[p].side_count();
    int cnt = S.polygons[p].puncture ? s : s + 1;
    for (int k = 0; k < cnt; ++k) S.corner_class[p].push_back(class_of[corner_id(p, k)]);
  }

  // Boundary components: segL of a polygon runs from its circ point to corner
  // 0, segR from corner s back to the circ point.
  int npoly = static_cast<int>(S.polygons.size());
  std::vector<int> seg_in(ncls, -1), seg_out(ncls, -1);
  int m_count = 0;
  for (int p = 0; p < npoly; ++p) {
    if (S.polygons[p].puncture) continue;
    ++m_count;
    int s = S.polygons[p].side_count();
    int c0 = S.corner_class[p][0];
    int cs = S.corner_class[p][s];
    if (seg_in[c0] >= 0 || seg_out[cs] >= 0)
      throw std::runtime_error("bullet point has more than two boundary segments");
    seg_in[c0] = p;
    seg_out[cs] = p;
  }
  S.m = m_count;
  S.p = npoly - m_count;
  if (S.m > 0 && S.n_bullets != S.m)
    throw std::runtime_error("bullet class count does not match marked point count");
  for (int c = 0; c < ncls; ++c)
    if ((seg_in[c] < 0) != (seg_out[c] < 0))
      throw std::runtime_error("boundary segment mismatch at a bullet point");

  std::vector<bool> used(npoly, false);
  for (int start = 0; start < npoly; ++start) {
    if (S.polygons[start].puncture || used[start]) continue;
    std::vector<BoundaryPoint> cyc;
    int p = start;
    while (!used[p]) {
      used[p] = true;
      cyc.push_back({false, p});
      int c0 = S.corner_class[p][0];
      cyc.push_back({true, c0});
      // segL of p arrives at c0; the walk continues with segR of seg_out[c0]
      int q = seg_out[c0];
      if (q < 0) throw std::runtime_error("open boundary walk");
      p = q;
    }
    S.boundary.push_back(std::move(cyc));
  }
  S.b = static_cast<int>(S.boundary.size());

  // Genus twice: Euler count first, then the rank identity as a cross check.
  int V = S.n_bullets + S.m;
  int E = A.n_vertices() + 2 * S.m;
  int F = npoly;
  int chi = V - E + F;
  if ((2 - S.b - chi) % 2 != 0) throw std::runtime_error("odd Euler defect");
  S.g = (2 - S.b - chi) / 2;
  int n_expected = 2 * S.g - 2 + S.b + S.p + S.m;
  if (n_expected != A.n_vertices())
    throw std::runtime_error("rank identity violated: n=" + std::to_string(A.n_vertices()) +
                             " vs 2g-2+b+p+m=" + std::to_string(n_expected));
  return S;
}

Topology topology(const SurfaceModel& S) {
  int n_expected = 2 * S.g - 2 + S.b + S.p + S.m;
  if (n_expected != S.A.n_vertices()) throw std::runtime_error("rank identity violated");
  return {S.g, S.b, S.m, S.p};
}

Str distinguished_string(const SurfaceModel& S, int v, DistinguishedKind kind) {
  switch (kind) {
    case DistinguishedKind::Simple:
      return Str::trivial(v);
    case DistinguishedKind::Injective:
      return injective_string(S.A, v);
    case DistinguishedKind::Projective:
      return projective_string(S.A, v);
  }
  throw std::runtime_error("bad kind");
}

}  // namespace gentle
