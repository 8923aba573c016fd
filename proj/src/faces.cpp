#include "gentle/faces.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <tuple>

namespace gentle {

ArcSystem ArcSystem::of(const SurfaceModel& S, std::vector<Arc> arcs) {
  for (auto& a : arcs) a.canonicalize();
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
  arcs.erase(std::remove_if(arcs.begin(), arcs.end(), [](const Arc& a) { return a.zero_arc; }),
             arcs.end());
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    if (!is_simple(S, arcs[i])) throw std::runtime_error("arc system member is not simple");
    for (std::size_t j = i + 1; j < arcs.size(); ++j)
      if (interior_crossing_count(S, arcs[i], arcs[j]) != 0)
        throw std::runtime_error("arc system members cross");
  }
  ArcSystem sys;
  sys.arcs = std::move(arcs);
  return sys;
}

bool ArcSystem::contains(const Arc& a) const {
  return std::binary_search(arcs.begin(), arcs.end(), a);
}

char Face::type() const {
  if (!disk()) return 'B';
  if (bullet_count == 0 && seg_count == 0) {
    if (edge_count == 4) return '4';
    if (edge_count == 5) return '5';
    return 'B';
  }
  if (bullet_count == 1 && seg_count == 2) {
    if (edge_count == 3) return '1';
    if (edge_count == 4) return '2';
    if (edge_count == 5) return '3';
  }
  return 'B';
}

namespace {

// Point on a polygon perimeter.
struct Pt {
  enum Kind { Circ, Prong, Corner, Crossing } kind = Circ;
  int chord = -1;
  int bullet = -1;  // Corner: bullet class
  int side = 0;     // Crossing: side index
  int strand = -1;  // Crossing: position in the canonical edge order
};

// Perimeter gap between consecutive points.
struct Gap {
  enum Kind { SegL, SegR, Pivot, Glue } kind = Glue;
  int side = 0, pos = 0;  // glue pieces, position in polygon direction
};

struct Chord {
  int arc, pt_a, pt_b;
};

struct PolyDisk {
  std::vector<Pt> pts;
  std::vector<Gap> gaps;  // gap i follows point i
  std::vector<Chord> chords;
};

// One step of a subface walk.
struct Item {
  enum Kind { ArcPiece, Seg, GlueP, CornerMark } kind;
  int poly = -1;
  int chord = -1;       // ArcPiece
  bool seg_left = false;
  int side = 0, pos = 0;  // GlueP
};

struct SubWalk {
  int poly;
  std::vector<Item> items;
};

}  // namespace

FaceDecomposition face_decomposition(const SurfaceModel& S, const ArcSystem& sys) {
  for (const auto& P : S.polygons)
    if (P.puncture) throw std::runtime_error("face decomposition needs a puncture-free surface");

  std::vector<const Arc*> arcptrs;
  for (const auto& a : sys.arcs) arcptrs.push_back(&a);
  int nA = static_cast<int>(sys.arcs.size());

  std::vector<std::vector<Strand>> edge_strands(S.A.n_vertices());
  for (int v = 0; v < S.A.n_vertices(); ++v)
    edge_strands[v] = strands_on_edge(S, arcptrs, v, S.vertex_slots[v][0]);
  auto arc_index = [&](const Arc* a) {
    return static_cast<int>(std::find(arcptrs.begin(), arcptrs.end(), a) - arcptrs.begin());
  };

  // terminal prongs per polygon, ordered from segL towards segR
  struct Prong {
    int arc;
    int which;
    int t;
    Ray inward;
  };
  std::vector<std::vector<Prong>> prongs(S.polygons.size());
  for (int ai = 0; ai < nA; ++ai) {
    const Arc& a = sys.arcs[ai];
    prongs[a.end0().poly].push_back({ai, 0, a.end0().t, Ray{&a, 0, +1}});
    prongs[a.end1().poly].push_back({ai, 1, a.end1().t, Ray{&a, a.crossings() - 1, -1}});
  }
  for (auto& ps : prongs)
    std::sort(ps.begin(), ps.end(), [&](const Prong& x, const Prong& y) {
      if (x.t != y.t) return x.t < y.t;
      return compare_rays(S, x.inward, y.inward) < 0;
    });

  // per-polygon disks
  std::vector<PolyDisk> disks(S.polygons.size());
  // chord id of every arc segment: seg index s (0..crossings) where s=0 is
  // the end0 terminal segment and s=i is the piece after crossing i-1
  std::vector<std::vector<std::pair<int, int>>> seg_chord(nA);  // (poly, chord id)
  for (int ai = 0; ai < nA; ++ai)
    seg_chord[ai].assign(sys.arcs[ai].crossings() + 1, {-1, -1});

  for (std::size_t p = 0; p < S.polygons.size(); ++p) {
    const Polygon& P = S.polygons[p];
    PolyDisk& D = disks[p];
    int s = P.side_count();
    int k = static_cast<int>(prongs[p].size());
    // clockwise point cycle: [prongs descending | Circ if none], corner 0,
    // side-1 crossings, corner 1, ..., corner s
    struct PreChordRef {
      int arc = -1, seg = -1;
    };
    std::vector<PreChordRef> refs;
    if (k == 0) {
      D.pts.push_back({Pt::Circ});
      refs.push_back({});
    } else {
      for (int g = k - 1; g >= 0; --g) {
        Pt pt;
        pt.kind = Pt::Prong;
        D.pts.push_back(pt);
        const Prong& pr = prongs[p][g];
        int seg = pr.which == 0 ? 0 : sys.arcs[pr.arc].crossings();
        refs.push_back({pr.arc, seg});
      }
    }
    for (int j = 1; j <= s; ++j) {
      Pt corner;
      corner.kind = Pt::Corner;
      corner.bullet = S.corner_class[p][j - 1];
      D.pts.push_back(corner);
      refs.push_back({});
      int v = P.sides[j - 1];
      Slot here{static_cast<int>(p), j};
      std::vector<Strand> row = edge_strands[v];
      std::vector<int> posid(row.size());
      std::iota(posid.begin(), posid.end(), 0);
      if (!(S.vertex_slots[v][0] == here)) {
        std::reverse(row.begin(), row.end());
        std::reverse(posid.begin(), posid.end());
      }
      for (std::size_t r = 0; r < row.size(); ++r) {
        Pt pt;
        pt.kind = Pt::Crossing;
        pt.side = j;
        pt.strand = posid[r];
        D.pts.push_back(pt);
        const Arc& a = *row[r].arc;
        int ci = row[r].i;
        // which of the two adjacent segments lies inside this polygon
        int seg;
        if (a.slot_a[ci] == here)
          seg = ci;      // segment before the crossing (towards slot_a side)
        else if (a.slot_b[ci] == here)
          seg = ci + 1;  // segment after it
        else
          throw std::runtime_error("strand slot mismatch");
        refs.push_back({arc_index(row[r].arc), seg});
      }
    }
    Pt lastc;
    lastc.kind = Pt::Corner;
    lastc.bullet = S.corner_class[p][s];
    D.pts.push_back(lastc);
    refs.push_back({});

    int K = static_cast<int>(D.pts.size());
    // gaps
    D.gaps.resize(K);
    for (int i = 0; i < K; ++i) {
      int nxt = (i + 1) % K;
      Gap g;
      if (D.pts[i].kind == Pt::Prong && D.pts[nxt].kind == Pt::Prong)
        g.kind = Gap::Pivot;
      else if (D.pts[i].kind == Pt::Prong || D.pts[i].kind == Pt::Circ)
        g.kind = Gap::SegL;
      else if (nxt == 0)
        g.kind = Gap::SegR;
      else
        g.kind = Gap::Glue;
      D.gaps[i] = g;
    }
    // glue piece sides & positions, walking corner to corner
    {
      int i = (k == 0) ? 1 : k;  // index of corner 0
      for (int j = 1; j <= s; ++j) {
        int pos = 0;
        int q = i;
        while (true) {
          D.gaps[q].side = j;
          D.gaps[q].kind = Gap::Glue;
          D.gaps[q].pos = pos++;
          q = (q + 1) % K;
          if (D.pts[q].kind != Pt::Crossing) break;
        }
        i = q;
      }
    }
    // chords
    std::map<std::pair<int, int>, std::vector<int>> by_seg;
    for (int i = 0; i < K; ++i)
      if (refs[i].arc >= 0) by_seg[{refs[i].arc, refs[i].seg}].push_back(i);
    for (auto& [key, ptids] : by_seg) {
      if (ptids.size() != 2)
        throw std::runtime_error("arc segment does not close inside its polygon");
      int id = static_cast<int>(D.chords.size());
      D.chords.push_back({key.first, ptids[0], ptids[1]});
      D.pts[ptids[0]].chord = id;
      D.pts[ptids[1]].chord = id;
      seg_chord[key.first][key.second] = {static_cast<int>(p), id};
    }
  }
  for (int ai = 0; ai < nA; ++ai)
    for (auto& [p, c] : seg_chord[ai])
      if (p < 0) throw std::runtime_error("an arc segment was not placed");

  // subface walks
  std::vector<SubWalk> subs;
  std::vector<std::vector<int>> gap_sub(S.polygons.size());
  for (std::size_t p = 0; p < S.polygons.size(); ++p) {
    PolyDisk& D = disks[p];
    int K = static_cast<int>(D.pts.size());
    gap_sub[p].assign(K, -1);
    for (int start = 0; start < K; ++start) {
      if (gap_sub[p][start] >= 0) continue;
      SubWalk w;
      w.poly = static_cast<int>(p);
      int sub_id = static_cast<int>(subs.size());
      int gap = start;
      while (gap_sub[p][gap] < 0) {
        gap_sub[p][gap] = sub_id;
        const Gap& g = D.gaps[gap];
        if (g.kind == Gap::Pivot) {
          Item it;
          it.kind = Item::CornerMark;
          it.poly = static_cast<int>(p);
          w.items.push_back(it);
        } else if (g.kind == Gap::SegL || g.kind == Gap::SegR) {
          if (g.kind == Gap::SegL) {
            // the circ corner sits right before segL
            Item mark;
            mark.kind = Item::CornerMark;
            mark.poly = static_cast<int>(p);
            w.items.push_back(mark);
          }
          Item it;
          it.kind = Item::Seg;
          it.poly = static_cast<int>(p);
          it.seg_left = (g.kind == Gap::SegL);
          w.items.push_back(it);
        } else {
          Item it;
          it.kind = Item::GlueP;
          it.poly = static_cast<int>(p);
          it.side = g.side;
          it.pos = g.pos;
          w.items.push_back(it);
        }
        int arrive = (gap + 1) % K;
        if (D.pts[arrive].chord >= 0) {
          // arrived via perimeter: divert into the chord
          if (D.pts[arrive].kind == Pt::Prong && g.kind == Gap::SegR) {
            Item mark;
            mark.kind = Item::CornerMark;
            mark.poly = static_cast<int>(p);
            w.items.push_back(mark);
          }
          const Chord& c = D.chords[D.pts[arrive].chord];
          Item it;
          it.kind = Item::ArcPiece;
          it.poly = static_cast<int>(p);
          it.chord = D.pts[arrive].chord;
          w.items.push_back(it);
          arrive = (c.pt_a == arrive) ? c.pt_b : c.pt_a;
        }
        gap = arrive;
      }
      if (!w.items.empty()) subs.push_back(std::move(w));
    }
  }

  FaceDecomposition fd;
  fd.subface_poly_count = static_cast<int>(subs.size());
  for (const auto& w : subs) fd.subface_poly.push_back(w.poly);

  // match glue pieces across the two slots of each edge
  std::map<std::tuple<int, int, int>, std::pair<int, int>> piece_at;  // -> (sub, item idx)
  for (std::size_t si = 0; si < subs.size(); ++si)
    for (std::size_t ii = 0; ii < subs[si].items.size(); ++ii) {
      const Item& it = subs[si].items[ii];
      if (it.kind != Item::GlueP) continue;
      piece_at[{it.poly, it.side, it.pos}] = {static_cast<int>(si), static_cast<int>(ii)};
    }
  std::vector<int> uf(subs.size());
  std::iota(uf.begin(), uf.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  };
  std::map<std::pair<int, int>, std::pair<int, int>> partner;
  std::vector<std::array<int, 3>> glue_edges;
  for (int v = 0; v < S.A.n_vertices(); ++v) {
    Slot s1 = S.vertex_slots[v][0];
    Slot s2 = S.vertex_slots[v][1];
    int np = static_cast<int>(edge_strands[v].size()) + 1;
    for (int pos = 0; pos < np; ++pos) {
      auto a = piece_at.find({s1.poly, s1.idx, pos});
      auto b = piece_at.find({s2.poly, s2.idx, np - 1 - pos});
      if (a == piece_at.end() || b == piece_at.end())
        throw std::runtime_error("unmatched glue piece");
      uf[find(a->second.first)] = find(b->second.first);
      partner[a->second] = b->second;
      partner[b->second] = a->second;
      glue_edges.push_back({a->second.first, b->second.first, v});
    }
  }

  std::map<int, int> face_of_root;
  for (std::size_t si = 0; si < subs.size(); ++si) {
    int r = find(static_cast<int>(si));
    if (!face_of_root.count(r)) {
      face_of_root[r] = static_cast<int>(fd.faces.size());
      fd.faces.push_back(Face{});
    }
    fd.faces[face_of_root[r]].subfaces.push_back(static_cast<int>(si));
  }
  for (const auto& ge : glue_edges) fd.faces[face_of_root[find(ge[0])]].glue.push_back(ge);

  // trace the boundary walks of every face through the glue jumps
  std::set<std::pair<int, int>> visited;
  for (std::size_t si0 = 0; si0 < subs.size(); ++si0)
    for (std::size_t ii0 = 0; ii0 < subs[si0].items.size(); ++ii0) {
      if (subs[si0].items[ii0].kind == Item::GlueP) continue;
      if (visited.count({static_cast<int>(si0), static_cast<int>(ii0)})) continue;
      // collect the raw cycle of non-glue items
      std::vector<std::pair<int, int>> cycle;
      int cs = static_cast<int>(si0), ci = static_cast<int>(ii0);
      for (;;) {
        if (subs[cs].items[ci].kind == Item::GlueP) {
          if (visited.count({cs, ci})) break;
          visited.insert({cs, ci});
          auto pr = partner.at({cs, ci});
          cs = pr.first;
          ci = (pr.second + 1) % static_cast<int>(subs[cs].items.size());
          continue;
        }
        if (visited.count({cs, ci})) break;
        visited.insert({cs, ci});
        cycle.push_back({cs, ci});
        ci = (ci + 1) % static_cast<int>(subs[cs].items.size());
      }
      if (cycle.empty()) continue;
      Face& face = fd.faces[face_of_root[find(static_cast<int>(si0))]];
      // rotate so the cycle starts right after a corner mark or seg
      std::size_t startpos = 0;
      for (std::size_t t = 0; t < cycle.size(); ++t) {
        const Item& it = subs[cycle[t].first].items[cycle[t].second];
        if (it.kind != Item::ArcPiece) {
          startpos = t;
          break;
        }
      }
      std::rotate(cycle.begin(), cycle.begin() + startpos, cycle.end());
      // coalesce arc pieces into arc edges; record corners with flanks
      std::vector<FaceEdge> edges;
      std::vector<FaceCorner> corners;
      int last_arc = -1;
      for (const auto& [ws, wi] : cycle) {
        const Item& it = subs[ws].items[wi];
        if (it.kind == Item::ArcPiece) {
          int arc = disks[subs[ws].poly].chords[it.chord].arc;
          if (last_arc == arc) continue;
          FaceEdge e;
          e.is_arc = true;
          e.arc = arc;
          edges.push_back(e);
          last_arc = arc;
        } else if (it.kind == Item::Seg) {
          FaceEdge e;
          e.is_arc = false;
          e.poly = it.poly;
          e.seg_left = it.seg_left;
          edges.push_back(e);
          last_arc = -1;
        } else {  // corner mark
          FaceCorner c;
          c.poly = it.poly;
          c.subface = ws;
          c.prev = static_cast<int>(edges.size()) - 1;  // fixed up below
          corners.push_back(c);
          last_arc = -1;
        }
      }
      int wk = static_cast<int>(face.walks.size());
      for (auto& c : corners) {
        c.walk = wk;
        c.next = (c.prev + 1) % static_cast<int>(edges.size());
        if (c.prev < 0) c.prev = static_cast<int>(edges.size()) - 1;
        face.corners.push_back(c);
      }
      face.walks.push_back(std::move(edges));
    }

  // counts, chi, classification
  for (auto& face : fd.faces) {
    int ec = 0, sc = 0;
    for (const auto& wkk : face.walks)
      for (const auto& e : wkk) {
        ++ec;
        if (!e.is_arc) ++sc;
      }
    face.edge_count = ec;
    face.seg_count = sc;
    if (sc % 2 != 0) throw std::runtime_error("odd boundary segment count in a face");
    face.bullet_count = sc / 2;
    // Honest Euler characteristic: vertices and edge pieces named by
    // identities shared across the two polygon views.
    std::set<int> in_face(face.subfaces.begin(), face.subfaces.end());
    std::set<std::tuple<int, int, int>> pts;
    std::set<std::tuple<int, int, int>> eset;
    auto point_class = [&](int poly, const Pt& q) -> std::tuple<int, int, int> {
      switch (q.kind) {
        case Pt::Circ:
        case Pt::Prong:
          return {0, poly, 0};
        case Pt::Corner:
          return {1, q.bullet, 0};
        case Pt::Crossing: {
          int v = S.polygons[poly].sides[q.side - 1];
          return {2, v, q.strand};
        }
      }
      throw std::runtime_error("bad point kind");
    };
    for (std::size_t p2 = 0; p2 < S.polygons.size(); ++p2) {
      const PolyDisk& D = disks[p2];
      int K = static_cast<int>(D.pts.size());
      for (int i2 = 0; i2 < K; ++i2) {
        int sub = gap_sub[p2][i2];
        if (sub < 0 || !in_face.count(sub)) continue;
        pts.insert(point_class(static_cast<int>(p2), D.pts[i2]));
        pts.insert(point_class(static_cast<int>(p2), D.pts[(i2 + 1) % K]));
        const Gap& g = D.gaps[i2];
        if (g.kind == Gap::SegL || g.kind == Gap::SegR) {
          eset.insert({1, static_cast<int>(p2), g.kind == Gap::SegL ? 0 : 1});
        } else if (g.kind == Gap::Glue) {
          int v = S.polygons[p2].sides[g.side - 1];
          int np = static_cast<int>(edge_strands[v].size()) + 1;
          Slot here{static_cast<int>(p2), g.side};
          int canon = (S.vertex_slots[v][0] == here) ? g.pos : np - 1 - g.pos;
          eset.insert({2, v, canon});
        }
      }
      for (std::size_t c2 = 0; c2 < D.chords.size(); ++c2) {
        // a chord belongs to the face when a flanking gap of either endpoint
        // does; equivalently when its owning subface walk is in the face
        const Chord& ch = D.chords[c2];
        for (int pid : {ch.pt_a, ch.pt_b}) {
          int sub = gap_sub[p2][pid];  // the gap after the endpoint
          int prev = (pid + K - 1) % K;
          int sub2 = gap_sub[p2][prev];
          if ((sub >= 0 && in_face.count(sub)) || (sub2 >= 0 && in_face.count(sub2)))
            eset.insert({3, static_cast<int>(p2), static_cast<int>(c2)});
        }
      }
    }
    int V = static_cast<int>(pts.size());
    int E = static_cast<int>(eset.size());
    int F = static_cast<int>(face.subfaces.size());
    face.chi = V - E + F;
  }
  for (const auto& face : fd.faces) {
    char t = face.type();
    if (t >= '1' && t <= '5')
      fd.f[t - '0']++;
    else
      fd.f_big++;
  }
  fd.e1 = nA;
  fd.e2 = 2 * S.m;
  fd.v = 2 * S.m + S.p;
  int e = fd.e1 + fd.e2;
  int f = static_cast<int>(fd.faces.size());
  if (f - e + fd.v != 2 - 2 * S.g - S.b)
    throw std::runtime_error("face decomposition violates the Euler identity");
  int chisum = 0;
  for (const auto& face : fd.faces) chisum += face.chi;
  if (chisum != 2 - 2 * S.g - S.b)
    throw std::runtime_error("face chi sum violates the Euler identity");
  return fd;
}

PartialTriangulationClass classify_partial_triangulation(const SurfaceModel& S,
                                                         const ArcSystem& sys) {
  PartialTriangulationClass out;
  FaceDecomposition fd = face_decomposition(S, sys);
  int maxe = 0;
  for (const auto& face : fd.faces) {
    if (!face.disk()) {
      out.reason = "a face is not a polygon (not a disk)";
      if (face.bullet_count > 1)
        out.reason += "; it contains " + std::to_string(face.bullet_count) + " bullet points";
      return out;
    }
    if (face.bullet_count > 1) {
      out.reason = "a face contains " + std::to_string(face.bullet_count) + " bullet points";
      return out;
    }
    maxe = std::max(maxe, face.edge_count);
  }
  out.ok = true;
  out.s = maxe;
  return out;
}

std::optional<Arc> face_diagonal(const SurfaceModel& S, const FaceDecomposition& fd,
                                 const Face& face, int corner_a, int corner_b) {
  if (corner_a == corner_b) return std::nullopt;
  const FaceCorner& ca = face.corners[corner_a];
  const FaceCorner& cb = face.corners[corner_b];
  if (ca.subface == cb.subface) return std::nullopt;  // contractible inside one sector
  std::map<int, std::vector<std::pair<int, int>>> adj;
  for (const auto& g : face.glue) {
    adj[g[0]].push_back({g[1], g[2]});
    adj[g[1]].push_back({g[0], g[2]});
  }
  std::map<int, std::pair<int, int>> par;
  std::vector<int> queue = {ca.subface};
  par[ca.subface] = {-1, -1};
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    int u = queue[qi];
    for (auto [w, v] : adj[u])
      if (!par.count(w)) {
        par[w] = {u, v};
        queue.push_back(w);
      }
  }
  if (!par.count(cb.subface)) return std::nullopt;
  std::vector<std::pair<int, int>> steps;  // (subface entered, vertex crossed)
  for (int cur = cb.subface; par[cur].first >= 0; cur = par[cur].first)
    steps.push_back({cur, par[cur].second});
  if (steps.empty()) return std::nullopt;
  std::reverse(steps.begin(), steps.end());
  Arc a;
  int cur_poly = fd.subface_poly[ca.subface];
  for (auto [sub, v] : steps) {
    const Slot& s1 = S.vertex_slots[v][0];
    const Slot& s2 = S.vertex_slots[v][1];
    int next_poly = fd.subface_poly[sub];
    Slot near, far;
    if (s1.poly == cur_poly && s2.poly == next_poly) {
      near = s1;
      far = s2;
    } else if (s2.poly == cur_poly && s1.poly == next_poly) {
      near = s2;
      far = s1;
    } else if (s1.poly == cur_poly && s1.poly == next_poly) {
      near = s1;
      far = s2;
    } else {
      return std::nullopt;
    }
    a.xs.push_back(v);
    a.slot_a.push_back(near);
    a.slot_b.push_back(far);
    cur_poly = next_poly;
  }
  a.canonicalize();
  return a;
}

}  // namespace gentle
