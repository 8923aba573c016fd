#include "gentle/rigidity.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "gentle/strings.hpp"

namespace gentle {

AdmissibleVerdict is_admissible(const SurfaceModel& S, const ArcSystem& sys) {
  AdmissibleVerdict v;
  for (std::size_t i = 0; i < sys.arcs.size(); ++i)
    for (std::size_t j = i; j < sys.arcs.size(); ++j) {
      for (const auto& oi : oriented_intersections(S, sys.arcs[i], sys.arcs[j])) {
        if (oi.weight == 1) {
          v.ok = false;
          v.witness = format_str(S.A, sys.arcs[i].to_string(S)) + " / " +
                      format_str(S.A, sys.arcs[j].to_string(S));
          return v;
        }
      }
    }
  return v;
}

RigidVerdict is_rigid(const SurfaceModel& S, const std::vector<Str>& modules, int depth) {
  RigidVerdict v;
  // geometric engine
  v.geometric = true;
  std::vector<Arc> arcs;
  for (const auto& s : modules) arcs.push_back(Arc::of_string(S, s));
  for (std::size_t i = 0; i < arcs.size() && v.geometric; ++i) {
    if (!is_simple(S, arcs[i])) {
      v.geometric = false;
      v.detail = "non-simple arc: " + format_str(S.A, modules[i]);
    }
    for (std::size_t j = i; j < arcs.size() && v.geometric; ++j) {
      if (i != j && interior_crossing_count(S, arcs[i], arcs[j]) > 0) {
        v.geometric = false;
        v.detail = "crossing arcs";
        break;
      }
      if (arcs[i] == arcs[j] && i != j) continue;
      for (const auto& oi : oriented_intersections(S, arcs[i], arcs[j]))
        if (oi.weight == 1) {
          v.geometric = false;
          v.detail = "weight-one intersection";
          break;
        }
    }
  }
  // oracle engine
  v.oracle = true;
  std::vector<Rep<Rat>> reps;
  for (const auto& s : modules) reps.push_back(rep_of_string_module<Rat>(S.A, s));
  for (std::size_t i = 0; i < reps.size() && v.oracle; ++i)
    for (std::size_t j = 0; j < reps.size(); ++j) {
      auto d = ext_dims(S.A, reps[i], reps[j], 1, depth);
      if (d[1] != 0) {
        v.oracle = false;
        break;
      }
    }
  return v;
}

namespace {

struct EndAt {
  int arc;        // index in the system
  int which;      // 0 or 1
  int t;
  Ray inward;
};

// ends of system arcs at the circ point of a polygon, in angular order
std::vector<EndAt> ends_at(const SurfaceModel& S, const ArcSystem& sys, int poly) {
  std::vector<EndAt> out;
  for (std::size_t i = 0; i < sys.arcs.size(); ++i) {
    const Arc& a = sys.arcs[i];
    if (a.end0().poly == poly)
      out.push_back({static_cast<int>(i), 0, a.end0().t, Ray{&a, 0, +1}});
    if (a.end1().poly == poly)
      out.push_back({static_cast<int>(i), 1, a.end1().t, Ray{&a, a.crossings() - 1, -1}});
  }
  std::sort(out.begin(), out.end(), [&](const EndAt& x, const EndAt& y) {
    if (x.t != y.t) return x.t < y.t;
    int c = compare_rays(S, x.inward, y.inward);
    return c < 0;
  });
  return out;
}

}  // namespace

ArcSystem flip_reduce(const SurfaceModel& S, const ArcSystem& start, const std::set<Arc>& keep) {
  ArcSystem sys = start;
  auto weight_one_count = [&]() {
    int c = 0;
    for (std::size_t i = 0; i < sys.arcs.size(); ++i)
      for (std::size_t j = i; j < sys.arcs.size(); ++j)
        for (const auto& oi : oriented_intersections(S, sys.arcs[i], sys.arcs[j]))
          if (oi.weight == 1) ++c;
    return c;
  };
  int prev = weight_one_count();
  int guard = 0;
  while (prev > 0) {
    if (++guard > 10000) throw std::runtime_error("flip_reduce does not terminate");
    // find a minimal weight-one pair: angularly adjacent ends at some circ point
    bool done = false;
    for (int p = 0; p < static_cast<int>(S.polygons.size()) && !done; ++p) {
      if (S.polygons[p].puncture) continue;
      auto ends = ends_at(S, sys, p);
      for (std::size_t e = 0; e + 1 < ends.size() && !done; ++e) {
        const EndAt& from = ends[e];
        const EndAt& to = ends[e + 1];
        if (to.t != from.t + 1) continue;  // adjacent ends with weight one
        if (from.arc == to.arc) {
          // weight-one self intersection cannot be flipped away
          continue;
        }
        const Arc& a1 = sys.arcs[from.arc];
        const Arc& a2 = sys.arcs[to.arc];
        Arc flipped = flip(S, a1, a2, p);
        bool keep1 = keep.count(a1) > 0;
        bool keep2 = keep.count(a2) > 0;
        if (keep1 && keep2)
          throw std::runtime_error("flip_reduce: both members of a weight-one pair protected");
        std::vector<Arc> next;
        const Arc& drop = keep2 ? a1 : a2;
        for (const auto& a : sys.arcs)
          if (!(a == drop)) next.push_back(a);
        if (std::find(next.begin(), next.end(), flipped) == next.end()) next.push_back(flipped);
        sys = ArcSystem::of(S, next);
        done = true;
      }
    }
    if (!done) throw std::runtime_error("weight-one intersection without a minimal flip pair");
    int cur = weight_one_count();
    if (cur >= prev) throw std::runtime_error("flip did not reduce the weight-one count");
    prev = cur;
  }
  for (const auto& a : keep)
    if (!sys.contains(a)) throw std::runtime_error("flip_reduce dropped a protected arc");
  return sys;
}

namespace {

bool arc_admissible_against(const SurfaceModel& S, const Arc& cand, const ArcSystem& sys) {
  for (const auto& oi : oriented_intersections(S, cand, cand))
    if (oi.weight == 1) return false;
  for (const auto& a : sys.arcs) {
    if (a == cand) continue;
    if (interior_crossing_count(S, cand, a) > 0) return false;
    for (const auto& oi : oriented_intersections(S, cand, a))
      if (oi.weight == 1) return false;
  }
  return true;
}

bool arc_is_valid_zigzag(const SurfaceModel& S, const Arc& cand) {
  if (cand.zero_arc) return false;
  try {
    Str s = cand.to_string(S);
    if (!is_string(S.A, s.walk())) return false;
    // round trip: the slot data must match the string's arc
    Arc back = Arc::of_string(S, s);
    return back == cand;
  } catch (const std::exception&) {
    return false;
  }
}

std::optional<Arc> best_diagonal(const SurfaceModel& S, const FaceDecomposition& fd,
                                 const Face& face, const ArcSystem& sys) {
  std::optional<Arc> best;
  for (std::size_t ca = 0; ca < face.corners.size(); ++ca)
    for (std::size_t cb = ca + 1; cb < face.corners.size(); ++cb) {
      auto cand = face_diagonal(S, fd, face, static_cast<int>(ca), static_cast<int>(cb));
      if (!cand) continue;
      if (!arc_is_valid_zigzag(S, *cand)) continue;
      if (!is_simple(S, *cand)) continue;
      if (sys.contains(*cand)) continue;
      if (!arc_admissible_against(S, *cand, sys)) continue;
      if (!best || cand->key() < best->key()) best = cand;
    }
  return best;
}

}  // namespace

ArcSystem canonical_class_representative(const SurfaceModel& S, const ArcSystem& start) {
  ArcSystem sys = start;
  int guard = 0;
  for (;;) {
    if (++guard > 1000) throw std::runtime_error("F3 splitting does not terminate");
    FaceDecomposition fd = face_decomposition(S, sys);
    bool changed = false;
    for (const auto& face : fd.faces) {
      if (face.type() != '3') continue;
      // the split arc joins the two circ corners flanked by boundary segments
      std::vector<int> seg_corners;
      for (std::size_t c = 0; c < face.corners.size(); ++c) {
        const FaceCorner& fc = face.corners[c];
        const auto& wk = face.walks[fc.walk];
        bool ps = !wk[fc.prev].is_arc;
        bool ns = !wk[fc.next].is_arc;
        if (ps != ns) seg_corners.push_back(static_cast<int>(c));
      }
      if (seg_corners.size() != 2)
        throw std::runtime_error("external 5-gon without two segment corners");
      auto cand = face_diagonal(S, fd, face, seg_corners[0], seg_corners[1]);
      if (!cand || !arc_is_valid_zigzag(S, *cand) || !is_simple(S, *cand)) continue;
      if (sys.contains(*cand)) continue;
      if (!arc_admissible_against(S, *cand, sys)) continue;
      std::vector<Arc> arcs = sys.arcs;
      arcs.push_back(*cand);
      sys = ArcSystem::of(S, arcs);
      changed = true;
      break;
    }
    if (!changed) break;
  }
  return sys;
}

ArcSystem complete_to_max(const SurfaceModel& S, const ArcSystem& start) {
  auto adm = is_admissible(S, start);
  if (!adm.ok) throw std::runtime_error("complete_to_max needs an admissible input: " + adm.witness);
  std::set<Arc> keep(start.arcs.begin(), start.arcs.end());
  // (i) union with the projective dissection, then reduce flips away from the
  // protected input arcs
  std::vector<Arc> arcs = start.arcs;
  for (int v = 0; v < S.A.n_vertices(); ++v) {
    Arc pv = distinguished_arc(S, v, DistinguishedKind::Projective);
    bool crosses = false;
    for (const auto& a : arcs)
      if (!(a == pv) && interior_crossing_count(S, a, pv) > 0) crosses = true;
    if (!crosses) arcs.push_back(pv);
  }
  ArcSystem sys = flip_reduce(S, ArcSystem::of(S, arcs), keep);
  // (ii) subdivide every face that is not yet a small polygon
  int guard = 0;
  for (;;) {
    if (++guard > 1000) throw std::runtime_error("completion does not terminate");
    FaceDecomposition fd = face_decomposition(S, sys);
    const Face* bad = nullptr;
    for (const auto& face : fd.faces)
      if (!face.disk() || face.edge_count > 5 || face.bullet_count > 1) {
        bad = &face;
        break;
      }
    if (!bad) break;
    auto cand = best_diagonal(S, fd, *bad, sys);
    if (!cand)
      throw std::runtime_error("no admissible diagonal in an oversized face");
    std::vector<Arc> next = sys.arcs;
    next.push_back(*cand);
    sys = ArcSystem::of(S, next);
  }
  sys = canonical_class_representative(S, sys);
  for (const auto& a : keep)
    if (!sys.contains(a)) throw std::runtime_error("completion dropped an input arc");
  auto adm2 = is_admissible(S, sys);
  if (!adm2.ok) throw std::runtime_error("completion produced a non-admissible system");
  FaceDecomposition fd = face_decomposition(S, sys);
  if (fd.f_big != 0) throw std::runtime_error("completion left a non F1..F5 face");
  return sys;
}

RankReport max_rigid_rank_report(const SurfaceModel& S, const ArcSystem& sys) {
  FaceDecomposition fd = face_decomposition(S, sys);
  auto cls = classify_partial_triangulation(S, sys);
  if (!cls.ok || cls.s > 5)
    throw std::runtime_error("not an admissible 5-partial triangulation");
  RankReport r;
  r.n = S.A.n_vertices();
  r.f4 = fd.f[4];
  r.f5 = fd.f[5];
  r.e1_edges = static_cast<int>(sys.arcs.size());
  r.e1_formula = r.n + r.f4 + r.f5;
  return r;
}

bool is_maximal_bounded(const SurfaceModel& S, const ArcSystem& sys, int max_len) {
  auto all = enumerate_strings(S.A, max_len);
  for (const auto& s : all.strings) {
    Arc cand = Arc::of_string(S, s);
    if (sys.contains(cand)) continue;
    if (!is_simple(S, cand)) continue;
    if (arc_admissible_against(S, cand, sys)) return false;
  }
  return true;
}

}  // namespace gentle
