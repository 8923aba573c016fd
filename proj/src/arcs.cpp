#include "gentle/arcs.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace gentle {

namespace {

void require_no_puncture(const SurfaceModel& S, int poly, const char* what) {
  if (S.polygons[poly].puncture)
    throw std::runtime_error(std::string(what) + ": puncture polygon is out of scope");
}

}  // namespace

Arc Arc::zero(int poly) {
  Arc a;
  a.zero_arc = true;
  a.anchor_poly = poly;
  return a;
}

Arc Arc::reversed() const {
  Arc r = *this;
  std::reverse(r.xs.begin(), r.xs.end());
  r.slot_a.assign(slot_b.rbegin(), slot_b.rend());
  r.slot_b.assign(slot_a.rbegin(), slot_a.rend());
  return r;
}

std::vector<int> Arc::key() const {
  std::vector<int> k;
  if (zero_arc) {
    k.push_back(-2);
    k.push_back(anchor_poly);
    return k;
  }
  k.push_back(static_cast<int>(xs.size()));
  for (std::size_t i = 0; i < xs.size(); ++i) {
    k.push_back(xs[i]);
    k.push_back(slot_a[i].poly);
    k.push_back(slot_a[i].idx);
    k.push_back(slot_b[i].poly);
    k.push_back(slot_b[i].idx);
  }
  return k;
}

void Arc::canonicalize() {
  if (zero_arc) return;
  Arc rev = reversed();
  if (rev.key() < key()) *this = rev;
}

Arc Arc::of_string(const SurfaceModel& S, const Str& s) {
  const Walk& w = s.walk();
  Arc a;
  if (w.trivial) {
    int v = w.base;
    a.xs = {v};
    a.slot_a = {S.vertex_slots[v][0]};
    a.slot_b = {S.vertex_slots[v][1]};
  } else {
    std::vector<int> vs = w.vertex_seq(S.A);
    int n = static_cast<int>(w.letters.size());
    a.xs = vs;
    a.slot_a.resize(vs.size());
    a.slot_b.resize(vs.size());
    for (int i = 0; i < n; ++i) {
      const Letter& l = w.letters[i];
      Slot corner = S.arrow_corner[l.arrow];  // sides corner.idx, corner.idx+1
      Slot src_slot{corner.poly, corner.idx};
      Slot tgt_slot{corner.poly, corner.idx + 1};
      // letter goes vs[i] -> vs[i+1]; forward letters run along the arrow
      Slot prev_slot = l.fwd ? src_slot : tgt_slot;
      Slot next_slot = l.fwd ? tgt_slot : src_slot;
      a.slot_b[i] = prev_slot;
      a.slot_a[i + 1] = next_slot;
    }
    a.slot_a[0] = S.other_slot(a.slot_b[0], vs[0]);
    a.slot_b[n] = S.other_slot(a.slot_a[n], vs[n]);
    for (int i = 0; i <= n; ++i)
      if (!(S.other_slot(a.slot_a[i], vs[i]) == a.slot_b[i]))
        throw std::runtime_error("string does not resolve to a consistent traversal");
  }
  require_no_puncture(S, a.end0().poly, "arc endpoint");
  require_no_puncture(S, a.end1().poly, "arc endpoint");
  a.canonicalize();
  return a;
}

Str Arc::to_string(const SurfaceModel& S) const {
  if (zero_arc) throw std::runtime_error("zero arc has no string");
  if (xs.size() == 1) return Str::trivial(xs[0]);
  Walk w;
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    const Slot& out = slot_b[i];
    const Slot& in = slot_a[i + 1];
    if (out.poly != in.poly)
      throw std::runtime_error("arc traversal broken between crossings");
    const Polygon& P = S.polygons[out.poly];
    if (in.idx == out.idx + 1) {
      w.letters.push_back({P.arrows[out.idx - 1], true});
    } else if (in.idx + 1 == out.idx) {
      w.letters.push_back({P.arrows[in.idx - 1], false});
    } else {
      throw std::runtime_error("not a zigzag arc: crossings not adjacent in their polygon");
    }
  }
  return Str::from_walk(S.A, w);
}

// ---------------------------------------------------------------------------
// Ray comparison

namespace {

struct Probe {
  int poly = -1;   // polygon just entered
  int entry = 0;   // entry side index
  int item = 0;    // next exit item: side index, or side_count+1 for the circ point
  bool ends = false;
};

Probe probe_ray(const SurfaceModel& S, const Ray& r) {
  Probe p;
  const Arc& a = *r.arc;
  Slot in = r.dir > 0 ? a.slot_b[r.i] : a.slot_a[r.i];
  p.poly = in.poly;
  p.entry = in.idx;
  int nxt = r.i + r.dir;
  if (nxt < 0 || nxt >= a.crossings()) {
    p.ends = true;
    p.item = S.polygons[in.poly].side_count() + 1;
  } else {
    Slot out = r.dir > 0 ? a.slot_a[nxt] : a.slot_b[nxt];
    if (out.poly != in.poly) throw std::runtime_error("ray discontinuity");
    p.item = out.idx;
  }
  return p;
}

}  // namespace

int compare_rays(const SurfaceModel& S, Ray r, Ray s) {
  for (;;) {
    Probe pr = probe_ray(S, r);
    Probe ps = probe_ray(S, s);
    if (pr.poly != ps.poly || pr.entry != ps.entry)
      throw std::runtime_error("compare_rays: rays do not share the entry slot");
    require_no_puncture(S, pr.poly, "ray comparison");
    int cyc = S.polygons[pr.poly].side_count() + 1;
    int dr = ((pr.item - pr.entry) % cyc + cyc) % cyc;
    int ds = ((ps.item - ps.entry) % cyc + cyc) % cyc;
    if (dr == 0 || ds == 0) throw std::runtime_error("ray exits through its entry side");
    if (dr != ds) return dr < ds ? -1 : +1;
    if (pr.ends && ps.ends) return 0;
    if (pr.ends != ps.ends) throw std::runtime_error("equal items with mismatched termination");
    r.i += r.dir;
    s.i += s.dir;
  }
}

int endpoint_weight(const SurfaceModel& S, const Arc& a, int end) {
  if (a.zero_arc) throw std::runtime_error("weight of a zero arc is undefined");
  ArcEnd e = end == 0 ? a.end0() : a.end1();
  require_no_puncture(S, e.poly, "endpoint weight");
  return S.polygons[e.poly].side_count() - e.t;
}

// ---------------------------------------------------------------------------
// Overlaps and crossings

namespace {

struct EndRef {
  int which;  // 0 or 1
  ArcEnd e;
  Ray inward;  // the ray from this endpoint into the surface
};

std::vector<EndRef> arc_ends(const Arc& a) {
  std::vector<EndRef> out;
  out.push_back({0, a.end0(), Ray{&a, 0, +1}});
  // the inward ray from end0 crosses xs[0] moving forward; represent as the
  // strand at crossing 0 entering slot_b[0]... but Ray semantics are
  // "after crossing xs[i] in direction dir"; from end0 the first crossing is
  // xs[0] and the ray continues in +1 direction, entering slot_b[0]: Ray{a,0,+1}.
  out.push_back({1, a.end1(), Ray{&a, a.crossings() - 1, -1}});
  return out;
}

struct AlignKey {
  int i, k, d;
  bool operator<(const AlignKey& o) const {
    if (i != o.i) return i < o.i;
    if (k != o.k) return k < o.k;
    return d < o.d;
  }
};

bool aligned(const Arc& a, const Arc& b, int i, int k, int d) {
  if (i < 0 || i >= a.crossings() || k < 0 || k >= b.crossings()) return false;
  if (a.xs[i] != b.xs[k]) return false;
  if (d > 0) return a.slot_a[i] == b.slot_a[k] && a.slot_b[i] == b.slot_b[k];
  return a.slot_a[i] == b.slot_b[k] && a.slot_b[i] == b.slot_a[k];
}

struct OverlapResult {
  bool crossing = false;
  int i0 = 0, k0 = 0;  // first aligned pair of the run
  int hom_from = 0;    // which argument carries the weight-0 direction
};

}  // namespace

namespace detail {

// Enumerate maximal aligned runs between a and b (possibly the same arc) and
// report which force a transversal crossing in minimal position.
std::vector<OverlapResult> overlap_crossings(const SurfaceModel& S, const Arc& a, const Arc& b,
                                             bool self) {
  std::vector<OverlapResult> out;
  std::set<AlignKey> visited;
  for (int i = 0; i < a.crossings(); ++i)
    for (int k = 0; k < b.crossings(); ++k)
      for (int d : {+1, -1}) {
        if (self && d > 0 && i == k) continue;   // identity alignment
        if (self && d < 0 && i >= k) continue;   // mirrored seeds
        if (!aligned(a, b, i, k, d)) continue;
        if (visited.count({i, k, d})) continue;
        // extend to the maximal run
        int i0 = i, k0 = k, i1 = i, k1 = k;
        bool fold_back = false, fold_fwd = false;
        for (;;) {
          int ni = i0 - 1, nk = k0 - d;
          if (self && d < 0 && ni >= nk) { fold_back = (ni <= nk + 2); }
          if (self && d < 0 && ni >= nk) break;
          if (!aligned(a, b, ni, nk, d)) break;
          i0 = ni;
          k0 = nk;
        }
        for (;;) {
          int ni = i1 + 1, nk = k1 + d;
          if (self && d < 0 && ni >= nk) { fold_fwd = (ni >= nk - 2); break; }
          if (!aligned(a, b, ni, nk, d)) break;
          i1 = ni;
          k1 = nk;
        }
        for (int t = 0; i0 + t <= i1; ++t) {
          visited.insert({i0 + t, k0 + t * d, d});
          if (self) visited.insert({k0 + t * d, i0 + t, d});
        }
        if (fold_back || fold_fwd) continue;  // a U-turn end never pins a crossing
        // forward divergence
        Ray fa{&a, i1, +1};
        Ray fb{&b, k1, d};
        int fwd = compare_rays(S, fa, fb);
        if (fwd == 0) continue;  // shared endpoint: peel apart
        // backward divergence
        Ray ba{&a, i0, -1};
        Ray bb{&b, k0, -d};
        int bwd = compare_rays(S, ba, bb);
        if (bwd == 0) continue;
        OverlapResult r;
        r.i0 = i0;
        r.k0 = k0;
        // crossing iff the same arc is clockwise-closer at both divergences
        r.crossing = (fwd == bwd);
        r.hom_from = (fwd < 0) ? 0 : 1;  // the twice-closer arc maps out
        if (r.crossing) out.push_back(r);
      }
  return out;
}

}  // namespace detail

int interior_crossing_count(const SurfaceModel& S, const Arc& a, const Arc& b) {
  if (a.zero_arc || b.zero_arc) return 0;
  bool self = (a == b);
  if (self) {
    auto runs = detail::overlap_crossings(S, a, a, true);
    return static_cast<int>(runs.size());
  }
  return static_cast<int>(detail::overlap_crossings(S, a, b, false).size());
}

bool is_simple(const SurfaceModel& S, const Arc& a) {
  if (a.zero_arc) return true;
  return detail::overlap_crossings(S, a, a, true).empty();
}

std::vector<OrientedIntersection> oriented_intersections(const SurfaceModel& S, const Arc& a,
                                                         const Arc& b) {
  std::vector<OrientedIntersection> out;
  if (a.zero_arc || b.zero_arc) return out;
  bool self = (a == b);
  // endpoint sites
  auto ea = arc_ends(a);
  auto eb = arc_ends(b);
  for (const auto& x : ea)
    for (const auto& y : eb) {
      if (self && x.which >= y.which) continue;  // one record per end pair
      if (x.e.poly != y.e.poly) continue;        // distinct circ points
      OrientedIntersection oi;
      oi.poly = x.e.poly;
      if (x.e.t != y.e.t) {
        bool a_from = x.e.t < y.e.t;
        oi.from = a_from ? 0 : 1;
        oi.weight = a_from ? y.e.t - x.e.t : x.e.t - y.e.t;
      } else {
        int c = compare_rays(S, x.inward, y.inward);
        oi.weight = 0;
        oi.from = (c < 0) ? 0 : 1;  // clockwise-closer end maps out
        if (c == 0) oi.from = 0;    // fully parallel pair of ends
      }
      if (self && oi.from == 1) oi.from = 0;  // direction is internal to one module
      out.push_back(oi);
    }
  // interior crossings
  auto runs = detail::overlap_crossings(S, a, b, self);
  for (const auto& r : runs) {
    OrientedIntersection hom;
    hom.interior = true;
    hom.weight = 0;
    hom.from = r.hom_from;
    hom.poly = (r.i0 >= 0 && r.i0 < a.crossings()) ? a.slot_a[r.i0].poly : -1;
    hom.seg_from = r.i0;
    hom.seg_to = r.k0;
    OrientedIntersection ext = hom;
    ext.weight = 1;
    ext.from = 1 - r.hom_from;
    out.push_back(hom);
    out.push_back(ext);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Corner arcs and flips

namespace {

Arc corner_arc_impl(const SurfaceModel& S, int poly, int t, bool successor) {
  require_no_puncture(S, poly, "corner arc");
  const Polygon& P = S.polygons[poly];
  if (t < 1) throw std::runtime_error("corner arc index must be positive");
  if (t > P.side_count()) return Arc::zero(poly);
  Arc a;
  Slot cur{poly, t};
  a.xs.push_back(S.polygons[poly].sides[t - 1]);
  a.slot_a.push_back(cur);
  for (;;) {
    Slot far = S.other_slot(a.slot_a.back(), a.xs.back());
    a.slot_b.push_back(far);
    require_no_puncture(S, far.poly, "corner arc continuation");
    const Polygon& Q = S.polygons[far.poly];
    int nxt = successor ? far.idx + 1 : far.idx - 1;
    if (nxt < 1 || nxt > Q.side_count()) break;
    a.xs.push_back(Q.sides[nxt - 1]);
    a.slot_a.push_back({far.poly, nxt});
  }
  a.canonicalize();
  return a;
}

}  // namespace

Arc corner_arc_tau(const SurfaceModel& S, int poly, int t) {
  return corner_arc_impl(S, poly, t, /*successor=*/false);
}

Arc corner_arc_omega(const SurfaceModel& S, int poly, int t) {
  return corner_arc_impl(S, poly, t, /*successor=*/true);
}

Arc distinguished_arc(const SurfaceModel& S, int v, DistinguishedKind kind) {
  return Arc::of_string(S, distinguished_string(S, v, kind));
}

Arc flip(const SurfaceModel& S, const Arc& a1, const Arc& a2, int shared_poly) {
  if (a1.zero_arc || a2.zero_arc) throw std::runtime_error("flip needs non-zero arcs");
  if (a1 == a2) throw std::runtime_error("flip needs two different arcs");
  if (!is_simple(S, a1) || !is_simple(S, a2)) throw std::runtime_error("flip needs simple arcs");
  // locate ends at the shared circ point realizing a weight-one intersection
  // from a1 to a2
  for (const auto& x : arc_ends(a1))
    for (const auto& y : arc_ends(a2)) {
      if (x.e.poly != shared_poly || y.e.poly != shared_poly) continue;
      if (y.e.t != x.e.t + 1) continue;  // weight one from a1 to a2
      // orient a1 into the point, a2 out of it
      Arc left = (x.which == 1) ? a1 : a1.reversed();
      Arc right = (y.which == 0) ? a2 : a2.reversed();
      Arc r;
      r.xs = left.xs;
      r.slot_a = left.slot_a;
      r.slot_b = left.slot_b;
      r.xs.insert(r.xs.end(), right.xs.begin(), right.xs.end());
      r.slot_a.insert(r.slot_a.end(), right.slot_a.begin(), right.slot_a.end());
      r.slot_b.insert(r.slot_b.end(), right.slot_b.begin(), right.slot_b.end());
      r.canonicalize();
      // the smoothing must still be a zigzag arc; to_string validates
      Str s = r.to_string(S);
      if (!is_string(S.A, s.walk())) throw std::runtime_error("flip produced a non-string");
      return r;
    }
  throw std::runtime_error("no weight-one oriented intersection from a1 to a2 at this point");
}

// ---------------------------------------------------------------------------
// Edge strand order

std::vector<Strand> strands_on_edge(const SurfaceModel& S, const std::vector<const Arc*>& arcs,
                                    int v, const Slot& ref) {
  std::vector<Strand> out;
  for (const Arc* a : arcs) {
    if (a->zero_arc) continue;
    for (int i = 0; i < a->crossings(); ++i)
      if (a->xs[i] == v) out.push_back({a, i});
  }
  // Order along the edge in the direction of `ref` (corner idx-1 -> idx).
  // Rays into the polygon on the ref side: clockwise-closer exits sit nearer
  // the head; rays into the far side order the tail end.
  auto into_ref = [&](const Strand& s) {
    const Arc& a = *s.arc;
    if (a.slot_b[s.i] == ref) return Ray{s.arc, s.i, +1};
    if (a.slot_a[s.i] == ref) return Ray{s.arc, s.i, -1};
    throw std::runtime_error("strand does not touch the reference slot");
  };
  std::sort(out.begin(), out.end(), [&](const Strand& x, const Strand& y) {
    if (x.arc == y.arc && x.i == y.i) return false;
    Ray rx = into_ref(x), ry = into_ref(y);
    int c = compare_rays(S, rx, ry);
    if (c != 0) return c > 0;  // closer into ref side = nearer the head = later
    Ray bx{x.arc, x.i, -rx.dir}, by{y.arc, y.i, -ry.dir};
    int cb = compare_rays(S, bx, by);
    if (cb != 0) return cb < 0;  // closer on the far side = nearer the tail = earlier
    throw std::runtime_error("indistinguishable parallel strands");
  });
  return out;
}

}  // namespace gentle
