#pragma once

#include <optional>
#include <vector>

#include "gentle/surface.hpp"

namespace gentle {

struct ArcEnd {
  int poly = -1;  // endpoint polygon; its circ point is the endpoint
  int t = 0;      // index of the first crossed side, 1-based
};

// A zigzag arc under the traversal encoding: the crossed algebra vertices in
// order, with the two side slots used at each crossing (slot_a on the side of
// the previous polygon, slot_b towards the next one). A zero arc is an
// anchored circ point.
class Arc {
 public:
  bool zero_arc = false;
  int anchor_poly = -1;
  std::vector<int> xs;
  std::vector<Slot> slot_a;
  std::vector<Slot> slot_b;

  static Arc zero(int poly);
  static Arc of_string(const SurfaceModel& S, const Str& s);
  Str to_string(const SurfaceModel& S) const;

  ArcEnd end0() const { return {slot_a.front().poly, slot_a.front().idx}; }
  ArcEnd end1() const { return {slot_b.back().poly, slot_b.back().idx}; }
  int crossings() const { return static_cast<int>(xs.size()); }
  Arc reversed() const;
  void canonicalize();
  std::vector<int> key() const;

  bool operator==(const Arc& o) const { return key() == o.key(); }
  bool operator<(const Arc& o) const { return key() < o.key(); }
};

// Directed strand: after crossing xs[i] travelling in direction dir, the ray
// enters the polygon on that side.
struct Ray {
  const Arc* arc;
  int i;
  int dir;  // +1 or -1
};

// -1: r peels clockwise-closer at the divergence, +1: s does, 0: the rays
// co-terminate at the same circ point.
int compare_rays(const SurfaceModel& S, Ray r, Ray s);

int endpoint_weight(const SurfaceModel& S, const Arc& a, int end);

struct OrientedIntersection {
  int from = 0;  // 0 = first arc argument, 1 = second
  int weight = 0;
  bool interior = false;
  int poly = -1;                   // endpoint polygon, or entry polygon of the crossing
  int seg_from = -1, seg_to = -1;  // crossing indices on the two arcs (interior only)
};

std::vector<OrientedIntersection> oriented_intersections(const SurfaceModel& S, const Arc& a,
                                                         const Arc& b);

int interior_crossing_count(const SurfaceModel& S, const Arc& a, const Arc& b);
bool is_simple(const SurfaceModel& S, const Arc& a);

// Smoothing of two simple arcs at a shared endpoint carrying a weight-one
// oriented intersection from a1 to a2.
Arc flip(const SurfaceModel& S, const Arc& a1, const Arc& a2, int shared_poly);

// Corner arcs at the circ point of `poly`: crossing side t, then following
// predecessor chains (the translate family) or successor chains (the syzygy
// family). t > side count yields the zero arc.
Arc corner_arc_tau(const SurfaceModel& S, int poly, int t);
Arc corner_arc_omega(const SurfaceModel& S, int poly, int t);

Arc distinguished_arc(const SurfaceModel& S, int v, DistinguishedKind kind);

// Strand order along the edge of vertex v, listed in the traversal direction
// of the side slot `ref` (from its corner idx-1 towards corner idx).
struct Strand {
  const Arc* arc;
  int i;
};
std::vector<Strand> strands_on_edge(const SurfaceModel& S, const std::vector<const Arc*>& arcs,
                                    int v, const Slot& ref);

}  // namespace gentle
