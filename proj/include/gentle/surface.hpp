#pragma once

#include <array>
#include <vector>

#include "gentle/algebra.hpp"
#include "gentle/strings.hpp"

namespace gentle {

// Side slot: polygon index plus 1-based side position in clockwise order.
struct Slot {
  int poly = -1;
  int idx = 0;
  bool operator==(const Slot&) const = default;
  bool operator<(const Slot& o) const { return poly != o.poly ? poly < o.poly : idx < o.idx; }
};

struct Polygon {
  std::vector<int> sides;   // algebra vertices, clockwise = relation-chain order
  std::vector<int> arrows;  // the chain arrows between consecutive sides
  bool puncture = false;    // cyclic full-relation thread
  int side_count() const { return static_cast<int>(sides.size()); }
};

struct BoundaryPoint {
  bool bullet = false;
  int id = 0;  // polygon index for a circ point, bullet class otherwise
  bool operator==(const BoundaryPoint&) const = default;
};

// Combinatorial coordinated-marked surface reconstructed from the algebra.
// Conventions (pinned by the oracle calibration tests): polygon sides are
// listed clockwise starting at the source of the relation chain, the chain
// arrows point from each side to its clockwise successor, and fans list the
// arcs around a bullet point anticlockwise, i.e. in path order.
class SurfaceModel {
 public:
  GentleAlgebra A;
  std::vector<Polygon> polygons;
  std::vector<std::vector<int>> fans;             // vertex sequences
  std::vector<std::array<Slot, 2>> vertex_slots;  // per vertex, sorted
  std::vector<Slot> arrow_corner;                 // per arrow: poly + position i (sides i,i+1)
  std::vector<std::vector<int>> corner_class;     // per poly: class of each bullet corner
  int n_bullets = 0;
  std::vector<std::vector<BoundaryPoint>> boundary;  // alternating cycles
  int g = 0, b = 0, m = 0, p = 0;

  const Slot& other_slot(const Slot& s, int vertex) const;
  int slot_vertex(const Slot& s) const { return polygons[s.poly].sides[s.idx - 1]; }
  // bullet class at the corner between side idx and idx+1 (0 = before side 1)
  int corner_at(int poly, int k) const { return corner_class[poly][k]; }
};

// Throws std::runtime_error on slot-count inconsistencies.
SurfaceModel build_surface(const GentleAlgebra& A);

struct Topology {
  int g, b, m, p;
};
Topology topology(const SurfaceModel& S);

enum class DistinguishedKind { Simple, Injective, Projective };

// The string whose module is the simple / injective / projective at v.
Str distinguished_string(const SurfaceModel& S, int v, DistinguishedKind kind);

}  // namespace gentle
