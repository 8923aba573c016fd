#pragma once

#include <string>
#include <vector>

#include "gentle/arcs.hpp"

namespace gentle {

// Deduplicated, canonically ordered set of simple pairwise non-crossing arcs.
struct ArcSystem {
  std::vector<Arc> arcs;

  static ArcSystem of(const SurfaceModel& S, std::vector<Arc> arcs);  // validates
  bool contains(const Arc& a) const;
};

struct FaceEdge {
  bool is_arc = false;
  int arc = -1;      // index into the system
  int poly = -1;     // owning polygon of a boundary segment
  bool seg_left = false;  // segL vs segR
};

// A corner of a face at the circ point of `poly`; prev/next are indices into
// the face walk edges flanking the corner.
struct FaceCorner {
  int poly = -1;
  int subface = -1;
  int prev = -1, next = -1;
  int walk = 0;
};

struct Face {
  std::vector<std::vector<FaceEdge>> walks;  // boundary walks (1 for a disk)
  std::vector<FaceCorner> corners;           // circ corners, walk order
  std::vector<int> subfaces;                 // global subface ids
  std::vector<std::array<int, 3>> glue;      // (subface, subface, crossed vertex)
  int edge_count = 0;
  int seg_count = 0;
  int bullet_count = 0;
  int chi = 0;
  bool internal() const { return seg_count == 0; }
  bool disk() const { return walks.size() == 1 && chi == 1; }
  // F1..F5 as '1'..'5'; 'B' for anything bigger or non-standard
  char type() const;
};

struct FaceDecomposition {
  std::vector<Face> faces;
  int f[6] = {0, 0, 0, 0, 0, 0};  // f[1..5]
  int f_big = 0;
  int e1 = 0, e2 = 0, v = 0;
  int subface_poly_count = 0;
  std::vector<int> subface_poly;  // polygon of each global subface id
};

// Cuts the (puncture-free) surface along the system and classifies the faces.
FaceDecomposition face_decomposition(const SurfaceModel& S, const ArcSystem& sys);

struct PartialTriangulationClass {
  bool ok = false;
  int s = 0;            // max face edge count when ok
  std::string reason;   // failure reason otherwise
};

PartialTriangulationClass classify_partial_triangulation(const SurfaceModel& S,
                                                         const ArcSystem& sys);

// Candidate diagonal of a disk face between two of its circ corners; empty
// when the corner pair is degenerate.
std::optional<Arc> face_diagonal(const SurfaceModel& S, const FaceDecomposition& fd,
                                 const Face& face, int corner_a, int corner_b);

}  // namespace gentle
