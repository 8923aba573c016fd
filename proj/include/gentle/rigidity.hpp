#pragma once

#include <set>
#include <string>

#include "gentle/faces.hpp"
#include "gentle/homology.hpp"

namespace gentle {

struct AdmissibleVerdict {
  bool ok = true;
  std::string witness;  // offending pair when not admissible
};

// No oriented intersection of weight one between members (self included).
AdmissibleVerdict is_admissible(const SurfaceModel& S, const ArcSystem& sys);

struct RigidVerdict {
  bool geometric = false;
  bool oracle = false;
  std::string detail;
};

// Both engines; they must agree (callers assert).
RigidVerdict is_rigid(const SurfaceModel& S, const std::vector<Str>& modules, int depth = 64);

// Iterated smoothing of minimal weight-one pairs; members of `keep` are never
// replaced. The result is admissible and contains keep.
ArcSystem flip_reduce(const SurfaceModel& S, const ArcSystem& sys, const std::set<Arc>& keep = {});

// Completion of an admissible system to an admissible 5-partial
// triangulation (the canonical maximal representative of its class).
ArcSystem complete_to_max(const SurfaceModel& S, const ArcSystem& sys);

struct RankReport {
  int e1_edges = 0;    // internal edges counted directly
  int e1_formula = 0;  // n + f4 + f5
  int n = 0, f4 = 0, f5 = 0;
};

RankReport max_rigid_rank_report(const SurfaceModel& S, const ArcSystem& sys);

// Splits every external 5-gon that admits an admissible splitting arc.
ArcSystem canonical_class_representative(const SurfaceModel& S, const ArcSystem& sys);

// Bounded maximality certificate: no enumerated string of length <= max_len
// extends the system admissibly.
bool is_maximal_bounded(const SurfaceModel& S, const ArcSystem& sys, int max_len = 8);

}  // namespace gentle
