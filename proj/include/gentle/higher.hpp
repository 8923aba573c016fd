#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gentle/rigidity.hpp"

namespace gentle {

// Geometric higher syzygy: corner-arc summands from both endpoints, with
// projective summands dropped (they are exactly the defect against the
// algebraic m-fold syzygy). m >= 2.
std::vector<Str> omega_m(const SurfaceModel& S, const Str& s, int m);

// Geometric higher translate: corner-arc summands, trivial arcs dropped.
std::vector<Str> tau_m(const SurfaceModel& S, const Str& s, int m);

struct TauBlock {
  Walk r;  // direct walk of n arrows with full relations
  Walk t;  // direct string, possibly trivial
};

struct TauSequenceReport {
  bool cycle = false;
  std::vector<TauBlock> witness;  // a cycle when cycle, else a longest sequence
  int max_length = 0;             // meaningful when no cycle
};

// Longest alternating sequence / cycle search over the block graph. The
// wrap-around junction is not constrained (vertex coincidence only) unless
// `strict_cycle` is set.
TauSequenceReport tau_sequences(const GentleAlgebra& A, int n, bool strict_cycle = false);

struct TauClosureResult {
  bool infinite = false;
  TauSequenceReport cycle_witness;        // when infinite
  std::vector<Str> modules;               // indecomposables of the closure
  std::vector<std::vector<Str>> levels;   // levels[i] = new strings of tau^i
  ArcSystem system;
  PartialTriangulationClass classification;
  bool admissible = false;
};

TauClosureResult tau_closure(const SurfaceModel& S, int n, int max_len_certificate = 8);

struct TauDimensionReport {
  bool infinite = false;
  int max_nonvanishing = 0;  // largest l with tau_n^l(DA) != 0
  int min_vanishing = 0;     // smallest l with tau_n^l(DA) = 0
};

TauDimensionReport tau_dimension(const SurfaceModel& S, int n);

bool is_tau_finite(const SurfaceModel& S, int n);

struct NCompleteRow {
  Walk walk;
  int source = -1;
  int degree = 0;
  std::vector<int> adjacent_arrows;
};

struct NCompleteReport {
  bool complete = false;
  std::vector<NCompleteRow> table;
};

NCompleteReport is_n_complete(const GentleAlgebra& A, int n);

struct SubcategoryArcSets {
  std::vector<Arc> p_closure;  // arcs of the tau_n-closure subcategory
  std::vector<Arc> delta_t;    // the tilting dissection
  std::vector<Arc> p_perp;     // arcs of the right-perpendicular category
};

SubcategoryArcSets subcategory_arc_sets(const SurfaceModel& S, int n);

GentleAlgebra cone(const GentleAlgebra& A, int n);

struct AbsoluteCompletenessReport {
  bool absolute = false;
  std::vector<Str> p_part;  // closure modules of projective dimension < n
};

AbsoluteCompletenessReport is_absolutely_complete(const SurfaceModel& S, int n);

}  // namespace gentle
