#pragma once

#include <cstdint>
#include <vector>

#include "gentle/higher.hpp"

namespace gentle {

// Batch kernels for the all-pairs computations behind the rigidity and
// extension audits. Each kernel exists twice: a serial reference and an
// OpenMP version; both must produce identical tables (the pair computations
// are pure and order independent). gentle_bench compares their wall times.

// ext_table[k][i][j] = dim Ext^k(M_i, M_j) for 0 <= k <= maxdeg
using ExtTable = std::vector<std::vector<std::vector<int>>>;

ExtTable ext_table_serial(const GentleAlgebra& A, const std::vector<Str>& mods, int maxdeg,
                          int depth = 64);
ExtTable ext_table_omp(const GentleAlgebra& A, const std::vector<Str>& mods, int maxdeg,
                       int depth = 64);

// crossing_table[i][j] = minimal interior crossing number of arcs i, j;
// diagonal = self crossings
using IntTable = std::vector<std::vector<int>>;

IntTable crossing_table_serial(const SurfaceModel& S, const std::vector<Arc>& arcs);
IntTable crossing_table_omp(const SurfaceModel& S, const std::vector<Arc>& arcs);

// weight-one incidence: w1[i][j] = 1 iff some oriented intersection between
// arcs i and j (either direction, self included on the diagonal) has weight 1
IntTable weight_one_table_serial(const SurfaceModel& S, const std::vector<Arc>& arcs);
IntTable weight_one_table_omp(const SurfaceModel& S, const std::vector<Arc>& arcs);

// Batched rigidity sweep over index subsets, evaluated against precomputed
// tables; returns one verdict pair (geometric, oracle) per subset.
struct SweepResult {
  std::vector<std::uint8_t> geometric;
  std::vector<std::uint8_t> oracle;
};

SweepResult rigidity_sweep(const std::vector<std::vector<int>>& subsets, const ExtTable& ext,
                           const IntTable& crossings, const IntTable& weight_one,
                           const std::vector<std::uint8_t>& simple_flags);

bool openmp_enabled();

}  // namespace gentle
