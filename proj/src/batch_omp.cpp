#include "gentle/batch.hpp"

#ifdef GENTLE_HAVE_OPENMP
#include <omp.h>
#endif

namespace gentle {

bool openmp_enabled() {
#ifdef GENTLE_HAVE_OPENMP
  return true;
#else
  return false;
#endif
}

ExtTable ext_table_omp(const GentleAlgebra& A, const std::vector<Str>& mods, int maxdeg,
                       int depth) {
  int n = static_cast<int>(mods.size());
  std::vector<Rep<Rat>> reps(n);
#ifdef GENTLE_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (int i = 0; i < n; ++i) reps[i] = rep_of_string_module<Rat>(A, mods[i]);
  ExtTable t(maxdeg + 1, std::vector<std::vector<int>>(n, std::vector<int>(n, 0)));
#ifdef GENTLE_HAVE_OPENMP
#pragma omp parallel for collapse(2) schedule(dynamic)
#endif
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto d = ext_dims(A, reps[i], reps[j], maxdeg, depth);
      for (int k = 0; k <= maxdeg; ++k) t[k][i][j] = d[k];
    }
  return t;
}

IntTable crossing_table_omp(const SurfaceModel& S, const std::vector<Arc>& arcs) {
  int n = static_cast<int>(arcs.size());
  IntTable t(n, std::vector<int>(n, 0));
#ifdef GENTLE_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      int c = interior_crossing_count(S, arcs[i], arcs[j]);
      t[i][j] = c;
    }
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) t[j][i] = t[i][j];
  return t;
}

IntTable weight_one_table_omp(const SurfaceModel& S, const std::vector<Arc>& arcs) {
  int n = static_cast<int>(arcs.size());
  IntTable t(n, std::vector<int>(n, 0));
#ifdef GENTLE_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      int w = 0;
      for (const auto& oi : oriented_intersections(S, arcs[i], arcs[j]))
        if (oi.weight == 1) w = 1;
      t[i][j] = w;
    }
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) t[j][i] = t[i][j];
  return t;
}

}  // namespace gentle
