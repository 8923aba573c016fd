#include "gentle/batch.hpp"

namespace gentle {

ExtTable ext_table_serial(const GentleAlgebra& A, const std::vector<Str>& mods, int maxdeg,
                          int depth) {
  int n = static_cast<int>(mods.size());
  std::vector<Rep<Rat>> reps(n);
  for (int i = 0; i < n; ++i) reps[i] = rep_of_string_module<Rat>(A, mods[i]);
  ExtTable t(maxdeg + 1,
             std::vector<std::vector<int>>(n, std::vector<int>(n, 0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto d = ext_dims(A, reps[i], reps[j], maxdeg, depth);
      for (int k = 0; k <= maxdeg; ++k) t[k][i][j] = d[k];
    }
  return t;
}

IntTable crossing_table_serial(const SurfaceModel& S, const std::vector<Arc>& arcs) {
  int n = static_cast<int>(arcs.size());
  IntTable t(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      int c = interior_crossing_count(S, arcs[i], arcs[j]);
      t[i][j] = t[j][i] = c;
    }
  return t;
}

IntTable weight_one_table_serial(const SurfaceModel& S, const std::vector<Arc>& arcs) {
  int n = static_cast<int>(arcs.size());
  IntTable t(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      int w = 0;
      for (const auto& oi : oriented_intersections(S, arcs[i], arcs[j]))
        if (oi.weight == 1) w = 1;
      t[i][j] = t[j][i] = w;
    }
  return t;
}

SweepResult rigidity_sweep(const std::vector<std::vector<int>>& subsets, const ExtTable& ext,
                           const IntTable& crossings, const IntTable& weight_one,
                           const std::vector<std::uint8_t>& simple_flags) {
  SweepResult res;
  res.geometric.resize(subsets.size());
  res.oracle.resize(subsets.size());
  for (std::size_t s = 0; s < subsets.size(); ++s) {
    const auto& idx = subsets[s];
    bool geo = true, ora = true;
    for (std::size_t a = 0; a < idx.size() && (geo || ora); ++a) {
      if (!simple_flags[idx[a]]) geo = false;
      for (std::size_t b = 0; b < idx.size(); ++b) {
        if (ext[1][idx[a]][idx[b]] != 0) ora = false;
        if (b >= a) {
          if (idx[a] != idx[b] && crossings[idx[a]][idx[b]] != 0) geo = false;
          if (weight_one[idx[a]][idx[b]] != 0) geo = false;
        }
      }
    }
    res.geometric[s] = geo ? 1 : 0;
    res.oracle[s] = ora ? 1 : 0;
  }
  return res;
}

}  // namespace gentle
