#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gentle/algebra.hpp"
#include "gentle/linalg.hpp"
#include "gentle/strings.hpp"

namespace gentle {

// Explicit representation: one vector space per vertex, one matrix per arrow.
// act[a] maps the source component into the target component (columns indexed
// by source basis). For a path p = a1...ak the action is act[ak]*...*act[a1].
template <typename F>
struct Rep {
  std::vector<int> dims;
  std::vector<Mat<F>> act;  // per arrow: dims[tgt] x dims[src]

  int total_dim() const {
    int t = 0;
    for (int d : dims) t += d;
    return t;
  }
  bool zero() const { return total_dim() == 0; }
};

// Map of representations: one matrix per vertex, rows = target, cols = source.
template <typename F>
struct RepMap {
  std::vector<Mat<F>> comp;
};

template <typename F>
Rep<F> rep_of_string_module(const GentleAlgebra& A, const Str& s);

template <typename F>
Rep<F> rep_of_projective(const GentleAlgebra& A, int v);

template <typename F>
Rep<F> direct_sum(const Rep<F>& a, const Rep<F>& b);

// Basis of Hom(M, N) as representation maps.
template <typename F>
std::vector<RepMap<F>> hom_basis(const GentleAlgebra& A, const Rep<F>& M, const Rep<F>& N);

template <typename F>
int hom_dim(const GentleAlgebra& A, const Rep<F>& M, const Rep<F>& N);

struct CoverShape {
  std::vector<int> summands;  // projective vertex per copy, sorted
};

// Minimal projective cover P -> M; also returns the cover's summand list.
template <typename F>
struct Cover {
  Rep<F> P;
  RepMap<F> pi;
  CoverShape shape;
};

template <typename F>
Cover<F> minimal_cover(const GentleAlgebra& A, const Rep<F>& M);

// Kernel subrepresentation with its inclusion map.
template <typename F>
struct Sub {
  Rep<F> K;
  RepMap<F> incl;
};

template <typename F>
Sub<F> kernel_subrep(const GentleAlgebra& A, const RepMap<F>& f, const Rep<F>& dom,
                     const Rep<F>& cod);

// dim Ext^k(M, N) for 0 <= k <= maxk, via the minimal projective resolution
// of M; throws DepthExceeded when the resolution does not terminate within
// `depth` steps.
struct DepthExceeded {
  int bound;
};

template <typename F>
std::vector<int> ext_dims(const GentleAlgebra& A, const Rep<F>& M, const Rep<F>& N, int maxk,
                          int depth = 64);

int hom_dim_q(const GentleAlgebra& A, const Str& m, const Str& n);
int ext_dim_q(const GentleAlgebra& A, const Str& m, const Str& n, int k, int depth = 64);

// Projective dimension by syzygy iteration (DepthExceeded on overflow).
int proj_dim(const GentleAlgebra& A, const Rep<Rat>& M, int depth = 64);
bool is_projective_rep(const GentleAlgebra& A, const Rep<Rat>& M);

struct GlobalDim {
  bool infinite = false;
  int value = 0;  // meaningful when finite
};

GlobalDim global_dimension(const GentleAlgebra& A, int depth = 64);

// Indecomposable summand, as a string with bookkeeping flags.
struct Summand {
  Str str;
  bool projective = false;
};

// Decompose a representation into string-module summands by split-off
// peeling. Fails loudly (std::runtime_error) if a non-string summand shows
// up, which would contradict the string-algebra structure theory.
std::vector<Summand> peel_into_strings(const GentleAlgebra& A, Rep<Rat> M);

// Kernel of the projective cover, decomposed; projective summands flagged.
std::vector<Summand> syzygy_oracle(const GentleAlgebra& A, const Str& s);
std::vector<Summand> syzygy_oracle_rep(const GentleAlgebra& A, const Rep<Rat>& M);

// Auslander-Reiten translate D Tr via the transpose over the opposite
// algebra; empty optional = zero module (projective input).
std::optional<Str> tau_oracle(const GentleAlgebra& A, const Str& s);

GentleAlgebra opposite_algebra(const GentleAlgebra& A);

// The string of the indecomposable injective / projective at v.
Str injective_string(const GentleAlgebra& A, int v);
Str projective_string(const GentleAlgebra& A, int v);

bool reps_isomorphic(const GentleAlgebra& A, const Rep<Rat>& X, const Rep<Rat>& Y);

}  // namespace gentle
