#include "doctest.h"

#include <map>

#include "gentle/homology.hpp"
#include "test_util.hpp"

using namespace gentle;

namespace {

std::vector<std::string> summand_names(const GentleAlgebra& A, const std::vector<Summand>& ss) {
  std::vector<std::string> out;
  for (const auto& s : ss) out.push_back(format_str(A, s.str));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("ext oracle on the square") {
  auto sq = load_algebra("square.alg");
  Str s3 = Str::trivial(sq.vertex_index("3"));
  Str s1 = Str::trivial(sq.vertex_index("1"));
  Str s2 = Str::trivial(sq.vertex_index("2"));
  CHECK(ext_dim_q(sq, s3, s1, 1) == 1);
  CHECK(ext_dim_q(sq, s3, s2, 1) == 0);
  // projectives have no higher ext
  Str p4 = projective_string(sq, sq.vertex_index("4"));
  for (const auto& x : enumerate_strings(sq, 4).strings) {
    CHECK(ext_dim_q(sq, p4, x, 1) == 0);
    CHECK(ext_dim_q(sq, p4, x, 2) == 0);
  }
}

TEST_CASE("hom floor and identity") {
  auto sq = load_algebra("square.alg");
  for (const auto& s : enumerate_strings(sq, 6).strings) CHECK(hom_dim_q(sq, s, s) >= 1);
}

TEST_CASE("syzygy oracle on the square") {
  auto sq = load_algebra("square.alg");
  Str s4 = Str::trivial(sq.vertex_index("4"));
  auto parts = syzygy_oracle(sq, s4);
  CHECK(summand_names(sq, parts) == std::vector<std::string>{"e(2)", "e(3)"});
  CHECK(!parts[0].projective);
  CHECK(!parts[1].projective);

  Str s3 = Str::trivial(sq.vertex_index("3"));
  auto p3 = syzygy_oracle(sq, s3);
  REQUIRE(p3.size() == 1);
  CHECK(format_str(sq, p3[0].str) == "e(1)");
  CHECK(p3[0].projective);  // S_1 = P_1 here

  Str p4 = projective_string(sq, sq.vertex_index("4"));
  CHECK(syzygy_oracle(sq, p4).empty());
}

TEST_CASE("tau oracle on the square") {
  auto sq = load_algebra("square.alg");
  Str s3 = Str::trivial(sq.vertex_index("3"));
  Str s2 = Str::trivial(sq.vertex_index("2"));
  auto t3 = tau_oracle(sq, s3);
  REQUIRE(t3.has_value());
  CHECK(format_str(sq, *t3) == "d");
  auto t2 = tau_oracle(sq, s2);
  REQUIRE(t2.has_value());
  CHECK(format_str(sq, *t2) == "c");
  // tau of projectives vanishes
  for (int v = 0; v < sq.n_vertices(); ++v)
    CHECK(!tau_oracle(sq, projective_string(sq, v)).has_value());
}

TEST_CASE("global dimension") {
  CHECK(global_dimension(load_algebra("square.alg")).value == 2);
  CHECK(global_dimension(load_algebra("a2.alg")).value == 1);
  CHECK(global_dimension(load_algebra("lin3.alg")).value == 2);
  CHECK(global_dimension(load_algebra("lin4.alg")).value == 3);
  CHECK(global_dimension(load_algebra("lin5.alg")).value == 4);
  auto cyc = parse_algebra("vertices: x y\narrow: a x y\narrow: b y x\nrel: a b\nrel: b a\n");
  REQUIRE(cyc.ok());
  CHECK(global_dimension(*cyc.algebra).infinite);
}

TEST_CASE("injective and projective strings on the square") {
  auto sq = load_algebra("square.alg");
  CHECK(format_str(sq, injective_string(sq, sq.vertex_index("1"))) == "c d~");
  CHECK(format_str(sq, injective_string(sq, sq.vertex_index("4"))) == "e(4)");
  CHECK(format_str(sq, projective_string(sq, sq.vertex_index("4"))) == "a~ b");
  CHECK(format_str(sq, projective_string(sq, sq.vertex_index("1"))) == "e(1)");
  // string module of I_1 has the expected dimensions
  auto m = string_module(sq, injective_string(sq, sq.vertex_index("1")));
  CHECK(m.dims == std::vector<int>{1, 1, 1, 0});
}

TEST_CASE("pd / tau vanishing equivalence") {
  // pd M < n iff tau_n M = 0, exercised via tau after iterated syzygies
  auto sq = load_algebra("square.alg");
  int n = global_dimension(sq).value;
  for (const auto& s : enumerate_strings(sq, 5).strings) {
    Rep<Rat> M = rep_of_string_module<Rat>(sq, s);
    int pd = proj_dim(sq, M);
    // compute tau_n algebraically: tau applied to every (n-1)-fold syzygy part
    bool tau_n_zero = true;
    std::vector<Str> level = {s};
    for (int i = 0; i < n - 1; ++i) {
      std::vector<Str> next;
      for (const auto& x : level)
        for (const auto& part : syzygy_oracle(sq, x))
          if (!part.projective) next.push_back(part.str);
      level = next;
    }
    for (const auto& x : level)
      if (tau_oracle(sq, x).has_value()) tau_n_zero = false;
    CHECK((pd < n) == tau_n_zero);
  }
}

TEST_CASE("euler characteristic depends only on dimension vectors") {
  auto sq = load_algebra("square.alg");
  int n = global_dimension(sq).value;
  auto strings = enumerate_strings(sq, 6).strings;
  std::map<std::pair<std::vector<int>, std::vector<int>>, long> seen;
  for (const auto& m : strings)
    for (const auto& x : strings) {
      long chi = 0;
      auto dims = ext_dims(sq, rep_of_string_module<Rat>(sq, m), rep_of_string_module<Rat>(sq, x),
                           n);
      for (int k = 0; k <= n; ++k) chi += (k % 2 ? -1 : 1) * dims[k];
      auto key = std::make_pair(string_module(sq, m).dims, string_module(sq, x).dims);
      auto it = seen.find(key);
      if (it == seen.end())
        seen[key] = chi;
      else
        CHECK(it->second == chi);
    }
}

TEST_CASE("dimension counts agree over a prime field") {
  auto sq = load_algebra("square.alg");
  auto strings = enumerate_strings(sq, 4).strings;
  for (const auto& m : strings)
    for (const auto& x : strings) {
      auto dq = ext_dims(sq, rep_of_string_module<Rat>(sq, m), rep_of_string_module<Rat>(sq, x), 2);
      auto dp = ext_dims(sq, rep_of_string_module<F5>(sq, m), rep_of_string_module<F5>(sq, x), 2);
      CHECK(dq == dp);
    }
}

TEST_CASE("depth bound reported for infinite global dimension") {
  auto cyc = parse_algebra("vertices: x y\narrow: a x y\narrow: b y x\nrel: a b\nrel: b a\n");
  REQUIRE(cyc.ok());
  Str sx = Str::trivial(0);
  CHECK_THROWS_AS(proj_dim(*cyc.algebra, rep_of_string_module<Rat>(*cyc.algebra, sx), 16),
                  DepthExceeded);
}
