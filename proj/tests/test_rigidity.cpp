#include "doctest.h"

#include <random>

#include "gentle/rigidity.hpp"
#include "test_util.hpp"

using namespace gentle;

namespace {

ArcSystem arcs_of(const SurfaceModel& S, const std::vector<Str>& strings) {
  std::vector<Arc> arcs;
  for (const auto& s : strings) arcs.push_back(Arc::of_string(S, s));
  return ArcSystem::of(S, arcs);
}

ArcSystem injective_dissection(const SurfaceModel& S) {
  std::vector<Arc> arcs;
  for (int v = 0; v < S.A.n_vertices(); ++v)
    arcs.push_back(distinguished_arc(S, v, DistinguishedKind::Injective));
  return ArcSystem::of(S, arcs);
}

}  // namespace

TEST_CASE("empty system on the disk gives one big face") {
  auto S = build_surface(load_algebra("a2.alg"));
  auto fd = face_decomposition(S, ArcSystem{});
  REQUIRE(fd.faces.size() == 1);
  CHECK(fd.e1 == 0);
  CHECK(fd.faces[0].bullet_count == 3);
  CHECK(fd.faces[0].disk());
}

TEST_CASE("empty system on the annulus is not a partial triangulation") {
  auto S = build_surface(load_algebra("square.alg"));
  auto cls = classify_partial_triangulation(S, ArcSystem{});
  CHECK(!cls.ok);
}

TEST_CASE("injective dissection faces have exactly one bullet each") {
  for (const char* name :
       {"a2.alg", "a3h.alg", "lin3.alg", "lin4.alg", "square.alg", "branched.alg",
        "genus1.alg", "kron.alg"}) {
    CAPTURE(name);
    auto S = build_surface(load_algebra(name));
    auto sysI = injective_dissection(S);
    auto fd = face_decomposition(S, sysI);
    for (const auto& face : fd.faces) {
      CHECK(face.disk());
      CHECK(face.bullet_count == 1);
    }
    // same for the projective dissection
    std::vector<Arc> arcs;
    for (int v = 0; v < S.A.n_vertices(); ++v)
      arcs.push_back(distinguished_arc(S, v, DistinguishedKind::Projective));
    auto fdP = face_decomposition(S, ArcSystem::of(S, arcs));
    for (const auto& face : fdP.faces) {
      CHECK(face.disk());
      CHECK(face.bullet_count == 1);
    }
  }
}

TEST_CASE("admissibility verdicts") {
  auto S2 = build_surface(load_algebra("a2.alg"));
  auto bad = arcs_of(S2, {Str::trivial(0), Str::trivial(1)});
  CHECK(!is_admissible(S2, bad).ok);
  for (const char* name : {"a2.alg", "lin3.alg", "square.alg", "branched.alg"}) {
    auto S = build_surface(load_algebra(name));
    CHECK(is_admissible(S, injective_dissection(S)).ok);
  }
}

TEST_CASE("rigidity engines agree and match known cases") {
  auto S = build_surface(load_algebra("a2.alg"));
  auto v1 = is_rigid(S, {Str::trivial(0), Str::trivial(1)});
  CHECK(v1.geometric == v1.oracle);
  CHECK(!v1.oracle);
  auto v2 = is_rigid(S, {projective_string(S.A, 0), projective_string(S.A, 1)});
  CHECK(v2.geometric == v2.oracle);
  CHECK(v2.oracle);
  // the six-module maximal rigid set on the square
  auto Sq = build_surface(load_algebra("square.alg"));
  std::vector<Str> six;
  for (int v = 0; v < 4; ++v) six.push_back(injective_string(Sq.A, v));
  six.push_back(projective_string(Sq.A, Sq.A.vertex_index("2")));
  six.push_back(projective_string(Sq.A, Sq.A.vertex_index("3")));
  auto v3 = is_rigid(Sq, six);
  CHECK(v3.geometric);
  CHECK(v3.oracle);
}

TEST_CASE("rigidity engines agree on random string subsets") {
  std::mt19937_64 rng(20240811);
  for (const char* name : {"a2.alg", "lin3.alg", "square.alg", "kron.alg", "genus1.alg"}) {
    CAPTURE(name);
    auto S = build_surface(load_algebra(name));
    auto strings = enumerate_strings(S.A, 5).strings;
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<Str> subset;
      for (const auto& s : strings)
        if (rng() % 4 == 0) subset.push_back(s);
      if (subset.empty()) continue;
      auto v = is_rigid(S, subset);
      CHECK(v.geometric == v.oracle);
    }
  }
}

TEST_CASE("flip reduce on the two simples of A2") {
  auto S = build_surface(load_algebra("a2.alg"));
  auto sys = arcs_of(S, {Str::trivial(0), Str::trivial(1)});
  auto red = flip_reduce(S, sys);
  CHECK(is_admissible(S, red).ok);
  Arc ma = Arc::of_string(S, str_of(S.A, "a"));
  CHECK(red.contains(ma));
  // idempotent
  auto red2 = flip_reduce(S, red);
  CHECK(red.arcs == red2.arcs);
}

TEST_CASE("no internal triangles in admissible systems, triangle weight sums") {
  std::mt19937_64 rng(7);
  for (const char* name : {"a3h.alg", "lin3.alg", "square.alg", "branched.alg"}) {
    CAPTURE(name);
    auto S = build_surface(load_algebra(name));
    auto strings = enumerate_strings(S.A, 5).strings;
    for (int trial = 0; trial < 25; ++trial) {
      // grow a random admissible system greedily
      std::vector<Arc> acc;
      std::vector<Str> shuffled = strings;
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
      for (const auto& s : shuffled) {
        Arc cand = Arc::of_string(S, s);
        if (!is_simple(S, cand)) continue;
        bool ok = true;
        for (const auto& oi : oriented_intersections(S, cand, cand))
          if (oi.weight == 1) ok = false;
        for (const auto& a : acc) {
          if (a == cand) ok = false;
          if (!ok) break;
          if (interior_crossing_count(S, a, cand)) ok = false;
          if (!ok) break;
          for (const auto& oi : oriented_intersections(S, a, cand))
            if (oi.weight == 1) ok = false;
          if (!ok) break;
        }
        if (ok) acc.push_back(cand);
      }
      auto sys = ArcSystem::of(S, acc);
      REQUIRE(is_admissible(S, sys).ok);
      auto fd = face_decomposition(S, sys);
      for (const auto& face : fd.faces) {
        bool internal_triangle = face.disk() && face.edge_count == 3 && face.seg_count == 0;
        CHECK(!internal_triangle);
      }
    }
  }
}

TEST_CASE("completion of the empty system on A2 reaches rank n") {
  auto S = build_surface(load_algebra("a2.alg"));
  auto sys = complete_to_max(S, ArcSystem{});
  auto rep = max_rigid_rank_report(S, sys);
  CHECK(rep.e1_edges == rep.e1_formula);
  CHECK(rep.e1_edges == 2);
  CHECK(rep.f4 == 0);
  CHECK(rep.f5 == 0);
  CHECK(is_maximal_bounded(S, sys));
}

TEST_CASE("completion keeps the seed and yields only F1..F5 faces") {
  std::mt19937_64 rng(99);
  for (const char* name : {"a2.alg", "a3h.alg", "lin3.alg", "square.alg", "branched.alg"}) {
    CAPTURE(name);
    auto S = build_surface(load_algebra(name));
    auto strings = enumerate_strings(S.A, 5).strings;
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<Arc> acc;
      std::vector<Str> shuffled = strings;
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
      for (const auto& s : shuffled) {
        if (acc.size() >= 2) break;
        Arc cand = Arc::of_string(S, s);
        if (!is_simple(S, cand)) continue;
        bool ok = true;
        for (const auto& oi : oriented_intersections(S, cand, cand))
          if (oi.weight == 1) ok = false;
        for (const auto& a : acc) {
          if (a == cand || interior_crossing_count(S, a, cand)) ok = false;
          if (!ok) break;
          for (const auto& oi : oriented_intersections(S, a, cand))
            if (oi.weight == 1) ok = false;
        }
        if (ok) acc.push_back(cand);
      }
      auto seed = ArcSystem::of(S, acc);
      if (!is_admissible(S, seed).ok) continue;
      auto sys = complete_to_max(S, seed);
      for (const auto& a : seed.arcs) CHECK(sys.contains(a));
      auto cls = classify_partial_triangulation(S, sys);
      REQUIRE(cls.ok);
      CHECK(cls.s <= 5);
      auto rep = max_rigid_rank_report(S, sys);
      CHECK(rep.e1_edges == rep.e1_formula);
      CHECK(rep.e1_edges >= S.A.n_vertices());
      // the modules of the completed system form a rigid module
      std::vector<Str> mods;
      for (const auto& a : sys.arcs) mods.push_back(a.to_string(S));
      auto v = is_rigid(S, mods);
      CHECK(v.geometric);
      CHECK(v.oracle);
    }
  }
}

TEST_CASE("hereditary type A completions have rank exactly n") {
  for (const char* name : {"a2.alg", "a3h.alg", "kron.alg"}) {
    CAPTURE(name);
    auto S = build_surface(load_algebra(name));
    auto sys = complete_to_max(S, ArcSystem{});
    auto rep = max_rigid_rank_report(S, sys);
    CHECK(rep.e1_edges == S.A.n_vertices());
    CHECK(rep.f4 == 0);
    CHECK(rep.f5 == 0);
  }
}

TEST_CASE("canonical class representative is idempotent") {
  for (const char* name : {"a3h.alg", "lin3.alg", "square.alg"}) {
    auto S = build_surface(load_algebra(name));
    auto sys = complete_to_max(S, ArcSystem{});
    auto can = canonical_class_representative(S, sys);
    auto can2 = canonical_class_representative(S, can);
    CHECK(can.arcs == can2.arcs);
  }
}
