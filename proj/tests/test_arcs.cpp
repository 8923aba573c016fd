#include "doctest.h"

#include <map>

#include "gentle/arcs.hpp"
#include "gentle/homology.hpp"
#include "test_util.hpp"

using namespace gentle;

namespace {

std::vector<std::string> crossing_names(const SurfaceModel& S, const Arc& a) {
  std::vector<std::string> out;
  for (int v : a.xs) out.push_back(S.A.vertex_ids[v]);
  return out;
}

// intersection weight profile by direction: counts[dir][w]
std::map<int, std::map<int, int>> weight_profile(const SurfaceModel& S, const Arc& a,
                                                 const Arc& b) {
  std::map<int, std::map<int, int>> out;
  for (const auto& oi : oriented_intersections(S, a, b)) out[oi.from][oi.weight]++;
  return out;
}

}  // namespace

TEST_CASE("arc of a trivial string crosses its own dual arc") {
  auto S = build_surface(load_algebra("square.alg"));
  Arc a = Arc::of_string(S, Str::trivial(S.A.vertex_index("4")));
  CHECK(crossing_names(S, a) == std::vector<std::string>{"4"});
  // endpoints in the two 5-gons, both with weight 2
  CHECK(endpoint_weight(S, a, 0) == 2);
  CHECK(endpoint_weight(S, a, 1) == 2);
}

TEST_CASE("crossing sequence is the vertex sequence of the walk") {
  auto S = build_surface(load_algebra("square.alg"));
  Arc a = Arc::of_string(S, str_of(S.A, "a~ b"));
  auto cn = crossing_names(S, a);
  std::vector<std::string> fw = {"3", "4", "2"};
  std::vector<std::string> bw(fw.rbegin(), fw.rend());
  CHECK((cn == fw || cn == bw));
}

TEST_CASE("string / arc round trip on all fixtures") {
  for (const char* name : {"a2.alg", "a3h.alg", "lin3.alg", "lin4.alg", "square.alg",
                           "branched.alg", "kron.alg", "genus1.alg"}) {
    CAPTURE(name);
    auto S = build_surface(load_algebra(name));
    for (const auto& s : enumerate_strings(S.A, 6).strings) {
      Arc a = Arc::of_string(S, s);
      CHECK(a.to_string(S) == s);
    }
  }
}

TEST_CASE("corner arc beyond the polygon size is the zero arc") {
  auto S = build_surface(load_algebra("square.alg"));
  // polygons of the square: two 1-gons and two 3-gons
  for (std::size_t p = 0; p < S.polygons.size(); ++p) {
    Arc z = corner_arc_tau(S, static_cast<int>(p), S.polygons[p].side_count() + 1);
    CHECK(z.zero_arc);
    CHECK_THROWS(endpoint_weight(S, z, 0));
  }
}

TEST_CASE("corner arc realizing the translate of the top simple") {
  auto S = build_surface(load_algebra("square.alg"));
  // the polygon (4,3,1): corner arc at t=3 must give the string d
  int poly = -1;
  for (std::size_t p = 0; p < S.polygons.size(); ++p) {
    std::vector<std::string> sides;
    for (int v : S.polygons[p].sides) sides.push_back(S.A.vertex_ids[v]);
    if (sides == std::vector<std::string>{"4", "3", "1"}) poly = static_cast<int>(p);
  }
  REQUIRE(poly >= 0);
  Arc g3 = corner_arc_tau(S, poly, 3);
  CHECK(format_str(S.A, g3.to_string(S)) == "d");
}

TEST_CASE("ext-weight correspondence against the oracle: hereditary A3") {
  auto S = build_surface(load_algebra("a3h.alg"));
  Arc ma = Arc::of_string(S, str_of(S.A, "a"));
  Arc mb = Arc::of_string(S, str_of(S.A, "b"));
  CHECK(interior_crossing_count(S, ma, mb) == 1);
  auto prof = weight_profile(S, ma, mb);
  CHECK(prof[0][1] == 1);  // one weight-one intersection from M_a to M_b
  CHECK(ext_dim_q(S.A, str_of(S.A, "a"), str_of(S.A, "b"), 1) == 1);
  CHECK(prof[1][0] == 1);  // the transversal Hom direction
  CHECK(hom_dim_q(S.A, str_of(S.A, "b"), str_of(S.A, "a")) == 1);
}

TEST_CASE("ext-weight correspondence: square endpoint intersections") {
  auto S = build_surface(load_algebra("square.alg"));
  Arc s3 = Arc::of_string(S, Str::trivial(S.A.vertex_index("3")));
  Arc s1 = Arc::of_string(S, Str::trivial(S.A.vertex_index("1")));
  auto prof = weight_profile(S, s3, s1);
  CHECK(prof[0][1] == 1);
  CHECK(prof[1].empty());
  Arc i1 = Arc::of_string(S, str_of(S.A, "c d~"));
  Arc p4 = Arc::of_string(S, str_of(S.A, "a~ b"));
  CHECK(interior_crossing_count(S, i1, p4) == 0);
  auto prof2 = weight_profile(S, i1, p4);
  CHECK(prof2[0][0] == 2);  // two weight-zero intersections I1 -> P4
  CHECK(hom_dim_q(S.A, str_of(S.A, "c d~"), str_of(S.A, "a~ b")) == 2);
  CHECK(hom_dim_q(S.A, str_of(S.A, "a~ b"), str_of(S.A, "c d~")) == 0);
}

TEST_CASE("full ext-weight audit on small fixtures") {
  for (const char* name : {"a2.alg", "a3h.alg", "lin3.alg", "square.alg", "branched.alg"}) {
    CAPTURE(name);
    auto S = build_surface(load_algebra(name));
    int n = global_dimension(S.A).value;
    auto strings = enumerate_strings(S.A, 5).strings;
    for (const auto& x : strings)
      for (const auto& y : strings) {
        if (x == y) continue;
        Arc ax = Arc::of_string(S, x);
        Arc ay = Arc::of_string(S, y);
        if (!is_simple(S, ax) || !is_simple(S, ay)) continue;
        if (interior_crossing_count(S, ax, ay) != 0) continue;
        auto prof = weight_profile(S, ax, ay);
        auto ex = ext_dims(S.A, rep_of_string_module<Rat>(S.A, x),
                           rep_of_string_module<Rat>(S.A, y), n);
        auto ey = ext_dims(S.A, rep_of_string_module<Rat>(S.A, y),
                           rep_of_string_module<Rat>(S.A, x), n);
        for (int w = 0; w <= n; ++w) {
          CAPTURE(format_str(S.A, x));
          CAPTURE(format_str(S.A, y));
          CAPTURE(w);
          CHECK(prof[0][w] == ex[w]);
          CHECK(prof[1][w] == ey[w]);
        }
      }
  }
}

TEST_CASE("simplicity: dissection arcs are simple, winding arcs are not") {
  auto S = build_surface(load_algebra("genus1.alg"));
  for (int v = 0; v < S.A.n_vertices(); ++v) {
    CHECK(is_simple(S, distinguished_arc(S, v, DistinguishedKind::Simple)));
    CHECK(is_simple(S, distinguished_arc(S, v, DistinguishedKind::Injective)));
    CHECK(is_simple(S, distinguished_arc(S, v, DistinguishedKind::Projective)));
  }
  // some string on the genus fixture must wind and self-cross
  bool found_nonsimple = false;
  for (const auto& s : enumerate_strings(S.A, 6).strings) {
    Arc a = Arc::of_string(S, s);
    if (!is_simple(S, a)) {
      found_nonsimple = true;
      // rigidity forces simplicity, so a self-crossing arc has self-ext
      CHECK(ext_dim_q(S.A, s, s, 1) > 0);
    }
  }
  CHECK(found_nonsimple);
}

TEST_CASE("winding vs spiralling on the kronecker annulus") {
  auto S = build_surface(load_algebra("kron.alg"));
  // even-length strings spiral between the two boundary circles and stay
  // simple; odd-length ones close back onto one circle and self-cross,
  // matching the regular / non-regular split of the modules
  CHECK(is_simple(S, Arc::of_string(S, str_of(S.A, "a b~"))));
  CHECK(is_simple(S, Arc::of_string(S, str_of(S.A, "a b~ a b~"))));
  CHECK(!is_simple(S, Arc::of_string(S, str_of(S.A, "a b~ a"))));
  CHECK(!is_simple(S, Arc::of_string(S, str_of(S.A, "b a~ b"))));
  for (const auto& s : enumerate_strings(S.A, 6).strings) {
    Arc a = Arc::of_string(S, s);
    if (!is_simple(S, a)) CHECK(ext_dim_q(S.A, s, s, 1) > 0);
  }
}

TEST_CASE("flip of the two simple arcs on hereditary A3") {
  auto S = build_surface(load_algebra("a3h.alg"));
  Arc s1 = Arc::of_string(S, Str::trivial(S.A.vertex_index("1")));
  Arc s2 = Arc::of_string(S, Str::trivial(S.A.vertex_index("2")));
  // shared endpoint: the polygon containing the source corner of arrow a
  int shared = -1;
  for (int e = 0; e < 2; ++e) {
    ArcEnd x = e ? s1.end1() : s1.end0();
    for (int f = 0; f < 2; ++f) {
      ArcEnd y = f ? s2.end1() : s2.end0();
      if (x.poly == y.poly) shared = x.poly;
    }
  }
  REQUIRE(shared >= 0);
  Arc fl = flip(S, s1, s2, shared);
  CHECK(format_str(S.A, fl.to_string(S)) == "a");
  // weight zero intersections with the flipped arc at the new corners
  for (const auto& oi : oriented_intersections(S, fl, s1)) CHECK(oi.weight != 1);
  for (const auto& oi : oriented_intersections(S, fl, s2)) CHECK(oi.weight != 1);
  // flipping without a weight-one intersection must fail
  CHECK_THROWS(flip(S, s2, s1, shared));
}

TEST_CASE("endpoint weight calibration via the translate") {
  auto S = build_surface(load_algebra("square.alg"));
  // tau_2(S_4) must be {c, d}: the corner arcs of both endpoints at t = 3
  Arc s4 = Arc::of_string(S, Str::trivial(S.A.vertex_index("4")));
  std::vector<std::string> got;
  for (int e = 0; e < 2; ++e) {
    ArcEnd end = e ? s4.end1() : s4.end0();
    int sides = S.polygons[end.poly].side_count();
    int w = endpoint_weight(S, s4, e);
    Arc c = corner_arc_tau(S, end.poly, sides - w + 2);
    REQUIRE(!c.zero_arc);
    got.push_back(format_str(S.A, c.to_string(S)));
  }
  std::sort(got.begin(), got.end());
  CHECK(got == std::vector<std::string>{"c", "d"});
}
