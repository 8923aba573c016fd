#include "doctest.h"

#include <set>

#include "gentle/surface.hpp"
#include "test_util.hpp"

using namespace gentle;

namespace {

const char* kAllFixtures[] = {"a2.alg",    "a3h.alg",   "lin3.alg",  "lin4.alg", "lin5.alg",
                              "square.alg", "fig_a.alg", "fig_b.alg", "fig_d.alg", "fig_e.alg",
                              "branched.alg", "kron.alg", "genus1.alg"};

}  // namespace

TEST_CASE("surface of the smallest hereditary algebra") {
  auto S = build_surface(load_algebra("a2.alg"));
  auto t = topology(S);
  CHECK(t.g == 0);
  CHECK(t.b == 1);
  CHECK(t.m == 3);
  CHECK(t.p == 0);
}

TEST_CASE("surface of the square is an annulus") {
  auto S = build_surface(load_algebra("square.alg"));
  auto t = topology(S);
  CHECK(t.g == 0);
  CHECK(t.b == 2);
  CHECK(t.m == 4);
  CHECK(t.p == 0);
}

TEST_CASE("surface of the relation chain A3 is a disk") {
  auto S = build_surface(load_algebra("lin3.alg"));
  auto t = topology(S);
  CHECK(t.g == 0);
  CHECK(t.b == 1);
  CHECK(t.m == 4);
  CHECK(t.p == 0);
}

TEST_CASE("kronecker surface is an annulus, genus fixture has genus one") {
  auto K = build_surface(load_algebra("kron.alg"));
  CHECK(K.g == 0);
  CHECK(K.b == 2);
  CHECK(K.m == 2);
  auto G = build_surface(load_algebra("genus1.alg"));
  CHECK(G.g == 1);
  CHECK(G.b == 1);
  CHECK(G.m == 1);
  CHECK(G.p == 0);
}

TEST_CASE("full relation cycles become punctures") {
  auto res = parse_algebra("vertices: x y\narrow: a x y\narrow: b y x\nrel: a b\nrel: b a\n");
  REQUIRE(res.ok());
  auto S = build_surface(*res.algebra);
  CHECK(S.p == 1);
}

TEST_CASE("rank identity and boundary alternation on all fixtures") {
  for (const char* name : kAllFixtures) {
    CAPTURE(name);
    auto A = load_algebra(name);
    auto S = build_surface(A);
    CHECK(A.n_vertices() == 2 * S.g - 2 + S.b + S.p + S.m);
    int circs = 0, bullets = 0;
    for (const auto& cyc : S.boundary) {
      REQUIRE(cyc.size() % 2 == 0);
      for (std::size_t i = 0; i < cyc.size(); ++i) {
        CHECK(cyc[i].bullet != cyc[(i + 1) % cyc.size()].bullet);
        (cyc[i].bullet ? bullets : circs)++;
      }
    }
    CHECK(circs == S.m);
    CHECK(bullets == S.m);
  }
}

TEST_CASE("every vertex occurs in exactly two polygon slots and two fan slots") {
  for (const char* name : kAllFixtures) {
    auto S = build_surface(load_algebra(name));
    std::vector<int> poly_slots(S.A.n_vertices(), 0), fan_slots(S.A.n_vertices(), 0);
    for (const auto& P : S.polygons)
      for (int v : P.sides) poly_slots[v]++;
    for (const auto& f : S.fans)
      for (int v : f) fan_slots[v]++;
    for (int v = 0; v < S.A.n_vertices(); ++v) {
      CHECK(poly_slots[v] == 2);
      CHECK(fan_slots[v] == 2);
    }
  }
}

TEST_CASE("distinguished strings") {
  auto S = build_surface(load_algebra("square.alg"));
  int v3 = S.A.vertex_index("3");
  CHECK(distinguished_string(S, v3, DistinguishedKind::Simple).trivial_str());
  auto i1 = distinguished_string(S, S.A.vertex_index("1"), DistinguishedKind::Injective);
  CHECK(format_str(S.A, i1) == "c d~");
  auto p4 = distinguished_string(S, S.A.vertex_index("4"), DistinguishedKind::Projective);
  CHECK(format_str(S.A, p4) == "a~ b");
}
