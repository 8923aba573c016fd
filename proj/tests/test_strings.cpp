#include "doctest.h"

#include "gentle/strings.hpp"
#include "test_util.hpp"

using namespace gentle;

TEST_CASE("is_string on the square") {
  auto sq = load_algebra("square.alg");
  Walk ab;
  ab.letters = {{sq.arrow_index("a"), false}, {sq.arrow_index("b"), true}};
  CHECK(is_string(sq, ab));
  Walk bd;
  bd.letters = {{sq.arrow_index("b"), true}, {sq.arrow_index("d"), true}};
  CHECK(!is_string(sq, bd));
  CHECK(is_string(sq, Walk::trivial_at(0)));
  // inverse reading of a relation is also forbidden
  Walk dbinv;
  dbinv.letters = {{sq.arrow_index("d"), false}, {sq.arrow_index("b"), false}};
  CHECK(!is_string(sq, dbinv));
}

TEST_CASE("string enumeration on the square") {
  auto sq = load_algebra("square.alg");
  auto res = enumerate_strings(sq, 2);
  CHECK(res.strings.size() == 10);
  CHECK(!res.band_exists);
  // also representation finite at any bound
  auto res8 = enumerate_strings(sq, 8);
  CHECK(res8.strings.size() == 10);
}

TEST_CASE("string enumeration A2 and Kronecker") {
  auto a2 = load_algebra("a2.alg");
  auto res = enumerate_strings(a2, 5);
  CHECK(res.strings.size() == 3);
  CHECK(!res.band_exists);

  auto kron = load_algebra("kron.alg");
  auto kres = enumerate_strings(kron, 4);
  CHECK(kres.band_exists);
}

TEST_CASE("canonical representative is inversion invariant") {
  auto sq = load_algebra("square.alg");
  Walk w;
  w.letters = {{sq.arrow_index("c"), true}, {sq.arrow_index("d"), false}};
  Str s1 = Str::from_walk(sq, w);
  Str s2 = Str::from_walk(sq, w.inverse());
  CHECK(s1 == s2);
}

TEST_CASE("string notation round trip") {
  auto sq = load_algebra("square.alg");
  for (const auto& s : enumerate_strings(sq, 6).strings) {
    Str back;
    std::string err;
    REQUIRE(parse_str(sq, format_str(sq, s), back, err));
    CHECK(back == s);
  }
  Str t;
  std::string err;
  REQUIRE(parse_str(sq, "e(3)", t, err));
  CHECK(t.trivial_str());
  CHECK(!parse_str(sq, "b d", t, err));  // relation
}

TEST_CASE("string modules: dimension vectors") {
  auto sq = load_algebra("square.alg");
  auto dims_of = [&](const std::string& notation) {
    return string_module(sq, str_of(sq, notation)).dims;
  };
  CHECK(dims_of("c") == std::vector<int>{1, 0, 1, 0});
  CHECK(dims_of("a~ b") == std::vector<int>{0, 1, 1, 1});
  CHECK(dims_of("e(2)") == std::vector<int>{0, 1, 0, 0});
  CHECK(dims_of("c d~") == std::vector<int>{1, 1, 1, 0});
}

TEST_CASE("module of a string equals module of its inverse") {
  auto sq = load_algebra("square.alg");
  for (const auto& s : enumerate_strings(sq, 6).strings) {
    Walk inv = s.walk().inverse();
    Str si = Str::from_walk(sq, inv);
    CHECK(string_module(sq, s).dims == string_module(sq, si).dims);
  }
}
