#include <doctest.h>

#include <random>

#include "qdt/gallery.hpp"
#include "qdt/json_io.hpp"
#include "support.hpp"

using namespace qdt;
using namespace qdt::test;

TEST_CASE("relations round-trip through JSON") {
  for (const auto& name : gallery_names()) {
    const GRel d = gallery(name);
    CHECK(relation_from_json(relation_to_json(d)) == d);
    CHECK(parse_relation(relation_to_json(d).dump()) == d);
  }
  std::mt19937_64 rng(61);
  for (int it = 0; it < 100; ++it) {
    GRel d = random_rel(rng, 1 + rng() % 5);
    CHECK(relation_from_json(relation_to_json(d)) == d);
  }
}

TEST_CASE("relation JSON layout") {
  auto j = relation_to_json(grid_product(2));
  CHECK(j.dump() == R"({"carrier":["0","1"],"matrix":[["0","0"],["1","0"]]})");
  GRel d = parse_relation(R"({"carrier":["a","b"],"matrix":[[0,"inf"],["1/2",2]]})");
  CHECK(d(0, 1).is_infinite());
  CHECK(d(1, 0) == q(1, 2));
  CHECK(d(1, 1) == ExtReal(2));
}

TEST_CASE("malformed instances are input errors") {
  CHECK_THROWS_AS(parse_relation("{"), InputError);
  CHECK_THROWS_AS(parse_relation("[]"), InputError);
  CHECK_THROWS_AS(parse_relation(R"({"carrier":["a"]})"), InputError);
  CHECK_THROWS_AS(parse_relation(R"({"carrier":["a","b"],"matrix":[["0","0"]]})"), InputError);
  CHECK_THROWS_AS(parse_relation(R"({"carrier":["a","b"],"matrix":[["0"],["0","0"]]})"), InputError);
  CHECK_THROWS_AS(parse_relation(R"({"carrier":["a"],"matrix":[["-1"]]})"), InputError);
  CHECK_THROWS_AS(parse_relation(R"({"carrier":["a"],"matrix":[[-1]]})"), InputError);
  CHECK_THROWS_AS(parse_relation(R"({"carrier":["a"],"matrix":[[true]]})"), InputError);
  CHECK_THROWS_AS(parse_relation(R"({"carrier":["a","a"],"matrix":[["0","0"],["0","0"]]})"), InputError);
}

TEST_CASE("profiles and radii") {
  const Carrier c = unit_grid(3);
  NetProfile p{{0}, {2, 1}};
  auto j = profile_to_json(p, c);
  CHECK(j.dump() == R"({"prefix":["0"],"cycle":["1","1/2"]})");
  CHECK(profile_from_json(j, c) == p);
  CHECK_THROWS_AS(profile_from_json(parse_json(R"({"prefix":[],"cycle":["9"]})"), c), InputError);
  CHECK_THROWS_AS(profile_from_json(parse_json(R"({"prefix":[],"cycle":[]})"), c), InputError);
  auto radii = radii_from_json(parse_json(R"({"radii":["0","1/4"]})"));
  CHECK(radii == std::vector<ExtReal>{0, q(1, 4)});
  CHECK_THROWS_AS(radii_from_json(parse_json(R"({"radii":["inf"]})")), InputError);
}

TEST_CASE("digests are stable and content-sensitive") {
  CHECK(instance_digest(grid_product(3)) == instance_digest(gallery("G3")));
  CHECK(instance_digest(grid_product(3)) != instance_digest(grid_truncated(3)));
  CHECK(instance_digest(grid_product(3)).size() == 16);
}
