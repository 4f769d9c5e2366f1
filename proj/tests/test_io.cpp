#include <doctest.h>

#include <random>

#include "corpus.hpp"
#include "qbool/cohomology.hpp"
#include "qbool/error.hpp"
#include "qbool/io.hpp"

using namespace qbool;
using nlohmann::json;

TEST_CASE("group round trip") {
  for (const auto& n : corpus::two_groups()) {
    auto j = io::group_to_json(*n.group);
    auto g = io::group_from_json(j);
    CHECK(g->table() == n.group->table());
    CHECK(g->labels() == n.group->labels());
    CHECK(io::group_to_json(*g) == j);
  }
}

TEST_CASE("group schema violations") {
  CHECK_THROWS_AS(io::group_from_json(json::parse(R"({"order": 2})")), ValidationError);
  CHECK_THROWS_AS(io::group_from_json(json::parse(R"({"order": 2, "table": [[0, 1]]})")), ValidationError);
  CHECK_THROWS_AS(io::group_from_json(json::parse(R"({"order": 2, "table": [[0, "x"], [1, 0]]})")), ValidationError);
  CHECK_THROWS_AS(io::group_from_json(json::parse(R"([1, 2])")), ValidationError);
}

TEST_CASE("ring and space round trips") {
  std::mt19937_64 rng(7);
  auto r = stone::BooleanRing::scrambled(3, rng);
  auto r2 = io::ring_from_json(io::ring_to_json(r));
  CHECK(io::ring_to_json(r2) == io::ring_to_json(r));
  CHECK(r2.mul(r.one(), r.one()) == r.one());

  auto x = stone::FiniteSpace(3, {0b001, 0b011});
  CHECK(io::space_from_json(io::space_to_json(x)) == x);
  CHECK_THROWS_AS(io::ring_from_json(json::parse(R"({"dim": 1})")), ValidationError);
}

TEST_CASE("bundle round trip validates") {
  std::mt19937_64 rng(9);
  auto b = corpus::random_bundle(corpus::d8(), 3, rng);
  auto j = io::bundle_to_json(b);
  auto c = io::bundle_from_json(j);
  CHECK(c.proj == b.proj);
  CHECK(c.action == b.action);
  j["action"][1][0] = j["action"][0][0];
  CHECK_THROWS(io::bundle_from_json(j));
}

TEST_CASE("snapshot round trip") {
  coh::Cohomology h(corpus::d8());
  auto s = coh::snapshot(h, 3);
  auto j = io::snapshot_to_json(s);
  CHECK(io::snapshot_from_json(j) == s);
  CHECK(j["dims"] == json({1, 2, 3, 4}));
  j["dims"][0] = 2;
  CHECK_THROWS(io::snapshot_from_json(j));
}

TEST_CASE("problem round trip") {
  auto q = corpus::central_quotient(corpus::d8(), 2);
  auto e = embed::EmbeddingProblem::make(q.map, q.map);
  embed::LiftingData l{{{2, 2}, {4, 4}, {5, 5}}};
  auto j = io::problem_to_json(e, l);
  auto p = io::problem_from_json(j);
  CHECK(p.problem.phi.map == e.phi.map);
  CHECK(p.problem.alpha.map == e.alpha.map);
  REQUIRE(p.lifting);
  CHECK(p.lifting->f == l.f);
  CHECK(j["lifting"]["4"] == 4);
  j["lifting"]["x"] = 1;
  CHECK_THROWS_AS(io::problem_from_json(j), ValidationError);
}

TEST_CASE("presentation round trips") {
  auto p = io::presentation_from_json(json::parse(R"({"Y": ["y"], "X": ["a", "b"]})"));
  CHECK(p.Y == std::vector<std::string>{"y"});
  CHECK(io::presentation_to_json(p) == json::parse(R"({"Y": ["y"], "X": ["a", "b"]})"));
  CHECK_THROWS_AS(io::presentation_from_json(json::parse(R"({"Y": ["a"], "X": ["a"]})")), ValidationError);
  auto im = io::images_from_json(json::parse(R"({"images": {"a": 4, "b": 5}})"));
  CHECK(im.at("b") == 5);
  reconstruct::PresentationOut out{2, stone::FiniteSpace::discrete(3)};
  auto back = io::presentation_out_from_json(io::presentation_out_to_json(out));
  CHECK(back.y_count == 2);
  CHECK(back.x.points() == 3);
}

TEST_CASE("dump format") {
  CHECK(io::dump(json{{"a", 1}}) == "{\n  \"a\": 1\n}\n");
}
