#include <doctest.h>

#include <random>
#include <set>

#include "corpus.hpp"
#include "qbool/bundles.hpp"
#include "qbool/error.hpp"

using namespace qbool;
using bundles::FiniteBundle;

namespace {

// Z/(2m) → Z/2 with Z/m acting by +2.
FiniteBundle cyclic_bundle(std::size_t m) {
  FiniteBundle b;
  b.group = groups::cyclic(m);
  b.total = 2 * m;
  b.base = 2;
  for (std::size_t y = 0; y < b.total; ++y) b.proj.push_back(y % 2);
  b.action.assign(m, std::vector<std::size_t>(b.total));
  for (std::size_t g = 0; g < m; ++g)
    for (std::size_t y = 0; y < b.total; ++y) b.action[g][y] = (y + 2 * g) % b.total;
  return b;
}

}  // namespace

TEST_CASE("trivial bundle section") {
  auto b = FiniteBundle::trivial(corpus::d8(), 3);
  b.validate();
  auto s = bundles::find_section(b);
  CHECK(s == std::vector<std::size_t>{0, 8, 16});
  CHECK(bundles::is_section(b, s));
}

TEST_CASE("Z4 over Z2") {
  auto b = cyclic_bundle(2);
  b.validate();
  CHECK(bundles::find_section(b) == std::vector<std::size_t>{0, 1});
}

TEST_CASE("invalid bundles are rejected") {
  auto b = cyclic_bundle(2);
  b.action[1][0] = 0;  // fixed point
  b.action[1][2] = 2;
  CHECK_THROWS_AS(b.validate(), DomainError);

  auto c = cyclic_bundle(2);
  c.proj[2] = 1;
  CHECK_THROWS_AS(c.validate(), DomainError);
}

TEST_CASE("quotient bundles") {
  auto b = cyclic_bundle(4);
  auto g = b.group;
  auto all = bundles::quotient_bundle(b, groups::whole(*g));
  CHECK(all.commutes);
  CHECK(all.bundle.total == 2);
  all.bundle.validate();

  auto none = bundles::quotient_bundle(b, groups::generated(*g, {}));
  CHECK(none.bundle.total == 8);
  CHECK(none.bundle.proj == b.proj);

  auto half = bundles::quotient_bundle(b, groups::generated(*g, {2}));
  half.bundle.validate();
  CHECK(half.commutes);
  CHECK(half.bundle.total == 4);
  CHECK(half.bundle.base == 2);
  CHECK(half.quotient.group->order() == 2);
  // orbits {y, y+4}: same as the Z/4 → Z/2 bundle up to relabelling
  for (std::size_t y = 0; y < 8; ++y) CHECK(half.orbit_map[y] == half.orbit_map[(y + 4) % 8]);
  std::set<std::size_t> orbits(half.orbit_map.begin(), half.orbit_map.end());
  CHECK(orbits.size() == 4);
}

TEST_CASE("random bundles") {
  std::mt19937_64 rng(53);
  auto pool = corpus::two_groups();
  for (auto& n : corpus::odd_groups()) pool.push_back(n);
  for (int i = 0; i < 40; ++i) {
    const auto& g = pool[rng() % pool.size()].group;
    if (g->order() > 8) continue;
    auto b = corpus::random_bundle(g, 1 + rng() % 6, rng);
    b.validate();
    CHECK(bundles::is_section(b, bundles::find_section(b)));
    auto center = groups::center(*g);
    auto q = bundles::quotient_bundle(b, center);
    q.bundle.validate();
    CHECK(q.commutes);
  }
}
