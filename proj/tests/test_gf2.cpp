#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "qbool/gf2.hpp"

using namespace qbool;
using gf2::BitMatrix;

namespace {

std::vector<std::vector<int>> to_rows(const BitMatrix& m) {
  std::vector<std::vector<int>> r(m.rows(), std::vector<int>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r[i][j] = m.get(i, j);
  return r;
}

BitMatrix random_matrix(std::size_t r, std::size_t c, std::mt19937_64& rng) {
  BitMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) m.row(i) = gf2::random_vector(c, rng);
  return m;
}

}  // namespace

TEST_CASE("bitvector basics") {
  BitVector v(130);
  v.set(0);
  v.set(64);
  v.set(129);
  CHECK(v.count() == 3);
  CHECK(v.lowest_set(1) == 64);
  CHECK(v.lowest_set(130) == BitVector::npos);
  auto w = BitVector::unit(130, 64);
  CHECK(v.dot(w));
  v ^= w;
  CHECK(v.count() == 2);
  CHECK(BitVector::from_bits({1, 0, 1}).to_string() == "101");
  CHECK(BitVector::from_bits({0, 1}) < BitVector::from_bits({1, 0}));
}

TEST_CASE("rank_and_solve examples") {
  auto id = BitMatrix::identity(3);
  auto r = gf2::rank_and_solve(id, BitVector::from_bits({1, 0, 1}));
  CHECK(r.rank == 3);
  REQUIRE(r.solution);
  CHECK(*r.solution == BitVector::from_bits({1, 0, 1}));

  auto par = BitMatrix::from_rows({{1, 1}, {1, 1}});
  auto none = gf2::rank_and_solve(par, BitVector::from_bits({1, 0}));
  CHECK(none.rank == 1);
  CHECK_FALSE(none.solution);
  auto some = gf2::rank_and_solve(par, BitVector::from_bits({1, 1}));
  REQUIRE(some.solution);
  CHECK(*some.solution == BitVector::from_bits({1, 0}));
}

TEST_CASE("kernel examples") {
  CHECK(gf2::kernel_basis(BitMatrix::identity(2)).dim() == 0);
  CHECK(gf2::kernel_basis(BitMatrix(2, 2)) == gf2::Subspace::full(2));
  auto k = gf2::kernel_basis(BitMatrix::from_rows({{1, 1}}));
  REQUIRE(k.dim() == 1);
  CHECK(k.basis()[0] == BitVector::from_bits({1, 1}));
}

TEST_CASE("complement examples") {
  auto u = gf2::Subspace::span(2, {BitVector::from_bits({1, 1})});
  auto c = gf2::complement(u);
  REQUIRE(c.dim() == 1);
  CHECK(c.basis()[0] == BitVector::from_bits({0, 1}));
  CHECK(gf2::complement(gf2::Subspace::full(4)).dim() == 0);
  CHECK(gf2::complement(gf2::Subspace(3)) == gf2::Subspace::full(3));
}

TEST_CASE("random matrices against dense elimination") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t r = 1 + rng() % 12, c = 1 + rng() % 70;
    auto m = random_matrix(r, c, rng);
    const std::size_t rk = oracle::dense_rank(to_rows(m));
    CHECK(gf2::rank(m) == rk);
    auto k = gf2::kernel_basis(m);
    CHECK(k.dim() == c - rk);
    for (const auto& v : k.basis()) CHECK(m.apply(v).none());
    auto x = gf2::random_vector(c, rng);
    auto sol = gf2::rank_and_solve(m, m.apply(x));
    REQUIRE(sol.solution);
    CHECK(m.apply(*sol.solution) == m.apply(x));
  }
}

TEST_CASE("subspace canonical form ignores generator order") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<BitVector> gens;
    for (int i = 0; i < 6; ++i) gens.push_back(gf2::random_vector(20, rng));
    auto a = gf2::Subspace::span(20, gens);
    std::shuffle(gens.begin(), gens.end(), rng);
    gens.push_back(gens[0] ^ gens[1]);
    CHECK(gf2::Subspace::span(20, gens) == a);
    auto c = gf2::complement(a);
    CHECK(c.dim() + a.dim() == 20);
    CHECK(gf2::intersect(a, c).dim() == 0);
    CHECK(gf2::sum(a, c).dim() == 20);
  }
}

TEST_CASE("echelon reduce is a normal form") {
  std::mt19937_64 rng(3);
  gf2::Echelon e(40);
  std::vector<BitVector> gens;
  for (int i = 0; i < 10; ++i) {
    gens.push_back(gf2::random_vector(40, rng));
    e.insert(gens.back());
  }
  for (int i = 0; i < 50; ++i) {
    auto v = gf2::random_vector(40, rng);
    auto shifted = v ^ gens[rng() % gens.size()] ^ gens[rng() % gens.size()];
    CHECK(e.reduce(v) == e.reduce(shifted));
    for (auto p : e.pivots()) CHECK_FALSE(e.reduce(v).get(p));
  }
}

TEST_CASE("tracked echelon records combinations") {
  std::mt19937_64 rng(5);
  gf2::TrackedEchelon t(30, 12);
  std::vector<BitVector> gens;
  for (int i = 0; i < 8; ++i) {
    gens.push_back(gf2::random_vector(30, rng));
    t.insert(gens.back());
  }
  gens.push_back(gens[1] ^ gens[4]);
  auto dep = t.insert(gens.back());
  REQUIRE(dep);
  BitVector sum(30);
  for (auto i : dep->support()) sum ^= gens[i];
  CHECK(sum == gens.back());
  auto target = gens[2] ^ gens[6] ^ BitVector::unit(30, 29);
  auto red = t.reduce(target);
  BitVector acc = red.remainder;
  for (auto i : red.combination.support()) acc ^= gens[i];
  CHECK(acc == target);
}

TEST_CASE("inverse and random invertible") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 20; ++i) {
    auto m = gf2::random_invertible(1 + rng() % 9, rng);
    auto inv = gf2::inverse(m);
    REQUIRE(inv);
    CHECK(m * *inv == BitMatrix::identity(m.rows()));
  }
  CHECK_FALSE(gf2::inverse(BitMatrix::from_rows({{1, 1}, {1, 1}})));
}
