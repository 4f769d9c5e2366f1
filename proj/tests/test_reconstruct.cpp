#include <doctest.h>

#include <random>

#include "corpus.hpp"
#include "qbool/cohomology.hpp"
#include "qbool/error.hpp"
#include "qbool/reconstruct.hpp"

using namespace qbool;
using namespace qbool::reconstruct;
using stone::BooleanRing;

TEST_CASE("connected sum dimensions") {
  auto f2 = BooleanRing::product_of_fields(1);
  CHECK(build_connected_sum(1, BooleanRing::product_of_fields(2), 3).dims() == std::vector<std::size_t>{1, 3, 2, 2});
  CHECK(build_connected_sum(0, f2, 4).dims() == std::vector<std::size_t>{1, 1, 1, 1, 1});
  CHECK(build_connected_sum(2, f2, 2).dims() == std::vector<std::size_t>{1, 3, 1});
  build_connected_sum(2, BooleanRing::product_of_fields(3), 4).validate();
  CHECK_THROWS(build_connected_sum(1, f2, 1));
}

TEST_CASE("graded Boolean algebra on F2 matches H*(Z/2)") {
  coh::Cohomology z2(groups::cyclic(2));
  auto s = coh::snapshot(z2, 4);
  CHECK(s == build_connected_sum(0, BooleanRing::product_of_fields(1), 4));
}

TEST_CASE("decomposition") {
  auto d = decompose(build_connected_sum(1, BooleanRing::product_of_fields(2), 3));
  CHECK(d.d1.dim() == 1);
  CHECK(stone::atoms(d.ring).size() == 2);
  CHECK(d.coset().size() == 2);
  CHECK_FALSE(d.degenerate);

  auto b = decompose(build_connected_sum(0, BooleanRing::product_of_fields(1), 3));
  CHECK(b.d1.dim() == 0);
  CHECK(b.coset() == std::vector<BitVector>{BitVector::from_bits({1})});
}

TEST_CASE("quasi-canonical element satisfies c^2 = c k^n") {
  std::mt19937_64 rng(97);
  for (int i = 0; i < 10; ++i) {
    auto a = build_connected_sum(rng() % 3, BooleanRing::scrambled(1 + rng() % 3, rng), 4).random_automorphic_copy(rng);
    auto d = decompose(a);
    for (const auto& k : d.coset())
      for (std::size_t n = 1; 2 * n <= a.top(); ++n)
        for (std::size_t j = 0; j < a.dim(n); ++j) {
          auto c = BitVector::unit(a.dim(n), j);
          CHECK(a.mul(n, c, n, c) == a.mul(n, c, n, a.power(1, k, n)));
        }
  }
}

TEST_CASE("non connected sums are rejected") {
  // x^2 ≠ 0 and x^3 = 0, with a further class w in degree 3
  std::vector<std::size_t> dims{1, 1, 1, 1};
  graded::GradedAlgebra::Table t(4);
  for (std::size_t i = 0; i <= 3; ++i)
    for (std::size_t j = 0; i + j <= 3; ++j) t[i].push_back({BitVector::from_bits({(i == 0 || j == 0 || i + j <= 2) ? 1 : 0})});
  graded::GradedAlgebra a(dims, t);
  a.validate();
  try {
    decompose(a);
    FAIL("expected not_connected_sum");
  } catch (const DomainError& e) {
    CHECK(e.kind() == "not_connected_sum");
  }
  CHECK(classify(a) == Kind::neither);
}

TEST_CASE("classification") {
  CHECK(classify(build_connected_sum(0, BooleanRing::product_of_fields(3), 3)) == Kind::boolean);
  CHECK(classify(build_connected_sum(2, BooleanRing::product_of_fields(1), 3)) == Kind::quasi_boolean);
  coh::Cohomology z4(corpus::z4());
  CHECK(classify(coh::snapshot(z4, 4)) == Kind::neither);
}

TEST_CASE("presentations") {
  auto p = reconstruct_presentation(build_connected_sum(1, BooleanRing::product_of_fields(2), 3));
  CHECK(p.y_count == 1);
  CHECK(p.x.points() == 2);
  auto z2 = reconstruct_presentation(build_connected_sum(0, BooleanRing::product_of_fields(1), 3));
  CHECK(z2.y_count == 0);
  CHECK(z2.x.points() == 1);
  auto dual = reconstruct_presentation(build_connected_sum(3, BooleanRing::product_of_fields(0), 3));
  CHECK(dual.y_count == 3);
  CHECK(dual.x.points() == 0);
}

TEST_CASE("verification against towers") {
  auto v = verify_reconstruction({0, stone::FiniteSpace::discrete(2)},
                                 build_connected_sum(0, BooleanRing::product_of_fields(2), 3), 3, 3);
  CHECK(v.tower == "dihedral");
  CHECK(v.ok());
  for (std::size_t n = 1; n <= 3; ++n) CHECK(v.degrees[n].stable == 2);

  auto c = verify_reconstruction({1, stone::FiniteSpace::discrete(0)},
                                 build_connected_sum(1, BooleanRing::product_of_fields(0), 3), 4, 3);
  CHECK(c.tower == "cyclic");
  CHECK(c.degrees[1].stable == 1);
  CHECK(c.degrees[2].stable == 0);
  CHECK(c.ok());

  auto e = verify_reconstruction({0, stone::FiniteSpace::discrete(1)},
                                 build_connected_sum(0, BooleanRing::product_of_fields(1), 3), 3, 3);
  CHECK(e.ok());

  auto wrong = verify_reconstruction({0, stone::FiniteSpace::discrete(2)},
                                     build_connected_sum(0, BooleanRing::product_of_fields(1), 3), 3, 3);
  CHECK_FALSE(wrong.ok());

  try {
    verify_reconstruction({1, stone::FiniteSpace::discrete(1)},
                          build_connected_sum(1, BooleanRing::product_of_fields(1), 3), 3, 3);
    FAIL("expected unsupported_shape");
  } catch (const DomainError& err) {
    CHECK(err.kind() == "unsupported_shape");
  }
}

TEST_CASE("round trips") {
  CHECK(roundtrip(1, BooleanRing::product_of_fields(2), 3).ok());
  CHECK(roundtrip(0, BooleanRing::product_of_fields(1), 4).ok());
  std::mt19937_64 rng(101);
  auto r = roundtrip(2, BooleanRing::scrambled(3, rng), 3, &rng);
  CHECK(r.ok());
  CHECK(r.y_count == 2);
  CHECK(r.x_points == 3);
}
