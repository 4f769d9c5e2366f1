#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "corpus.hpp"
#include "oracles.hpp"
#include "qbool/error.hpp"
#include "qbool/groups.hpp"

using namespace qbool;

namespace {

// Order statistics, centre size and number of involution classes.
std::vector<std::size_t> invariants(const FiniteGroup& g) {
  std::vector<std::size_t> out(17, 0);
  for (Elem x = 0; x < g.order(); ++x) ++out[g.element_order(x)];
  out.push_back(groups::center(g).order());
  out.push_back(groups::order_two_classes(g).size());
  out.push_back(groups::conjugacy_classes(g).size());
  return out;
}

}  // namespace

TEST_CASE("corpus groups are valid and pairwise non-isomorphic") {
  auto all = corpus::two_groups();
  CHECK(all.size() == 22);
  std::map<std::size_t, std::set<std::vector<std::size_t>>> seen;
  std::size_t order16 = 0;
  for (const auto& n : all) {
    CHECK(n.group->is_two_group());
    order16 += n.group->order() == 16;
    auto inv = invariants(*n.group);
    if (n.name == "Z4:Z4" || n.name == "Z4xZ4") inv.push_back(n.group->is_abelian());
    CHECK_MESSAGE(seen[n.group->order()].insert(inv).second, n.name);
  }
  CHECK(order16 == 14);
}

TEST_CASE("dihedral and quaternion layouts") {
  auto d = groups::dihedral(4);
  CHECK(d->order() == 8);
  CHECK(d->element_order(1) == 4);
  CHECK(d->element_order(4) == 2);
  CHECK(d->mul(4, 4) == 0);
  CHECK(d->conj(1, 4) == 3);
  auto q = groups::quaternion();
  std::size_t inv = 0;
  for (Elem x = 0; x < 8; ++x) inv += q->element_order(x) == 2;
  CHECK(inv == 1);
}

TEST_CASE("involution classes") {
  auto z2 = groups::involution_data(*groups::cyclic(2));
  CHECK(z2.involutions.size() == 1);
  CHECK(z2.classes.size() == 1);

  auto d = groups::involution_data(*groups::dihedral(4));
  CHECK(d.involutions.size() == 5);
  REQUIRE(d.classes.size() == 3);
  CHECK(d.classes[0].elements == std::vector<Elem>{2});
  CHECK(d.classes[1].elements == std::vector<Elem>{4, 6});
  CHECK(d.classes[2].elements == std::vector<Elem>{5, 7});
  CHECK(d.class_of(6) == 1u);
  CHECK_FALSE(d.class_of(1));

  CHECK(groups::involution_data(*groups::cyclic(3)).involutions.empty());
}

TEST_CASE("sylow transfer in S3") {
  auto s3 = groups::symmetric3();
  auto sign = GroupHom::make(s3, groups::cyclic(2), {0, 1, 1, 1, 0, 0});
  auto t = groups::sylow_transfer(sign, 2);  // (13)
  CHECK(t.sylow.elements == std::vector<Elem>{0, 1});
  CHECK(t.conjugator == 3);  // (23)
  CHECK(t.conjugate == 1);
  CHECK(sign(t.conjugate) == sign(2));
}

TEST_CASE("sylow transfer in a 2-group is trivial") {
  auto d = groups::dihedral(4);
  auto q = corpus::central_quotient(d, 2);
  auto t = groups::sylow_transfer(q.map, 5);
  CHECK(t.sylow.order() == 8);
  CHECK(t.conjugator == 0);
  CHECK(t.conjugate == 5);
}

TEST_CASE("sylow transfer in Z2 x Z3") {
  auto g = groups::cyclic(6);
  auto f = GroupHom::make(g, groups::cyclic(2), {0, 1, 0, 1, 0, 1});
  auto t = groups::sylow_transfer(f, 3);
  CHECK(t.sylow.elements == std::vector<Elem>{0, 3});
  CHECK(t.conjugator == 0);
}

TEST_CASE("abelian 2-torsion quotients") {
  CHECK(groups::abelian_2torsion_quotient(groups::dihedral(4)).rank == 2);
  CHECK(groups::abelian_2torsion_quotient(groups::cyclic(4)).rank == 1);
  CHECK(groups::abelian_2torsion_quotient(groups::elementary_abelian(3)).rank == 3);
  for (const auto& n : corpus::two_groups()) {
    if (n.group->order() > 8) continue;
    std::size_t count = oracle::homs_to_f2(*n.group);
    CHECK((std::size_t{1} << groups::hom_to_f2_dimension(*n.group)) == count);
    CHECK(groups::abelian_2torsion_quotient(n.group).rank == groups::hom_to_f2_dimension(*n.group));
  }
}

TEST_CASE("elementary abelian category") {
  auto q = groups::elementary_abelian_category(*groups::quaternion());
  CHECK(q.rank == 1);
  CHECK(q.objects.size() == 2);
  auto v = groups::elementary_abelian_category(*groups::elementary_abelian(2));
  CHECK(v.rank == 2);
  CHECK(v.objects.size() == 5);  // trivial, three lines, whole group
  CHECK(groups::elementary_abelian_category(*groups::cyclic(2)).rank == 1);
}

TEST_CASE("quotients") {
  auto z4 = groups::cyclic(4);
  CHECK(groups::group_quotient(z4, groups::whole(*z4)).group->order() == 1);
  auto q = groups::group_quotient(groups::dihedral(4), groups::generated(*groups::dihedral(4), {2}));
  CHECK(q.group->order() == 4);
  CHECK(groups::is_elementary_abelian(*q.group));
  CHECK(q.map.is_surjective());
  CHECK(groups::group_quotient(z4, groups::generated(*z4, {2})).group->order() == 2);
}

TEST_CASE("homomorphism validation") {
  auto z4 = groups::cyclic(4);
  auto z2 = groups::cyclic(2);
  CHECK_THROWS_AS(GroupHom::make(z4, z2, {0, 1, 1, 0}), DomainError);
  CHECK(groups::homomorphisms(z4, z2).size() == 2);
  CHECK(groups::homomorphisms(groups::dihedral(4), groups::elementary_abelian(2)).size() == 16);
  for (const auto& h : groups::homomorphisms(groups::quaternion(), groups::dihedral(4)))
    CHECK(oracle::is_hom(*h.source, *h.target, h.map));
}

TEST_CASE("subgroup helpers") {
  auto d = groups::dihedral(4);
  CHECK(groups::center(*d).elements == std::vector<Elem>{0, 2});
  CHECK_FALSE(groups::is_normal(*d, groups::generated(*d, {4})));
  CHECK(groups::normality_witness(*d, groups::generated(*d, {4})));
  CHECK(groups::is_normal(*d, groups::generated(*d, {1})));
  CHECK_THROWS_AS(groups::make_subgroup(*d, {0, 1}), DomainError);
  CHECK(groups::sylow2(*groups::symmetric3()).order() == 2);
  CHECK(groups::sylow2(*corpus::by_name("Z2xS3")).order() == 4);
}

TEST_CASE("table validation rejects bad tables") {
  CHECK_THROWS(groups::make_group({{0, 1}, {1, 1}}));
  CHECK_THROWS(groups::make_group({{1, 0}, {0, 1}}));
}
