#include <doctest.h>

#include <functional>
#include <random>

#include "corpus.hpp"
#include "oracles.hpp"
#include "qbool/embed.hpp"
#include "qbool/error.hpp"

using namespace qbool;
using embed::EmbeddingProblem;

namespace {

std::string kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const DomainError& e) {
    return e.kind();
  }
  return "";
}

EmbeddingProblem z4_problem() {
  auto z2 = groups::cyclic(2);
  return EmbeddingProblem::make(GroupHom::identity(z2), corpus::mod2(corpus::z4()));
}

EmbeddingProblem split_problem() {
  auto z2 = groups::cyclic(2);
  auto v4 = groups::direct_product(*z2, *z2);
  return EmbeddingProblem::make(GroupHom::identity(z2), GroupHom::make(v4, z2, {0, 0, 1, 1}));
}

EmbeddingProblem sign_problem(const GroupPtr& b, const std::vector<Elem>& sign) {
  auto z2 = groups::cyclic(2);
  return EmbeddingProblem::make(GroupHom::identity(z2), GroupHom::make(b, z2, sign));
}

bool conjugate(const FiniteGroup& g, Elem a, Elem b) {
  for (Elem x = 0; x < g.order(); ++x)
    if (g.conj(a, x) == b) return true;
  return false;
}

// D8 problem over D8 ↠ D8/Z, with B = D8 x Z/2 and α(b, e) = q(b).
EmbeddingProblem d8_twisted() {
  auto d8 = corpus::d8();
  auto q = corpus::central_quotient(d8, 2);
  auto b = groups::direct_product(*d8, *groups::cyclic(2));
  std::vector<Elem> a(16);
  for (Elem x = 0; x < 16; ++x) a[x] = q.map(x / 2);
  return EmbeddingProblem::make(q.map, GroupHom::make(b, q.group, a));
}

}  // namespace

TEST_CASE("problem construction") {
  auto z2 = groups::cyclic(2);
  auto z4 = corpus::z4();
  CHECK(kind_of([&] { EmbeddingProblem::make(GroupHom::identity(z2), GroupHom::identity(z4)); }) == "target_mismatch");
  auto zero = GroupHom::make(z4, z2, {0, 0, 0, 0});
  CHECK(kind_of([&] { EmbeddingProblem::make(GroupHom::identity(z2), zero); }) == "not_surjective");
}

TEST_CASE("classification") {
  auto c = embed::classify_problem(z4_problem());
  CHECK_FALSE(c.real);
  CHECK(c.two_problem);
  CHECK(c.central);
  CHECK(c.kernel_order == 2);
  CHECK(c.non_real_witness == Elem{1});

  auto s = embed::classify_problem(split_problem());
  CHECK(s.real);
  CHECK(s.central);

  auto s3 = embed::classify_problem(sign_problem(groups::symmetric3(), {0, 1, 1, 1, 0, 0}));
  CHECK(s3.real);
  CHECK_FALSE(s3.two_problem);
}

TEST_CASE("Sylow reduction") {
  auto two = embed::reduce_to_2_embedding(split_problem());
  CHECK(two.problem.B()->order() == 4);

  auto s3 = sign_problem(groups::symmetric3(), {0, 1, 1, 1, 0, 0});
  auto r = embed::reduce_to_2_embedding(s3);
  CHECK(r.problem.B()->order() == 2);
  CHECK(r.p_inclusion(1) == 1);
  auto rep = embed::solve(r.problem, std::nullopt);
  REQUIRE(rep.verdict == embed::Verdict::solved);
  CHECK(s3.is_solution(r.lift(*rep.solution)));

  auto z2s3 = groups::direct_product(*groups::cyclic(2), *groups::symmetric3());
  std::vector<Elem> sign(12);
  const std::vector<Elem> s3sign{0, 1, 1, 1, 0, 0};
  for (Elem x = 0; x < 12; ++x) sign[x] = s3sign[x % 6];
  auto big = embed::reduce_to_2_embedding(sign_problem(z2s3, sign));
  CHECK(big.problem.B()->order() == 4);

  CHECK(kind_of([] { embed::reduce_to_2_embedding(z4_problem()); }) == "not_real");
}

TEST_CASE("central filtrations") {
  auto d8 = corpus::d8();
  auto f = embed::central_filtration(*d8, groups::generated(*d8, {1}));
  REQUIRE(f.size() == 3);
  CHECK(f[0].elements == std::vector<Elem>{0});
  CHECK(f[1] == groups::center(*d8));
  CHECK(f[2].order() == 4);

  auto z8 = groups::cyclic(8);
  auto c = embed::central_filtration(*z8, groups::whole(*z8));
  REQUIRE(c.size() == 4);
  CHECK(c[1].elements == std::vector<Elem>{0, 4});
  CHECK(c[2].elements == std::vector<Elem>{0, 2, 4, 6});

  auto two = embed::central_filtration(*d8, groups::center(*d8));
  CHECK(two.size() == 2);
}

TEST_CASE("obstruction classes") {
  auto z2 = groups::cyclic(2);
  coh::Cohomology h(z2);
  CHECK(embed::obstruction_class(h, split_problem()).is_zero());
  CHECK_FALSE(embed::obstruction_class(h, z4_problem()).is_zero());

  auto v4 = corpus::central_quotient(corpus::d8(), 2).group;
  auto q = corpus::central_quotient(corpus::d8(), 2);
  coh::Cohomology hv(v4);
  auto trivial = GroupHom::make(v4, v4, {0, 0, 0, 0});
  CHECK(embed::obstruction_class(hv, EmbeddingProblem::make(trivial, q.map)).is_zero());
  CHECK_FALSE(embed::obstruction_class(hv, EmbeddingProblem::make(GroupHom::identity(v4), q.map)).is_zero());

  // representative independence of the section
  auto e = EmbeddingProblem::make(GroupHom::identity(v4), q.map);
  auto c0 = embed::obstruction_class(hv, e, 1);
  for (std::uint64_t seed = 2; seed < 10; ++seed) CHECK(embed::obstruction_class(hv, e, seed) == c0);
}

TEST_CASE("obstruction agrees with exhaustive search on a sample") {
  std::mt19937_64 rng(83);
  auto problems = corpus::central_problems(20, rng);
  std::size_t zero = 0, nonzero = 0;
  for (std::size_t i = 0; i < problems.size(); i += 3) {
    const auto& e = problems[i];
    if (e.G()->order() > 8) continue;
    coh::Cohomology h(e.G());
    const bool o = !embed::obstruction_class(h, e).is_zero();
    CHECK(o == !oracle::exhaustive_lift(e).has_value());
    (o ? nonzero : zero)++;
  }
  CHECK(zero > 0);
  CHECK(nonzero > 0);
}

TEST_CASE("lifting data") {
  CHECK(kind_of([] { embed::make_lifting_data(z4_problem()); }) == "not_real");
  auto l = embed::make_lifting_data(split_problem());
  REQUIRE(l.f.size() == 1);
  CHECK(l.f.at(1) == 2);  // least-index involution over 1

  auto e = d8_twisted();
  auto a = embed::make_lifting_data(e);
  CHECK(embed::make_lifting_data(e).f == a.f);
  CHECK(kind_of([&] { embed::validate_lifting(e, {{{2, 4}, {4, 9}}}); }) == "inconsistent_lifting");
  CHECK(kind_of([&] { embed::validate_lifting(e, {{{2, 4}, {4, 1}, {5, 10}}}); }) == "inconsistent_lifting");
}

TEST_CASE("solver") {
  auto z = embed::solve(z4_problem(), std::nullopt);
  CHECK(z.verdict == embed::Verdict::obstructed);
  CHECK(z.step == 1);
  REQUIRE(z.obstruction);
  CHECK_FALSE(z.obstruction->is_zero());

  // B = G, α = φ = quotient, identity classes
  auto d8 = corpus::d8();
  auto q = corpus::central_quotient(d8, 2);
  auto e1 = EmbeddingProblem::make(q.map, q.map);
  auto r1 = embed::solve(e1, embed::LiftingData{{{2, 2}, {4, 4}, {5, 5}}});
  REQUIRE(r1.verdict == embed::Verdict::solved);
  CHECK(e1.is_solution(*r1.solution));
  CHECK(r1.corrected_steps.empty());

  auto e2 = d8_twisted();
  const embed::LiftingData l2{{{2, 4}, {4, 9}, {5, 10}}};
  auto r2 = embed::solve(e2, l2);
  REQUIRE(r2.verdict == embed::Verdict::solved);
  CHECK(e2.is_solution(*r2.solution));
  CHECK_FALSE(r2.corrected_steps.empty());
  for (auto [x, y] : l2.f) CHECK(conjugate(*e2.B(), (*r2.solution)(x), y));

  auto r3 = embed::solve(e2, std::nullopt);
  CHECK(r3.verdict == embed::Verdict::lift_unmatched);
}

TEST_CASE("solver verdicts on random split problems match exhaustive search") {
  std::mt19937_64 rng(89);
  auto pool = corpus::two_groups();
  std::size_t solved = 0;
  for (int i = 0; i < 16; ++i) {
    auto g = pool[rng() % 8].group;
    auto a = pool[rng() % 8].group;
    auto b = groups::direct_product(*a, *groups::cyclic(2));
    std::vector<Elem> proj(b->order());
    for (Elem x = 0; x < b->order(); ++x) proj[x] = x / 2;
    auto homs = groups::homomorphisms(g, a, 64);
    auto e = EmbeddingProblem::make(homs[rng() % homs.size()], GroupHom::make(b, a, proj));
    auto l = embed::make_lifting_data(e);
    auto r = embed::solve(e, l);
    CHECK(r.verdict != embed::Verdict::obstructed);
    // every normalized section over φ, keeping homomorphisms that match l
    const std::size_t n = g->order();
    bool exists = false;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (n - 1)) && !exists; ++bits) {
      std::vector<Elem> s(n, 0);
      for (Elem x = 1; x < n; ++x) s[x] = static_cast<Elem>(2 * e.phi(x) + ((bits >> (x - 1)) & 1));
      if (!oracle::is_hom(*g, *b, s)) continue;
      exists = true;
      for (auto [x, y] : l.f) exists = exists && conjugate(*b, s[x], y);
    }
    CHECK(exists == (r.verdict == embed::Verdict::solved));
    if (r.verdict == embed::Verdict::solved) {
      ++solved;
      CHECK(e.is_solution(*r.solution));
      for (auto [x, y] : l.f) CHECK(conjugate(*b, (*r.solution)(x), y));
    }
  }
  CHECK(solved > 0);
}
