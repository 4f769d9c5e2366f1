#include "corpus.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

using namespace qbool;

namespace corpus {
namespace {

GroupPtr prod(const GroupPtr& a, const GroupPtr& b) { return groups::direct_product(*a, *b); }

// Z/8 ⋊ Z/2 with the generator acting by x ↦ kx.
GroupPtr z8_twist(std::size_t k) {
  auto n = groups::cyclic(8);
  std::vector<Elem> id(8), tw(8);
  for (Elem i = 0; i < 8; ++i) {
    id[i] = i;
    tw[i] = static_cast<Elem>((k * i) % 8);
  }
  return groups::semidirect(*n, *groups::cyclic(2), {id, tw});
}

GroupPtr z4_by_z4() {
  auto n = groups::cyclic(4);
  std::vector<std::vector<Elem>> act(4, std::vector<Elem>(4));
  for (Elem h = 0; h < 4; ++h)
    for (Elem i = 0; i < 4; ++i) act[h][i] = (h % 2) ? static_cast<Elem>((4 - i) % 4) : i;
  return groups::semidirect(*n, *groups::cyclic(4), act);
}

GroupPtr v4_by_z4() {
  auto n = groups::elementary_abelian(2);
  const std::vector<Elem> id{0, 1, 2, 3}, swap{0, 2, 1, 3};
  return groups::semidirect(*n, *groups::cyclic(4), {id, swap, id, swap});
}

// (Z/4 × Z/2) ⋊ Z/2 with (a, b) ↦ (a + 2b, b).
GroupPtr pauli() {
  auto n = prod(groups::cyclic(4), groups::cyclic(2));
  std::vector<Elem> id(8), tw(8);
  for (Elem a = 0; a < 4; ++a)
    for (Elem b = 0; b < 2; ++b) {
      id[a * 2 + b] = a * 2 + b;
      tw[a * 2 + b] = static_cast<Elem>(((a + 2 * b) % 4) * 2 + b);
    }
  return groups::semidirect(*n, *groups::cyclic(2), {id, tw});
}

}  // namespace

std::vector<Named> two_groups() {
  auto c = [](std::size_t n) { return groups::cyclic(n); };
  auto e = [](std::size_t r) { return groups::elementary_abelian(r); };
  return {
      {"Z2", c(2)},
      {"Z4", c(4)},
      {"Z2^2", e(2)},
      {"Z8", c(8)},
      {"Z4xZ2", prod(c(4), c(2))},
      {"Z2^3", e(3)},
      {"D8", groups::dihedral(4)},
      {"Q8", groups::quaternion()},
      {"Z16", c(16)},
      {"Z8xZ2", prod(c(8), c(2))},
      {"Z4xZ4", prod(c(4), c(4))},
      {"Z4xZ2^2", prod(c(4), e(2))},
      {"Z2^4", e(4)},
      {"D16", groups::dihedral(8)},
      {"Q16", groups::generalized_quaternion(4)},
      {"SD16", z8_twist(3)},
      {"M16", z8_twist(5)},
      {"D8xZ2", prod(groups::dihedral(4), c(2))},
      {"Q8xZ2", prod(groups::quaternion(), c(2))},
      {"Z4:Z4", z4_by_z4()},
      {"Z2^2:Z4", v4_by_z4()},
      {"Pauli", pauli()},
  };
}

std::vector<Named> odd_groups() {
  return {
      {"Z3", groups::cyclic(3)},
      {"Z6", groups::cyclic(6)},
      {"S3", groups::symmetric3()},
      {"Z2xS3", prod(groups::cyclic(2), groups::symmetric3())},
  };
}

GroupPtr by_name(const std::string& name) {
  for (const auto& l : {two_groups(), odd_groups()})
    for (const auto& n : l)
      if (n.name == name) return n.group;
  throw std::invalid_argument("unknown corpus group " + name);
}

GroupPtr z4() { return groups::cyclic(4); }
GroupPtr d8() { return groups::dihedral(4); }

GroupHom mod2(const GroupPtr& z) { return GroupHom::make(z, groups::cyclic(2), {0, 1, 0, 1}); }

groups::Quotient central_quotient(const GroupPtr& b, Elem z) {
  return groups::group_quotient(b, groups::generated(*b, {z}));
}

std::vector<embed::EmbeddingProblem> central_problems(std::size_t min_count, std::mt19937_64& rng) {
  std::vector<Named> sources = two_groups();
  for (auto& n : odd_groups()) sources.push_back(n);
  std::vector<embed::EmbeddingProblem> out;
  for (std::size_t round = 0; out.size() < min_count || round == 0; ++round) {
    for (const auto& nb : two_groups()) {
      const auto& b = nb.group;
      for (Elem z : groups::center(*b).elements) {
        if (b->element_order(z) != 2) continue;
        auto q = central_quotient(b, z);
        if (round == 0) out.push_back(embed::EmbeddingProblem::make(GroupHom::identity(q.group), q.map));
        const auto& src = sources[rng() % sources.size()];
        auto homs = groups::homomorphisms(src.group, q.group, 256);
        const auto& phi = homs[rng() % homs.size()];
        out.push_back(embed::EmbeddingProblem::make(phi, q.map));
      }
    }
    if (round > 8) break;
  }
  return out;
}

bundles::FiniteBundle random_bundle(const GroupPtr& g, std::size_t base, std::mt19937_64& rng) {
  const std::size_t n = g->order(), total = base * n;
  std::vector<std::size_t> ys(total), xs(base);
  std::iota(ys.begin(), ys.end(), 0);
  std::iota(xs.begin(), xs.end(), 0);
  std::shuffle(ys.begin(), ys.end(), rng);
  std::shuffle(xs.begin(), xs.end(), rng);
  bundles::FiniteBundle b;
  b.group = g;
  b.total = total;
  b.base = base;
  b.proj.assign(total, 0);
  b.action.assign(n, std::vector<std::size_t>(total));
  for (std::size_t x = 0; x < base; ++x)
    for (Elem a = 0; a < n; ++a) {
      b.proj[ys[x * n + a]] = xs[x];
      for (Elem h = 0; h < n; ++h) b.action[h][ys[x * n + a]] = ys[x * n + g->mul(h, a)];
    }
  return b;
}

stone::FiniteSpace random_space(std::size_t n, std::mt19937_64& rng) {
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  std::vector<std::uint64_t> opens(rng() % 6);
  for (auto& o : opens) o = rng() & full;
  return stone::FiniteSpace(n, opens);
}

}  // namespace corpus
