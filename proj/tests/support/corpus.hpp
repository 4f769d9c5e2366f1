#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qbool/bundles.hpp"
#include "qbool/embed.hpp"
#include "qbool/groups.hpp"
#include "qbool/stone.hpp"

namespace corpus {

struct Named {
  std::string name;
  qbool::GroupPtr group;
};

/// 2-groups of order at most 16 (all isomorphism types of order ≤ 16).
std::vector<Named> two_groups();
/// Small groups that are not 2-groups.
std::vector<Named> odd_groups();
qbool::GroupPtr by_name(const std::string& name);

qbool::GroupPtr z4();
qbool::GroupPtr d8();

/// Z/4 → Z/2 reduction mod 2.
qbool::GroupHom mod2(const qbool::GroupPtr& z4);
/// B → B/<z> for a central element z of order 2.
qbool::groups::Quotient central_quotient(const qbool::GroupPtr& b, qbool::Elem z);

/// Central extensions with kernel of order 2 over |G| ≤ 16, deterministic.
std::vector<qbool::embed::EmbeddingProblem> central_problems(std::size_t min_count, std::mt19937_64& rng);

/// Principal bundle X × G with randomly relabelled total and base spaces.
qbool::bundles::FiniteBundle random_bundle(const qbool::GroupPtr& g, std::size_t base, std::mt19937_64& rng);
/// Random topology on n points from a random subbasis.
qbool::stone::FiniteSpace random_space(std::size_t n, std::mt19937_64& rng);

}  // namespace corpus
