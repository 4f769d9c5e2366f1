#pragma once

#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "qbool/bundles.hpp"
#include "qbool/embed.hpp"
#include "qbool/freeprod.hpp"
#include "qbool/graded.hpp"
#include "qbool/groups.hpp"
#include "qbool/reconstruct.hpp"
#include "qbool/stone.hpp"

// JSON file formats. Every *_from_json throws ValidationError on schema
// violations; mathematical checks raise DomainError from the constructors.
namespace qbool::io {

using nlohmann::json;

json read_file(const std::string& path);
void write_file(const std::string& path, const json& j);
/// Two-space indented dump with a trailing newline.
std::string dump(const json& j);

json bits_to_json(const BitVector& v);
BitVector bits_from_json(const json& j, std::size_t expected_size, const std::string& what);

json group_to_json(const FiniteGroup& g);
GroupPtr group_from_json(const json& j);
json hom_to_json(const GroupHom& h);
GroupHom hom_from_json(const json& j);
/// A map array (or {"map": [...]}) between already known groups.
GroupHom map_from_json(const json& j, const GroupPtr& source, const GroupPtr& target);
json subgroup_to_json(const Subgroup& s);
Subgroup subgroup_from_json(const json& j, const FiniteGroup& g);

json ring_to_json(const stone::BooleanRing& r);
stone::BooleanRing ring_from_json(const json& j);
json space_to_json(const stone::FiniteSpace& x);
stone::FiniteSpace space_from_json(const json& j);

json bundle_to_json(const bundles::FiniteBundle& b);
bundles::FiniteBundle bundle_from_json(const json& j);

json presentation_to_json(const freeprod::Presentation& p);
freeprod::Presentation presentation_from_json(const json& j);
std::map<std::string, Elem> images_from_json(const json& j);

/// {"dims": [d0..dN], "cup": cup} with cup[i][j] (i + j ≤ N) listing the
/// products of basis a of degree i and basis b of degree j at a * d_j + b.
json snapshot_to_json(const graded::GradedAlgebra& a);
graded::GradedAlgebra snapshot_from_json(const json& j);

struct Problem {
  embed::EmbeddingProblem problem;
  std::optional<embed::LiftingData> lifting;
};
json problem_to_json(const embed::EmbeddingProblem& e, const std::optional<embed::LiftingData>& l = std::nullopt);
Problem problem_from_json(const json& j);
json lifting_to_json(const embed::LiftingData& l);

json presentation_out_to_json(const reconstruct::PresentationOut& p);
reconstruct::PresentationOut presentation_out_from_json(const json& j);

}  // namespace qbool::io
