#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "qbool/cohomology.hpp"
#include "qbool/groups.hpp"

namespace qbool::embed {

/// phi : G → A and a surjection alpha : B → A.
struct EmbeddingProblem {
  GroupHom phi;
  GroupHom alpha;

  /// Throws DomainError "target_mismatch" or "not_surjective".
  static EmbeddingProblem make(GroupHom phi, GroupHom alpha);
  const GroupPtr& G() const { return phi.source; }
  const GroupPtr& A() const { return phi.target; }
  const GroupPtr& B() const { return alpha.source; }
  /// α ∘ s = φ
  bool is_solution(const GroupHom& s) const;
};

/// E(χ) = (φ ∘ χ, α) for χ : H → G.
EmbeddingProblem pullback(const EmbeddingProblem& e, const GroupHom& chi);

struct Classification {
  bool real = false;
  bool two_problem = false;
  bool central = false;
  std::size_t kernel_order = 0;
  std::optional<Elem> non_real_witness;  // involution of G with no involution above φ(t)
};
Classification classify_problem(const EmbeddingProblem& e);

struct ReducedProblem {
  EmbeddingProblem problem;        // φ' : G → H, α' : P → H
  GroupHom h_inclusion;            // H → A
  GroupHom p_inclusion;            // P → B
  std::vector<groups::SylowTransfer> witnesses;  // one per involution of G with nontrivial image
  /// Composes a solution of the reduced problem into a solution of the original.
  GroupHom lift(const GroupHom& solution) const;
};
/// Throws "not_two_group" or "not_real".
ReducedProblem reduce_to_2_embedding(const EmbeddingProblem& e);

/// 1 = N_0 ⊂ N_1 ⊂ ... ⊂ N_n = K with N_{k+1}/N_k central of order 2 in B/N_k.
std::vector<Subgroup> central_filtration(const FiniteGroup& b, const Subgroup& k);

/// c(x, y) as a normalized 2-cochain for the set section s : G → B over φ.
BitVector obstruction_cocycle(const EmbeddingProblem& e, const std::vector<Elem>& section);
/// s(g) = least-index element of α^-1(φ(g)).
std::vector<Elem> least_section(const EmbeddingProblem& e);
std::vector<Elem> random_section(const EmbeddingProblem& e, std::uint64_t seed);
/// o(E) in H^2(G, F2), cross-checked against a seeded random section.
/// Throws "not_central" or "kernel_not_order_two".
coh::CohomClass obstruction_class(const coh::Cohomology& hg, const EmbeddingProblem& e, std::uint64_t seed = 0x5eed);

/// Class representatives: involution class of G ↦ class of B of elements of
/// order dividing 2.
struct LiftingData {
  std::map<Elem, Elem> f;
};
/// Throws DomainError "inconsistent_lifting" unless α# ∘ f = φ# on X*(G).
/// Returns the data with both sides replaced by least class representatives.
LiftingData validate_lifting(const EmbeddingProblem& e, const LiftingData& l);
/// Least-index involution class of B above each φ#(x), the trivial class
/// only when no involution lies over a trivial image; throws "not_real".
LiftingData make_lifting_data(const EmbeddingProblem& e);

enum class Verdict { solved, obstructed, lift_unmatched };
const char* verdict_name(Verdict v);

struct SolveReport {
  Verdict verdict = Verdict::solved;
  std::optional<GroupHom> solution;
  std::optional<coh::CohomClass> obstruction;
  std::vector<bool> residual;     // over the involution classes of G
  std::size_t step = 0;           // failing step, counted from the top of the filtration
  std::size_t steps = 0;
  std::vector<std::size_t> corrected_steps;  // steps with a non-zero character correction
};
/// Without lifting data the canonical data is used. A non-zero obstruction
/// is reported before the lifting data is consulted. Throws "not_two_group",
/// "inconsistent_lifting" or "not_real".
SolveReport solve(const EmbeddingProblem& e, const std::optional<LiftingData>& l, const coh::Options& opt = {});

}  // namespace qbool::embed
