#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "qbool/groups.hpp"

namespace qbool::freeprod {

/// Generators of F(Y) ∗ (∗_X Z/2): Y free, X involutions.
struct Presentation {
  std::vector<std::string> Y;
  std::vector<std::string> X;

  /// Throws ValidationError on repeated or shared labels.
  void validate() const;
  bool is_free(const std::string& label) const;
  bool is_involution(const std::string& label) const;
  bool contains(const std::string& label) const { return is_free(label) || is_involution(label); }
};

struct Letter {
  std::string label;
  int exponent = 1;  // ±1 for Y-letters, always +1 for X-letters
  bool operator==(const Letter&) const = default;
};
using Word = std::vector<Letter>;

/// Free and involution cancellation with a stack; throws "unknown_label".
Word normalize(const Presentation& p, const std::vector<Letter>& raw);
Word multiply(const Presentation& p, const Word& a, const Word& b);
Word inverse(const Presentation& p, const Word& w);
bool is_reduced(const Presentation& p, const Word& w);
/// Whitespace separated letters; "y^-1" for inverses.
std::vector<Letter> parse_letters(const std::string& text);
std::string format_word(const Word& w);

struct EvaluatedHom {
  GroupPtr target;
  std::vector<Elem> y_images;
  std::vector<Elem> x_images;
  Subgroup image;
  Elem operator()(const Presentation& p, const Word& w) const;
};
/// Throws "not_two_group" or "not_involution" (an X image of order > 2).
EvaluatedHom evaluate_hom(const Presentation& p, const GroupPtr& g, const std::map<std::string, Elem>& images);

/// F2^(Y ⊔ X), generators in the order Y then X.
GroupPtr abelianized_2torsion(const Presentation& p);
/// Parity vector of a word in F2^(Y ⊔ X).
BitVector abelian_image(const Presentation& p, const Word& w);
/// Checks that the abelianised generator images induce a map F2^(Y ⊔ X) → G_*
/// agreeing with G → G_* on every word of `words`.
bool abelianization_factors(const Presentation& p, const EvaluatedHom& h, const std::vector<Word>& words);

struct ClassTrace {
  InvolutionData data;
  std::vector<std::size_t> class_of_x;  // index into data.classes
  bool injective = false;
  std::vector<std::size_t> missed;      // classes of G not hit
};
/// Throws "trivial_image" when an X generator maps to the identity.
ClassTrace involution_class_trace(const Presentation& p, const EvaluatedHom& h);

struct Tower {
  std::string kind;                  // dihedral, cyclic, elementary, product, trivial
  std::vector<GroupPtr> groups;      // stage 0 is the smallest
  std::vector<GroupHom> maps;        // maps[k] : groups[k+1] → groups[k]
  std::vector<EvaluatedHom> homs;    // generator images at each stage
};
/// Curated towers with depth - 1 stages; throws "unsupported_shape".
Tower quotient_tower(const Presentation& p, std::size_t depth);

}  // namespace qbool::freeprod
