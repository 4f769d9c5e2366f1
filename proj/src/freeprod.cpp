#include "qbool/freeprod.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "qbool/error.hpp"

namespace qbool::freeprod {

void Presentation::validate() const {
  std::set<std::string> seen;
  for (const auto& l : Y)
    if (!seen.insert(l).second) throw ValidationError("presentation: repeated label " + l);
  for (const auto& l : X)
    if (!seen.insert(l).second) throw ValidationError("presentation: label in both Y and X or repeated: " + l);
}

bool Presentation::is_free(const std::string& label) const { return std::find(Y.begin(), Y.end(), label) != Y.end(); }

bool Presentation::is_involution(const std::string& label) const {
  return std::find(X.begin(), X.end(), label) != X.end();
}

Word normalize(const Presentation& p, const std::vector<Letter>& raw) {
  Word out;
  for (const auto& l : raw) {
    Letter cur = l;
    if (p.is_involution(l.label)) cur.exponent = 1;
    else if (!p.is_free(l.label)) throw DomainError("unknown_label", "letter is not a generator", {{"label", l.label}});
    else if (l.exponent != 1 && l.exponent != -1) throw ValidationError("exponent must be +1 or -1");
    const bool cancels = !out.empty() && out.back().label == cur.label &&
                         (p.is_involution(cur.label) || out.back().exponent == -cur.exponent);
    if (cancels)
      out.pop_back();
    else
      out.push_back(std::move(cur));
  }
  return out;
}

Word multiply(const Presentation& p, const Word& a, const Word& b) {
  Word w = a;
  w.insert(w.end(), b.begin(), b.end());
  return normalize(p, w);
}

Word inverse(const Presentation& p, const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (auto& l : out)
    if (p.is_free(l.label)) l.exponent = -l.exponent;
  return normalize(p, out);
}

bool is_reduced(const Presentation& p, const Word& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i].label != w[i + 1].label) continue;
    if (p.is_involution(w[i].label)) return false;
    if (w[i].exponent == -w[i + 1].exponent) return false;
  }
  return true;
}

std::vector<Letter> parse_letters(const std::string& text) {
  std::vector<Letter> out;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    Letter l;
    const auto caret = tok.find('^');
    l.label = tok.substr(0, caret);
    if (caret != std::string::npos) {
      const std::string e = tok.substr(caret + 1);
      if (e == "-1") l.exponent = -1;
      else if (e == "1" || e == "+1") l.exponent = 1;
      else throw ValidationError("bad exponent in word: " + tok);
    }
    if (l.label.empty()) throw ValidationError("empty letter in word");
    out.push_back(std::move(l));
  }
  return out;
}

std::string format_word(const Word& w) {
  std::string s;
  for (const auto& l : w) {
    if (!s.empty()) s += ' ';
    s += l.label;
    if (l.exponent == -1) s += "^-1";
  }
  return s;
}

// ---------------------------------------------------------------------------

Elem EvaluatedHom::operator()(const Presentation& p, const Word& w) const {
  Elem g = 0;
  for (const auto& l : w) {
    Elem img;
    if (auto it = std::find(p.Y.begin(), p.Y.end(), l.label); it != p.Y.end()) {
      img = y_images[static_cast<std::size_t>(it - p.Y.begin())];
      if (l.exponent == -1) img = target->inv(img);
    } else if (auto jt = std::find(p.X.begin(), p.X.end(), l.label); jt != p.X.end()) {
      img = x_images[static_cast<std::size_t>(jt - p.X.begin())];
    } else {
      throw DomainError("unknown_label", "letter is not a generator", {{"label", l.label}});
    }
    g = target->mul(g, img);
  }
  return g;
}

EvaluatedHom evaluate_hom(const Presentation& p, const GroupPtr& g, const std::map<std::string, Elem>& images) {
  p.validate();
  if (!g->is_two_group()) throw DomainError("not_two_group", "target is not a 2-group", {{"order", g->order()}});
  for (const auto& [label, e] : images) {
    if (!p.contains(label)) throw DomainError("unknown_label", "image given for a non-generator", {{"label", label}});
    if (e >= g->order()) throw ValidationError("image index out of range for " + label);
  }
  auto lookup = [&](const std::string& label) {
    auto it = images.find(label);
    if (it == images.end()) throw ValidationError("no image given for generator " + label);
    return it->second;
  };
  EvaluatedHom h;
  h.target = g;
  for (const auto& y : p.Y) h.y_images.push_back(lookup(y));
  for (const auto& x : p.X) {
    const Elem e = lookup(x);
    if (g->mul(e, e) != 0)
      throw DomainError("not_involution", "image of an involution generator has order > 2", {{"label", x}, {"element", e}});
    h.x_images.push_back(e);
  }
  std::vector<Elem> gens = h.y_images;
  gens.insert(gens.end(), h.x_images.begin(), h.x_images.end());
  h.image = groups::generated(*g, gens);
  return h;
}

GroupPtr abelianized_2torsion(const Presentation& p) {
  p.validate();
  return groups::elementary_abelian(p.Y.size() + p.X.size());
}

BitVector abelian_image(const Presentation& p, const Word& w) {
  BitVector v(p.Y.size() + p.X.size());
  for (const auto& l : w) {
    if (auto it = std::find(p.Y.begin(), p.Y.end(), l.label); it != p.Y.end())
      v.flip(static_cast<std::size_t>(it - p.Y.begin()));
    else if (auto jt = std::find(p.X.begin(), p.X.end(), l.label); jt != p.X.end())
      v.flip(p.Y.size() + static_cast<std::size_t>(jt - p.X.begin()));
    else
      throw DomainError("unknown_label", "letter is not a generator", {{"label", l.label}});
  }
  return v;
}

bool abelianization_factors(const Presentation& p, const EvaluatedHom& h, const std::vector<Word>& words) {
  const groups::AbelianQuotient q = groups::abelian_2torsion_quotient(h.target);
  std::vector<Elem> gen_images;
  for (Elem e : h.y_images) gen_images.push_back(q.map(e));
  for (Elem e : h.x_images) gen_images.push_back(q.map(e));
  for (const auto& w : words) {
    Elem induced = 0;
    for (std::size_t i : abelian_image(p, w).support()) induced = q.group->mul(induced, gen_images[i]);
    if (induced != q.map(h(p, w))) return false;
  }
  return true;
}

ClassTrace involution_class_trace(const Presentation& p, const EvaluatedHom& h) {
  ClassTrace t;
  t.data = groups::involution_data(*h.target);
  for (std::size_t i = 0; i < p.X.size(); ++i) {
    const auto c = t.data.class_of(h.x_images[i]);
    if (!c) throw DomainError("trivial_image", "involution generator maps to the identity", {{"label", p.X[i]}});
    t.class_of_x.push_back(*c);
  }
  std::vector<std::size_t> hits(t.data.classes.size(), 0);
  for (std::size_t c : t.class_of_x) ++hits[c];
  t.injective = std::all_of(hits.begin(), hits.end(), [](std::size_t k) { return k <= 1; });
  for (std::size_t c = 0; c < hits.size(); ++c)
    if (hits[c] == 0) t.missed.push_back(c);
  return t;
}

// ---------------------------------------------------------------------------

namespace {

GroupHom reduction_map(const GroupPtr& big, const GroupPtr& small, const std::vector<Elem>& map) {
  GroupHom f = GroupHom::make(big, small, map);
  if (!f.is_surjective()) throw std::logic_error("quotient_tower: connecting map is not surjective");
  return f;
}

}  // namespace

Tower quotient_tower(const Presentation& p, std::size_t depth) {
  p.validate();
  if (depth < 2) throw ValidationError("tower depth must be at least 2");
  const std::size_t ny = p.Y.size(), nx = p.X.size();
  Tower t;
  std::vector<std::map<std::string, Elem>> images;
  const std::size_t stages = depth - 1;
  if (ny == 0 && nx == 2) {
    t.kind = "dihedral";
    for (std::size_t j = 2; j <= depth; ++j) {
      const std::size_t n = std::size_t{1} << (j - 1);
      t.groups.push_back(groups::dihedral(n));
      images.push_back({{p.X[0], static_cast<Elem>(n)}, {p.X[1], static_cast<Elem>(n + 1)}});
    }
  } else if (ny == 1 && nx == 0) {
    t.kind = "cyclic";
    for (std::size_t j = 1; j <= stages; ++j) {
      t.groups.push_back(groups::cyclic(std::size_t{1} << j));
      images.push_back({{p.Y[0], 1}});
    }
  } else if (ny == 0 && nx == 1) {
    t.kind = "elementary";
    for (std::size_t j = 1; j <= stages; ++j) {
      t.groups.push_back(groups::cyclic(2));
      images.push_back({{p.X[0], 1}});
    }
  } else if (ny == 0 && nx == 0) {
    t.kind = "trivial";
    for (std::size_t j = 1; j <= stages; ++j) {
      t.groups.push_back(groups::trivial());
      images.push_back({});
    }
  } else if (ny == 2 && nx == 0) {
    t.kind = "product";
    for (std::size_t j = 1; j <= stages; ++j) {
      const auto c = groups::cyclic(std::size_t{1} << j);
      t.groups.push_back(groups::direct_product(*c, *c));
      images.push_back({{p.Y[0], static_cast<Elem>(c->order())}, {p.Y[1], 1}});
    }
  } else if (ny == 1 && nx == 1) {
    t.kind = "product";
    for (std::size_t j = 1; j <= stages; ++j) {
      t.groups.push_back(groups::direct_product(*groups::cyclic(std::size_t{1} << j), *groups::cyclic(2)));
      images.push_back({{p.Y[0], 2}, {p.X[0], 1}});
    }
  } else {
    throw DomainError("unsupported_shape", "no curated tower for this presentation", {{"Y", ny}, {"X", nx}});
  }
  for (std::size_t k = 0; k < t.groups.size(); ++k) t.homs.push_back(evaluate_hom(p, t.groups[k], images[k]));
  // connecting maps reduce each coordinate; they send generators to generators
  for (std::size_t k = 0; k + 1 < t.groups.size(); ++k) {
    const auto& big = t.groups[k + 1];
    const auto& small = t.groups[k];
    std::vector<Elem> map(big->order());
    if (t.kind == "dihedral") {
      const std::size_t nb = big->order() / 2, ns = small->order() / 2;
      for (Elem x = 0; x < big->order(); ++x) map[x] = static_cast<Elem>((x >= nb ? ns : 0) + (x % nb) % ns);
    } else if (t.kind == "cyclic") {
      for (Elem x = 0; x < big->order(); ++x) map[x] = static_cast<Elem>(x % small->order());
    } else if (t.kind == "product" && ny == 2) {
      const std::size_t nb = std::size_t{1} << (k + 2), ns = nb / 2;
      for (Elem x = 0; x < big->order(); ++x) map[x] = static_cast<Elem>((x / nb) % ns * ns + (x % nb) % ns);
    } else if (t.kind == "product") {
      for (Elem x = 0; x < big->order(); ++x) map[x] = static_cast<Elem>(((x / 2) % (small->order() / 2)) * 2 + x % 2);
    } else {
      for (Elem x = 0; x < big->order(); ++x) map[x] = x;
    }
    t.maps.push_back(reduction_map(big, small, map));
  }
  for (std::size_t k = 0; k < t.maps.size(); ++k) {
    for (std::size_t i = 0; i < ny; ++i)
      if (t.maps[k](t.homs[k + 1].y_images[i]) != t.homs[k].y_images[i])
        throw std::logic_error("quotient_tower: generator images are not compatible");
    for (std::size_t i = 0; i < nx; ++i)
      if (t.maps[k](t.homs[k + 1].x_images[i]) != t.homs[k].x_images[i])
        throw std::logic_error("quotient_tower: generator images are not compatible");
  }
  return t;
}

}  // namespace qbool::freeprod
