#include "qbool/io.hpp"

#include <fstream>
#include <sstream>

#include "qbool/error.hpp"

namespace qbool::io {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object()) throw ValidationError(std::string("expected an object holding \"") + key + "\"");
  auto it = j.find(key);
  if (it == j.end()) throw ValidationError(std::string("missing field \"") + key + "\"");
  return *it;
}

std::size_t nat(const json& j, const std::string& what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) throw ValidationError(what + " must be a non-negative integer");
  return j.get<std::size_t>();
}

std::vector<std::size_t> nat_list(const json& j, const std::string& what) {
  if (!j.is_array()) throw ValidationError(what + " must be an array");
  std::vector<std::size_t> out;
  for (const auto& v : j) out.push_back(nat(v, what + " entry"));
  return out;
}

std::vector<std::string> string_list(const json& j, const std::string& what) {
  if (!j.is_array()) throw ValidationError(what + " must be an array");
  std::vector<std::string> out;
  for (const auto& v : j) {
    if (!v.is_string()) throw ValidationError(what + " entries must be strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

template <class F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw ValidationError(std::string(what) + ": " + e.what());
  }
}

}  // namespace

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

void write_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write " + path);
  out << dump(j);
}

json bits_to_json(const BitVector& v) { return v.to_vector(); }

BitVector bits_from_json(const json& j, std::size_t expected_size, const std::string& what) {
  if (!j.is_array() || j.size() != expected_size)
    throw ValidationError(what + " must be a 0/1 array of length " + std::to_string(expected_size));
  BitVector v(expected_size);
  for (std::size_t i = 0; i < expected_size; ++i) {
    if (!j[i].is_number_integer() || (j[i] != 0 && j[i] != 1)) throw ValidationError(what + " entries must be 0 or 1");
    v.assign(i, j[i] == 1);
  }
  return v;
}

// -- groups -------------------------------------------------------------------

json group_to_json(const FiniteGroup& g) {
  return {{"order", g.order()}, {"table", g.table()}, {"labels", g.labels()}};
}

GroupPtr group_from_json(const json& j) {
  return guarded("group", [&] {
    const std::size_t n = nat(field(j, "order"), "order");
    const json& t = field(j, "table");
    if (!t.is_array() || t.size() != n) throw ValidationError("table must have one row per element");
    std::vector<std::vector<Elem>> table;
    for (const auto& row : t) {
      const auto r = nat_list(row, "table row");
      if (r.size() != n) throw ValidationError("table rows must have length order");
      std::vector<Elem> out;
      for (std::size_t x : r) {
        if (x >= n) throw ValidationError("table entry out of range");
        out.push_back(static_cast<Elem>(x));
      }
      table.push_back(std::move(out));
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) {
      labels = string_list(j["labels"], "labels");
      if (labels.size() != n) throw ValidationError("labels must have one entry per element");
    }
    return groups::make_group(std::move(table), std::move(labels));
  });
}

json hom_to_json(const GroupHom& h) {
  return {{"source", group_to_json(*h.source)}, {"target", group_to_json(*h.target)}, {"map", h.map}};
}

GroupHom map_from_json(const json& j, const GroupPtr& source, const GroupPtr& target) {
  return guarded("map", [&] {
    const json& m = j.is_object() ? field(j, "map") : j;
    const auto v = nat_list(m, "map");
    if (v.size() != source->order()) throw ValidationError("map must have one entry per source element");
    std::vector<Elem> map;
    for (std::size_t x : v) {
      if (x >= target->order()) throw ValidationError("map entry out of range");
      map.push_back(static_cast<Elem>(x));
    }
    return GroupHom::make(source, target, std::move(map));
  });
}

GroupHom hom_from_json(const json& j) {
  return guarded("hom", [&] {
    const auto s = group_from_json(field(j, "source"));
    const auto t = group_from_json(field(j, "target"));
    return map_from_json(field(j, "map"), s, t);
  });
}

json subgroup_to_json(const Subgroup& s) { return {{"elements", s.elements}}; }

Subgroup subgroup_from_json(const json& j, const FiniteGroup& g) {
  return guarded("subgroup", [&] {
    std::vector<Elem> e;
    for (std::size_t x : nat_list(field(j, "elements"), "elements")) {
      if (x >= g.order()) throw ValidationError("subgroup element out of range");
      e.push_back(static_cast<Elem>(x));
    }
    return groups::make_subgroup(g, std::move(e));
  });
}

// -- stone --------------------------------------------------------------------

json ring_to_json(const stone::BooleanRing& r) {
  json mult = json::array();
  for (std::size_t i = 0; i < r.dim(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < r.dim(); ++k) row.push_back(bits_to_json(r.basis_product(i, k)));
    mult.push_back(std::move(row));
  }
  return {{"dim", r.dim()}, {"labels", r.labels()}, {"one", bits_to_json(r.one())}, {"mult", mult}};
}

stone::BooleanRing ring_from_json(const json& j) {
  return guarded("ring", [&] {
    const std::size_t n = nat(field(j, "dim"), "dim");
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = string_list(j["labels"], "labels");
    BitVector one = bits_from_json(field(j, "one"), n, "one");
    const json& m = field(j, "mult");
    if (!m.is_array() || m.size() != n) throw ValidationError("mult must be dim x dim");
    std::vector<std::vector<BitVector>> mult(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (!m[i].is_array() || m[i].size() != n) throw ValidationError("mult must be dim x dim");
      for (std::size_t k = 0; k < n; ++k) mult[i].push_back(bits_from_json(m[i][k], n, "mult entry"));
    }
    return stone::BooleanRing(std::move(labels), std::move(one), std::move(mult));
  });
}

json space_to_json(const stone::FiniteSpace& x) {
  json opens = json::array();
  for (auto s : x.opens()) opens.push_back(stone::set_members(s));
  return {{"points", x.points()}, {"opens", opens}};
}

stone::FiniteSpace space_from_json(const json& j) {
  return guarded("space", [&] {
    const std::size_t n = nat(field(j, "points"), "points");
    if (n > stone::FiniteSpace::max_points) throw ValidationError("too many points");
    const json& o = field(j, "opens");
    if (!o.is_array()) throw ValidationError("opens must be an array");
    std::vector<std::vector<std::size_t>> opens;
    for (const auto& s : o) {
      auto v = nat_list(s, "open set");
      for (std::size_t p : v)
        if (p >= n) throw ValidationError("open set mentions a point out of range");
      opens.push_back(std::move(v));
    }
    return stone::FiniteSpace::from_lists(n, opens);
  });
}

// -- bundles ------------------------------------------------------------------

json bundle_to_json(const bundles::FiniteBundle& b) {
  return {{"group", group_to_json(*b.group)}, {"Y", b.total}, {"X", b.base}, {"proj", b.proj}, {"action", b.action}};
}

bundles::FiniteBundle bundle_from_json(const json& j) {
  return guarded("bundle", [&] {
    bundles::FiniteBundle b;
    b.group = group_from_json(field(j, "group"));
    b.total = nat(field(j, "Y"), "Y");
    b.base = nat(field(j, "X"), "X");
    b.proj = nat_list(field(j, "proj"), "proj");
    if (b.proj.size() != b.total) throw ValidationError("proj must have one entry per point of Y");
    for (std::size_t x : b.proj)
      if (x >= b.base) throw ValidationError("proj entry out of range");
    const json& a = field(j, "action");
    if (!a.is_array() || a.size() != b.group->order()) throw ValidationError("action must have one row per group element");
    for (const auto& row : a) {
      auto r = nat_list(row, "action row");
      if (r.size() != b.total) throw ValidationError("action rows must have one entry per point of Y");
      for (std::size_t y : r)
        if (y >= b.total) throw ValidationError("action entry out of range");
      b.action.push_back(std::move(r));
    }
    b.validate();
    return b;
  });
}

// -- free products ------------------------------------------------------------

json presentation_to_json(const freeprod::Presentation& p) { return {{"Y", p.Y}, {"X", p.X}}; }

freeprod::Presentation presentation_from_json(const json& j) {
  return guarded("presentation", [&] {
    freeprod::Presentation p{string_list(field(j, "Y"), "Y"), string_list(field(j, "X"), "X")};
    p.validate();
    return p;
  });
}

std::map<std::string, Elem> images_from_json(const json& j) {
  return guarded("images", [&] {
    const json& m = field(j, "images");
    if (!m.is_object()) throw ValidationError("images must be an object");
    std::map<std::string, Elem> out;
    for (const auto& [k, v] : m.items()) out[k] = static_cast<Elem>(nat(v, "image"));
    return out;
  });
}

// -- snapshots ----------------------------------------------------------------

json snapshot_to_json(const graded::GradedAlgebra& a) {
  json cup = json::array();
  for (std::size_t i = 0; i <= a.top(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; i + k <= a.top(); ++k) {
      json block = json::array();
      for (const auto& v : a.table()[i][k]) block.push_back(bits_to_json(v));
      row.push_back(std::move(block));
    }
    cup.push_back(std::move(row));
  }
  return {{"dims", a.dims()}, {"cup", cup}};
}

graded::GradedAlgebra snapshot_from_json(const json& j) {
  return guarded("snapshot", [&] {
    const auto dims = nat_list(field(j, "dims"), "dims");
    if (dims.empty() || dims[0] != 1) throw ValidationError("dims must start with 1");
    const std::size_t top = dims.size() - 1;
    const json& c = field(j, "cup");
    if (!c.is_array() || c.size() != top + 1) throw ValidationError("cup must have one row per degree");
    graded::GradedAlgebra::Table t(top + 1);
    for (std::size_t i = 0; i <= top; ++i) {
      if (!c[i].is_array() || c[i].size() != top + 1 - i) throw ValidationError("cup[i] must cover degrees j with i + j <= top");
      for (std::size_t k = 0; i + k <= top; ++k) {
        const json& block = c[i][k];
        if (!block.is_array() || block.size() != dims[i] * dims[k]) throw ValidationError("cup block has wrong size");
        std::vector<BitVector> out;
        for (const auto& v : block) out.push_back(bits_from_json(v, dims[i + k], "product"));
        t[i].push_back(std::move(out));
      }
    }
    graded::GradedAlgebra a(dims, std::move(t));
    a.validate();
    return a;
  });
}

// -- embedding problems -------------------------------------------------------

json lifting_to_json(const embed::LiftingData& l) {
  json f = json::object();
  for (const auto& [x, y] : l.f) f[std::to_string(x)] = y;
  return f;
}

json problem_to_json(const embed::EmbeddingProblem& e, const std::optional<embed::LiftingData>& l) {
  json j = {{"G", group_to_json(*e.G())},
            {"A", group_to_json(*e.A())},
            {"B", group_to_json(*e.B())},
            {"phi", e.phi.map},
            {"alpha", e.alpha.map}};
  if (l) j["lifting"] = lifting_to_json(*l);
  return j;
}

Problem problem_from_json(const json& j) {
  return guarded("problem", [&] {
    const auto g = group_from_json(field(j, "G"));
    const auto a = group_from_json(field(j, "A"));
    const auto b = group_from_json(field(j, "B"));
    Problem p{embed::EmbeddingProblem::make(map_from_json(field(j, "phi"), g, a), map_from_json(field(j, "alpha"), b, a)),
              std::nullopt};
    if (j.contains("lifting") && !j["lifting"].is_null()) {
      const json& l = j["lifting"];
      if (!l.is_object()) throw ValidationError("lifting must be an object");
      embed::LiftingData data;
      for (const auto& [k, v] : l.items()) {
        std::size_t pos = 0;
        unsigned long key = 0;
        try {
          key = std::stoul(k, &pos);
        } catch (const std::exception&) {
          pos = 0;
        }
        if (pos == 0 || pos != k.size() || key >= g->order()) throw ValidationError("lifting key must be an element index of G");
        const std::size_t val = nat(v, "lifting value");
        if (val >= b->order()) throw ValidationError("lifting value out of range");
        data.f[static_cast<Elem>(key)] = static_cast<Elem>(val);
      }
      p.lifting = std::move(data);
    }
    return p;
  });
}

// -- presentations out --------------------------------------------------------

json presentation_out_to_json(const reconstruct::PresentationOut& p) {
  return {{"free_rank", p.y_count}, {"X_points", p.x.points()}};
}

reconstruct::PresentationOut presentation_out_from_json(const json& j) {
  return guarded("presentation", [&] {
    const std::size_t n = nat(field(j, "free_rank"), "free_rank");
    const std::size_t m = nat(field(j, "X_points"), "X_points");
    if (m > stone::FiniteSpace::max_points) throw ValidationError("too many points");
    return reconstruct::PresentationOut{n, stone::FiniteSpace::discrete(m)};
  });
}

}  // namespace qbool::io
