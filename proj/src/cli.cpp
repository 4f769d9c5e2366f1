#include "qbool/cli.hpp"

#include <omp.h>

#include <functional>
#include <iostream>
#include <memory>
#include <random>

#include <CLI11.hpp>

#include "qbool/cohomology.hpp"
#include "qbool/error.hpp"
#include "qbool/io.hpp"

namespace qbool::cli {

namespace {

using io::json;

struct Settings {
  std::size_t nmax = 4;
  std::size_t nilbound = 4;
  std::size_t powbound = 2;
  std::size_t depth = 3;
  std::size_t degree = 1;
  std::size_t top = 2;
  std::size_t d1 = 1;
  std::size_t bdim = 2;
  std::size_t jobs = 1;
  std::uint64_t seed = 1;
  std::string word;
  std::string space;
  std::string out;
  std::vector<std::string> inputs;

  coh::Options coh_options() const {
    coh::Options o;
    o.nmax = nmax;
    return o;
  }
};

json sets_json(const std::vector<stone::FiniteSpace::Set>& sets) {
  json out = json::array();
  for (auto s : sets) out.push_back(stone::set_members(s));
  return out;
}

json bits_list(const std::vector<BitVector>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back(io::bits_to_json(v));
  return out;
}

json matrix_json(const gf2::BitMatrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(io::bits_to_json(m.row(r)));
  return out;
}

// -- stone --------------------------------------------------------------------

json stone_atoms(const Settings& s) {
  const auto r = io::ring_from_json(io::read_file(s.inputs.at(0)));
  const auto a = stone::atoms(r);
  BitVector sum(r.dim());
  for (const auto& x : a) sum ^= x;
  return {{"atoms", bits_list(a)}, {"count", a.size()}, {"sum_is_one", sum == r.one()}};
}

json stone_spec(const Settings& s) {
  const auto sp = stone::spectrum(io::ring_from_json(io::read_file(s.inputs.at(0))));
  json ideals = json::array();
  for (const auto& i : sp.ideals) ideals.push_back(bits_list(i.basis()));
  return {{"space", io::space_to_json(sp.space)}, {"atoms", bits_list(sp.atoms)}, {"ideals", ideals}};
}

json stone_dual(const Settings& s) {
  const auto r = io::ring_from_json(io::read_file(s.inputs.at(0)));
  const auto x = s.space.empty() ? stone::spectrum(r).space : io::space_from_json(io::read_file(s.space));
  const auto c = stone::duality_roundtrip(r, x);
  return {{"ok", c.ok()},
          {"sigma", {{"ring_hom", c.sigma.ring_hom}, {"bijective", c.sigma.bijective}, {"images", sets_json(c.sigma.images)}}},
          {"beta",
           {{"applicable", c.beta.applicable},
            {"map", c.beta.map},
            {"continuous", c.beta.continuous},
            {"bijective", c.beta.bijective},
            {"inverse_continuous", c.beta.inverse_continuous}}},
          {"naturality",
           {{"map_continuous", c.naturality.map_continuous},
            {"functor_is_ring_hom", c.naturality.functor_is_ring_hom},
            {"sigma_square", c.naturality.sigma_square},
            {"beta_square", c.naturality.beta_square}}}};
}

json stone_complete(const Settings& s) {
  const auto c = stone::profinite_completion(io::space_from_json(io::read_file(s.inputs.at(0))));
  return {{"completion", io::space_to_json(c.completion)},
          {"classes", sets_json(c.classes)},
          {"quotient", c.quotient.point_map},
          {"to_spectrum", c.to_spectrum},
          {"matches_spectrum", c.matches_spectrum}};
}

json stone_refine(const Settings& s) {
  const auto x = io::space_from_json(io::read_file(s.inputs.at(0)));
  const json c = io::read_file(s.inputs.at(1));
  if (!c.is_object() || !c.contains("cover") || !c["cover"].is_array()) throw ValidationError("cover file must hold {\"cover\": [[points]...]}");
  std::vector<stone::FiniteSpace::Set> cover;
  for (const auto& u : c["cover"]) {
    std::vector<std::size_t> pts;
    try {
      pts = u.get<std::vector<std::size_t>>();
    } catch (const json::exception& e) {
      throw ValidationError(std::string("cover: ") + e.what());
    }
    for (std::size_t p : pts)
      if (p >= x.points()) throw ValidationError("cover mentions a point out of range");
    cover.push_back(stone::make_set(pts));
  }
  return {{"blocks", sets_json(stone::clopen_partition_refine(x, cover))}};
}

// -- bundles ------------------------------------------------------------------

json bundle_section(const Settings& s) {
  const auto b = io::bundle_from_json(io::read_file(s.inputs.at(0)));
  const auto sec = bundles::find_section(b);
  return {{"section", sec}, {"verified", bundles::is_section(b, sec)}};
}

json bundle_quotient(const Settings& s) {
  const auto b = io::bundle_from_json(io::read_file(s.inputs.at(0)));
  const auto n = io::subgroup_from_json(io::read_file(s.inputs.at(1)), *b.group);
  const auto q = bundles::quotient_bundle(b, n);
  q.bundle.validate();
  return {{"bundle", io::bundle_to_json(q.bundle)},
          {"orbit_map", q.orbit_map},
          {"group_map", q.quotient.map.map},
          {"commutes", q.commutes}};
}

// -- groups -------------------------------------------------------------------

json group_info(const Settings& s) {
  const auto g = io::group_from_json(io::read_file(s.inputs.at(0)));
  json classes = json::array();
  for (const auto& c : groups::conjugacy_classes(*g)) classes.push_back(c.elements);
  json inv = json::array();
  for (const auto& c : groups::involution_data(*g).classes) inv.push_back(c.elements);
  return {{"order", g->order()},
          {"two_group", g->is_two_group()},
          {"abelian", g->is_abelian()},
          {"center", groups::center(*g).elements},
          {"classes", classes},
          {"involution_classes", inv},
          {"generators", groups::generators(*g)},
          {"hom_to_f2_dimension", groups::hom_to_f2_dimension(*g)},
          {"elementary_rank", groups::elementary_abelian_category(*g).rank}};
}

json group_quotient(const Settings& s) {
  const auto g = io::group_from_json(io::read_file(s.inputs.at(0)));
  const auto n = io::subgroup_from_json(io::read_file(s.inputs.at(1)), *g);
  const auto q = groups::group_quotient(g, n);
  return {{"group", io::group_to_json(*q.group)}, {"map", q.map.map}, {"representatives", q.representatives}};
}

json group_sylow(const Settings& s) {
  const auto g = io::group_from_json(io::read_file(s.inputs.at(0)));
  const auto p = groups::sylow2(*g);
  return {{"elements", p.elements}, {"order", p.order()}};
}

// -- words --------------------------------------------------------------------

json word_normalize(const Settings& s) {
  const auto p = io::presentation_from_json(io::read_file(s.inputs.at(0)));
  const auto w = freeprod::normalize(p, freeprod::parse_letters(s.word));
  return {{"word", freeprod::format_word(w)}, {"length", w.size()}, {"reduced", freeprod::is_reduced(p, w)}};
}

json word_eval(const Settings& s) {
  const auto p = io::presentation_from_json(io::read_file(s.inputs.at(0)));
  const auto g = io::group_from_json(io::read_file(s.inputs.at(1)));
  const auto h = freeprod::evaluate_hom(p, g, io::images_from_json(io::read_file(s.inputs.at(2))));
  const auto w = freeprod::normalize(p, freeprod::parse_letters(s.word));
  const Elem v = h(p, w);
  return {{"value", v}, {"label", g->label(v)}, {"image_order", h.image.order()}};
}

// -- cohomology ---------------------------------------------------------------

json coh_basis(const Settings& s) {
  const auto g = io::group_from_json(io::read_file(s.inputs.at(0)));
  coh::Cohomology h(g, s.coh_options());
  return {{"degree", s.degree},
          {"dim", h.dim(s.degree)},
          {"cochain_dim", h.cochain_dim(s.degree)},
          {"basis", bits_list(h.representatives(s.degree).basis())}};
}

json coh_cup(const Settings& s) {
  const auto g = io::group_from_json(io::read_file(s.inputs.at(0)));
  coh::Cohomology h(g, s.coh_options());
  return io::snapshot_to_json(coh::snapshot(h, s.top));
}

json coh_restrict(const Settings& s) {
  const auto f = io::hom_from_json(io::read_file(s.inputs.at(0)));
  coh::Cohomology hs(f.source, s.coh_options()), ht(f.target, s.coh_options());
  return {{"degree", s.degree}, {"matrix", matrix_json(coh::induced_matrix(hs, ht, f, s.degree))}};
}

json coh_quillen(const Settings& s) {
  const auto g = io::group_from_json(io::read_file(s.inputs.at(0)));
  coh::Cohomology h(g, s.coh_options());
  const auto r = coh::quillen_map(h, s.degree, s.nilbound, s.powbound);
  return {{"degree", r.degree},
          {"h_dim", r.h_dim},
          {"limit_dim", r.limit_dim},
          {"image_dim", r.image_dim},
          {"kernel_dim", r.kernel_dim},
          {"map", matrix_json(r.map)},
          {"nil_violations", bits_list(r.nil_violations)},
          {"nil_undecided", bits_list(r.nil_undecided)},
          {"power_violations", bits_list(r.power_violations)},
          {"power_undecided", bits_list(r.power_undecided)},
          {"clean", r.clean()}};
}

json coh_profile(const Settings& s) {
  const auto g = io::group_from_json(io::read_file(s.inputs.at(0)));
  coh::Cohomology h(g, s.coh_options());
  json reps = json::array();
  for (const auto& c : groups::involution_data(*g).classes) reps.push_back(c.representative);
  json prof = json::array();
  for (const auto& c : h.basis(s.degree)) {
    json row = json::array();
    for (bool b : coh::involution_profile(c)) row.push_back(b ? 1 : 0);
    prof.push_back(row);
  }
  return {{"degree", s.degree}, {"class_representatives", reps}, {"profiles", prof}};
}

json coh_tower(const Settings& s) {
  const auto p = io::presentation_from_json(io::read_file(s.inputs.at(0)));
  const auto t = freeprod::quotient_tower(p, s.depth);
  const auto c = coh::tower_colimit(t, s.degree, s.coh_options());
  json degs = json::array();
  for (const auto& d : c.degrees)
    degs.push_back({{"degree", d.degree}, {"stage_dims", d.stage_dims}, {"ranks_to_last", d.ranks_to_last}, {"stable_rank", d.stable_rank}});
  json orders = json::array();
  for (const auto& g : t.groups) orders.push_back(g->order());
  return {{"kind", t.kind}, {"stage_orders", orders}, {"degrees", degs}, {"snapshot", io::snapshot_to_json(c.snapshot)}};
}

// -- embedding problems -------------------------------------------------------

json embed_classify(const Settings& s) {
  const auto p = io::problem_from_json(io::read_file(s.inputs.at(0)));
  const auto c = embed::classify_problem(p.problem);
  json j = {{"real", c.real}, {"two_problem", c.two_problem}, {"central", c.central}, {"kernel_order", c.kernel_order}};
  if (c.non_real_witness) j["non_real_witness"] = *c.non_real_witness;
  return j;
}

json embed_reduce(const Settings& s) {
  const auto p = io::problem_from_json(io::read_file(s.inputs.at(0)));
  const auto r = embed::reduce_to_2_embedding(p.problem);
  return {{"problem", io::problem_to_json(r.problem)}, {"H_inclusion", r.h_inclusion.map}, {"P_inclusion", r.p_inclusion.map}};
}

json embed_obstruct(const Settings& s) {
  const auto p = io::problem_from_json(io::read_file(s.inputs.at(0)));
  coh::Cohomology h(p.problem.G(), s.coh_options());
  const auto o = embed::obstruction_class(h, p.problem, s.seed);
  return {{"zero", o.is_zero()}, {"coords", io::bits_to_json(o.coords)}, {"cocycle", io::bits_to_json(o.cocycle)}};
}

json embed_solve(const Settings& s) {
  const auto p = io::problem_from_json(io::read_file(s.inputs.at(0)));
  const auto r = embed::solve(p.problem, p.lifting, s.coh_options());
  json j = {{"verdict", embed::verdict_name(r.verdict)}, {"steps", r.steps}, {"corrected_steps", r.corrected_steps}};
  if (r.solution) j["solution"] = r.solution->map;
  if (r.obstruction) {
    j["step"] = r.step;
    j["obstruction"] = {{"coords", io::bits_to_json(r.obstruction->coords)}, {"cocycle", io::bits_to_json(r.obstruction->cocycle)}};
  }
  if (r.verdict == embed::Verdict::lift_unmatched) {
    j["step"] = r.step;
    json res = json::array();
    for (bool b : r.residual) res.push_back(b ? 1 : 0);
    j["residual"] = res;
  }
  return j;
}

json embed_liftdata(const Settings& s) {
  const auto p = io::problem_from_json(io::read_file(s.inputs.at(0)));
  return {{"lifting", io::lifting_to_json(embed::make_lifting_data(p.problem))}};
}

// -- reconstruction -----------------------------------------------------------

json reconstruct_decompose(const Settings& s) {
  const auto a = io::snapshot_from_json(io::read_file(s.inputs.at(0)));
  const auto d = reconstruct::decompose(a);
  return {{"d1", bits_list(d.d1.basis())},
          {"d1_dim", d.d1.dim()},
          {"complement", bits_list(d.complement.basis())},
          {"k", io::bits_to_json(d.k)},
          {"coset_size", std::size_t{1} << d.d1.dim()},
          {"degenerate", d.degenerate},
          {"ring", io::ring_to_json(d.ring)}};
}

json reconstruct_classify(const Settings& s) {
  return {{"kind", reconstruct::kind_name(reconstruct::classify(io::snapshot_from_json(io::read_file(s.inputs.at(0)))))}};
}

json reconstruct_run(const Settings& s) {
  const auto a = io::snapshot_from_json(io::read_file(s.inputs.at(0)));
  const auto p = reconstruct::reconstruct_presentation(a);
  json j = {{"presentation", io::presentation_out_to_json(p)}};
  try {
    const auto v = reconstruct::verify_reconstruction(p, a, s.depth, std::min<std::size_t>(a.top(), 3), s.coh_options());
    json degs = json::array();
    for (const auto& d : v.degrees)
      degs.push_back({{"degree", d.degree}, {"expected", d.expected}, {"stable", d.stable}, {"match", d.match}});
    j["verification"] = {{"tower", v.tower}, {"degrees", degs}, {"products_match", v.products_match}, {"ok", v.ok()}};
  } catch (const DomainError& e) {
    j["verification"] = {{"error", e.kind()}, {"message", e.what()}};
  }
  return j;
}

json reconstruct_roundtrip(const Settings& s) {
  std::mt19937_64 rng(s.seed);
  const auto b = stone::BooleanRing::scrambled(s.bdim, rng);
  const auto r = reconstruct::roundtrip(s.d1, b, s.top, &rng);
  return {{"isomorphic", r.isomorphic},
          {"invariants_preserved", r.invariants_preserved},
          {"free_rank", r.y_count},
          {"X_points", r.x_points},
          {"ok", r.ok()}};
}

struct Leaf {
  CLI::App* app;
  std::function<json(const Settings&)> action;
};

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Boolean rings, profinite spaces and mod-2 group cohomology"};
  app.name("qbool");
  app.require_subcommand(1);
  Settings s;
  app.add_option("--nmax", s.nmax, "largest cohomological degree")->check(CLI::Range(1, 8));
  app.add_option("--nilbound", s.nilbound, "nilpotency bound")->check(CLI::Range(1, 64));
  app.add_option("--powbound", s.powbound, "2-power bound")->check(CLI::Range(0, 8));
  app.add_option("--depth,--verify-depth", s.depth, "tower depth")->check(CLI::Range(2, 6));
  app.add_option("--degree", s.degree, "cohomological degree")->check(CLI::Range(0, 8));
  app.add_option("--top", s.top, "top degree of snapshots and connected sums")->check(CLI::Range(0, 8));
  app.add_option("--d1", s.d1, "dual part dimension")->check(CLI::Range(0, 16));
  app.add_option("--bdim", s.bdim, "Boolean ring dimension")->check(CLI::Range(0, 16));
  app.add_option("--seed", s.seed, "random seed");
  app.add_option("--jobs", s.jobs, "worker threads")->check(CLI::Range(1, 256));
  app.add_option("--word", s.word, "word, letters separated by spaces");
  app.add_option("--space", s.space, "space file");
  app.add_option("--out,-o", s.out, "output file");

  std::vector<Leaf> leaves;
  auto group = [&](const std::string& name, const std::string& desc) {
    auto* g = app.add_subcommand(name, desc);
    g->require_subcommand(1);
    g->fallthrough();
    return g;
  };
  auto leaf = [&](CLI::App* parent, const std::string& name, std::size_t files, const std::string& desc,
                  std::function<json(const Settings&)> f) {
    auto* c = parent->add_subcommand(name, desc);
    c->fallthrough();
    if (files > 0) c->add_option("inputs", s.inputs, "input files")->required()->expected(static_cast<int>(files));
    leaves.push_back({c, std::move(f)});
  };

  auto* st = group("stone", "Boolean rings and finite spaces");
  leaf(st, "atoms", 1, "atoms of a ring", stone_atoms);
  leaf(st, "spec", 1, "spectrum of a ring", stone_spec);
  leaf(st, "dual", 1, "duality certificate", stone_dual);
  leaf(st, "complete", 1, "profinite completion of a space", stone_complete);
  leaf(st, "refine", 2, "refine a clopen cover", stone_refine);
  auto* bu = group("bundle", "finite principal bundles");
  leaf(bu, "section", 1, "least-index section", bundle_section);
  leaf(bu, "quotient", 2, "quotient by a normal subgroup", bundle_quotient);
  auto* gr = group("group", "finite groups");
  leaf(gr, "info", 1, "structure summary", group_info);
  leaf(gr, "quotient", 2, "quotient by a normal subgroup", group_quotient);
  leaf(gr, "sylow", 1, "a 2-Sylow subgroup", group_sylow);
  auto* wo = group("word", "words in free products");
  leaf(wo, "normalize", 1, "reduced form", word_normalize);
  leaf(wo, "eval", 3, "evaluate in a group", word_eval);
  auto* co = group("coh", "mod-2 cohomology");
  leaf(co, "basis", 1, "basis of H^n", coh_basis);
  leaf(co, "cup", 1, "ring snapshot up to --top", coh_cup);
  leaf(co, "restrict", 1, "induced map of a homomorphism", coh_restrict);
  leaf(co, "quillen", 1, "restriction to elementary abelian subgroups", coh_quillen);
  leaf(co, "profile", 1, "involution profiles of basis classes", coh_profile);
  leaf(co, "tower", 1, "colimit along a quotient tower", coh_tower);
  auto* em = group("embed", "embedding problems");
  leaf(em, "classify", 1, "realness, 2-problem, centrality", embed_classify);
  leaf(em, "reduce", 1, "reduction to a 2-problem", embed_reduce);
  leaf(em, "obstruct", 1, "obstruction class", embed_obstruct);
  leaf(em, "solve", 1, "solve with lifting data", embed_solve);
  leaf(em, "liftdata", 1, "canonical lifting data", embed_liftdata);
  auto* re = group("reconstruct", "graded algebra analysis");
  leaf(re, "decompose", 1, "connected-sum decomposition", reconstruct_decompose);
  leaf(re, "classify", 1, "boolean, quasi_boolean or neither", reconstruct_classify);
  leaf(re, "run", 1, "presentation and tower verification", reconstruct_run);
  leaf(re, "roundtrip", 0, "build, scramble, decompose, rebuild", reconstruct_roundtrip);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "qbool: " << e.what() << "\n";
    return 2;
  }
  omp_set_num_threads(static_cast<int>(s.jobs));

  const Leaf* chosen = nullptr;
  for (const auto& l : leaves)
    if (l.app->parsed()) chosen = &l;
  if (!chosen) {
    err << "qbool: no command given\n";
    return 2;
  }
  try {
    const json result = chosen->action(s);
    if (s.out.empty())
      out << io::dump(result);
    else
      io::write_file(s.out, result);
    return 0;
  } catch (const ValidationError& e) {
    err << "qbool: invalid input: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    out << io::dump({{"error", e.kind()}, {"message", e.what()}, {"witness", e.witness()}});
    return 1;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"qbool"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace qbool::cli
