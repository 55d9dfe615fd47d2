// simpdisc: command-line front end.  Exit status 0 on success, 1 when a
// check ran and found a violation, 2 on input, bound or configuration errors.

#include <filesystem>
#include <functional>
#include <iostream>
#include <regex>
#include <sstream>

#include "CLI11.hpp"
#include "simpdisc/io.hpp"
#include "simpdisc/simpdisc.hpp"

using namespace simpdisc;
using io::json;

namespace {

struct Config {
  std::string format = "human";
  std::string mode = "exact";
  double tol = 1e-9;
  std::size_t bound = 0;

  SearchLimits limits() const {
    SearchLimits l;
    if (bound > 0) l.node_budget = bound;
    return l;
  }
  double load_tol() const { return mode == "float" ? tol : 0.0; }
};

Config cfg;

constexpr std::size_t kMaxListed = 20;

// ----- output ---------------------------------------------------------------

void print_human(const json& r) {
  if (r.contains("verdict")) std::cout << "verdict: " << r["verdict"].get<std::string>() << "\n";
  for (auto it = r.begin(); it != r.end(); ++it) {
    if (it.key() == "verdict") continue;
    std::cout << it.key() << ": ";
    if (it->is_string())
      std::cout << it->get<std::string>();
    else
      std::cout << it->dump();
    std::cout << "\n";
  }
}

int emit(const json& r, int code = 0) {
  if (cfg.format == "json")
    std::cout << r.dump(2) << "\n";
  else
    print_human(r);
  return code;
}

// ----- loading --------------------------------------------------------------

SimplicialSet load_sset(const std::string& path, bool check = true) {
  return io::sset_from_json(io::load_json(path), path, check);
}

FiniteCategory load_category(const std::string& arg) {
  if (!std::filesystem::exists(arg))
    if (auto c = catalogue::by_name(arg)) return *c;
  return io::category_from_json(io::load_json(arg), arg);
}

Dag load_dag(const std::string& path) { return io::dag_from_json(io::load_json(path), path); }

Pomdp load_pomdp(const std::string& path) { return io::pomdp_from_json(io::load_json(path), cfg.load_tol(), path); }

std::vector<std::string> split_names(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

delta::ElementaryMap parse_generator(const std::string& s) {
  static const std::regex re("([ds])(\\d+)@(\\d+)");
  std::smatch m;
  if (!std::regex_match(s, m, re)) throw InputError("generator: expected d<i>@<n> or s<j>@<n>, got '" + s + "'");
  const int a = std::stoi(m[2]), n = std::stoi(m[3]);
  return m[1] == "d" ? delta::coface(a, n) : delta::codegeneracy(a, n);
}

// ----- shared reports -------------------------------------------------------

json counts_json(const SimplicialSet& x) {
  json c = json::array();
  for (int n = 0; n <= x.trunc_dim(); ++n) c.push_back(x.count(n));
  return c;
}

json nondegenerate_json(const SimplicialSet& x) {
  json c = json::array();
  for (int n = 0; n <= x.trunc_dim(); ++n) c.push_back(x.nondegenerate(n).size());
  return c;
}

json subset_report(const SimplicialSubset& s) {
  json members = json::array();
  for (int n = 0; n <= s.ambient().trunc_dim(); ++n) {
    json row = json::array();
    for (int x : s.members(n))
      if (!s.ambient().is_degenerate(n, x)) row.push_back(s.ambient().label(n, x));
    members.push_back(row);
  }
  json counts = json::array(), amb = json::array();
  for (int n = 0; n <= s.ambient().trunc_dim(); ++n) {
    counts.push_back(s.count(n));
    amb.push_back(s.ambient().count(n));
  }
  const bool closed = is_closed_subset(s);
  json r = {{"counts", counts}, {"ambient_counts", amb}, {"nondegenerate_members", members}, {"closed", closed}};
  if (closed) r["sset"] = io::to_json(*inclusion(s).sub);
  return r;
}

json homology_json(const std::vector<HomologyGroup>& hs) {
  json out = json::array();
  for (const auto& h : hs) {
    json tor = json::array();
    for (const auto& t : h.torsion) tor.push_back(t.str());
    out.push_back({{"dim", h.dim},
                   {"group", to_string(h)},
                   {"free_rank", h.free_rank},
                   {"torsion", tor},
                   {"needs_higher_truncation", h.truncation_caveat}});
  }
  return out;
}

json witness_json(const HornWitness& w) {
  json o = json::object();
  for (const auto& [a, b] : w.images) o[a] = b;
  return o;
}

json violations_json(const HomReport& r) {
  json v = json::array();
  for (std::size_t i = 0; i < r.violations.size() && i < kMaxListed; ++i) {
    const auto& x = r.violations[i];
    v.push_back({{"kind", x.kind}, {"s", x.s}, {"a", x.a}, {"target", x.target}, {"lhs", x.lhs}, {"rhs", x.rhs}});
  }
  return v;
}

template <class Q>
json value_json(const Q& q) {
  if constexpr (is_exact_v<Q>)
    return io::rational_json(q);
  else
    return q;
}

// ----- delta ------------------------------------------------------------------

int delta_compose(const std::string& gs, const std::string& fs) {
  const auto g = delta::parse_monotone_map(gs), f = delta::parse_monotone_map(fs);
  const auto gf = delta::compose(g, f);
  return emit({{"g", delta::to_string(g)}, {"f", delta::to_string(f)}, {"composite", delta::to_string(gf)}});
}

int delta_decompose(const std::string& fs) {
  const auto f = delta::parse_monotone_map(fs);
  const auto seq = delta::decompose(f);
  json gens = json::array();
  for (const auto& e : seq) gens.push_back(delta::to_string(e));
  const bool ok = delta::recompose(seq, f.dom_size()) == f;
  return emit({{"map", delta::to_string(f)}, {"generators", gens}, {"recomposes", ok}}, ok ? 0 : 1);
}

int delta_verify(int max_n) {
  const auto rep = delta::verify_simplicial_relations(max_n);
  // round-trip every monotone map between ordinals up to [max_n - 1]
  std::size_t maps = 0, bad = 0;
  for (int m = 1; m <= max_n; ++m)
    for (int n = 1; n <= max_n; ++n)
      for (const auto& f : delta::monotone_maps(m, n)) {
        ++maps;
        if (!(delta::recompose(delta::decompose(f), m) == f)) ++bad;
      }
  json v = json::array();
  for (std::size_t i = 0; i < rep.violations.size() && i < kMaxListed; ++i) {
    const auto& x = rep.violations[i];
    v.push_back({{"family", x.family}, {"i", x.i}, {"j", x.j}, {"n", x.n}, {"lhs", x.lhs}, {"rhs", x.rhs}});
  }
  const bool ok = rep.ok() && bad == 0;
  return emit({{"verdict", ok ? "ok" : "violations found"},
               {"max_n", max_n},
               {"relations_checked", rep.checked},
               {"relation_violations", rep.violations.size()},
               {"violations", v},
               {"maps_round_tripped", maps},
               {"round_trip_failures", bad}},
              ok ? 0 : 1);
}

int delta_as_map(const std::string& gen) {
  const auto e = parse_generator(gen);
  const auto f = delta::as_map(e);
  return emit({{"generator", delta::to_string(e)},
               {"map", delta::to_string(f)},
               {"injective", f.is_injective()},
               {"surjective", f.is_surjective()}});
}

// ----- sset -------------------------------------------------------------------

int sset_simplex(int n, int trunc) {
  const auto x = standard_simplex(n, trunc);
  return emit({{"counts", counts_json(x)}, {"nondegenerate_counts", nondegenerate_json(x)}, {"sset", io::to_json(x)}});
}

int sset_check(const std::string& path) {
  const auto x = load_sset(path, false);
  const auto bad = check_identities(x);
  json v = json::array();
  for (std::size_t i = 0; i < bad.size() && i < kMaxListed; ++i)
    v.push_back({{"relation", bad[i].relation}, {"dim", bad[i].dim}, {"simplex", bad[i].index}, {"i", bad[i].i},
                 {"j", bad[i].j}});
  return emit({{"verdict", bad.empty() ? "simplicial identities hold" : "simplicial identities fail"},
               {"counts", counts_json(x)},
               {"nondegenerate_counts", nondegenerate_json(x)},
               {"identity_violations", bad.size()},
               {"violations", v}},
              bad.empty() ? 0 : 1);
}

// ----- cat --------------------------------------------------------------------

int cat_catalogue() {
  json cats = json::array();
  for (const auto& [name, c] : catalogue::all())
    cats.push_back({{"name", name}, {"objects", c.object_count()}, {"morphisms", c.morphism_count()}});
  return emit({{"categories", cats}});
}

int cat_check(const std::string& arg) {
  const auto c = load_category(arg);
  return emit({{"verdict", "valid category"},
               {"objects", c.object_count()},
               {"morphisms", c.morphism_count()},
               {"category", io::to_json(c)}});
}

int cat_nerve(const std::string& arg, int trunc) {
  const auto x = nerve(load_category(arg), trunc);
  return emit({{"counts", counts_json(x)}, {"nondegenerate_counts", nondegenerate_json(x)}, {"sset", io::to_json(x)}});
}

int cat_ho(const std::string& path) {
  const auto c = homotopy_category(load_sset(path));
  return emit({{"objects", c.object_count()}, {"morphisms", c.morphism_count()}, {"category", io::to_json(c)}});
}

int cat_faithful(const std::string& a, const std::string& b, int trunc) {
  const auto c = load_category(a), d = load_category(b);
  const auto r = cfg.bound > 0 ? nerve_hom_bijection_check(c, d, trunc, cfg.bound) : nerve_hom_bijection_check(c, d, trunc);
  return emit({{"verdict", r.bijection() ? "bijection" : "not a bijection"},
               {"trunc", trunc},
               {"functors", r.functors},
               {"simplicial_maps", r.simplicial_maps},
               {"images_are_maps", r.images_are_maps},
               {"injective", r.injective},
               {"surjective", r.surjective}},
              r.bijection() ? 0 : 1);
}

// ----- lift -------------------------------------------------------------------

int lift_classify(const std::string& path, int max_n) {
  const auto x = load_sset(path);
  const auto c = classify(x, max_n, cfg.limits());
  json horns = json::array();
  for (const auto& st : c.horns) {
    json h = {{"n", st.n},
              {"k", st.k},
              {"inner", st.inner()},
              {"horn_maps", st.horn_maps},
              {"unfillable", st.unfillable},
              {"unique_fill", st.unique_fill},
              {"multiple_fill", st.multiple_fill}};
    if (st.unfillable_witness) h["unfillable_witness"] = witness_json(*st.unfillable_witness);
    if (st.multiple_witness) h["multiple_witness"] = witness_json(*st.multiple_witness);
    horns.push_back(h);
  }
  return emit({{"max_n", max_n},
               {"kan", c.kan},
               {"quasicategory", c.quasicategory},
               {"nerve_like", c.nerve_like},
               {"horns", horns}});
}

int lift_fill(const std::string& target_path, const std::string& map_path, int n, int k) {
  const auto target = share(load_sset(target_path));
  const auto m = io::horn_map_from_json(io::load_json(map_path), n, k, target, map_path);
  const auto sols = fill_horn({n, k, target, m.assignment()}, cfg.limits());
  json out = json::array();
  for (std::size_t i = 0; i < sols.size() && i < kMaxListed; ++i) {
    json o = json::object();
    const auto& src = sols[i].source();
    for (int d = 0; d <= src.trunc_dim(); ++d)
      for (int x : src.nondegenerate(d)) o[src.label(d, x)] = target->label(d, sols[i](d, x));
    out.push_back(o);
  }
  return emit({{"n", n}, {"k", k}, {"fillers", sols.size()}, {"solutions", out}});
}

// ----- causal -----------------------------------------------------------------

int causal_imset(const std::string& path) {
  const auto u = standard_imset(load_dag(path));
  return emit({{"imset", io::to_json(u)}, {"text", to_string(u)}});
}

int causal_equiv(const std::string& a, const std::string& b) {
  const auto g = load_dag(a), h = load_dag(b);
  const bool eq = markov_equivalent(g, h);
  return emit({{"verdict", eq ? "equivalent" : "not equivalent"},
               {"imset_a", to_string(standard_imset(g))},
               {"imset_b", to_string(standard_imset(h))},
               {"same_pattern", skeleton_key(g) == skeleton_key(h)}},
              eq ? 0 : 1);
}

int causal_classes(int n) {
  const auto r = equivalence_classes(n);
  json w = json::array();
  for (const auto& [i, j] : r.disagreement_witnesses) w.push_back({i, j});
  return emit({{"verdict", r.disagreements == 0 ? "agrees with the pattern oracle" : "disagrees with the pattern oracle"},
               {"n_vars", n},
               {"dags", r.dag_count},
               {"classes", r.class_count},
               {"oracle_classes", r.oracle_class_count},
               {"class_sizes", r.class_sizes},
               {"disagreements", r.disagreements},
               {"disagreement_witnesses", w}},
              r.disagreements == 0 ? 0 : 1);
}

int causal_dsep(const std::string& path, const std::string& x, const std::string& y, const std::string& z) {
  const auto g = load_dag(path);
  const Mask mx = g.mask_of(split_names(x)), my = g.mask_of(split_names(y)), mz = g.mask_of(split_names(z));
  const bool sep = d_separated(g, mx, my, mz);
  return emit({{"x", mask_name(mx, g.vars())},
               {"y", mask_name(my, g.vars())},
               {"z", mask_name(mz, g.vars())},
               {"separated", sep}});
}

int causal_fill(const std::string& path) {
  const auto doc = io::causal_fill_from_json(io::load_json(path), path);
  const auto fs = causal_fillers(doc.horn, doc.ci);
  json out = json::array();
  for (const auto& g : fs) out.push_back(io::to_json(g));
  return emit({{"n", doc.horn.n}, {"k", doc.horn.k}, {"fillers", fs.size()}, {"dags", out}});
}

int causal_separoid(const std::string& path, bool strong) {
  const auto j = io::load_json(path);
  const auto r = j.contains("edges") ? dsep_relation(io::dag_from_json(j, path)) : io::relation_from_json(j, path);
  const auto rep = check_separoid(r, strong);
  json ax = json::array();
  for (const auto& a : rep.axioms) {
    json w = json::array();
    for (Mask m : a.witness) w.push_back(mask_name(m, r.vars()));
    ax.push_back({{"axiom", a.axiom}, {"holds", a.holds}, {"checked", a.checked}, {"witness", w}});
  }
  return emit({{"verdict", rep.ok() ? "separoid" : "axiom violated"},
               {"strong", strong},
               {"carrier", r.carrier().size()},
               {"triples", r.triples().size()},
               {"axioms", ax}},
              rep.ok() ? 0 : 1);
}

// ----- psr --------------------------------------------------------------------

template <class Q>
int psr_sdm_t(const Pomdp& m, int max_len) {
  const auto s = build_sdm<Q>(m, max_len);
  json hs = json::array(), ts = json::array(), vals = json::array();
  for (const auto& h : s.histories) hs.push_back(to_string(h, m));
  for (const auto& t : s.tests) ts.push_back(to_string(t, m));
  for (std::size_t r = 0; r < s.values.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < s.values.cols(); ++c) row.push_back(value_json(s.values(r, c)));
    vals.push_back(row);
  }
  IncrementalBasis<Q> basis(s.values.rows(), cfg.tol);
  for (std::size_t c = 0; c < s.values.cols(); ++c) basis.add(s.values.col(c));
  return emit({{"mode", cfg.mode}, {"histories", hs}, {"tests", ts}, {"rank", basis.rank()}, {"values", vals}});
}

template <class Q>
int psr_discover_t(const Pomdp& m, int max_len) {
  const auto s = build_sdm<Q>(m, max_len);
  const auto model = discover_core_tests(s, cfg.tol);
  json core = json::array();
  for (const auto& q : model.core_tests) core.push_back(to_string(q, m));
  json r = {{"verdict", "core tests reproduce every entry"},
            {"mode", cfg.mode},
            {"max_len", max_len},
            {"core_tests", core},
            {"core_count", model.size()},
            {"latent_states", m.n_states()},
            {"rows", s.values.rows()},
            {"columns", s.values.cols()}};
  if (!is_exact_v<Q>) r["max_abs_error"] = model.max_abs_error;
  return emit(r);
}

int psr_sdm(const std::string& path, int max_len) {
  const auto m = load_pomdp(path);
  return cfg.mode == "float" ? psr_sdm_t<double>(m, max_len) : psr_sdm_t<Rational>(m, max_len);
}

int psr_discover(const std::string& path, int max_len) {
  const auto m = load_pomdp(path);
  return cfg.mode == "float" ? psr_discover_t<double>(m, max_len) : psr_discover_t<Rational>(m, max_len);
}

int psr_check_hom(const std::string& src_path, const std::string& dst_path, const std::string& map_path) {
  const auto sj = io::load_json(src_path), dj = io::load_json(dst_path), mj = io::load_json(map_path);
  if (sj.contains("P")) {
    const auto src = io::mdp_from_json(sj, cfg.load_tol(), src_path);
    const auto dst = io::mdp_from_json(dj, cfg.load_tol(), dst_path);
    const auto h = io::mdp_hom_from_json(mj, src, dst, map_path);
    const auto rep = check_mdp_homomorphism(src, dst, h);
    return emit({{"verdict", rep.ok() ? "homomorphism" : "not a homomorphism"},
                 {"kind", "mdp"},
                 {"checked", rep.checked},
                 {"violation_count", rep.violations.size()},
                 {"violations", violations_json(rep)}},
                rep.ok() ? 0 : 1);
  }
  const auto src = io::pomdp_from_json(sj, cfg.load_tol(), src_path);
  const auto dst = io::pomdp_from_json(dj, cfg.load_tol(), dst_path);
  const auto spec = io::psr_hom_from_json(mj, src, dst, map_path);
  const auto ds = psr_dynamics(src, discover_core_tests(build_sdm(src, spec.max_len)).core_tests, spec.depth);
  const auto dd = psr_dynamics(dst, discover_core_tests(build_sdm(dst, spec.max_len)).core_tests, spec.depth);
  const auto vm = induce_vector_map(src, ds, dst, dd, spec.action_map, spec.obs_map);
  std::vector<std::vector<int>> am(ds.vectors.size(), spec.action_map);
  const auto rep = check_psr_homomorphism(ds, dd, vm, am);
  return emit({{"verdict", rep.ok() ? "homomorphism" : "not a homomorphism"},
               {"kind", "psr"},
               {"depth", rep.depth},
               {"source_vectors", ds.vectors.size()},
               {"target_vectors", dd.vectors.size()},
               {"vector_map", vm},
               {"checked", rep.checked},
               {"violation_count", rep.violations.size()},
               {"violations", violations_json(rep)}},
              rep.ok() ? 0 : 1);
}

int psr_nerve_cmd(const std::string& path, int max_len, int trunc) {
  const auto m = load_pomdp(path);
  const auto pn = psr_nerve(m, max_len, trunc);
  json hs = json::array(), mor = json::array();
  for (const auto& h : pn.histories) hs.push_back(to_string(h, m));
  for (const auto& f : pn.category.morphisms())
    if (f.dom != f.cod) mor.push_back({{"from", pn.category.object_name(f.dom)}, {"to", pn.category.object_name(f.cod)}, {"label", f.name}});
  return emit({{"histories", hs},
               {"arrows", mor},
               {"counts", counts_json(pn.nerve.sset)},
               {"nondegenerate_counts", nondegenerate_json(pn.nerve.sset)},
               {"sset", io::to_json(pn.nerve.sset)}});
}

// ----- hom --------------------------------------------------------------------

std::vector<HomologyGroup> groups(const ChainComplex& cc, int dim) {
  if (dim >= 0) return {homology(cc, dim)};
  return homology_all(cc);
}

int hom_compute(const std::string& path, int dim) {
  const auto x = load_sset(path);
  const auto cc = chain_complex(x);
  return emit({{"trunc_dim", x.trunc_dim()}, {"boundary_squared_zero", boundary_squares_to_zero(cc)},
               {"homology", homology_json(groups(cc, dim))}});
}

// dimensions below trunc - 1 only: higher groups of a classifying space need
// simplices above the truncation
int hom_nerve(const std::string& arg, int trunc, int dim) {
  const auto c = load_category(arg);
  std::vector<HomologyGroup> hs;
  if (dim >= 0)
    hs.push_back(classifying_space_homology(c, trunc, dim));
  else
    for (int d = 0; d + 1 < trunc; ++d) hs.push_back(classifying_space_homology(c, trunc, d));
  return emit({{"trunc", trunc}, {"homology", homology_json(hs)}});
}

int hom_imset(int n, int dim, const std::string& reading) {
  const auto rd = reading == "discrete" ? ImsetReading::discrete : ImsetReading::order_complex;
  std::vector<HomologyGroup> hs;
  if (dim >= 0)
    hs.push_back(imset_poset_homology(n, dim, rd));
  else
    for (int d = 0; d <= 2; ++d) hs.push_back(imset_poset_homology(n, d, rd));
  return emit({{"n_vars", n}, {"reading", reading}, {"homology", homology_json(hs)}});
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"simpdisc: simplicial structure discovery"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"human", "json"}));
  app.add_option("--mode", cfg.mode, "Numeric mode for PSR commands")->check(CLI::IsMember({"exact", "float"}));
  app.add_option("--tol", cfg.tol, "Tolerance in float mode")->check(CLI::PositiveNumber);
  app.add_option("--bound", cfg.bound, "Search node budget")->check(CLI::PositiveNumber);

  std::function<int()> run;
  std::string a1, a2, a3;
  int n = 0, k = 0, trunc = 2, max_n = 2, max_len = 2, dim = -1;
  std::string x, y, z, reading = "order";
  bool strong = false;

  auto group = [&](const char* name, const char* desc) {
    auto* g = app.add_subcommand(name, desc);
    g->require_subcommand(1);
    return g;
  };
  auto verb = [&](CLI::App* g, const char* name, const char* desc, std::function<int()> f) {
    auto* s = g->add_subcommand(name, desc);
    s->callback([&run, f] { run = f; });
    return s;
  };
  auto pos = [](CLI::App* s, const char* name, std::string& v) { s->add_option(name, v)->required(); };
  auto positive = [](CLI::App* s, const char* name, int& v, bool required) {
    auto* o = s->add_option(name, v)->check(CLI::PositiveNumber);
    if (required) o->required();
  };

  auto* d = group("delta", "Monotone maps and the simplicial relations");
  auto* s = verb(d, "compose", "g∘f of maps in 'm n : v0 .. vm' form", [&] { return delta_compose(a1, a2); });
  pos(s, "g", a1);
  pos(s, "f", a2);
  s = verb(d, "decompose", "Epi-mono factorization into generators", [&] { return delta_decompose(a1); });
  pos(s, "map", a1);
  s = verb(d, "verify", "Check the simplicial relations up to [max-n]", [&] { return delta_verify(max_n); });
  max_n = 6;
  positive(s, "--max-n", max_n, false);
  s = verb(d, "as-map", "Expand a generator such as d1@2 or s0@3", [&] { return delta_as_map(a1); });
  pos(s, "generator", a1);

  auto* ss = group("sset", "Finite truncated simplicial sets");
  s = verb(ss, "simplex", "The standard n-simplex", [&] { return sset_simplex(n, trunc); });
  s->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);
  positive(s, "--trunc", trunc, true);
  s = verb(ss, "boundary", "The boundary of the n-simplex", [&] { return emit(subset_report(boundary(n, trunc))); });
  positive(s, "--n", n, true);
  positive(s, "--trunc", trunc, true);
  s = verb(ss, "horn", "The horn missing the face opposite k", [&] { return emit(subset_report(horn(n, k, trunc))); });
  positive(s, "--n", n, true);
  s->add_option("--k", k)->required()->check(CLI::NonNegativeNumber);
  positive(s, "--trunc", trunc, true);
  s = verb(ss, "check", "Check the simplicial identities of a document", [&] { return sset_check(a1); });
  pos(s, "file", a1);

  auto* c = group("cat", "Finite categories and nerves");
  verb(c, "catalogue", "List the built-in categories", [&] { return cat_catalogue(); });
  s = verb(c, "check", "Validate a category document", [&] { return cat_check(a1); });
  pos(s, "category", a1);
  s = verb(c, "nerve", "Truncated nerve of a category", [&] { return cat_nerve(a1, trunc); });
  pos(s, "category", a1);
  positive(s, "--trunc", trunc, false);
  s = verb(c, "ho", "Homotopy category of a simplicial set", [&] { return cat_ho(a1); });
  pos(s, "file", a1);
  s = verb(c, "faithful", "Functors C -> D versus maps N(C) -> N(D)", [&] { return cat_faithful(a1, a2, trunc); });
  pos(s, "source", a1);
  pos(s, "target", a2);
  positive(s, "--trunc", trunc, false);

  auto* l = group("lift", "Horn filling and lifting problems");
  s = verb(l, "classify", "Kan, quasicategory and unique-filler checks", [&] { return lift_classify(a1, max_n); });
  pos(s, "file", a1);
  positive(s, "--max-n", max_n, false);
  s = verb(l, "fill", "All fillers of one horn map", [&] { return lift_fill(a1, a2, n, k); });
  s->add_option("--target", a1)->required();
  pos(s, "map", a2);
  positive(s, "--n", n, true);
  s->add_option("--k", k)->required()->check(CLI::NonNegativeNumber);

  auto* ca = group("causal", "DAG models, imsets and separoids");
  s = verb(ca, "imset", "Standard imset of a DAG", [&] { return causal_imset(a1); });
  pos(s, "dag", a1);
  s = verb(ca, "equiv", "Markov equivalence by imset equality", [&] { return causal_equiv(a1, a2); });
  pos(s, "a", a1);
  pos(s, "b", a2);
  s = verb(ca, "classes", "Partition all DAGs on n variables", [&] { return causal_classes(n); });
  positive(s, "--n", n, true);
  s = verb(ca, "dsep", "d-separation of comma-separated variable sets", [&] { return causal_dsep(a1, x, y, z); });
  pos(s, "dag", a1);
  s->add_option("--x", x)->required();
  s->add_option("--y", y)->required();
  s->add_option("--z", z);
  s = verb(ca, "fill", "Completions of a causal horn", [&] { return causal_fill(a1); });
  pos(s, "file", a1);
  s = verb(ca, "separoid", "Separoid axioms of a relation or a DAG", [&] { return causal_separoid(a1, strong); });
  pos(s, "file", a1);
  s->add_flag("--strong", strong, "Also check P6 (needs meets)");

  auto* p = group("psr", "POMDPs, PSRs and MDP homomorphisms");
  s = verb(p, "sdm", "System-dynamics matrix", [&] { return psr_sdm(a1, max_len); });
  pos(s, "pomdp", a1);
  positive(s, "--max-len", max_len, false);
  s = verb(p, "discover", "Core-test discovery", [&] { return psr_discover(a1, max_len); });
  pos(s, "pomdp", a1);
  positive(s, "--max-len", max_len, false);
  s = verb(p, "check-hom", "Check an MDP or PSR homomorphism", [&] { return psr_check_hom(a1, a2, a3); });
  pos(s, "source", a1);
  pos(s, "target", a2);
  pos(s, "map", a3);
  s = verb(p, "nerve", "Nerve of the history prefix order", [&] { return psr_nerve_cmd(a1, max_len, trunc); });
  pos(s, "pomdp", a1);
  positive(s, "--max-len", max_len, false);
  positive(s, "--trunc", trunc, false);

  auto* h = group("hom", "Simplicial homology");
  s = verb(h, "compute", "Homology of a simplicial set document", [&] { return hom_compute(a1, dim); });
  pos(s, "file", a1);
  s->add_option("--dim", dim)->check(CLI::NonNegativeNumber);
  s = verb(h, "nerve", "Homology of a category's classifying space", [&] { return hom_nerve(a1, trunc, dim); });
  pos(s, "category", a1);
  positive(s, "--trunc", trunc, false);
  s->add_option("--dim", dim)->check(CLI::NonNegativeNumber);
  s = verb(h, "imset", "Homology of the subset lattice", [&] { return hom_imset(n, dim, reading); });
  s->add_option("--n", n)->required()->check(CLI::Range(0, 4));
  s->add_option("--dim", dim)->check(CLI::NonNegativeNumber);
  s->add_option("--reading", reading)->check(CLI::IsMember({"order", "discrete"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  try {
    return run ? run() : 2;
  } catch (const BoundExceeded& e) {
    std::cerr << "bound exceeded: " << e.what() << "\n";
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
  } catch (const NumericInconsistency& e) {
    std::cerr << "numeric inconsistency: " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return 2;
}
