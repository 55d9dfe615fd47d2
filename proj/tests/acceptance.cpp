// Acceptance run: one PASS/FAIL line per criterion with its wall-clock limit.
// Exit status is the number of failing criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <sys/wait.h>

#include "oracles.hpp"
#include "simpdisc/simpdisc.hpp"

using namespace simpdisc;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

// first failure wins the detail line
void require(Outcome& o, bool cond, const std::string& what) {
  if (!cond && o.ok) {
    o.ok = false;
    o.detail = what;
  }
}

int failures = 0;

void criterion(int id, const std::string& name, double limit_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (o.ok && limit_s > 0 && secs > limit_s) o = {false, "runtime over limit"};
  if (!o.ok) ++failures;
  char timing[64];
  std::snprintf(timing, sizeof timing, "%.2fs", secs);
  std::cout << (o.ok ? "PASS" : "FAIL") << "  " << (id < 10 ? " " : "") << id << "  " << name << "  [" << timing;
  if (limit_s > 0) std::cout << " / limit " << limit_s << "s";
  std::cout << "]";
  if (!o.detail.empty()) std::cout << "  " << o.detail;
  std::cout << std::endl;
}

std::vector<int> iota_map(std::size_t n) {
  std::vector<int> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<int>(i);
  return v;
}

struct CliRun {
  int code;
  std::string out;
};

CliRun run_cli(const std::string& args) {
  const std::string cmd = std::string(SIMPDISC_CLI) + " --format json " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) throw std::runtime_error("popen failed");
  std::string out;
  char buf[4096];
  while (auto n = fread(buf, 1, sizeof buf, p)) out.append(buf, n);
  const int st = pclose(p);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

}  // namespace

int main() {
  criterion(1, "simplicial relations and decompose/recompose", 10, [] {
    Outcome o;
    const auto rep = delta::verify_simplicial_relations(6);
    require(o, rep.ok() && rep.checked > 0, "verify_simplicial_relations reported violations");
    // the same identity families, recomputed with the pointwise oracle
    using oracle::after, oracle::delta, oracle::sigma;
    std::size_t checked = 0;
    for (int n = 2; n <= 6; ++n)
      for (int j = 0; j <= n; ++j)
        for (int i = 0; i < j; ++i, ++checked)
          require(o, after(delta(j, n), delta(i, n - 1)) == after(delta(i, n), delta(j - 1, n - 1)), "oracle δδ");
    for (int n = 0; n <= 5; ++n)
      for (int j = 0; j <= n; ++j)
        for (int i = 0; i <= j; ++i, ++checked)
          require(o, after(sigma(j, n), sigma(i, n + 1)) == after(sigma(i, n), sigma(j + 1, n + 1)), "oracle σσ");
    for (int n = 1; n <= 5; ++n)
      for (int j = 0; j < n; ++j)
        for (int i = 0; i <= n; ++i, ++checked) {
          const auto lhs = after(sigma(j, n - 1), delta(i, n));
          std::vector<int> rhs;
          if (i < j)
            rhs = after(delta(i, n - 1), sigma(j - 1, n - 2));
          else if (i == j || i == j + 1)
            for (int k = 0; k < n; ++k) rhs.push_back(k);
          else
            rhs = after(delta(i - 1, n - 1), sigma(j, n - 2));
          require(o, lhs == rhs, "oracle σδ");
        }
    // library generators agree with the oracle ones
    for (int n = 1; n <= 6; ++n)
      for (int i = 0; i <= n; ++i) require(o, delta::as_map(delta::coface(i, n)).values() == delta(i, n), "coface");
    std::size_t maps = 0;
    for (int m = 1; m <= 6; ++m)
      for (int n = 1; n <= 6; ++n) {
        const auto all = delta::monotone_maps(m, n);
        require(o, all.size() == oracle::monotone_tuples(m, n).size(), "monotone map count");
        for (const auto& f : all) {
          ++maps;
          require(o, delta::recompose(delta::decompose(f), m) == f, "round-trip of " + delta::to_string(f));
        }
      }
    if (o.ok)
      o.detail = std::to_string(rep.checked) + " relations, " + std::to_string(checked) + " oracle identities, " +
                 std::to_string(maps) + " maps round-tripped";
    return o;
  });

  criterion(2, "horn and boundary counts, closure", 5, [] {
    Outcome o;
    const auto l21 = horn(2, 1, 2);
    require(o, l21.count(1) == 5 && l21.ambient().count(1) == 6, "Λ²₁ one-simplices");
    bool has02 = false;
    for (int x : l21.members(1)) has02 = has02 || l21.ambient().label(1, x) == "02";
    require(o, !has02, "Λ²₁ contains the edge 02");
    const auto b2 = boundary(2, 2);
    require(o, b2.count(2) == 9 && b2.ambient().count(2) == 10, "∂Δ² two-simplices");
    std::size_t subsets = 0;
    for (int n = 1; n <= 4; ++n) {
      ++subsets;
      require(o, is_closed_subset(boundary(n, 4)), "∂Δ^" + std::to_string(n) + " not closed");
      for (int k = 0; k <= n; ++k, ++subsets)
        require(o, is_closed_subset(horn(n, k, 4)), "horn not closed");
    }
    if (o.ok) o.detail = std::to_string(subsets) + " subsets closed";
    return o;
  });

  criterion(3, "nerve is fully faithful on the catalogue (trunc 3)", 60, [] {
    Outcome o;
    const auto cats = catalogue::all();
    std::size_t pairs = 0, functors = 0;
    for (const auto& [a, c] : cats)
      for (const auto& [b, d] : cats) {
        const auto r = nerve_hom_bijection_check(c, d, 3);
        ++pairs;
        functors += r.functors;
        require(o, r.bijection(), a + " -> " + b + ": not a bijection");
      }
    if (o.ok) o.detail = std::to_string(pairs) + " pairs, " + std::to_string(functors) + " functors";
    return o;
  });

  criterion(4, "horn-filling classification of catalogue nerves", 60, [] {
    Outcome o;
    for (const auto& [name, c] : catalogue::all()) {
      const auto cl = classify(nerve(c, 3), 3);
      require(o, cl.quasicategory && cl.nerve_like, name + ": inner horns not uniquely fillable");
      if (name == "arrow") {
        require(o, !cl.kan, "arrow: Kan");
        bool witness = false;
        for (const auto& st : cl.horns)
          if (st.n == 2 && st.k == 0 && st.unfillable_witness) {
            const auto& w = st.unfillable_witness->images;
            auto has = [&](const std::string& s, const std::string& t) {
              return std::find(w.begin(), w.end(), std::make_pair(s, t)) != w.end();
            };
            witness = has("01", "f") && has("02", "id_a");
          }
        require(o, witness, "arrow: Λ²₀ witness missing");
      }
      if (name == "z2") require(o, cl.kan, "z2: not Kan");
    }
    if (o.ok) o.detail = "7 nerves quasicategories with unique inner fillers; arrow not Kan; z2 Kan";
    return o;
  });

  criterion(5, "Markov equivalence by imsets", 120, [] {
    Outcome o;
    const auto r3 = equivalence_classes(3);
    require(o, r3.dag_count == 25 && r3.class_count == 11 && r3.disagreements == 0, "3 variables");
    const auto r4 = equivalence_classes(4);
    require(o, r4.dag_count == 543 && r4.class_count == 185 && r4.disagreements == 0, "4 variables");
    // independent check on 3 variables: imset equality against the pattern oracle, pairwise
    const auto dags = all_dags(3);
    for (std::size_t i = 0; i < dags.size(); ++i)
      for (std::size_t j = i + 1; j < dags.size(); ++j)
        require(o, markov_equivalent(dags[i], dags[j]) == oracle::same_pattern(dags[i], dags[j]), "pairwise");
    const std::vector<std::string> v{"a", "b", "c"};
    const Dag chain(v, {{0, 1}, {1, 2}}), rev(v, {{2, 1}, {1, 0}}), fork(v, {{1, 0}, {1, 2}}), coll(v, {{0, 1}, {2, 1}});
    require(o, standard_imset(chain) == standard_imset(rev) && standard_imset(chain) == standard_imset(fork),
            "chain, reverse chain and fork differ");
    require(o, !(standard_imset(chain) == standard_imset(coll)), "collider shares the imset");
    if (o.ok) o.detail = "25 -> 11 and 543 -> 185, zero disagreements";
    return o;
  });

  criterion(6, "separoid axioms of d-separation", 60, [] {
    Outcome o;
    std::size_t graphs = 0;
    for (int n = 1; n <= 4; ++n)
      for (const auto& g : all_dags(n)) {
        ++graphs;
        const auto rep = check_separoid(dsep_relation(g), false);
        for (const auto& a : rep.axioms)
          if (a.axiom != "S1") require(o, a.holds, a.axiom + " fails on a " + std::to_string(n) + "-variable DAG");
      }
    const TernaryRelation empty({"a", "b"}, TernaryRelation::power_set(2), {});
    const auto rep = check_separoid(empty, false);
    bool p1 = false;
    for (const auto& a : rep.axioms)
      if (a.axiom == "P1") p1 = !a.holds && a.witness.size() == 3 && a.witness[0] == a.witness[2];
    require(o, p1, "empty relation: P1 witness");
    if (o.ok) o.detail = std::to_string(graphs) + " DAGs pass P1-P5; empty relation fails P1";
    return o;
  });

  criterion(7, "PSR core tests are sufficient (max_len 3, exact)", 60, [] {
    Outcome o;
    std::size_t cells = 0;
    auto fleet_all = fleet::pomdps();
    fleet_all.emplace_back("cycle2_relabeled", fleet::cycle2_relabeled());
    for (const auto& [name, m] : fleet_all) {
      const auto sdm = build_sdm(m, 3);
      const auto model = discover_core_tests(sdm);
      require(o, model.size() <= m.n_states(), name + ": more core tests than states");
      for (std::size_t r = 0; r < sdm.values.rows(); ++r)
        for (std::size_t c = 0; c < sdm.values.cols(); ++c, ++cells) {
          require(o, model.predict(r, c) == sdm.values(r, c), name + ": reconstruction");
          require(o, sdm.values(r, c) == oracle::path_sum_probability(m, sdm.histories[r], sdm.tests[c]),
                  name + ": path-sum oracle");
        }
    }
    if (o.ok) o.detail = std::to_string(cells) + " cells exact";
    return o;
  });

  criterion(8, "MDP and PSR homomorphisms", 10, [] {
    Outcome o;
    const auto g = fleet::gridworld4(), g2 = fleet::gridworld4_twice(), gm = fleet::gridworld4_mirror(),
               gh = fleet::gridworld4_halves();
    require(o, check_mdp_homomorphism(g, g, identity_homomorphism(g)).ok(), "MDP identity");
    const auto c2 = fleet::cycle2();
    const auto d = psr_dynamics(c2, discover_core_tests(build_sdm(c2, 3)).core_tests, 6);
    std::vector<std::vector<int>> ids(d.vectors.size(), iota_map(d.n_actions));
    require(o, check_psr_homomorphism(d, d, iota_map(d.vectors.size()), ids).ok(), "PSR identity");
    require(o, check_mdp_homomorphism(g, gm, fleet::mirror_collapse()).ok(), "mirror collapse");
    const auto bad = check_mdp_homomorphism(g, gh, fleet::halves_collapse());
    bool reward = false;
    for (const auto& v : bad.violations) reward = reward || v.kind == "reward";
    require(o, !bad.ok() && reward, "halves collapse: no reward witness");
    require(o, check_mdp_homomorphism(g2, g, fleet::fold_copies()).ok(), "fold copies");
    const auto comp = compose(fleet::mirror_collapse(), fleet::fold_copies());
    require(o, check_mdp_homomorphism(g2, gm, comp).ok(), "composite");
    if (o.ok) o.detail = "identities, mirror, composite pass; halves fails on reward";
    return o;
  });

  criterion(9, "homology and Smith normal form", 60, [] {
    Outcome o;
    for (int n = 0; n <= 4; ++n) {
      const auto cc = chain_complex(standard_simplex(n, 5));
      require(o, boundary_squares_to_zero(cc), "∂∂ on Δⁿ");
      const auto hs = homology_all(cc);
      require(o, hs[0].free_rank == 1 && hs[0].torsion.empty(), "H0(Δⁿ)");
      for (std::size_t d = 1; d < hs.size(); ++d) require(o, hs[d].is_zero(), "H_d(Δⁿ)");
      if (n >= 1) {
        require(o, boundary_squares_to_zero(chain_complex(*inclusion(boundary(n, 5)).sub)), "∂∂ on ∂Δⁿ");
        for (int k = 0; k <= n; ++k)
          require(o, boundary_squares_to_zero(chain_complex(*inclusion(horn(n, k, 5)).sub)), "∂∂ on a horn");
      }
    }
    for (const auto& [name, c] : catalogue::all())
      require(o, boundary_squares_to_zero(chain_complex(nerve(c, 4))), "∂∂ on N(" + name + ")");
    const auto b2 = homology_all(chain_complex(*inclusion(boundary(2, 3)).sub));
    require(o, to_string(b2[0]) == "Z" && to_string(b2[1]) == "Z", "H(∂Δ²)");
    const auto b3 = homology_all(chain_complex(*inclusion(boundary(3, 4)).sub));
    require(o, to_string(b3[0]) == "Z" && to_string(b3[1]) == "0" && to_string(b3[2]) == "Z", "H(∂Δ³)");
    require(o, to_string(classifying_space_homology(catalogue::z2(), 4, 1)) == "Z/2", "H1(N(Z/2))");
    std::mt19937 rng(7);
    std::size_t mats = 0;
    for (std::size_t r = 1; r <= 8; ++r)
      for (std::size_t c = 1; c <= 8; ++c)
        for (int t = 0; t < 3; ++t, ++mats) {
          const auto m = oracle::random_matrix(rng, r, c);
          Matrix<Integer> a(r, c);
          for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) a(i, j) = m[i][j];
          const auto got = smith_invariants(a);
          require(o, got.size() == oracle::rational_rank(m) && got == oracle::determinantal_invariants(m),
                  "SNF disagrees on a " + std::to_string(r) + "x" + std::to_string(c) + " matrix");
        }
    if (o.ok) o.detail = std::to_string(mats) + " matrices agree with the determinantal oracle";
    return o;
  });

  criterion(10, "CLI output is byte-identical across runs", 0, [] {
    Outcome o;
    const std::string D = SIMPDISC_DATA;
    auto f = [&](const std::string& rel) { return D + "/" + rel; };
    const std::vector<std::string> cmds = {
        "delta compose '2 1 : 0 1 1' '1 2 : 0 2'",
        "delta decompose '3 2 : 0 0 1 2'",
        "delta verify --max-n 6",
        "delta as-map d1@2",
        "sset simplex --n 2 --trunc 3",
        "sset boundary --n 3 --trunc 3",
        "sset horn --n 2 --k 1 --trunc 2",
        "sset check " + f("sset/nerve_ab.sset.json"),
        "sset check " + f("sset/broken.sset.json"),
        "cat catalogue",
        "cat check " + f("cat/square.json"),
        "cat nerve " + f("cat/idempotent.json") + " --trunc 3",
        "cat ho " + f("sset/z2_trunc4.sset.json"),
        "cat faithful square z2 --trunc 3",
        "lift classify " + f("sset/nerve_ab.sset.json") + " --max-n 2",
        "lift fill --target " + f("sset/nerve_ab.sset.json") + " --n 2 --k 1 " + f("hornmap/inner_ab.json"),
        "causal imset " + f("dag/chain.json"),
        "causal equiv " + f("dag/chain.json") + " " + f("dag/collider.json"),
        "causal classes --n 4",
        "causal dsep " + f("dag/diverger.json") + " --x a --y c --z b",
        "causal fill " + f("fill/chain_horn.json"),
        "causal separoid " + f("rel/empty2.json"),
        "causal separoid " + f("rel/full2.json") + " --strong",
        "psr sdm " + f("pomdp/switch2.json"),
        "psr discover " + f("pomdp/ring3.json") + " --max-len 3",
        "psr discover " + f("pomdp/ring3.json") + " --max-len 3 --mode float",
        "psr check-hom " + f("mdp/gridworld4_twice.json") + " " + f("mdp/gridworld4.json") + " " +
            f("hom/fold_copies.json"),
        "psr check-hom " + f("pomdp/cycle2.json") + " " + f("pomdp/cycle2_relabeled.json") + " " +
            f("hom/cycle2_relabel.json"),
        "psr nerve " + f("pomdp/cycle3.json") + " --max-len 2 --trunc 2",
        "hom compute " + f("sset/boundary2.sset.json"),
        "hom nerve parallel --trunc 3",
        "hom imset --n 3 --reading order",
    };
    for (const auto& c : cmds) {
      const auto a = run_cli(c), b = run_cli(c);
      require(o, a.code <= 1 && !a.out.empty(), "no output from: " + c);
      require(o, a.code == b.code && a.out == b.out, "output differs: " + c);
    }
    if (o.ok) o.detail = std::to_string(cmds.size()) + " commands, two runs each";
    return o;
  });

  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail") << std::endl;
  return failures;
}
