#pragma once
//
// DAG models over small variable sets: standard imsets, Markov equivalence,
// d-separation, separoid axioms and causal horns.  Subsets of the variable
// set are bitmasks (bit i is variable i).
//

#include <algorithm>
#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "simpdisc/error.hpp"
#include "simpdisc/linalg.hpp"
#include "simpdisc/parallel.hpp"

namespace simpdisc {

using Mask = std::uint32_t;

inline bool subset_of(Mask a, Mask b) { return (a & ~b) == 0; }

inline std::string mask_name(Mask m, const std::vector<std::string>& vars) {
  std::string s;
  for (std::size_t v = 0; v < vars.size(); ++v)
    if (m & (Mask{1} << v)) {
      if (!s.empty()) s += ",";
      s += vars[v];
    }
  return "{" + s + "}";
}

class Dag {
 public:
  Dag() = default;
  /// Throws InputError on self-loops, duplicate edges, unknown variables or
  /// a directed cycle (the cycle is named in the message).
  Dag(std::vector<std::string> vars, const std::vector<std::pair<int, int>>& edges) : vars_(std::move(vars)) {
    const int n = static_cast<int>(vars_.size());
    if (n > 30) throw InputError("dag: at most 30 variables are supported");
    parents_.assign(static_cast<std::size_t>(n), 0);
    for (const auto& [p, c] : edges) {
      if (p < 0 || p >= n || c < 0 || c >= n) throw InputError("dag: edge endpoint out of range");
      if (p == c) throw InputError("dag: self-loop at " + vars_[static_cast<std::size_t>(p)]);
      if (parents_[static_cast<std::size_t>(c)] & bit(p))
        throw InputError("dag: duplicate edge " + vars_[static_cast<std::size_t>(p)] + "->" +
                         vars_[static_cast<std::size_t>(c)]);
      parents_[static_cast<std::size_t>(c)] |= bit(p);
    }
    if (auto cyc = find_cycle()) {
      std::string s;
      for (int v : *cyc) s += vars_[static_cast<std::size_t>(v)] + "->";
      s += vars_[static_cast<std::size_t>(cyc->front())];
      throw InputError("dag: directed cycle " + s);
    }
  }

  static Mask bit(int v) { return Mask{1} << v; }
  int size() const { return static_cast<int>(vars_.size()); }
  Mask all() const { return size() == 0 ? 0 : static_cast<Mask>((std::uint64_t{1} << size()) - 1); }
  const std::vector<std::string>& vars() const { return vars_; }
  Mask parents(int v) const { return parents_[static_cast<std::size_t>(v)]; }
  bool has_edge(int p, int c) const { return parents(c) & bit(p); }
  bool adjacent(int a, int b) const { return has_edge(a, b) || has_edge(b, a); }
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int p = 0; p < size(); ++p)
      for (int c = 0; c < size(); ++c)
        if (has_edge(p, c)) out.push_back({p, c});
    return out;
  }
  int index_of(const std::string& name) const {
    for (int v = 0; v < size(); ++v)
      if (vars_[static_cast<std::size_t>(v)] == name) return v;
    return -1;
  }
  Mask mask_of(const std::vector<std::string>& names) const {
    Mask m = 0;
    for (const auto& nm : names) {
      const int v = index_of(nm);
      if (v < 0) throw InputError("dag: unknown variable '" + nm + "'");
      m |= bit(v);
    }
    return m;
  }
  /// Closure of m under taking parents.
  Mask ancestral_closure(Mask m) const {
    Mask out = m;
    for (bool grew = true; grew;) {
      grew = false;
      for (int v = 0; v < size(); ++v)
        if ((out & bit(v)) && !subset_of(parents(v), out)) {
          out |= parents(v);
          grew = true;
        }
    }
    return out;
  }
  friend bool operator==(const Dag&, const Dag&) = default;

 private:
  std::optional<std::vector<int>> find_cycle() const {
    const int n = size();
    std::vector<int> color(static_cast<std::size_t>(n), 0), stack;
    std::optional<std::vector<int>> found;
    auto dfs = [&](auto&& self, int v) -> bool {
      color[static_cast<std::size_t>(v)] = 1;
      stack.push_back(v);
      for (int c = 0; c < n; ++c) {
        if (!has_edge(v, c)) continue;
        if (color[static_cast<std::size_t>(c)] == 1) {
          auto it = std::find(stack.begin(), stack.end(), c);
          found = std::vector<int>(it, stack.end());
          return true;
        }
        if (color[static_cast<std::size_t>(c)] == 0 && self(self, c)) return true;
      }
      stack.pop_back();
      color[static_cast<std::size_t>(v)] = 2;
      return false;
    };
    for (int v = 0; v < n; ++v)
      if (color[static_cast<std::size_t>(v)] == 0 && dfs(dfs, v)) return found;
    return std::nullopt;
  }

  std::vector<std::string> vars_;
  std::vector<Mask> parents_;
};

// ---------------------------------------------------------------------------
// Imsets.

template <class Coeff>
class BasicImset {
 public:
  BasicImset() = default;
  explicit BasicImset(std::vector<std::string> vars) : vars_(std::move(vars)) {}

  const std::vector<std::string>& vars() const { return vars_; }
  /// Sparse entries sorted by mask; never holds a zero.
  const std::map<Mask, Coeff>& entries() const { return entries_; }
  Coeff operator[](Mask m) const {
    auto it = entries_.find(m);
    return it == entries_.end() ? Coeff(0) : it->second;
  }
  void add(Mask m, const Coeff& c) {
    if (c == 0) return;
    Coeff& slot = entries_[m];
    slot += c;
    if (slot == 0) entries_.erase(m);
  }
  bool is_zero() const { return entries_.empty(); }
  BasicImset& operator+=(const BasicImset& o) {
    for (const auto& [m, c] : o.entries_) add(m, c);
    return *this;
  }
  BasicImset& operator-=(const BasicImset& o) {
    for (const auto& [m, c] : o.entries_) add(m, -c);
    return *this;
  }
  friend bool operator==(const BasicImset&, const BasicImset&) = default;
  friend bool operator<(const BasicImset& a, const BasicImset& b) { return a.entries_ < b.entries_; }

 private:
  std::vector<std::string> vars_;
  std::map<Mask, Coeff> entries_;
};

using Imset = BasicImset<long long>;
/// Rational coefficients; accepted by the document parser.
using StructuralImset = BasicImset<Rational>;

template <class Coeff>
std::string to_string(const BasicImset<Coeff>& u) {
  if (u.is_zero()) return "0";
  std::string s;
  for (const auto& [m, c] : u.entries()) {
    std::string mag;
    bool neg = c < 0;
    if constexpr (std::is_same_v<Coeff, Rational>)
      mag = to_string(Rational(neg ? Rational(-c) : c));
    else
      mag = std::to_string(neg ? -c : c);
    if (s.empty())
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    if (mag != "1") s += mag + "*";
    s += "d" + mask_name(m, u.vars());
  }
  return s;
}

/// u_G = δ_V − δ_∅ + Σ_i (δ_{Pa_i} − δ_{i ∪ Pa_i}).
inline Imset standard_imset(const Dag& g) {
  Imset u(g.vars());
  u.add(g.all(), 1);
  u.add(0, -1);
  for (int v = 0; v < g.size(); ++v) {
    u.add(g.parents(v), 1);
    u.add(g.parents(v) | Dag::bit(v), -1);
  }
  return u;
}

/// δ_{abA} + δ_A − δ_{aA} − δ_{bA}.
inline Imset elementary_imset(const std::vector<std::string>& vars, int a, int b, Mask cond) {
  Imset u(vars);
  u.add(cond | Dag::bit(a) | Dag::bit(b), 1);
  u.add(cond, 1);
  u.add(cond | Dag::bit(a), -1);
  u.add(cond | Dag::bit(b), -1);
  return u;
}

inline void require_same_vars(const Dag& a, const Dag& b) {
  if (a.vars() != b.vars()) throw InputError("DAGs are over different variable sets");
}

inline bool markov_equivalent(const Dag& a, const Dag& b) {
  require_same_vars(a, b);
  return standard_imset(a) == standard_imset(b);
}

/// Skeleton plus the set of v-structures a -> c <- b with a, b non-adjacent;
/// the classical Markov-equivalence invariant.
struct SkeletonKey {
  std::vector<std::pair<int, int>> skeleton;
  std::vector<std::array<int, 3>> vstructures;
  auto operator<=>(const SkeletonKey&) const = default;
};

inline SkeletonKey skeleton_key(const Dag& g) {
  SkeletonKey k;
  for (int a = 0; a < g.size(); ++a)
    for (int b = a + 1; b < g.size(); ++b)
      if (g.adjacent(a, b)) k.skeleton.push_back({a, b});
  for (int c = 0; c < g.size(); ++c)
    for (int a = 0; a < g.size(); ++a)
      for (int b = a + 1; b < g.size(); ++b)
        if (g.has_edge(a, c) && g.has_edge(b, c) && !g.adjacent(a, b)) k.vstructures.push_back({a, c, b});
  return k;
}

inline std::vector<std::string> default_var_names(int n) {
  std::vector<std::string> v;
  for (int i = 0; i < n; ++i) v.push_back(std::string(1, static_cast<char>('a' + i)));
  return v;
}

/// All labeled DAGs on n variables: every assignment of {absent, i->j, j->i}
/// to the pairs i < j, filtered by acyclicity, in enumeration order.
inline std::vector<Dag> all_dags(int n, const std::vector<std::string>& names = {}) {
  if (n < 0 || n > 5) throw BoundExceeded("all_dags: n must be in [0, 5]");
  const auto vars = names.empty() ? default_var_names(n) : names;
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.push_back({i, j});
  std::size_t total = 1;
  for (std::size_t p = 0; p < pairs.size(); ++p) total *= 3;
  std::vector<Dag> out;
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<std::pair<int, int>> edges;
    std::size_t c = code;
    for (const auto& [i, j] : pairs) {
      const std::size_t d = c % 3;
      c /= 3;
      if (d == 1) edges.push_back({i, j});
      if (d == 2) edges.push_back({j, i});
    }
    try {
      out.emplace_back(vars, edges);
    } catch (const InputError&) {
    }
  }
  return out;
}

struct EquivalenceReport {
  int n_vars = 0;
  std::size_t dag_count = 0;
  std::size_t class_count = 0;
  std::size_t oracle_class_count = 0;
  std::vector<std::size_t> class_sizes;  // descending
  std::size_t disagreements = 0;
  /// Up to 20 DAG index pairs on which the two criteria disagree.
  std::vector<std::pair<std::size_t, std::size_t>> disagreement_witnesses;
};

inline EquivalenceReport equivalence_classes(int n_vars) {
  if (n_vars < 1 || n_vars > 5) throw BoundExceeded("equivalence_classes: n_vars must be in [1, 5]");
  const auto dags = all_dags(n_vars);
  EquivalenceReport rep;
  rep.n_vars = n_vars;
  rep.dag_count = dags.size();
  std::vector<Imset> imsets(dags.size());
  std::vector<SkeletonKey> keys(dags.size());
  parallel_for(dags.size(), [&](std::size_t i) {
    imsets[i] = standard_imset(dags[i]);
    keys[i] = skeleton_key(dags[i]);
  });
  std::map<Imset, std::size_t> cls;
  std::map<SkeletonKey, std::size_t> ocls;
  std::vector<std::size_t> ci(dags.size()), oc(dags.size());
  for (std::size_t i = 0; i < dags.size(); ++i) {
    ci[i] = cls.emplace(imsets[i], cls.size()).first->second;
    oc[i] = ocls.emplace(keys[i], ocls.size()).first->second;
  }
  rep.class_count = cls.size();
  rep.oracle_class_count = ocls.size();
  rep.class_sizes.assign(cls.size(), 0);
  for (auto c : ci) ++rep.class_sizes[c];
  std::sort(rep.class_sizes.rbegin(), rep.class_sizes.rend());
  for (std::size_t i = 0; i < dags.size(); ++i)
    for (std::size_t j = i + 1; j < dags.size(); ++j)
      if ((ci[i] == ci[j]) != (oc[i] == oc[j])) {
        ++rep.disagreements;
        if (rep.disagreement_witnesses.size() < 20) rep.disagreement_witnesses.push_back({i, j});
      }
  return rep;
}

// ---------------------------------------------------------------------------
// d-separation.

/// X ⫫ Y | Z in g for pairwise disjoint X, Y, Z: X and Y are disconnected in
/// the moral graph of the ancestral closure of X ∪ Y ∪ Z after removing Z.
inline bool d_separated(const Dag& g, Mask x, Mask y, Mask z) {
  if ((x & y) || (x & z) || (y & z)) throw InputError("d_separation: argument sets must be pairwise disjoint");
  if (!subset_of(x | y | z, g.all())) throw InputError("d_separation: unknown variable in argument sets");
  if (x == 0 || y == 0) return true;
  const Mask anc = g.ancestral_closure(x | y | z);
  const int n = g.size();
  std::vector<Mask> adj(static_cast<std::size_t>(n), 0);
  for (int c = 0; c < n; ++c) {
    if (!(anc & Dag::bit(c))) continue;
    const Mask pa = g.parents(c);
    for (int p = 0; p < n; ++p)
      if (pa & Dag::bit(p)) {
        adj[static_cast<std::size_t>(c)] |= Dag::bit(p);
        adj[static_cast<std::size_t>(p)] |= Dag::bit(c);
        adj[static_cast<std::size_t>(p)] |= pa & ~Dag::bit(p);
      }
  }
  const Mask alive = anc & ~z;
  Mask seen = x, frontier = x;
  while (frontier) {
    Mask next = 0;
    for (int v = 0; v < n; ++v)
      if (frontier & Dag::bit(v)) next |= adj[static_cast<std::size_t>(v)] & alive & ~seen;
    seen |= next;
    frontier = next;
  }
  return (seen & y) == 0;
}

/// d-separation extended to arbitrary subsets: X ⫫ Y | Z iff X ∩ Y ⊆ Z and
/// X∖Z ⫫ Y∖Z | Z.
inline bool d_separated_lifted(const Dag& g, Mask x, Mask y, Mask z) {
  if (!subset_of(x & y, z)) return false;
  return d_separated(g, x & ~z, y & ~z, z);
}

// ---------------------------------------------------------------------------
// Ternary relations and separoid axioms.

struct Triple {
  Mask x, y, z;
  auto operator<=>(const Triple&) const = default;
};

class TernaryRelation {
 public:
  TernaryRelation(std::vector<std::string> vars, std::vector<Mask> carrier, std::set<Triple> triples)
      : vars_(std::move(vars)), carrier_(std::move(carrier)), triples_(std::move(triples)) {
    std::sort(carrier_.begin(), carrier_.end());
    carrier_.erase(std::unique(carrier_.begin(), carrier_.end()), carrier_.end());
    const Mask all = vars_.empty() ? 0 : static_cast<Mask>((std::uint64_t{1} << vars_.size()) - 1);
    for (Mask m : carrier_)
      if (!subset_of(m, all)) throw InputError("relation: carrier element outside the variable set");
    for (const auto& t : triples_)
      if (!in_carrier(t.x) || !in_carrier(t.y) || !in_carrier(t.z))
        throw InputError("relation: triple references an element outside the carrier");
  }

  /// Carrier = all subsets of the variable set.
  static std::vector<Mask> power_set(std::size_t n) {
    std::vector<Mask> c;
    for (Mask m = 0; m < (Mask{1} << n); ++m) c.push_back(m);
    return c;
  }

  const std::vector<std::string>& vars() const { return vars_; }
  const std::vector<Mask>& carrier() const { return carrier_; }
  const std::set<Triple>& triples() const { return triples_; }
  bool in_carrier(Mask m) const { return std::binary_search(carrier_.begin(), carrier_.end(), m); }
  bool holds(Mask x, Mask y, Mask z) const { return triples_.count({x, y, z}) > 0; }

 private:
  std::vector<std::string> vars_;
  std::vector<Mask> carrier_;
  std::set<Triple> triples_;
};

/// The lifted d-separation relation of g over the full subset lattice.
inline TernaryRelation dsep_relation(const Dag& g) {
  const auto carrier = TernaryRelation::power_set(static_cast<std::size_t>(g.size()));
  std::set<Triple> t;
  for (Mask x : carrier)
    for (Mask y : carrier)
      for (Mask z : carrier)
        if (d_separated_lifted(g, x, y, z)) t.insert({x, y, z});
  return TernaryRelation(g.vars(), carrier, std::move(t));
}

/// Adds (y, x | z) for every (x, y | z).
inline TernaryRelation symmetric_closure(const TernaryRelation& r) {
  auto t = r.triples();
  for (const auto& tr : r.triples()) t.insert({tr.y, tr.x, tr.z});
  return TernaryRelation(r.vars(), r.carrier(), std::move(t));
}

struct AxiomResult {
  std::string axiom;
  bool holds = true;
  std::size_t checked = 0;
  /// Quantified carrier elements of the first counterexample, in the
  /// order the axiom names them (x, y, z[, w]).
  std::vector<Mask> witness;
};

struct SeparoidReport {
  bool strong = false;
  std::vector<AxiomResult> axioms;  // S1, P1..P5[, P6]
  bool ok() const {
    return std::all_of(axioms.begin(), axioms.end(), [](const AxiomResult& a) { return a.holds; });
  }
};

/// Exhaustive check of S1 and P1–P5 (and P6 when strong) over the carrier,
/// with ≤ = inclusion, ∨ = union and ∧ = intersection.
inline SeparoidReport check_separoid(const TernaryRelation& r, bool strong) {
  const auto& car = r.carrier();
  const std::size_t n = car.size();
  std::map<Mask, std::size_t> pos;
  for (std::size_t i = 0; i < n; ++i) pos[car[i]] = i;
  if (strong)
    for (Mask a : car)
      for (Mask b : car)
        if (!pos.count(a & b) || !pos.count(a | b))
          throw InputError("check_separoid: carrier is not a lattice (strong check requested)");
  std::vector<char> rel(n * n * n, 0);
  for (const auto& t : r.triples()) rel[(pos.at(t.x) * n + pos.at(t.y)) * n + pos.at(t.z)] = 1;
  auto R = [&](std::size_t x, std::size_t y, std::size_t z) { return rel[(x * n + y) * n + z] != 0; };
  auto join = [&](std::size_t a, std::size_t b) -> std::optional<std::size_t> {
    auto it = pos.find(car[a] | car[b]);
    if (it == pos.end()) return std::nullopt;
    return it->second;
  };
  auto leq = [&](std::size_t a, std::size_t b) { return subset_of(car[a], car[b]); };

  SeparoidReport rep;
  rep.strong = strong;
  auto fail = [&](AxiomResult& a, std::vector<std::size_t> idx) {
    if (!a.holds) return;
    a.holds = false;
    for (auto i : idx) a.witness.push_back(car[i]);
  };

  AxiomResult s1{"S1", true, 0, {}};
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      ++s1.checked;
      if (!join(a, b)) fail(s1, {a, b});
    }
  rep.axioms.push_back(s1);

  AxiomResult p1{"P1", true, 0, {}}, p2{"P2", true, 0, {}}, p3{"P3", true, 0, {}}, p4{"P4", true, 0, {}},
      p5{"P5", true, 0, {}}, p6{"P6", true, 0, {}};
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      ++p1.checked;
      if (!R(x, y, x)) fail(p1, {x, y, x});
    }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        if (!R(x, y, z)) continue;
        ++p2.checked;
        if (!R(y, x, z)) fail(p2, {x, y, z});
        for (std::size_t w = 0; w < n; ++w) {
          if (leq(w, y)) {
            ++p3.checked;
            if (!R(x, w, z)) fail(p3, {x, y, z, w});
            ++p4.checked;
            auto zw = join(z, w);
            if (!zw || !R(x, y, *zw)) fail(p4, {x, y, z, w});
          }
          auto yz = join(y, z);
          if (yz && R(x, w, *yz)) {
            ++p5.checked;
            auto yw = join(y, w);
            if (!yw || !R(x, *yw, z)) fail(p5, {x, y, z, w});
          }
        }
        if (strong && leq(z, y))
          for (std::size_t w = 0; w < n; ++w) {
            // P6: z ≤ y, w ≤ y, x ⫫ y | z and x ⫫ y | w ⇒ x ⫫ y | z ∧ w
            if (!leq(w, y) || !R(x, y, w)) continue;
            ++p6.checked;
            if (!R(x, y, pos.at(car[z] & car[w]))) fail(p6, {x, y, z, w});
          }
      }
  rep.axioms.insert(rep.axioms.end(), {p1, p2, p3, p4, p5});
  if (strong) rep.axioms.push_back(p6);
  return rep;
}

// ---------------------------------------------------------------------------
// Causal horns.

enum class EdgeMark { forward, backward, absent, undetermined };

inline const char* to_string(EdgeMark m) {
  switch (m) {
    case EdgeMark::forward: return "forward";
    case EdgeMark::backward: return "backward";
    case EdgeMark::absent: return "absent";
    case EdgeMark::undetermined: return "undetermined";
  }
  return "?";
}

/// Partial orientation data on the edges of Λ^n_k.  For an edge i < j,
/// forward means i -> j.  "undetermined" means adjacent, direction unknown.
struct CausalHorn {
  int n = 0;
  int k = 0;
  std::map<std::pair<int, int>, EdgeMark> pattern;
};

/// Edges {i < j} of Δ^n that lie in Λ^n_k.
inline std::vector<std::pair<int, int>> horn_edges(int n, int k) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      // {i, j} ∪ {k} covers [n] only when n = 2 and {i, j} is opposite k.
      const int covered = 2 + ((k != i && k != j) ? 1 : 0);
      if (covered < n + 1) out.push_back({i, j});
    }
  return out;
}

/// Completions of the horn pattern to DAGs on vertices 0..n whose singleton
/// d-separation statements are exactly the singleton triples of ci, and
/// which satisfy every non-singleton triple of ci.  Edges missing from the
/// horn are unconstrained.
inline std::vector<Dag> causal_fillers(const CausalHorn& h, const TernaryRelation& ci) {
  if (h.n < 1 || h.n > 4) throw InputError("causal_fillers: n must be in [1, 4]");
  if (h.k < 0 || h.k > h.n) throw InputError("causal_fillers: k out of range");
  const auto edges = horn_edges(h.n, h.k);
  std::set<std::pair<int, int>> present(edges.begin(), edges.end());
  for (const auto& [e, m] : h.pattern)
    if (!present.count(e))
      throw InputError("causal_fillers: pattern marks edge " + std::to_string(e.first) + "-" +
                       std::to_string(e.second) + " which is not in the horn");
  for (const auto& e : edges)
    if (!h.pattern.count(e))
      throw InputError("causal_fillers: pattern omits horn edge " + std::to_string(e.first) + "-" +
                       std::to_string(e.second));
  const int nv = h.n + 1;
  if (ci.vars().size() != static_cast<std::size_t>(nv))
    throw InputError("causal_fillers: ci must be over the n+1 horn vertices");

  std::vector<std::pair<int, int>> all_pairs;
  std::vector<std::vector<EdgeMark>> options;
  for (int i = 0; i < nv; ++i)
    for (int j = i + 1; j < nv; ++j) {
      all_pairs.push_back({i, j});
      auto it = h.pattern.find({i, j});
      if (it == h.pattern.end())
        options.push_back({EdgeMark::absent, EdgeMark::forward, EdgeMark::backward});
      else if (it->second == EdgeMark::undetermined)
        options.push_back({EdgeMark::forward, EdgeMark::backward});
      else
        options.push_back({it->second});
    }
  std::vector<Dag> out;
  std::vector<std::size_t> choice(all_pairs.size(), 0);
  std::vector<std::string> names;
  for (int v = 0; v < nv; ++v) names.push_back(std::to_string(v));
  const Mask full = static_cast<Mask>((1u << nv) - 1);
  while (true) {
    std::vector<std::pair<int, int>> e;
    for (std::size_t p = 0; p < all_pairs.size(); ++p) {
      const auto m = options[p][choice[p]];
      if (m == EdgeMark::forward) e.push_back(all_pairs[p]);
      if (m == EdgeMark::backward) e.push_back({all_pairs[p].second, all_pairs[p].first});
    }
    std::optional<Dag> g;
    try {
      g.emplace(names, e);
    } catch (const InputError&) {
    }
    if (g) {
      bool ok = true;
      for (int i = 0; i < nv && ok; ++i)
        for (int j = 0; j < nv && ok; ++j) {
          if (i == j) continue;
          const Mask rest = full & ~Dag::bit(i) & ~Dag::bit(j);
          for (Mask z = 0; z <= rest && ok; ++z) {
            if (!subset_of(z, rest)) continue;
            if (d_separated(*g, Dag::bit(i), Dag::bit(j), z) != ci.holds(Dag::bit(i), Dag::bit(j), z)) ok = false;
          }
        }
      for (const auto& t : ci.triples()) {
        if (!ok) break;
        const bool singleton = std::popcount(t.x) == 1 && std::popcount(t.y) == 1 && t.x != t.y &&
                               !((t.x | t.y) & t.z);
        if (!singleton && !d_separated_lifted(*g, t.x, t.y, t.z)) ok = false;
      }
      if (ok) out.push_back(std::move(*g));
    }
    std::size_t p = 0;
    while (p < choice.size() && ++choice[p] == options[p].size()) choice[p++] = 0;
    if (p == choice.size()) break;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Elementary decomposition.

struct ElementaryTerm {
  int a;
  int b;
  Mask cond;
  auto operator<=>(const ElementaryTerm&) const = default;
};

/// A shortest multiset of elementary imsets summing to u, found by
/// iterative deepening up to max_terms; nullopt if none exists in range.
inline std::optional<std::vector<ElementaryTerm>> elementary_decomposition(const Imset& u, int max_terms = 8) {
  const int n = static_cast<int>(u.vars().size());
  std::vector<ElementaryTerm> terms;
  std::vector<Imset> values;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      const Mask rest = static_cast<Mask>((1u << n) - 1) & ~Dag::bit(a) & ~Dag::bit(b);
      for (Mask c = 0; c <= rest; ++c)
        if (subset_of(c, rest)) {
          terms.push_back({a, b, c});
          values.push_back(elementary_imset(u.vars(), a, b, c));
        }
    }
  std::vector<ElementaryTerm> pick;
  Imset residual = u;
  auto dfs = [&](auto&& self, std::size_t from, int left) -> bool {
    if (residual.is_zero()) return true;
    if (left == 0) return false;
    for (std::size_t t = from; t < terms.size(); ++t) {
      residual -= values[t];
      pick.push_back(terms[t]);
      if (self(self, t, left - 1)) return true;
      pick.pop_back();
      residual += values[t];
    }
    return false;
  };
  for (int d = 0; d <= max_terms; ++d)
    if (dfs(dfs, 0, d)) return pick;
  return std::nullopt;
}

}  // namespace simpdisc
