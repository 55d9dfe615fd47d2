#pragma once
//
// Finite categories given by explicit composition tables, their nerves, and
// the homotopy category of a simplicial set (the left adjoint of the nerve).
//

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "simpdisc/error.hpp"
#include "simpdisc/maps.hpp"
#include "simpdisc/sset.hpp"

namespace simpdisc {

struct Morphism {
  std::string name;
  int dom;
  int cod;
  friend bool operator==(const Morphism&, const Morphism&) = default;
};

class FiniteCategory {
 public:
  /// `comp` lists triples (g, f, g∘f).  Composites with an identity may be
  /// omitted; every other composable pair must be listed.  Throws InputError
  /// unless the data is a category (identity laws and associativity are
  /// checked exhaustively).
  FiniteCategory(std::vector<std::string> objects, std::vector<Morphism> morphisms,
                 std::vector<int> identities, const std::vector<std::array<int, 3>>& comp)
      : objects_(std::move(objects)), morphisms_(std::move(morphisms)), ids_(std::move(identities)) {
    const int no = static_cast<int>(objects_.size());
    const int nm = static_cast<int>(morphisms_.size());
    if (static_cast<int>(ids_.size()) != no)
      throw InputError("category: need exactly one identity per object");
    for (const auto& m : morphisms_)
      if (m.dom < 0 || m.dom >= no || m.cod < 0 || m.cod >= no)
        throw InputError("category: morphism '" + m.name + "' has an out-of-range endpoint");
    for (int o = 0; o < no; ++o) {
      const int id = ids_[static_cast<std::size_t>(o)];
      if (id < 0 || id >= nm) throw InputError("category: identity index out of range");
      if (morphisms_[static_cast<std::size_t>(id)].dom != o || morphisms_[static_cast<std::size_t>(id)].cod != o)
        throw InputError("category: identity of '" + objects_[static_cast<std::size_t>(o)] +
                         "' is not an endomorphism of it");
    }
    table_.assign(static_cast<std::size_t>(nm) * static_cast<std::size_t>(nm), -1);
    auto set = [&](int g, int f, int gf) {
      if (g < 0 || g >= nm || f < 0 || f >= nm || gf < 0 || gf >= nm)
        throw InputError("category: composition entry out of range");
      const auto& mg = morphisms_[static_cast<std::size_t>(g)];
      const auto& mf = morphisms_[static_cast<std::size_t>(f)];
      const auto& mgf = morphisms_[static_cast<std::size_t>(gf)];
      if (mf.cod != mg.dom)
        throw InputError("category: composite " + mg.name + " o " + mf.name + " is not composable");
      if (mgf.dom != mf.dom || mgf.cod != mg.cod)
        throw InputError("category: composite " + mg.name + " o " + mf.name + " = " + mgf.name +
                         " has the wrong endpoints");
      int& slot = table_[idx(g, f)];
      if (slot != -1 && slot != gf)
        throw InputError("category: conflicting composites for " + mg.name + " o " + mf.name);
      slot = gf;
    };
    for (const auto& [g, f, gf] : comp) set(g, f, gf);
    for (int f = 0; f < nm; ++f) {
      const auto& mf = morphisms_[static_cast<std::size_t>(f)];
      if (table_[idx(identity(mf.cod), f)] == -1) set(identity(mf.cod), f, f);
      if (table_[idx(f, identity(mf.dom))] == -1) set(f, identity(mf.dom), f);
    }
    for (int g = 0; g < nm; ++g)
      for (int f = 0; f < nm; ++f) {
        const bool composable = morphisms_[static_cast<std::size_t>(f)].cod == morphisms_[static_cast<std::size_t>(g)].dom;
        if (composable && table_[idx(g, f)] == -1)
          throw InputError("category: missing composite " + morphisms_[static_cast<std::size_t>(g)].name + " o " +
                           morphisms_[static_cast<std::size_t>(f)].name);
      }
    for (int f = 0; f < nm; ++f) {
      const auto& mf = morphisms_[static_cast<std::size_t>(f)];
      if (compose(identity(mf.cod), f) != f || compose(f, identity(mf.dom)) != f)
        throw InputError("category: identity law fails at " + mf.name);
    }
    for (int f = 0; f < nm; ++f)
      for (int g = 0; g < nm; ++g) {
        const int gf = compose(g, f);
        if (gf < 0) continue;
        for (int h = 0; h < nm; ++h) {
          const int hg = compose(h, g);
          if (hg < 0) continue;
          if (compose(h, gf) != compose(hg, f))
            throw InputError("category: associativity fails at (" + name(h) + ", " + name(g) + ", " +
                             name(f) + ")");
        }
      }
  }

  std::size_t object_count() const { return objects_.size(); }
  std::size_t morphism_count() const { return morphisms_.size(); }
  const std::string& object_name(int o) const { return objects_[static_cast<std::size_t>(o)]; }
  const std::vector<std::string>& objects() const { return objects_; }
  const std::vector<Morphism>& morphisms() const { return morphisms_; }
  const Morphism& morphism(int f) const { return morphisms_[static_cast<std::size_t>(f)]; }
  const std::string& name(int f) const { return morphism(f).name; }
  int dom(int f) const { return morphism(f).dom; }
  int cod(int f) const { return morphism(f).cod; }
  int identity(int o) const { return ids_[static_cast<std::size_t>(o)]; }
  const std::vector<int>& identities() const { return ids_; }
  bool is_identity(int f) const { return identity(dom(f)) == f; }
  /// g ∘ f, or -1 when cod(f) != dom(g).
  int compose(int g, int f) const { return table_[idx(g, f)]; }
  std::vector<int> hom(int a, int b) const {
    std::vector<int> out;
    for (int f = 0; f < static_cast<int>(morphisms_.size()); ++f)
      if (dom(f) == a && cod(f) == b) out.push_back(f);
    return out;
  }
  /// Every composable (g, f, g∘f), sorted.
  std::vector<std::array<int, 3>> composition_table() const {
    std::vector<std::array<int, 3>> out;
    const int nm = static_cast<int>(morphisms_.size());
    for (int g = 0; g < nm; ++g)
      for (int f = 0; f < nm; ++f)
        if (compose(g, f) >= 0) out.push_back({g, f, compose(g, f)});
    return out;
  }

 private:
  std::size_t idx(int g, int f) const {
    return static_cast<std::size_t>(g) * morphisms_.size() + static_cast<std::size_t>(f);
  }

  std::vector<std::string> objects_;
  std::vector<Morphism> morphisms_;
  std::vector<int> ids_;
  std::vector<int> table_;
};

// ---------------------------------------------------------------------------
// Constructors and the shipped catalogue.

/// The poset on `names` with x <= y iff leq(x, y).  Morphisms are "id_x"
/// for identities and "x<y" otherwise.  `leq` must be a partial order.
template <class Leq>
FiniteCategory poset_category(const std::vector<std::string>& names, Leq&& leq) {
  const int n = static_cast<int>(names.size());
  std::vector<Morphism> mor;
  std::vector<int> ids(static_cast<std::size_t>(n));
  std::map<std::pair<int, int>, int> arrow;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (leq(x, y)) {
        const auto ux = static_cast<std::size_t>(x);
        arrow[{x, y}] = static_cast<int>(mor.size());
        if (x == y) ids[ux] = static_cast<int>(mor.size());
        mor.push_back({x == y ? "id_" + names[ux] : names[ux] + "<" + names[static_cast<std::size_t>(y)], x, y});
      }
  std::vector<std::array<int, 3>> comp;
  for (const auto& [xy, f] : arrow)
    for (const auto& [yz, g] : arrow)
      if (xy.second == yz.first) {
        auto it = arrow.find({xy.first, yz.second});
        if (it == arrow.end()) throw InputError("poset_category: relation is not transitive");
        comp.push_back({g, f, it->second});
      }
  return FiniteCategory(names, std::move(mor), std::move(ids), comp);
}

/// The ordinal [n] = {0 < 1 < ... < n} as a category.
inline FiniteCategory poset_chain(int n) {
  std::vector<std::string> names;
  for (int i = 0; i <= n; ++i) names.push_back(std::to_string(i));
  return poset_category(names, [](int x, int y) { return x <= y; });
}

inline FiniteCategory discrete_category(int k) {
  std::vector<std::string> names;
  for (int i = 0; i < k; ++i) names.push_back("x" + std::to_string(i));
  return poset_category(names, [](int x, int y) { return x == y; });
}

/// A one-object category from a finite monoid given by its multiplication
/// table (element 0 is the unit, mult[a][b] = a·b meaning "a after b").
inline FiniteCategory monoid_category(const std::vector<std::string>& elements,
                                      const std::vector<std::vector<int>>& mult) {
  std::vector<Morphism> mor;
  for (const auto& e : elements) mor.push_back({e, 0, 0});
  std::vector<std::array<int, 3>> comp;
  for (int a = 0; a < static_cast<int>(elements.size()); ++a)
    for (int b = 0; b < static_cast<int>(elements.size()); ++b)
      comp.push_back({a, b, mult[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]});
  return FiniteCategory({"*"}, std::move(mor), {0}, comp);
}

namespace catalogue {

inline FiniteCategory terminal() { return poset_chain(0); }

/// a -> b
inline FiniteCategory arrow() {
  return FiniteCategory({"a", "b"}, {{"id_a", 0, 0}, {"id_b", 1, 1}, {"f", 0, 1}}, {0, 1}, {});
}

/// 0 < 1 < 2 < 3
inline FiniteCategory chain3() { return poset_chain(3); }

/// The commutative square a < b, a < c, b < d, c < d.
inline FiniteCategory square() {
  return poset_category({"a", "b", "c", "d"}, [](int x, int y) {
    if (x == y || x == 0 || y == 3) return true;
    return false;
  });
}

/// Z/2 as a one-object groupoid: e is the unit, g∘g = e.
inline FiniteCategory z2() { return monoid_category({"e", "g"}, {{0, 1}, {1, 0}}); }

/// The monoid {1, z} with z∘z = z.
inline FiniteCategory idempotent() { return monoid_category({"1", "z"}, {{0, 1}, {1, 1}}); }

/// Two parallel arrows f, g : a -> b.
inline FiniteCategory parallel() {
  return FiniteCategory({"a", "b"}, {{"id_a", 0, 0}, {"id_b", 1, 1}, {"f", 0, 1}, {"g", 0, 1}}, {0, 1}, {});
}

inline std::vector<std::pair<std::string, FiniteCategory>> all() {
  return {{"terminal", terminal()}, {"arrow", arrow()},         {"chain3", chain3()},
          {"square", square()},     {"z2", z2()},               {"idempotent", idempotent()},
          {"parallel", parallel()}};
}

inline std::optional<FiniteCategory> by_name(const std::string& name) {
  for (auto& [n, c] : all())
    if (n == name) return c;
  return std::nullopt;
}

}  // namespace catalogue

/// The poset of subsets of {v_0, ..., v_{n-1}} ordered by inclusion.
inline FiniteCategory subset_lattice(const std::vector<std::string>& vars) {
  const int n = static_cast<int>(vars.size());
  std::vector<std::string> names;
  for (int m = 0; m < (1 << n); ++m) {
    std::string s = "{";
    for (int v = 0; v < n; ++v)
      if (m & (1 << v)) {
        if (s.size() > 1) s += ",";
        s += vars[static_cast<std::size_t>(v)];
      }
    names.push_back(s + "}");
  }
  return poset_category(names, [](int x, int y) { return (x & y) == x; });
}

// ---------------------------------------------------------------------------
// Chains and the nerve.

struct Chain {
  std::vector<int> objects;    // C_0, ..., C_n
  std::vector<int> morphisms;  // f_1, ..., f_n
};

inline bool is_valid_chain(const FiniteCategory& c, const Chain& ch) {
  if (ch.objects.size() != ch.morphisms.size() + 1) return false;
  for (std::size_t i = 0; i < ch.morphisms.size(); ++i)
    if (c.dom(ch.morphisms[i]) != ch.objects[i] || c.cod(ch.morphisms[i]) != ch.objects[i + 1]) return false;
  return true;
}

inline bool is_degenerate_chain(const FiniteCategory& c, const Chain& ch) {
  if (!is_valid_chain(c, ch)) throw InputError("is_degenerate_chain: chain is not composable");
  return std::any_of(ch.morphisms.begin(), ch.morphisms.end(), [&](int f) { return c.is_identity(f); });
}

/// The nerve together with the chain carried by each simplex.
struct Nerve {
  SimplicialSet sset;
  /// chains[n][x] = (f_1, ..., f_n) for n >= 1; chains[0][x] = {} (vertex x is object x).
  std::vector<std::vector<std::vector<int>>> chains;
  std::vector<std::map<std::vector<int>, int>> index;

  int index_of(const std::vector<int>& morphs) const {
    auto it = index.at(morphs.size()).find(morphs);
    return it == index.at(morphs.size()).end() ? -1 : it->second;
  }
  Chain chain(const FiniteCategory& c, int dim, int x) const {
    Chain ch;
    if (dim == 0) {
      ch.objects.push_back(x);
      return ch;
    }
    ch.morphisms = chains[static_cast<std::size_t>(dim)][static_cast<std::size_t>(x)];
    ch.objects.push_back(c.dom(ch.morphisms.front()));
    for (int f : ch.morphisms) ch.objects.push_back(c.cod(f));
    return ch;
  }
};

inline std::string chain_label(const FiniteCategory& c, const std::vector<int>& morphs) {
  std::string s;
  for (int f : morphs) {
    if (!s.empty()) s += "|";
    s += c.name(f);
  }
  return s;
}

/// N(C) truncated at `trunc`.  n-simplices are the composable chains of
/// length n in lexicographic order of morphism indices.  d_0 drops f_1, d_n
/// drops f_n, an inner d_i composes f_{i+1} ∘ f_i, and s_i inserts the
/// identity of C_i.
inline Nerve build_nerve(const FiniteCategory& c, int trunc) {
  if (trunc < 0) throw InputError("nerve: negative truncation");
  Nerve nv;
  const auto dims = static_cast<std::size_t>(trunc) + 1;
  nv.chains.resize(dims);
  nv.index.resize(dims);
  for (int o = 0; o < static_cast<int>(c.object_count()); ++o) nv.chains[0].push_back({});
  for (std::size_t n = 1; n < dims; ++n) {
    if (n == 1) {
      for (int f = 0; f < static_cast<int>(c.morphism_count()); ++f) nv.chains[1].push_back({f});
    } else {
      for (const auto& prefix : nv.chains[n - 1])
        for (int f = 0; f < static_cast<int>(c.morphism_count()); ++f)
          if (c.dom(f) == c.cod(prefix.back())) {
            auto ch = prefix;
            ch.push_back(f);
            nv.chains[n].push_back(std::move(ch));
          }
    }
    for (std::size_t x = 0; x < nv.chains[n].size(); ++x) nv.index[n][nv.chains[n][x]] = static_cast<int>(x);
  }

  SimplicialSet::Tables t;
  t.trunc_dim = trunc;
  t.labels.resize(dims);
  t.faces.resize(dims);
  t.degeneracies.resize(dims - 1);
  for (std::size_t n = 0; n < dims; ++n) {
    for (std::size_t x = 0; x < nv.chains[n].size(); ++x) {
      const auto& ch = nv.chains[n][x];
      t.labels[n].push_back(n == 0 ? c.object_name(static_cast<int>(x)) : chain_label(c, ch));
      auto& fr = t.faces[n].emplace_back();
      if (n == 1) {
        fr = {c.cod(ch[0]), c.dom(ch[0])};
      } else if (n >= 2) {
        for (std::size_t i = 0; i <= n; ++i) {
          std::vector<int> face;
          if (i == 0) {
            face.assign(ch.begin() + 1, ch.end());
          } else if (i == n) {
            face.assign(ch.begin(), ch.end() - 1);
          } else {
            face.assign(ch.begin(), ch.begin() + static_cast<long>(i) - 1);
            face.push_back(c.compose(ch[i], ch[i - 1]));
            face.insert(face.end(), ch.begin() + static_cast<long>(i) + 1, ch.end());
          }
          fr.push_back(nv.index[n - 1].at(face));
        }
      }
      if (n + 1 < dims) {
        auto& dr = t.degeneracies[n].emplace_back();
        if (n == 0) {
          dr.push_back(nv.index[1].at({c.identity(static_cast<int>(x))}));
        } else {
          for (std::size_t i = 0; i <= n; ++i) {
            const int obj = i < n ? c.dom(ch[i]) : c.cod(ch[n - 1]);
            std::vector<int> d(ch.begin(), ch.begin() + static_cast<long>(i));
            d.push_back(c.identity(obj));
            d.insert(d.end(), ch.begin() + static_cast<long>(i), ch.end());
            dr.push_back(nv.index[n + 1].at(d));
          }
        }
      }
    }
  }
  nv.sset = SimplicialSet(std::move(t));
  return nv;
}

inline SimplicialSet nerve(const FiniteCategory& c, int trunc) { return build_nerve(c, trunc).sset; }

// ---------------------------------------------------------------------------
// Functors.

struct Functor {
  std::vector<int> object_map;
  std::vector<int> morphism_map;
  friend bool operator==(const Functor&, const Functor&) = default;
};

/// Human-readable list of every way `f` fails to be a functor c -> d.
inline std::vector<std::string> check_functor(const FiniteCategory& c, const FiniteCategory& d, const Functor& f) {
  std::vector<std::string> out;
  if (f.object_map.size() != c.object_count() || f.morphism_map.size() != c.morphism_count()) {
    out.push_back("functor maps have the wrong size");
    return out;
  }
  auto F = [&](int m) { return f.morphism_map[static_cast<std::size_t>(m)]; };
  auto Fo = [&](int o) { return f.object_map[static_cast<std::size_t>(o)]; };
  for (int o = 0; o < static_cast<int>(c.object_count()); ++o)
    if (F(c.identity(o)) != d.identity(Fo(o))) out.push_back("identity of " + c.object_name(o) + " not preserved");
  for (int m = 0; m < static_cast<int>(c.morphism_count()); ++m)
    if (d.dom(F(m)) != Fo(c.dom(m)) || d.cod(F(m)) != Fo(c.cod(m)))
      out.push_back("endpoints of " + c.name(m) + " not preserved");
  for (const auto& [g, h, gh] : c.composition_table())
    if (d.compose(F(g), F(h)) != F(gh)) out.push_back("composite " + c.name(g) + " o " + c.name(h) + " not preserved");
  return out;
}

/// Every functor c -> d, object maps in lexicographic order, then morphism
/// maps in lexicographic order.  `node_budget` caps the assignments tried.
inline std::vector<Functor> enumerate_functors(const FiniteCategory& c, const FiniteCategory& d,
                                               std::size_t node_budget = 10'000'000) {
  std::vector<Functor> out;
  const int no = static_cast<int>(c.object_count());
  const int nm = static_cast<int>(c.morphism_count());
  std::vector<std::vector<std::array<int, 3>>> checks_at(static_cast<std::size_t>(nm));
  for (const auto& tr : c.composition_table())
    checks_at[static_cast<std::size_t>(std::max({tr[0], tr[1], tr[2]}))].push_back(tr);
  Functor f;
  f.object_map.assign(static_cast<std::size_t>(no), -1);
  f.morphism_map.assign(static_cast<std::size_t>(nm), -1);
  std::size_t nodes = 0;
  auto tick = [&] {
    if (++nodes > node_budget)
      throw BoundExceeded("functor enumeration: explored more than " + std::to_string(node_budget) + " assignments");
  };
  if (d.object_count() == 0) {
    if (no == 0) out.push_back(f);
    return out;
  }

  auto morph_step = [&](auto&& self, int m) -> void {
    if (m == nm) {
      out.push_back(f);
      return;
    }
    const int a = f.object_map[static_cast<std::size_t>(c.dom(m))];
    const int b = f.object_map[static_cast<std::size_t>(c.cod(m))];
    std::vector<int> cands;
    if (c.is_identity(m))
      cands = {d.identity(a)};
    else
      cands = d.hom(a, b);
    for (int img : cands) {
      tick();
      f.morphism_map[static_cast<std::size_t>(m)] = img;
      bool ok = true;
      for (const auto& [g, h, gh] : checks_at[static_cast<std::size_t>(m)])
        if (d.compose(f.morphism_map[static_cast<std::size_t>(g)], f.morphism_map[static_cast<std::size_t>(h)]) !=
            f.morphism_map[static_cast<std::size_t>(gh)]) {
          ok = false;
          break;
        }
      if (ok) self(self, m + 1);
    }
    f.morphism_map[static_cast<std::size_t>(m)] = -1;
  };
  auto obj_step = [&](auto&& self, int o) -> void {
    if (o == no) {
      morph_step(morph_step, 0);
      return;
    }
    for (int img = 0; img < static_cast<int>(d.object_count()); ++img) {
      tick();
      f.object_map[static_cast<std::size_t>(o)] = img;
      self(self, o + 1);
    }
  };
  obj_step(obj_step, 0);
  return out;
}

/// θ(F): the simplicial map N(c) -> N(d) sending (f_1, ..., f_n) to
/// (F f_1, ..., F f_n).
inline Assignment nerve_of_functor(const FiniteCategory& c, const Nerve& nc, const Nerve& nd, const Functor& f) {
  Assignment a(nc.chains.size());
  for (std::size_t n = 0; n < nc.chains.size(); ++n)
    for (std::size_t x = 0; x < nc.chains[n].size(); ++x) {
      if (n == 0) {
        a[0].push_back(f.object_map[x]);
        continue;
      }
      std::vector<int> img;
      for (int m : nc.chains[n][x]) img.push_back(f.morphism_map[static_cast<std::size_t>(m)]);
      a[n].push_back(nd.index_of(img));
    }
  (void)c;
  return a;
}

struct NerveBijectionReport {
  int trunc = 0;
  std::size_t functors = 0;
  std::size_t simplicial_maps = 0;
  bool images_are_maps = true;
  bool injective = true;
  bool surjective = true;
  /// Enumerated simplicial maps that no functor produces (indices into the
  /// enumeration order).
  std::vector<std::size_t> unmatched_maps;
  bool bijection() const { return images_are_maps && injective && surjective; }
};

/// Enumerates Fun(c, d) and Hom(N(c), N(d)) (within `trunc`) and checks that
/// θ is a bijection between them.
inline NerveBijectionReport nerve_hom_bijection_check(const FiniteCategory& c, const FiniteCategory& d, int trunc,
                                                      std::size_t node_budget = 10'000'000) {
  if (trunc < 2) throw InputError("nerve_hom_bijection_check: trunc must be >= 2");
  NerveBijectionReport rep;
  rep.trunc = trunc;
  const Nerve nc = build_nerve(c, trunc);
  const Nerve nd = build_nerve(d, trunc);
  const auto src = share(nc.sset);
  const auto dst = share(nd.sset);
  const auto functors = enumerate_functors(c, d, node_budget);
  rep.functors = functors.size();
  std::set<Assignment> images;
  for (const auto& f : functors) {
    Assignment a = nerve_of_functor(c, nc, nd, f);
    bool ok = true;
    for (const auto& row : a)
      for (int v : row) ok = ok && v >= 0;
    if (!ok || !check_simplicial_map(SimplicialMap(src, dst, a)).empty()) rep.images_are_maps = false;
    if (!images.insert(std::move(a)).second) rep.injective = false;
  }
  std::size_t k = 0;
  for_each_map(nc.sset, nd.sset, {}, [&](const Assignment& a) {
    ++rep.simplicial_maps;
    if (!images.count(a)) {
      rep.surjective = false;
      rep.unmatched_maps.push_back(k);
    }
    ++k;
    return true;
  }, {.node_budget = node_budget});
  if (rep.simplicial_maps != images.size()) rep.surjective = rep.surjective && rep.simplicial_maps >= images.size();
  if (rep.simplicial_maps < images.size()) rep.images_are_maps = false;
  return rep;
}

/// A functor c -> d that is bijective on objects and morphisms, if any.
inline std::optional<Functor> find_isomorphism(const FiniteCategory& c, const FiniteCategory& d) {
  if (c.object_count() != d.object_count() || c.morphism_count() != d.morphism_count()) return std::nullopt;
  for (const auto& f : enumerate_functors(c, d)) {
    auto ob = f.object_map;
    auto mo = f.morphism_map;
    std::sort(ob.begin(), ob.end());
    std::sort(mo.begin(), mo.end());
    if (std::adjacent_find(ob.begin(), ob.end()) == ob.end() && std::adjacent_find(mo.begin(), mo.end()) == mo.end())
      return f;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Homotopy category.

struct HomotopyOptions {
  /// Longest composition word considered during congruence closure.
  int word_cap = 8;
  /// Maximum number of words materialized.
  std::size_t word_budget = 500'000;
};

/// The category presented by the 1-skeleton of `x` (objects X_0, generators
/// the nondegenerate edges) modulo d_1 σ = d_0 σ ∘ d_2 σ for every σ ∈ X_2
/// and s_0 a = id_a.  The congruence is closed over words of length up to
/// `word_cap`; if the quotient does not visibly stabilize inside that
/// window, BoundExceeded is thrown.  Morphism names list generator labels
/// in path order joined by ';' (so "f;g" is g∘f).
inline FiniteCategory homotopy_category(const SimplicialSet& x, HomotopyOptions opt = {}) {
  if (x.trunc_dim() < 2) throw InputError("homotopy_category: need trunc_dim >= 2");
  const int nv = static_cast<int>(x.count(0));
  struct Path {
    int start;
    std::vector<int> gens;
    auto operator<=>(const Path&) const = default;
  };
  const auto gens = x.nondegenerate(1);
  auto src = [&](int e) { return x.face(1, e, 1); };
  auto tgt = [&](int e) { return x.face(1, e, 0); };
  auto end_of = [&](const Path& p) { return p.gens.empty() ? p.start : tgt(p.gens.back()); };

  std::vector<Path> words;
  std::map<Path, int> id_of;
  auto add = [&](Path p) {
    if (words.size() >= opt.word_budget)
      throw BoundExceeded("homotopy_category: more than " + std::to_string(opt.word_budget) + " words");
    id_of[p] = static_cast<int>(words.size());
    words.push_back(std::move(p));
  };
  for (int v = 0; v < nv; ++v) add({v, {}});
  std::size_t level_begin = 0;
  for (int len = 1; len <= opt.word_cap; ++len) {
    const std::size_t level_end = words.size();
    for (std::size_t w = level_begin; w < level_end; ++w)
      for (int e : gens)
        if (src(e) == end_of(words[w])) {
          Path p = words[w];
          p.gens.push_back(e);
          add(std::move(p));
        }
    level_begin = level_end;
  }

  std::vector<int> parent(words.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[static_cast<std::size_t>(a)] != a) a = parent[static_cast<std::size_t>(a)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
    return a;
  };
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  };

  // Relations as (start vertex, lhs generators, rhs generators).
  auto edge_word = [&](int e) { return x.is_degenerate(1, e) ? std::vector<int>{} : std::vector<int>{e}; };
  std::set<std::tuple<int, std::vector<int>, std::vector<int>>> rels;
  for (int s = 0; s < static_cast<int>(x.count(2)); ++s) {
    const int e01 = x.face(2, s, 2), e12 = x.face(2, s, 0), e02 = x.face(2, s, 1);
    auto lhs = edge_word(e01);
    auto tail = edge_word(e12);
    lhs.insert(lhs.end(), tail.begin(), tail.end());
    auto rhs = edge_word(e02);
    if (lhs == rhs) continue;
    const int v0 = src(e01);
    rels.insert({v0, lhs, rhs});
    rels.insert({v0, rhs, lhs});
  }
  for (const auto& w : words)
    for (const auto& [v0, from, to] : rels) {
      if (from.empty() || from.size() > w.gens.size()) continue;
      for (std::size_t p = 0; p + from.size() <= w.gens.size(); ++p) {
        if (!std::equal(from.begin(), from.end(), w.gens.begin() + static_cast<long>(p))) continue;
        Path r{w.start, {}};
        r.gens.assign(w.gens.begin(), w.gens.begin() + static_cast<long>(p));
        r.gens.insert(r.gens.end(), to.begin(), to.end());
        r.gens.insert(r.gens.end(), w.gens.begin() + static_cast<long>(p + from.size()), w.gens.end());
        if (static_cast<int>(r.gens.size()) > opt.word_cap) continue;
        if (r.gens.empty() && r.start != v0) r.start = v0;
        auto it = id_of.find(r);
        if (it != id_of.end()) unite(id_of.at(w), it->second);
      }
      // An empty side may be inserted at any point where its vertex sits.
      if (from.empty()) {
        std::vector<int> verts{w.start};
        for (int e : w.gens) verts.push_back(tgt(e));
        for (std::size_t p = 0; p < verts.size(); ++p) {
          if (verts[p] != v0) continue;
          Path r{w.start, {}};
          r.gens.assign(w.gens.begin(), w.gens.begin() + static_cast<long>(p));
          r.gens.insert(r.gens.end(), to.begin(), to.end());
          r.gens.insert(r.gens.end(), w.gens.begin() + static_cast<long>(p), w.gens.end());
          if (static_cast<int>(r.gens.size()) > opt.word_cap) continue;
          auto it = id_of.find(r);
          if (it != id_of.end()) unite(id_of.at(w), it->second);
        }
      }
    }

  // Shortest representative length per class.
  std::map<int, int> shortest;
  for (int w = 0; w < static_cast<int>(words.size()); ++w) {
    const int r = find(w);
    const int len = static_cast<int>(words[static_cast<std::size_t>(w)].gens.size());
    auto it = shortest.find(r);
    if (it == shortest.end() || len < it->second) shortest[r] = len;
  }
  int stable = -1;
  for (int l = 0; 2 * l <= opt.word_cap && l + 1 <= opt.word_cap; ++l) {
    bool all_reduce = true;
    for (int w = 0; w < static_cast<int>(words.size()) && all_reduce; ++w)
      if (static_cast<int>(words[static_cast<std::size_t>(w)].gens.size()) == l + 1 && shortest[find(w)] > l)
        all_reduce = false;
    if (all_reduce) {
      stable = l;
      break;
    }
  }
  if (stable < 0)
    throw BoundExceeded("homotopy_category: congruence did not stabilize within word length " +
                        std::to_string(opt.word_cap));

  // Morphisms: classes with a representative of length <= stable, ordered
  // by their shortlex-least representative (words are generated in that order).
  std::map<int, int> morph_of_class;
  std::vector<Morphism> mor;
  std::vector<int> rep_word;
  for (int w = 0; w < static_cast<int>(words.size()); ++w) {
    const auto& p = words[static_cast<std::size_t>(w)];
    if (static_cast<int>(p.gens.size()) > stable) continue;
    const int r = find(w);
    if (morph_of_class.count(r)) continue;
    morph_of_class[r] = static_cast<int>(mor.size());
    rep_word.push_back(w);
    std::string nm;
    if (p.gens.empty()) {
      nm = "id_" + x.label(0, p.start);
    } else {
      for (int e : p.gens) {
        if (!nm.empty()) nm += ";";
        nm += x.label(1, e);
      }
    }
    mor.push_back({nm, p.start, end_of(p)});
  }
  std::vector<int> ids(static_cast<std::size_t>(nv));
  for (int v = 0; v < nv; ++v) ids[static_cast<std::size_t>(v)] = morph_of_class.at(find(id_of.at(Path{v, {}})));
  std::vector<std::array<int, 3>> comp;
  for (int f = 0; f < static_cast<int>(mor.size()); ++f)
    for (int g = 0; g < static_cast<int>(mor.size()); ++g) {
      if (mor[static_cast<std::size_t>(f)].cod != mor[static_cast<std::size_t>(g)].dom) continue;
      Path p = words[static_cast<std::size_t>(rep_word[static_cast<std::size_t>(f)])];
      const auto& pg = words[static_cast<std::size_t>(rep_word[static_cast<std::size_t>(g)])].gens;
      p.gens.insert(p.gens.end(), pg.begin(), pg.end());
      auto it = id_of.find(p);
      if (it == id_of.end()) throw BoundExceeded("homotopy_category: composite outside word window");
      auto m = morph_of_class.find(find(it->second));
      if (m == morph_of_class.end())
        throw BoundExceeded("homotopy_category: composite has no short representative");
      comp.push_back({g, f, m->second});
    }
  std::vector<std::string> objs;
  for (int v = 0; v < nv; ++v) objs.push_back(x.label(0, v));
  return FiniteCategory(std::move(objs), std::move(mor), std::move(ids), comp);
}

}  // namespace simpdisc
