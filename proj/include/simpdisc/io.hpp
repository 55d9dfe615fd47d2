#pragma once
//
// JSON interchange documents.  Readers validate every type invariant at
// load time and report the offending field path.
//

#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "simpdisc/causal.hpp"
#include "simpdisc/error.hpp"
#include "simpdisc/fincat.hpp"
#include "simpdisc/linalg.hpp"
#include "simpdisc/psr.hpp"
#include "simpdisc/sset.hpp"

namespace simpdisc::io {

using json = nlohmann::json;

inline json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path + ": cannot open file");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

inline json parse_json_text(const std::string& text, const std::string& what = "document") {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(what + ": " + e.what());
  }
}

namespace detail {

inline const json& field(const json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) throw InputError(path + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(path + ": missing field '" + key + "'");
  return *it;
}

inline const json& array(const json& j, const std::string& path) {
  if (!j.is_array()) throw InputError(path + ": expected an array");
  return j;
}

inline int integer(const json& j, const std::string& path) {
  if (!j.is_number_integer()) throw InputError(path + ": expected an integer");
  return j.get<int>();
}

inline std::string string(const json& j, const std::string& path) {
  if (!j.is_string()) throw InputError(path + ": expected a string");
  return j.get<std::string>();
}

inline std::vector<std::string> strings(const json& j, const std::string& path) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < array(j, path).size(); ++i) out.push_back(string(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

/// Index of `j` in `names` (if a string) or `j` itself (if an integer).
inline int index(const json& j, const std::vector<std::string>& names, const std::string& path) {
  if (j.is_number_integer()) {
    const int v = j.get<int>();
    if (v < 0 || v >= static_cast<int>(names.size())) throw InputError(path + ": index out of range");
    return v;
  }
  const auto s = string(j, path);
  int found = -1;
  for (int i = 0; i < static_cast<int>(names.size()); ++i)
    if (names[static_cast<std::size_t>(i)] == s) {
      if (found >= 0) throw InputError(path + ": name '" + s + "' is ambiguous; use an index");
      found = i;
    }
  if (found < 0) throw InputError(path + ": unknown name '" + s + "'");
  return found;
}

}  // namespace detail

/// "p/q", an integer, or a finite decimal ("0.25", "-1.5e-2"); JSON numbers
/// are read through their shortest decimal text.
inline Rational parse_rational(const json& j, const std::string& path) {
  std::string s;
  if (j.is_string())
    s = j.get<std::string>();
  else if (j.is_number())
    s = j.dump();
  else
    throw InputError(path + ": expected a number or rational string");
  try {
    auto slash = s.find('/');
    if (slash != std::string::npos) {
      Integer n(s.substr(0, slash)), d(s.substr(slash + 1));
      if (d == 0) throw InputError(path + ": zero denominator");
      return Rational(n, d);
    }
    std::size_t epos = s.find_first_of("eE");
    long long exp10 = 0;
    std::string mant = s;
    if (epos != std::string::npos) {
      exp10 = std::stoll(s.substr(epos + 1));
      mant = s.substr(0, epos);
    }
    bool neg = false;
    if (!mant.empty() && (mant[0] == '-' || mant[0] == '+')) {
      neg = mant[0] == '-';
      mant = mant.substr(1);
    }
    auto dot = mant.find('.');
    std::string digits = mant;
    if (dot != std::string::npos) {
      digits = mant.substr(0, dot) + mant.substr(dot + 1);
      exp10 -= static_cast<long long>(mant.size() - dot - 1);
    }
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
      throw InputError(path + ": malformed number '" + s + "'");
    // cpp_int reads a leading 0 as an octal prefix
    const auto nz = digits.find_first_not_of('0');
    Rational v{nz == std::string::npos ? Integer(0) : Integer(digits.substr(nz))};
    Integer ten = 1;
    for (long long k = 0; k < (exp10 < 0 ? -exp10 : exp10); ++k) ten *= 10;
    if (exp10 < 0)
      v /= ten;
    else
      v *= ten;
    return neg ? Rational(-v) : v;
  } catch (const InputError&) {
    throw;
  } catch (const std::exception&) {
    throw InputError(path + ": malformed number '" + s + "'");
  }
}

inline json rational_json(const Rational& q) {
  if (denominator(q) == 1 && abs(numerator(q)) < Integer(1) << 53) return json(numerator(q).convert_to<long long>());
  return json(to_string(q));
}

// ---------------------------------------------------------------------------
// Simplicial sets.

inline json to_json(const SimplicialSet& x) {
  const auto& t = x.tables();
  json faces = json::array();
  faces.push_back(json::array());
  for (int n = 1; n <= t.trunc_dim; ++n) faces.push_back(t.faces[static_cast<std::size_t>(n)]);
  return {{"trunc_dim", t.trunc_dim}, {"simplices", t.labels}, {"faces", faces}, {"degeneracies", t.degeneracies}};
}

/// With check = false the simplicial identities are left to the caller.
inline SimplicialSet sset_from_json(const json& j, const std::string& path = "sset", bool check = true) {
  SimplicialSet::Tables t;
  t.trunc_dim = detail::integer(detail::field(j, "trunc_dim", path), path + ".trunc_dim");
  if (t.trunc_dim < 0 || t.trunc_dim > 16) throw InputError(path + ".trunc_dim: must be in [0, 16]");
  const auto& sim = detail::array(detail::field(j, "simplices", path), path + ".simplices");
  for (std::size_t n = 0; n < sim.size(); ++n)
    t.labels.push_back(detail::strings(sim[n], path + ".simplices[" + std::to_string(n) + "]"));
  auto table = [&](const char* key, std::vector<std::vector<std::vector<int>>>& out) {
    const auto& arr = detail::array(detail::field(j, key, path), path + "." + key);
    for (std::size_t n = 0; n < arr.size(); ++n) {
      auto& dim = out.emplace_back();
      const auto p = path + "." + key + "[" + std::to_string(n) + "]";
      for (std::size_t s = 0; s < detail::array(arr[n], p).size(); ++s) {
        auto& row = dim.emplace_back();
        const auto ps = p + "[" + std::to_string(s) + "]";
        for (std::size_t i = 0; i < detail::array(arr[n][s], ps).size(); ++i)
          row.push_back(detail::integer(arr[n][s][i], ps + "[" + std::to_string(i) + "]"));
      }
    }
  };
  table("faces", t.faces);
  table("degeneracies", t.degeneracies);
  SimplicialSet x = [&] {
    try {
      return SimplicialSet(std::move(t));
    } catch (const InputError& e) {
      throw InputError(path + ": " + e.what());
    }
  }();
  if (!check) return x;
  const auto bad = check_identities(x);
  if (!bad.empty())
    throw InputError(path + ": simplicial identity " + bad[0].relation + " fails at dimension " +
                     std::to_string(bad[0].dim) + ", simplex " + std::to_string(bad[0].index) + " (i=" +
                     std::to_string(bad[0].i) + ", j=" + std::to_string(bad[0].j) + ")");
  return x;
}

inline json to_json(const SimplicialSubset& s) {
  json members = json::array();
  for (int n = 0; n <= s.ambient().trunc_dim(); ++n) members.push_back(s.members(n));
  return {{"ambient", to_json(s.ambient())}, {"members", members}};
}

// ---------------------------------------------------------------------------
// Categories.

inline json to_json(const FiniteCategory& c) {
  std::set<std::string> seen;
  bool unique = true;
  for (const auto& m : c.morphisms()) unique = unique && seen.insert(m.name).second;
  std::set<std::string> oseen;
  bool ounique = true;
  for (const auto& o : c.objects()) ounique = ounique && oseen.insert(o).second;
  auto mref = [&](int f) { return unique ? json(c.name(f)) : json(f); };
  auto oref = [&](int o) { return ounique ? json(c.object_name(o)) : json(o); };
  json mor = json::array();
  for (const auto& m : c.morphisms()) mor.push_back({{"name", m.name}, {"dom", oref(m.dom)}, {"cod", oref(m.cod)}});
  json ids = json::array();
  for (int o = 0; o < static_cast<int>(c.object_count()); ++o) ids.push_back(mref(c.identity(o)));
  json comp = json::array();
  for (const auto& [g, f, gf] : c.composition_table())
    if (!c.is_identity(g) && !c.is_identity(f)) comp.push_back({mref(g), mref(f), mref(gf)});
  return {{"objects", c.objects()}, {"morphisms", mor}, {"identities", ids}, {"comp", comp}};
}

inline FiniteCategory category_from_json(const json& j, const std::string& path = "category") {
  const auto objects = detail::strings(detail::field(j, "objects", path), path + ".objects");
  std::vector<Morphism> mor;
  const auto& ms = detail::array(detail::field(j, "morphisms", path), path + ".morphisms");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    const auto p = path + ".morphisms[" + std::to_string(i) + "]";
    Morphism m{detail::string(detail::field(ms[i], "name", p), p + ".name"),
               detail::index(detail::field(ms[i], "dom", p), objects, p + ".dom"),
               detail::index(detail::field(ms[i], "cod", p), objects, p + ".cod")};
    names.push_back(m.name);
    mor.push_back(std::move(m));
  }
  std::vector<int> ids;
  const auto& is = detail::array(detail::field(j, "identities", path), path + ".identities");
  for (std::size_t i = 0; i < is.size(); ++i) ids.push_back(detail::index(is[i], names, path + ".identities[" + std::to_string(i) + "]"));
  std::vector<std::array<int, 3>> comp;
  if (j.contains("comp")) {
    const auto& cs = detail::array(j["comp"], path + ".comp");
    for (std::size_t i = 0; i < cs.size(); ++i) {
      const auto p = path + ".comp[" + std::to_string(i) + "]";
      if (!cs[i].is_array() || cs[i].size() != 3) throw InputError(p + ": expected [g, f, g∘f]");
      comp.push_back({detail::index(cs[i][0], names, p + "[0]"), detail::index(cs[i][1], names, p + "[1]"),
                      detail::index(cs[i][2], names, p + "[2]")});
    }
  }
  try {
    return FiniteCategory(objects, std::move(mor), std::move(ids), comp);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

// ---------------------------------------------------------------------------
// DAGs, imsets and relations.

inline json to_json(const Dag& g) {
  json edges = json::array();
  for (const auto& [p, c] : g.edges()) edges.push_back({g.vars()[static_cast<std::size_t>(p)], g.vars()[static_cast<std::size_t>(c)]});
  return {{"vars", g.vars()}, {"edges", edges}};
}

inline Dag dag_from_json(const json& j, const std::string& path = "dag") {
  const auto vars = detail::strings(detail::field(j, "vars", path), path + ".vars");
  std::set<std::string> uniq(vars.begin(), vars.end());
  if (uniq.size() != vars.size()) throw InputError(path + ".vars: duplicate variable name");
  std::vector<std::pair<int, int>> edges;
  const auto& es = detail::array(detail::field(j, "edges", path), path + ".edges");
  for (std::size_t i = 0; i < es.size(); ++i) {
    const auto p = path + ".edges[" + std::to_string(i) + "]";
    if (!es[i].is_array() || es[i].size() != 2) throw InputError(p + ": expected [parent, child]");
    edges.push_back({detail::index(es[i][0], vars, p + "[0]"), detail::index(es[i][1], vars, p + "[1]")});
  }
  try {
    return Dag(vars, edges);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

inline json mask_json(Mask m, const std::vector<std::string>& vars) {
  json a = json::array();
  for (std::size_t v = 0; v < vars.size(); ++v)
    if (m & (Mask{1} << v)) a.push_back(vars[v]);
  return a;
}

inline Mask mask_from_json(const json& j, const std::vector<std::string>& vars, const std::string& path) {
  Mask m = 0;
  for (std::size_t i = 0; i < detail::array(j, path).size(); ++i)
    m |= Mask{1} << detail::index(j[i], vars, path + "[" + std::to_string(i) + "]");
  return m;
}

template <class Coeff>
json to_json(const BasicImset<Coeff>& u) {
  json e = json::array();
  for (const auto& [m, c] : u.entries()) {
    if constexpr (std::is_same_v<Coeff, Rational>)
      e.push_back({mask_json(m, u.vars()), rational_json(c)});
    else
      e.push_back({mask_json(m, u.vars()), c});
  }
  return {{"vars", u.vars()}, {"entries", e}};
}

/// Imset entries may be integers or rationals; the result is structural.
inline StructuralImset imset_from_json(const json& j, const std::string& path = "imset") {
  StructuralImset u(detail::strings(detail::field(j, "vars", path), path + ".vars"));
  const auto& es = detail::array(detail::field(j, "entries", path), path + ".entries");
  for (std::size_t i = 0; i < es.size(); ++i) {
    const auto p = path + ".entries[" + std::to_string(i) + "]";
    if (!es[i].is_array() || es[i].size() != 2) throw InputError(p + ": expected [subset, value]");
    u.add(mask_from_json(es[i][0], u.vars(), p + "[0]"), parse_rational(es[i][1], p + "[1]"));
  }
  return u;
}

inline json to_json(const TernaryRelation& r) {
  json car = json::array(), tr = json::array();
  for (Mask m : r.carrier()) car.push_back(mask_json(m, r.vars()));
  for (const auto& t : r.triples())
    tr.push_back(json::array({mask_json(t.x, r.vars()), mask_json(t.y, r.vars()), mask_json(t.z, r.vars())}));
  return {{"vars", r.vars()}, {"carrier", car}, {"triples", tr}};
}

/// Carrier defaults to the full subset lattice.  With "symmetric": true the
/// symmetric closure of the triples is taken.
inline TernaryRelation relation_from_json(const json& j, const std::string& path = "relation",
                                          const std::vector<std::string>* default_vars = nullptr) {
  std::vector<std::string> vars;
  if (j.contains("vars") || !default_vars)
    vars = detail::strings(detail::field(j, "vars", path), path + ".vars");
  else
    vars = *default_vars;
  if (vars.size() > 12) throw BoundExceeded(path + ": at most 12 variables");
  std::vector<Mask> carrier;
  if (j.contains("carrier")) {
    const auto& cs = detail::array(j["carrier"], path + ".carrier");
    for (std::size_t i = 0; i < cs.size(); ++i)
      carrier.push_back(mask_from_json(cs[i], vars, path + ".carrier[" + std::to_string(i) + "]"));
  } else {
    carrier = TernaryRelation::power_set(vars.size());
  }
  std::set<Triple> triples;
  const auto& ts = detail::array(detail::field(j, "triples", path), path + ".triples");
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const auto p = path + ".triples[" + std::to_string(i) + "]";
    if (!ts[i].is_array() || ts[i].size() != 3) throw InputError(p + ": expected [x, y, z]");
    triples.insert({mask_from_json(ts[i][0], vars, p + "[0]"), mask_from_json(ts[i][1], vars, p + "[1]"),
                    mask_from_json(ts[i][2], vars, p + "[2]")});
  }
  try {
    TernaryRelation r(vars, carrier, std::move(triples));
    if (j.value("symmetric", false)) return symmetric_closure(r);
    return r;
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

struct CausalFillDoc {
  CausalHorn horn;
  TernaryRelation ci;
};

inline EdgeMark edge_mark_from_string(const std::string& s, const std::string& path) {
  if (s == "forward") return EdgeMark::forward;
  if (s == "backward") return EdgeMark::backward;
  if (s == "absent") return EdgeMark::absent;
  if (s == "undetermined") return EdgeMark::undetermined;
  throw InputError(path + ": edge mark must be forward, backward, absent or undetermined");
}

/// {n, k, pattern: [[i, j, mark], ...], ci: relation over vertices "0".."n"}
inline CausalFillDoc causal_fill_from_json(const json& j, const std::string& path = "fill") {
  CausalHorn h;
  h.n = detail::integer(detail::field(j, "n", path), path + ".n");
  h.k = detail::integer(detail::field(j, "k", path), path + ".k");
  if (h.n < 1 || h.n > 4) throw InputError(path + ".n: must be in [1, 4]");
  if (h.k < 0 || h.k > h.n) throw InputError(path + ".k: out of range");
  const auto& ps = detail::array(detail::field(j, "pattern", path), path + ".pattern");
  for (std::size_t i = 0; i < ps.size(); ++i) {
    const auto p = path + ".pattern[" + std::to_string(i) + "]";
    if (!ps[i].is_array() || ps[i].size() != 3) throw InputError(p + ": expected [i, j, mark]");
    int a = detail::integer(ps[i][0], p + "[0]"), b = detail::integer(ps[i][1], p + "[1]");
    auto mark = edge_mark_from_string(detail::string(ps[i][2], p + "[2]"), p + "[2]");
    if (a == b || a < 0 || b < 0 || a > h.n || b > h.n) throw InputError(p + ": bad vertex pair");
    if (a > b) {
      std::swap(a, b);
      if (mark == EdgeMark::forward)
        mark = EdgeMark::backward;
      else if (mark == EdgeMark::backward)
        mark = EdgeMark::forward;
    }
    if (!h.pattern.emplace(std::make_pair(a, b), mark).second) throw InputError(p + ": edge listed twice");
  }
  std::vector<std::string> verts;
  for (int v = 0; v <= h.n; ++v) verts.push_back(std::to_string(v));
  auto ci = relation_from_json(detail::field(j, "ci", path), path + ".ci", &verts);
  return {std::move(h), std::move(ci)};
}

// ---------------------------------------------------------------------------
// POMDPs and MDPs.

namespace detail {
/// "pomdp: T[0][1]: ..." -> "T[0][1]: ..."
inline std::string strip_prefix(const std::string& msg) {
  for (const char* p : {"pomdp: ", "mdp: "})
    if (msg.rfind(p, 0) == 0) return msg.substr(std::char_traits<char>::length(p));
  return msg;
}

inline std::vector<Rational> rvec(const json& j, const std::string& path) {
  std::vector<Rational> out;
  for (std::size_t i = 0; i < array(j, path).size(); ++i) out.push_back(parse_rational(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}
inline std::vector<std::vector<std::vector<Rational>>> rtensor(const json& j, const std::string& path) {
  std::vector<std::vector<std::vector<Rational>>> out;
  for (std::size_t a = 0; a < array(j, path).size(); ++a) {
    auto& blk = out.emplace_back();
    const auto pa = path + "[" + std::to_string(a) + "]";
    for (std::size_t b = 0; b < array(j[a], pa).size(); ++b) blk.push_back(rvec(j[a][b], pa + "[" + std::to_string(b) + "]"));
  }
  return out;
}
inline json tensor_json(const std::vector<std::vector<std::vector<Rational>>>& t) {
  json out = json::array();
  for (const auto& blk : t) {
    json b = json::array();
    for (const auto& row : blk) {
      json r = json::array();
      for (const auto& q : row) r.push_back(rational_json(q));
      b.push_back(r);
    }
    out.push_back(b);
  }
  return out;
}
}  // namespace detail

inline json to_json(const Pomdp& m) {
  json b0 = json::array();
  for (const auto& q : m.b0) b0.push_back(rational_json(q));
  return {{"states", m.states}, {"actions", m.actions}, {"observations", m.observations},
          {"T", detail::tensor_json(m.T)}, {"Z", detail::tensor_json(m.Z)}, {"b0", b0}};
}

/// tol = 0: rows must sum to exactly 1; otherwise within tol.
inline Pomdp pomdp_from_json(const json& j, double tol = 0, const std::string& path = "pomdp") {
  Pomdp m;
  m.states = detail::strings(detail::field(j, "states", path), path + ".states");
  m.actions = detail::strings(detail::field(j, "actions", path), path + ".actions");
  m.observations = detail::strings(detail::field(j, "observations", path), path + ".observations");
  m.T = detail::rtensor(detail::field(j, "T", path), path + ".T");
  m.Z = detail::rtensor(detail::field(j, "Z", path), path + ".Z");
  m.b0 = detail::rvec(detail::field(j, "b0", path), path + ".b0");
  try {
    m.validate(tol);
  } catch (const InputError& e) {
    throw InputError(path + ": " + detail::strip_prefix(e.what()));
  }
  return m;
}

inline json to_json(const Mdp& m) {
  json psi = json::array(), R = json::array();
  bool all = true;
  for (std::size_t s = 0; s < m.n_states(); ++s) {
    json r = json::array();
    for (std::size_t a = 0; a < m.n_actions(); ++a) {
      if (m.admissible[s][a])
        psi.push_back({m.states[s], m.actions[a]});
      else
        all = false;
      r.push_back(rational_json(m.R[s][a]));
    }
    R.push_back(r);
  }
  json out = {{"states", m.states}, {"actions", m.actions}, {"P", detail::tensor_json(m.P)}, {"R", R}};
  if (!all) out["Psi"] = psi;
  return out;
}

inline Mdp mdp_from_json(const json& j, double tol = 0, const std::string& path = "mdp") {
  Mdp m;
  m.states = detail::strings(detail::field(j, "states", path), path + ".states");
  m.actions = detail::strings(detail::field(j, "actions", path), path + ".actions");
  m.P = detail::rtensor(detail::field(j, "P", path), path + ".P");
  const auto& R = detail::array(detail::field(j, "R", path), path + ".R");
  for (std::size_t s = 0; s < R.size(); ++s) m.R.push_back(detail::rvec(R[s], path + ".R[" + std::to_string(s) + "]"));
  if (j.contains("Psi")) {
    m.admissible.assign(m.states.size(), std::vector<bool>(m.actions.size(), false));
    const auto& ps = detail::array(j["Psi"], path + ".Psi");
    for (std::size_t i = 0; i < ps.size(); ++i) {
      const auto p = path + ".Psi[" + std::to_string(i) + "]";
      if (!ps[i].is_array() || ps[i].size() != 2) throw InputError(p + ": expected [state, action]");
      m.admissible[static_cast<std::size_t>(detail::index(ps[i][0], m.states, p + "[0]"))]
                  [static_cast<std::size_t>(detail::index(ps[i][1], m.actions, p + "[1]"))] = true;
    }
  } else {
    m.admissible.assign(m.states.size(), std::vector<bool>(m.actions.size(), true));
  }
  try {
    m.validate(tol);
  } catch (const InputError& e) {
    throw InputError(path + ": " + detail::strip_prefix(e.what()));
  }
  return m;
}

/// {state_map: {s: s'}, action_map: {s: {a: a'}}}
inline MdpHomomorphism mdp_hom_from_json(const json& j, const Mdp& src, const Mdp& dst,
                                         const std::string& path = "map") {
  MdpHomomorphism h;
  const auto& sm = detail::field(j, "state_map", path);
  const auto& am = detail::field(j, "action_map", path);
  if (!sm.is_object() || !am.is_object()) throw InputError(path + ": state_map and action_map must be objects");
  for (std::size_t s = 0; s < src.n_states(); ++s) {
    const auto& nm = src.states[s];
    const auto p = path + ".state_map." + nm;
    h.state_map.push_back(detail::index(detail::field(sm, nm, path + ".state_map"), dst.states, p));
    auto& row = h.action_map.emplace_back(src.n_actions(), -1);
    const auto& arow = detail::field(am, nm, path + ".action_map");
    for (std::size_t a = 0; a < src.n_actions(); ++a) {
      if (!src.admissible[s][a]) continue;
      row[a] = detail::index(detail::field(arow, src.actions[a], path + ".action_map." + nm),
                             dst.actions, path + ".action_map." + nm + "." + src.actions[a]);
    }
  }
  return h;
}

inline json to_json(const MdpHomomorphism& h, const Mdp& src, const Mdp& dst) {
  json sm = json::object(), am = json::object();
  for (std::size_t s = 0; s < src.n_states(); ++s) {
    sm[src.states[s]] = dst.states[static_cast<std::size_t>(h.state_map[s])];
    json row = json::object();
    for (std::size_t a = 0; a < src.n_actions(); ++a)
      if (h.action_map[s][a] >= 0) row[src.actions[a]] = dst.actions[static_cast<std::size_t>(h.action_map[s][a])];
    am[src.states[s]] = row;
  }
  return {{"state_map", sm}, {"action_map", am}};
}

struct PsrHomSpec {
  std::vector<int> action_map;
  std::vector<int> obs_map;
  int max_len = 2;
  int depth = 6;
};

/// {actions: {a: a'}, observations: {o: o'}, max_len, depth}
inline PsrHomSpec psr_hom_from_json(const json& j, const Pomdp& src, const Pomdp& dst,
                                    const std::string& path = "map") {
  PsrHomSpec spec;
  const auto& am = detail::field(j, "actions", path);
  const auto& om = detail::field(j, "observations", path);
  for (const auto& a : src.actions)
    spec.action_map.push_back(detail::index(detail::field(am, a, path + ".actions"), dst.actions, path + ".actions." + a));
  for (const auto& o : src.observations)
    spec.obs_map.push_back(detail::index(detail::field(om, o, path + ".observations"), dst.observations,
                                         path + ".observations." + o));
  if (j.contains("max_len")) spec.max_len = detail::integer(j["max_len"], path + ".max_len");
  if (j.contains("depth")) spec.depth = detail::integer(j["depth"], path + ".depth");
  if (spec.max_len < 1 || spec.depth < 1) throw InputError(path + ": max_len and depth must be >= 1");
  return spec;
}

// ---------------------------------------------------------------------------
// Horn maps.

/// {assign: {label: target label or index}} over the nondegenerate simplices
/// of the horn (labels as in Δ^n, e.g. "0", "01", "013").
inline SimplicialMap horn_map_from_json(const json& j, int n, int k, const SSetPtr& target,
                                        const std::string& path = "hornmap") {
  if (n < 1 || n > target->trunc_dim()) throw InputError(path + ": n must be in [1, trunc_dim of the target]");
  const auto sub = inclusion(horn(n, k, n)).sub;
  const auto& as = detail::field(j, "assign", path);
  if (!as.is_object()) throw InputError(path + ".assign: expected an object");
  std::vector<std::map<int, int>> images(static_cast<std::size_t>(n) + 1);
  for (int d = 0; d <= n; ++d) {
    std::vector<std::string> labels;
    for (int t = 0; t < static_cast<int>(target->count(d)); ++t) labels.push_back(target->label(d, t));
    for (int x = 0; x < static_cast<int>(sub->count(d)); ++x) {
      if (sub->is_degenerate(d, x)) continue;
      const auto& lab = sub->label(d, x);
      auto it = as.find(lab);
      if (it == as.end()) throw InputError(path + ".assign: missing image for horn simplex '" + lab + "'");
      images[static_cast<std::size_t>(d)][x] = detail::index(*it, labels, path + ".assign." + lab);
    }
  }
  try {
    return extend_from_nondegenerate(sub, target, images);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

}  // namespace simpdisc::io
