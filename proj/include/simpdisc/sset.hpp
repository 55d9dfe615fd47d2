#pragma once
//
// Finite simplicial sets truncated at a fixed dimension.
//
// Simplices live in per-dimension tables.  Degenerate simplices are stored
// explicitly alongside the nondegenerate ones; a simplex is flagged
// degenerate exactly when it is the image of some degeneracy operator.
//

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "simpdisc/delta.hpp"
#include "simpdisc/error.hpp"

namespace simpdisc {

struct SimplexId {
  int dim;
  int index;
  friend auto operator<=>(const SimplexId&, const SimplexId&) = default;
};

class SimplicialSet {
 public:
  /// Raw tables.  `faces[n][x]` lists d_0 x, ..., d_n x for an n-simplex x
  /// (empty for n = 0); `degeneracies[n][x]` lists s_0 x, ..., s_n x for
  /// n < trunc_dim.  `labels[n]` fixes the number of n-simplices.
  struct Tables {
    int trunc_dim = 0;
    std::vector<std::vector<std::string>> labels;
    std::vector<std::vector<std::vector<int>>> faces;
    std::vector<std::vector<std::vector<int>>> degeneracies;

    friend bool operator==(const Tables&, const Tables&) = default;
  };

  /// The empty simplicial set truncated at `trunc_dim`.
  explicit SimplicialSet(int trunc_dim = 0) {
    if (trunc_dim < 0) throw InputError("simplicial set: negative truncation");
    t_.trunc_dim = trunc_dim;
    t_.labels.assign(static_cast<std::size_t>(trunc_dim) + 1, {});
    t_.faces.assign(static_cast<std::size_t>(trunc_dim) + 1, {});
    t_.degeneracies.assign(static_cast<std::size_t>(trunc_dim), {});
    degenerate_.assign(static_cast<std::size_t>(trunc_dim) + 1, {});
  }

  /// Validates table shapes and index ranges (not the simplicial identities;
  /// see check_identities) and computes degeneracy flags.
  explicit SimplicialSet(Tables t) : t_(std::move(t)) {
    const int n_top = t_.trunc_dim;
    if (n_top < 0) throw InputError("simplicial set: negative truncation");
    const auto dims = static_cast<std::size_t>(n_top) + 1;
    if (t_.labels.size() != dims)
      throw InputError("simplicial set: expected " + std::to_string(dims) + " simplex tables");
    if (t_.faces.empty()) t_.faces.assign(dims, {});
    if (t_.faces.size() != dims) throw InputError("simplicial set: face table has wrong length");
    if (t_.faces[0].empty()) t_.faces[0].assign(t_.labels[0].size(), {});
    if (t_.degeneracies.size() != dims - 1)
      throw InputError("simplicial set: degeneracy table has wrong length");

    for (int n = 0; n <= n_top; ++n) {
      const auto un = static_cast<std::size_t>(n);
      const std::size_t count = t_.labels[un].size();
      if (t_.faces[un].size() != count)
        throw InputError("simplicial set: dimension " + std::to_string(n) + " face table has " +
                         std::to_string(t_.faces[un].size()) + " rows for " +
                         std::to_string(count) + " simplices");
      for (std::size_t x = 0; x < count; ++x) {
        const auto& fx = t_.faces[un][x];
        if (fx.size() != (n == 0 ? 0 : un + 1))
          throw InputError("simplicial set: simplex " + std::to_string(x) + " of dimension " +
                           std::to_string(n) + " has " + std::to_string(fx.size()) + " faces");
        for (int y : fx)
          if (y < 0 || static_cast<std::size_t>(y) >= t_.labels[un - 1].size())
            throw InputError("simplicial set: face index out of range in dimension " +
                             std::to_string(n));
      }
      if (n < n_top) {
        if (t_.degeneracies[un].size() != count)
          throw InputError("simplicial set: dimension " + std::to_string(n) +
                           " degeneracy table has wrong row count");
        for (const auto& sx : t_.degeneracies[un]) {
          if (sx.size() != un + 1)
            throw InputError("simplicial set: wrong number of degeneracies in dimension " +
                             std::to_string(n));
          for (int y : sx)
            if (y < 0 || static_cast<std::size_t>(y) >= t_.labels[un + 1].size())
              throw InputError("simplicial set: degeneracy index out of range in dimension " +
                               std::to_string(n));
        }
      }
    }
    degenerate_.assign(dims, {});
    for (std::size_t n = 0; n < dims; ++n) degenerate_[n].assign(t_.labels[n].size(), false);
    for (std::size_t n = 0; n + 1 < dims; ++n)
      for (const auto& sx : t_.degeneracies[n])
        for (int y : sx) degenerate_[n + 1][static_cast<std::size_t>(y)] = true;
  }

  int trunc_dim() const { return t_.trunc_dim; }
  std::size_t count(int dim) const {
    if (dim < 0 || dim > t_.trunc_dim) return 0;
    return t_.labels[static_cast<std::size_t>(dim)].size();
  }
  /// d_i of the `idx`-th simplex of dimension `dim` >= 1.
  int face(int dim, int idx, int i) const {
    return t_.faces[static_cast<std::size_t>(dim)][static_cast<std::size_t>(idx)]
                   [static_cast<std::size_t>(i)];
  }
  /// s_i of the `idx`-th simplex of dimension `dim` < trunc_dim.
  int degeneracy(int dim, int idx, int i) const {
    return t_.degeneracies[static_cast<std::size_t>(dim)][static_cast<std::size_t>(idx)]
                          [static_cast<std::size_t>(i)];
  }
  bool is_degenerate(int dim, int idx) const {
    return degenerate_[static_cast<std::size_t>(dim)][static_cast<std::size_t>(idx)];
  }
  const std::string& label(int dim, int idx) const {
    return t_.labels[static_cast<std::size_t>(dim)][static_cast<std::size_t>(idx)];
  }
  std::vector<int> nondegenerate(int dim) const {
    std::vector<int> out;
    for (int x = 0; x < static_cast<int>(count(dim)); ++x)
      if (!is_degenerate(dim, x)) out.push_back(x);
    return out;
  }
  std::size_t total_count() const {
    std::size_t s = 0;
    for (int n = 0; n <= t_.trunc_dim; ++n) s += count(n);
    return s;
  }
  const Tables& tables() const { return t_; }

  friend bool operator==(const SimplicialSet& a, const SimplicialSet& b) { return a.t_ == b.t_; }

 private:
  Tables t_;
  std::vector<std::vector<bool>> degenerate_;
};

using SSetPtr = std::shared_ptr<const SimplicialSet>;

inline SSetPtr share(SimplicialSet x) { return std::make_shared<const SimplicialSet>(std::move(x)); }

// ---------------------------------------------------------------------------
// Simplicial identities.

struct IdentityViolation {
  int dim;
  int index;
  std::string relation;
  int i;
  int j;
};

/// Exhaustively checks d_i d_j = d_{j-1} d_i (i < j), s_i s_j = s_{j+1} s_i
/// (i <= j) and the mixed d/s identities wherever both sides are inside the
/// truncation.
inline std::vector<IdentityViolation> check_identities(const SimplicialSet& x) {
  std::vector<IdentityViolation> out;
  const int top = x.trunc_dim();
  for (int n = 2; n <= top; ++n)
    for (int s = 0; s < static_cast<int>(x.count(n)); ++s)
      for (int j = 1; j <= n; ++j)
        for (int i = 0; i < j; ++i)
          if (x.face(n - 1, x.face(n, s, j), i) != x.face(n - 1, x.face(n, s, i), j - 1))
            out.push_back({n, s, "d_i d_j = d_{j-1} d_i", i, j});
  for (int n = 0; n + 2 <= top; ++n)
    for (int s = 0; s < static_cast<int>(x.count(n)); ++s)
      for (int j = 0; j <= n; ++j)
        for (int i = 0; i <= j; ++i)
          if (x.degeneracy(n + 1, x.degeneracy(n, s, j), i) !=
              x.degeneracy(n + 1, x.degeneracy(n, s, i), j + 1))
            out.push_back({n, s, "s_i s_j = s_{j+1} s_i", i, j});
  for (int n = 0; n + 1 <= top; ++n)
    for (int s = 0; s < static_cast<int>(x.count(n)); ++s)
      for (int j = 0; j <= n; ++j) {
        const int sj = x.degeneracy(n, s, j);
        for (int i = 0; i <= n + 1; ++i) {
          const int lhs = x.face(n + 1, sj, i);
          int rhs = 0;
          const char* rel = nullptr;
          if (i < j) {
            rhs = x.degeneracy(n - 1, x.face(n, s, i), j - 1);
            rel = "d_i s_j = s_{j-1} d_i";
          } else if (i == j || i == j + 1) {
            rhs = s;
            rel = "d_i s_j = id";
          } else {
            rhs = x.degeneracy(n - 1, x.face(n, s, i - 1), j);
            rel = "d_i s_j = s_j d_{i-1}";
          }
          if (lhs != rhs) out.push_back({n, s, rel, i, j});
        }
      }
  return out;
}

// ---------------------------------------------------------------------------
// Simplicial maps.

class SimplicialMap {
 public:
  /// `assignment[n][x]` is the image of the x-th n-simplex of `source`, for
  /// n = 0..source.trunc_dim().  The target must be truncated at least as
  /// high as the source.
  SimplicialMap(SSetPtr source, SSetPtr target, std::vector<std::vector<int>> assignment)
      : source_(std::move(source)), target_(std::move(target)), a_(std::move(assignment)) {
    if (!source_ || !target_) throw InputError("simplicial map: null endpoint");
    if (target_->trunc_dim() < source_->trunc_dim())
      throw InputError("simplicial map: target truncated below source");
    if (a_.size() != static_cast<std::size_t>(source_->trunc_dim()) + 1)
      throw InputError("simplicial map: assignment has wrong number of dimensions");
    for (int n = 0; n <= source_->trunc_dim(); ++n) {
      const auto& row = a_[static_cast<std::size_t>(n)];
      if (row.size() != source_->count(n))
        throw InputError("simplicial map: assignment not total in dimension " + std::to_string(n));
      for (int y : row)
        if (y < 0 || static_cast<std::size_t>(y) >= target_->count(n))
          throw InputError("simplicial map: image out of range in dimension " + std::to_string(n));
    }
  }

  const SimplicialSet& source() const { return *source_; }
  const SimplicialSet& target() const { return *target_; }
  const SSetPtr& source_ptr() const { return source_; }
  const SSetPtr& target_ptr() const { return target_; }
  int operator()(int dim, int idx) const {
    return a_[static_cast<std::size_t>(dim)][static_cast<std::size_t>(idx)];
  }
  const std::vector<std::vector<int>>& assignment() const { return a_; }

  friend bool operator==(const SimplicialMap& a, const SimplicialMap& b) { return a.a_ == b.a_; }

 private:
  SSetPtr source_;
  SSetPtr target_;
  std::vector<std::vector<int>> a_;
};

struct NaturalityViolation {
  int dim;
  int index;
  char op;  // 'd' or 's'
  int i;
};

/// Every (simplex, operator) pair at which `f` fails to commute.
inline std::vector<NaturalityViolation> check_simplicial_map(const SimplicialMap& f) {
  std::vector<NaturalityViolation> out;
  const auto& src = f.source();
  const auto& dst = f.target();
  for (int n = 0; n <= src.trunc_dim(); ++n)
    for (int x = 0; x < static_cast<int>(src.count(n)); ++x) {
      if (n >= 1)
        for (int i = 0; i <= n; ++i)
          if (f(n - 1, src.face(n, x, i)) != dst.face(n, f(n, x), i)) out.push_back({n, x, 'd', i});
      if (n < src.trunc_dim())
        for (int i = 0; i <= n; ++i)
          if (f(n + 1, src.degeneracy(n, x, i)) != dst.degeneracy(n, f(n, x), i))
            out.push_back({n, x, 's', i});
    }
  return out;
}

inline SimplicialMap identity_map(const SSetPtr& x) {
  std::vector<std::vector<int>> a(static_cast<std::size_t>(x->trunc_dim()) + 1);
  for (int n = 0; n <= x->trunc_dim(); ++n)
    for (int s = 0; s < static_cast<int>(x->count(n)); ++s) a[static_cast<std::size_t>(n)].push_back(s);
  return SimplicialMap(x, x, std::move(a));
}

/// g ∘ f.  The middle objects must agree (pointer or structural equality).
inline SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f) {
  if (f.target_ptr() != g.source_ptr() && !(f.target() == g.source()))
    throw DimensionMismatch("compose: target of f differs from source of g");
  std::vector<std::vector<int>> a(static_cast<std::size_t>(f.source().trunc_dim()) + 1);
  for (int n = 0; n <= f.source().trunc_dim(); ++n)
    for (int s = 0; s < static_cast<int>(f.source().count(n)); ++s)
      a[static_cast<std::size_t>(n)].push_back(g(n, f(n, s)));
  return SimplicialMap(f.source_ptr(), g.target_ptr(), std::move(a));
}

// ---------------------------------------------------------------------------
// Standard simplices.

/// Label of a monotone map as its value string, e.g. "012".
inline std::string map_label(const delta::MonotoneMap& f) {
  std::string s;
  for (int v : f.values()) {
    if (!s.empty() && f.cod_size() > 10) s += '.';
    s += std::to_string(v);
  }
  return s;
}

/// Δ^n truncated at `trunc`.  The m-simplices are the monotone maps
/// [m] -> [n] in lexicographic order; faces and degeneracies are given by
/// precomposition with cofaces and codegeneracies.
inline SimplicialSet standard_simplex(int n, int trunc) {
  if (n < 0 || trunc < n) throw InputError("standard_simplex: need 0 <= n <= trunc");
  SimplicialSet::Tables t;
  t.trunc_dim = trunc;
  std::vector<std::vector<delta::MonotoneMap>> maps;
  std::vector<std::map<std::vector<int>, int>> index(static_cast<std::size_t>(trunc) + 1);
  for (int m = 0; m <= trunc; ++m) {
    maps.push_back(delta::monotone_maps(m + 1, n + 1));
    auto& lab = t.labels.emplace_back();
    for (std::size_t k = 0; k < maps.back().size(); ++k) {
      lab.push_back(map_label(maps.back()[k]));
      index[static_cast<std::size_t>(m)][maps.back()[k].values()] = static_cast<int>(k);
    }
  }
  t.faces.resize(static_cast<std::size_t>(trunc) + 1);
  t.degeneracies.resize(static_cast<std::size_t>(trunc));
  for (int m = 0; m <= trunc; ++m) {
    const auto um = static_cast<std::size_t>(m);
    for (const auto& a : maps[um]) {
      auto& fr = t.faces[um].emplace_back();
      if (m >= 1)
        for (int i = 0; i <= m; ++i)
          fr.push_back(index[um - 1].at(delta::compose(a, delta::as_map(delta::coface(i, m))).values()));
      if (m < trunc) {
        auto& dr = t.degeneracies[um].emplace_back();
        for (int i = 0; i <= m; ++i)
          dr.push_back(
              index[um + 1].at(delta::compose(a, delta::as_map(delta::codegeneracy(i, m))).values()));
      }
    }
  }
  return SimplicialSet(std::move(t));
}

/// The monotone map [dim] -> [n] carried by simplex `idx` of Δ^n.
inline delta::MonotoneMap simplex_map(int n, int dim, int idx) {
  return delta::monotone_maps(dim + 1, n + 1).at(static_cast<std::size_t>(idx));
}

/// Δ^0: exactly one simplex per dimension.
inline SimplicialSet terminal(int trunc) { return standard_simplex(0, trunc); }

// ---------------------------------------------------------------------------
// Simplicial subsets.

class SimplicialSubset {
 public:
  SimplicialSubset(SSetPtr ambient, std::vector<std::vector<bool>> members)
      : ambient_(std::move(ambient)), members_(std::move(members)) {
    if (!ambient_) throw InputError("simplicial subset: null ambient");
    if (members_.size() != static_cast<std::size_t>(ambient_->trunc_dim()) + 1)
      throw InputError("simplicial subset: wrong number of dimensions");
    for (int n = 0; n <= ambient_->trunc_dim(); ++n)
      if (members_[static_cast<std::size_t>(n)].size() != ambient_->count(n))
        throw InputError("simplicial subset: membership row has wrong length in dimension " +
                         std::to_string(n));
  }

  const SimplicialSet& ambient() const { return *ambient_; }
  const SSetPtr& ambient_ptr() const { return ambient_; }
  bool contains(int dim, int idx) const {
    return members_[static_cast<std::size_t>(dim)][static_cast<std::size_t>(idx)];
  }
  std::size_t count(int dim) const {
    const auto& row = members_[static_cast<std::size_t>(dim)];
    return static_cast<std::size_t>(std::count(row.begin(), row.end(), true));
  }
  std::vector<int> members(int dim) const {
    std::vector<int> out;
    for (int x = 0; x < static_cast<int>(ambient_->count(dim)); ++x)
      if (contains(dim, x)) out.push_back(x);
    return out;
  }
  const std::vector<std::vector<bool>>& membership() const { return members_; }

 private:
  SSetPtr ambient_;
  std::vector<std::vector<bool>> members_;
};

/// True iff the subset is closed under every face and degeneracy map inside
/// the truncation.
inline bool is_closed_subset(const SimplicialSubset& s) {
  const auto& x = s.ambient();
  for (int n = 0; n <= x.trunc_dim(); ++n)
    for (int a = 0; a < static_cast<int>(x.count(n)); ++a) {
      if (!s.contains(n, a)) continue;
      if (n >= 1)
        for (int i = 0; i <= n; ++i)
          if (!s.contains(n - 1, x.face(n, a, i))) return false;
      if (n < x.trunc_dim())
        for (int i = 0; i <= n; ++i)
          if (!s.contains(n + 1, x.degeneracy(n, a, i))) return false;
    }
  return true;
}

/// A closed subset as a simplicial set in its own right together with its
/// inclusion into the ambient set.  Member order is ambient order.
struct Inclusion {
  SSetPtr sub;
  SimplicialMap map;
};

inline Inclusion inclusion(const SimplicialSubset& s) {
  if (!is_closed_subset(s)) throw InputError("inclusion: subset is not closed");
  const auto& x = s.ambient();
  const int top = x.trunc_dim();
  std::vector<std::vector<int>> local(static_cast<std::size_t>(top) + 1);
  std::vector<std::vector<int>> embed(static_cast<std::size_t>(top) + 1);
  for (int n = 0; n <= top; ++n) {
    local[static_cast<std::size_t>(n)].assign(x.count(n), -1);
    for (int a : s.members(n)) {
      local[static_cast<std::size_t>(n)][static_cast<std::size_t>(a)] =
          static_cast<int>(embed[static_cast<std::size_t>(n)].size());
      embed[static_cast<std::size_t>(n)].push_back(a);
    }
  }
  SimplicialSet::Tables t;
  t.trunc_dim = top;
  t.faces.resize(static_cast<std::size_t>(top) + 1);
  t.degeneracies.resize(static_cast<std::size_t>(top));
  for (int n = 0; n <= top; ++n) {
    const auto un = static_cast<std::size_t>(n);
    auto& lab = t.labels.emplace_back();
    for (int a : embed[un]) {
      lab.push_back(x.label(n, a));
      auto& fr = t.faces[un].emplace_back();
      if (n >= 1)
        for (int i = 0; i <= n; ++i) fr.push_back(local[un - 1][static_cast<std::size_t>(x.face(n, a, i))]);
      if (n < top) {
        auto& dr = t.degeneracies[un].emplace_back();
        for (int i = 0; i <= n; ++i)
          dr.push_back(local[un + 1][static_cast<std::size_t>(x.degeneracy(n, a, i))]);
      }
    }
  }
  auto sub = share(SimplicialSet(std::move(t)));
  return {sub, SimplicialMap(sub, s.ambient_ptr(), std::move(embed))};
}

/// ∂Δ^n: the non-surjective monotone maps into [n].
inline SimplicialSubset boundary(int n, int trunc) {
  if (n < 1) throw InputError("boundary: n must be >= 1");
  auto amb = share(standard_simplex(n, trunc));
  std::vector<std::vector<bool>> mem(static_cast<std::size_t>(trunc) + 1);
  for (int m = 0; m <= trunc; ++m)
    for (const auto& a : delta::monotone_maps(m + 1, n + 1))
      mem[static_cast<std::size_t>(m)].push_back(!a.is_surjective());
  return SimplicialSubset(amb, std::move(mem));
}

/// Λ^n_k: the monotone maps α into [n] with image(α) ∪ {k} ≠ [n].
inline SimplicialSubset horn(int n, int k, int trunc) {
  if (n < 1) throw InputError("horn: n must be >= 1");
  if (k < 0 || k > n)
    throw InputError("horn: k = " + std::to_string(k) + " out of range [0, " + std::to_string(n) + "]");
  auto amb = share(standard_simplex(n, trunc));
  std::vector<std::vector<bool>> mem(static_cast<std::size_t>(trunc) + 1);
  for (int m = 0; m <= trunc; ++m)
    for (const auto& a : delta::monotone_maps(m + 1, n + 1)) {
      std::vector<bool> hit(static_cast<std::size_t>(n) + 1, false);
      for (int v : a.values()) hit[static_cast<std::size_t>(v)] = true;
      hit[static_cast<std::size_t>(k)] = true;
      mem[static_cast<std::size_t>(m)].push_back(
          std::find(hit.begin(), hit.end(), false) != hit.end());
    }
  return SimplicialSubset(amb, std::move(mem));
}

// ---------------------------------------------------------------------------
// Small constructions used by the homology tests and the CLI.

/// X ⊔ Y, truncated at the common truncation.  Simplices of X come first.
inline SimplicialSet disjoint_union(const SimplicialSet& x, const SimplicialSet& y) {
  if (x.trunc_dim() != y.trunc_dim()) throw InputError("disjoint_union: truncations differ");
  SimplicialSet::Tables t = x.tables();
  const auto& ty = y.tables();
  for (int n = 0; n <= t.trunc_dim; ++n) {
    const auto un = static_cast<std::size_t>(n);
    const int off_lower = n >= 1 ? static_cast<int>(x.count(n - 1)) : 0;
    const int off_upper = n < t.trunc_dim ? static_cast<int>(x.count(n + 1)) : 0;
    for (std::size_t s = 0; s < ty.labels[un].size(); ++s) {
      t.labels[un].push_back(ty.labels[un][s]);
      auto fr = ty.faces[un][s];
      for (int& f : fr) f += off_lower;
      t.faces[un].push_back(fr);
      if (n < t.trunc_dim) {
        auto dr = ty.degeneracies[un][s];
        for (int& d : dr) d += off_upper;
        t.degeneracies[un].push_back(dr);
      }
    }
  }
  return SimplicialSet(std::move(t));
}

/// Reindexes simplices: the simplex at old index s of dimension n moves to
/// perm[n][s].
inline SimplicialSet permuted(const SimplicialSet& x, const std::vector<std::vector<int>>& perm) {
  SimplicialSet::Tables t;
  t.trunc_dim = x.trunc_dim();
  const auto dims = static_cast<std::size_t>(t.trunc_dim) + 1;
  t.labels.resize(dims);
  t.faces.resize(dims);
  t.degeneracies.resize(dims - 1);
  for (std::size_t n = 0; n < dims; ++n) {
    const std::size_t c = x.count(static_cast<int>(n));
    if (perm.at(n).size() != c) throw InputError("permuted: permutation has wrong size");
    t.labels[n].resize(c);
    t.faces[n].resize(c);
    if (n + 1 < dims) t.degeneracies[n].resize(c);
  }
  for (std::size_t n = 0; n < dims; ++n)
    for (std::size_t s = 0; s < x.count(static_cast<int>(n)); ++s) {
      const auto to = static_cast<std::size_t>(perm[n][s]);
      t.labels[n][to] = x.tables().labels[n][s];
      for (int f : x.tables().faces[n][s]) t.faces[n][to].push_back(perm[n - 1][static_cast<std::size_t>(f)]);
      if (n + 1 < dims)
        for (int d : x.tables().degeneracies[n][s])
          t.degeneracies[n][to].push_back(perm[n + 1][static_cast<std::size_t>(d)]);
    }
  return SimplicialSet(std::move(t));
}

}  // namespace simpdisc
