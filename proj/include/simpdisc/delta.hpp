#pragma once
//
// The simplex category: finite ordinals [n] = {0 < 1 < ... < n} and the
// order-preserving maps between them.
//
// An ordinal is carried by its cardinality (n + 1 for [n]).  A map keeps
// its full value vector so every identity can be checked pointwise.
//

#include <algorithm>
#include <compare>
#include <cstddef>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "simpdisc/error.hpp"

namespace simpdisc::delta {

class MonotoneMap {
 public:
  /// Builds a map [values.size() - 1] -> [cod_size - 1].  Throws InputError
  /// if the values are out of range or decrease anywhere.
  MonotoneMap(int cod_size, std::vector<int> values)
      : cod_size_(cod_size), values_(std::move(values)) {
    if (cod_size_ < 1) throw InputError("monotone map: codomain must be non-empty");
    if (values_.empty()) throw InputError("monotone map: domain must be non-empty");
    for (std::size_t k = 0; k < values_.size(); ++k) {
      if (values_[k] < 0 || values_[k] >= cod_size_)
        throw InputError("monotone map: value " + std::to_string(values_[k]) +
                         " outside [0, " + std::to_string(cod_size_ - 1) + "]");
      if (k > 0 && values_[k] < values_[k - 1])
        throw InputError("monotone map: values decrease at position " + std::to_string(k));
    }
  }

  static MonotoneMap identity(int size) {
    std::vector<int> v(static_cast<std::size_t>(size));
    for (int k = 0; k < size; ++k) v[static_cast<std::size_t>(k)] = k;
    return MonotoneMap(size, std::move(v));
  }

  int dom_size() const { return static_cast<int>(values_.size()); }
  int cod_size() const { return cod_size_; }
  const std::vector<int>& values() const { return values_; }
  int operator()(int k) const { return values_[static_cast<std::size_t>(k)]; }

  bool is_injective() const {
    return std::adjacent_find(values_.begin(), values_.end()) == values_.end();
  }
  bool is_surjective() const {
    return values_.front() == 0 && values_.back() == cod_size_ - 1 &&
           std::adjacent_find(values_.begin(), values_.end(),
                              [](int a, int b) { return b > a + 1; }) == values_.end();
  }
  bool is_identity() const { return dom_size() == cod_size_ && is_injective(); }

  friend bool operator==(const MonotoneMap&, const MonotoneMap&) = default;
  friend auto operator<=>(const MonotoneMap&, const MonotoneMap&) = default;

 private:
  int cod_size_;
  std::vector<int> values_;
};

/// g ∘ f.  Requires f.cod_size() == g.dom_size().
inline MonotoneMap compose(const MonotoneMap& g, const MonotoneMap& f) {
  if (f.cod_size() != g.dom_size())
    throw DimensionMismatch("compose: codomain of f has size " + std::to_string(f.cod_size()) +
                            " but domain of g has size " + std::to_string(g.dom_size()));
  std::vector<int> v;
  v.reserve(f.values().size());
  for (int x : f.values()) v.push_back(g(x));
  return MonotoneMap(g.cod_size(), std::move(v));
}

/// A generator of Δ.  For a coface, `dim` is n in δ_i : [n-1] -> [n]; for a
/// codegeneracy it is n in σ_j : [n+1] -> [n].
struct ElementaryMap {
  enum class Kind { coface, codegeneracy };
  Kind kind;
  int index;
  int dim;

  friend bool operator==(const ElementaryMap&, const ElementaryMap&) = default;
};

inline ElementaryMap coface(int i, int n) { return {ElementaryMap::Kind::coface, i, n}; }
inline ElementaryMap codegeneracy(int j, int n) {
  return {ElementaryMap::Kind::codegeneracy, j, n};
}

inline bool well_formed(const ElementaryMap& e) {
  if (e.kind == ElementaryMap::Kind::coface) return e.dim >= 1 && e.index >= 0 && e.index <= e.dim;
  return e.dim >= 0 && e.index >= 0 && e.index <= e.dim;
}

inline MonotoneMap as_map(const ElementaryMap& e) {
  if (!well_formed(e))
    throw InputError(std::string(e.kind == ElementaryMap::Kind::coface ? "coface" : "codegeneracy") +
                     ": index " + std::to_string(e.index) + " out of range for dimension " +
                     std::to_string(e.dim));
  std::vector<int> v;
  if (e.kind == ElementaryMap::Kind::coface) {
    // δ_i(j) = j for j < i, j + 1 for j >= i
    for (int j = 0; j < e.dim; ++j) v.push_back(j < e.index ? j : j + 1);
  } else {
    // σ_j(k) = k for k <= j, k - 1 for k > j
    for (int k = 0; k <= e.dim + 1; ++k) v.push_back(k <= e.index ? k : k - 1);
  }
  return MonotoneMap(e.dim + 1, std::move(v));
}

inline int elementary_dom_size(const ElementaryMap& e) {
  return e.kind == ElementaryMap::Kind::coface ? e.dim : e.dim + 2;
}

/// Composes a factorization listed in application order (first element is
/// applied first).  An empty list is the identity on [dom_size - 1].
inline MonotoneMap recompose(std::span<const ElementaryMap> seq, int dom_size) {
  MonotoneMap acc = MonotoneMap::identity(dom_size);
  for (const auto& e : seq) acc = compose(as_map(e), acc);
  return acc;
}

/// Canonical epi-mono factorization f = δ_{i_1}⋯δ_{i_s} σ_{j_1}⋯σ_{j_t} with
/// i_1 > ... > i_s and j_1 < ... < j_t (i ranges over values missed by f, j
/// over positions with f(j) = f(j+1)).  Returned in application order: the
/// codegeneracies σ_{j_t}, ..., σ_{j_1} first, then the cofaces δ_{i_s}, ...,
/// δ_{i_1}.
inline std::vector<ElementaryMap> decompose(const MonotoneMap& f) {
  std::vector<ElementaryMap> out;
  const auto& v = f.values();
  const int m = f.dom_size() - 1;

  std::vector<int> repeats;
  for (int j = 0; j < m; ++j)
    if (v[static_cast<std::size_t>(j)] == v[static_cast<std::size_t>(j + 1)]) repeats.push_back(j);
  int cur = m;  // current ordinal [cur]
  for (auto it = repeats.rbegin(); it != repeats.rend(); ++it) {
    out.push_back(codegeneracy(*it, cur - 1));
    --cur;
  }

  std::vector<bool> hit(static_cast<std::size_t>(f.cod_size()), false);
  for (int x : v) hit[static_cast<std::size_t>(x)] = true;
  for (int i = 0; i < f.cod_size(); ++i) {
    if (hit[static_cast<std::size_t>(i)]) continue;
    ++cur;
    out.push_back(coface(i, cur));
  }
  return out;
}

/// All monotone maps [dom_size - 1] -> [cod_size - 1], in lexicographic
/// order of their value vectors.
inline std::vector<MonotoneMap> monotone_maps(int dom_size, int cod_size) {
  std::vector<MonotoneMap> out;
  if (dom_size < 1 || cod_size < 1) return out;
  std::vector<int> v(static_cast<std::size_t>(dom_size), 0);
  while (true) {
    out.emplace_back(cod_size, v);
    int k = dom_size - 1;
    while (k >= 0 && v[static_cast<std::size_t>(k)] == cod_size - 1) --k;
    if (k < 0) break;
    int next = v[static_cast<std::size_t>(k)] + 1;
    for (int r = k; r < dom_size; ++r) v[static_cast<std::size_t>(r)] = next;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Cosimplicial identities, checked by evaluating both sides.

struct RelationViolation {
  std::string family;
  int i;
  int j;
  int n;
  std::vector<int> lhs;
  std::vector<int> rhs;
};

struct RelationReport {
  int max_n = 0;
  std::size_t checked = 0;
  std::vector<RelationViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks, for every ordinal up to [max_n]:
///   δ_j δ_i = δ_i δ_{j-1}          (i < j)
///   σ_j σ_i = σ_i σ_{j+1}          (i <= j)
///   σ_j δ_i = δ_i σ_{j-1}  (i < j),  id  (i = j, j+1),  δ_{i-1} σ_j  (i > j+1)
inline RelationReport verify_simplicial_relations(int max_n) {
  if (max_n < 1) throw InputError("verify_simplicial_relations: max_n must be >= 1");
  RelationReport rep;
  rep.max_n = max_n;
  auto check = [&](const std::string& family, int i, int j, int n, const MonotoneMap& lhs,
                   const MonotoneMap& rhs) {
    ++rep.checked;
    if (lhs != rhs) rep.violations.push_back({family, i, j, n, lhs.values(), rhs.values()});
  };

  // δ_j : [n-1] -> [n] after δ_i : [n-2] -> [n-1]
  for (int n = 2; n <= max_n; ++n)
    for (int j = 1; j <= n; ++j)
      for (int i = 0; i < j; ++i)
        check("coface-coface", i, j, n, compose(as_map(coface(j, n)), as_map(coface(i, n - 1))),
              compose(as_map(coface(i, n)), as_map(coface(j - 1, n - 1))));

  // σ_j : [n] -> [n-1] after σ_i : [n+1] -> [n]
  for (int n = 1; n + 1 <= max_n; ++n)
    for (int j = 0; j <= n - 1; ++j)
      for (int i = 0; i <= j; ++i)
        check("codegeneracy-codegeneracy", i, j, n,
              compose(as_map(codegeneracy(j, n - 1)), as_map(codegeneracy(i, n))),
              compose(as_map(codegeneracy(i, n - 1)), as_map(codegeneracy(j + 1, n))));

  // σ_j : [n] -> [n-1] after δ_i : [n-1] -> [n]
  for (int n = 1; n <= max_n; ++n)
    for (int j = 0; j <= n - 1; ++j)
      for (int i = 0; i <= n; ++i) {
        auto lhs = compose(as_map(codegeneracy(j, n - 1)), as_map(coface(i, n)));
        if (i < j)
          check("codegeneracy-coface", i, j, n, lhs,
                compose(as_map(coface(i, n - 1)), as_map(codegeneracy(j - 1, n - 2))));
        else if (i == j || i == j + 1)
          check("codegeneracy-coface", i, j, n, lhs, MonotoneMap::identity(n));
        else
          check("codegeneracy-coface", i, j, n, lhs,
                compose(as_map(coface(i - 1, n - 1)), as_map(codegeneracy(j, n - 2))));
      }
  return rep;
}

// ---------------------------------------------------------------------------
// Text form "m n : v0 v1 ... vm" for a map [m] -> [n].

inline std::string to_string(const MonotoneMap& f) {
  std::ostringstream os;
  os << f.dom_size() - 1 << ' ' << f.cod_size() - 1 << " :";
  for (int x : f.values()) os << ' ' << x;
  return os.str();
}

inline MonotoneMap parse_monotone_map(const std::string& text) {
  std::istringstream is(text);
  int m = 0, n = 0;
  std::string colon;
  if (!(is >> m >> n >> colon) || colon != ":")
    throw InputError("monotone map: expected 'm n : v0 ... vm', got '" + text + "'");
  if (m < 0 || n < 0) throw InputError("monotone map: ordinals must be non-negative");
  std::vector<int> v;
  int x = 0;
  while (is >> x) v.push_back(x);
  if (!is.eof()) throw InputError("monotone map: non-integer value in '" + text + "'");
  if (static_cast<int>(v.size()) != m + 1)
    throw InputError("monotone map: expected " + std::to_string(m + 1) + " values, got " +
                     std::to_string(v.size()));
  return MonotoneMap(n + 1, std::move(v));
}

inline std::string to_string(const ElementaryMap& e) {
  return std::string(e.kind == ElementaryMap::Kind::coface ? "d" : "s") + std::to_string(e.index) +
         "@" + std::to_string(e.dim);
}

}  // namespace simpdisc::delta
