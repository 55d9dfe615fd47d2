#pragma once
//
// Normalized integer chain complexes of truncated simplicial sets and their
// homology via Smith normal form.
//

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "simpdisc/error.hpp"
#include "simpdisc/fincat.hpp"
#include "simpdisc/linalg.hpp"
#include "simpdisc/sset.hpp"

namespace simpdisc {

struct ChainComplex {
  int top_dim = 0;
  /// basis[n] = nondegenerate n-simplex indices.
  std::vector<std::vector<int>> basis;
  /// boundary[n] : C_n -> C_{n-1}, shape rank(n-1) × rank(n); boundary[0] is 0 × rank(0).
  std::vector<Matrix<Integer>> boundary;

  std::size_t rank(int n) const { return basis[static_cast<std::size_t>(n)].size(); }
};

/// ∂σ = Σ (-1)^i d_i σ, with degenerate faces sent to 0.
inline ChainComplex chain_complex(const SimplicialSet& x) {
  ChainComplex cc;
  cc.top_dim = x.trunc_dim();
  std::vector<std::vector<int>> pos;
  for (int n = 0; n <= cc.top_dim; ++n) {
    cc.basis.push_back(x.nondegenerate(n));
    auto& p = pos.emplace_back(x.count(n), -1);
    for (std::size_t i = 0; i < cc.basis.back().size(); ++i) p[static_cast<std::size_t>(cc.basis.back()[i])] = static_cast<int>(i);
  }
  cc.boundary.emplace_back(0, cc.rank(0));
  for (int n = 1; n <= cc.top_dim; ++n) {
    Matrix<Integer> d(cc.rank(n - 1), cc.rank(n));
    for (std::size_t c = 0; c < cc.rank(n); ++c) {
      const int s = cc.basis[static_cast<std::size_t>(n)][c];
      for (int i = 0; i <= n; ++i) {
        const int r = pos[static_cast<std::size_t>(n) - 1][static_cast<std::size_t>(x.face(n, s, i))];
        if (r < 0) continue;
        d(static_cast<std::size_t>(r), c) += (i % 2 == 0) ? 1 : -1;
      }
    }
    cc.boundary.push_back(std::move(d));
  }
  return cc;
}

/// True iff ∂_{n-1} ∘ ∂_n = 0 for every n.
inline bool boundary_squares_to_zero(const ChainComplex& cc) {
  for (int n = 2; n <= cc.top_dim; ++n)
    if (!(cc.boundary[static_cast<std::size_t>(n) - 1] * cc.boundary[static_cast<std::size_t>(n)]).is_zero())
      return false;
  return true;
}

/// Invariant factors d_1 | d_2 | ... | d_r (all positive) of an integer
/// matrix.  Pivots are chosen with minimal magnitude; leftover
/// non-divisible entries are folded back into the pivot row.
inline std::vector<Integer> smith_invariants(Matrix<Integer> a) {
  const std::size_t R = a.rows(), C = a.cols();
  std::vector<Integer> diag;
  std::size_t t = 0;
  while (t < R && t < C) {
    // smallest nonzero entry in the trailing block
    std::size_t pr = R, pc = C;
    for (std::size_t i = t; i < R; ++i)
      for (std::size_t j = t; j < C; ++j)
        if (a(i, j) != 0 && (pr == R || abs(a(i, j)) < abs(a(pr, pc)))) {
          pr = i;
          pc = j;
        }
    if (pr == R) break;
    for (std::size_t j = 0; j < C; ++j) std::swap(a(t, j), a(pr, j));
    for (std::size_t i = 0; i < R; ++i) std::swap(a(i, t), a(i, pc));
    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = t + 1; i < R; ++i) {
        if (a(i, t) == 0) continue;
        const Integer qt = a(i, t) / a(t, t);
        for (std::size_t j = t; j < C; ++j) a(i, j) -= qt * a(t, j);
        if (a(i, t) != 0) {
          clean = false;
          for (std::size_t j = t; j < C; ++j) std::swap(a(t, j), a(i, j));
        }
      }
      for (std::size_t j = t + 1; j < C; ++j) {
        if (a(t, j) == 0) continue;
        const Integer qt = a(t, j) / a(t, t);
        for (std::size_t i = t; i < R; ++i) a(i, j) -= qt * a(i, t);
        if (a(t, j) != 0) {
          clean = false;
          for (std::size_t i = t; i < R; ++i) std::swap(a(i, t), a(i, j));
        }
      }
      if (!clean) continue;
      // divisibility: the pivot must divide the whole trailing block
      for (std::size_t i = t + 1; i < R && clean; ++i)
        for (std::size_t j = t + 1; j < C; ++j)
          if (a(i, j) % a(t, t) != 0) {
            for (std::size_t k = t; k < C; ++k) a(t, k) += a(i, k);
            clean = false;
            break;
          }
    }
    diag.push_back(abs(a(t, t)));
    ++t;
  }
  return diag;
}

struct HomologyGroup {
  int dim = 0;
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;
  /// Set when dim = top_dim - 1.
  bool truncation_caveat = false;

  bool is_zero() const { return free_rank == 0 && torsion.empty(); }
  friend bool operator==(const HomologyGroup& a, const HomologyGroup& b) {
    return a.dim == b.dim && a.free_rank == b.free_rank && a.torsion == b.torsion;
  }
};

/// "Z^2 + Z/2", "Z", "0".
inline std::string to_string(const HomologyGroup& h) {
  std::vector<std::string> parts;
  if (h.free_rank == 1) parts.push_back("Z");
  if (h.free_rank > 1) parts.push_back("Z^" + std::to_string(h.free_rank));
  for (const auto& t : h.torsion) parts.push_back("Z/" + t.str());
  if (parts.empty()) return "0";
  std::string s = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) s += " + " + parts[i];
  return s;
}

/// H_dim = ker ∂_dim / im ∂_{dim+1}, for 0 <= dim < top_dim.
inline HomologyGroup homology(const ChainComplex& cc, int dim) {
  if (dim < 0 || dim >= cc.top_dim)
    throw InputError("homology: dimension " + std::to_string(dim) + " outside [0, " + std::to_string(cc.top_dim - 1) +
                     "] for a complex truncated at " + std::to_string(cc.top_dim));
  HomologyGroup h;
  h.dim = dim;
  h.truncation_caveat = dim == cc.top_dim - 1;
  const std::size_t rank_here = dim == 0 ? 0 : smith_invariants(cc.boundary[static_cast<std::size_t>(dim)]).size();
  const auto up = smith_invariants(cc.boundary[static_cast<std::size_t>(dim) + 1]);
  h.free_rank = cc.rank(dim) - rank_here - up.size();
  for (const auto& d : up)
    if (d > 1) h.torsion.push_back(d);
  return h;
}

inline std::vector<HomologyGroup> homology_all(const ChainComplex& cc) {
  std::vector<HomologyGroup> out;
  for (int d = 0; d < cc.top_dim; ++d) out.push_back(homology(cc, d));
  return out;
}

/// Homology of the nerve of c truncated at `trunc`; requires dim < trunc - 1.
inline HomologyGroup classifying_space_homology(const FiniteCategory& c, int trunc, int dim) {
  if (dim < 0 || dim >= trunc - 1)
    throw InputError("classifying_space_homology: need 0 <= dim < trunc - 1 (dim " + std::to_string(dim) +
                     ", trunc " + std::to_string(trunc) + ")");
  return homology(chain_complex(nerve(c, trunc)), dim);
}

enum class ImsetReading { order_complex, discrete };

/// Homology of the subset lattice of an n-variable set: the nerve of the
/// inclusion poset (order_complex), or 2^n isolated points (discrete).
inline HomologyGroup imset_poset_homology(int n_vars, int dim, ImsetReading reading = ImsetReading::order_complex) {
  if (n_vars < 0 || n_vars > 4) throw BoundExceeded("imset_poset_homology: n_vars must be in [0, 4]");
  const int trunc = dim + 2;
  if (reading == ImsetReading::discrete) return classifying_space_homology(discrete_category(1 << n_vars), trunc, dim);
  const auto vars = std::vector<std::string>{"a", "b", "c", "d"};
  return classifying_space_homology(subset_lattice({vars.begin(), vars.begin() + n_vars}), trunc, dim);
}

}  // namespace simpdisc
