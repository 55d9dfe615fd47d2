#pragma once
//
// Lifting problems, horn fillers and the Kan / quasicategory / nerve-like
// classification of a finite truncated simplicial set.
//

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "simpdisc/error.hpp"
#include "simpdisc/maps.hpp"
#include "simpdisc/parallel.hpp"
#include "simpdisc/sset.hpp"

namespace simpdisc {

/// The square
///
///     A --mu--> X
///     |f        |p
///     v         v
///     B --nu--> Y
struct LiftingProblem {
  SimplicialMap f;
  SimplicialMap p;
  SimplicialMap mu;
  SimplicialMap nu;
};

/// Dimensions/indices of A at which p∘mu and nu∘f disagree, or at which the
/// endpoints do not line up.
inline std::vector<SimplexId> check_square(const LiftingProblem& lp) {
  const auto& a = lp.f.source();
  if (!(lp.mu.source() == a) || !(lp.nu.source() == lp.f.target()) || !(lp.p.source() == lp.mu.target()) ||
      !(lp.p.target() == lp.nu.target()))
    throw DimensionMismatch("lifting problem: maps do not form a square");
  std::vector<SimplexId> out;
  for (int n = 0; n <= a.trunc_dim(); ++n)
    for (int x = 0; x < static_cast<int>(a.count(n)); ++x)
      if (lp.p(n, lp.mu(n, x)) != lp.nu(n, lp.f(n, x))) out.push_back({n, x});
  return out;
}

/// Every h : B -> X with p∘h = nu and h∘f = mu, re-verified after search.
inline std::vector<SimplicialMap> solve_lifting(const LiftingProblem& lp, SearchLimits limits = {}) {
  if (!check_square(lp).empty()) throw InputError("lifting problem: square does not commute");
  const auto& b = lp.f.target();
  const auto& a = lp.f.source();
  if (b.trunc_dim() > lp.mu.target().trunc_dim())
    throw InputError("lifting problem: X is truncated below B");
  // required[n][y] = forced image of y in X from mu, or -1.
  std::vector<std::vector<int>> required(static_cast<std::size_t>(b.trunc_dim()) + 1);
  for (int n = 0; n <= b.trunc_dim(); ++n) required[static_cast<std::size_t>(n)].assign(b.count(n), -1);
  for (int n = 0; n <= std::min(a.trunc_dim(), b.trunc_dim()); ++n)
    for (int x = 0; x < static_cast<int>(a.count(n)); ++x) {
      int& slot = required[static_cast<std::size_t>(n)][static_cast<std::size_t>(lp.f(n, x))];
      const int want = lp.mu(n, x);
      if (slot != -1 && slot != want) return {};
      slot = want;
    }
  ImageFilter allow = [&](int n, int y, int img) {
    const int req = required[static_cast<std::size_t>(n)][static_cast<std::size_t>(y)];
    if (req != -1 && req != img) return false;
    return lp.p(n, img) == lp.nu(n, y);
  };
  auto sols = all_maps(lp.f.target_ptr(), lp.mu.target_ptr(), allow, limits);
  for (const auto& h : sols) {
    if (!check_simplicial_map(h).empty()) throw Error("solve_lifting: produced a non-simplicial map");
    for (int n = 0; n <= b.trunc_dim(); ++n)
      for (int y = 0; y < static_cast<int>(b.count(n)); ++y)
        if (lp.p(n, h(n, y)) != lp.nu(n, y)) throw Error("solve_lifting: lower triangle fails");
    for (int n = 0; n <= a.trunc_dim(); ++n)
      for (int x = 0; x < static_cast<int>(a.count(n)); ++x)
        if (h(n, lp.f(n, x)) != lp.mu(n, x)) throw Error("solve_lifting: upper triangle fails");
  }
  return sols;
}

/// The horn Λ^n_k ↪ Δ^n, both truncated at n.
struct HornInclusion {
  int n;
  int k;
  SSetPtr simplex;
  Inclusion horn;
};

inline HornInclusion horn_inclusion(int n, int k) {
  auto sub = horn(n, k, n);
  return {n, k, sub.ambient_ptr(), inclusion(sub)};
}

struct HornFillingInstance {
  int n;
  int k;
  SSetPtr target;
  /// Assignment on the horn (indexed as in horn_inclusion(n, k).horn.sub).
  Assignment sigma0;
};

/// All extensions of sigma0 along Λ^n_k ↪ Δ^n, as the lifting problem over
/// the terminal simplicial set.
inline std::vector<SimplicialMap> fill_horn(const HornFillingInstance& inst, SearchLimits limits = {}) {
  if (inst.n > inst.target->trunc_dim()) throw InputError("fill_horn: n exceeds the target truncation");
  const auto hi = horn_inclusion(inst.n, inst.k);
  SimplicialMap sigma0(hi.horn.sub, inst.target, inst.sigma0);
  if (!check_simplicial_map(sigma0).empty()) throw InputError("fill_horn: horn map is not simplicial");
  auto pt = share(terminal(inst.target->trunc_dim()));
  auto to_pt = [&](const SSetPtr& x) {
    Assignment a(static_cast<std::size_t>(x->trunc_dim()) + 1);
    for (int d = 0; d <= x->trunc_dim(); ++d) a[static_cast<std::size_t>(d)].assign(x->count(d), 0);
    return SimplicialMap(x, pt, a);
  };
  LiftingProblem lp{hi.horn.map, to_pt(inst.target), sigma0, to_pt(hi.simplex)};
  return solve_lifting(lp, limits);
}

/// A horn map described by the images of the horn's nondegenerate simplices
/// (Δ^n label -> target label).
struct HornWitness {
  std::size_t instance = 0;
  std::vector<std::pair<std::string, std::string>> images;
};

struct HornStats {
  int n = 0;
  int k = 0;
  std::size_t horn_maps = 0;
  std::size_t unfillable = 0;
  std::size_t unique_fill = 0;
  std::size_t multiple_fill = 0;
  std::optional<HornWitness> unfillable_witness;
  std::optional<HornWitness> multiple_witness;
  bool inner() const { return 0 < k && k < n; }
  bool all_fill() const { return unfillable == 0; }
  bool all_fill_uniquely() const { return unfillable == 0 && multiple_fill == 0; }
};

struct Classification {
  int max_n = 0;
  std::vector<HornStats> horns;  // sorted by (n, k)
  bool kan = true;
  bool quasicategory = true;
  bool nerve_like = true;
};

inline HornWitness describe_horn_map(const HornInclusion& hi, const SimplicialSet& target, const Assignment& a,
                                     std::size_t instance) {
  HornWitness w;
  w.instance = instance;
  const auto& sub = *hi.horn.sub;
  for (int d = 0; d <= sub.trunc_dim(); ++d)
    for (int x = 0; x < static_cast<int>(sub.count(d)); ++x)
      if (!sub.is_degenerate(d, x))
        w.images.emplace_back(sub.label(d, x), target.label(d, a[static_cast<std::size_t>(d)][static_cast<std::size_t>(x)]));
  return w;
}

/// Counts fillers (0, 1 or 2 meaning "at least two") for every horn map
/// Λ^n_k -> X with 1 <= n <= max_n.  Horn families are checked in parallel
/// and merged in (n, k) order.
inline Classification classify(const SimplicialSet& x, int max_n, SearchLimits limits = {}) {
  if (max_n < 1) throw InputError("classify: max_n must be >= 1");
  if (max_n > x.trunc_dim()) throw InputError("classify: max_n exceeds trunc_dim");
  std::vector<std::pair<int, int>> families;
  for (int n = 1; n <= max_n; ++n)
    for (int k = 0; k <= n; ++k) families.push_back({n, k});
  std::vector<HornStats> stats(families.size());
  parallel_for(families.size(), [&](std::size_t f) {
    const auto [n, k] = families[f];
    const auto hi = horn_inclusion(n, k);
    const auto& embed = hi.horn.map.assignment();
    // position in the horn of each simplex of Δ^n, or -1
    std::vector<std::vector<int>> local(static_cast<std::size_t>(n) + 1);
    for (int d = 0; d <= n; ++d) {
      local[static_cast<std::size_t>(d)].assign(hi.simplex->count(d), -1);
      for (std::size_t i = 0; i < embed[static_cast<std::size_t>(d)].size(); ++i)
        local[static_cast<std::size_t>(d)][static_cast<std::size_t>(embed[static_cast<std::size_t>(d)][i])] =
            static_cast<int>(i);
    }
    HornStats st;
    st.n = n;
    st.k = k;
    for_each_map(*hi.horn.sub, x, {}, [&](const Assignment& a) {
      ImageFilter allow = [&](int d, int s, int img) {
        const int l = local[static_cast<std::size_t>(d)][static_cast<std::size_t>(s)];
        return l < 0 || a[static_cast<std::size_t>(d)][static_cast<std::size_t>(l)] == img;
      };
      SearchLimits fl = limits;
      fl.max_results = 2;
      const std::size_t fillers = count_maps(*hi.simplex, x, allow, fl);
      if (fillers == 0) {
        if (!st.unfillable_witness) st.unfillable_witness = describe_horn_map(hi, x, a, st.horn_maps);
        ++st.unfillable;
      } else if (fillers == 1) {
        ++st.unique_fill;
      } else {
        if (!st.multiple_witness) st.multiple_witness = describe_horn_map(hi, x, a, st.horn_maps);
        ++st.multiple_fill;
      }
      ++st.horn_maps;
      return true;
    }, limits);
    stats[f] = std::move(st);
  });
  Classification c;
  c.max_n = max_n;
  c.horns = std::move(stats);
  for (const auto& st : c.horns) {
    c.kan = c.kan && st.all_fill();
    if (st.inner()) {
      c.quasicategory = c.quasicategory && st.all_fill();
      c.nerve_like = c.nerve_like && st.all_fill_uniquely();
    }
  }
  return c;
}

// ---------------------------------------------------------------------------
// Retracts in the arrow category.

/// True iff f : A -> B is a retract of f' : A' -> B', i.e. there are
/// i_A, r_A, i_B, r_B with r_A i_A = id, r_B i_B = id, f' i_A = i_B f and
/// f r_A = r_B f'.  Decided by nested exhaustive search.
inline bool is_retract(const SimplicialMap& f, const SimplicialMap& fp, SearchLimits limits = {}) {
  const auto& A = f.source_ptr();
  const auto& B = f.target_ptr();
  const auto& Ap = fp.source_ptr();
  const auto& Bp = fp.target_ptr();
  bool found = false;
  for_each_map(*A, *Ap, {}, [&](const Assignment& iA) {
    // r_A must invert i_A on its image.
    std::vector<std::vector<int>> back(iA.size());
    for (std::size_t d = 0; d < iA.size(); ++d) {
      back[d].assign(Ap->count(static_cast<int>(d)), -1);
      for (std::size_t s = 0; s < iA[d].size(); ++s) {
        int& slot = back[d][static_cast<std::size_t>(iA[d][s])];
        if (slot != -1) return true;  // not injective, no retraction
        slot = static_cast<int>(s);
      }
    }
    ImageFilter allow_rA = [&](int d, int s, int img) {
      const int want = back[static_cast<std::size_t>(d)][static_cast<std::size_t>(s)];
      return want == -1 || want == img;
    };
    for_each_map(*Ap, *A, allow_rA, [&](const Assignment& rA) {
      // i_B f = f' i_A
      std::vector<std::vector<int>> need_iB(static_cast<std::size_t>(B->trunc_dim()) + 1);
      for (int d = 0; d <= B->trunc_dim(); ++d) need_iB[static_cast<std::size_t>(d)].assign(B->count(d), -1);
      for (int d = 0; d <= A->trunc_dim(); ++d)
        for (int s = 0; s < static_cast<int>(A->count(d)); ++s) {
          int& slot = need_iB[static_cast<std::size_t>(d)][static_cast<std::size_t>(f(d, s))];
          const int want = fp(d, iA[static_cast<std::size_t>(d)][static_cast<std::size_t>(s)]);
          if (slot != -1 && slot != want) return true;
          slot = want;
        }
      ImageFilter allow_iB = [&](int d, int s, int img) {
        const int want = need_iB[static_cast<std::size_t>(d)][static_cast<std::size_t>(s)];
        return want == -1 || want == img;
      };
      for_each_map(*B, *Bp, allow_iB, [&](const Assignment& iB) {
        std::vector<std::vector<int>> need_rB(static_cast<std::size_t>(Bp->trunc_dim()) + 1);
        for (int d = 0; d <= Bp->trunc_dim(); ++d) need_rB[static_cast<std::size_t>(d)].assign(Bp->count(d), -1);
        auto demand = [&](int d, int s, int want) {
          int& slot = need_rB[static_cast<std::size_t>(d)][static_cast<std::size_t>(s)];
          if (slot != -1 && slot != want) return false;
          slot = want;
          return true;
        };
        for (int d = 0; d <= B->trunc_dim(); ++d)
          for (int s = 0; s < static_cast<int>(B->count(d)); ++s)
            if (!demand(d, iB[static_cast<std::size_t>(d)][static_cast<std::size_t>(s)], s)) return true;
        for (int d = 0; d <= Ap->trunc_dim(); ++d)
          for (int s = 0; s < static_cast<int>(Ap->count(d)); ++s)
            if (!demand(d, fp(d, s), f(d, rA[static_cast<std::size_t>(d)][static_cast<std::size_t>(s)]))) return true;
        ImageFilter allow_rB = [&](int d, int s, int img) {
          const int want = need_rB[static_cast<std::size_t>(d)][static_cast<std::size_t>(s)];
          return want == -1 || want == img;
        };
        if (count_maps(*Bp, *B, allow_rB, {.max_results = 1, .node_budget = limits.node_budget}) > 0) found = true;
        return !found;
      }, limits);
      return !found;
    }, limits);
    return !found;
  }, limits);
  return found;
}

}  // namespace simpdisc
