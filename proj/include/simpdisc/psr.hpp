#pragma once
//
// Controlled dynamical systems: POMDP ground truth, system-dynamics
// matrices, core-test discovery, PSR dynamics over reachable prediction
// vectors, and MDP / PSR homomorphism checks.
//
// Probabilities are stored as exact rationals.  Computations are templated
// on the scalar: Rational (exact) or double (tolerance-based).
//

#include <algorithm>
#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "simpdisc/error.hpp"
#include "simpdisc/fincat.hpp"
#include "simpdisc/linalg.hpp"
#include "simpdisc/parallel.hpp"

namespace simpdisc {

struct ActObs {
  int a;
  int o;
  auto operator<=>(const ActObs&) const = default;
};

/// A history or a test: a₁o₁ … a_k o_k.
using Trajectory = std::vector<ActObs>;

inline Trajectory concat(Trajectory h, const Trajectory& t) {
  h.insert(h.end(), t.begin(), t.end());
  return h;
}

namespace detail {
inline void check_distribution(const std::vector<Rational>& row, const std::string& where, double tol) {
  Rational sum = 0;
  for (const auto& p : row) {
    if (p < 0 || p > 1) throw InputError(where + ": probability outside [0, 1]");
    sum += p;
  }
  if (tol <= 0) {
    if (sum != 1) throw InputError(where + ": row sums to " + to_string(sum) + ", not 1");
  } else if (std::abs(to_double(sum) - 1.0) > tol) {
    throw InputError(where + ": row sums to " + to_string(sum) + ", not within " + std::to_string(tol) + " of 1");
  }
}
}  // namespace detail

struct Pomdp {
  std::vector<std::string> states;
  std::vector<std::string> actions;
  std::vector<std::string> observations;
  /// T[s][a][s'] = P(s' | s, a)
  std::vector<std::vector<std::vector<Rational>>> T;
  /// Z[s'][a][o] = P(o | s', a)
  std::vector<std::vector<std::vector<Rational>>> Z;
  std::vector<Rational> b0;

  std::size_t n_states() const { return states.size(); }
  std::size_t n_actions() const { return actions.size(); }
  std::size_t n_obs() const { return observations.size(); }

  /// Shape and normalization check; tol = 0 demands exact sums.
  void validate(double tol = 0) const {
    const auto S = n_states(), A = n_actions(), O = n_obs();
    if (S == 0 || A == 0 || O == 0) throw InputError("pomdp: states, actions and observations must be non-empty");
    if (T.size() != S) throw InputError("pomdp: T must have one block per state");
    if (Z.size() != S) throw InputError("pomdp: Z must have one block per state");
    if (b0.size() != S) throw InputError("pomdp: b0 has wrong length");
    for (std::size_t s = 0; s < S; ++s) {
      if (T[s].size() != A || Z[s].size() != A) throw InputError("pomdp: T/Z need one row per action");
      for (std::size_t a = 0; a < A; ++a) {
        if (T[s][a].size() != S) throw InputError("pomdp: T[" + std::to_string(s) + "][" + std::to_string(a) + "] has wrong length");
        if (Z[s][a].size() != O) throw InputError("pomdp: Z[" + std::to_string(s) + "][" + std::to_string(a) + "] has wrong length");
        detail::check_distribution(T[s][a], "pomdp: T[" + std::to_string(s) + "][" + std::to_string(a) + "]", tol);
        detail::check_distribution(Z[s][a], "pomdp: Z[" + std::to_string(s) + "][" + std::to_string(a) + "]", tol);
      }
    }
    detail::check_distribution(b0, "pomdp: b0", tol);
  }
};

inline std::string to_string(const Trajectory& t, const Pomdp& m) {
  if (t.empty()) return "()";
  std::string s;
  for (const auto& [a, o] : t) {
    if (!s.empty()) s += " ";
    s += m.actions[static_cast<std::size_t>(a)] + ":" + m.observations[static_cast<std::size_t>(o)];
  }
  return s;
}

/// Forward filter over unnormalized state weights α(s) = P(h, s_now = s).
template <class Q>
class Filter {
 public:
  explicit Filter(const Pomdp& m) : S_(m.n_states()), A_(m.n_actions()), O_(m.n_obs()) {
    for (const auto& p : m.b0) b0_.push_back(from_rational<Q>(p));
    T_.resize(S_ * A_ * S_);
    Z_.resize(S_ * A_ * O_);
    for (std::size_t s = 0; s < S_; ++s)
      for (std::size_t a = 0; a < A_; ++a) {
        for (std::size_t s2 = 0; s2 < S_; ++s2) T_[(s * A_ + a) * S_ + s2] = from_rational<Q>(m.T[s][a][s2]);
        for (std::size_t o = 0; o < O_; ++o) Z_[(s * A_ + a) * O_ + o] = from_rational<Q>(m.Z[s][a][o]);
      }
  }
  const std::vector<Q>& start() const { return b0_; }
  std::vector<Q> step(const std::vector<Q>& alpha, ActObs ao) const {
    check(ao);
    const auto a = static_cast<std::size_t>(ao.a), o = static_cast<std::size_t>(ao.o);
    std::vector<Q> out(S_, Q(0));
    for (std::size_t s = 0; s < S_; ++s) {
      if (alpha[s] == 0) continue;
      for (std::size_t s2 = 0; s2 < S_; ++s2) {
        const Q& t = T_[(s * A_ + a) * S_ + s2];
        if (t != 0) out[s2] += alpha[s] * t;
      }
    }
    for (std::size_t s2 = 0; s2 < S_; ++s2) out[s2] *= Z_[(s2 * A_ + a) * O_ + o];
    return out;
  }
  std::vector<Q> run(const Trajectory& h) const { return run_from(b0_, h); }
  std::vector<Q> run_from(std::vector<Q> alpha, const Trajectory& h) const {
    for (const auto& ao : h) alpha = step(alpha, ao);
    return alpha;
  }
  static Q mass(const std::vector<Q>& alpha) {
    Q s = 0;
    for (const auto& x : alpha) s += x;
    return s;
  }

 private:
  void check(ActObs ao) const {
    if (ao.a < 0 || static_cast<std::size_t>(ao.a) >= A_ || ao.o < 0 || static_cast<std::size_t>(ao.o) >= O_)
      throw InputError("trajectory: action or observation out of range");
  }
  std::size_t S_, A_, O_;
  std::vector<Q> b0_, T_, Z_;
};

/// P(t | h) = P(ht) / P(h).  Throws InputError if P(h) = 0.
template <class Q = Rational>
Q test_probability(const Pomdp& m, const Trajectory& h, const Trajectory& t) {
  Filter<Q> f(m);
  const auto ah = f.run(h);
  const Q ph = Filter<Q>::mass(ah);
  if (ph == 0) throw InputError("test_probability: history " + to_string(h, m) + " has probability 0");
  return Filter<Q>::mass(f.run_from(ah, t)) / ph;
}

/// All action-observation sequences of exactly `len` pairs, lexicographic
/// in (action, observation).
inline std::vector<Trajectory> all_trajectories(std::size_t n_actions, std::size_t n_obs, int len) {
  std::vector<Trajectory> level{{}};
  for (int l = 0; l < len; ++l) {
    std::vector<Trajectory> next;
    for (const auto& t : level)
      for (std::size_t a = 0; a < n_actions; ++a)
        for (std::size_t o = 0; o < n_obs; ++o) {
          auto u = t;
          u.push_back({static_cast<int>(a), static_cast<int>(o)});
          next.push_back(std::move(u));
        }
    level = std::move(next);
  }
  return level;
}

/// Histories of length 0..max_len with positive probability, shortest
/// first then lexicographic.  The empty history comes first.
inline std::vector<Trajectory> positive_histories(const Pomdp& m, int max_len,
                                                  std::size_t guard = 1'000'000) {
  Filter<Rational> f(m);
  std::vector<Trajectory> out{{}};
  std::vector<std::pair<Trajectory, std::vector<Rational>>> level{{{}, f.start()}};
  for (int l = 1; l <= max_len; ++l) {
    std::vector<std::pair<Trajectory, std::vector<Rational>>> next;
    for (const auto& [h, alpha] : level)
      for (std::size_t a = 0; a < m.n_actions(); ++a)
        for (std::size_t o = 0; o < m.n_obs(); ++o) {
          const ActObs ao{static_cast<int>(a), static_cast<int>(o)};
          auto al = f.step(alpha, ao);
          if (Filter<Rational>::mass(al) == 0) continue;
          auto h2 = h;
          h2.push_back(ao);
          out.push_back(h2);
          next.push_back({std::move(h2), std::move(al)});
          if (out.size() > guard) throw BoundExceeded("positive_histories: more than " + std::to_string(guard) + " histories");
        }
    level = std::move(next);
  }
  return out;
}

template <class Q>
struct SysDynMatrix {
  std::vector<Trajectory> histories;
  std::vector<Trajectory> tests;
  Matrix<Q> values;
};

/// Rows: positive-probability histories up to max_len.  Columns: all tests
/// of length 1..max_len.  `cell_guard` caps rows × columns.
template <class Q = Rational>
SysDynMatrix<Q> build_sdm(const Pomdp& m, int max_len, std::size_t cell_guard = 4'000'000) {
  if (max_len < 1) throw InputError("build_sdm: max_len must be >= 1");
  const double pairs = static_cast<double>(m.n_actions() * m.n_obs());
  double cols = 0, p = 1;
  for (int l = 1; l <= max_len; ++l) cols += (p *= pairs);
  if (cols > static_cast<double>(cell_guard))
    throw BoundExceeded("build_sdm: " + std::to_string(static_cast<long long>(cols)) + " test columns exceed the cell guard");
  SysDynMatrix<Q> sdm;
  sdm.histories = positive_histories(m, max_len, cell_guard);
  for (int l = 1; l <= max_len; ++l) {
    auto lv = all_trajectories(m.n_actions(), m.n_obs(), l);
    sdm.tests.insert(sdm.tests.end(), lv.begin(), lv.end());
  }
  if (static_cast<double>(sdm.histories.size()) * cols > static_cast<double>(cell_guard))
    throw BoundExceeded("build_sdm: " + std::to_string(sdm.histories.size()) + " x " +
                        std::to_string(sdm.tests.size()) + " cells exceed the cell guard");
  sdm.values = Matrix<Q>(sdm.histories.size(), sdm.tests.size());
  Filter<Q> f(m);
  const std::size_t npairs = m.n_actions() * m.n_obs();
  parallel_for(sdm.histories.size(), [&](std::size_t r) {
    const auto ah = f.run(sdm.histories[r]);
    const Q ph = Filter<Q>::mass(ah);
    // Tests are laid out level by level in lexicographic order, so the
    // children of the test at column c (level l, offset i) sit at level l+1,
    // offset i * npairs + j.
    std::vector<std::vector<Q>> level{ah};
    std::size_t col = 0;
    for (int l = 1; l <= max_len; ++l) {
      std::vector<std::vector<Q>> next;
      next.reserve(level.size() * npairs);
      for (const auto& alpha : level)
        for (std::size_t a = 0; a < m.n_actions(); ++a)
          for (std::size_t o = 0; o < m.n_obs(); ++o) {
            auto al = f.step(alpha, {static_cast<int>(a), static_cast<int>(o)});
            sdm.values(r, col++) = Filter<Q>::mass(al) / ph;
            next.push_back(std::move(al));
          }
      level = std::move(next);
    }
  });
  return sdm;
}

template <class Q>
struct PsrModel {
  std::vector<Trajectory> core_tests;
  std::vector<std::size_t> core_columns;
  std::vector<std::size_t> pivot_rows;
  /// psi[h] = (P(q_1 | h), ..., P(q_k | h)) for each SDM row.
  std::vector<std::vector<Q>> psi;
  /// m[c] solves P(t_c | h) = psi[h] · m[c] for each SDM column.
  std::vector<std::vector<Q>> m;
  /// Largest |psi·m - P| over all cells (0 in exact mode).
  double max_abs_error = 0;

  std::size_t size() const { return core_tests.size(); }
  Q predict(std::size_t row, std::size_t col) const {
    Q s = 0;
    for (std::size_t i = 0; i < psi[row].size(); ++i) s += psi[row][i] * m[col][i];
    return s;
  }
};

/// Scans the SDM columns level by level (each level's candidates are the
/// one-pair extensions of the previous level, in lexicographic order); a
/// column joins the core set iff it raises the rank.  Projection vectors
/// come from k pivot rows and are verified on every row.  In float mode a
/// reconstruction error above `tol` throws NumericInconsistency naming the
/// column.
template <class Q>
PsrModel<Q> discover_core_tests(const SysDynMatrix<Q>& sdm, double tol = 1e-9) {
  const std::size_t R = sdm.values.rows(), C = sdm.values.cols();
  if (R == 0 || C == 0) throw InputError("discover_core_tests: empty system-dynamics matrix");
  PsrModel<Q> model;
  IncrementalBasis<Q> colbasis(R, tol);
  for (std::size_t c = 0; c < C; ++c)
    if (colbasis.add(sdm.values.col(c))) {
      model.core_columns.push_back(c);
      model.core_tests.push_back(sdm.tests[c]);
    }
  const std::size_t k = model.core_columns.size();
  if (k == 0) throw NumericInconsistency("discover_core_tests: matrix has rank 0");
  model.psi.assign(R, std::vector<Q>(k));
  for (std::size_t r = 0; r < R; ++r)
    for (std::size_t i = 0; i < k; ++i) model.psi[r][i] = sdm.values(r, model.core_columns[i]);
  IncrementalBasis<Q> rowbasis(k, tol);
  for (std::size_t r = 0; r < R && model.pivot_rows.size() < k; ++r)
    if (rowbasis.add(model.psi[r])) model.pivot_rows.push_back(r);
  if (model.pivot_rows.size() < k)
    throw NumericInconsistency("discover_core_tests: core columns have no invertible row block");
  Matrix<Q> A(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) A(i, j) = model.psi[model.pivot_rows[i]][j];
  model.m.resize(C);
  for (std::size_t c = 0; c < C; ++c) {
    std::vector<Q> b(k);
    for (std::size_t i = 0; i < k; ++i) b[i] = sdm.values(model.pivot_rows[i], c);
    model.m[c] = solve(A, b);
    for (std::size_t r = 0; r < R; ++r) {
      const Q err = model.predict(r, c) - sdm.values(r, c);
      if constexpr (is_exact_v<Q>) {
        if (err != 0) throw Error("discover_core_tests: exact reconstruction failed at column " + std::to_string(c));
      } else {
        const double e = std::abs(err);
        model.max_abs_error = std::max(model.max_abs_error, e);
        if (e > tol)
          throw NumericInconsistency("discover_core_tests: column " + std::to_string(c) +
                                     " is not reproduced by the core tests (error " + std::to_string(e) + ")");
      }
    }
  }
  return model;
}

// ---------------------------------------------------------------------------
// PSR dynamics over reachable prediction vectors.

struct PsrDynamics {
  std::vector<Trajectory> core_tests;
  std::size_t n_actions = 0;
  int depth = 0;
  std::vector<std::vector<Rational>> vectors;
  std::vector<Trajectory> representative;
  /// trans[i][a] = { j : P(ψ_j | ψ_i, a) }
  std::vector<std::vector<std::map<int, Rational>>> trans;

  int find(const std::vector<Rational>& psi) const {
    for (std::size_t i = 0; i < vectors.size(); ++i)
      if (vectors[i] == psi) return static_cast<int>(i);
    return -1;
  }
  Rational prob(int from, int a, int to) const {
    const auto& row = trans[static_cast<std::size_t>(from)][static_cast<std::size_t>(a)];
    auto it = row.find(to);
    return it == row.end() ? Rational(0) : it->second;
  }
};

inline std::vector<Rational> prediction_vector(const Pomdp& m, const std::vector<Trajectory>& core,
                                               const Trajectory& h) {
  Filter<Rational> f(m);
  const auto ah = f.run(h);
  const Rational ph = Filter<Rational>::mass(ah);
  if (ph == 0) throw InputError("prediction_vector: history has probability 0");
  std::vector<Rational> psi;
  for (const auto& q : core) psi.push_back(Filter<Rational>::mass(f.run_from(ah, q)) / ph);
  return psi;
}

/// Breadth-first search over prediction vectors ψ_h reachable from the
/// empty history.  P(ψ' | ψ, a) = Σ_o P(o | h, a) over the o with ψ_{hao} =
/// ψ'.  Vectors first found at the depth limit must only lead to known
/// vectors; otherwise the reachable set is reported as unbounded.
inline PsrDynamics psr_dynamics(const Pomdp& m, const std::vector<Trajectory>& core, int depth) {
  if (depth < 1) throw InputError("psr_dynamics: depth must be >= 1");
  PsrDynamics d;
  d.core_tests = core;
  d.n_actions = m.n_actions();
  d.depth = depth;
  Filter<Rational> f(m);
  std::vector<int> level_of;
  d.vectors.push_back(prediction_vector(m, core, {}));
  d.representative.push_back({});
  level_of.push_back(0);
  for (std::size_t i = 0; i < d.vectors.size(); ++i) {
    const auto h = d.representative[i];
    const auto ah = f.run(h);
    const Rational ph = Filter<Rational>::mass(ah);
    std::vector<std::map<int, Rational>> rows(m.n_actions());
    for (std::size_t a = 0; a < m.n_actions(); ++a)
      for (std::size_t o = 0; o < m.n_obs(); ++o) {
        const ActObs ao{static_cast<int>(a), static_cast<int>(o)};
        const Rational p = Filter<Rational>::mass(f.step(ah, ao)) / ph;
        if (p == 0) continue;
        auto h2 = h;
        h2.push_back(ao);
        auto psi = prediction_vector(m, core, h2);
        int j = d.find(psi);
        if (j < 0) {
          if (level_of[i] >= depth)
            throw BoundExceeded("psr_dynamics: reachable prediction vectors did not close within depth " +
                                std::to_string(depth));
          j = static_cast<int>(d.vectors.size());
          d.vectors.push_back(std::move(psi));
          d.representative.push_back(h2);
          level_of.push_back(level_of[i] + 1);
        }
        rows[a][j] += p;
      }
    d.trans.push_back(std::move(rows));
  }
  return d;
}

struct HomViolation {
  std::string kind;  // "transition", "reward" or "admissibility"
  int s = -1;
  int a = -1;
  int target = -1;
  std::string lhs;
  std::string rhs;
};

struct HomReport {
  std::size_t checked = 0;
  std::vector<HomViolation> violations;
  int depth = 0;  // reachability depth (PSR checks only)
  bool ok() const { return violations.empty(); }
};

/// Checks P'(ψ' | f(ψ), v_ψ(a)) = Σ_{ψ'' ∈ f⁻¹(ψ')} P(ψ'' | ψ, a) for every
/// reachable ψ, every action a and every ψ' of the target.
inline HomReport check_psr_homomorphism(const PsrDynamics& src, const PsrDynamics& dst,
                                        const std::vector<int>& vector_map,
                                        const std::vector<std::vector<int>>& action_map) {
  const int ns = static_cast<int>(src.vectors.size());
  const int nd = static_cast<int>(dst.vectors.size());
  if (static_cast<int>(vector_map.size()) != ns) throw InputError("psr homomorphism: vector map has wrong size");
  if (static_cast<int>(action_map.size()) != ns) throw InputError("psr homomorphism: action map has wrong size");
  std::set<int> hit;
  for (int v : vector_map) {
    if (v < 0 || v >= nd) throw InputError("psr homomorphism: vector image out of range");
    hit.insert(v);
  }
  if (static_cast<int>(hit.size()) != nd) throw InputError("psr homomorphism: vector map is not surjective");
  for (const auto& row : action_map) {
    if (row.size() != src.n_actions) throw InputError("psr homomorphism: action map row has wrong size");
    std::set<int> ah;
    for (int a : row) {
      if (a < 0 || static_cast<std::size_t>(a) >= dst.n_actions)
        throw InputError("psr homomorphism: action image out of range");
      ah.insert(a);
    }
    if (ah.size() != dst.n_actions) throw InputError("psr homomorphism: action map is not surjective");
  }
  HomReport rep;
  rep.depth = std::min(src.depth, dst.depth);
  for (int psi = 0; psi < ns; ++psi)
    for (int a = 0; a < static_cast<int>(src.n_actions); ++a) {
      const int fpsi = vector_map[static_cast<std::size_t>(psi)];
      const int va = action_map[static_cast<std::size_t>(psi)][static_cast<std::size_t>(a)];
      for (int tp = 0; tp < nd; ++tp) {
        Rational rhs = 0;
        for (int s2 = 0; s2 < ns; ++s2)
          if (vector_map[static_cast<std::size_t>(s2)] == tp) rhs += src.prob(psi, a, s2);
        const Rational lhs = dst.prob(fpsi, va, tp);
        ++rep.checked;
        if (lhs != rhs) rep.violations.push_back({"transition", psi, a, tp, to_string(lhs), to_string(rhs)});
      }
    }
  return rep;
}

/// The vector map determined by relabeling actions and observations: ψ_h
/// goes to ψ'_{h'} where h' is h with both symbol maps applied.
inline std::vector<int> induce_vector_map(const Pomdp& src_model, const PsrDynamics& src, const Pomdp& dst_model,
                                          const PsrDynamics& dst, const std::vector<int>& action_map,
                                          const std::vector<int>& obs_map) {
  if (action_map.size() != src_model.n_actions() || obs_map.size() != src_model.n_obs())
    throw InputError("psr homomorphism: symbol maps have wrong size");
  for (int a : action_map)
    if (a < 0 || static_cast<std::size_t>(a) >= dst_model.n_actions())
      throw InputError("psr homomorphism: action image out of range");
  for (int o : obs_map)
    if (o < 0 || static_cast<std::size_t>(o) >= dst_model.n_obs())
      throw InputError("psr homomorphism: observation image out of range");
  std::vector<int> out;
  for (const auto& h : src.representative) {
    Trajectory h2;
    for (const auto& [a, o] : h)
      h2.push_back({action_map[static_cast<std::size_t>(a)], obs_map[static_cast<std::size_t>(o)]});
    Filter<Rational> f(dst_model);
    if (Filter<Rational>::mass(f.run(h2)) == 0)
      throw InputError("psr homomorphism: image history " + to_string(h2, dst_model) + " has probability 0");
    const int j = dst.find(prediction_vector(dst_model, dst.core_tests, h2));
    if (j < 0) throw InputError("psr homomorphism: image of " + to_string(h, src_model) + " is not a reachable vector");
    out.push_back(j);
  }
  return out;
}

// ---------------------------------------------------------------------------
// MDPs.

struct Mdp {
  std::vector<std::string> states;
  std::vector<std::string> actions;
  /// admissible[s][a]: (s, a) ∈ Ψ
  std::vector<std::vector<bool>> admissible;
  /// P[s][a][s'] (rows of inadmissible pairs are ignored)
  std::vector<std::vector<std::vector<Rational>>> P;
  std::vector<std::vector<Rational>> R;

  std::size_t n_states() const { return states.size(); }
  std::size_t n_actions() const { return actions.size(); }
  bool psi(int s, int a) const { return admissible[static_cast<std::size_t>(s)][static_cast<std::size_t>(a)]; }

  void validate(double tol = 0) const {
    const auto S = n_states(), A = n_actions();
    if (S == 0 || A == 0) throw InputError("mdp: states and actions must be non-empty");
    if (admissible.size() != S || P.size() != S || R.size() != S) throw InputError("mdp: tables need one block per state");
    for (std::size_t s = 0; s < S; ++s) {
      if (admissible[s].size() != A || P[s].size() != A || R[s].size() != A)
        throw InputError("mdp: tables need one row per action");
      for (std::size_t a = 0; a < A; ++a) {
        if (!admissible[s][a]) continue;
        if (P[s][a].size() != S) throw InputError("mdp: P[" + std::to_string(s) + "][" + std::to_string(a) + "] has wrong length");
        detail::check_distribution(P[s][a], "mdp: P[" + std::to_string(s) + "][" + std::to_string(a) + "]", tol);
      }
    }
  }
};

struct MdpHomomorphism {
  std::vector<int> state_map;
  /// action_map[s][a] for admissible (s, a); -1 elsewhere.
  std::vector<std::vector<int>> action_map;
};

/// Checks the stochastic substitution property
///   P'(f(s), g_s(a), f(s')) = Σ_{s'' ∈ [s']_f} P(s, a, s'')
/// and R'(f(s), g_s(a)) = R(s, a) on every admissible (s, a), and that
/// admissible pairs go to admissible pairs.  Non-surjective maps are
/// rejected with InputError.
inline HomReport check_mdp_homomorphism(const Mdp& src, const Mdp& dst, const MdpHomomorphism& h) {
  const int S = static_cast<int>(src.n_states()), S2 = static_cast<int>(dst.n_states());
  const int A = static_cast<int>(src.n_actions());
  if (static_cast<int>(h.state_map.size()) != S) throw InputError("mdp homomorphism: state map has wrong size");
  if (static_cast<int>(h.action_map.size()) != S) throw InputError("mdp homomorphism: action map has wrong size");
  std::set<int> hit;
  for (int t : h.state_map) {
    if (t < 0 || t >= S2) throw InputError("mdp homomorphism: state image out of range");
    hit.insert(t);
  }
  if (static_cast<int>(hit.size()) != S2) throw InputError("mdp homomorphism: state map is not surjective");
  HomReport rep;
  for (int s = 0; s < S; ++s) {
    const int fs = h.state_map[static_cast<std::size_t>(s)];
    if (static_cast<int>(h.action_map[static_cast<std::size_t>(s)].size()) != A)
      throw InputError("mdp homomorphism: action map row has wrong size");
    std::set<int> acts;
    for (int a = 0; a < A; ++a) {
      if (!src.psi(s, a)) continue;
      const int g = h.action_map[static_cast<std::size_t>(s)][static_cast<std::size_t>(a)];
      if (g < 0 || g >= static_cast<int>(dst.n_actions()))
        throw InputError("mdp homomorphism: action image out of range at state " + src.states[static_cast<std::size_t>(s)]);
      acts.insert(g);
    }
    for (int a2 = 0; a2 < static_cast<int>(dst.n_actions()); ++a2)
      if (dst.psi(fs, a2) && !acts.count(a2))
        throw InputError("mdp homomorphism: action map at state " + src.states[static_cast<std::size_t>(s)] +
                         " is not surjective");
    for (int a = 0; a < A; ++a) {
      if (!src.psi(s, a)) continue;
      const int g = h.action_map[static_cast<std::size_t>(s)][static_cast<std::size_t>(a)];
      ++rep.checked;
      if (!dst.psi(fs, g)) {
        rep.violations.push_back({"admissibility", s, a, -1, "", ""});
        continue;
      }
      for (int t = 0; t < S2; ++t) {
        Rational rhs = 0;
        for (int s2 = 0; s2 < S; ++s2)
          if (h.state_map[static_cast<std::size_t>(s2)] == t) rhs += src.P[static_cast<std::size_t>(s)][static_cast<std::size_t>(a)][static_cast<std::size_t>(s2)];
        const Rational& lhs = dst.P[static_cast<std::size_t>(fs)][static_cast<std::size_t>(g)][static_cast<std::size_t>(t)];
        ++rep.checked;
        if (lhs != rhs) rep.violations.push_back({"transition", s, a, t, to_string(lhs), to_string(rhs)});
      }
      const Rational& r2 = dst.R[static_cast<std::size_t>(fs)][static_cast<std::size_t>(g)];
      const Rational& r1 = src.R[static_cast<std::size_t>(s)][static_cast<std::size_t>(a)];
      ++rep.checked;
      if (r2 != r1) rep.violations.push_back({"reward", s, a, -1, to_string(r2), to_string(r1)});
    }
  }
  return rep;
}

/// second ∘ first.
inline MdpHomomorphism compose(const MdpHomomorphism& second, const MdpHomomorphism& first) {
  MdpHomomorphism h;
  for (std::size_t s = 0; s < first.state_map.size(); ++s) {
    const int mid = first.state_map[s];
    h.state_map.push_back(second.state_map.at(static_cast<std::size_t>(mid)));
    auto& row = h.action_map.emplace_back();
    for (int a : first.action_map[s])
      row.push_back(a < 0 ? -1 : second.action_map.at(static_cast<std::size_t>(mid)).at(static_cast<std::size_t>(a)));
  }
  return h;
}

inline MdpHomomorphism identity_homomorphism(const Mdp& m) {
  MdpHomomorphism h;
  for (int s = 0; s < static_cast<int>(m.n_states()); ++s) {
    h.state_map.push_back(s);
    auto& row = h.action_map.emplace_back();
    for (int a = 0; a < static_cast<int>(m.n_actions()); ++a) row.push_back(m.psi(s, a) ? a : -1);
  }
  return h;
}

// ---------------------------------------------------------------------------
// The nerve of a PSR: the prefix order on positive-probability histories up
// to max_len, with the morphism h -> ht labeled by P(t | h).

struct PsrNerve {
  std::vector<Trajectory> histories;
  FiniteCategory category;
  Nerve nerve;
};

inline PsrNerve psr_nerve(const Pomdp& m, int max_len, int trunc, std::size_t guard = 200'000) {
  auto hs = positive_histories(m, max_len);
  auto is_prefix = [](const Trajectory& p, const Trajectory& h) {
    return p.size() <= h.size() && std::equal(p.begin(), p.end(), h.begin());
  };
  std::vector<std::string> names;
  for (const auto& h : hs) names.push_back(to_string(h, m));
  std::vector<Morphism> mor;
  std::vector<int> ids(hs.size());
  std::map<std::pair<int, int>, int> arrow;
  for (int x = 0; x < static_cast<int>(hs.size()); ++x)
    for (int y = 0; y < static_cast<int>(hs.size()); ++y) {
      const auto& hx = hs[static_cast<std::size_t>(x)];
      const auto& hy = hs[static_cast<std::size_t>(y)];
      if (!is_prefix(hx, hy)) continue;
      if (mor.size() >= guard) throw BoundExceeded("psr_nerve: too many morphisms");
      arrow[{x, y}] = static_cast<int>(mor.size());
      if (x == y) {
        ids[static_cast<std::size_t>(x)] = static_cast<int>(mor.size());
        mor.push_back({"id", x, y});
      } else {
        Trajectory t(hy.begin() + static_cast<long>(hx.size()), hy.end());
        mor.push_back({to_string(t, m) + "@" + to_string(test_probability(m, hx, t)), x, y});
      }
    }
  std::vector<std::array<int, 3>> comp;
  for (const auto& [xy, f] : arrow)
    for (const auto& [yz, g] : arrow)
      if (xy.second == yz.first) comp.push_back({g, f, arrow.at({xy.first, yz.second})});
  FiniteCategory cat(names, std::move(mor), std::move(ids), comp);
  auto nv = build_nerve(cat, trunc);
  return {std::move(hs), std::move(cat), std::move(nv)};
}

// ---------------------------------------------------------------------------
// Shipped instances.

namespace fleet {

inline Rational q(long long n, long long d = 1) { return Rational(n, d); }

/// One state, one action, one observation.
inline Pomdp trivial1() {
  return {{"s"}, {"a"}, {"o"}, {{{q(1)}}}, {{{q(1)}}}, {q(1)}};
}

/// Deterministic n-cycle s -> s+1; the observation reveals the new state.
inline Pomdp cycle(int n, const std::string& obs_prefix = "o") {
  Pomdp m;
  for (int s = 0; s < n; ++s) {
    m.states.push_back("s" + std::to_string(s));
    m.observations.push_back(obs_prefix + std::to_string(s));
  }
  m.actions = {"a"};
  m.T.assign(static_cast<std::size_t>(n), {std::vector<Rational>(static_cast<std::size_t>(n), q(0))});
  m.Z.assign(static_cast<std::size_t>(n), {std::vector<Rational>(static_cast<std::size_t>(n), q(0))});
  for (int s = 0; s < n; ++s) {
    m.T[static_cast<std::size_t>(s)][0][static_cast<std::size_t>((s + 1) % n)] = 1;
    m.Z[static_cast<std::size_t>(s)][0][static_cast<std::size_t>(s)] = 1;
  }
  m.b0.assign(static_cast<std::size_t>(n), q(0));
  m.b0[0] = 1;
  return m;
}

inline Pomdp cycle2() { return cycle(2); }
inline Pomdp cycle3() { return cycle(3); }

/// cycle2 with the observation alphabet reversed: "p0" reports state 1.
inline Pomdp cycle2_relabeled() {
  Pomdp m = cycle(2, "p");
  for (auto& blk : m.Z) std::reverse(blk[0].begin(), blk[0].end());
  return m;
}

/// Three-state ring: the action advances w.p. 2/3 and stays w.p. 1/3; the
/// observation names the new state w.p. 1/2 and each other state w.p. 1/4.
inline Pomdp ring3() {
  Pomdp m;
  m.states = {"s0", "s1", "s2"};
  m.actions = {"a"};
  m.observations = {"o0", "o1", "o2"};
  m.T.assign(3, {std::vector<Rational>(3, q(0))});
  m.Z.assign(3, {std::vector<Rational>(3, q(1, 4))});
  for (std::size_t s = 0; s < 3; ++s) {
    m.T[s][0][s] = q(1, 3);
    m.T[s][0][(s + 1) % 3] = q(2, 3);
    m.Z[s][0][s] = q(1, 2);
  }
  m.b0 = {q(1), q(0), q(0)};
  return m;
}

/// Two states, actions stay/flip, a reading that is correct w.p. 3/4.
inline Pomdp switch2() {
  Pomdp m;
  m.states = {"s0", "s1"};
  m.actions = {"stay", "flip"};
  m.observations = {"o0", "o1"};
  m.T = {{{q(1), q(0)}, {q(0), q(1)}}, {{q(0), q(1)}, {q(1), q(0)}}};
  m.Z = {{{q(3, 4), q(1, 4)}, {q(3, 4), q(1, 4)}}, {{q(1, 4), q(3, 4)}, {q(1, 4), q(3, 4)}}};
  m.b0 = {q(1, 2), q(1, 2)};
  return m;
}

inline std::vector<std::pair<std::string, Pomdp>> pomdps() {
  return {{"trivial1", trivial1()}, {"cycle2", cycle2()}, {"ring3", ring3()},
          {"switch2", switch2()},   {"cycle3", cycle3()}};
}

/// A corridor of `cells` cells; L/R move w.p. 3/4 and otherwise stay
/// (a move into a wall stays w.p. 1).  Reward 1 in the two end cells.
/// `copies` disjoint copies are laid out one after another.
inline Mdp corridor(int cells = 4, int copies = 1) {
  Mdp m;
  const int n = cells * copies;
  for (int c = 0; c < copies; ++c)
    for (int i = 0; i < cells; ++i)
      m.states.push_back(copies == 1 ? "s" + std::to_string(i) : "c" + std::to_string(c) + "s" + std::to_string(i));
  m.actions = {"L", "R"};
  m.admissible.assign(static_cast<std::size_t>(n), {true, true});
  m.P.assign(static_cast<std::size_t>(n), std::vector<std::vector<Rational>>(2, std::vector<Rational>(static_cast<std::size_t>(n), q(0))));
  m.R.assign(static_cast<std::size_t>(n), std::vector<Rational>(2, q(0)));
  for (int c = 0; c < copies; ++c)
    for (int i = 0; i < cells; ++i) {
      const auto s = static_cast<std::size_t>(c * cells + i);
      for (int a = 0; a < 2; ++a) {
        const int j = a == 0 ? i - 1 : i + 1;
        auto& row = m.P[s][static_cast<std::size_t>(a)];
        if (j < 0 || j >= cells) {
          row[s] = 1;
        } else {
          row[static_cast<std::size_t>(c * cells + j)] = q(3, 4);
          row[s] = q(1, 4);
        }
        if (i == 0 || i == cells - 1) m.R[s][static_cast<std::size_t>(a)] = 1;
      }
    }
  return m;
}

inline Mdp gridworld4() { return corridor(4, 1); }
inline Mdp gridworld4_twice() { return corridor(4, 2); }

/// gridworld4 modulo the mirror symmetry: states edge/inner, actions
/// out (towards the nearer wall) / in.
inline Mdp gridworld4_mirror() {
  Mdp m;
  m.states = {"edge", "inner"};
  m.actions = {"out", "in"};
  m.admissible.assign(2, {true, true});
  m.P = {{{q(1), q(0)}, {q(1, 4), q(3, 4)}}, {{q(3, 4), q(1, 4)}, {q(0), q(1)}}};
  m.R = {{q(1), q(1)}, {q(0), q(0)}};
  return m;
}

/// The mirror collapse gridworld4 -> gridworld4_mirror.
inline MdpHomomorphism mirror_collapse() {
  // L is "out" on the left half, R on the right half.
  return {{0, 1, 1, 0}, {{0, 1}, {0, 1}, {1, 0}, {1, 0}}};
}

/// Two copies -> one copy, cellwise.
inline MdpHomomorphism fold_copies() {
  return {{0, 1, 2, 3, 0, 1, 2, 3}, std::vector<std::vector<int>>(8, {0, 1})};
}

/// gridworld4 -> a two-state MDP merging {s0, s1} and {s2, s3}; rewards of
/// the merged states differ, so this is not a homomorphism into any MDP.
inline Mdp gridworld4_halves() {
  Mdp m;
  m.states = {"left", "right"};
  m.actions = {"L", "R"};
  m.admissible.assign(2, {true, true});
  m.P = {{{q(1), q(0)}, {q(5, 8), q(3, 8)}}, {{q(3, 8), q(5, 8)}, {q(0), q(1)}}};
  m.R = {{q(1), q(1)}, {q(1), q(1)}};
  return m;
}

inline MdpHomomorphism halves_collapse() { return {{0, 0, 1, 1}, std::vector<std::vector<int>>(4, {0, 1})}; }

}  // namespace fleet

}  // namespace simpdisc
