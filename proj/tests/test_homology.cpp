#include <catch_amalgamated.hpp>

#include "oracles.hpp"
#include "simpdisc/fincat.hpp"
#include "simpdisc/homology.hpp"

using namespace simpdisc;

namespace {

HomologyGroup Zr(int dim, std::size_t r, std::vector<Integer> torsion = {}) {
  HomologyGroup h;
  h.dim = dim;
  h.free_rank = r;
  h.torsion = std::move(torsion);
  return h;
}

std::vector<std::size_t> betti(const SimplicialSet& x) {
  std::vector<std::size_t> out;
  for (const auto& h : homology_all(chain_complex(x))) out.push_back(h.free_rank);
  return out;
}

Matrix<Integer> to_matrix(const oracle::IMat& m) {
  Matrix<Integer> a(m.size(), m.empty() ? 0 : m[0].size());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = m[i][j];
  return a;
}

}  // namespace

TEST_CASE("boundary of a boundary is zero", "[homology][property]") {
  for (int n = 0; n <= 4; ++n) {
    CHECK(boundary_squares_to_zero(chain_complex(standard_simplex(n, 5))));
    if (n >= 1) {
      CHECK(boundary_squares_to_zero(chain_complex(*inclusion(boundary(n, 5)).sub)));
      for (int k = 0; k <= n; ++k) CHECK(boundary_squares_to_zero(chain_complex(*inclusion(horn(n, k, 5)).sub)));
    }
  }
  for (const auto& [name, c] : catalogue::all()) {
    INFO(name);
    CHECK(boundary_squares_to_zero(chain_complex(nerve(c, 4))));
  }
}

TEST_CASE("homology of simplices, boundaries and horns", "[homology]") {
  for (int n = 0; n <= 4; ++n) {
    INFO("n = " << n);
    const auto hs = homology_all(chain_complex(standard_simplex(n, 5)));
    REQUIRE(hs.size() == 5);
    CHECK(hs[0] == Zr(0, 1));
    for (int d = 1; d < 5; ++d) CHECK(hs[static_cast<std::size_t>(d)].is_zero());
  }
  const auto b2 = homology_all(chain_complex(*inclusion(boundary(2, 3)).sub));
  CHECK(b2[0] == Zr(0, 1));
  CHECK(b2[1] == Zr(1, 1));
  CHECK(b2[2].is_zero());

  const auto b3 = homology_all(chain_complex(*inclusion(boundary(3, 4)).sub));
  CHECK(b3[0] == Zr(0, 1));
  CHECK(b3[1].is_zero());
  CHECK(b3[2] == Zr(2, 1));
  CHECK(to_string(b3[2]) == "Z");

  for (int n = 1; n <= 4; ++n)
    for (int k = 0; k <= n; ++k)
      CHECK(betti(*inclusion(horn(n, k, 5)).sub) == std::vector<std::size_t>{1, 0, 0, 0, 0});
}

TEST_CASE("classifying spaces", "[homology]") {
  const auto h1 = classifying_space_homology(catalogue::z2(), 4, 1);
  CHECK(h1 == Zr(1, 0, {2}));
  CHECK(to_string(h1) == "Z/2");
  CHECK(classifying_space_homology(catalogue::z2(), 4, 2).is_zero());
  CHECK(classifying_space_homology(catalogue::z2(), 4, 0) == Zr(0, 1));

  CHECK(classifying_space_homology(discrete_category(3), 2, 0) == Zr(0, 3));
  CHECK(to_string(classifying_space_homology(discrete_category(3), 2, 0)) == "Z^3");
  // two parallel arrows: a circle
  CHECK(classifying_space_homology(catalogue::parallel(), 3, 1) == Zr(1, 1));
  for (const auto& name : {"terminal", "arrow", "chain3", "square", "idempotent"}) {
    INFO(name);
    const auto c = *catalogue::by_name(name);
    CHECK(classifying_space_homology(c, 4, 0) == Zr(0, 1));
    CHECK(classifying_space_homology(c, 4, 1).is_zero());
    CHECK(classifying_space_homology(c, 4, 2).is_zero());
  }
  CHECK_THROWS_AS(classifying_space_homology(catalogue::z2(), 3, 2), InputError);
}

TEST_CASE("imset lattice homology", "[homology]") {
  for (int n = 0; n <= 3; ++n) {
    INFO("n = " << n);
    CHECK(imset_poset_homology(n, 0) == Zr(0, 1));
    CHECK(imset_poset_homology(n, 1).is_zero());
    CHECK(imset_poset_homology(n, 0, ImsetReading::discrete) == Zr(0, std::size_t{1} << n));
    CHECK(imset_poset_homology(n, 1, ImsetReading::discrete).is_zero());
  }
  CHECK_THROWS_AS(imset_poset_homology(5, 0), BoundExceeded);
}

TEST_CASE("homology is invariant under relabeling", "[homology][property]") {
  const auto x = *inclusion(boundary(3, 4)).sub;
  std::vector<std::vector<int>> perm;
  for (int n = 0; n <= 4; ++n) {
    std::vector<int> p(x.count(n));
    for (std::size_t i = 0; i < p.size(); ++i) p[i] = static_cast<int>(p.size() - 1 - i);
    perm.push_back(p);
  }
  CHECK(homology_all(chain_complex(permuted(x, perm))) == homology_all(chain_complex(x)));
}

TEST_CASE("homology of a disjoint union is the direct sum", "[homology][property]") {
  const auto a = *inclusion(boundary(2, 3)).sub;
  const auto b = standard_simplex(1, 3);
  const auto u = disjoint_union(a, b);
  const auto ha = homology_all(chain_complex(a)), hb = homology_all(chain_complex(b)),
             hu = homology_all(chain_complex(u));
  for (std::size_t d = 0; d < hu.size(); ++d) {
    CHECK(hu[d].free_rank == ha[d].free_rank + hb[d].free_rank);
    CHECK(hu[d].torsion.size() == ha[d].torsion.size() + hb[d].torsion.size());
  }
  const auto z = nerve(catalogue::z2(), 4);
  const auto hz = homology_all(chain_complex(disjoint_union(z, z)));
  CHECK(hz[0] == Zr(0, 2));
  CHECK(hz[1] == Zr(1, 0, {2, 2}));
}

TEST_CASE("truncation caveat", "[homology]") {
  const auto cc = chain_complex(standard_simplex(2, 3));
  CHECK(homology(cc, 2).truncation_caveat);
  CHECK_FALSE(homology(cc, 1).truncation_caveat);
  CHECK_THROWS_AS(homology(cc, 3), InputError);
  CHECK_THROWS_AS(homology(cc, -1), InputError);
}

TEST_CASE("smith_invariants: examples", "[homology]") {
  CHECK(smith_invariants(to_matrix({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}})) == std::vector<Integer>{2, 6, 12});
  CHECK(smith_invariants(to_matrix({{0, 0}, {0, 0}})).empty());
  CHECK(smith_invariants(to_matrix({{2, 0}, {0, 3}})) == std::vector<Integer>{1, 6});
  CHECK(smith_invariants(Matrix<Integer>(0, 4)).empty());
}

TEST_CASE("smith_invariants agree with the determinantal oracle", "[homology][property]") {
  std::mt19937 rng(20240601);
  std::uniform_int_distribution<std::size_t> dim(1, 8);
  for (int trial = 0; trial < 150; ++trial) {
    const auto r = dim(rng), c = dim(rng);
    const auto m = oracle::random_matrix(rng, r, c);
    const auto got = smith_invariants(to_matrix(m));
    INFO(r << "x" << c << " trial " << trial);
    REQUIRE(got.size() == oracle::rational_rank(m));
    REQUIRE(got == oracle::determinantal_invariants(m));
    for (std::size_t i = 1; i < got.size(); ++i) CHECK(got[i] % got[i - 1] == 0);
  }
}
