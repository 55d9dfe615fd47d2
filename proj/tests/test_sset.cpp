#include <catch_amalgamated.hpp>

#include "oracles.hpp"
#include "simpdisc/fincat.hpp"
#include "simpdisc/sset.hpp"

using namespace simpdisc;

namespace {

std::vector<std::size_t> counts(const SimplicialSet& x) {
  std::vector<std::size_t> out;
  for (int n = 0; n <= x.trunc_dim(); ++n) out.push_back(x.count(n));
  return out;
}

int index_of_label(const SimplicialSet& x, int dim, const std::string& label) {
  for (int i = 0; i < static_cast<int>(x.count(dim)); ++i)
    if (x.label(dim, i) == label) return i;
  return -1;
}

}  // namespace

TEST_CASE("standard_simplex: counts", "[sset]") {
  CHECK(counts(standard_simplex(0, 4)) == std::vector<std::size_t>{1, 1, 1, 1, 1});
  CHECK(counts(standard_simplex(2, 2)) == std::vector<std::size_t>{3, 6, 10});
  CHECK(counts(standard_simplex(1, 2)) == std::vector<std::size_t>{2, 3, 4});
  for (int n = 0; n <= 4; ++n)
    for (int m = 0; m <= 4; ++m)
      CHECK(standard_simplex(n, 4).count(m) == oracle::monotone_tuples(m + 1, n + 1).size());
}

TEST_CASE("standard_simplex: nondegenerate counts are binomial", "[sset][property]") {
  for (int n = 0; n <= 5; ++n) {
    const auto x = standard_simplex(n, std::max(n, 1) + 1);
    for (int m = 0; m <= n; ++m)
      CHECK(static_cast<long long>(x.nondegenerate(m).size()) == oracle::binom(n + 1, m + 1));
  }
}

TEST_CASE("standard_simplex: labels in lexicographic order", "[sset]") {
  const auto x = standard_simplex(2, 2);
  CHECK(x.tables().labels[1] == std::vector<std::string>{"00", "01", "02", "11", "12", "22"});
  // d_0 of "012" drops the first vertex
  const int top = index_of_label(x, 2, "012");
  CHECK(x.label(1, x.face(2, top, 0)) == "12");
  CHECK(x.label(1, x.face(2, top, 1)) == "02");
  CHECK(x.label(1, x.face(2, top, 2)) == "01");
  CHECK(x.label(2, x.degeneracy(1, index_of_label(x, 1, "01"), 1)) == "011");
}

TEST_CASE("constructed simplicial sets satisfy the identities", "[sset][property]") {
  for (int n = 0; n <= 4; ++n) CHECK(check_identities(standard_simplex(n, 4)).empty());
  for (int n = 1; n <= 4; ++n) {
    CHECK(check_identities(*inclusion(boundary(n, 4)).sub).empty());
    for (int k = 0; k <= n; ++k) CHECK(check_identities(*inclusion(horn(n, k, 4)).sub).empty());
  }
  CHECK(check_identities(disjoint_union(standard_simplex(1, 3), standard_simplex(2, 3))).empty());
}

TEST_CASE("check_identities detects a broken table", "[sset]") {
  auto t = standard_simplex(1, 2).tables();
  std::swap(t.faces[1][1][0], t.faces[1][1][1]);  // reverse the edge "01"
  CHECK_FALSE(check_identities(SimplicialSet(t)).empty());
}

TEST_CASE("boundary: members", "[sset]") {
  const auto b2 = boundary(2, 2);
  CHECK(b2.count(2) == 9);
  CHECK(!b2.contains(2, index_of_label(b2.ambient(), 2, "012")));
  CHECK(b2.count(1) == 6);
  CHECK(boundary(1, 1).count(0) == 2);
}

TEST_CASE("horn: members", "[sset]") {
  const auto l21 = horn(2, 1, 2);
  CHECK(l21.count(1) == 5);
  CHECK(!l21.contains(1, index_of_label(l21.ambient(), 1, "02")));
  const auto l20 = horn(2, 0, 2);
  CHECK(!l20.contains(1, index_of_label(l20.ambient(), 1, "12")));
  CHECK(l20.count(1) == 5);
  const auto l10 = horn(1, 0, 1);
  // Λ¹₀ is the face opposite vertex 1, i.e. the vertex 0
  CHECK(l10.members(0) == std::vector<int>{0});
  CHECK_THROWS_AS(horn(2, 3, 2), InputError);
}

TEST_CASE("horn membership matches the image test", "[sset][property]") {
  for (int n = 1; n <= 4; ++n)
    for (int k = 0; k <= n; ++k) {
      const auto h = horn(n, k, 4);
      for (int m = 0; m <= 4; ++m) {
        const auto tuples = oracle::monotone_tuples(m + 1, n + 1);
        for (std::size_t s = 0; s < tuples.size(); ++s) {
          std::set<int> img(tuples[s].begin(), tuples[s].end());
          img.insert(k);
          CHECK(h.contains(m, static_cast<int>(s)) == (static_cast<int>(img.size()) != n + 1));
        }
      }
    }
}

TEST_CASE("horn ⊂ boundary ⊂ simplex", "[sset][property]") {
  for (int n = 1; n <= 4; ++n) {
    const auto b = boundary(n, 4);
    CHECK(is_closed_subset(b));
    for (int k = 0; k <= n; ++k) {
      const auto h = horn(n, k, 4);
      CHECK(is_closed_subset(h));
      bool strict = false;
      for (int m = 0; m <= 4; ++m) {
        for (int s = 0; s < static_cast<int>(b.ambient().count(m)); ++s)
          if (h.contains(m, s)) CHECK(b.contains(m, s));
        CHECK(b.count(m) <= b.ambient().count(m));
        strict = strict || h.count(m) < b.count(m);
      }
      CHECK(strict);
      CHECK(b.count(n) < b.ambient().count(n));
    }
  }
}

TEST_CASE("is_closed_subset", "[sset]") {
  CHECK(is_closed_subset(boundary(2, 3)));
  CHECK(is_closed_subset(horn(3, 2, 3)));
  auto amb = share(standard_simplex(2, 2));
  std::vector<std::vector<bool>> mem{std::vector<bool>(3, false), std::vector<bool>(6, false),
                                     std::vector<bool>(10, false)};
  mem[2][static_cast<std::size_t>(index_of_label(*amb, 2, "012"))] = true;
  SimplicialSubset only_top(amb, mem);
  CHECK_FALSE(is_closed_subset(only_top));
  CHECK_THROWS_AS(inclusion(only_top), InputError);
}

TEST_CASE("check_simplicial_map", "[sset]") {
  auto d2 = share(standard_simplex(2, 2));
  CHECK(check_simplicial_map(identity_map(d2)).empty());

  auto d1 = share(standard_simplex(1, 2));
  auto pt = share(terminal(2));
  SimplicialMap bang(d1, pt, {{0, 0}, {0, 0, 0}, {0, 0, 0, 0}});
  CHECK(check_simplicial_map(bang).empty());

  // swap the vertices but keep the edge "01"
  SimplicialMap swap(d1, d1, {{1, 0}, {2, 1, 0}, {3, 2, 1, 0}});
  CHECK_FALSE(check_simplicial_map(swap).empty());
}

TEST_CASE("inclusion is simplicial and injective", "[sset]") {
  const auto inc = inclusion(horn(3, 1, 3));
  CHECK(check_simplicial_map(inc.map).empty());
  for (int n = 0; n <= 3; ++n) {
    std::set<int> img(inc.map.assignment()[static_cast<std::size_t>(n)].begin(),
                      inc.map.assignment()[static_cast<std::size_t>(n)].end());
    CHECK(img.size() == inc.sub->count(n));
  }
}

TEST_CASE("compose of simplicial maps", "[sset]") {
  auto d2 = share(standard_simplex(2, 2));
  const auto inc = inclusion(boundary(2, 2));
  auto comp = compose(identity_map(d2), inc.map);
  CHECK(comp.assignment() == inc.map.assignment());
}

TEST_CASE("permuted and disjoint_union", "[sset]") {
  const auto x = standard_simplex(1, 2);
  std::vector<std::vector<int>> perm{{1, 0}, {2, 0, 1}, {3, 2, 1, 0}};
  const auto y = permuted(x, perm);
  CHECK(check_identities(y).empty());
  CHECK(counts(y) == counts(x));
  const auto u = disjoint_union(x, x);
  CHECK(counts(u) == std::vector<std::size_t>{4, 6, 8});
}

TEST_CASE("empty simplicial set", "[sset]") {
  SimplicialSet e(3);
  CHECK(e.total_count() == 0);
  CHECK(check_identities(e).empty());
}
