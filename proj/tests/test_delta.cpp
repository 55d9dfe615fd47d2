#include <catch_amalgamated.hpp>

#include "oracles.hpp"
#include "simpdisc/delta.hpp"

using namespace simpdisc;
using namespace simpdisc::delta;

TEST_CASE("compose: worked examples", "[delta]") {
  // σ_0 : [1] -> [0] after δ_0 : [0] -> [1]
  auto r = compose(as_map(codegeneracy(0, 0)), as_map(coface(0, 1)));
  CHECK(r == MonotoneMap::identity(1));

  auto f = MonotoneMap(4, {0, 2, 2, 3});
  CHECK(compose(MonotoneMap::identity(4), f) == f);
  CHECK(compose(f, MonotoneMap::identity(4)) == f);

  // δ_2 : [1] -> [2] after δ_1 : [0] -> [1] is 0 |-> 0
  auto g = compose(as_map(coface(2, 2)), as_map(coface(1, 1)));
  CHECK(g.dom_size() == 1);
  CHECK(g.cod_size() == 3);
  CHECK(g.values() == std::vector<int>{0});
  CHECK(g.values() == oracle::after(oracle::delta(2, 2), oracle::delta(1, 1)));
}

TEST_CASE("compose: size mismatch", "[delta]") {
  CHECK_THROWS_AS(compose(MonotoneMap::identity(3), MonotoneMap::identity(2)), DimensionMismatch);
}

TEST_CASE("MonotoneMap validates its invariants", "[delta]") {
  CHECK_THROWS_AS(MonotoneMap(2, {1, 0}), InputError);
  CHECK_THROWS_AS(MonotoneMap(2, {0, 2}), InputError);
  CHECK_THROWS_AS(MonotoneMap(0, {0}), InputError);
}

TEST_CASE("as_map: generators", "[delta]") {
  CHECK(as_map(coface(1, 1)).values() == std::vector<int>{0});
  CHECK(as_map(codegeneracy(0, 0)).values() == std::vector<int>{0, 0});
  CHECK(as_map(coface(0, 2)).values() == std::vector<int>{1, 2});
  CHECK(as_map(coface(0, 2)).cod_size() == 3);
  CHECK_THROWS_AS(as_map(coface(3, 2)), InputError);
  CHECK_THROWS_AS(as_map(codegeneracy(1, 0)), InputError);
  for (int n = 1; n <= 6; ++n)
    for (int i = 0; i <= n; ++i) {
      CHECK(as_map(coface(i, n)).values() == oracle::delta(i, n));
      CHECK(as_map(coface(i, n)).is_injective());
    }
  for (int n = 0; n <= 6; ++n)
    for (int j = 0; j <= n; ++j) {
      CHECK(as_map(codegeneracy(j, n)).values() == oracle::sigma(j, n));
      CHECK(as_map(codegeneracy(j, n)).is_surjective());
    }
}

TEST_CASE("decompose: examples", "[delta]") {
  CHECK(decompose(MonotoneMap::identity(4)).empty());
  auto s = decompose(as_map(codegeneracy(0, 0)));
  REQUIRE(s.size() == 1);
  CHECK(s[0] == codegeneracy(0, 0));

  // [2] -> [3]: 0 fixed, the upper two points sent to the last vertex
  MonotoneMap fig(4, {0, 3, 3});
  auto seq = decompose(fig);
  CHECK(recompose(seq, fig.dom_size()) == fig);
  REQUIRE(seq.size() == 3);
  CHECK(seq[0] == codegeneracy(1, 1));
  CHECK(seq[1] == coface(1, 2));
  CHECK(seq[2] == coface(2, 3));
}

TEST_CASE("decompose/recompose round-trip, all maps up to [5]", "[delta][property]") {
  for (int m = 1; m <= 6; ++m)
    for (int n = 1; n <= 6; ++n) {
      const auto maps = monotone_maps(m, n);
      REQUIRE(maps.size() == oracle::monotone_tuples(m, n).size());
      for (const auto& f : maps) {
        const auto seq = decompose(f);
        REQUIRE(recompose(seq, m) == f);
        bool seen_coface = false;
        for (const auto& e : seq) {
          if (e.kind == ElementaryMap::Kind::coface) seen_coface = true;
          // codegeneracies all come before the cofaces
          CHECK(!(seen_coface && e.kind == ElementaryMap::Kind::codegeneracy));
          if (f.is_injective()) CHECK(e.kind == ElementaryMap::Kind::coface);
          if (f.is_surjective()) CHECK(e.kind == ElementaryMap::Kind::codegeneracy);
        }
      }
    }
}

TEST_CASE("monotone_maps is lexicographic and matches the oracle", "[delta]") {
  const auto maps = monotone_maps(3, 3);
  const auto tuples = oracle::monotone_tuples(3, 3);
  REQUIRE(maps.size() == tuples.size());
  for (std::size_t i = 0; i < maps.size(); ++i) CHECK(maps[i].values() == tuples[i]);
}

TEST_CASE("associativity of compose up to size 6", "[delta][property]") {
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b)
      for (int c = 1; c <= 3; ++c)
        for (int d = 1; d <= 3; ++d)
          for (const auto& f : monotone_maps(a, b))
            for (const auto& g : monotone_maps(b, c))
              for (const auto& h : monotone_maps(c, d))
                REQUIRE(compose(h, compose(g, f)) == compose(compose(h, g), f));
  // a sample at the full size
  const auto big = monotone_maps(6, 6);
  for (std::size_t i = 0; i < big.size(); i += 37)
    for (std::size_t j = 0; j < big.size(); j += 41)
      for (std::size_t k = 0; k < big.size(); k += 43)
        REQUIRE(compose(big[k], compose(big[j], big[i])) == compose(compose(big[k], big[j]), big[i]));
}

TEST_CASE("verify_simplicial_relations", "[delta]") {
  auto r6 = verify_simplicial_relations(6);
  CHECK(r6.ok());
  CHECK(r6.checked > 0);
  CHECK(verify_simplicial_relations(1).ok());
  CHECK_THROWS_AS(verify_simplicial_relations(0), InputError);

  // the middle case σ_j δ_i = id for i = j, j+1, against the oracle
  for (int n = 1; n <= 6; ++n)
    for (int j = 0; j < n; ++j)
      for (int i : {j, j + 1}) {
        auto lhs = oracle::after(oracle::sigma(j, n - 1), oracle::delta(i, n));
        std::vector<int> id(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k) id[static_cast<std::size_t>(k)] = k;
        CHECK(lhs == id);
      }
}

TEST_CASE("text form", "[delta]") {
  auto f = parse_monotone_map("2 3 : 0 3 3");
  CHECK(f == MonotoneMap(4, {0, 3, 3}));
  CHECK(to_string(f) == "2 3 : 0 3 3");
  CHECK(to_string(coface(1, 2)) == "d1@2");
  CHECK(to_string(codegeneracy(0, 3)) == "s0@3");
  CHECK_THROWS_AS(parse_monotone_map("2 3 0 3 3"), InputError);
  CHECK_THROWS_AS(parse_monotone_map("2 3 : 0 3"), InputError);
  CHECK_THROWS_AS(parse_monotone_map("1 1 : 1 0"), InputError);
  CHECK_THROWS_AS(parse_monotone_map("1 1 : 0 x"), InputError);
}
