#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "msset/constructions.hpp"
#include "msset/maps.hpp"

using namespace msset;

TEST_CASE("map enumeration on small standard objects") {
  for (int m = 0; m <= 3; ++m)
    CHECK(enumerate_maps(standard_ss(0), standard_ss(m)).size() == static_cast<size_t>(m + 1));

  auto maps = enumerate_maps(standard_ss(1), standard_ss(1));
  CHECK(maps.size() == 3);  // two constants and the identity

  // out of the empty object: exactly one map; into it: none
  CHECK(enumerate_maps(standard_ss(-1), standard_ss(2)).size() == 1);
  CHECK(enumerate_maps(standard_ss(1), standard_ss(-1)).empty());
}

TEST_CASE("pruned enumeration agrees with the naive oracle") {
  std::vector<std::pair<SSetPtr, SSetPtr>> pairs = {
      {boundary_ss(2), standard_ss(1)},
      {horn_ss(2, 1), standard_ss(1)},
      {standard_ss(1), standard_ss(2)},
      {horn_ss(2, 0), horn_ss(2, 1)},
      {boundary_ss(2), boundary_ss(2)},
  };
  for (auto& [A, X] : pairs) {
    auto fast = enumerate_maps(A, X);
    auto slow = enumerate_maps_naive(A, X);
    REQUIRE(fast.size() == slow.size());
    for (size_t i = 0; i < fast.size(); ++i) CHECK(fast[i] == slow[i]);
  }
}

TEST_CASE("maps are closed under composition and commute checks work") {
  auto maps = enumerate_maps(horn_ss(2, 1), standard_ss(2));
  CHECK(!maps.empty());
  for (const auto& f : maps) CHECK(f.commutes());
  // composing with the identity changes nothing
  auto id = SSetMap::identity(standard_ss(2));
  for (const auto& f : maps) CHECK(compose(id, f) == f);
}

TEST_CASE("inclusions and image cells") {
  auto cells = horn_cells(2, 1);
  auto ex = extract(*standard_ss(2), cells);
  SSetMap inc = SSetMap::inclusion(ex, standard_ss(2));
  inc.require_commutes();
  CHECK(inc.is_inclusion());
  CHECK(inc.image_cells() == cells);
}

TEST_CASE("canonical signatures separate non-isomorphic objects") {
  CHECK(isomorphic(*standard_ss(2), *standard_ss(2)));
  CHECK(!isomorphic(*standard_ss(2), *boundary_ss(2)));
  CHECK(!isomorphic(*horn_ss(2, 0), *horn_ss(2, 1)));
  CHECK(!isomorphic(*horn_ss(3, 1), *horn_ss(3, 2)));
  // products in either order are isomorphic
  ProductSSet a(standard_ss(2), standard_ss(1));
  ProductSSet b(standard_ss(1), standard_ss(2));
  CHECK(isomorphic(*a.ss(), *b.ss()));
}
