#include <doctest.h>

#include <stdexcept>

#include "e6kkr/cartan.hpp"

using namespace e6kkr;

TEST_SUITE("cartan") {

TEST_CASE("cartan rows") {
  const CartanMatrix& c = cartan_matrix();
  CHECK(c[0] == std::array<int, 6>{2, -1, 0, 0, 0, 0});
  CHECK(c[2] == std::array<int, 6>{0, -1, 2, -1, 0, -1});
  CHECK(c[5] == std::array<int, 6>{0, 0, -1, 0, 0, 2});
}

TEST_CASE("cartan matrix is symmetric with a tree Dynkin diagram") {
  int edges = 0;
  for (Node a = 1; a <= kRank; ++a) {
    CHECK(cartan(a, a) == 2);
    for (Node b = 1; b <= kRank; ++b) {
      CHECK(cartan(a, b) == cartan(b, a));
      if (a < b && adjacent(a, b)) ++edges;
      CHECK(adjacent(a, b) == (cartan(a, b) == -1));
    }
  }
  CHECK(edges == 5);
  CHECK(adjacent(3, 6));
  CHECK_FALSE(adjacent(5, 6));
}

TEST_CASE("node range is enforced") {
  CHECK(is_node(1));
  CHECK_FALSE(is_node(0));
  CHECK_FALSE(is_node(7));
  CHECK_THROWS_AS(require_node(7), std::invalid_argument);
  CHECK_THROWS_AS(cartan(0, 1), std::invalid_argument);
}

TEST_CASE("weight arithmetic and dominance") {
  const Weight l1 = Weight::fundamental(1);
  CHECK((l1 - l1).is_zero());
  CHECK(is_dominant(weight_sub(l1, l1)));
  CHECK_FALSE(Weight({0, -1, 1, 0, 0, 0}).is_dominant());
  CHECK(Weight({0, 0, 1, 0, 0, 0}).is_dominant());
  CHECK(weight_add(l1, l1) == 2 * l1);
  CHECK(Weight({1, -2, 0, 3, 0, 0}).to_string() == "1,-2,0,3,0,0");
}

TEST_CASE("simple roots are Cartan rows") {
  for (Node a = 1; a <= kRank; ++a) {
    const Weight alpha = simple_root_in_weight_coords(a);
    for (Node b = 1; b <= kRank; ++b) CHECK(alpha[b] == cartan(a, b));
  }
}

TEST_CASE("configuration sizes") {
  auto zero = solve_config_sizes(Weight::fundamental(1), 1);
  REQUIRE(zero);
  CHECK(*zero == ConfigSizes{0, 0, 0, 0, 0, 0});

  auto golden = solve_config_sizes(Weight::fundamental(3), 6);
  REQUIRE(golden);
  CHECK(*golden == ConfigSizes{6, 6, 6, 4, 2, 3});

  CHECK_FALSE(solve_config_sizes(2 * Weight::fundamental(1), 1));
  CHECK_FALSE(solve_config_sizes(Weight::fundamental(2), 1));
}

TEST_CASE("sizes and weights are inverse") {
  for (int length = 0; length <= 4; ++length) {
    for (int n1 = 0; n1 <= 3; ++n1) {
      for (int n3 = 0; n3 <= 3; ++n3) {
        const ConfigSizes sizes{n1, 1, n3, 0, 2, 1};
        auto back = solve_config_sizes(weight_from_sizes(sizes, length), length);
        REQUIRE(back);
        CHECK(*back == sizes);
      }
    }
  }
}

}
