#include <doctest.h>

#include <map>
#include <set>

#include "e6kkr/energy.hpp"
#include "fixtures.hpp"

using namespace e6kkr;

namespace {
Vertex v(int id) { return Vertex(id); }
}  // namespace

TEST_SUITE("energy") {

TEST_CASE("named values") {
  CHECK(local_H(v(1), v(1)) == 0);
  CHECK(local_H(v(1), v(18)) == -2);
  CHECK(local_H(v(1), v(2)) == -1);
  CHECK(local_H_by_component(v(1), v(1)) == 0);
  CHECK(local_H_by_component(v(1), v(22)) == -2);
  CHECK(local_H_by_component(v(2), v(1)) == 0);
}

TEST_CASE("minus-two pairs") {
  const auto& pairs = energy_minus_two_pairs();
  CHECK(pairs.size() == 27);
  std::set<std::pair<Vertex, Vertex>> unique(pairs.begin(), pairs.end());
  CHECK(unique.size() == 27);
  CHECK(unique.count({v(1), v(18)}) == 1);
  CHECK(unique.count({v(13), v(27)}) == 1);
  CHECK(unique.count({v(1), v(17)}) == 0);
}

TEST_CASE("table agrees with classical components") {
  std::map<int, int> counts;
  for (int b = 1; b <= kCrystalSize; ++b) {
    for (int c = 1; c <= kCrystalSize; ++c) {
      const int h = local_H(v(b), v(c));
      CHECK(h == local_H_by_component(v(b), v(c)));
      ++counts[h];
    }
  }
  CHECK(counts == std::map<int, int>{{-2, 27}, {-1, 351}, {0, 351}});
}

TEST_CASE("raising reaches a component head") {
  const std::set<Path> heads{make_path({1, 1}), make_path({1, 2}), make_path({1, 18})};
  for (int b = 1; b <= kCrystalSize; ++b) {
    for (int c = 1; c <= kCrystalSize; ++c) {
      CHECK(heads.count(raise_to_highest_weight(make_path({b, c}))) == 1);
    }
  }
}

TEST_CASE("energy statistic") {
  CHECK(energy_D(make_path({1})) == 0);
  CHECK(energy_D({}) == 0);
  CHECK(energy_D(fixtures::golden_path()) == -14);
  for (int length = 0; length <= 7; ++length) {
    CHECK(energy_D(Path(static_cast<std::size_t>(length), v(1))) == 0);
  }
  // (L - j) weights: the first pair counts twice.
  CHECK(energy_D(make_path({1, 18, 27})) == 2 * local_H(v(1), v(18)) + local_H(v(18), v(27)));
}

TEST_CASE("one-dimensional sums") {
  using P = LaurentPolynomial;
  const Weight l1 = Weight::fundamental(1);
  CHECK(one_dim_sum(l1, 1) == P::constant(1));
  CHECK(one_dim_sum(2 * l1, 2) == P::constant(1));
  CHECK(one_dim_sum(wt_path(make_path({1, 18})), 2) == P::monomial(-2));
  CHECK(one_dim_sum(Weight::fundamental(2), 1).is_zero());
}

}
