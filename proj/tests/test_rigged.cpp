#include <doctest.h>

#include <set>

#include "e6kkr/rigged.hpp"
#include "e6kkr/verify.hpp"
#include "fixtures.hpp"

using namespace e6kkr;

namespace {

// Riggings chosen independently per row, then deduplicated.
std::set<RiggedConfiguration> brute_force_rcs(const Weight& lambda, int length) {
  std::set<RiggedConfiguration> out;
  for (const Configuration& nu : enumerate_configs(lambda, length)) {
    RiggedConfiguration rc = empty_rc(length);
    std::vector<std::pair<Node, int>> rows;
    for (Node a = 1; a <= kRank; ++a) {
      for (int part : nu[static_cast<std::size_t>(a - 1)]) rows.emplace_back(a, part);
    }
    std::vector<int> riggings(rows.size(), 0);
    while (true) {
      RiggedConfiguration candidate = empty_rc(length);
      for (std::size_t k = 0; k < rows.size(); ++k) {
        candidate[rows[k].first].rows.push_back({rows[k].second, riggings[k]});
      }
      candidate.canonicalize();
      out.insert(candidate);
      std::size_t k = 0;
      for (; k < rows.size(); ++k) {
        if (riggings[k] < vacancy(nu, length, rows[k].first, rows[k].second)) {
          ++riggings[k];
          break;
        }
        riggings[k] = 0;
      }
      if (k == rows.size()) break;
    }
  }
  return out;
}

}  // namespace

TEST_SUITE("rigged") {

TEST_CASE("partition helpers") {
  const Partition mu{2, 1, 1, 1, 1};
  CHECK(is_partition(mu));
  CHECK_FALSE(is_partition({1, 2}));
  CHECK_FALSE(is_partition({1, 0}));
  CHECK(partition_size(mu) == 6);
  CHECK(largest_part(mu) == 2);
  CHECK(multiplicity(mu, 1) == 4);
  CHECK(q_i(mu, 1) == 5);
  CHECK(q_i(mu, 2) == 6);
  CHECK(q_i({}, 3) == 0);
  CHECK(partitions_of(5).size() == 7);
  CHECK(partitions_of(0).size() == 1);
}

TEST_CASE("vacancy numbers") {
  const Configuration nu = fixtures::golden_rc().shape();
  CHECK(vacancy(nu, 6, 1, 1) == 1);
  CHECK(vacancy(nu, 6, 1, 2) == 0);
  CHECK(vacancy(nu, 6, 6, 1) == 1);
  CHECK(vacancy(nu, 6, 6, 2) == 0);
  const Configuration empty{};
  for (int i = 1; i <= 5; ++i) CHECK(vacancy(empty, 4, 1, i) == 4);
  const VacancyTable table(nu, 6);
  for (Node a = 1; a <= kRank; ++a) {
    for (int i = 0; i <= 8; ++i) CHECK(table.at(a, i) == vacancy(nu, 6, a, i));
  }
}

TEST_CASE("admissibility") {
  const Configuration nu = fixtures::golden_rc().shape();
  CHECK(is_admissible_config(nu, fixtures::lambda3(), 6));
  CHECK(config_weight(nu, 6) == fixtures::lambda3());
  CHECK(is_admissible_config(Configuration{}, 3 * Weight::fundamental(1), 3));
  Configuration lonely{};
  lonely[1] = {1};
  for (const Weight& w : candidate_weights(1)) CHECK_FALSE(is_admissible_config(lonely, w, 1));
}

TEST_CASE("charge") {
  const Configuration nu = fixtures::golden_rc().shape();
  CHECK(charge_direct(nu, 6) == -18);
  CHECK(charge_via_vacancy(nu, 6) == -18);
  CHECK(charge(Configuration{}, 5) == 0);
  // nu^(1) = (1), L = 1: quadratic term 1, linear term 1.
  Configuration one{};
  one[0] = {1};
  CHECK(charge_direct(one, 1) == 0);
  CHECK(charge_via_vacancy(one, 1) == 0);
  CHECK(vacancy(one, 1, 1, 1) == -1);
  // nu^(1) = (1), L = 2 lies in RC(Lambda_2, 2): 1 - 2 = -1.
  CHECK(charge_direct(one, 2) == -1);
}

TEST_CASE("cocharge of rigged configurations") {
  RiggedConfiguration rc = fixtures::golden_rc();
  CHECK(is_valid_rc(rc));
  CHECK(cc(rc) == -14);
  CHECK(cc(empty_rc(4)) == 0);
  for (RiggedPartition& part : rc.parts) {
    for (Row& row : part.rows) row.rigging = 0;
  }
  CHECK(cc(rc) == -18);
}

TEST_CASE("invalid rigged configurations") {
  RiggedConfiguration rc = fixtures::golden_rc();
  rc[1].rows[0].rigging = 1;  // above p_2 = 0
  CHECK_FALSE(is_valid_rc(rc));
  rc = fixtures::golden_rc();
  rc[1].rows.back().rigging = -1;
  CHECK_FALSE(is_valid_rc(rc));
  rc = fixtures::golden_rc();
  rc[5].rows.pop_back();
  CHECK_FALSE(is_valid_rc(rc));
}

TEST_CASE("canonical row order") {
  RiggedPartition part{{{1, 0}, {2, 0}, {1, 1}}};
  part.canonicalize();
  CHECK(part.rows == std::vector<Row>{{2, 0}, {1, 1}, {1, 0}});
  CHECK(part.shape() == Partition{2, 1, 1});
}

TEST_CASE("enumeration") {
  const auto single = enumerate_rcs(Weight::fundamental(1), 1);
  REQUIRE(single.size() == 1);
  CHECK(single.front() == empty_rc(1));

  const auto golden = enumerate_rcs(fixtures::lambda3(), 6);
  CHECK(std::binary_search(golden.begin(), golden.end(), fixtures::golden_rc()));
  CHECK(std::is_sorted(golden.begin(), golden.end()));
  for (const RiggedConfiguration& rc : golden) CHECK(is_valid_rc(rc));
}

TEST_CASE("enumeration matches per-row brute force") {
  for (int length = 0; length <= 4; ++length) {
    for (const Weight& w : candidate_weights(length)) {
      CAPTURE(w.to_string());
      const auto fast = enumerate_rcs(w, length);
      const auto slow = brute_force_rcs(w, length);
      CHECK(std::set<RiggedConfiguration>(fast.begin(), fast.end()) == slow);
      CHECK(fast.size() == slow.size());
    }
  }
}

TEST_CASE("vacancy identities") {
  for (int length = 0; length <= 4; ++length) {
    for (const Weight& w : candidate_weights(length)) {
      for (const Configuration& nu : enumerate_configs(w, length)) {
        CHECK(vacancy_identities_hold(nu, length));
        CHECK(charge_direct(nu, length) == charge_via_vacancy(nu, length));
      }
    }
  }
}

TEST_CASE("fermionic formula") {
  using P = LaurentPolynomial;
  CHECK(fermionic_M(Weight::fundamental(1), 1) == P::constant(1));
  CHECK(fermionic_M(Weight::fundamental(2), 1).is_zero());
  const P golden = fermionic_M(fixtures::lambda3(), 6);
  CHECK(golden.coefficient(-14) >= 1);
  CHECK(golden.at_one() == static_cast<P::Coefficient>(enumerate_rcs(fixtures::lambda3(), 6).size()));
  CHECK(fermionic_M_binomial(fixtures::lambda3(), 6) ==
        fermionic_M_riggings(fixtures::lambda3(), 6, 3));
}

TEST_CASE("parallel rc enumeration is deterministic") {
  CHECK(enumerate_rcs(fixtures::lambda3(), 6, 1) == enumerate_rcs(fixtures::lambda3(), 6, 4));
}

}
