#include <doctest.h>

#include <set>

#include "e6kkr/bijection.hpp"
#include "e6kkr/energy.hpp"
#include "e6kkr/verify.hpp"
#include "fixtures.hpp"

using namespace e6kkr;

TEST_SUITE("bijection") {

TEST_CASE("golden chain step by step") {
  RiggedConfiguration rc = fixtures::golden_rc();
  for (std::size_t k = 0; k < fixtures::kGoldenChain.size(); ++k) {
    CAPTURE(k);
    CHECK(gamma(rc).id() == fixtures::kGoldenGammas[k]);
    const DeltaResult step = delta(rc);
    CHECK(step.b.id() == fixtures::kGoldenGammas[k]);
    CHECK(step.rc == parse_rc(fixtures::kGoldenChain[k]));
    CHECK(delta_inv(step.rc, step.b) == rc);
    rc = step.rc;
  }
  CHECK(rc == empty_rc(0));
}

TEST_CASE("golden example through phi") {
  CHECK(phi(fixtures::golden_rc()) == fixtures::golden_path());
  CHECK(phi_inv(fixtures::golden_path()) == fixtures::golden_rc());
  CHECK(phi(empty_rc(0)).empty());
  CHECK(phi_inv({}) == empty_rc(0));
}

TEST_CASE("empty partitions stop at vertex 1") {
  for (int length = 1; length <= 4; ++length) {
    const DeltaResult step = delta(empty_rc(length));
    CHECK(step.b == Vertex(1));
    CHECK(step.rc == empty_rc(length - 1));
    CHECK(step.record.route.empty());
    CHECK(gamma(empty_rc(length)) == Vertex(1));
  }
  CHECK(delta_inv(empty_rc(0), Vertex(1)) == empty_rc(1));
  CHECK_THROWS_AS(delta(empty_rc(0)), std::invalid_argument);
}

TEST_CASE("delta_inv rejects non highest weight pairs") {
  CHECK_THROWS_AS(delta_inv(empty_rc(0), Vertex(2)), InvalidPairError);
  CHECK_THROWS_AS(phi_inv(make_path({1, 1, 3})), InvalidPairError);
  CHECK_THROWS_AS(phi_inv(make_path({2})), InvalidPairError);
}

TEST_CASE("table oracle on the empty route") {
  const DeltaRecord record = delta(empty_rc(3)).record;
  REQUIRE(record.selections.empty());
  const VacancyChangeProfile profile = vacancy_change_oracle(record);
  CHECK(profile.ordered);
  for (int i = 1; i <= 10; ++i) {
    CHECK(profile.at(1, i) == -1);
    for (Node a = 2; a <= kRank; ++a) CHECK(profile.at(a, i) == 0);
  }
}

TEST_CASE("table oracle on the first golden step") {
  const RiggedConfiguration before = fixtures::golden_rc();
  const DeltaResult step = delta(before);
  const VacancyTable p(before.shape(), before.length);
  const VacancyTable q(step.rc.shape(), step.rc.length);
  const VacancyChangeProfile profile = vacancy_change_oracle(step.record);
  for (Node a = 1; a <= kRank; ++a) {
    for (int i = 1; i <= 5; ++i) {
      CHECK(profile.at(a, i) == q.at(a, i) - p.at(a, i));
      CHECK(vacancy_change_closed_form(step.record, a, i) == q.at(a, i) - p.at(a, i));
    }
  }
}

TEST_CASE("exhaustive bijection for short paths") {
  for (int length = 0; length <= 4; ++length) {
    for (const auto& [w, paths] : enumerate_all_hw(length)) {
      CAPTURE(length);
      CAPTURE(w.to_string());
      const auto rcs = enumerate_rcs(w, length);
      REQUIRE(rcs.size() == paths.size());
      std::set<Path> images;
      for (const RiggedConfiguration& rc : rcs) {
        StepCounters counters;
        const Path path = checked_phi(rc, counters);
        CHECK(counters.failures() == 0);
        CHECK(is_classically_restricted(path, w));
        CHECK(cc(rc) == energy_D(path));
        CHECK(phi_inv(path) == rc);
        images.insert(path);
      }
      CHECK(images == std::set<Path>(paths.begin(), paths.end()));
    }
  }
}

TEST_CASE("delta branches agree on ties") {
  for (const RiggedConfiguration& rc : enumerate_rcs(fixtures::lambda3(), 6)) {
    const auto branches = delta_all_branches(rc);
    REQUIRE_FALSE(branches.empty());
    for (const DeltaResult& branch : branches) {
      CHECK(branch.b == branches.front().b);
      CHECK(branch.rc == branches.front().rc);
    }
  }
}

}
