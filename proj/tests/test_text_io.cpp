#include <doctest.h>

#include <random>

#include "e6kkr/text_io.hpp"
#include "e6kkr/verify.hpp"
#include "fixtures.hpp"

using namespace e6kkr;

TEST_SUITE("text_io") {

TEST_CASE("weights") {
  CHECK(parse_weight("0,0,1,0,0,0") == fixtures::lambda3());
  CHECK(parse_weight(" 1, -2,0,0,0,3") == Weight({1, -2, 0, 0, 0, 3}));
  CHECK_THROWS_AS(parse_weight("1,0,0"), ParseError);
  CHECK_THROWS_AS(parse_weight("1,0,0,0,0,0,0"), ParseError);
  CHECK_THROWS_AS(parse_weight("1,x,0,0,0,0"), ParseError);
  CHECK_THROWS_AS(parse_weight(""), ParseError);
}

TEST_CASE("paths") {
  CHECK(parse_path("1 2 3 16 2 24\n") == fixtures::golden_path());
  CHECK(parse_path("").empty());
  CHECK(parse_path("\n").empty());
  CHECK(format_path(fixtures::golden_path()) == "1 2 3 16 2 24");
  CHECK_THROWS_AS(parse_path("1 28"), ParseError);
  CHECK_THROWS_AS(parse_path("1 0"), ParseError);
  CHECK_THROWS_AS(parse_path("1 a"), ParseError);
  CHECK_THROWS_AS(parse_path("1\n2\n"), ParseError);
}

TEST_CASE("rigged configurations") {
  const RiggedConfiguration rc = fixtures::golden_rc();
  CHECK(format_rc(rc) == fixtures::kGoldenRc);
  CHECK(parse_rc("L 2\nnu1: (1,0)\nnu2:\nnu3:\nnu4:\nnu5:\nnu6:") ==
        parse_rc(fixtures::kGoldenChain[3]));
  // Rows are canonicalized on input.
  CHECK(parse_rc("L 6\nnu1: (1,0) (1,1) (2,0) (1,1) (1,0)\nnu2: (1,0) (1,0) (1,0) (1,0) (2,0)\n"
                 "nu3: (1,0) (2,1) (1,0) (1,0) (1,0)\nnu4: (1,0) (2,0) (1,0)\nnu5: (2,0)\n"
                 "nu6: (1,1) (2,0)\n") == rc);
  CHECK_THROWS_AS(parse_rc("L 2\nnu1:\n"), ParseError);
  CHECK_THROWS_AS(parse_rc("L -1\nnu1:\nnu2:\nnu3:\nnu4:\nnu5:\nnu6:\n"), ParseError);
  CHECK_THROWS_AS(parse_rc("L 1\nnu1: (0,0)\nnu2:\nnu3:\nnu4:\nnu5:\nnu6:\n"), ParseError);
  CHECK_THROWS_AS(parse_rc("L 1\nnu2:\nnu1:\nnu3:\nnu4:\nnu5:\nnu6:\n"), ParseError);
  CHECK_THROWS_AS(parse_rc("L 1\nnu1: (1,0\nnu2:\nnu3:\nnu4:\nnu5:\nnu6:\n"), ParseError);
}

TEST_CASE("round trips over enumerated objects") {
  for (int length = 0; length <= 4; ++length) {
    for (const auto& [w, paths] : enumerate_all_hw(length)) {
      for (const Path& path : paths) CHECK(parse_path(format_path(path)) == path);
      for (const RiggedConfiguration& rc : enumerate_rcs(w, length)) {
        CHECK(parse_rc(format_rc(rc)) == rc);
      }
    }
  }
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> pick(1, kCrystalSize);
  for (int trial = 0; trial < 200; ++trial) {
    Path path;
    for (int k = 0; k < trial % 9; ++k) path.emplace_back(pick(rng));
    CHECK(parse_path(format_path(path)) == path);
  }
}

TEST_CASE("missing file") {
  CHECK_THROWS_AS(read_file("/nonexistent/e6kkr/file"), ParseError);
}

}
