// Worked example shared by several test files: a rigged configuration in
// RC(Lambda_3, 6) and the five configurations produced by successive deltas.
#pragma once

#include <array>
#include <string_view>

#include "e6kkr/rigged.hpp"
#include "e6kkr/tensor.hpp"
#include "e6kkr/text_io.hpp"

namespace e6kkr::fixtures {

inline constexpr std::string_view kGoldenRc =
    "L 6\n"
    "nu1: (2,0) (1,1) (1,1) (1,0) (1,0)\n"
    "nu2: (2,0) (1,0) (1,0) (1,0) (1,0)\n"
    "nu3: (2,1) (1,0) (1,0) (1,0) (1,0)\n"
    "nu4: (2,0) (1,0) (1,0)\n"
    "nu5: (2,0)\n"
    "nu6: (2,0) (1,1)\n";

// Index k holds the configuration after k+1 deltas.
inline constexpr std::array<std::string_view, 6> kGoldenChain = {
    "L 5\n"
    "nu1: (2,0) (1,0) (1,0)\n"
    "nu2: (1,0) (1,0) (1,0)\n"
    "nu3: (1,0) (1,0) (1,0)\n"
    "nu4: (1,0) (1,0)\n"
    "nu5: (1,0)\n"
    "nu6: (1,1)\n",
    "L 4\n"
    "nu1: (1,1) (1,0) (1,0)\n"
    "nu2: (1,0) (1,0) (1,0)\n"
    "nu3: (1,0) (1,0) (1,0)\n"
    "nu4: (1,0) (1,0)\n"
    "nu5: (1,0)\n"
    "nu6: (1,1)\n",
    "L 3\nnu1: (1,0) (1,0)\nnu2: (1,0)\nnu3:\nnu4:\nnu5:\nnu6:\n",
    "L 2\nnu1: (1,0)\nnu2:\nnu3:\nnu4:\nnu5:\nnu6:\n",
    "L 1\nnu1:\nnu2:\nnu3:\nnu4:\nnu5:\nnu6:\n",
    "L 0\nnu1:\nnu2:\nnu3:\nnu4:\nnu5:\nnu6:\n",
};

// gamma of the configurations above, starting with the golden rc.
inline constexpr std::array<int, 6> kGoldenGammas = {24, 2, 16, 3, 2, 1};

inline RiggedConfiguration golden_rc() { return parse_rc(kGoldenRc); }
inline Path golden_path() { return make_path({1, 2, 3, 16, 2, 24}); }
inline Weight lambda3() { return Weight::fundamental(3); }

}  // namespace e6kkr::fixtures
