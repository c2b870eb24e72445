// Paths b_1 (x) ... (x) b_L in B^{(x)L} and their crystal structure.
//
// The tensor rule is Kashiwara's original convention:
//   e_i(b1 (x) b2) = e_i b1 (x) b2  if phi_i(b1) >= eps_i(b2), else b1 (x) e_i b2,
// applied left-associated. Paths are stored leftmost factor first.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "e6kkr/cartan.hpp"
#include "e6kkr/crystal.hpp"

namespace e6kkr {

using Path = std::vector<Vertex>;

Path make_path(std::initializer_list<int> ids);

std::optional<Path> e_tensor(const Path& path, Node i);
std::optional<Path> f_tensor(const Path& path, Node i);

int eps_tensor(const Path& path, Node i);
int phi_tensor(const Path& path, Node i);

Weight wt_path(const Path& path);

/// wt(path) == lambda and e_i path == 0 for every classical i.
bool is_classically_restricted(const Path& path, const Weight& lambda);

/// Same test without a prescribed weight.
bool is_highest_weight(const Path& path);

/// All classically restricted paths of weight lambda and length L, sorted.
/// Empty for non-dominant lambda.
std::vector<Path> enumerate_paths(const Weight& lambda, int length, unsigned jobs = 1);

/// All highest-weight paths of length L grouped by weight; each list sorted.
std::map<Weight, std::vector<Path>> enumerate_all_hw(int length, unsigned jobs = 1);

/// "1 2 3" for 1 (x) 2 (x) 3; the empty path renders as "".
std::string path_to_string(const Path& path);

}  // namespace e6kkr
