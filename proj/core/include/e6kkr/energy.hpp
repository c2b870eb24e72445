// Local energy H on B (x) B, the energy statistic D on paths, and the
// one-dimensional sum X(lambda, L; q).
#pragma once

#include <utility>
#include <vector>

#include "e6kkr/cartan.hpp"
#include "e6kkr/crystal.hpp"
#include "e6kkr/polynomial.hpp"
#include "e6kkr/tensor.hpp"

namespace e6kkr {

/// Pairs b (x) c on which H = -2. Sorted, 27 entries.
const std::vector<std::pair<Vertex, Vertex>>& energy_minus_two_pairs();

/// H(b (x) c): -2 on the explicit list above, 0 when b is reachable from c
/// by following arrows, -1 otherwise. Normalized by H(1 (x) 1) = 0.
int local_H(Vertex b, Vertex c);

/// Raises b (x) c with classical e_i until it is highest weight.
Path raise_to_highest_weight(Path path);

/// H read off the classical component of b (x) c: components headed by
/// 1(x)1, 1(x)2, 1(x)18 carry 0, -1, -2. Throws std::logic_error when the
/// head is none of these.
int local_H_by_component(Vertex b, Vertex c);

/// D(b_1 (x) ... (x) b_L) = sum_{j=1}^{L-1} (L - j) H(b_j (x) b_{j+1}).
int energy_D(const Path& path);

/// X(lambda, L; q) = sum over classically restricted paths of q^D.
LaurentPolynomial one_dim_sum(const Weight& lambda, int length, unsigned jobs = 1);
LaurentPolynomial one_dim_sum(const std::vector<Path>& paths);

}  // namespace e6kkr
