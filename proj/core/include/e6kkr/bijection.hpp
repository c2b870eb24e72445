// The box-removal walk delta through B0, its inverse, and the bijection
// Phi between rigged configurations and classically restricted paths.
//
// One delta step, for a rigged configuration with L >= 1:
//   start at vertex 1 with l_0 = 1; at each vertex look at every outgoing
//   arrow of color a and find the shortest singular row of nu^(a) of length
//   >= the previous selection that has not been selected yet. Follow the
//   arrow with the shorter such row (smaller color on ties) and stop when no
//   arrow admits one. Singularity is judged against the input rigged
//   configuration throughout the walk; every selected row then loses one box
//   and is re-rigged to the new vacancy number at its new length.
#pragma once

#include <array>
#include <climits>
#include <stdexcept>
#include <utility>
#include <vector>

#include "e6kkr/crystal.hpp"
#include "e6kkr/rigged.hpp"
#include "e6kkr/tensor.hpp"

namespace e6kkr {

inline constexpr int kInfiniteLength = INT_MAX;

struct Selection {
  Node color = 1;
  int length = 0;  ///< length of the selected row before removal
  int row = 0;     ///< index into the canonical rows of the input nu^(color)
};

struct DeltaRecord {
  Route route;                       ///< starts at vertex 1
  std::vector<Selection> selections; ///< one per route arrow
  Vertex end{1};
  int first_column_before = 0;       ///< number of rows of nu^(1) before delta
  int first_column_after = 0;        ///< ... and after
  int ties = 0;                      ///< vertices where both arrows tied

  /// l_k^(a) for k = 1.. (1-based); kInfiniteLength beyond the last selection.
  int length_of(Node a, int k) const;
  int count_of(Node a) const;
};

struct DeltaResult {
  RiggedConfiguration rc;
  Vertex b{1};
  DeltaRecord record;
};

/// Throws std::invalid_argument when rc.length == 0.
DeltaResult delta(const RiggedConfiguration& rc);

Vertex gamma(const RiggedConfiguration& rc);

/// Runs delta following both arrows at every tie. Returns one result per
/// branch; they should all agree.
std::vector<DeltaResult> delta_all_branches(const RiggedConfiguration& rc);

struct InvalidPairError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DeltaInvTrace {
  RiggedConfiguration rc;
  Route route;              ///< reversed walk, ends at vertex 1 (stored forward)
  std::vector<int> lengths; ///< selected lengths in walk order; 0 = new row
  int ties = 0;
};

/// Inverse of delta: walks from b back to vertex 1, growing the longest
/// unselected singular row of length <= the previous one (an empty row of
/// length 0 always qualifies). Throws InvalidPairError when the result is
/// not a rigged configuration mapping back to (rc_small, b) under delta.
RiggedConfiguration delta_inv(const RiggedConfiguration& rc_small, Vertex b);
DeltaInvTrace delta_inv_traced(const RiggedConfiguration& rc_small, Vertex b);
std::vector<DeltaInvTrace> delta_inv_all_branches(const RiggedConfiguration& rc_small, Vertex b);

/// Phi(rc) = Phi(delta(rc)) (x) gamma(rc).
Path phi(const RiggedConfiguration& rc);

/// phi_inv(b_1 .. b_L) = delta_inv(phi_inv(b_1 .. b_{L-1}), b_L).
/// Throws InvalidPairError on paths that are not highest weight.
RiggedConfiguration phi_inv(const Path& path);

/// Piecewise-constant prediction of p~_i^(a) - p_i^(a) for one delta step,
/// assembled from the per-color vacancy-change tables.
struct VacancyChangeProfile {
  struct Segment {
    int begin;  ///< inclusive
    int end;    ///< exclusive; kInfiniteLength for the last segment
    int change;
  };
  std::array<std::vector<Segment>, kRank> segments;
  /// False when some color's breakpoints were not weakly increasing, in
  /// which case the tables do not apply to this walk.
  bool ordered = true;

  int at(Node a, int i) const;
};

VacancyChangeProfile vacancy_change_oracle(const DeltaRecord& record);

/// -delta_{a1} + 2 #{k : l_k^(a) <= i} - sum_{b~a} #{k : l_k^(b) <= i}.
int vacancy_change_closed_form(const DeltaRecord& record, Node a, int i);

}  // namespace e6kkr
