// The classical crystal graph B0 of the 27-element KR crystal B^{1,1} of
// type E6^(1): vertices 1..27, arrows of colors 1..6. Affine 0-arrows are
// not part of B0 and are not encoded.
#pragma once

#include <array>
#include <bitset>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "e6kkr/cartan.hpp"

namespace e6kkr {

inline constexpr int kCrystalSize = 27;

class Vertex {
 public:
  constexpr Vertex() = default;
  /// Throws std::invalid_argument unless 1 <= id <= 27.
  explicit Vertex(int id);

  constexpr int id() const { return id_; }
  constexpr std::size_t index() const { return static_cast<std::size_t>(id_ - 1); }

  friend constexpr bool operator==(Vertex, Vertex) = default;
  friend constexpr auto operator<=>(Vertex, Vertex) = default;

 private:
  std::uint8_t id_ = 1;
};

struct Edge {
  Vertex source;
  Node color = 1;
  Vertex sink;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// A composable sequence of arrows: sink of each edge is the source of the next.
struct Route {
  std::vector<Edge> edges;

  std::size_t size() const { return edges.size(); }
  bool empty() const { return edges.empty(); }
  std::vector<Node> colors() const;
  bool is_consecutive() const;
  std::string to_string() const;
};

class CrystalGraph {
 public:
  /// The process-wide immutable graph; validated on first use.
  static const CrystalGraph& instance();

  const std::vector<Edge>& edges() const { return edges_; }

  std::optional<Vertex> f(Vertex b, Node i) const;
  std::optional<Vertex> e(Vertex b, Node i) const;

  int phi(Vertex b, Node i) const;
  int eps(Vertex b, Node i) const;

  /// Classical weight: coordinate a is phi_a(b) - eps_a(b).
  const Weight& wt(Vertex b) const { return weights_[b.index()]; }

  /// True iff `target` is reached from `start` by following zero or more arrows.
  bool reachable(Vertex target, Vertex start) const {
    return reach_[start.index()][target.index()];
  }

  /// Outgoing (incoming) arrows at b, ordered by color.
  std::vector<Edge> out_edges(Vertex b) const;
  std::vector<Edge> in_edges(Vertex b) const;

  /// Checks the construction invariants and throws std::logic_error on the
  /// first violation. Called from instance().
  void validate() const;

 private:
  CrystalGraph();

  std::vector<Edge> edges_;
  // [vertex][color-1] -> target id, 0 when absent
  std::array<std::array<std::uint8_t, kRank>, kCrystalSize> down_{};
  std::array<std::array<std::uint8_t, kRank>, kCrystalSize> up_{};
  std::array<Weight, kCrystalSize> weights_{};
  std::array<std::bitset<kCrystalSize>, kCrystalSize> reach_{};
};

// Free-function spellings of the crystal operators.
inline std::optional<Vertex> f(Vertex b, Node i) { return CrystalGraph::instance().f(b, i); }
inline std::optional<Vertex> e(Vertex b, Node i) { return CrystalGraph::instance().e(b, i); }
inline int phi(Vertex b, Node i) { return CrystalGraph::instance().phi(b, i); }
inline int eps(Vertex b, Node i) { return CrystalGraph::instance().eps(b, i); }
inline const Weight& wt(Vertex b) { return CrystalGraph::instance().wt(b); }
inline bool reachable(Vertex target, Vertex start) {
  return CrystalGraph::instance().reachable(target, start);
}

/// Every route of B0 with at least one arrow. B0 is acyclic, so this is finite.
std::vector<Route> enumerate_routes();

// Checks of the four structural properties of B0 used by the bijection
// proofs. Each returns nullopt when the route does not meet the item's
// hypothesis, otherwise whether the conclusion holds.
//
//  1. first and last arrows share color a with no a-arrow in between:
//     exactly two arrows of the route have a color adjacent to a.
//  2. route starts at vertex 1 with colors (a_1..a_l):
//     sum_{j<l} C(a_j, a_l) == delta(a_l, 1) - 1.
//  3. two-step route with colors (a, b), b not adjacent to a: a route with
//     colors (b, a) joins the same endpoints.
//  4. a_1 ~ a_l and a_i not~ a_l for 1 < i < l: the source of every middle
//     arrow also has an outgoing arrow of color a_l.
std::optional<bool> check_lemma_item1(const Route& route);
std::optional<bool> check_lemma_item2(const Route& route);
std::optional<bool> check_lemma_item3(const Route& route);
std::optional<bool> check_lemma_item4(const Route& route);

struct GraphLemmaReport {
  std::size_t routes = 0;
  std::array<std::size_t, 4> applicable{};
  std::array<std::vector<Route>, 4> counterexamples;

  bool ok() const;
};

GraphLemmaReport verify_graph_lemma();

}  // namespace e6kkr
