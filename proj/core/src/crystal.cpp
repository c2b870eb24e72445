#include "e6kkr/crystal.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace e6kkr {

namespace {

struct RawEdge {
  int source;
  int color;
  int sink;
};

// Classical arrows of B^{1,1}; b --i--> b' means f_i b = b'.
constexpr std::array<RawEdge, 36> kEdges = {{
    {1, 1, 2},    {2, 2, 3},    {3, 3, 4},    {4, 4, 5},    {4, 6, 7},
    {5, 5, 6},    {5, 6, 8},    {6, 6, 9},    {7, 4, 8},    {8, 5, 9},
    {8, 3, 10},   {9, 3, 11},   {10, 5, 11},  {10, 2, 13},  {11, 4, 12},
    {11, 2, 14},  {12, 2, 15},  {13, 5, 14},  {13, 1, 18},  {14, 4, 15},
    {14, 1, 19},  {15, 3, 16},  {15, 1, 20},  {16, 6, 17},  {16, 1, 21},
    {17, 1, 22},  {18, 5, 19},  {19, 4, 20},  {20, 3, 21},  {21, 6, 22},
    {21, 2, 23},  {22, 2, 24},  {23, 6, 24},  {24, 3, 25},  {25, 4, 26},
    {26, 5, 27},
}};

constexpr std::size_t kEdgeCount = 36;

void fail(const std::string& what) { throw std::logic_error("crystal graph: " + what); }

}  // namespace

Vertex::Vertex(int id) : id_(static_cast<std::uint8_t>(id)) {
  if (id < 1 || id > kCrystalSize) {
    throw std::invalid_argument("crystal vertex out of range 1..27: " + std::to_string(id));
  }
}

std::vector<Node> Route::colors() const {
  std::vector<Node> out;
  out.reserve(edges.size());
  for (const Edge& edge : edges) out.push_back(edge.color);
  return out;
}

bool Route::is_consecutive() const {
  for (std::size_t k = 1; k < edges.size(); ++k) {
    if (edges[k - 1].sink != edges[k].source) return false;
  }
  return true;
}

std::string Route::to_string() const {
  if (edges.empty()) return "()";
  std::ostringstream out;
  out << edges.front().source.id();
  for (const Edge& edge : edges) out << " -" << edge.color << "-> " << edge.sink.id();
  return out.str();
}

const CrystalGraph& CrystalGraph::instance() {
  static const CrystalGraph graph = [] {
    CrystalGraph g;
    g.validate();
    return g;
  }();
  return graph;
}

CrystalGraph::CrystalGraph() {
  edges_.reserve(kEdges.size());
  for (const RawEdge& raw : kEdges) {
    Edge edge{Vertex(raw.source), raw.color, Vertex(raw.sink)};
    require_node(edge.color);
    auto& down = down_[edge.source.index()][static_cast<std::size_t>(edge.color - 1)];
    auto& up = up_[edge.sink.index()][static_cast<std::size_t>(edge.color - 1)];
    if (down != 0 || up != 0) fail("color class is not a matching at edge " + std::to_string(raw.source));
    down = static_cast<std::uint8_t>(raw.sink);
    up = static_cast<std::uint8_t>(raw.source);
    edges_.push_back(edge);
  }
  std::sort(edges_.begin(), edges_.end());

  for (int id = 1; id <= kCrystalSize; ++id) {
    Vertex b(id);
    Weight w;
    for (Node i = 1; i <= kRank; ++i) w[i] = phi(b, i) - eps(b, i);
    weights_[b.index()] = w;
  }

  // Transitive closure; ids increase along every arrow, so one backward sweep suffices.
  for (int id = kCrystalSize; id >= 1; --id) {
    auto& row = reach_[static_cast<std::size_t>(id - 1)];
    row.set(static_cast<std::size_t>(id - 1));
    for (Node i = 1; i <= kRank; ++i) {
      int next = down_[static_cast<std::size_t>(id - 1)][static_cast<std::size_t>(i - 1)];
      if (next == 0) continue;
      if (next <= id) fail("arrow does not increase vertex id");
      row |= reach_[static_cast<std::size_t>(next - 1)];
    }
  }
}

std::optional<Vertex> CrystalGraph::f(Vertex b, Node i) const {
  require_node(i);
  int next = down_[b.index()][static_cast<std::size_t>(i - 1)];
  if (next == 0) return std::nullopt;
  return Vertex(next);
}

std::optional<Vertex> CrystalGraph::e(Vertex b, Node i) const {
  require_node(i);
  int prev = up_[b.index()][static_cast<std::size_t>(i - 1)];
  if (prev == 0) return std::nullopt;
  return Vertex(prev);
}

int CrystalGraph::phi(Vertex b, Node i) const {
  int k = 0;
  for (std::optional<Vertex> cur = f(b, i); cur; cur = f(*cur, i)) ++k;
  return k;
}

int CrystalGraph::eps(Vertex b, Node i) const {
  int k = 0;
  for (std::optional<Vertex> cur = e(b, i); cur; cur = e(*cur, i)) ++k;
  return k;
}

std::vector<Edge> CrystalGraph::out_edges(Vertex b) const {
  std::vector<Edge> out;
  for (Node i = 1; i <= kRank; ++i) {
    if (auto next = f(b, i)) out.push_back({b, i, *next});
  }
  return out;
}

std::vector<Edge> CrystalGraph::in_edges(Vertex b) const {
  std::vector<Edge> out;
  for (Node i = 1; i <= kRank; ++i) {
    if (auto prev = e(b, i)) out.push_back({*prev, i, b});
  }
  return out;
}

void CrystalGraph::validate() const {
  if (edges_.size() != kEdgeCount) fail("unexpected edge count");

  Weight total;
  int sources = 0;
  int sinks = 0;
  for (int id = 1; id <= kCrystalSize; ++id) {
    Vertex b(id);
    bool has_in = !in_edges(b).empty();
    bool has_out = !out_edges(b).empty();
    if (!has_in) {
      ++sources;
      if (id != 1) fail("vertex without incoming arrow other than 1");
    }
    if (!has_out) {
      ++sinks;
      if (id != kCrystalSize) fail("vertex without outgoing arrow other than 27");
    }
    for (Node i = 1; i <= kRank; ++i) {
      if (phi(b, i) > 1 || eps(b, i) > 1) fail("string of length > 1");
      if (auto next = f(b, i)) {
        if (e(*next, i) != b) fail("e does not invert f");
        if (wt(*next) != wt(b) - simple_root_in_weight_coords(i)) fail("weight not lowered by alpha_i");
      }
    }
    total += wt(b);
  }
  if (sources != 1 || sinks != 1) fail("source/sink not unique");
  if (!total.is_zero()) fail("weights do not sum to zero");

  // Connected: everything is reachable from the unique source.
  if (!reach_[0].all()) fail("graph is not connected");
}

std::vector<Route> enumerate_routes() {
  const CrystalGraph& graph = CrystalGraph::instance();
  std::vector<Route> routes;
  Route current;

  auto extend = [&](auto& self, Vertex at) -> void {
    for (const Edge& edge : graph.out_edges(at)) {
      current.edges.push_back(edge);
      routes.push_back(current);
      self(self, edge.sink);
      current.edges.pop_back();
    }
  };
  for (int id = 1; id <= kCrystalSize; ++id) extend(extend, Vertex(id));
  return routes;
}

std::optional<bool> check_lemma_item1(const Route& route) {
  const std::size_t l = route.size();
  if (l < 2) return std::nullopt;
  const Node a = route.edges.front().color;
  if (route.edges.back().color != a) return std::nullopt;
  for (std::size_t k = 1; k + 1 < l; ++k) {
    if (route.edges[k].color == a) return std::nullopt;
  }
  int neighbours = 0;
  for (const Edge& edge : route.edges) {
    if (adjacent(edge.color, a)) ++neighbours;
  }
  return neighbours == 2;
}

std::optional<bool> check_lemma_item2(const Route& route) {
  if (route.empty() || route.edges.front().source != Vertex(1)) return std::nullopt;
  const Node last = route.edges.back().color;
  int sum = 0;
  for (std::size_t k = 0; k + 1 < route.size(); ++k) sum += cartan(route.edges[k].color, last);
  return sum == (last == 1 ? 1 : 0) - 1;
}

std::optional<bool> check_lemma_item3(const Route& route) {
  if (route.size() != 2) return std::nullopt;
  const Node a = route.edges[0].color;
  const Node b = route.edges[1].color;
  if (adjacent(a, b)) return std::nullopt;
  const CrystalGraph& graph = CrystalGraph::instance();
  auto mid = graph.f(route.edges[0].source, b);
  if (!mid) return false;
  auto end = graph.f(*mid, a);
  return end && *end == route.edges[1].sink;
}

std::optional<bool> check_lemma_item4(const Route& route) {
  const std::size_t l = route.size();
  if (l < 2) return std::nullopt;
  const Node last = route.edges.back().color;
  if (!adjacent(route.edges.front().color, last)) return std::nullopt;
  for (std::size_t k = 1; k + 1 < l; ++k) {
    if (adjacent(route.edges[k].color, last)) return std::nullopt;
  }
  const CrystalGraph& graph = CrystalGraph::instance();
  for (std::size_t k = 1; k + 1 < l; ++k) {
    if (!graph.f(route.edges[k].source, last)) return false;
  }
  return true;
}

bool GraphLemmaReport::ok() const {
  return std::all_of(counterexamples.begin(), counterexamples.end(),
                     [](const auto& list) { return list.empty(); });
}

GraphLemmaReport verify_graph_lemma() {
  using Check = std::optional<bool> (*)(const Route&);
  constexpr std::array<Check, 4> checks = {&check_lemma_item1, &check_lemma_item2,
                                           &check_lemma_item3, &check_lemma_item4};
  GraphLemmaReport report;
  for (const Route& route : enumerate_routes()) {
    ++report.routes;
    for (std::size_t item = 0; item < checks.size(); ++item) {
      std::optional<bool> verdict = checks[item](route);
      if (!verdict) continue;
      ++report.applicable[item];
      if (!*verdict) report.counterexamples[item].push_back(route);
    }
  }
  return report;
}

}  // namespace e6kkr
