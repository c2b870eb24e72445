#include "e6kkr/energy.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace e6kkr {

namespace {

constexpr std::size_t kMinusTwoCount = 27;

std::vector<std::pair<Vertex, Vertex>> build_minus_two_pairs() {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  auto add_tail = [&](int left, int from) {
    for (int j = from; j <= kCrystalSize; ++j) pairs.emplace_back(Vertex(left), Vertex(j));
  };
  add_tail(1, 18);
  add_tail(2, 23);
  add_tail(3, 25);
  add_tail(4, 26);
  add_tail(7, 26);
  for (int left : {5, 8, 10, 13, 18}) pairs.emplace_back(Vertex(left), Vertex(27));

  std::sort(pairs.begin(), pairs.end());
  if (pairs.size() != kMinusTwoCount ||
      std::adjacent_find(pairs.begin(), pairs.end()) != pairs.end()) {
    throw std::logic_error("H = -2 list: transcription count mismatch");
  }
  return pairs;
}

using EnergyTable = std::array<std::array<int, kCrystalSize>, kCrystalSize>;

EnergyTable build_table() {
  const CrystalGraph& graph = CrystalGraph::instance();
  EnergyTable table{};
  for (int b = 1; b <= kCrystalSize; ++b) {
    for (int c = 1; c <= kCrystalSize; ++c) {
      table[b - 1][c - 1] = graph.reachable(Vertex(b), Vertex(c)) ? 0 : -1;
    }
  }
  for (const auto& [b, c] : energy_minus_two_pairs()) {
    if (table[b.index()][c.index()] == 0) {
      throw std::logic_error("H = -2 pair is also a reachable pair");
    }
    table[b.index()][c.index()] = -2;
  }
  return table;
}

const EnergyTable& energy_table() {
  static const EnergyTable table = build_table();
  return table;
}

}  // namespace

const std::vector<std::pair<Vertex, Vertex>>& energy_minus_two_pairs() {
  static const auto pairs = build_minus_two_pairs();
  return pairs;
}

int local_H(Vertex b, Vertex c) { return energy_table()[b.index()][c.index()]; }

Path raise_to_highest_weight(Path path) {
  bool moved = true;
  while (moved) {
    moved = false;
    for (Node i = 1; i <= kRank; ++i) {
      if (auto up = e_tensor(path, i)) {
        path = std::move(*up);
        moved = true;
      }
    }
  }
  return path;
}

int local_H_by_component(Vertex b, Vertex c) {
  const Path head = raise_to_highest_weight(Path{b, c});
  if (head == make_path({1, 1})) return 0;
  if (head == make_path({1, 2})) return -1;
  if (head == make_path({1, 18})) return -2;
  throw std::logic_error("unexpected highest weight vector " + path_to_string(head));
}

int energy_D(const Path& path) {
  const int length = static_cast<int>(path.size());
  int total = 0;
  for (int j = 1; j < length; ++j) {
    total += (length - j) * local_H(path[static_cast<std::size_t>(j - 1)],
                                    path[static_cast<std::size_t>(j)]);
  }
  return total;
}

LaurentPolynomial one_dim_sum(const std::vector<Path>& paths) {
  LaurentPolynomial x;
  for (const Path& path : paths) x.add_term(energy_D(path), 1);
  return x;
}

LaurentPolynomial one_dim_sum(const Weight& lambda, int length, unsigned jobs) {
  return one_dim_sum(enumerate_paths(lambda, length, jobs));
}

}  // namespace e6kkr
