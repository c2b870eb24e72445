#include "e6kkr/bijection.hpp"

#include <algorithm>
#include <optional>

namespace e6kkr {

namespace {

std::size_t idx(Node a) { return static_cast<std::size_t>(a - 1); }

using UsedRows = std::array<std::vector<bool>, kRank>;

UsedRows fresh_used(const RiggedConfiguration& rc) {
  UsedRows used;
  for (Node a = 1; a <= kRank; ++a) used[idx(a)].assign(rc[a].rows.size(), false);
  return used;
}

struct Candidate {
  Edge edge;
  int length;
  int row;  // -1: the empty length-0 row (inverse walk only)
};

// Shortest unused singular row of nu^(a) with length >= floor.
std::optional<Candidate> shortest_singular(const RiggedConfiguration& rc, const VacancyTable& p,
                                           const UsedRows& used, const Edge& edge, int floor) {
  const auto& rows = rc[edge.color].rows;
  std::optional<Candidate> best;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const Row& row = rows[r];
    if (used[idx(edge.color)][r] || row.length < floor) continue;
    if (row.rigging != p.at(edge.color, row.length)) continue;
    if (!best || row.length < best->length) best = Candidate{edge, row.length, static_cast<int>(r)};
  }
  return best;
}

// Longest unused singular row of nu^(a) with length <= ceiling, else the
// length-0 row.
Candidate longest_singular(const RiggedConfiguration& rc, const VacancyTable& p,
                           const UsedRows& used, const Edge& edge, int ceiling) {
  const auto& rows = rc[edge.color].rows;
  Candidate best{edge, 0, -1};
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const Row& row = rows[r];
    if (used[idx(edge.color)][r] || row.length > ceiling) continue;
    if (row.rigging != p.at(edge.color, row.length)) continue;
    if (row.length > best.length) best = Candidate{edge, row.length, static_cast<int>(r)};
  }
  return best;
}

struct DeltaWalk {
  DeltaRecord record;
  UsedRows used;
  Vertex at{1};
  int floor = 1;
};

DeltaResult finish_delta(const RiggedConfiguration& rc, const DeltaWalk& walk) {
  DeltaResult result;
  result.b = walk.at;
  result.record = walk.record;
  result.record.end = walk.at;
  result.record.first_column_before = static_cast<int>(rc[1].rows.size());

  RiggedConfiguration out = empty_rc(rc.length - 1);
  std::array<std::vector<bool>, kRank> shrunk;
  for (Node a = 1; a <= kRank; ++a) {
    const auto& rows = rc[a].rows;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      Row row = rows[r];
      const bool selected = walk.used[idx(a)][r];
      if (selected) --row.length;
      if (row.length == 0) continue;
      out[a].rows.push_back(row);
      shrunk[idx(a)].push_back(selected);
    }
  }
  const VacancyTable p_new(out.shape(), out.length);
  for (Node a = 1; a <= kRank; ++a) {
    auto& rows = out[a].rows;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (shrunk[idx(a)][r]) rows[r].rigging = p_new.at(a, rows[r].length);
    }
  }
  out.canonicalize();
  result.record.first_column_after = static_cast<int>(out[1].rows.size());
  result.rc = std::move(out);
  return result;
}

void run_delta(const RiggedConfiguration& rc, const VacancyTable& p, DeltaWalk walk,
               bool explore, std::vector<DeltaResult>& results) {
  const CrystalGraph& graph = CrystalGraph::instance();
  while (true) {
    std::vector<Candidate> options;
    for (const Edge& edge : graph.out_edges(walk.at)) {
      if (auto c = shortest_singular(rc, p, walk.used, edge, walk.floor)) options.push_back(*c);
    }
    if (options.empty()) break;

    // out_edges is color-ordered, so a stable sort leaves the smaller color first on ties.
    std::stable_sort(options.begin(), options.end(),
                     [](const Candidate& x, const Candidate& y) { return x.length < y.length; });
    const bool tie = options.size() > 1 && options[0].length == options[1].length;
    if (tie) {
      ++walk.record.ties;
      if (explore) {
        DeltaWalk other = walk;
        const Candidate& c = options[1];
        other.used[idx(c.edge.color)][static_cast<std::size_t>(c.row)] = true;
        other.record.route.edges.push_back(c.edge);
        other.record.selections.push_back({c.edge.color, c.length, c.row});
        other.floor = c.length;
        other.at = c.edge.sink;
        run_delta(rc, p, std::move(other), explore, results);
      }
    }
    const Candidate& c = options[0];
    walk.used[idx(c.edge.color)][static_cast<std::size_t>(c.row)] = true;
    walk.record.route.edges.push_back(c.edge);
    walk.record.selections.push_back({c.edge.color, c.length, c.row});
    walk.floor = c.length;
    walk.at = c.edge.sink;
  }
  results.push_back(finish_delta(rc, walk));
}

std::vector<DeltaResult> delta_impl(const RiggedConfiguration& rc, bool explore) {
  if (rc.length <= 0) throw std::invalid_argument("delta needs a path length of at least 1");
  const VacancyTable p(rc.shape(), rc.length);
  DeltaWalk walk;
  walk.used = fresh_used(rc);
  std::vector<DeltaResult> results;
  run_delta(rc, p, std::move(walk), explore, results);
  // The tie branch is pushed first; report the default branch first.
  std::reverse(results.begin(), results.end());
  return results;
}

struct InverseWalk {
  DeltaInvTrace trace;
  UsedRows used;
  std::array<int, kRank> new_rows{};
  Vertex at{1};
  int ceiling = kInfiniteLength;
};

DeltaInvTrace finish_inverse(const RiggedConfiguration& small, const InverseWalk& walk) {
  RiggedConfiguration out = empty_rc(small.length + 1);
  std::array<std::vector<bool>, kRank> grown;
  for (Node a = 1; a <= kRank; ++a) {
    const auto& rows = small[a].rows;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      Row row = rows[r];
      const bool selected = walk.used[idx(a)][r];
      if (selected) ++row.length;
      out[a].rows.push_back(row);
      grown[idx(a)].push_back(selected);
    }
    for (int k = 0; k < walk.new_rows[idx(a)]; ++k) {
      out[a].rows.push_back({1, 0});
      grown[idx(a)].push_back(true);
    }
  }
  const VacancyTable p_new(out.shape(), out.length);
  for (Node a = 1; a <= kRank; ++a) {
    auto& rows = out[a].rows;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (grown[idx(a)][r]) rows[r].rigging = p_new.at(a, rows[r].length);
    }
  }
  out.canonicalize();

  DeltaInvTrace trace = walk.trace;
  std::reverse(trace.route.edges.begin(), trace.route.edges.end());
  trace.rc = std::move(out);
  return trace;
}

void run_inverse(const RiggedConfiguration& small, const VacancyTable& p, InverseWalk walk,
                 bool explore, std::vector<DeltaInvTrace>& results) {
  const CrystalGraph& graph = CrystalGraph::instance();
  auto take = [](InverseWalk& w, const Candidate& c) {
    if (c.row >= 0) {
      w.used[idx(c.edge.color)][static_cast<std::size_t>(c.row)] = true;
    } else {
      ++w.new_rows[idx(c.edge.color)];
    }
    w.trace.route.edges.push_back(c.edge);
    w.trace.lengths.push_back(c.length);
    w.ceiling = c.length;
    w.at = c.edge.source;
  };

  while (walk.at != Vertex(1)) {
    std::vector<Candidate> options;
    for (const Edge& edge : graph.in_edges(walk.at)) {
      options.push_back(longest_singular(small, p, walk.used, edge, walk.ceiling));
    }
    std::stable_sort(options.begin(), options.end(),
                     [](const Candidate& x, const Candidate& y) { return x.length > y.length; });
    const bool tie = options.size() > 1 && options[0].length == options[1].length;
    if (tie) {
      ++walk.trace.ties;
      if (explore) {
        InverseWalk other = walk;
        take(other, options[1]);
        run_inverse(small, p, std::move(other), explore, results);
      }
    }
    take(walk, options[0]);
  }
  results.push_back(finish_inverse(small, walk));
}

std::vector<DeltaInvTrace> inverse_impl(const RiggedConfiguration& small, Vertex b, bool explore) {
  const VacancyTable p(small.shape(), small.length);
  InverseWalk walk;
  walk.used = fresh_used(small);
  walk.at = b;
  std::vector<DeltaInvTrace> results;
  run_inverse(small, p, std::move(walk), explore, results);
  std::reverse(results.begin(), results.end());

  for (const DeltaInvTrace& trace : results) {
    bool ok = is_valid_rc(trace.rc);
    if (ok) {
      const DeltaResult back = delta(trace.rc);
      ok = back.b == b && back.rc == small;
    }
    if (!ok) {
      throw InvalidPairError("vertex " + std::to_string(b.id()) +
                             " cannot be appended to this rigged configuration");
    }
  }
  return results;
}

}  // namespace

int DeltaRecord::length_of(Node a, int k) const {
  int seen = 0;
  for (const Selection& s : selections) {
    if (s.color == a && ++seen == k) return s.length;
  }
  return kInfiniteLength;
}

int DeltaRecord::count_of(Node a) const {
  return static_cast<int>(std::count_if(selections.begin(), selections.end(),
                                        [a](const Selection& s) { return s.color == a; }));
}

DeltaResult delta(const RiggedConfiguration& rc) { return delta_impl(rc, false).front(); }

Vertex gamma(const RiggedConfiguration& rc) { return delta(rc).b; }

std::vector<DeltaResult> delta_all_branches(const RiggedConfiguration& rc) {
  return delta_impl(rc, true);
}

RiggedConfiguration delta_inv(const RiggedConfiguration& rc_small, Vertex b) {
  return inverse_impl(rc_small, b, false).front().rc;
}

DeltaInvTrace delta_inv_traced(const RiggedConfiguration& rc_small, Vertex b) {
  return inverse_impl(rc_small, b, false).front();
}

std::vector<DeltaInvTrace> delta_inv_all_branches(const RiggedConfiguration& rc_small, Vertex b) {
  return inverse_impl(rc_small, b, true);
}

Path phi(const RiggedConfiguration& rc) {
  Path path(static_cast<std::size_t>(std::max(rc.length, 0)));
  RiggedConfiguration current = rc;
  for (std::size_t k = path.size(); k > 0; --k) {
    DeltaResult step = delta(current);
    path[k - 1] = step.b;
    current = std::move(step.rc);
  }
  return path;
}

RiggedConfiguration phi_inv(const Path& path) {
  RiggedConfiguration rc = empty_rc(0);
  for (Vertex b : path) rc = delta_inv(rc, b);
  return rc;
}

int VacancyChangeProfile::at(Node a, int i) const {
  const auto& list = segments[idx(a)];
  for (const Segment& s : list) {
    if (s.begin <= i && i < s.end) return s.change;
  }
  return 0;
}

VacancyChangeProfile vacancy_change_oracle(const DeltaRecord& record) {
  // A breakpoint is l_k^(a), or the min/max of two of them.
  struct Ref {
    Node a;
    int k;
  };
  enum class Kind { single, min, max };
  struct Breakpoint {
    Kind kind;
    Ref x;
    Ref y;
  };
  struct Cell {
    Breakpoint start;
    int change;
  };
  auto one = [](Node a, int k) { return Breakpoint{Kind::single, {a, k}, {a, k}}; };
  auto lo = [](Node a, int k, Node b, int m) { return Breakpoint{Kind::min, {a, k}, {b, m}}; };
  auto hi = [](Node a, int k, Node b, int m) { return Breakpoint{Kind::max, {a, k}, {b, m}}; };

  // Each table starts at i = 1; these are the cells after the first one.
  struct Table {
    int first;
    std::vector<Cell> cells;
  };
  const std::array<Table, kRank> tables = {{
      {-1, {{one(1, 1), +1}, {one(2, 1), 0}, {one(2, 2), -1}, {one(1, 2), +1}, {one(2, 3), 0}}},
      {0,
       {{one(1, 1), -1}, {one(2, 1), +1}, {one(3, 1), 0}, {one(3, 2), -1}, {one(2, 2), +1},
        {lo(1, 2, 3, 3), 0}, {hi(1, 2, 3, 3), -1}, {one(2, 3), +1}, {one(3, 4), 0}}},
      {0,
       {{one(2, 1), -1}, {one(3, 1), +1}, {lo(4, 1, 6, 1), 0}, {hi(4, 1, 6, 1), -1},
        {one(3, 2), +1}, {lo(2, 2, 4, 2), 0}, {hi(2, 2, 4, 2), -1}, {one(3, 3), +1},
        {lo(6, 2, 2, 3), 0}, {hi(6, 2, 2, 3), -1}, {one(3, 4), +1}, {one(4, 3), 0}}},
      {0,
       {{one(3, 1), -1}, {one(4, 1), +1}, {lo(5, 1, 3, 2), 0}, {hi(5, 1, 3, 2), -1},
        {one(4, 2), +1}, {one(3, 3), 0}, {one(3, 4), -1}, {one(4, 3), +1}, {one(5, 2), 0}}},
      {0, {{one(4, 1), -1}, {one(5, 1), +1}, {one(4, 2), 0}, {one(4, 3), -1}, {one(5, 2), +1}}},
      {0,
       {{one(3, 1), -1}, {one(6, 1), +1}, {one(3, 2), 0}, {one(3, 3), -1}, {one(6, 2), +1},
        {one(3, 4), 0}}},
  }};

  auto value = [&](const Breakpoint& bp) {
    const int x = record.length_of(bp.x.a, bp.x.k);
    const int y = record.length_of(bp.y.a, bp.y.k);
    switch (bp.kind) {
      case Kind::min:
        return std::min(x, y);
      case Kind::max:
        return std::max(x, y);
      case Kind::single:
        break;
    }
    return x;
  };

  VacancyChangeProfile profile;
  for (Node a = 1; a <= kRank; ++a) {
    const Table& table = tables[idx(a)];
    std::vector<int> starts{1};
    std::vector<int> changes{table.first};
    for (const Cell& cell : table.cells) {
      starts.push_back(value(cell.start));
      changes.push_back(cell.change);
    }
    auto& segs = profile.segments[idx(a)];
    for (std::size_t k = 0; k < starts.size(); ++k) {
      const int end = k + 1 < starts.size() ? starts[k + 1] : kInfiniteLength;
      if (end < starts[k]) profile.ordered = false;
      segs.push_back({starts[k], end, changes[k]});
    }
  }
  return profile;
}

int vacancy_change_closed_form(const DeltaRecord& record, Node a, int i) {
  int change = a == 1 ? -1 : 0;
  for (const Selection& s : record.selections) {
    if (s.length > i) continue;
    if (s.color == a) change += 2;
    else if (adjacent(s.color, a)) change -= 1;
  }
  return change;
}

}  // namespace e6kkr
