#include "e6kkr/tensor.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "e6kkr/parallel.hpp"

namespace e6kkr {

namespace {

struct StringLengths {
  int eps = 0;
  int phi = 0;
};

// (eps_i, phi_i) of every prefix b_1 (x) ... (x) b_{k+1}.
std::vector<StringLengths> prefix_lengths(const Path& path, Node i) {
  const CrystalGraph& graph = CrystalGraph::instance();
  std::vector<StringLengths> out;
  out.reserve(path.size());
  StringLengths acc;
  for (std::size_t k = 0; k < path.size(); ++k) {
    const int eb = graph.eps(path[k], i);
    const int pb = graph.phi(path[k], i);
    if (k == 0) {
      acc = {eb, pb};
    } else {
      acc = {acc.eps + std::max(0, eb - acc.phi), pb + std::max(0, acc.phi - eb)};
    }
    out.push_back(acc);
  }
  return out;
}

}  // namespace

Path make_path(std::initializer_list<int> ids) {
  Path path;
  path.reserve(ids.size());
  for (int id : ids) path.emplace_back(id);
  return path;
}

std::optional<Path> e_tensor(const Path& path, Node i) {
  require_node(i);
  if (path.empty()) return std::nullopt;
  const CrystalGraph& graph = CrystalGraph::instance();
  const auto prefix = prefix_lengths(path, i);
  std::size_t k = path.size() - 1;
  while (k > 0 && prefix[k - 1].phi >= graph.eps(path[k], i)) --k;
  auto raised = graph.e(path[k], i);
  if (!raised) return std::nullopt;
  Path out = path;
  out[k] = *raised;
  return out;
}

std::optional<Path> f_tensor(const Path& path, Node i) {
  require_node(i);
  if (path.empty()) return std::nullopt;
  const CrystalGraph& graph = CrystalGraph::instance();
  const auto prefix = prefix_lengths(path, i);
  std::size_t k = path.size() - 1;
  while (k > 0 && prefix[k - 1].phi > graph.eps(path[k], i)) --k;
  auto lowered = graph.f(path[k], i);
  if (!lowered) return std::nullopt;
  Path out = path;
  out[k] = *lowered;
  return out;
}

int eps_tensor(const Path& path, Node i) {
  require_node(i);
  return path.empty() ? 0 : prefix_lengths(path, i).back().eps;
}

int phi_tensor(const Path& path, Node i) {
  require_node(i);
  return path.empty() ? 0 : prefix_lengths(path, i).back().phi;
}

Weight wt_path(const Path& path) {
  const CrystalGraph& graph = CrystalGraph::instance();
  Weight total;
  for (Vertex b : path) total += graph.wt(b);
  return total;
}

bool is_highest_weight(const Path& path) {
  for (Node i = 1; i <= kRank; ++i) {
    if (eps_tensor(path, i) != 0) return false;
  }
  return true;
}

bool is_classically_restricted(const Path& path, const Weight& lambda) {
  return wt_path(path) == lambda && is_highest_weight(path);
}

std::map<Weight, std::vector<Path>> enumerate_all_hw(int length, unsigned jobs) {
  const CrystalGraph& graph = CrystalGraph::instance();
  std::map<Weight, std::vector<Path>> level;
  if (length < 0) return level;
  level[Weight{}].push_back(Path{});

  for (int step = 0; step < length; ++step) {
    std::vector<const std::pair<const Weight, std::vector<Path>>*> classes;
    classes.reserve(level.size());
    for (const auto& entry : level) classes.push_back(&entry);

    // b extends a highest-weight path of weight mu iff eps_i(b) <= mu_i for all i.
    std::vector<std::map<Weight, std::vector<Path>>> partial(classes.size());
    parallel_for(classes.size(), jobs, [&](std::size_t k) {
      const auto& [mu, paths] = *classes[k];
      auto& out = partial[k];
      for (int id = 1; id <= kCrystalSize; ++id) {
        const Vertex b(id);
        bool admissible = true;
        for (Node i = 1; i <= kRank && admissible; ++i) admissible = graph.eps(b, i) <= mu[i];
        if (!admissible) continue;
        auto& bucket = out[mu + graph.wt(b)];
        for (const Path& p : paths) {
          Path q = p;
          q.push_back(b);
          bucket.push_back(std::move(q));
        }
      }
    });

    std::map<Weight, std::vector<Path>> next;
    for (auto& part : partial) {
      for (auto& [weight, paths] : part) {
        auto& bucket = next[weight];
        bucket.insert(bucket.end(), std::make_move_iterator(paths.begin()),
                      std::make_move_iterator(paths.end()));
      }
    }
    for (auto& [weight, paths] : next) std::sort(paths.begin(), paths.end());
    level = std::move(next);
  }
  return level;
}

std::vector<Path> enumerate_paths(const Weight& lambda, int length, unsigned jobs) {
  if (!lambda.is_dominant() || length < 0) return {};
  auto all = enumerate_all_hw(length, jobs);
  auto it = all.find(lambda);
  if (it == all.end()) return {};
  return std::move(it->second);
}

std::string path_to_string(const Path& path) {
  std::ostringstream out;
  for (std::size_t k = 0; k < path.size(); ++k) {
    if (k) out << ' ';
    out << path[k].id();
  }
  return out.str();
}

}  // namespace e6kkr
