#include "e6kkr/rigged.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

#include "e6kkr/parallel.hpp"

namespace e6kkr {

namespace {

std::size_t idx(Node a) { return static_cast<std::size_t>(a - 1); }

// Nodes ordered so that each new partition completes a neighbourhood as
// early as possible: after choosing nu^(a) for a prefix of this order, the
// nodes listed in kReadyAfter[k] have themselves and all neighbours fixed.
constexpr std::array<Node, kRank> kChoiceOrder = {1, 2, 3, 6, 4, 5};
const std::array<std::vector<Node>, kRank> kReadyAfter = {{{}, {1}, {2}, {6}, {3}, {4, 5}}};

bool nonnegative_at_parts(const Configuration& nu, int length, Node a) {
  const Partition& mu = nu[idx(a)];
  for (std::size_t k = 0; k < mu.size(); ++k) {
    if (k > 0 && mu[k] == mu[k - 1]) continue;
    if (vacancy(nu, length, a, mu[k]) < 0) return false;
  }
  return true;
}

// All weakly decreasing sequences of `count` values in [0, bound].
void for_each_box_partition(int count, int bound, std::vector<int>& current,
                            const auto& visit) {
  if (static_cast<int>(current.size()) == count) {
    visit(current);
    return;
  }
  const int top = current.empty() ? bound : current.back();
  for (int value = top; value >= 0; --value) {
    current.push_back(value);
    for_each_box_partition(count, bound, current, visit);
    current.pop_back();
  }
}

struct Block {
  Node node;
  int length;
  int multiplicity;
  int vacancy;
};

std::vector<Block> blocks_of(const Configuration& nu, int length) {
  const VacancyTable p(nu, length);
  std::vector<Block> blocks;
  for (Node a = 1; a <= kRank; ++a) {
    const Partition& mu = nu[idx(a)];
    for (std::size_t k = 0; k < mu.size();) {
      std::size_t end = k;
      while (end < mu.size() && mu[end] == mu[k]) ++end;
      blocks.push_back({a, mu[k], static_cast<int>(end - k), p.at(a, mu[k])});
      k = end;
    }
  }
  return blocks;
}

}  // namespace

bool is_partition(const Partition& mu) {
  for (std::size_t k = 0; k < mu.size(); ++k) {
    if (mu[k] < 1) return false;
    if (k > 0 && mu[k] > mu[k - 1]) return false;
  }
  return true;
}

int partition_size(const Partition& mu) {
  int total = 0;
  for (int part : mu) total += part;
  return total;
}

int largest_part(const Partition& mu) { return mu.empty() ? 0 : mu.front(); }

int multiplicity(const Partition& mu, int i) {
  return static_cast<int>(std::count(mu.begin(), mu.end(), i));
}

int q_i(const Partition& mu, int i) {
  int total = 0;
  for (int part : mu) total += std::min(part, i);
  return total;
}

int vacancy(const Configuration& nu, int length, Node a, int i) {
  require_node(a);
  if (i <= 0) return 0;
  int p = (a == 1 ? length : 0) - 2 * q_i(nu[idx(a)], i);
  for (Node b = 1; b <= kRank; ++b) {
    if (adjacent(a, b)) p += q_i(nu[idx(b)], i);
  }
  return p;
}

VacancyTable::VacancyTable(const Configuration& nu, int length) {
  for (const Partition& mu : nu) max_part_ = std::max(max_part_, largest_part(mu));
  for (Node a = 1; a <= kRank; ++a) {
    auto& row = table_[idx(a)];
    row.resize(static_cast<std::size_t>(max_part_) + 2);
    for (int i = 0; i <= max_part_ + 1; ++i) row[static_cast<std::size_t>(i)] = vacancy(nu, length, a, i);
  }
}

int VacancyTable::at(Node a, int i) const {
  require_node(a);
  if (i <= 0) return 0;
  const auto& row = table_[idx(a)];
  return row[static_cast<std::size_t>(std::min(i, max_part_ + 1))];
}

Weight config_weight(const Configuration& nu, int length) {
  ConfigSizes sizes{};
  for (Node a = 1; a <= kRank; ++a) sizes[idx(a)] = partition_size(nu[idx(a)]);
  return weight_from_sizes(sizes, length);
}

bool is_admissible_config(const Configuration& nu, const Weight& lambda, int length) {
  for (const Partition& mu : nu) {
    if (!is_partition(mu)) return false;
  }
  auto sizes = solve_config_sizes(lambda, length);
  if (!sizes) return false;
  for (Node a = 1; a <= kRank; ++a) {
    if (partition_size(nu[idx(a)]) != (*sizes)[idx(a)]) return false;
  }
  for (Node a = 1; a <= kRank; ++a) {
    if (!nonnegative_at_parts(nu, length, a)) return false;
  }
  return true;
}

int charge_direct(const Configuration& nu, int length) {
  // sum_{a,b} C_ab sum_{rows x in nu^a, y in nu^b} min(x, y)
  int twice_quadratic = 0;
  for (Node a = 1; a <= kRank; ++a) {
    for (Node b = 1; b <= kRank; ++b) {
      const int c = cartan(a, b);
      if (c == 0) continue;
      int pairs = 0;
      for (int x : nu[idx(a)]) {
        for (int y : nu[idx(b)]) pairs += std::min(x, y);
      }
      twice_quadratic += c * pairs;
    }
  }
  if (twice_quadratic % 2 != 0) throw std::logic_error("odd quadratic form");
  return twice_quadratic / 2 - length * static_cast<int>(nu[0].size());
}

int charge_via_vacancy(const Configuration& nu, int length) {
  int sum = length * static_cast<int>(nu[0].size());
  for (Node a = 1; a <= kRank; ++a) {
    for (int part : nu[idx(a)]) sum += vacancy(nu, length, a, part);
  }
  if (sum % 2 != 0) throw std::logic_error("odd vacancy sum in charge");
  return -sum / 2;
}

bool vacancy_identities_hold(const Configuration& nu, int length) {
  const VacancyTable p(nu, length);
  const Weight lambda = config_weight(nu, length);
  const int top = p.max_part() + 1;

  for (Node a = 1; a <= kRank; ++a) {
    const Partition& mu = nu[idx(a)];
    bool nonnegative_at_rows = true;
    for (int i = 1; i <= top; ++i) {
      const int m = multiplicity(mu, i);
      int rhs = (a == 1 && i == 1 ? length : 0) - 2 * m;
      for (Node b = 1; b <= kRank; ++b) {
        if (adjacent(a, b)) rhs += multiplicity(nu[idx(b)], i);
      }
      const int second_difference = -p.at(a, i - 1) + 2 * p.at(a, i) - p.at(a, i + 1);
      if (second_difference != rhs) return false;
      if (m == 0 && 2 * p.at(a, i) < p.at(a, i - 1) + p.at(a, i + 1)) return false;
      if (i >= p.max_part() && p.at(a, i) != lambda[a]) return false;
      if (m > 0 && p.at(a, i) < 0) nonnegative_at_rows = false;
    }
    if (nonnegative_at_rows && lambda.is_dominant()) {
      for (int i = 1; i <= top; ++i) {
        if (p.at(a, i) < 0) return false;
      }
    }
  }
  return true;
}

bool row_precedes(const Row& x, const Row& y) {
  if (x.length != y.length) return x.length > y.length;
  return x.rigging > y.rigging;
}

void RiggedPartition::canonicalize() { std::sort(rows.begin(), rows.end(), row_precedes); }

Partition RiggedPartition::shape() const {
  Partition mu;
  mu.reserve(rows.size());
  for (const Row& row : rows) mu.push_back(row.length);
  std::sort(mu.begin(), mu.end(), std::greater<>());
  return mu;
}

int RiggedPartition::rigging_total() const {
  int total = 0;
  for (const Row& row : rows) total += row.rigging;
  return total;
}

Configuration RiggedConfiguration::shape() const {
  Configuration nu;
  for (std::size_t k = 0; k < parts.size(); ++k) nu[k] = parts[k].shape();
  return nu;
}

void RiggedConfiguration::canonicalize() {
  for (RiggedPartition& part : parts) part.canonicalize();
}

bool operator<(const RiggedConfiguration& x, const RiggedConfiguration& y) {
  if (x.length != y.length) return x.length < y.length;
  for (std::size_t k = 0; k < x.parts.size(); ++k) {
    const auto& rx = x.parts[k].rows;
    const auto& ry = y.parts[k].rows;
    auto key = [](const Row& r) { return std::pair(r.length, r.rigging); };
    auto less = [&](const Row& a, const Row& b) { return key(a) < key(b); };
    if (std::lexicographical_compare(rx.begin(), rx.end(), ry.begin(), ry.end(), less)) return true;
    if (std::lexicographical_compare(ry.begin(), ry.end(), rx.begin(), rx.end(), less)) return false;
  }
  return false;
}

RiggedConfiguration empty_rc(int length) {
  RiggedConfiguration rc;
  rc.length = length;
  return rc;
}

bool is_valid_rc(const RiggedConfiguration& rc) {
  if (rc.length < 0) return false;
  for (const RiggedPartition& part : rc.parts) {
    for (const Row& row : part.rows) {
      if (row.length < 1) return false;
    }
  }
  const Configuration nu = rc.shape();
  const Weight lambda = config_weight(nu, rc.length);
  if (!lambda.is_dominant() || !is_admissible_config(nu, lambda, rc.length)) return false;
  const VacancyTable p(nu, rc.length);
  for (Node a = 1; a <= kRank; ++a) {
    for (const Row& row : rc[a].rows) {
      if (row.rigging < 0 || row.rigging > p.at(a, row.length)) return false;
    }
  }
  return true;
}

int rigging_total(const RiggedConfiguration& rc) {
  int total = 0;
  for (const RiggedPartition& part : rc.parts) total += part.rigging_total();
  return total;
}

int cc(const RiggedConfiguration& rc) { return charge(rc.shape(), rc.length) + rigging_total(rc); }

const std::vector<Partition>& partitions_of(int n) {
  static std::mutex mutex;
  static std::map<int, std::vector<Partition>> cache;
  if (n < 0) throw std::invalid_argument("partitions of a negative integer");
  std::lock_guard lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  std::vector<Partition> out;
  Partition current;
  auto build = [&](auto& self, int remaining, int cap) -> void {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (int part = std::min(remaining, cap); part >= 1; --part) {
      current.push_back(part);
      self(self, remaining - part, part);
      current.pop_back();
    }
  };
  build(build, n, n);
  return cache.emplace(n, std::move(out)).first->second;
}

std::vector<Configuration> enumerate_configs(const Weight& lambda, int length) {
  std::vector<Configuration> out;
  if (!lambda.is_dominant() || length < 0) return out;
  const auto sizes = solve_config_sizes(lambda, length);
  if (!sizes) return out;

  Configuration nu;
  auto choose = [&](auto& self, std::size_t step) -> void {
    if (step == kChoiceOrder.size()) {
      out.push_back(nu);
      return;
    }
    const Node a = kChoiceOrder[step];
    for (const Partition& mu : partitions_of((*sizes)[idx(a)])) {
      nu[idx(a)] = mu;
      bool ok = true;
      for (Node ready : kReadyAfter[step]) {
        if (!nonnegative_at_parts(nu, length, ready)) {
          ok = false;
          break;
        }
      }
      if (ok) self(self, step + 1);
    }
    nu[idx(a)].clear();
  };
  choose(choose, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<RiggedConfiguration> enumerate_rcs(const Weight& lambda, int length, unsigned jobs) {
  const std::vector<Configuration> configs = enumerate_configs(lambda, length);
  std::vector<std::vector<RiggedConfiguration>> partial(configs.size());

  parallel_for(configs.size(), jobs, [&](std::size_t k) {
    const std::vector<Block> blocks = blocks_of(configs[k], length);
    RiggedConfiguration rc = empty_rc(length);
    auto fill = [&](auto& self, std::size_t b) -> void {
      if (b == blocks.size()) {
        RiggedConfiguration out = rc;
        out.canonicalize();
        partial[k].push_back(std::move(out));
        return;
      }
      const Block& block = blocks[b];
      auto& rows = rc[block.node].rows;
      std::vector<int> riggings;
      for_each_box_partition(block.multiplicity, block.vacancy, riggings, [&](const std::vector<int>& js) {
        for (int j : js) rows.push_back({block.length, j});
        self(self, b + 1);
        rows.resize(rows.size() - js.size());
      });
    };
    fill(fill, 0);
  });

  std::vector<RiggedConfiguration> out;
  for (auto& chunk : partial) {
    out.insert(out.end(), std::make_move_iterator(chunk.begin()), std::make_move_iterator(chunk.end()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

LaurentPolynomial fermionic_M_binomial(const Weight& lambda, int length) {
  LaurentPolynomial total;
  for (const Configuration& nu : enumerate_configs(lambda, length)) {
    LaurentPolynomial term = LaurentPolynomial::monomial(charge(nu, length));
    for (const Block& block : blocks_of(nu, length)) {
      term *= qbinom(block.vacancy + block.multiplicity, block.multiplicity);
    }
    total += term;
  }
  return total;
}

LaurentPolynomial fermionic_M_riggings(const Weight& lambda, int length, unsigned jobs) {
  LaurentPolynomial total;
  for (const RiggedConfiguration& rc : enumerate_rcs(lambda, length, jobs)) total.add_term(cc(rc), 1);
  return total;
}

LaurentPolynomial fermionic_M(const Weight& lambda, int length, unsigned jobs) {
  LaurentPolynomial by_binomials = fermionic_M_binomial(lambda, length);
  LaurentPolynomial by_riggings = fermionic_M_riggings(lambda, length, jobs);
  if (by_binomials != by_riggings) {
    throw std::logic_error("fermionic formula mismatch for weight " + lambda.to_string() + ": " +
                           by_binomials.to_string() + " vs " + by_riggings.to_string());
  }
  return by_binomials;
}

}  // namespace e6kkr
