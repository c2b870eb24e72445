// Configurations, vacancy numbers, rigged configurations, charge, and the
// fermionic formula M(lambda, L; q) for paths in (B^{1,1})^{(x)L}.
#pragma once

#include <array>
#include <compare>
#include <vector>

#include "e6kkr/cartan.hpp"
#include "e6kkr/polynomial.hpp"

namespace e6kkr {

/// Weakly decreasing positive parts.
using Partition = std::vector<int>;

/// nu^(1), ..., nu^(6), stored 0-based.
using Configuration = std::array<Partition, kRank>;

bool is_partition(const Partition& mu);
int partition_size(const Partition& mu);
int largest_part(const Partition& mu);

/// m_i: number of parts equal to i.
int multiplicity(const Partition& mu, int i);

/// Q_i(mu) = sum_j min(mu_j, i), the area in the first i columns.
int q_i(const Partition& mu, int i);

/// p_i^(a) = L delta_{a1} - 2 Q_i^(a) + sum_{b~a} Q_i^(b) for i >= 1; p_0 = 0.
int vacancy(const Configuration& nu, int length, Node a, int i);

/// Vacancy numbers of one configuration, tabulated up to the point where
/// they become constant.
class VacancyTable {
 public:
  VacancyTable(const Configuration& nu, int length);

  /// p_i^(a) for any i >= 0.
  int at(Node a, int i) const;

  /// Largest part over all six partitions; p is constant for i >= this.
  int max_part() const { return max_part_; }

 private:
  int max_part_ = 0;
  std::array<std::vector<int>, kRank> table_;
};

/// L Lambda-bar_1 - sum_a |nu^(a)| alpha_a.
Weight config_weight(const Configuration& nu, int length);

/// Sizes match the configuration constraint for (lambda, L) and
/// p_i^(a) >= 0 wherever m_i^(a) > 0 (which implies it for every i).
bool is_admissible_config(const Configuration& nu, const Weight& lambda, int length);

/// The quadratic form with the L-term, evaluated from multiplicities.
int charge_direct(const Configuration& nu, int length);

/// -1/2 (sum p_i^(a) m_i^(a) + L * #rows(nu^(1))).
int charge_via_vacancy(const Configuration& nu, int length);

inline int charge(const Configuration& nu, int length) { return charge_direct(nu, length); }

/// Second-difference identity, convexity where m_i = 0, p_i^(a) = lambda_a
/// past the largest part, and nonnegativity at every i. Returns false on the
/// first identity that fails.
bool vacancy_identities_hold(const Configuration& nu, int length);

struct Row {
  int length = 0;
  int rigging = 0;

  friend bool operator==(const Row&, const Row&) = default;
};

/// Canonical row order: decreasing length, then decreasing rigging.
bool row_precedes(const Row& x, const Row& y);

struct RiggedPartition {
  std::vector<Row> rows;

  void canonicalize();
  Partition shape() const;
  int rigging_total() const;

  friend bool operator==(const RiggedPartition&, const RiggedPartition&) = default;
};

struct RiggedConfiguration {
  int length = 0;
  std::array<RiggedPartition, kRank> parts{};

  RiggedPartition& operator[](Node a) { return parts[static_cast<std::size_t>(a - 1)]; }
  const RiggedPartition& operator[](Node a) const { return parts[static_cast<std::size_t>(a - 1)]; }

  Configuration shape() const;
  Weight weight() const { return config_weight(shape(), length); }
  void canonicalize();

  friend bool operator==(const RiggedConfiguration&, const RiggedConfiguration&) = default;
};

/// Lexicographic order on (L, rows); used to sort enumerations.
bool operator<(const RiggedConfiguration& x, const RiggedConfiguration& y);

/// The empty configuration with path length L.
RiggedConfiguration empty_rc(int length);

/// Dominant weight, admissible shape, and 0 <= rigging <= p at every row.
bool is_valid_rc(const RiggedConfiguration& rc);

int rigging_total(const RiggedConfiguration& rc);

/// c(nu, J) = c(nu) + |J|.
int cc(const RiggedConfiguration& rc);

/// All partitions of n, each weakly decreasing, in reverse lexicographic order.
const std::vector<Partition>& partitions_of(int n);

std::vector<Configuration> enumerate_configs(const Weight& lambda, int length);

/// RC(lambda, L), sorted.
std::vector<RiggedConfiguration> enumerate_rcs(const Weight& lambda, int length,
                                               unsigned jobs = 1);

/// Sum over admissible nu of q^{c(nu)} prod [p + m choose m]_q.
LaurentPolynomial fermionic_M_binomial(const Weight& lambda, int length);

/// Sum over enumerated rigged configurations of q^{c(nu, J)}.
LaurentPolynomial fermionic_M_riggings(const Weight& lambda, int length, unsigned jobs = 1);

/// Both computations; throws std::logic_error if they differ.
LaurentPolynomial fermionic_M(const Weight& lambda, int length, unsigned jobs = 1);

}  // namespace e6kkr
