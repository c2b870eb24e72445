// Cartan data of type E6 (classical part of E6^(1)) and weight arithmetic.
//
// Nodes follow Kac's labeling: the chain 1-2-3-4-5 with node 6 attached to
// node 3 (node 0, attached to 6, is the affine node and never appears here).
// Weights are stored in fundamental-weight coordinates, so coordinate a is
// the pairing <lambda, alpha_a^vee>.
#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <optional>
#include <string>

namespace e6kkr {

inline constexpr int kRank = 6;

/// Classical Dynkin node index, 1..6.
using Node = int;

using CartanMatrix = std::array<std::array<int, kRank>, kRank>;

/// The 6x6 Cartan matrix, indexed 0-based (entry [a-1][b-1] is C_ab).
const CartanMatrix& cartan_matrix();

/// C_ab for nodes a, b in 1..6. Throws std::invalid_argument otherwise.
int cartan(Node a, Node b);

/// a ~ b, i.e. C_ab == -1.
bool adjacent(Node a, Node b);

bool is_node(Node a);

/// Throws std::invalid_argument unless a is in 1..6.
void require_node(Node a);

class Weight {
 public:
  constexpr Weight() = default;
  constexpr explicit Weight(std::array<int, kRank> coords) : coords_(coords) {}

  /// The fundamental weight Lambda-bar_a.
  static Weight fundamental(Node a);

  /// Coordinate at node a (1-based), i.e. <lambda, alpha_a^vee>.
  int operator[](Node a) const { return coords_[static_cast<std::size_t>(a - 1)]; }
  int& operator[](Node a) { return coords_[static_cast<std::size_t>(a - 1)]; }

  const std::array<int, kRank>& coords() const { return coords_; }

  bool is_dominant() const;
  bool is_zero() const;

  Weight& operator+=(const Weight& other);
  Weight& operator-=(const Weight& other);
  friend Weight operator+(Weight x, const Weight& y) { return x += y; }
  friend Weight operator-(Weight x, const Weight& y) { return x -= y; }
  friend Weight operator*(int k, Weight x);

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;

  /// "l1,l2,l3,l4,l5,l6"
  std::string to_string() const;

 private:
  std::array<int, kRank> coords_{};
};

inline Weight weight_add(const Weight& x, const Weight& y) { return x + y; }
inline Weight weight_sub(const Weight& x, const Weight& y) { return x - y; }
inline bool is_dominant(const Weight& x) { return x.is_dominant(); }

/// alpha_a in fundamental-weight coordinates: row a of the Cartan matrix.
Weight simple_root_in_weight_coords(Node a);

/// Partition sizes |nu^(a)| forced by the configuration constraint
/// sum_a n_a alpha_a = L Lambda-bar_1 - lambda. Solved exactly over the
/// rationals; nullopt when the solution is not a nonnegative integer vector.
using ConfigSizes = std::array<int, kRank>;
std::optional<ConfigSizes> solve_config_sizes(const Weight& lambda, int length);

/// L Lambda-bar_1 - sum_a n_a alpha_a.
Weight weight_from_sizes(const ConfigSizes& sizes, int length);

}  // namespace e6kkr
