#include "e6kkr/cartan.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace e6kkr {

namespace {

constexpr CartanMatrix kCartan = {{
    {2, -1, 0, 0, 0, 0},
    {-1, 2, -1, 0, 0, 0},
    {0, -1, 2, -1, 0, -1},
    {0, 0, -1, 2, -1, 0},
    {0, 0, 0, -1, 2, 0},
    {0, 0, -1, 0, 0, 2},
}};

// Minimal exact rational; the system is 6x6 with tiny entries.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n, long long d = 1) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    long long g = std::gcd(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }
  bool is_zero() const { return num == 0; }

  friend Rational operator-(const Rational& a, const Rational& b) {
    return {a.num * b.den - b.num * a.den, a.den * b.den};
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return {a.num * b.num, a.den * b.den};
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    return {a.num * b.den, a.den * b.num};
  }
};

}  // namespace

const CartanMatrix& cartan_matrix() { return kCartan; }

bool is_node(Node a) { return a >= 1 && a <= kRank; }

void require_node(Node a) {
  if (!is_node(a)) {
    throw std::invalid_argument("node out of range 1..6: " + std::to_string(a));
  }
}

int cartan(Node a, Node b) {
  require_node(a);
  require_node(b);
  return kCartan[a - 1][b - 1];
}

bool adjacent(Node a, Node b) { return cartan(a, b) == -1; }

Weight Weight::fundamental(Node a) {
  require_node(a);
  Weight w;
  w[a] = 1;
  return w;
}

bool Weight::is_dominant() const {
  for (int c : coords_) {
    if (c < 0) return false;
  }
  return true;
}

bool Weight::is_zero() const {
  for (int c : coords_) {
    if (c != 0) return false;
  }
  return true;
}

Weight& Weight::operator+=(const Weight& other) {
  for (std::size_t k = 0; k < coords_.size(); ++k) coords_[k] += other.coords_[k];
  return *this;
}

Weight& Weight::operator-=(const Weight& other) {
  for (std::size_t k = 0; k < coords_.size(); ++k) coords_[k] -= other.coords_[k];
  return *this;
}

Weight operator*(int k, Weight x) {
  for (int& c : x.coords_) c *= k;
  return x;
}

std::string Weight::to_string() const {
  std::ostringstream out;
  for (std::size_t k = 0; k < coords_.size(); ++k) {
    if (k) out << ',';
    out << coords_[k];
  }
  return out.str();
}

Weight simple_root_in_weight_coords(Node a) {
  require_node(a);
  return Weight(kCartan[a - 1]);
}

std::optional<ConfigSizes> solve_config_sizes(const Weight& lambda, int length) {
  if (length < 0) throw std::invalid_argument("negative path length");

  // C is symmetric, so sum_a C_ab n_a = rhs_b is just C n = rhs.
  std::array<std::array<Rational, kRank + 1>, kRank> aug;
  for (int r = 0; r < kRank; ++r) {
    for (int c = 0; c < kRank; ++c) aug[r][c] = Rational(kCartan[r][c]);
    aug[r][kRank] = Rational((r == 0 ? length : 0) - lambda[r + 1]);
  }

  for (int col = 0; col < kRank; ++col) {
    int pivot = col;
    while (pivot < kRank && aug[pivot][col].is_zero()) ++pivot;
    if (pivot == kRank) throw std::logic_error("Cartan matrix is singular");
    std::swap(aug[col], aug[pivot]);
    for (int r = 0; r < kRank; ++r) {
      if (r == col || aug[r][col].is_zero()) continue;
      Rational factor = aug[r][col] / aug[col][col];
      for (int c = col; c <= kRank; ++c) aug[r][c] = aug[r][c] - factor * aug[col][c];
    }
  }

  ConfigSizes sizes{};
  for (int r = 0; r < kRank; ++r) {
    Rational value = aug[r][kRank] / aug[r][r];
    if (value.den != 1 || value.num < 0) return std::nullopt;
    sizes[r] = static_cast<int>(value.num);
  }
  return sizes;
}

Weight weight_from_sizes(const ConfigSizes& sizes, int length) {
  Weight w = length * Weight::fundamental(1);
  for (Node a = 1; a <= kRank; ++a) w -= sizes[a - 1] * simple_root_in_weight_coords(a);
  return w;
}

}  // namespace e6kkr
