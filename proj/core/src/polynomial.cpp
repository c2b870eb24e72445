#include "e6kkr/polynomial.hpp"

#include <mutex>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace e6kkr {

LaurentPolynomial LaurentPolynomial::monomial(int exponent, Coefficient coefficient) {
  LaurentPolynomial p;
  p.add_term(exponent, coefficient);
  return p;
}

LaurentPolynomial::Coefficient LaurentPolynomial::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

int LaurentPolynomial::min_exponent() const {
  if (terms_.empty()) throw std::logic_error("min_exponent of zero polynomial");
  return terms_.begin()->first;
}

int LaurentPolynomial::max_exponent() const {
  if (terms_.empty()) throw std::logic_error("max_exponent of zero polynomial");
  return terms_.rbegin()->first;
}

LaurentPolynomial::Coefficient LaurentPolynomial::at_one() const {
  Coefficient sum = 0;
  for (const auto& [e, c] : terms_) sum += c;
  return sum;
}

bool LaurentPolynomial::has_nonnegative_coefficients() const {
  for (const auto& [e, c] : terms_) {
    if (c < 0) return false;
  }
  return true;
}

void LaurentPolynomial::add_term(int exponent, Coefficient coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPolynomial LaurentPolynomial::shifted(int by) const {
  LaurentPolynomial out;
  for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e + by, c);
  return out;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  LaurentPolynomial out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  }
  return out;
}

std::string LaurentPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    if (e == 0) {
      out << c;
    } else if (c == 1) {
      out << "q^" << e;
    } else {
      out << c << "*q^" << e;
    }
  }
  return out.str();
}

LaurentPolynomial qbinom(int n, int k) {
  if (k < 0 || n < 0 || k > n) return {};
  // Pascal rows: [n,k] = [n-1,k-1] + q^k [n-1,k]. Cached because the
  // fermionic sum asks for the same small binomials over and over.
  static std::mutex mutex;
  static std::vector<std::vector<LaurentPolynomial>> rows{{LaurentPolynomial::constant(1)}};
  std::lock_guard lock(mutex);
  while (static_cast<int>(rows.size()) <= n) {
    const auto& prev = rows.back();
    const int m = static_cast<int>(rows.size());
    std::vector<LaurentPolynomial> row(static_cast<std::size_t>(m) + 1);
    row[0] = LaurentPolynomial::constant(1);
    row[static_cast<std::size_t>(m)] = LaurentPolynomial::constant(1);
    for (int j = 1; j < m; ++j) {
      row[static_cast<std::size_t>(j)] =
          prev[static_cast<std::size_t>(j - 1)] + prev[static_cast<std::size_t>(j)].shifted(j);
    }
    rows.push_back(std::move(row));
  }
  return rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

}  // namespace e6kkr
