#pragma once

#include <string>
#include <vector>

#include "specht/errors.hpp"

namespace specht {

/// Power product x_1^{a_1} ... x_n^{a_n}, stored as a dense exponent vector
/// (ambient n is small at desk scale). Total degree is cached.
class Monomial {
 public:
  explicit Monomial(std::vector<int> exponents);
  static Monomial one(int ambient);
  static Monomial variable(int i, int ambient);  // 1-based index

  int ambient() const { return static_cast<int>(exps_.size()); }
  int degree() const { return degree_; }
  int exponent(int i) const;  // 1-based
  const std::vector<int>& exponents() const { return exps_; }

  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  /// Exact quotient; pre: o.divides(*this).
  Monomial operator/(const Monomial& o) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);
  bool coprime(const Monomial& o) const;

  /// Variables with positive exponent, 1-based, ascending.
  std::vector<int> support() const;
  int support_size() const;
  bool is_squarefree() const;
  /// Variables with exponent >= 2, 1-based, ascending.
  std::vector<int> deep_support() const;

  bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
  bool operator!=(const Monomial& o) const { return exps_ != o.exps_; }
  /// Plain exponent-vector comparison; used only for canonical containers,
  /// not as a monomial order.
  bool operator<(const Monomial& o) const { return exps_ < o.exps_; }

  std::string str() const;  // "x1*x3^2", "1" for the empty product

 private:
  std::vector<int> exps_;
  int degree_;
};

/// Total multiplicative monomial order. Only lexicographic orders are
/// provided; the priority list gives the variables from most to least
/// significant. The default order is lex with x_n > x_{n-1} > ... > x_1.
/// Graded orders are a documented extension point, not implemented.
class MonomialOrder {
 public:
  static MonomialOrder default_lex(int ambient);
  static MonomialOrder lex(std::vector<int> priority);

  int ambient() const { return static_cast<int>(priority_.size()); }
  const std::vector<int>& priority() const { return priority_; }

  /// -1 if a < b, 0 if equal, +1 if a > b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const {
    return compare(a, b) < 0;
  }
  bool greater(const Monomial& a, const Monomial& b) const {
    return compare(a, b) > 0;
  }

  bool operator==(const MonomialOrder& o) const {
    return priority_ == o.priority_;
  }
  bool operator!=(const MonomialOrder& o) const {
    return priority_ != o.priority_;
  }

  std::string str() const;  // "lex:x4>x3>x2>x1"

 private:
  explicit MonomialOrder(std::vector<int> priority)
      : priority_(std::move(priority)) {}
  std::vector<int> priority_;
};

}  // namespace specht
