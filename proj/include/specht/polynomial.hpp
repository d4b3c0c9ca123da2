#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "specht/field.hpp"
#include "specht/monomial.hpp"

namespace specht {

/// Sparse multivariate polynomial over an exact field. Terms are kept in
/// strictly descending order of the active monomial order, so the leading
/// term is terms().front(). No zero coefficients are stored; two equal
/// polynomials have identical term sequences.
class Polynomial {
 public:
  struct Term {
    Monomial mono;
    Scalar coeff;
  };

  /// The zero polynomial.
  Polynomial(int ambient, Field K, MonomialOrder order);

  static Polynomial zero(int ambient, const Field& K,
                         const MonomialOrder& order);
  static Polynomial constant(const Scalar& c, int ambient,
                             const MonomialOrder& order);
  static Polynomial term(const Scalar& c, const Monomial& m,
                         const MonomialOrder& order);
  static Polynomial variable(int i, int ambient, const Field& K,
                             const MonomialOrder& order);
  /// Canonicalizes an arbitrary term list: combines equal monomials, drops
  /// zeros, sorts descending.
  static Polynomial from_terms(std::vector<Term> terms, int ambient,
                               const Field& K, const MonomialOrder& order);
  /// Fast path for internal callers: terms must already be strictly
  /// descending under the order with nonzero coefficients.
  static Polynomial from_sorted_terms(std::vector<Term> terms, int ambient,
                                      const Field& K,
                                      const MonomialOrder& order);

  int ambient() const { return ambient_; }
  const Field& field() const { return field_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Term>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  /// Order-maximal term; throws DomainError on the zero polynomial.
  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().mono; }
  const Scalar& leading_coefficient() const { return leading_term().coeff; }

  /// Maximal total degree over all terms; -1 for the zero polynomial.
  int degree() const;
  /// The common degree of all terms, or nullopt if inhomogeneous
  /// (zero counts as homogeneous of degree -1... it returns -1).
  std::optional<int> homogeneous_degree() const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scalar_mul(const Scalar& c) const;
  /// this * c * m in one pass; order is preserved by multiplicativity.
  Polynomial term_mul(const Scalar& c, const Monomial& m) const;
  /// Leading coefficient scaled to 1; zero stays zero.
  Polynomial monic() const;

  Scalar evaluate(const std::vector<Scalar>& point) const;

  /// Re-sorts the same terms under a different order (same ambient).
  Polynomial with_order(const MonomialOrder& order) const;
  /// Embeds into a larger ambient (new variables get exponent zero).
  Polynomial extended_to(int ambient, const MonomialOrder& order) const;
  /// Drops trailing variables k+1..n; every term must avoid them.
  Polynomial restricted_to(int ambient, const MonomialOrder& order) const;
  /// Substitutes 0 for variable i (1-based): drops the terms containing it.
  Polynomial substitute_zero(int i) const;

  /// Mathematical equality (term sets compared; orders may differ).
  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  /// Canonical text in the polynomial grammar; round-trips through
  /// parse_polynomial. The zero polynomial prints "0".
  std::string str() const;

 private:
  void check_compatible(const Polynomial& o) const;

  int ambient_;
  Field field_;
  MonomialOrder order_;
  std::vector<Term> terms_;
};

// Free-function spellings.
Polynomial add(const Polynomial& f, const Polynomial& g);
Polynomial mul(const Polynomial& f, const Polynomial& g);
Polynomial negate(const Polynomial& f);
Polynomial scalar_mul(const Scalar& c, const Polynomial& f);
std::pair<Monomial, Scalar> leading_term(const Polynomial& f);
Scalar evaluate(const Polynomial& f, const std::vector<Scalar>& point);

}  // namespace specht
