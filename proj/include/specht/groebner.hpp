#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "specht/monomial.hpp"
#include "specht/polynomial.hpp"

namespace specht {

/// Monomial ideal kept as its unique minimal generating set, an antichain
/// under divisibility, sorted ascending by exponent vector.
class MonomialIdeal {
 public:
  /// Minimalizes the given generators. An empty list is the zero ideal.
  MonomialIdeal(std::vector<Monomial> generators, int ambient);

  static MonomialIdeal zero(int ambient) { return MonomialIdeal({}, ambient); }

  int ambient() const { return ambient_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  /// Some generator divides m.
  bool contains(const Monomial& m) const;

  std::vector<Polynomial> to_polynomials(const Field& K,
                                         const MonomialOrder& order) const;

  bool operator==(const MonomialIdeal& o) const {
    return ambient_ == o.ambient_ && gens_ == o.gens_;
  }
  bool operator!=(const MonomialIdeal& o) const { return !(*this == o); }

 private:
  std::vector<Monomial> gens_;
  int ambient_;
};

/// Result of the Buchberger-criterion test. When ok is false, (i, j) is the
/// offending pair and remainder its nonzero S-polynomial normal form.
struct GBCheck {
  bool ok;
  std::size_t i = 0;
  std::size_t j = 0;
  std::optional<Polynomial> remainder;
};

/// A certified Groebner basis. Instances exist only through buchberger()
/// (reduced) or certify() (as given). Elements are nonzero and monic;
/// reduced bases are sorted descending by leading monomial.
class GroebnerBasis {
 public:
  /// Checks the Buchberger criterion on the (monic-normalized) elements and
  /// wraps them; throws DomainError when the check fails.
  static GroebnerBasis certify(std::vector<Polynomial> elements,
                               const MonomialOrder& order);

  const std::vector<Polynomial>& elements() const { return elements_; }
  const MonomialOrder& order() const { return order_; }
  bool reduced() const { return reduced_; }
  std::size_t size() const { return elements_.size(); }

  std::vector<Monomial> leading_monomials() const;

  bool operator==(const GroebnerBasis& o) const {
    return reduced_ == o.reduced_ && order_ == o.order_ &&
           elements_ == o.elements_;
  }

 private:
  friend GroebnerBasis buchberger(const std::vector<Polynomial>&,
                                  const MonomialOrder&, int);
  GroebnerBasis(std::vector<Polynomial> elements, MonomialOrder order,
                bool reduced)
      : elements_(std::move(elements)),
        order_(std::move(order)),
        reduced_(reduced) {}

  std::vector<Polynomial> elements_;
  MonomialOrder order_;
  bool reduced_;
};

/// Finitely generated ideal with a lazily cached reduced Groebner basis.
/// Zero generators are dropped; an empty list is the zero ideal.
class Ideal {
 public:
  Ideal(std::vector<Polynomial> generators, int ambient, const Field& K,
        const MonomialOrder& order);

  int ambient() const { return ambient_; }
  const Field& field() const { return field_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }

  /// Reduced Groebner basis, computed once and cached.
  const GroebnerBasis& groebner(int degree_cap = 30) const;
  bool has_cached_groebner() const { return static_cast<bool>(gb_); }

  /// Membership via normal form against the reduced basis.
  bool contains(const Polynomial& f) const;

 private:
  std::vector<Polynomial> gens_;
  int ambient_;
  Field field_;
  MonomialOrder order_;
  mutable std::shared_ptr<const GroebnerBasis> gb_;
};

/// S(f, g) = (lcm/lt(f))·f − (lcm/lt(g))·g. Throws DomainError on zero input.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

/// Full division-algorithm remainder: no term of the result is divisible by
/// any leading monomial of G. Divisor choice: first match in basis order.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G);

/// Buchberger with the normal selection strategy, the coprime and chain
/// criteria, and monic normalization. Returns the unique reduced basis,
/// elements sorted descending by leading monomial. Throws DegreeCapError if
/// an intermediate element exceeds degree_cap.
GroebnerBasis buchberger(const std::vector<Polynomial>& generators,
                         const MonomialOrder& order, int degree_cap = 30);

/// Buchberger criterion: every S-polynomial of the set reduces to zero.
/// Pairs with coprime leading monomials are skipped (first criterion only).
GBCheck is_groebner_basis(const std::vector<Polynomial>& G,
                          const MonomialOrder& order);

/// Minimal generators of init(I) from a certified basis.
MonomialIdeal initial_ideal(const GroebnerBasis& G);

/// I ∩ J via one auxiliary variable and elimination; each returned generator
/// is verified to lie in both inputs.
Ideal intersect(const Ideal& I, const Ideal& J, int degree_cap = 30);

/// Elimination ideal I ∩ K[x_1..x_keep], computed under the default lex
/// order, returned in ambient keep.
Ideal contract_to_subring(const Ideal& I, int keep, int degree_cap = 30);

/// Image of I under x_n -> 0, returned in ambient n−1.
Ideal quotient_by_linear(const Ideal& I);

/// Equality of ideals via their unique reduced bases.
bool ideal_equal(const Ideal& I, const Ideal& J, int degree_cap = 30);

// JSON round-trips. Ideals serialize as
//   {"ambient":4,"field":"q","order":"lex:x4>x3>x2>x1","generators":[...]};
// a basis adds "leading_monomials" and "reduced".
std::string ideal_to_json_text(const Ideal& I);
Ideal ideal_from_json_text(const std::string& text);
std::string gb_to_json_text(const GroebnerBasis& G, const Field& K);

}  // namespace specht
