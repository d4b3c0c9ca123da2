#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "specht/errors.hpp"
#include "specht/field.hpp"
#include "specht/monomial.hpp"
#include "specht/parse.hpp"
#include "specht/polynomial.hpp"

using namespace specht;

namespace {

/// Uniform small polynomial over K: up to `terms` terms of degree <= 3.
Polynomial random_poly(std::mt19937_64& rng, int n, const Field& K,
                       const MonomialOrder& order, int terms = 4) {
  std::vector<Polynomial::Term> ts;
  for (int t = 0; t < terms; ++t) {
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    int deg = static_cast<int>(rng() % 4);
    for (int i = 0; i < deg; ++i)
      ++e[static_cast<std::size_t>(rng() % static_cast<std::uint64_t>(n))];
    long c = static_cast<long>(rng() % 7) - 3;
    ts.push_back({Monomial(std::move(e)), Scalar::of_int(c, K)});
  }
  return Polynomial::from_terms(std::move(ts), n, K, order);
}

}  // namespace

TEST_SUITE("algebra") {

TEST_CASE("rational scalar arithmetic") {
  Field Q = Field::rationals();
  Scalar half = Scalar::of_rational(mpq_class(1, 2));
  Scalar third = Scalar::of_rational(mpq_class(1, 3));
  CHECK((half + third).str() == "5/6");
  CHECK((half * third).str() == "1/6");
  CHECK((half - half).is_zero());
  CHECK(half.inverse().str() == "2");
  CHECK(Scalar::of_int(-4, Q).str() == "-4");
  CHECK_THROWS_AS(Scalar::zero(Q).inverse(), Error);
}

TEST_CASE("prime field scalar arithmetic") {
  Field F5 = Field::prime_field(5);
  Scalar a = Scalar::of_int(-1, F5);
  CHECK(a.str() == "4");
  CHECK((a + Scalar::of_int(2, F5)).str() == "1");
  CHECK(Scalar::of_int(3, F5).inverse().str() == "2");  // 3*2 = 6 = 1
  CHECK(Scalar::of_int(10, F5).is_zero());

  Field Q = Field::rationals();
  CHECK_THROWS_AS(Scalar::of_int(1, Q) + Scalar::of_int(1, F5),
                  FieldMismatchError);
}

TEST_CASE("field descriptors") {
  CHECK(Field::parse("q") == Field::rationals());
  CHECK(Field::parse("fp:5") == Field::prime_field(5));
  CHECK(Field::parse("fp:2147483647").str() == "fp:2147483647");
  CHECK(Field::rationals().str() == "q");
  CHECK_THROWS_AS(Field::parse("fp:4"), Error);  // composite
  CHECK_THROWS_AS(Field::parse("fp:561"), Error);  // Carmichael composite
  CHECK_THROWS_AS(Field::parse("r"), Error);
  CHECK_THROWS_AS(Field::parse("fp:"), Error);
}

TEST_CASE("monomial arithmetic and queries") {
  Monomial a = Monomial::variable(1, 4) * Monomial::variable(3, 4) *
               Monomial::variable(3, 4);
  CHECK(a.str() == "x1*x3^2");
  CHECK(a.degree() == 3);
  CHECK(a.support() == std::vector<int>{1, 3});
  CHECK(a.deep_support() == std::vector<int>{3});
  CHECK_FALSE(a.is_squarefree());
  CHECK(Monomial::one(4).str() == "1");

  Monomial b = Monomial::variable(3, 4);
  CHECK(b.divides(a));
  CHECK_FALSE(a.divides(b));
  CHECK((a / b).str() == "x1*x3");
  CHECK(Monomial::lcm(a, Monomial::variable(2, 4)).str() == "x1*x2*x3^2");
  CHECK(a.coprime(Monomial::variable(2, 4)));
  CHECK_FALSE(a.coprime(b));
  CHECK_THROWS_AS(b / a, Error);
  CHECK_THROWS_AS(Monomial::variable(5, 4), Error);
}

TEST_CASE("lex order with priority") {
  MonomialOrder lex = MonomialOrder::default_lex(4);
  CHECK(lex.str() == "lex:x4>x3>x2>x1");
  Monomial x2x4 = Monomial::variable(2, 4) * Monomial::variable(4, 4);
  Monomial x3sq = Monomial::variable(3, 4) * Monomial::variable(3, 4);
  CHECK(lex.greater(x2x4, x3sq));  // x4-exponent decides
  CHECK(lex.less(Monomial::variable(1, 4), Monomial::variable(2, 4)));
  CHECK(lex.compare(x2x4, x2x4) == 0);

  MonomialOrder first_var_heavy = MonomialOrder::lex({1, 2, 3});
  CHECK(first_var_heavy.greater(Monomial::variable(1, 3),
                                Monomial::variable(3, 3)));
  CHECK_THROWS_AS(MonomialOrder::lex({1, 1, 2}), Error);
  CHECK_THROWS_AS(MonomialOrder::lex({1, 3}), Error);
}

TEST_CASE("polynomial arithmetic hand values") {
  const int n = 4;
  Field Q = Field::rationals();
  MonomialOrder lex = MonomialOrder::default_lex(n);
  Polynomial f = parse_polynomial("(x1-x2)*(x1+x2)", n, Q);
  CHECK(f.str() == "-x2^2 + x1^2");
  Polynomial g = parse_polynomial("(x1-x2)*(x3-x4)", n, Q);
  CHECK(g.str() == "x2*x4 - x1*x4 - x2*x3 + x1*x3");
  CHECK((g - g).is_zero());
  CHECK((g + (-g)).is_zero());
  CHECK(g.leading_monomial().str() == "x2*x4");
  CHECK(g.leading_coefficient().str() == "1");
  CHECK(g.homogeneous_degree() == 2);
  CHECK(parse_polynomial("x1 + x2^2", n, Q).homogeneous_degree() ==
        std::optional<int>());
  CHECK(Polynomial::zero(n, Q, lex).degree() == -1);
}

TEST_CASE("leading term matches the lex rule") {
  const int n = 4;
  Field Q = Field::rationals();
  Polynomial f = parse_polynomial("x1*x4^2 - 2*x2*x3^2", n, Q);
  CHECK(f.leading_monomial().str() == "x1*x4^2");
  CHECK(parse_polynomial("x1", n, Q).leading_monomial().str() == "x1");
  CHECK_THROWS_AS(Polynomial::zero(n, Q, MonomialOrder::default_lex(n))
                      .leading_term(),
                  Error);
}

TEST_CASE("evaluation") {
  const int n = 4;
  Field Q = Field::rationals();
  Polynomial f = parse_polynomial("x1*x3 - x2*x3", n, Q);
  std::vector<Scalar> pt = {Scalar::of_int(1, Q), Scalar::of_int(2, Q),
                            Scalar::of_int(3, Q), Scalar::of_int(4, Q)};
  CHECK(f.evaluate(pt).str() == "-3");
  Polynomial diff = parse_polynomial("x1 - x2", n, Q);
  std::vector<Scalar> equal(4, Scalar::of_int(7, Q));
  CHECK(diff.evaluate(equal).is_zero());
  CHECK_THROWS_AS(f.evaluate({Scalar::of_int(1, Q)}), Error);
}

TEST_CASE("monic, scalar_mul, term_mul") {
  const int n = 3;
  Field Q = Field::rationals();
  Polynomial f = parse_polynomial("2*x2 - 4*x1", n, Q);
  CHECK(f.monic().str() == "x2 - 2*x1");
  CHECK(f.scalar_mul(Scalar::of_rational(mpq_class(1, 2))).str() ==
        "x2 - 2*x1");
  Polynomial shifted = f.term_mul(Scalar::one(Q), Monomial::variable(3, 3));
  CHECK(shifted.str() == "2*x2*x3 - 4*x1*x3");
}

TEST_CASE("ambient embedding and restriction") {
  Field Q = Field::rationals();
  Polynomial f = parse_polynomial("x1*x2", 2, Q);
  Polynomial g = f.extended_to(4, MonomialOrder::default_lex(4));
  CHECK(g.ambient() == 4);
  CHECK(g.restricted_to(2, MonomialOrder::default_lex(2)) == f);
  Polynomial h = parse_polynomial("x3 - x1", 3, Q);
  CHECK_THROWS_AS(h.restricted_to(2, MonomialOrder::default_lex(2)), Error);
  CHECK(h.substitute_zero(3).str() == "-x1");
  CHECK(h.substitute_zero(2) == h);
}

TEST_CASE("order change re-sorts terms") {
  Field Q = Field::rationals();
  Polynomial f = parse_polynomial("x1 + x3", 3, Q);
  CHECK(f.leading_monomial().str() == "x3");
  Polynomial g = f.with_order(MonomialOrder::lex({1, 2, 3}));
  CHECK(g.leading_monomial().str() == "x1");
  CHECK(g.terms().size() == 2);
}

TEST_CASE("string forms") {
  Field Q = Field::rationals();
  CHECK(parse_polynomial("0", 2, Q).str() == "0");
  CHECK(parse_polynomial("3", 2, Q).str() == "3");
  CHECK(parse_polynomial("-x1 + 2", 2, Q).str() == "-x1 + 2");
  CHECK(parse_polynomial("x2 - x1", 2, Q).str() == "x2 - x1");
  CHECK(parse_polynomial("x1*x1*x1", 2, Q).str() == "x1^3");
  Field F2 = Field::prime_field(2);
  CHECK(parse_polynomial("x1 - x2", 2, F2).str() == "x2 + x1");
}

TEST_CASE("parser grammar and errors") {
  Field Q = Field::rationals();
  CHECK(parse_polynomial("x1^2*x3 - 2", 3, Q).str() == "x1^2*x3 - 2");
  CHECK(parse_polynomial(" ( x1 - x2 ) * ( x1 + x2 ) ", 2, Q).str() ==
        "-x2^2 + x1^2");
  CHECK(parse_polynomial("-(x1)", 1, Q).str() == "-x1");
  CHECK(parse_polynomial("x1^0", 1, Q).str() == "1");
  CHECK(parse_polynomial("(x1+1)^3", 1, Q).str() ==
        "x1^3 + 3*x1^2 + 3*x1 + 1");

  CHECK_THROWS_AS(parse_polynomial("x5", 4, Q), ParseError);   // out of range
  CHECK_THROWS_AS(parse_polynomial("x0", 4, Q), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x1 x2", 4, Q), ParseError);  // implicit *
  CHECK_THROWS_AS(parse_polynomial("x1 - - 2", 4, Q), ParseError);
  CHECK_THROWS_AS(parse_polynomial("(x1", 4, Q), ParseError);
  CHECK_THROWS_AS(parse_polynomial("", 4, Q), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x1 + @", 4, Q), ParseError);
}

TEST_CASE("round trip parse(str(f)) == f, rationals and F_7") {
  std::mt19937_64 rng(12345);
  for (const Field& K : {Field::rationals(), Field::prime_field(7)}) {
    MonomialOrder lex = MonomialOrder::default_lex(4);
    for (int i = 0; i < 25; ++i) {
      Polynomial f = random_poly(rng, 4, K, lex);
      CHECK(parse_polynomial(f.str(), 4, K) == f);
    }
  }
}

TEST_CASE("ring identities on random inputs") {
  std::mt19937_64 rng(99);
  Field Q = Field::rationals();
  MonomialOrder lex = MonomialOrder::default_lex(3);
  for (int i = 0; i < 20; ++i) {
    Polynomial a = random_poly(rng, 3, Q, lex);
    Polynomial b = random_poly(rng, 3, Q, lex);
    Polynomial c = random_poly(rng, 3, Q, lex);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    if (!a.is_zero() && !b.is_zero()) {
      CHECK((a * b).leading_monomial() ==
            a.leading_monomial() * b.leading_monomial());
    }
  }
}

TEST_CASE("F_p arithmetic is mod-p of rational arithmetic") {
  std::mt19937_64 rng(7);
  Field Q = Field::rationals();
  Field F5 = Field::prime_field(5);
  MonomialOrder lex = MonomialOrder::default_lex(3);
  for (int i = 0; i < 10; ++i) {
    // Integer-coefficient polynomials: reduction commutes with products.
    Polynomial a = random_poly(rng, 3, Q, lex);
    Polynomial b = random_poly(rng, 3, Q, lex);
    Polynomial ab = a * b;
    Polynomial am = parse_polynomial(a.str(), 3, F5);
    Polynomial bm = parse_polynomial(b.str(), 3, F5);
    CHECK(parse_polynomial(ab.str(), 3, F5) == am * bm);
  }
}

TEST_CASE("big integer literals reduce into prime fields") {
  Field F7 = Field::prime_field(7);
  // 10^20 = 3^20 = 3^2 = 2 mod 7, so the literal is 5.
  CHECK(parse_polynomial("100000000000000000003", 1, F7).str() == "5");
}

}  // TEST_SUITE
