#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "specht/groebner.hpp"
#include "specht/specht.hpp"

namespace specht {

/// Dense integer polynomial in t; coefficient i belongs to t^i. Trailing
/// zeros are trimmed, so the zero polynomial stores no coefficients.
class ZPoly {
 public:
  ZPoly() = default;
  explicit ZPoly(std::vector<mpz_class> coeffs);
  static ZPoly one();
  /// t^k.
  static ZPoly monomial(int k);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const mpz_class& coeff(int i) const;
  const std::vector<mpz_class>& coeffs() const { return c_; }

  ZPoly operator+(const ZPoly& o) const;
  ZPoly operator-(const ZPoly& o) const;
  ZPoly operator*(const ZPoly& o) const;

  mpz_class at_one() const;
  ZPoly times_one_minus_t() const;
  /// Exact division by (1−t); throws DomainError unless at_one() == 0.
  ZPoly divided_by_one_minus_t() const;

  bool operator==(const ZPoly& o) const { return c_ == o.c_; }
  bool operator!=(const ZPoly& o) const { return c_ != o.c_; }

  /// "1+2t+t^2"; the zero polynomial prints "0".
  std::string str() const;

 private:
  std::vector<mpz_class> c_;
};

/// Rational form numerator/(1−t)^e, canonical: either e = 0 or the
/// numerator does not vanish at t = 1. The expansion coefficients are the
/// Hilbert function.
class HilbertSeries {
 public:
  /// Canonicalizes by dividing (1−t) out of the numerator.
  HilbertSeries(ZPoly numerator, int denom_exponent);

  static HilbertSeries zero() { return HilbertSeries(ZPoly(), 0); }

  const ZPoly& numerator() const { return num_; }
  int denom_exponent() const { return e_; }
  bool is_zero() const { return num_.is_zero(); }

  HilbertSeries operator+(const HilbertSeries& o) const;
  HilbertSeries operator-(const HilbertSeries& o) const;
  /// this · t^t_power / (1−t)^extra_denom.
  HilbertSeries shifted(int t_power, int extra_denom) const;

  /// First (up_to + 1) power-series coefficients.
  std::vector<mpz_class> expand(int up_to) const;

  bool operator==(const HilbertSeries& o) const {
    return e_ == o.e_ && num_ == o.num_;
  }
  bool operator!=(const HilbertSeries& o) const { return !(*this == o); }

  /// "(1+2t+t^2)/(1-t)^2"; single-term numerators skip the parentheses.
  std::string str() const;
  /// {"denom_exponent":2,"numerator":[1,2,1]}
  std::string json_text() const;
  static HilbertSeries from_json_text(const std::string& text);

 private:
  ZPoly num_;
  int e_;
};

/// Hilbert function values with the eventual-polynomial metadata implied by
/// the series: from degree stable_from on, the function agrees with a
/// polynomial of degree dimension − 1 (identically zero when dimension = 0).
struct HilbertFunction {
  std::vector<mpz_class> values;
  int dimension = 0;
  int stable_from = 0;
};

HilbertFunction hilbert_function(const HilbertSeries& s, int up_to);

/// Hilbert series of R/M by pivot-variable recursion with memoized
/// subproblems: H(M) = H(M + (x)) + t·H(M : x).
HilbertSeries series_from_monomial_ideal(const MonomialIdeal& M);

/// Buchberger, then the initial ideal, then the monomial-ideal series.
HilbertSeries series_of_quotient(const Ideal& I, int degree_cap = 30);

/// Closed form for R/I^Sp_(n−d,d): numerator
/// 1 + sum C(n−d+i−1, i) t^i (i < d) + C(n−1, d−2) t^d over (1−t)^d.
/// d = 1 returns 1/(1−t). Requires n − d >= d >= 1.
HilbertSeries closed_form_two_row(int n, int d);

/// Closed form for R/I^Sp_(d,d,1), n = 2d+1: numerator coefficients
/// h_i = C(d+i−1, i) for 0 <= i <= d+1 over (1−t)^{d+1}. Requires d >= 1.
HilbertSeries closed_form_hook(int d);

enum class SeriesMode { Closed, Groebner };

/// H(R/I_(n−d,d)) = H(S/I_(n−d−1,d)) + t/(1−t)·H(S/I_(n−d,d−1)),
/// with S in n−1 variables. Requires n − d > d >= 2.
bool recursion_check_two_row(int n, int d, SeriesMode mode);

/// H(R/I_(d,d)) = H(S/I_(d−1,d−1,1)) + t/(1−t)·H(S/I_(d,d−1)), n = 2d >= 4.
bool recursion_check_square(int d, SeriesMode mode);

/// Exactness at the Hilbert-series level of
/// 0 → S/π(I_(d,d,1)) → S/I_(d,d) ⊕ S/m^<d+1> → S/J_(d,d) → 0,
/// plus H(R/I_(d,d,1)) = H(S/π(I_(d,d,1)))/(1−t) from x_n-regularity.
/// All series are computed by the Groebner oracle.
bool ses_check_jdd(int d, int degree_cap = 30);

struct CharIndependenceReport {
  HilbertSeries rational = HilbertSeries::zero();
  std::vector<std::pair<std::uint64_t, bool>> prime_matches;
  bool ok = true;
};

/// Recomputes the quotient series over Q and each F_p and compares exactly.
CharIndependenceReport char_independence_check(
    const std::function<Ideal(const Field&)>& builder,
    const std::vector<std::uint64_t>& primes, int degree_cap = 30);

/// Numerator degree: Castelnuovo–Mumford regularity of a Cohen–Macaulay
/// quotient. The CM hypothesis is the caller's.
int regularity_cm(const HilbertSeries& s);

}  // namespace specht
