#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <variant>

#include "specht/errors.hpp"

namespace specht {

/// Coefficient field descriptor: the rationals (characteristic 0) or a prime
/// field F_p. Primes are restricted to p < 2^31 so residue products fit in
/// 64-bit arithmetic.
class Field {
 public:
  static Field rationals() { return Field(0); }
  static Field prime_field(std::uint64_t p);

  /// Parses the CLI field flag: "q" or "fp:<prime>".
  static Field parse(const std::string& text);

  std::uint64_t characteristic() const { return char_; }
  bool is_rationals() const { return char_ == 0; }
  std::string str() const;

  bool operator==(const Field& o) const { return char_ == o.char_; }
  bool operator!=(const Field& o) const { return char_ != o.char_; }

 private:
  friend class Scalar;
  explicit Field(std::uint64_t c) : char_(c) {}
  std::uint64_t char_;
};

/// Exact field element. Characteristic 0 values are arbitrary-precision
/// rationals kept in lowest terms with positive denominator; characteristic p
/// values are canonical residues in [0, p). Arithmetic between scalars of
/// different fields throws FieldMismatchError.
class Scalar {
 public:
  static Scalar zero(const Field& K) { return of_int(0, K); }
  static Scalar one(const Field& K) { return of_int(1, K); }
  static Scalar of_int(long v, const Field& K);
  static Scalar of_integer(const mpz_class& v, const Field& K);
  static Scalar of_rational(mpq_class q);
  static Scalar of_residue(std::uint64_t v, std::uint64_t p);

  Field field() const;
  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar inverse() const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Canonical text form: "3", "-1/2" over Q; the residue over F_p.
  std::string str() const;

  const mpq_class& rational_value() const;
  std::uint64_t residue_value() const;

 private:
  struct Residue {
    std::uint64_t v;
    std::uint64_t p;
  };
  explicit Scalar(mpq_class q) : rep_(std::move(q)) {}
  explicit Scalar(Residue r) : rep_(r) {}

  const Residue& check_same_prime(const Scalar& o) const;

  std::variant<mpq_class, Residue> rep_;
};

/// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

}  // namespace specht
